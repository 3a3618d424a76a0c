"""
Модуль асинхронной записи артефактов анализа.

Файлы пишутся параллельно через aiofiles и asyncio.gather.
"""

import asyncio
import logging
from pathlib import Path

import aiofiles

logger = logging.getLogger(__name__)


async def save_artifact_async(path: Path, text: str) -> str:
    """
    Асинхронно записывает один файл в кодировке UTF-8.

    Args:
        path (Path): Путь к файлу.
        text (str): Содержимое.

    Returns:
        str: Путь к записанному файлу.
    """
    async with aiofiles.open(path, mode="w", encoding="utf-8", newline="") as f:
        await f.write(text)
    logger.debug("записан %s", path)
    return str(path)


async def save_artifacts_async(out_dir: str | Path, files: dict[str, str]) -> list[str]:
    """
    Асинхронно записывает набор файлов в каталог.

    Args:
        out_dir (str | Path): Каталог; создаётся при отсутствии.
        files (dict[str, str]): Имя файла → содержимое.

    Returns:
        list[str]: Пути записанных файлов в порядке имён.
    """
    directory = Path(out_dir)
    directory.mkdir(parents=True, exist_ok=True)
    names = sorted(files)
    tasks = [save_artifact_async(directory / name, files[name]) for name in names]
    return list(await asyncio.gather(*tasks))


def save_artifacts(out_dir: str | Path | None, files: dict[str, str]) -> list[str]:
    """Синхронная обёртка; без каталога ничего не пишет."""
    if out_dir is None or not files:
        return []
    return asyncio.run(save_artifacts_async(out_dir, files))
