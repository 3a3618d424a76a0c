"""
Модуль полуразрешающей процедуры для равенства J = e.

Поиск перебирает произведения сопряжённых соотношений в порядке
суммарной длины. Найденное произведение, приводящееся к J^k с k ≠ 0 по
модулю p, доказывает J = e в группе решений; такое доказательство
оформляется сертификатом, который проверяется независимо от поиска.
"""

from __future__ import annotations

import heapq
import itertools
import json
import logging
from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from linsys.errors import BudgetError, InconsistentVerdictError
from linsys.strict import strict
from solution_group.presentation import Presentation
from solution_group.words import J_ID, Letter, Word, format_letters, parse_word

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CertificateStep:
    """
    Множитель conjugator · r^sign · conjugator⁻¹ произведения.

    Attributes:
        relator (int): номер соотношения в копредставлении, от 0.
        conjugator (Word): сопрягающее слово.
        sign (int): +1 или -1.
    """

    relator: int
    conjugator: Word
    sign: int


@dataclass(frozen=True)
class JTrivialityCertificate:
    """
    Сертификат J = e.

    Attributes:
        steps (tuple[CertificateStep, ...]): множители по порядку.
        power (int): k, к которому приводится произведение J^k.
    """

    steps: tuple[CertificateStep, ...]
    power: int


@dataclass(frozen=True)
class Proved:
    """Найдено доказательство J = e."""

    certificate: JTrivialityCertificate
    nodes: int


@dataclass(frozen=True)
class Inconclusive:
    """Бюджет исчерпан без доказательства."""

    nodes: int
    rounds: int


def replay_certificate(
    pres: Presentation, cert: JTrivialityCertificate
) -> int | None:
    """
    Перемножает множители сертификата и приводит результат.

    Args:
        pres (Presentation): Копредставление.
        cert (JTrivialityCertificate): Сертификат.

    Returns:
        int | None: k, если произведение равно J^k с k ≠ 0, иначе None.
    """
    product = Word.identity(pres.p)
    for step in cert.steps:
        if not 0 <= step.relator < len(pres.relators) or step.sign not in (1, -1):
            return None
        if step.conjugator.p != pres.p:
            return None
        if any(not 0 <= gen <= pres.n for gen, _ in step.conjugator.letters):
            return None
        factor = pres.relators[step.relator].word ** step.sign
        product = product * factor.conjugate(step.conjugator)
    k = product.j_power()
    if k is None or k % pres.p == 0:
        return None
    return k


def check_certificate(pres: Presentation, cert: JTrivialityCertificate) -> bool:
    """Проверяет, что сертификат приводится к указанной степени J."""
    k = replay_certificate(pres, cert)
    return k is not None and k == cert.power % pres.p


def _join(a: tuple[Letter, ...], b: tuple[Letter, ...], p: int) -> tuple[Letter, ...]:
    out = list(a)
    for gen, exp in b:
        if out and out[-1][0] == gen:
            merged = (out.pop()[1] + exp) % p
            if merged:
                out.append((gen, merged))
        else:
            out.append((gen, exp))
    return tuple(out)


def _next_layer(
    layer: list[tuple[Letter, ...]], letters: list[Letter]
) -> Iterator[tuple[Letter, ...]]:
    """Приведённые слова следующей длины в лексикографическом порядке."""
    for word in layer:
        for letter in letters:
            if not word or word[-1][0] != letter[0]:
                yield word + (letter,)


def _conjugated_relators(
    pres: Presentation,
    conjugators: Iterable[tuple[Letter, ...]],
    seen: set[tuple[Letter, ...]],
    limit: int,
) -> tuple[list[tuple[Letter, ...]], list[tuple[tuple[Letter, ...], CertificateStep]]]:
    """
    Сопряжённые соотношения и обратные к ним, ещё не встречавшиеся в seen.

    Перебор сопрягающих слов останавливается, как только новых множителей
    набирается больше limit.

    Returns:
        tuple: Просмотренные сопрягающие слова и новые множители по длине.
    """
    used = []
    fresh: list[tuple[tuple[Letter, ...], CertificateStep]] = []
    for letters in conjugators:
        used.append(letters)
        conj = Word(letters, pres.p)
        for idx, rel in enumerate(pres.relators):
            if not rel.word.letters:
                continue
            for sign in (1, -1):
                product = (rel.word**sign).conjugate(conj).letters
                if product and product not in seen:
                    seen.add(product)
                    fresh.append((product, CertificateStep(idx, conj, sign)))
        if len(fresh) > limit:
            break
    fresh.sort(key=lambda item: len(item[0]))
    return used, fresh


def _is_j_power(word: tuple[Letter, ...]) -> bool:
    return len(word) == 1 and word[0][0] == J_ID


@strict
def prove_j_trivial(pres: Presentation, budget: int) -> Proved | Inconclusive:
    """
    Ищет произведение сопряжённых соотношений, равное J^k, k ≠ 0.

    Раунд d добавляет множители с сопрягающими словами длины d и
    ограничивает длину промежуточных произведений; внутри раунда поиск идёт
    по возрастанию суммарной длины множителей. Найденные произведения и
    множители сохраняются между раундами: уже раскрытое произведение
    домножается только на новые множители, если ни одно его продолжение не
    было отброшено по длине. Бюджет - число рассмотренных произведений
    (умножений узла на множитель), поэтому работа растёт линейно с ним.

    Args:
        pres (Presentation): Копредставление группы решений.
        budget (int): Предельное число узлов поиска.

    Returns:
        Proved | Inconclusive: Сертификат или число израсходованных узлов.

    Raises:
        BudgetError: Если budget не положителен.
        InconsistentVerdictError: Если найденный сертификат не проходит проверку.
    """
    if budget <= 0:
        raise BudgetError("бюджет поиска должен быть положительным")
    p = pres.p
    longest = max((len(rel.word) for rel in pres.relators), default=0)
    letters = [(gen, exp) for gen in pres.generators for exp in range(1, p)]
    moves: list[tuple[tuple[Letter, ...], CertificateStep]] = []
    seen: set[tuple[Letter, ...]] = set()
    layer: list[tuple[Letter, ...]] = [()]
    start: tuple[Letter, ...] = ()
    best = {start: 0}
    parent: dict[tuple[Letter, ...], tuple[tuple[Letter, ...], int]] = {}
    # произведение -> (число применённых множителей, стоимость при раскрытии)
    expanded: dict[tuple[Letter, ...], tuple[int, int]] = {}
    blocked: set[tuple[Letter, ...]] = set()
    nodes = 0
    for depth in itertools.count():
        conjugators = layer if depth == 0 else _next_layer(layer, letters)
        layer, fresh = _conjugated_relators(pres, conjugators, seen, budget - nodes)
        moves += fresh
        if not moves:
            return Inconclusive(nodes, depth)
        if not fresh and not blocked:
            return Inconclusive(nodes, depth + 1)
        cap = (depth + 2) * longest + 2 * depth
        counter = itertools.count()
        heap = [
            (cost, next(counter), word) for word, cost in best.items()
            if word in blocked or expanded.get(word, (0, cost))[0] < len(moves)
        ]
        heapq.heapify(heap)
        while heap:
            cost, _, word = heapq.heappop(heap)
            if cost > best[word]:
                continue
            applied, expanded_cost = expanded.get(word, (0, cost))
            first = 0 if word in blocked or expanded_cost > cost else applied
            if first == len(moves):
                continue
            blocked.discard(word)
            expanded[word] = (len(moves), cost)
            for index in range(first, len(moves)):
                nodes += 1
                if nodes > budget:
                    logger.info("поиск J = e: бюджет %d исчерпан", budget)
                    return Inconclusive(budget, depth + 1)
                move = moves[index][0]
                child = _join(word, move, p)
                if len(child) > cap:
                    blocked.add(word)
                    continue
                child_cost = cost + len(move)
                known = best.get(child)
                if known is not None and known <= child_cost:
                    continue
                best[child] = child_cost
                parent[child] = (word, index)
                if _is_j_power(child):
                    cert = _certificate(child, parent, moves)
                    if not check_certificate(pres, cert):
                        raise InconsistentVerdictError(
                            "найденный сертификат не проходит проверку"
                        )
                    logger.info("J = e доказано: %d множителей, %d узлов",
                                len(cert.steps), nodes)
                    return Proved(cert, nodes)
                heapq.heappush(heap, (child_cost, next(counter), child))
        logger.debug("раунд %d исчерпан, узлов %d, произведений %d",
                     depth, nodes, len(best))
    raise AssertionError("unreachable")


def _certificate(
    target: tuple[Letter, ...],
    parent: dict[tuple[Letter, ...], tuple[tuple[Letter, ...], int]],
    moves: list[tuple[tuple[Letter, ...], CertificateStep]],
) -> JTrivialityCertificate:
    steps = []
    word = target
    while word in parent:
        word, index = parent[word]
        steps.append(moves[index][1])
    return JTrivialityCertificate(tuple(reversed(steps)), target[0][1])


def certificate_to_json(cert: JTrivialityCertificate, pres: Presentation) -> str:
    """
    Записывает сертификат в JSON.

    Номера соотношений в файле начинаются с 1 и совпадают с порядком строк
    текстовой записи копредставления.
    """
    data = {
        "format": "linsys-j-certificate/1",
        "p": pres.p,
        "power": cert.power,
        "steps": [
            {
                "relator": step.relator + 1,
                "conjugator": format_letters(step.conjugator.letters),
                "sign": step.sign,
            }
            for step in cert.steps
        ],
    }
    return json.dumps(data, indent=2) + "\n"


def certificate_from_json(text: str) -> JTrivialityCertificate:
    """Читает сертификат, записанный certificate_to_json."""
    data = json.loads(text)
    p = int(data["p"])
    steps = tuple(
        CertificateStep(
            int(item["relator"]) - 1,
            parse_word(item["conjugator"], p),
            int(item["sign"]),
        )
        for item in data["steps"]
    )
    return JTrivialityCertificate(steps, int(data["power"]))
