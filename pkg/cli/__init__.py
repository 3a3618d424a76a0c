"""Командная строка и сценарии анализа."""
