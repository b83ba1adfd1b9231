# Формат TESTAS: "d n" и затем n*d ячеек таблицы Кэли построчно
from __future__ import annotations

import logging
import re
from typing import Any, Dict, List, Optional

from synchro_hub.core.exceptions import (
    InputFormatError,
    MalformedTokenError,
    NonPositiveHeaderError,
    TargetOutOfRangeError,
    TokenCountMismatchError,
)
from synchro_hub.core.models import Automaton

logger = logging.getLogger(__name__)

EMPTY_CELL = ";"
_INT_RE = re.compile(r"^[+-]?\d+$")


def _parse_int(token: str, position: int) -> int:
    if not _INT_RE.match(token):
        raise MalformedTokenError(token, position)
    return int(token)


def parse_testas(text: str, strict: bool = True) -> Automaton:
    """
    Разбирает текст TESTAS. Токены разделяются любыми пробельными
    символами, ';' обозначает пустую ячейку и должна быть отдельным токеном.

    В нестрогом режиме переходы в вершины за пределами заголовка
    расширяют автомат вершинами без переходов.
    """
    tokens = text.split()
    if len(tokens) < 2:
        raise TokenCountMismatchError(expected=2, actual=len(tokens))

    d = _parse_int(tokens[0], 0)
    n = _parse_int(tokens[1], 1)
    if d < 1 or n < 1:
        raise NonPositiveHeaderError(d=d, n=n)

    cells = tokens[2:]
    if len(cells) != n * d:
        raise TokenCountMismatchError(expected=n * d, actual=len(cells))

    values: List[Optional[int]] = []
    for i, tok in enumerate(cells):
        if tok == EMPTY_CELL:
            values.append(None)
            continue
        v = _parse_int(tok, i + 2)
        if v < 0 or (v >= n and strict):
            raise TargetOutOfRangeError(target=v, n=n, state=i // d, letter=i % d)
        values.append(v)

    size = n
    if not strict:
        size = max([n] + [v + 1 for v in values if v is not None])
        if size > n:
            logger.warning(
                f"Переходы ведут за пределы заголовка n={n}: "
                f"добавлено вершин без переходов: {size - n}"
            )
            values.extend([None] * ((size - n) * d))

    table = tuple(tuple(values[p * d:(p + 1) * d]) for p in range(size))
    return Automaton(n=size, d=d, table=table)


def serialize_testas(a: Automaton) -> str:
    """
    Одна строка: заголовок и ячейки через один пробел, ';' для пустых.
    """
    parts = [str(a.d), str(a.n)]
    for row in a.table:
        parts.extend(EMPTY_CELL if t is None else str(t) for t in row)
    return " ".join(parts)


def automaton_to_dict(a: Automaton) -> Dict[str, Any]:
    """
    JSON-зеркало TESTAS: {n, d, table}, пустые ячейки как null.
    """
    return a.to_dict()


def automaton_from_dict(data: Dict[str, Any]) -> Automaton:
    try:
        return Automaton.from_dict(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputFormatError(f"Некорректный JSON автомата: {exc}") from exc
