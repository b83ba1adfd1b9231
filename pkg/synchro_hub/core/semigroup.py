from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from synchro_hub.core.exceptions import CapExceededError, InputFormatError
from synchro_hub.core.models import Automaton, Word

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Transformation:
    """
    Отображение состояний; None - образ не определен.
    """

    images: Tuple[Optional[int], ...]

    def then(self, other: "Transformation") -> "Transformation":
        """
        Сначала self, затем other (умножение справа).
        """
        img = other.images
        return Transformation(tuple(None if x is None else img[x] for x in self.images))

    @property
    def rank(self) -> int:
        return len({x for x in self.images if x is not None})

    def is_constant(self) -> bool:
        return self.rank == 1


@dataclass(frozen=True)
class SemigroupTable:
    """
    Элементы в порядке: образующие по буквам, затем в ширину по длине
    слова, внутри длины лексикографически.
    cells[i][j] - номер произведения элемента i на образующую j.
    """

    elements: Tuple[Transformation, ...]
    words: Tuple[Word, ...]
    cells: Tuple[Tuple[int, ...], ...]
    generators: int

    @property
    def size(self) -> int:
        return len(self.elements)

    def has_constant(self) -> bool:
        return any(e.is_constant() for e in self.elements)


def enumerate_semigroup(a: Automaton, cap: int = 1_000_000) -> SemigroupTable:
    gens = [Transformation(a.columns[x]) for x in range(a.d)]

    index: Dict[Transformation, int] = {}
    elements: List[Transformation] = []
    words: List[Word] = []
    for x, g in enumerate(gens):
        if g not in index:
            index[g] = len(elements)
            elements.append(g)
            words.append((x,))

    cells: List[Tuple[int, ...]] = []
    i = 0
    while i < len(elements):
        t = elements[i]
        row: List[int] = []
        for x, g in enumerate(gens):
            u = t.then(g)
            j = index.get(u)
            if j is None:
                if len(elements) >= cap:
                    raise CapExceededError("размер полугруппы", cap)
                j = len(elements)
                index[u] = j
                elements.append(u)
                words.append(words[i] + (x,))
            row.append(j)
        cells.append(tuple(row))
        i += 1

    logger.debug(f"semigroup: n={a.n} d={a.d} size={len(elements)}")
    return SemigroupTable(
        elements=tuple(elements),
        words=tuple(words),
        cells=tuple(cells),
        generators=a.d,
    )


def render_semigroup(t: SemigroupTable) -> str:
    lines = [f"{t.size} {t.generators}"]
    lines.extend(" ".join(str(j) for j in row) for row in t.cells)
    return "\n".join(lines)


def parse_semigroup(text: str) -> Tuple[int, int, Tuple[Tuple[int, ...], ...]]:
    """
    Читает таблицу render_semigroup: (размер, число образующих, ячейки).
    """
    lines = [ln.split() for ln in text.strip().splitlines() if ln.strip()]
    if not lines or len(lines[0]) != 2:
        raise InputFormatError("Первая строка: размер и число образующих")
    size, gens = int(lines[0][0]), int(lines[0][1])
    rows = tuple(tuple(int(x) for x in ln) for ln in lines[1:])
    if len(rows) != size or any(len(r) != gens for r in rows):
        raise InputFormatError("Размер таблицы не совпадает с заголовком")
    return size, gens, rows
