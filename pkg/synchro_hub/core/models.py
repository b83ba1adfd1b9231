from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Dict, Iterable, Iterator, List, Optional, Tuple

from synchro_hub.core.exceptions import (
    InputFormatError,
    InvalidLetterError,
    NonUniformOutdegreeError,
    NotCompleteError,
)

#слово: последовательность индексов букв
Word = Tuple[int, ...]


@dataclass(frozen=True)
class StateSet:
    """
    Подмножество состояний как битовая маска (вектор из нулей и единиц).
    """

    n: int
    mask: int
    size: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        if self.mask < 0 or self.mask >> self.n:
            raise ValueError(f"Маска {self.mask:b} вне диапазона 0..{self.n - 1}")
        object.__setattr__(self, "size", self.mask.bit_count())

    @classmethod
    def full(cls, n: int) -> "StateSet":
        return cls(n, (1 << n) - 1)

    @classmethod
    def empty(cls, n: int) -> "StateSet":
        return cls(n, 0)

    @classmethod
    def of(cls, n: int, states: Iterable[int]) -> "StateSet":
        mask = 0
        for s in states:
            mask |= 1 << s
        return cls(n, mask)

    def __len__(self) -> int:
        return self.size

    def __iter__(self) -> Iterator[int]:
        return iter(mask_members(self.mask))

    def __contains__(self, state: object) -> bool:
        return isinstance(state, int) and state >= 0 and bool(self.mask >> state & 1)

    def issubset(self, other: "StateSet") -> bool:
        return self.mask & ~other.mask == 0

    def to_list(self) -> List[int]:
        return mask_members(self.mask)


def mask_members(mask: int) -> List[int]:
    """
    Номера единичных битов маски по возрастанию.
    """
    out: List[int] = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class Automaton:
    """
    Автомат как таблица Кэли: n вершин X d букв.
    Пустая ячейка (None) означает неопределенный переход.
    """

    n: int
    d: int
    table: Tuple[Tuple[Optional[int], ...], ...]

    def __post_init__(self) -> None:
        if self.n < 1 or self.d < 1:
            raise ValueError("Число состояний и размер алфавита должны быть >= 1.")
        if len(self.table) != self.n:
            raise ValueError(f"Ожидалось {self.n} строк таблицы.")
        rows = []
        for p, row in enumerate(self.table):
            row = tuple(row)
            if len(row) != self.d:
                raise ValueError(f"Строка {p} должна содержать {self.d} ячеек.")
            for t in row:
                if t is not None and not (0 <= t < self.n):
                    raise ValueError(f"Переход из {p} ведет вне автомата: {t}.")
            rows.append(row)
        object.__setattr__(self, "table", tuple(rows))

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[Optional[int]]]) -> "Automaton":
        table = tuple(tuple(r) for r in rows)
        return cls(n=len(table), d=len(table[0]) if table else 0, table=table)

    @classmethod
    def from_columns(cls, n: int, columns: Iterable[Iterable[int]]) -> "Automaton":
        """
        Строит автомат по отображениям букв (столбцам таблицы).
        """
        cols = [tuple(c) for c in columns]
        table = tuple(tuple(col[p] for col in cols) for p in range(n))
        return cls(n=n, d=len(cols), table=table)

    @cached_property
    def columns(self) -> Tuple[Tuple[Optional[int], ...], ...]:
        return tuple(
            tuple(self.table[p][letter] for p in range(self.n))
            for letter in range(self.d)
        )

    def target(self, state: int, letter: int) -> Optional[int]:
        return self.table[state][letter]

    def missing_count(self) -> int:
        return sum(1 for row in self.table for t in row if t is None)

    def is_complete(self) -> bool:
        return self.missing_count() == 0

    def require_complete(self) -> None:
        missing = self.missing_count()
        if missing:
            raise NotCompleteError(missing)

    def check_letter(self, letter: int) -> None:
        if not (0 <= letter < self.d):
            raise InvalidLetterError(letter, self.d)

    def full_set(self) -> StateSet:
        return StateSet.full(self.n)

    def image_mask(self, mask: int, letter: int) -> int:
        """
        Образ маски под буквой; состояния без перехода выпадают.
        """
        col = self.columns[letter]
        out = 0
        while mask:
            low = mask & -mask
            t = col[low.bit_length() - 1]
            if t is not None:
                out |= 1 << t
            mask ^= low
        return out

    def word_mask(self, mask: int, word: Iterable[int]) -> int:
        for letter in word:
            mask = self.image_mask(mask, letter)
            if not mask:
                break
        return mask

    # JSON
    def to_dict(self) -> Dict[str, Any]:
        """
        JSON-зеркало: {n, d, table}, пустые ячейки как null.
        """
        return {
            "n": self.n,
            "d": self.d,
            "table": [list(row) for row in self.table],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Automaton":
        table = tuple(
            tuple(None if v is None else _json_int(v, "ячейка") for v in row)
            for row in data.get("table", [])
        )
        return cls(
            n=_json_int(data["n"], "n"),
            d=_json_int(data["d"], "d"),
            table=table,
        )


def _json_int(value: Any, what: str) -> int:
    #bool - подкласс int; дробные значения не округляем
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputFormatError(f"{what}: ожидалось целое число, получено {value!r}")
    return value


def _require_same_size(a: Automaton, s: StateSet) -> None:
    if s.n != a.n:
        raise ValueError(
            f"Множество задано для {s.n} состояний, в автомате {a.n}."
        )


def apply_letter(a: Automaton, s: StateSet, letter: int) -> StateSet:
    _require_same_size(a, s)
    a.check_letter(letter)
    return StateSet(a.n, a.image_mask(s.mask, letter))


def apply_word(a: Automaton, s: StateSet, word: Iterable[int]) -> StateSet:
    _require_same_size(a, s)
    mask = s.mask
    for letter in word:
        a.check_letter(letter)
        mask = a.image_mask(mask, letter)
    return StateSet(a.n, mask)


def is_synchronizing_word(a: Automaton, word: Iterable[int]) -> bool:
    return apply_word(a, a.full_set(), word).size == 1


@dataclass(frozen=True)
class Digraph:
    """
    Нераскрашенный мультиграф: упорядоченные списки исходящих ребер.
    Петли и кратные ребра допустимы, номер слота ребра постоянен.
    """

    n: int
    out: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("Граф должен содержать хотя бы одну вершину.")
        if len(self.out) != self.n:
            raise ValueError(f"Ожидалось {self.n} списков ребер.")
        rows = []
        for v, targets in enumerate(self.out):
            targets = tuple(targets)
            for t in targets:
                if not (0 <= t < self.n):
                    raise ValueError(f"Ребро {v}->{t} ведет вне графа.")
            rows.append(targets)
        object.__setattr__(self, "out", tuple(rows))

    @classmethod
    def from_lists(cls, out: Iterable[Iterable[int]]) -> "Digraph":
        rows = tuple(tuple(r) for r in out)
        return cls(n=len(rows), out=rows)

    def outdegree(self, v: int) -> int:
        return len(self.out[v])

    @property
    def edge_count(self) -> int:
        return sum(len(r) for r in self.out)

    def edges(self) -> Iterator[Tuple[int, int]]:
        for v, targets in enumerate(self.out):
            for t in targets:
                yield v, t

    def uniform_outdegree(self) -> Optional[int]:
        """
        Общая полустепень исхода или None, если она различается.
        """
        degrees = {len(r) for r in self.out}
        return degrees.pop() if len(degrees) == 1 else None

    def require_uniform(self) -> int:
        degrees = {len(r) for r in self.out}
        if len(degrees) != 1:
            raise NonUniformOutdegreeError(degrees)
        return degrees.pop()


@dataclass(frozen=True)
class Coloring:
    """
    slots[v][i] = буква ребра из слота i вершины v.
    """

    slots: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = []
        for v, row in enumerate(self.slots):
            row = tuple(row)
            if sorted(row) != list(range(len(row))):
                raise ValueError(f"Раскраска вершины {v} не перестановка: {row}")
            rows.append(row)
        object.__setattr__(self, "slots", tuple(rows))

    @classmethod
    def identity(cls, n: int, d: int) -> "Coloring":
        return cls(tuple(tuple(range(d)) for _ in range(n)))

    def swap(self, v: int, i: int, j: int) -> "Coloring":
        """
        Меняет местами буквы слотов i и j вершины v.
        """
        rows = [list(r) for r in self.slots]
        rows[v][i], rows[v][j] = rows[v][j], rows[v][i]
        return Coloring(tuple(tuple(r) for r in rows))


def transition_digraph(a: Automaton) -> Digraph:
    """
    Граф определенных переходов, слоты в порядке букв. Подходит и для
    неполных автоматов.
    """
    return Digraph(
        a.n, tuple(tuple(t for t in row if t is not None) for row in a.table)
    )


def forget_colors(a: Automaton) -> Digraph:
    a.require_complete()
    return transition_digraph(a)


def apply_coloring(g: Digraph, c: Coloring) -> Automaton:
    d = g.require_uniform()
    if len(c.slots) != g.n or any(len(r) != d for r in c.slots):
        raise ValueError("Раскраска не соответствует графу.")
    table: List[Tuple[int, ...]] = []
    for v, targets in enumerate(g.out):
        row = [0] * d
        for slot, t in enumerate(targets):
            row[c.slots[v][slot]] = t
        table.append(tuple(row))
    return Automaton(g.n, d, tuple(table))
