from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from itertools import product
from typing import Any, Dict, Iterator, Optional, Tuple

from synchro_hub.core.exact import minimal_sync_word
from synchro_hub.core.models import Automaton, Word
from synchro_hub.core.pairs import build_pair_table
from synchro_hub.core.strategies import strategy_codes
from synchro_hub.core.sync import greedy_sync_word, is_synchronizing

logger = logging.getLogger(__name__)


@dataclass
class GreedyStats:
    """
    Длины слов жадного варианта относительно кратчайших.
    """

    code: str
    optimal: int = 0
    total_excess: int = 0
    max_excess: int = 0
    longest: int = 0

    def add(self, length: int, minimal: int) -> None:
        excess = length - minimal
        if excess == 0:
            self.optimal += 1
        self.total_excess += excess
        self.max_excess = max(self.max_excess, excess)
        self.longest = max(self.longest, length)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "optimal": self.optimal,
            "total_excess": self.total_excess,
            "max_excess": self.max_excess,
            "longest": self.longest,
        }


@dataclass
class SurveyReport:
    """
    Итог перебора полных автоматов с n состояниями и d буквами.
    exhaustive - просмотрены все n^(n*d) таблиц, иначе случайная выборка.
    """

    n: int
    d: int
    exhaustive: bool
    checked: int = 0
    synchronizing: int = 0
    longest: int = 0
    longest_automaton: Optional[Automaton] = None
    longest_word: Word = ()
    greedy: Dict[str, GreedyStats] = field(default_factory=dict)

    @property
    def cerny_bound(self) -> int:
        return (self.n - 1) ** 2

    def mean_excess(self, code: str) -> float:
        if not self.synchronizing:
            return 0.0
        return self.greedy[code].total_excess / self.synchronizing

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "d": self.d,
            "exhaustive": self.exhaustive,
            "checked": self.checked,
            "synchronizing": self.synchronizing,
            "longest": self.longest,
            "cerny_bound": self.cerny_bound,
            "longest_automaton": (
                None if self.longest_automaton is None
                else self.longest_automaton.to_dict()
            ),
            "longest_word": list(self.longest_word),
            "greedy": {code: s.to_dict() for code, s in self.greedy.items()},
        }


def _automata(n: int, d: int, samples: int,
              seed: int) -> Tuple[bool, Iterator[Automaton]]:
    """
    Все таблицы, если их не больше samples, иначе samples случайных.
    """
    width = n * d

    def build(cells: Tuple[int, ...]) -> Automaton:
        return Automaton.from_rows(cells[p * d:(p + 1) * d] for p in range(n))

    if n ** width <= samples:
        return True, (build(cells) for cells in product(range(n), repeat=width))

    rng = random.Random(seed)
    return False, (
        build(tuple(rng.randrange(n) for _ in range(width)))
        for _ in range(samples)
    )


def survey_automata(n: int, d: int, samples: int = 500, seed: int = 0,
                    max_states: int = 10) -> SurveyReport:
    """
    Самое длинное кратчайшее синхронизирующее слово среди полных
    автоматов и сравнение с ним жадных вариантов.
    """
    if n < 1 or d < 1 or samples < 1:
        raise ValueError("n, d и размер выборки должны быть >= 1.")
    if n > max_states:
        raise ValueError(f"Перебор ограничен {max_states} состояниями.")

    exhaustive, candidates = _automata(n, d, samples, seed)
    codes = strategy_codes()
    report = SurveyReport(
        n=n, d=d, exhaustive=exhaustive,
        greedy={code: GreedyStats(code) for code in codes},
    )
    for a in candidates:
        report.checked += 1
        table = build_pair_table(a)
        if not is_synchronizing(a, table):
            continue
        report.synchronizing += 1
        word = minimal_sync_word(a)
        if report.longest_automaton is None or len(word) > report.longest:
            report.longest = len(word)
            report.longest_automaton = a
            report.longest_word = word
        for code in codes:
            report.greedy[code].add(len(greedy_sync_word(a, code, table)), len(word))

    logger.debug(
        f"survey: n={n} d={d} checked={report.checked} "
        f"synchronizing={report.synchronizing} longest={report.longest}"
    )
    return report
