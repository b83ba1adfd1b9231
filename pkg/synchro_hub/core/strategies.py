# Жадные стратегии построения синхронизирующего слова

from abc import ABC, abstractmethod
from itertools import combinations
from typing import Dict, List, Tuple

from synchro_hub.core.exceptions import UnknownAlgorithmError
from synchro_hub.core.models import Automaton, Word
from synchro_hub.core.pairs import PairTable


class GreedyStrategy(ABC):
    """
    Абстрактная жадная стратегия: на каждом шаге выбирает слово,
    склеивающее хотя бы одну пару текущего образа.
    """
    code: str
    title: str

    @abstractmethod
    def next_word(self, a: Automaton, table: PairTable, members: List[int]) -> Word:
        """
        Слово для текущего образа members (не менее двух состояний).
        """
        pass

    def describe(self) -> str:
        return f"[{self.code}] {self.title}"


class AnyPairStrategy(GreedyStrategy):
    """
    Вариант A: два наименьших состояния образа.
    """
    code = "A"
    title = "first pair of the image"

    def next_word(self, a: Automaton, table: PairTable, members: List[int]) -> Word:
        return table.merging_word(a, members[0], members[1])


class ClosestPairStrategy(GreedyStrategy):
    """
    Вариант B: пара с самым коротким склеивающим словом.
    """
    code = "B"
    title = "closest pair of the image"

    def next_word(self, a: Automaton, table: PairTable, members: List[int]) -> Word:
        best: Tuple[int, int, int] | None = None
        for p, q in combinations(members, 2):
            key = (table.dist[p * table.n + q], p, q)
            if best is None or key < best:
                best = key
        assert best is not None
        return table.merging_word(a, best[1], best[2])


class SmallestImageStrategy(GreedyStrategy):
    """
    Вариант C: слово пары, дающее наименьший образ; затем короче,
    затем лексикографически меньше.
    """
    code = "C"
    title = "smallest resulting image"

    def next_word(self, a: Automaton, table: PairTable, members: List[int]) -> Word:
        mask = 0
        for p in members:
            mask |= 1 << p
        best: Tuple[int, int, Word] | None = None
        seen: set[Word] = set()
        for p, q in combinations(members, 2):
            w = table.merging_word(a, p, q)
            if w in seen:
                continue
            seen.add(w)
            key = (a.word_mask(mask, w).bit_count(), len(w), w)
            if best is None or key < best:
                best = key
        assert best is not None
        return best[2]


_STRATEGIES: Dict[str, GreedyStrategy] = {
    "A": AnyPairStrategy(),
    "B": ClosestPairStrategy(),
    "C": SmallestImageStrategy(),
}


def get_strategy(code: str) -> GreedyStrategy:
    """
    Возвращает стратегию по коду варианта.
    """
    code = (code or "").strip().upper()

    try:
        return _STRATEGIES[code]
    except KeyError as exc:
        raise UnknownAlgorithmError(code) from exc


def strategy_codes() -> List[str]:
    return list(_STRATEGIES)
