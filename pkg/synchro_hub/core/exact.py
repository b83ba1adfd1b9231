from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Deque, Dict, List, Optional, Set, Tuple

from synchro_hub.core.exceptions import CapExceededError, NotSynchronizingError
from synchro_hub.core.models import Automaton, Word
from synchro_hub.core.pairs import build_pair_table
from synchro_hub.core.sync import greedy_sync_word

logger = logging.getLogger(__name__)


@dataclass
class SubsetNode:
    """
    Вектор подмножества, родитель, создавшая его буква и длина слова.
    """

    vector: int
    parent: Optional["SubsetNode"]
    letter: Optional[int]
    depth: int

    def word(self) -> Word:
        letters: List[int] = []
        node: Optional[SubsetNode] = self
        while node is not None and node.letter is not None:
            letters.append(node.letter)
            node = node.parent
        return tuple(reversed(letters))


@dataclass
class SearchStats:
    generated: int = 0
    expanded: int = 0
    stored: int = 0
    pruned_depth: int = 0
    pruned_dominance: int = 0
    pruned_prefix: int = 0
    bound: Optional[int] = None

    def to_dict(self) -> Dict[str, Optional[int]]:
        return {
            "generated": self.generated,
            "expanded": self.expanded,
            "stored": self.stored,
            "pruned_depth": self.pruned_depth,
            "pruned_dominance": self.pruned_dominance,
            "pruned_prefix": self.pruned_prefix,
            "bound": self.bound,
        }


@dataclass
class SearchResult:
    word: Word
    stats: SearchStats = field(default_factory=SearchStats)
    visited: Set[int] = field(default_factory=set)

    @property
    def length(self) -> int:
        return len(self.word)


class _SeenStore:
    """
    Сохраненные векторы, сгруппированные по мощности: вектор-подмножество
    может иметь мощность не больше кандидата.
    """

    def __init__(self) -> None:
        self._exact: Set[int] = set()
        self._by_size: Dict[int, List[int]] = {}

    def add(self, vector: int) -> None:
        self._exact.add(vector)
        self._by_size.setdefault(vector.bit_count(), []).append(vector)

    def __contains__(self, vector: int) -> bool:
        return vector in self._exact

    def dominated(self, vector: int) -> bool:
        if vector in self._exact:
            return True
        size = vector.bit_count()
        inv = ~vector
        for k, group in self._by_size.items():
            if k > size:
                continue
            for w in group:
                if w & inv == 0:
                    return True
        return False

    def vectors(self) -> Set[int]:
        return set(self._exact)


def _initial_bound(a: Automaton) -> Tuple[int, List[int]]:
    """
    Верхняя граница L и цепочка образов префиксов начального слова.
    """
    full = (1 << a.n) - 1
    if a.is_complete():
        table = build_pair_table(a)
        if not table.all_mergeable():
            p, q = table.unmergeable_pairs()[0]
            raise NotSynchronizingError(f"пару ({p}, {q}) нельзя склеить")
        word = greedy_sync_word(a, "B", table=table)
        chain = [full]
        mask = full
        for letter in word:
            mask = a.image_mask(mask, letter)
            chain.append(mask)
        return len(word), chain
    #кратчайший путь в графе подмножеств не повторяет векторов
    return (1 << a.n) - 1, [full]


def minimal_sync_search(a: Automaton) -> SearchResult:
    """
    Синхронизирующее слово минимальной длины: поиск в ширину по векторам
    подмножеств с отсечением по длине L и по включению.

    Вектор-потомок глубины t исключается, если
    - t > L;
    - уже сохранен вектор-подмножество (сохраненные имеют глубину <= t);
    - образ префикса начального слова длины j < t является его подмножеством.
    Для неполных автоматов подмножество может пропасть целиком, поэтому
    включение заменяется равенством.
    """
    stats = SearchStats()
    full = (1 << a.n) - 1
    if a.n == 1:
        return SearchResult(word=(), stats=stats, visited={full})

    bound, chain = _initial_bound(a)
    stats.bound = bound
    dominance = a.is_complete()

    seen = _SeenStore()
    seen.add(full)
    stats.stored = 1
    frontier: List[SubsetNode] = [SubsetNode(full, None, None, 0)]
    found: List[SubsetNode] = []

    while frontier and not found:
        depth = frontier[0].depth + 1
        if depth > bound:
            stats.pruned_depth += len(frontier) * a.d
            break
        next_frontier: List[SubsetNode] = []
        for node in frontier:
            stats.expanded += 1
            for letter in range(a.d):
                vector = a.image_mask(node.vector, letter)
                stats.generated += 1
                if vector == 0:
                    continue
                if vector & (vector - 1) == 0:
                    found.append(SubsetNode(vector, node, letter, depth))
                    continue
                if dominance:
                    if seen.dominated(vector):
                        stats.pruned_dominance += 1
                        continue
                    inv = ~vector
                    if any(chain[j] & inv == 0 for j in range(min(depth, len(chain)))):
                        stats.pruned_prefix += 1
                        continue
                else:
                    if vector in seen:
                        stats.pruned_dominance += 1
                        continue
                    if vector in chain[:depth]:
                        stats.pruned_prefix += 1
                        continue
                seen.add(vector)
                stats.stored += 1
                next_frontier.append(SubsetNode(vector, node, letter, depth))
        frontier = next_frontier

    if not found:
        raise NotSynchronizingError("поиск в ширину исчерпан")

    bound_before = stats.bound
    word = min(node.word() for node in found)
    stats.bound = len(word)
    if bound_before != stats.bound:
        logger.debug(f"L уточнено: {bound_before} -> {stats.bound}")
    logger.debug(f"minword: n={a.n} length={len(word)} stats={stats.to_dict()}")
    return SearchResult(word=word, stats=stats, visited=seen.vectors())


def minimal_sync_word(a: Automaton) -> Word:
    return minimal_sync_search(a).word


def bfs_oracle_search(a: Automaton, cap: int = 20,
                      max_length: Optional[int] = None) -> SearchResult:
    """
    Простой поиск в ширину по всем достижимым подмножествам, только
    с устранением повторов. max_length обрезает глубину поиска.
    """
    if a.n > cap:
        raise CapExceededError(f"n={a.n} для перебора подмножеств", cap)
    stats = SearchStats()
    full = (1 << a.n) - 1
    if a.n == 1:
        return SearchResult(word=(), stats=stats, visited={full})

    parent: Dict[int, Tuple[int, int]] = {}
    depth_of = {full: 0}
    queue: Deque[int] = deque([full])
    while queue:
        vector = queue.popleft()
        depth = depth_of[vector]
        if max_length is not None and depth >= max_length:
            continue
        stats.expanded += 1
        for letter in range(a.d):
            image = a.image_mask(vector, letter)
            stats.generated += 1
            if image == 0 or image in depth_of:
                continue
            parent[image] = (vector, letter)
            depth_of[image] = depth + 1
            stats.stored += 1
            if image & (image - 1) == 0:
                letters: List[int] = []
                cur = image
                while cur != full:
                    prev, x = parent[cur]
                    letters.append(x)
                    cur = prev
                return SearchResult(tuple(reversed(letters)), stats, set(depth_of))
            queue.append(image)

    raise NotSynchronizingError("синхронизирующее слово не найдено")


def bfs_oracle(a: Automaton, cap: int = 20) -> Word:
    return bfs_oracle_search(a, cap=cap).word


def min_image_word(a: Automaton, cap: int = 16) -> Tuple[Word, int]:
    """
    Слово, дающее образ всего множества наименьшей мощности (поиск в
    ширину по подмножествам). Возвращает (слово, мощность образа).
    """
    if a.n > cap:
        raise CapExceededError(f"n={a.n} для поиска минимального образа", cap)
    full = (1 << a.n) - 1
    parent: Dict[int, Tuple[int, int]] = {}
    queue: Deque[int] = deque([full])
    seen = {full}
    best = full
    while queue:
        vector = queue.popleft()
        if vector.bit_count() < best.bit_count():
            best = vector
        for letter in range(a.d):
            image = a.image_mask(vector, letter)
            if image == 0 or image in seen:
                continue
            seen.add(image)
            parent[image] = (vector, letter)
            queue.append(image)

    letters: List[int] = []
    cur = best
    while cur != full:
        prev, x = parent[cur]
        letters.append(x)
        cur = prev
    return tuple(reversed(letters)), best.bit_count()
