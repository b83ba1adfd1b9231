from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Deque, List, Optional, Tuple

from synchro_hub.core.exceptions import NotMergeableError
from synchro_hub.core.models import Automaton, Word

INF = -1


@dataclass(frozen=True)
class PairTable:
    """
    Для каждой пары состояний {p, q}: длина кратчайшего склеивающего слова
    (INF, если склеить нельзя) и первая буква такого слова.
    Хранится как плоские массивы n*n, симметрично.
    """

    n: int
    dist: Tuple[int, ...]
    first: Tuple[int, ...]

    def distance(self, p: int, q: int) -> Optional[int]:
        v = self.dist[p * self.n + q]
        return None if v == INF else v

    def first_letter(self, p: int, q: int) -> Optional[int]:
        v = self.first[p * self.n + q]
        return None if v == INF else v

    def is_mergeable(self, p: int, q: int) -> bool:
        return self.dist[p * self.n + q] != INF

    def all_mergeable(self) -> bool:
        return INF not in self.dist

    def unmergeable_pairs(self) -> List[Tuple[int, int]]:
        n = self.n
        return [
            (p, q) for p in range(n) for q in range(p + 1, n)
            if self.dist[p * n + q] == INF
        ]

    def merging_word(self, a: Automaton, p: int, q: int) -> Word:
        if not self.is_mergeable(p, q):
            raise NotMergeableError(p, q)
        word: List[int] = []
        while p != q:
            letter = self.first_letter(p, q)
            word.append(letter)
            p, q = a.table[p][letter], a.table[q][letter]
        return tuple(word)


def preimages(a: Automaton) -> List[List[List[int]]]:
    """
    pre[letter][x] = состояния, которые буква letter переводит в x.
    """
    pre: List[List[List[int]]] = [[[] for _ in range(a.n)] for _ in range(a.d)]
    for p, row in enumerate(a.table):
        for letter, t in enumerate(row):
            if t is not None:
                pre[letter][t].append(p)
    return pre


def build_pair_table(a: Automaton) -> PairTable:
    """
    Обратный поиск в ширину от диагонали автомата пар, O(n^2 d).
    Первая буква выбирается наименьшей среди оптимальных.
    """
    a.require_complete()
    n, d = a.n, a.d
    pre = preimages(a)

    dist = [INF] * (n * n)
    queue: Deque[Tuple[int, int]] = deque()
    for s in range(n):
        dist[s * n + s] = 0
        queue.append((s, s))

    while queue:
        x, y = queue.popleft()
        nd = dist[x * n + y] + 1
        for letter in range(d):
            py = pre[letter][y]
            for p in pre[letter][x]:
                for q in py:
                    if dist[p * n + q] == INF:
                        dist[p * n + q] = dist[q * n + p] = nd
                        queue.append((p, q))

    first = [INF] * (n * n)
    for p in range(n):
        for q in range(p + 1, n):
            dpq = dist[p * n + q]
            if dpq == INF:
                continue
            for letter in range(d):
                x, y = a.table[p][letter], a.table[q][letter]
                if dist[x * n + y] == dpq - 1:
                    first[p * n + q] = first[q * n + p] = letter
                    break

    return PairTable(n=n, dist=tuple(dist), first=tuple(first))
