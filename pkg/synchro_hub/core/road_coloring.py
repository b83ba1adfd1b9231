from __future__ import annotations

import logging
import random
from collections import deque
from dataclasses import dataclass
from itertools import permutations, product
from math import factorial
from typing import Deque, Iterator, List, Optional, Set, Tuple

from synchro_hub.core.exceptions import (
    NotAgwError,
    NotCongruenceError,
    NotStronglyConnectedError,
    SearchExhaustedError,
)
from synchro_hub.core.exact import min_image_word
from synchro_hub.core.graphs import cycle_gcd, period_classes, scc
from synchro_hub.core.models import (
    Automaton,
    Coloring,
    Digraph,
    Word,
    apply_coloring,
    forget_colors,
    mask_members,
)
from synchro_hub.core.pairs import build_pair_table, preimages
from synchro_hub.core.sync import is_synchronizing

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


@dataclass(frozen=True)
class StabilityRelation:
    """
    Замыкание отношения стабильности: разбиение состояний на классы.
    """

    class_of: Tuple[int, ...]
    classes: Tuple[Tuple[int, ...], ...]

    @property
    def is_trivial(self) -> bool:
        return len(self.classes) == len(self.class_of)

    @classmethod
    def from_pairs(cls, n: int, pairs: Set[Pair]) -> "StabilityRelation":
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for p, q in pairs:
            rp, rq = find(p), find(q)
            if rp != rq:
                parent[max(rp, rq)] = min(rp, rq)

        groups: dict[int, List[int]] = {}
        for v in range(n):
            groups.setdefault(find(v), []).append(v)
        classes = sorted((tuple(g) for g in groups.values()), key=lambda c: c[0])
        class_of = [0] * n
        for cid, block in enumerate(classes):
            for v in block:
                class_of[v] = cid
        return cls(class_of=tuple(class_of), classes=tuple(classes))

    def congruence_violations(self, a: Automaton) -> List[Tuple[int, int]]:
        """
        Пары (класс, буква), для которых образ класса задевает разные классы.
        """
        bad: List[Tuple[int, int]] = []
        for cid, block in enumerate(self.classes):
            for letter in range(a.d):
                images = {self.class_of[a.table[v][letter]] for v in block}
                if len(images) > 1:
                    bad.append((cid, letter))
        return bad

    def check_congruence(self, a: Automaton) -> None:
        bad = self.congruence_violations(a)
        if bad:
            cid, letter = bad[0]
            raise NotCongruenceError(self.classes[cid], letter)


@dataclass(frozen=True)
class ColoringResult:
    k: int
    coloring: Coloring
    witness: Word
    automaton: Automaton


def _require_strongly_connected(a: Automaton) -> None:
    part = scc(forget_colors(a))
    if part.count != 1:
        raise NotStronglyConnectedError(part.count)


def stable_pairs(a: Automaton) -> Set[Pair]:
    """
    Стабильные пары (p < q): каждая пара, достижимая из {p, q} в автомате
    пар, склеивается. Обратный поиск от несклеиваемых пар, O(n^2 d).
    """
    _require_strongly_connected(a)
    n = a.n
    table = build_pair_table(a)
    pre = preimages(a)

    unstable = bytearray(n * n)
    queue: Deque[Pair] = deque()
    for p, q in table.unmergeable_pairs():
        unstable[p * n + q] = unstable[q * n + p] = 1
        queue.append((p, q))

    while queue:
        x, y = queue.popleft()
        for letter in range(a.d):
            py = pre[letter][y]
            for p in pre[letter][x]:
                for q in py:
                    if p != q and not unstable[p * n + q]:
                        unstable[p * n + q] = unstable[q * n + p] = 1
                        queue.append((p, q))

    return {
        (p, q) for p in range(n) for q in range(p + 1, n)
        if not unstable[p * n + q]
    }


def stability_relation(a: Automaton) -> StabilityRelation:
    return StabilityRelation.from_pairs(a.n, stable_pairs(a))


def quotient(a: Automaton, relation: StabilityRelation) -> Digraph:
    """
    Фактор-граф по конгруэнции: вершины - классы, ребра класса - образы
    ребер его представителя. Слот j соответствует букве j автомата a.
    """
    relation.check_congruence(a)
    out = []
    for block in relation.classes:
        rep = block[0]
        out.append(tuple(relation.class_of[t] for t in a.table[rep]))
    return Digraph(len(relation.classes), tuple(out))


def _agw_failure(g: Digraph) -> Optional[str]:
    degree = g.uniform_outdegree()
    if degree is None:
        return "полустепени исхода различаются"
    if degree < 1:
        return "нет исходящих ребер"
    part = scc(g)
    if part.count != 1:
        return f"граф не сильно связен (компонент: {part.count})"
    k = cycle_gcd(g)
    if k != 1:
        return f"НОД длин циклов равен {k}"
    return None


def _candidates(g: Digraph, seed: int, restarts: int,
                exhaustive_limit: int) -> Iterator[Tuple[str, Coloring]]:
    """
    Раскраски-кандидаты в детерминированном порядке этапов.
    """
    d = g.require_uniform()
    identity = Coloring.identity(g.n, d)
    yield "identity", identity

    for v in range(g.n):
        targets = g.out[v]
        for i in range(d):
            for j in range(i + 1, d):
                if targets[i] != targets[j]:
                    yield "transposition", identity.swap(v, i, j)

    if factorial(d) ** g.n <= exhaustive_limit:
        for rows in product(permutations(range(d)), repeat=g.n):
            yield "exhaustive", Coloring(rows)
        return

    rng = random.Random(seed)
    letters = list(range(d))
    for _ in range(restarts):
        rows = []
        for _v in range(g.n):
            perm = letters[:]
            rng.shuffle(perm)
            rows.append(tuple(perm))
        yield "random", Coloring(tuple(rows))


def _search_stable_coloring(g: Digraph, seed: int = 0, restarts: int = 2000,
                            exhaustive_limit: int = 50_000
                            ) -> Tuple[Coloring, StabilityRelation]:
    tried = 0
    stage = "identity"
    for stage, coloring in _candidates(g, seed, restarts, exhaustive_limit):
        tried += 1
        relation = stability_relation(apply_coloring(g, coloring))
        if not relation.is_trivial:
            logger.debug(
                f"stable coloring: n={g.n} stage={stage} tried={tried} "
                f"classes={len(relation.classes)}"
            )
            return coloring, relation
    raise SearchExhaustedError(f"{stage}, проверено раскрасок: {tried}")


def find_stable_coloring(g: Digraph, seed: int = 0, restarts: int = 2000,
                         exhaustive_limit: int = 50_000
                         ) -> Tuple[Coloring, StabilityRelation]:
    """
    Раскраска AGW графа с нетривиальным отношением стабильности.
    Этапы: исходная раскраска, транспозиции букв в одной вершине,
    полный перебор (если раскрасок немного) или случайные перезапуски.
    """
    reason = _agw_failure(g)
    if reason:
        raise NotAgwError(reason)
    if g.n < 2:
        raise ValueError("Нужно хотя бы две вершины.")
    return _search_stable_coloring(g, seed, restarts, exhaustive_limit)


def _lift(g: Digraph, coloring: Coloring, relation: StabilityRelation,
          quotient_coloring: Coloring) -> Coloring:
    """
    Перекраска: в вершине v класса C буква x заменяется на букву,
    которую раскраска фактор-графа дает слоту x класса C.
    """
    rows = []
    for v in range(g.n):
        perm = quotient_coloring.slots[relation.class_of[v]]
        rows.append(tuple(perm[x] for x in coloring.slots[v]))
    return Coloring(tuple(rows))


def _check_quotient(g: Digraph, q: Digraph) -> None:
    """
    Фактор-граф по стабильному отношению снова сильно связен, с той же
    полустепенью исхода и тем же НОД длин циклов.
    """
    if (q.uniform_outdegree() != g.uniform_outdegree()
            or scc(q).count != 1
            or cycle_gcd(q) != cycle_gcd(g)):
        raise SearchExhaustedError(f"фактор-граф на {q.n} вершинах потерял свойства графа")


def _reduce(g: Digraph, base_size: int, seed: int, restarts: int,
            exhaustive_limit: int) -> Coloring:
    d = g.require_uniform()
    if g.n <= base_size:
        return Coloring.identity(g.n, d)
    coloring, relation = _search_stable_coloring(g, seed, restarts, exhaustive_limit)
    a = apply_coloring(g, coloring)
    q = quotient(a, relation)
    _check_quotient(g, q)
    logger.debug(f"quotient: {g.n} -> {q.n} vertices")
    q_coloring = _reduce(q, base_size, seed, restarts, exhaustive_limit)
    return _lift(g, coloring, relation, q_coloring)


def find_synchronizing_coloring(g: Digraph, seed: int = 0, restarts: int = 2000,
                                exhaustive_limit: int = 50_000) -> Coloring:
    reason = _agw_failure(g)
    if reason:
        raise NotAgwError(reason)
    coloring = _reduce(g, 1, seed, restarts, exhaustive_limit)
    if not is_synchronizing(apply_coloring(g, coloring)):
        raise SearchExhaustedError("перекраска не синхронизирует")
    return coloring


def _greedy_witness(a: Automaton) -> Word:
    """
    Склеивает пары текущего образа, пока это возможно.
    """
    table = build_pair_table(a)
    n = a.n
    mask = (1 << n) - 1
    word: List[int] = []
    while True:
        members = mask_members(mask)
        best: Optional[Tuple[int, int, int]] = None
        for i, p in enumerate(members):
            for q in members[i + 1:]:
                dist = table.dist[p * n + q]
                if dist > 0 and (best is None or (dist, p, q) < best):
                    best = (dist, p, q)
        if best is None:
            return tuple(word)
        step = table.merging_word(a, best[1], best[2])
        word.extend(step)
        mask = a.word_mask(mask, step)


def _check_witness_classes(g: Digraph, a: Automaton, witness: Word) -> None:
    """
    Образ всех вершин задевает каждый класс уровней ровно один раз.
    """
    k, level = period_classes(g)
    image = mask_members(a.word_mask((1 << a.n) - 1, witness))
    if sorted(level[v] for v in image) != list(range(k)):
        raise SearchExhaustedError(f"образ свидетеля {image} не покрывает {k} классов")


def find_k_sync_coloring(g: Digraph, seed: int = 0, restarts: int = 2000,
                         exhaustive_limit: int = 50_000,
                         min_image_cap: int = 16) -> ColoringResult:
    """
    k-синхронизирующая раскраска, k = НОД длин циклов графа.
    Меньше k образ быть не может: каждое ребро переводит класс уровней
    i в класс i + 1 (mod k), и образ всего множества задевает все k классов.
    """
    degree = g.require_uniform()
    part = scc(g)
    if part.count != 1:
        raise NotStronglyConnectedError(part.count)
    if degree < 1:
        raise NotAgwError("нет исходящих ребер")
    k = cycle_gcd(g)

    if k == 1:
        coloring = find_synchronizing_coloring(g, seed, restarts, exhaustive_limit)
    else:
        coloring = _reduce(g, k, seed, restarts, exhaustive_limit)
    a = apply_coloring(g, coloring)

    witness = _greedy_witness(a)
    size = a.word_mask((1 << a.n) - 1, witness).bit_count()
    if size != k and a.n <= min_image_cap:
        witness, size = min_image_word(a, cap=min_image_cap)
    if size != k:
        raise SearchExhaustedError(f"образ свидетеля {size}, ожидалось {k}")
    _check_witness_classes(g, a, witness)
    return ColoringResult(k=k, coloring=coloring, witness=witness, automaton=a)
