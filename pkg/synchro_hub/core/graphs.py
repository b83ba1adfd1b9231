from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import gcd
from typing import Dict, List, Tuple

from synchro_hub.core.exceptions import NotStronglyConnectedError
from synchro_hub.core.models import Digraph


@dataclass(frozen=True)
class SccPartition:
    """
    Разбиение на сильно связные компоненты.
    components упорядочены по убыванию размера, при равенстве по
    наименьшей вершине; condensation - ребра ацикличного графа компонент.
    """

    component_of: Tuple[int, ...]
    components: Tuple[Tuple[int, ...], ...]
    condensation: Tuple[Tuple[int, int], ...]

    @property
    def count(self) -> int:
        return len(self.components)

    @property
    def sizes(self) -> Tuple[int, ...]:
        return tuple(len(c) for c in self.components)


def _tarjan(g: Digraph) -> List[List[int]]:
    """
    Алгоритм Тарьяна без рекурсии: время линейно по n + числу ребер.
    """
    n = g.n
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: List[int] = []
    comps: List[List[int]] = []
    counter = 0

    for root in range(n):
        if index[root] != -1:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        work: List[Tuple[int, int]] = [(root, 0)]

        while work:
            v, i = work[-1]
            out = g.out[v]
            if i < len(out):
                work[-1] = (v, i + 1)
                w = out[i]
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
                continue

            work.pop()
            if work:
                u = work[-1][0]
                low[u] = min(low[u], low[v])
            if low[v] == index[v]:
                comp: List[int] = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(comp)
    return comps


def scc(g: Digraph) -> SccPartition:
    raw = [sorted(c) for c in _tarjan(g)]
    raw.sort(key=lambda c: (-len(c), c[0]))

    component_of = [0] * g.n
    for cid, comp in enumerate(raw):
        for v in comp:
            component_of[v] = cid

    cond = {
        (component_of[u], component_of[v])
        for u, v in g.edges()
        if component_of[u] != component_of[v]
    }
    return SccPartition(
        component_of=tuple(component_of),
        components=tuple(tuple(c) for c in raw),
        condensation=tuple(sorted(cond)),
    )


def is_strongly_connected(g: Digraph) -> bool:
    return scc(g).count == 1


def sink_components(p: SccPartition) -> List[int]:
    """
    Стоковые компоненты: достижимые из любой вершины графа.
    Граф компонент ацикличен, поэтому такая компонента есть только когда
    компонента без выходящих ребер единственна.
    """
    has_out = {a for a, _ in p.condensation}
    candidates = [c for c in range(p.count) if c not in has_out]
    return candidates if len(candidates) == 1 else []


def _bfs_levels(g: Digraph, comp: Tuple[int, ...], component_of: Tuple[int, ...],
                cid: int) -> Dict[int, int]:
    root = comp[0]
    level = {root: 0}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for v in g.out[u]:
            if component_of[v] == cid and v not in level:
                level[v] = level[u] + 1
                queue.append(v)
    return level


def cycle_gcd(g: Digraph) -> int:
    """
    НОД длин всех циклов графа; 0 для ациклического графа.
    """
    part = scc(g)
    result = 0
    for cid, comp in enumerate(part.components):
        level = _bfs_levels(g, comp, part.component_of, cid)
        for u in comp:
            for v in g.out[u]:
                if part.component_of[v] == cid:
                    result = gcd(result, abs(level[u] + 1 - level[v]))
    return result


def period_classes(g: Digraph) -> Tuple[int, List[int]]:
    """
    Для сильно связного графа: k = НОД длин циклов и номер класса
    (уровень по модулю k) каждой вершины. Каждое ребро ведет из класса
    i в класс i + 1 (mod k).
    """
    part = scc(g)
    if part.count != 1:
        raise NotStronglyConnectedError(part.count)
    k = cycle_gcd(g)
    level = _bfs_levels(g, part.components[0], part.component_of, 0)
    if k == 0:
        return 0, [0] * g.n
    return k, [level[v] % k for v in range(g.n)]


def is_agw(g: Digraph) -> bool:
    degree = g.uniform_outdegree()
    if degree is None or degree < 1:
        return False
    if not is_strongly_connected(g):
        return False
    return cycle_gcd(g) == 1
