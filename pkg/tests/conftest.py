'''Общие фикстуры и генераторы автоматов для тестов'''
from __future__ import annotations

import random
from typing import List, Optional, Tuple

import pytest

from synchro_hub.core.graphs import is_strongly_connected
from synchro_hub.core.models import Automaton, Digraph
from synchro_hub.core.testas import parse_testas

#автомат из описания формата TESTAS
SAMPLE6 = "2 6 1 0 2 1 0 3 5 2 3 2 4 5"
#неполный автомат с пустыми ячейками
PARTIAL5 = "2 5 1 0 2 1 ; 3 ; ; 3 2"
#строка с переходом в вершину 5 при n = 5
SAMPLE_PARTIAL_RAW = "2 5 1 0 2 1 ; 3 5 ; 3 ;"
IDENTITY2 = "2 2 0 0 1 1"


def cerny(n: int) -> Automaton:
    """
    Автомат Черни: a - цикл i -> i+1 (mod n), b переводит 0 в 1,
    остальные вершины на месте. Кратчайшее слово имеет длину (n-1)^2.
    """
    a = [(i + 1) % n for i in range(n)]
    b = [1 if i == 0 else i for i in range(n)] if n > 1 else [0]
    return Automaton.from_columns(n, [a, b])


def map_word(a: Automaton, state: int, word) -> Optional[int]:
    '''Состояние после чтения слова, None - переход не определен'''
    cur: Optional[int] = state
    for letter in word:
        if cur is None:
            return None
        cur = a.table[cur][letter]
    return cur


def with_cell(a: Automaton, state: int, letter: int, value: Optional[int]) -> Automaton:
    rows = [list(r) for r in a.table]
    rows[state][letter] = value
    return Automaton.from_rows(rows)


def relabel(g: Digraph, perm: List[int]) -> Digraph:
    '''Переименование вершин v -> perm[v]'''
    out: List[Tuple[int, ...]] = [()] * g.n
    for v, targets in enumerate(g.out):
        out[perm[v]] = tuple(perm[t] for t in targets)
    return Digraph.from_lists(out)


def random_automaton(rng: random.Random, n: int, d: int) -> Automaton:
    return Automaton.from_rows(
        [rng.randrange(n) for _ in range(d)] for _ in range(n)
    )


def random_synchronizing(rng: random.Random, n: int, d: int) -> Automaton:
    """
    Случайный синхронизируемый автомат (выборка с отбраковкой).
    """
    from synchro_hub.core.sync import is_synchronizing

    while True:
        a = random_automaton(rng, n, d)
        if is_synchronizing(a):
            return a


def random_uniform_digraph(rng: random.Random, n: int, d: int) -> Digraph:
    """
    Случайный сильно связный граф с полустепенью исхода d.
    """
    while True:
        g = Digraph.from_lists(
            [rng.randrange(n) for _ in range(d)] for _ in range(n)
        )
        if is_strongly_connected(g):
            return g


def random_periodic_digraph(rng: random.Random, n: int, k: int, d: int) -> Digraph:
    """
    Сильно связный граф, у которого ребра ведут из уровня i в уровень
    i+1 (mod k): НОД длин циклов кратен k.
    """
    levels: List[List[int]] = [[] for _ in range(k)]
    for v in range(n):
        levels[v % k].append(v)
    while True:
        out = []
        for v in range(n):
            nxt = levels[(v % k + 1) % k]
            out.append([rng.choice(nxt) for _ in range(d)])
        g = Digraph.from_lists(out)
        if is_strongly_connected(g):
            return g


@pytest.fixture
def sample6() -> Automaton:
    return parse_testas(SAMPLE6)


@pytest.fixture
def partial5() -> Automaton:
    return parse_testas(PARTIAL5)


@pytest.fixture
def identity2() -> Automaton:
    return parse_testas(IDENTITY2)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240517)


@pytest.fixture
def in_tmp(tmp_path, monkeypatch):
    '''Рабочий каталог во временной папке: логи не попадают в проект'''
    monkeypatch.chdir(tmp_path)
    return tmp_path
