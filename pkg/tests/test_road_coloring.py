import random
from itertools import permutations, product

import pytest

from synchro_hub.core import road_coloring
from synchro_hub.core.exact import min_image_word
from synchro_hub.core.exceptions import (
    NonUniformOutdegreeError,
    NotAgwError,
    NotCongruenceError,
    NotStronglyConnectedError,
    SearchExhaustedError,
)
from synchro_hub.core.graphs import (
    cycle_gcd,
    is_agw,
    is_strongly_connected,
    period_classes,
)
from synchro_hub.core.models import (
    Automaton,
    Coloring,
    Digraph,
    apply_coloring,
    forget_colors,
    is_synchronizing_word,
)
from synchro_hub.core.road_coloring import (
    StabilityRelation,
    find_k_sync_coloring,
    find_stable_coloring,
    find_synchronizing_coloring,
    quotient,
    stability_relation,
    stable_pairs,
)
from synchro_hub.core.sync import is_synchronizing
from tests.conftest import (
    random_automaton,
    random_periodic_digraph,
    random_uniform_digraph,
)

PERIODIC = [
    [[1, 1], [0, 0]],
    [[1, 1], [2, 2], [3, 3], [0, 0]],
    [[2, 3], [2, 3], [0, 1], [0, 1]],
    [[1, 3], [2, 4], [3, 5], [4, 0], [5, 1], [0, 2]],
]


def has_synchronizing_coloring(g):
    '''Перебор всех раскрасок графа'''
    d = g.require_uniform()
    for rows in product(permutations(range(d)), repeat=g.n):
        if is_synchronizing(apply_coloring(g, Coloring(rows))):
            return True
    return False


def bounded_reach(a, start, steps):
    '''Пары, достижимые из start словами длины не больше steps'''
    seen = set(start)
    frontier = set(start)
    for _ in range(steps):
        frontier = {
            (a.table[p][x], a.table[q][x]) for p, q in frontier for x in range(a.d)
        } - seen
        seen |= frontier
    return seen


def brute_stable_pairs(a):
    '''Пара стабильна, если склеивается любая пара, в которую она переходит'''
    steps = a.n * a.n
    stable = set()
    for p in range(a.n):
        for q in range(p + 1, a.n):
            reached = bounded_reach(a, {(p, q)}, steps)
            if all(
                any(x == y for x, y in bounded_reach(a, {pair}, steps))
                for pair in reached
            ):
                stable.add((p, q))
    return stable


def random_strongly_connected(rng, n, d):
    while True:
        a = random_automaton(rng, n, d)
        if is_strongly_connected(forget_colors(a)):
            return a


def check_relation(g, coloring, relation):
    a = apply_coloring(g, coloring)
    assert relation.congruence_violations(a) == []
    assert not relation.is_trivial
    q = quotient(a, relation)
    assert q.n == len(relation.classes)
    assert is_agw(q)


def test_pair_merged_by_every_letter_is_stable():
    #0 и 1 склеиваются любой буквой
    a = Automaton.from_rows([[2, 2], [2, 2], [0, 1]])
    assert (0, 1) in stable_pairs(a)


def test_stable_pairs_synchronizing_automaton_is_everything(sample6):
    relation = stability_relation(sample6)
    assert relation.classes == ((0, 1, 2, 3, 4, 5),)


def test_stable_pairs_match_bounded_words(sample6, rng):
    assert stable_pairs(sample6) == brute_stable_pairs(sample6)
    for _ in range(150):
        a = random_strongly_connected(rng, rng.randint(2, 5), rng.randint(1, 3))
        assert stable_pairs(a) == brute_stable_pairs(a)


def test_stable_pairs_of_two_level_automaton():
    #уровни {0, 1} и {2, 3}: склеиваются только пары внутри уровня
    a = Automaton.from_rows([[2, 3], [2, 3], [0, 1], [0, 1]])
    assert stable_pairs(a) == {(0, 1), (2, 3)} == brute_stable_pairs(a)


def test_stable_pairs_need_strong_connectivity():
    with pytest.raises(NotStronglyConnectedError):
        stable_pairs(Automaton.from_rows([[1, 1], [1, 1]]))


def test_relation_from_pairs():
    r = StabilityRelation.from_pairs(5, {(0, 3), (3, 4)})
    assert r.classes == ((0, 3, 4), (1,), (2,))
    assert r.class_of == (0, 1, 2, 0, 0)


def test_quotient_rejects_non_congruence():
    a = Automaton.from_rows([[1, 0], [2, 1], [0, 2]])
    r = StabilityRelation.from_pairs(3, {(0, 1)})
    with pytest.raises(NotCongruenceError):
        quotient(a, r)


def test_sample_automaton_recoloring(sample6):
    g = forget_colors(sample6)
    coloring = find_synchronizing_coloring(g)
    assert is_synchronizing(apply_coloring(g, coloring))


@pytest.mark.parametrize("out", PERIODIC)
def test_periodic_graph_has_no_synchronizing_coloring(out):
    g = Digraph.from_lists(out)
    assert cycle_gcd(g) > 1
    with pytest.raises(NotAgwError):
        find_synchronizing_coloring(g)
    assert not has_synchronizing_coloring(g)


def test_not_agw_reasons():
    with pytest.raises(NotAgwError):
        find_stable_coloring(Digraph.from_lists([[0, 0], [1, 1]]))
    with pytest.raises(NotAgwError):
        find_stable_coloring(Digraph.from_lists([[1, 0], [0]]))


def _theorem_sample(rng, count):
    for _ in range(count):
        g = random_uniform_digraph(rng, rng.randint(2, 5), 2)
        k = cycle_gcd(g)
        if k == 1:
            coloring, relation = find_stable_coloring(g)
            check_relation(g, coloring, relation)
            coloring = find_synchronizing_coloring(g)
            assert is_synchronizing(apply_coloring(g, coloring))
        else:
            with pytest.raises(NotAgwError):
                find_synchronizing_coloring(g)
            assert not has_synchronizing_coloring(g)


def test_synchronizing_coloring_iff_gcd_one(rng):
    _theorem_sample(rng, 200)


@pytest.mark.slow
def test_synchronizing_coloring_larger_graphs():
    rng = random.Random(5)
    for _ in range(100):
        g = random_uniform_digraph(rng, rng.randint(6, 14), rng.randint(2, 3))
        if cycle_gcd(g) == 1:
            coloring = find_synchronizing_coloring(g, seed=3)
            assert is_synchronizing(apply_coloring(g, coloring))


def test_coloring_is_seed_deterministic(rng):
    g = random_uniform_digraph(rng, 9, 2)
    if cycle_gcd(g) == 1:
        assert find_synchronizing_coloring(g, seed=4) == find_synchronizing_coloring(g, seed=4)


def test_k_sync_doubled_cycle():
    g = Digraph.from_lists([[1, 1], [2, 2], [3, 3], [0, 0]])
    res = find_k_sync_coloring(g)
    assert res.k == 4
    assert res.automaton.word_mask(0b1111, res.witness).bit_count() == 4


def test_k_sync_two_vertices():
    res = find_k_sync_coloring(Digraph.from_lists([[1, 1], [0, 0]]))
    assert res.k == 2


def test_k_sync_bipartite():
    g = Digraph.from_lists([[2, 3], [2, 3], [0, 1], [0, 1]])
    res = find_k_sync_coloring(g)
    assert res.k == 2
    assert res.automaton.word_mask(0b1111, res.witness).bit_count() == 2
    assert min_image_word(res.automaton)[1] == 2


def test_k_sync_on_agw_graph_synchronizes(sample6):
    res = find_k_sync_coloring(forget_colors(sample6))
    assert res.k == 1
    assert is_synchronizing_word(res.automaton, res.witness)


def test_k_sync_errors():
    with pytest.raises(NotStronglyConnectedError):
        find_k_sync_coloring(Digraph.from_lists([[0, 0], [1, 1]]))
    with pytest.raises(NonUniformOutdegreeError):
        find_k_sync_coloring(Digraph.from_lists([[1, 0], [0]]))


def test_k_sync_random(rng):
    for _ in range(100):
        n = rng.randint(2, 12)
        if rng.random() < 0.5:
            g = random_uniform_digraph(rng, n, 2)
        else:
            g = random_periodic_digraph(rng, n, rng.randint(2, min(4, n)), 2)
        res = find_k_sync_coloring(g)
        assert res.k == cycle_gcd(g)
        full = (1 << g.n) - 1
        assert res.automaton.word_mask(full, res.witness).bit_count() == res.k
        assert min_image_word(res.automaton)[1] == res.k
        k, level = period_classes(g)
        image = res.automaton.word_mask(full, res.witness)
        assert sorted(level[v] for v in range(g.n) if image >> v & 1) == list(range(k))


@pytest.fixture
def recorded_quotients(monkeypatch):
    '''Все фактор-графы, построенные при рекурсии'''
    seen = []
    original = road_coloring.quotient

    def recording(a, relation):
        assert relation.congruence_violations(a) == []
        q = original(a, relation)
        seen.append(q)
        return q

    monkeypatch.setattr(road_coloring, "quotient", recording)
    return seen


def test_every_quotient_is_agw(rng, recorded_quotients):
    graphs = 0
    while graphs < 40:
        g = random_uniform_digraph(rng, rng.randint(3, 10), 2)
        if cycle_gcd(g) != 1:
            continue
        graphs += 1
        start = len(recorded_quotients)
        coloring = find_synchronizing_coloring(g)
        assert is_synchronizing(apply_coloring(g, coloring))
        produced = recorded_quotients[start:]
        assert produced
        assert [q.n for q in produced] == sorted((q.n for q in produced), reverse=True)
        for q in produced:
            assert is_agw(q)
            assert q.require_uniform() == g.require_uniform()


def test_every_quotient_keeps_period(rng, recorded_quotients):
    for _ in range(30):
        n = rng.randint(4, 10)
        g = random_periodic_digraph(rng, n, rng.randint(2, min(4, n)), 2)
        start = len(recorded_quotients)
        res = find_k_sync_coloring(g)
        for q in recorded_quotients[start:]:
            assert is_strongly_connected(q)
            assert cycle_gcd(q) == res.k
            assert q.n >= res.k


def test_broken_quotient_is_reported(monkeypatch):
    g = Digraph.from_lists([[1, 2], [2, 0], [0, 0]])
    monkeypatch.setattr(
        road_coloring, "quotient", lambda a, relation: Digraph.from_lists([[0, 0], [0, 0]])
    )
    with pytest.raises(SearchExhaustedError):
        find_synchronizing_coloring(g)
