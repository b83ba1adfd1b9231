from __future__ import annotations

import logging
from typing import List, Optional

from synchro_hub.core.exceptions import NotSynchronizingError
from synchro_hub.core.models import Automaton, Word, mask_members
from synchro_hub.core.pairs import PairTable, build_pair_table
from synchro_hub.core.strategies import get_strategy

logger = logging.getLogger(__name__)


def is_synchronizing(a: Automaton, table: Optional[PairTable] = None) -> bool:
    """
    Полный автомат синхронизируем тогда и только тогда, когда каждую
    пару состояний можно склеить.
    """
    a.require_complete()
    if a.n == 1:
        return True
    table = table or build_pair_table(a)
    return table.all_mergeable()


def shortest_merging_word(a: Automaton, p: int, q: int,
                          table: Optional[PairTable] = None) -> Word:
    if p == q:
        a.require_complete()
        return ()
    table = table or build_pair_table(a)
    return table.merging_word(a, p, q)


def greedy_sync_word(a: Automaton, variant: str = "B",
                     table: Optional[PairTable] = None) -> Word:
    """
    Синхронизирующее слово одним из жадных вариантов A, B, C.
    """
    strategy = get_strategy(variant)
    a.require_complete()
    if a.n == 1:
        return ()

    table = table or build_pair_table(a)
    if not table.all_mergeable():
        p, q = table.unmergeable_pairs()[0]
        raise NotSynchronizingError(f"пару ({p}, {q}) нельзя склеить")

    mask = (1 << a.n) - 1
    word: List[int] = []
    while mask.bit_count() > 1:
        members = mask_members(mask)
        step = strategy.next_word(a, table, members)
        word.extend(step)
        mask = a.word_mask(mask, step)

    logger.debug(f"greedy {strategy.code}: n={a.n} length={len(word)}")
    return tuple(word)
