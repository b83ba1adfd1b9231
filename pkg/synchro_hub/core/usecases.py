from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from synchro_hub.core.exact import (
    SearchResult,
    bfs_oracle_search,
    minimal_sync_search,
)
from synchro_hub.core.exceptions import NotSynchronizingError
from synchro_hub.core.graphs import cycle_gcd, scc, sink_components
from synchro_hub.core.models import (
    Automaton,
    Word,
    apply_coloring,
    forget_colors,
    transition_digraph,
)
from synchro_hub.core.road_coloring import (
    ColoringResult,
    find_k_sync_coloring,
    find_synchronizing_coloring,
)
from synchro_hub.core.semigroup import SemigroupTable, enumerate_semigroup
from synchro_hub.core.survey import SurveyReport, survey_automata
from synchro_hub.core.strategies import strategy_codes
from synchro_hub.core.sync import greedy_sync_word, is_synchronizing
from synchro_hub.core.testas import automaton_from_dict, parse_testas
from synchro_hub.core.utils import read_source, write_text
from synchro_hub.decorators import log_action
from synchro_hub.infra.settings import SettingsLoader
from synchro_hub.layout_service.config import LayoutConfig
from synchro_hub.layout_service.layout import compute_layout
from synchro_hub.layout_service.svg import render_svg
from synchro_hub.logging_config import setup_logging


@dataclass(frozen=True)
class AutomatonInfo:
    n: int
    d: int
    missing: int
    edges: int
    outdegree: Optional[int]
    scc_sizes: Tuple[int, ...]
    sinks: Tuple[Tuple[int, ...], ...]
    cycle_gcd: int

    @property
    def complete(self) -> bool:
        return self.missing == 0

    @property
    def strongly_connected(self) -> bool:
        return len(self.scc_sizes) == 1

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "d": self.d,
            "complete": self.complete,
            "missing": self.missing,
            "edges": self.edges,
            "outdegree": self.outdegree,
            "strongly_connected": self.strongly_connected,
            "scc_sizes": list(self.scc_sizes),
            "sinks": [list(c) for c in self.sinks],
            "cycle_gcd": self.cycle_gcd,
        }


class SynchroApp:
    """
    load, info, check, word, minword, semigroup, gcd, roadcolor, ksync, layout,
    survey
    """

    def __init__(self, seed: Optional[int] = None) -> None:
        setup_logging()

        self._settings = SettingsLoader()
        self._source: Optional[str] = None
        self._seed = int(self._settings.get("DEFAULT_SEED", 0)) if seed is None else seed

    @property
    def seed(self) -> int:
        return self._seed

    def _coloring_options(self) -> Dict[str, int]:
        return {
            "seed": self._seed,
            "restarts": int(self._settings.get("RANDOM_RESTARTS", 2000)),
            "exhaustive_limit": int(
                self._settings.get("EXHAUSTIVE_COLORING_LIMIT", 50_000)
            ),
        }

    @log_action("LOAD")
    def load(self, source: str, strict: bool = True) -> Automaton:
        """
        Читает автомат из файла TESTAS ('-' - стандартный ввод) или из
        JSON-зеркала, если имя оканчивается на .json.
        """
        text = read_source(source)
        self._source = source
        if source.endswith(".json"):
            return automaton_from_dict(json.loads(text))
        return parse_testas(text, strict=strict)

    @log_action("INFO")
    def info(self, a: Automaton) -> AutomatonInfo:
        g = transition_digraph(a)
        part = scc(g)
        sinks = tuple(part.components[c] for c in sink_components(part))
        return AutomatonInfo(
            n=a.n,
            d=a.d,
            missing=a.missing_count(),
            edges=g.edge_count,
            outdegree=g.uniform_outdegree(),
            scc_sizes=part.sizes,
            sinks=sinks,
            cycle_gcd=cycle_gcd(g),
        )

    @log_action("CHECK")
    def check(self, a: Automaton) -> bool:
        """
        Полный автомат проверяется по таблице пар, неполный - точным поиском.
        """
        if a.is_complete():
            return is_synchronizing(a)
        try:
            minimal_sync_search(a)
        except NotSynchronizingError:
            return False
        return True

    @log_action("WORD", verbose=True)
    def word(self, a: Automaton, algo: Optional[str] = None) -> Word:
        algo = (algo or self._settings.get("DEFAULT_ALGO", "B")).strip().upper()
        return greedy_sync_word(a, algo)

    @log_action("WORD_ALL")
    def compare_words(self, a: Automaton) -> List[Tuple[str, Word]]:
        """
        Слова всех жадных вариантов для сравнения длин.
        """
        return [(code, greedy_sync_word(a, code)) for code in strategy_codes()]

    @log_action("MINWORD", verbose=True)
    def minword(self, a: Automaton, oracle: bool = False,
                cap: Optional[int] = None) -> SearchResult:
        if oracle:
            cap = int(self._settings.get("ORACLE_CAP", 20)) if cap is None else cap
            return bfs_oracle_search(a, cap=cap)
        return minimal_sync_search(a)

    @log_action("SEMIGROUP", verbose=True)
    def semigroup(self, a: Automaton, cap: Optional[int] = None) -> SemigroupTable:
        cap = int(self._settings.get("SEMIGROUP_CAP", 1_000_000)) if cap is None else cap
        return enumerate_semigroup(a, cap=cap)

    @log_action("GCD")
    def gcd(self, a: Automaton) -> int:
        return cycle_gcd(transition_digraph(a))

    @log_action("ROADCOLOR")
    def roadcolor(self, a: Automaton) -> ColoringResult:
        """
        Синхронизирующая перекраска графа переходов автомата.
        """
        g = forget_colors(a)
        coloring = find_synchronizing_coloring(g, **self._coloring_options())
        recolored = apply_coloring(g, coloring)
        witness = greedy_sync_word(recolored, "B")
        return ColoringResult(k=1, coloring=coloring, witness=witness,
                              automaton=recolored)

    @log_action("KSYNC")
    def ksync(self, a: Automaton) -> ColoringResult:
        g = forget_colors(a)
        return find_k_sync_coloring(
            g,
            min_image_cap=int(self._settings.get("MIN_IMAGE_CAP", 16)),
            **self._coloring_options(),
        )

    @log_action("LAYOUT", verbose=True)
    def layout(self, a: Automaton, out: Optional[str] = None,
               width: Optional[int] = None) -> str:
        """
        SVG раскладки; при out записывает файл.
        """
        config = LayoutConfig() if width is None else LayoutConfig(WIDTH=width)
        svg = render_svg(compute_layout(a, config), config)
        if out:
            write_text(Path(out), svg)
        return svg

    @log_action("SURVEY", verbose=True)
    def survey(self, n: int, d: int, samples: Optional[int] = None) -> SurveyReport:
        """
        Перебор или выборка полных автоматов: самое длинное кратчайшее
        слово и качество жадных вариантов.
        """
        samples = int(self._settings.get("SURVEY_SAMPLES", 500)) if samples is None else samples
        return survey_automata(
            n, d,
            samples=samples,
            seed=self._seed,
            max_states=int(self._settings.get("SURVEY_MAX_STATES", 10)),
        )
