# synchro_hub/layout_service/config.py
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Tuple

from synchro_hub.infra.settings import SettingsLoader


def _default_width() -> int:
    return int(SettingsLoader().get("LAYOUT_WIDTH", 800))


@dataclass(frozen=True)
class LayoutConfig:
    """
    Геометрия раскладки и палитра букв.
    """

    WIDTH: int = field(default_factory=_default_width)
    MARGIN: float = 30.0

    VERTEX_RADIUS: float = 10.0
    #длина дуги между соседними вершинами на окружности компоненты
    VERTEX_SPACING: float = 45.0
    MIN_SCC_RADIUS: float = 25.0

    LOOP_RATIO: float = 0.5
    PARALLEL_SPREAD: float = 0.3

    #палитра Okabe-Ito
    PALETTE: Tuple[str, ...] = (
        "#0072B2", "#D55E00", "#009E73", "#CC79A7",
        "#E69F00", "#56B4E9", "#F0E442", "#000000",
    )
    DASHES: Tuple[str, ...] = ("", "6 3", "2 2", "8 3 2 3")

    SCC_STROKE: str = "#BBBBBB"
    VERTEX_FILL: str = "#FFFFFF"

    def letter_color(self, letter: int) -> str:
        return self.PALETTE[letter % len(self.PALETTE)]

    def letter_dash(self, letter: int) -> str:
        return self.DASHES[(letter // len(self.PALETTE)) % len(self.DASHES)]
