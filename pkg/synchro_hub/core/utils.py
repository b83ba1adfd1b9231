from __future__ import annotations

import sys
from pathlib import Path
from string import ascii_lowercase
from typing import Iterable


def read_source(source: str) -> str:
    """
    Текст входного файла; '-' означает стандартный ввод.
    """
    if source == "-":
        return sys.stdin.read()
    return Path(source).read_text(encoding="utf-8")


def write_text(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")


def letter_name(letter: int) -> str:
    """
    a, b, c, ... для первых 26 букв, дальше '<индекс>'.
    """
    if letter < len(ascii_lowercase):
        return ascii_lowercase[letter]
    return f"<{letter}>"


def format_word(word: Iterable[int]) -> str:
    text = "".join(letter_name(x) for x in word)
    return text if text else "(empty)"

