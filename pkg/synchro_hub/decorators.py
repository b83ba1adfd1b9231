# @log_action (логирование операций)
from __future__ import annotations

import logging
from functools import wraps
from typing import Any, Callable, List, TypeVar

from synchro_hub.core.models import Automaton, Digraph

T = TypeVar("T")


def _summary(result: Any) -> List[str]:
    """
    Короткое описание результата для строки лога.
    """
    if isinstance(result, bool):
        return [f"answer={result}"]
    if isinstance(result, int):
        return [f"value={result}"]
    if isinstance(result, Automaton):
        return [f"n={result.n}", f"d={result.d}"]
    if isinstance(result, tuple) and all(isinstance(x, int) for x in result):
        return [f"length={len(result)}"]
    parts: List[str] = []
    for attr in ("k", "length", "size", "longest"):
        value = getattr(result, attr, None)
        if isinstance(value, int):
            parts.append(f"{attr}={value}")
    return parts


def log_action(
        action: str,
        verbose: bool = False
    ) -> Callable[[Callable[..., T]], Callable[..., T]]:
    """
    Логирует OK ERROR и пробрасывает исключения дальше.
    Берет имя источника из self._source, а n и d из первого аргумента
    (автомат или граф).
    """
    def decorator(func: Callable[..., T]) -> Callable[..., T]:
        @wraps(func)
        def wrapper(self: Any, *args: Any, **kwargs: Any) -> T:
            logger = logging.getLogger(__name__)

            if args and isinstance(args[0], str):
                source = args[0]
            else:
                source = getattr(self, "_source", None)

            head = [action, f"source='{source}'"]
            target = args[0] if args else None
            if isinstance(target, Automaton):
                head += [f"n={target.n}", f"d={target.d}"]
            elif isinstance(target, Digraph):
                head += [f"n={target.n}"]
            if verbose:
                head += [f"{k}={v!r}" for k, v in kwargs.items()]

            try:
                result = func(self, *args, **kwargs)
                logger.info(" ".join(head + ["result=OK"] + _summary(result)))
                return result

            except Exception as exc:
                logger.info(
                    " ".join(head) + " "
                    f"result=ERROR error_type={type(exc).__name__} "
                    f"error_message='{exc}'"
                )
                raise
        return wrapper
    return decorator
