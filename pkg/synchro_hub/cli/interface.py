# synchro_hub/cli/interface.py
from __future__ import annotations

import json
import sys
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

from prettytable import PrettyTable

from synchro_hub.core.exceptions import (
    NotAgwError,
    NotStronglyConnectedError,
    NotSynchronizingError,
    SynchroError,
)
from synchro_hub.core.models import Automaton
from synchro_hub.core.semigroup import render_semigroup
from synchro_hub.core.strategies import get_strategy
from synchro_hub.core.testas import automaton_to_dict, serialize_testas
from synchro_hub.core.usecases import SynchroApp
from synchro_hub.core.utils import format_word

COMMANDS = (
    "info", "check", "word", "minword", "semigroup",
    "gcd", "roadcolor", "ksync", "layout", "survey",
)

#команды без входного файла
SOURCELESS = {"survey"}

#флаги без значения
BOOL_FLAGS = {"oracle", "json", "lenient"}

HELP = (
    "Команды:\n"
    "  info <file>\n"
    "  check <file>\n"
    "  word <file> [--algo A|B|C|all]\n"
    "  minword <file> [--oracle] [--cap <int>]\n"
    "  semigroup <file> [--cap <int>]\n"
    "  gcd <file>\n"
    "  roadcolor <file> [--seed <int>]\n"
    "  ksync <file> [--seed <int>]\n"
    "  layout <file> [--out <file.svg>] [--width <px>]\n"
    "  survey --n <int> --d <int> [--samples <int>] [--seed <int>]\n"
    "\n"
    "Общие флаги: --json, --lenient, --seed <int>.\n"
    "Вместо <file> можно указать '-' для стандартного ввода.\n"
    "survey перебирает все таблицы, если их не больше --samples."
)


@dataclass
class CommandResult:
    """
    0 - успех, 1 - отрицательный ответ, 2 - ошибка ввода или вызова.
    """

    exit_code: int
    report: str
    payload: Optional[Dict[str, Any]] = None


class UsageError(Exception):
    pass


def _parse_flags(tokens: Sequence[str]) -> Tuple[str, List[str], Dict[str, str]]:
    """
    Парсит команду, позиционные аргументы и флаги из списка.
    """
    if not tokens:
        return "", [], {}
    cmd = tokens[0]
    positionals: List[str] = []
    args: Dict[str, str] = {}
    i = 1
    while i < len(tokens):
        t = tokens[i]
        if t.startswith("--"):
            key = t[2:]
            val = ""
            if (key not in BOOL_FLAGS and i + 1 < len(tokens)
                    and not tokens[i + 1].startswith("--")):
                val = tokens[i + 1]
                i += 2
            else:
                i += 1
            args[key] = val
        else:
            positionals.append(t)
            i += 1
    return cmd, positionals, args


def _safe_int(args: Dict[str, str], key: str) -> Optional[int]:
    """
    Безопасная конвертация значения флага
    """
    if key not in args:
        return None
    try:
        return int(args[key])
    except (TypeError, ValueError):
        raise UsageError(f"Некорректное число для --{key}")


def _result(args: Dict[str, str], code: int, report: str,
            payload: Dict[str, Any]) -> CommandResult:
    if "json" in args:
        return CommandResult(code, json.dumps(payload, ensure_ascii=False, indent=2),
                             payload)
    return CommandResult(code, report, payload)


def _word_payload(word: Sequence[int]) -> Dict[str, Any]:
    return {"word": format_word(word), "letters": list(word), "length": len(word)}


def _info_report(app: SynchroApp, a: Automaton) -> Tuple[str, Dict[str, Any]]:
    info = app.info(a)
    table = PrettyTable(["Свойство", "Значение"])
    table.align = "l"
    table.add_row(["вершин", info.n])
    table.add_row(["букв", info.d])
    table.add_row(["полный", "да" if info.complete else f"нет (пустых ячеек: {info.missing})"])
    table.add_row(["ребер", info.edges])
    table.add_row(["полустепень исхода",
                   "разная" if info.outdegree is None else info.outdegree])
    table.add_row(["сильно связен", "да" if info.strongly_connected else "нет"])
    table.add_row(["размеры компонент", " ".join(map(str, info.scc_sizes))])
    table.add_row(["стоковая компонента",
                   " ".join(map(str, info.sinks[0])) if info.sinks else "нет"])
    table.add_row(["НОД длин циклов", info.cycle_gcd])
    report = table.get_string()
    if not info.strongly_connected:
        report += "\n" + _sink_hint(info.sinks)
    return report, info.to_dict()


def _sink_hint(sinks: Tuple[Tuple[int, ...], ...]) -> str:
    if sinks:
        states = " ".join(map(str, sinks[0]))
        return ("Граф не сильно связен: раскраску можно искать для стоковой "
                f"компоненты ({states}).")
    return "Граф не сильно связен и не имеет единственной стоковой компоненты."


def _compare_report(app: SynchroApp, a: Automaton) -> Tuple[str, Dict[str, Any]]:
    rows = app.compare_words(a)
    limit = a.n * a.n
    table = PrettyTable(["Вариант", "Длина", "Слово", "> n^2"])
    table.align["Слово"] = "l"
    payload: Dict[str, Any] = {"n": a.n, "variants": {}}
    for code, word in rows:
        table.add_row([get_strategy(code).describe(), len(word), format_word(word),
                       "да" if len(word) > limit else ""])
        payload["variants"][code] = _word_payload(word)
    return table.get_string(), payload


def _survey_report(app: SynchroApp, args: Dict[str, str]) -> CommandResult:
    n = _safe_int(args, "n")
    d = _safe_int(args, "d")
    if n is None or d is None:
        raise UsageError("Для survey нужны --n и --d")
    report = app.survey(n=n, d=d, samples=_safe_int(args, "samples"))

    mode = "все таблицы" if report.exhaustive else "случайная выборка"
    lines = [
        f"n={report.n} d={report.d} ({mode}): проверено {report.checked}, "
        f"синхронизируемых {report.synchronizing}",
        f"самое длинное кратчайшее слово: {report.longest} "
        f"(граница (n-1)^2 = {report.cerny_bound})",
    ]
    if report.longest_automaton is not None:
        lines.append(serialize_testas(report.longest_automaton))
        lines.append(format_word(report.longest_word))

    table = PrettyTable(["Вариант", "Кратчайших", "Среднее превышение",
                         "Макс. превышение", "Макс. длина"])
    for code, stats in report.greedy.items():
        table.add_row([
            get_strategy(code).describe(),
            f"{stats.optimal}/{report.synchronizing}",
            f"{report.mean_excess(code):.2f}",
            stats.max_excess,
            stats.longest,
        ])
    lines.append(table.get_string())
    return _result(args, 0, "\n".join(lines), report.to_dict())


def _coloring_payload(result: Any) -> Dict[str, Any]:
    return {
        "k": result.k,
        "automaton": serialize_testas(result.automaton),
        "table": automaton_to_dict(result.automaton),
        "coloring": [list(r) for r in result.coloring.slots],
        "witness": _word_payload(result.witness),
    }


def _dispatch(app: SynchroApp, cmd: str, a: Automaton,
              args: Dict[str, str]) -> CommandResult:
    if cmd == "info":
        report, payload = _info_report(app, a)
        return _result(args, 0, report, payload)

    if cmd == "check":
        ok = app.check(a)
        text = "synchronizing" if ok else "not synchronizing"
        return _result(args, 0 if ok else 1, text, {"synchronizing": ok})

    if cmd == "word":
        algo = args.get("algo") or None
        if algo and algo.lower() == "all":
            report, payload = _compare_report(app, a)
            return _result(args, 0, report, payload)
        word = app.word(a, algo=algo)
        return _result(args, 0, f"{format_word(word)}\nlength: {len(word)}",
                       _word_payload(word))

    if cmd == "minword":
        res = app.minword(a, oracle="oracle" in args, cap=_safe_int(args, "cap"))
        payload = _word_payload(res.word)
        payload["stats"] = res.stats.to_dict()
        report = (
            f"{format_word(res.word)}\n"
            f"length: {res.length}\n"
            f"nodes expanded: {res.stats.expanded}"
        )
        return _result(args, 0, report, payload)

    if cmd == "semigroup":
        t = app.semigroup(a, cap=_safe_int(args, "cap"))
        payload = {"size": t.size, "generators": t.generators,
                   "cells": [list(r) for r in t.cells]}
        return _result(args, 0, render_semigroup(t), payload)

    if cmd == "gcd":
        k = app.gcd(a)
        return _result(args, 0, str(k), {"gcd": k})

    if cmd == "roadcolor":
        res = app.roadcolor(a)
        report = f"{serialize_testas(res.automaton)}\n{format_word(res.witness)}"
        return _result(args, 0, report, _coloring_payload(res))

    if cmd == "ksync":
        res = app.ksync(a)
        report = (
            f"k: {res.k}\n"
            f"{serialize_testas(res.automaton)}\n"
            f"{format_word(res.witness)}"
        )
        return _result(args, 0, report, _coloring_payload(res))

    if cmd == "layout":
        out = args.get("out") or None
        svg = app.layout(a, out=out, width=_safe_int(args, "width"))
        report = f"SVG записан в {out}" if out else svg
        return _result(args, 0, report, {"out": out, "bytes": len(svg)})

    raise UsageError(f"Неизвестная команда '{cmd}'")


def run(argv: Sequence[str]) -> CommandResult:
    """
    Выполняет одну команду и возвращает код выхода и отчет.
    """
    cmd, positionals, args = _parse_flags(list(argv))
    if cmd in ("", "help", "--help"):
        return CommandResult(0 if cmd else 2, HELP)
    if cmd not in COMMANDS:
        return CommandResult(2, f"Ошибка: неизвестная команда '{cmd}'\n{HELP}")
    if cmd in SOURCELESS:
        if positionals:
            return CommandResult(2, f"Ошибка: {cmd} не принимает файл\n{HELP}")
    elif len(positionals) != 1:
        return CommandResult(2, f"Ошибка: нужен ровно один файл или '-'\n{HELP}")

    try:
        app = SynchroApp(seed=_safe_int(args, "seed"))
        if cmd in SOURCELESS:
            return _survey_report(app, args)
        a = app.load(positionals[0], strict="lenient" not in args)
        return _dispatch(app, cmd, a, args)

    except NotSynchronizingError as e:
        return _result(args, 1, f"not synchronizing: {e}", {"synchronizing": False})
    except NotAgwError as e:
        return _result(args, 1, f"not colorable: {e}", {"colorable": False})
    except NotStronglyConnectedError as e:
        if cmd != "ksync":
            return CommandResult(2, f"Ошибка: {e}")
        part_hint = _sink_hint(app.info(a).sinks)
        return _result(args, 1, f"not colorable: {e}\n{part_hint}",
                       {"colorable": False})
    except (SynchroError, UsageError, ValueError) as e:
        return CommandResult(2, f"Ошибка: {e}")
    except OSError as e:
        return CommandResult(2, f"Ошибка: не удалось прочитать файл: {e}")


def run_cli() -> None:
    """
    Запускает CLI Synchro Hub: одна команда на процесс.
    """
    result = run(sys.argv[1:])
    stream = sys.stderr if result.exit_code == 2 else sys.stdout
    print(result.report, file=stream)
    sys.exit(result.exit_code)
