#!/usr/bin/env python3
"""
Точка входа в проект.
"""

from synchro_hub.cli.interface import run_cli


def main() -> None:
    run_cli()


if __name__ == "__main__":
    main()
