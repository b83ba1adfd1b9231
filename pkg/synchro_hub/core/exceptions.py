# synchro_hub/core/exceptions.py
# пользовательские исключения

class SynchroError(Exception):
    """
    Базовая ошибка приложения.
    """
    pass


class InputFormatError(SynchroError):
    """
    Ошибки разбора входного файла в формате TESTAS.
    """
    pass


class NonPositiveHeaderError(InputFormatError):
    """
    Размер алфавита или число вершин меньше единицы.
    """
    def __init__(self, d: int, n: int) -> None:
        self.d = d
        self.n = n
        super().__init__(
            f"Заголовок должен содержать положительные числа: d={d}, n={n}"
        )


class MalformedTokenError(InputFormatError):
    """
    Токен не является целым числом или ';'.
    """
    def __init__(self, token: str, position: int) -> None:
        self.token = token
        self.position = position
        super().__init__(f"Некорректный токен '{token}' (позиция {position})")


class TokenCountMismatchError(InputFormatError):
    def __init__(self, expected: int, actual: int) -> None:
        self.expected = expected
        self.actual = actual
        super().__init__(
            f"Ожидалось {expected} ячеек таблицы, получено {actual}"
        )


class TargetOutOfRangeError(InputFormatError):
    """
    Номер вершины в ячейке вне диапазона [0, n).
    """
    def __init__(self, target: int, n: int, state: int, letter: int) -> None:
        self.target = target
        self.n = n
        self.state = state
        self.letter = letter
        super().__init__(
            f"Переход ({state}, {letter}) ведет в {target}, "
            f"допустимы вершины 0..{n - 1}"
        )


class InvalidLetterError(SynchroError):
    def __init__(self, letter: int, d: int) -> None:
        self.letter = letter
        self.d = d
        super().__init__(f"Буква {letter} вне алфавита размера {d}")


class NotCompleteError(SynchroError):
    """
    Операция требует полного автомата (все n*d переходов определены).
    """
    def __init__(self, missing: int) -> None:
        self.missing = missing
        super().__init__(
            f"Автомат неполный: не определено переходов: {missing}"
        )


class NotStronglyConnectedError(SynchroError):
    def __init__(self, components: int) -> None:
        self.components = components
        super().__init__(
            f"Граф не сильно связен (компонент: {components})"
        )


class NonUniformOutdegreeError(SynchroError):
    """
    Полустепени исхода вершин различаются.
    """
    def __init__(self, degrees: set[int]) -> None:
        self.degrees = sorted(degrees)
        super().__init__(
            f"Полустепени исхода не совпадают: {self.degrees}"
        )


class NotSynchronizingError(SynchroError):
    """
    Синхронизирующего слова не существует.
    """
    def __init__(self, reason: str = "") -> None:
        self.reason = reason
        msg = "Автомат не синхронизируем"
        if reason:
            msg += f": {reason}"
        super().__init__(msg)


class NotMergeableError(SynchroError):
    def __init__(self, p: int, q: int) -> None:
        self.p = p
        self.q = q
        super().__init__(f"Состояния {p} и {q} нельзя склеить")


class NotAgwError(SynchroError):
    """
    Граф не является AGW графом, синхронизирующей раскраски нет.
    """
    def __init__(self, reason: str) -> None:
        self.reason = reason
        super().__init__(f"Граф не является AGW графом: {reason}")


class CapExceededError(SynchroError):
    def __init__(self, what: str, cap: int) -> None:
        self.what = what
        self.cap = cap
        super().__init__(f"Превышен предел {cap}: {what}")


class NotCongruenceError(SynchroError):
    """
    Отношение не согласовано с переходами автомата.
    """
    def __init__(self, block: tuple[int, ...], letter: int) -> None:
        self.block = block
        self.letter = letter
        super().__init__(
            f"Класс {list(block)} под буквой {letter} "
            "попадает в разные классы"
        )


class SearchExhaustedError(SynchroError):
    def __init__(self, stage: str) -> None:
        self.stage = stage
        super().__init__(
            f"Поиск раскраски со стабильной парой исчерпан ({stage})"
        )


class UnknownAlgorithmError(SynchroError):
    def __init__(self, code: str) -> None:
        self.code = code
        super().__init__(f"Неизвестный алгоритм '{code}'")
