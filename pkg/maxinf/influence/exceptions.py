class InfluenceError(Exception):
    """Base class for errors raised by the influence library."""


class GraphParseError(InfluenceError):
    def __init__(self, line_number, message):
        self.line_number = line_number
        super().__init__(f'line {line_number}: {message}')


class DomainError(InfluenceError, ValueError):
    pass


class BoundsError(InfluenceError, IndexError):
    pass


class SketchStateError(InfluenceError):
    pass


class CapacityError(InfluenceError):
    def __init__(self, message, limit):
        self.limit = limit
        super().__init__(f'{message} (limit {limit})')
