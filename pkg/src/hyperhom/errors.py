"""Exception hierarchy shared across the package.

`InputError` marks bad user input (CLI exit code 2); every other
`HyperhomError` marks a failed internal consistency check (exit code 1).
"""


class HyperhomError(Exception):
    pass


class InputError(HyperhomError, ValueError):
    pass


class ParseError(InputError):
    def __init__(self, message, line=None, field=None):
        loc = []
        if line is not None:
            loc.append(f"line {line}")
        if field is not None:
            loc.append(f"field {field!r}")
        if loc:
            message = f"{message} ({', '.join(loc)})"
        super().__init__(message)
        self.line = line
        self.field = field


class SizeCapError(InputError):
    pass


class UnsupportedModeError(InputError):
    pass


class IntegrityError(HyperhomError):
    pass
