class DivisionByZero(ZeroDivisionError):
    pass


class InvalidModulus(ValueError):
    pass


class FieldMismatch(ValueError):
    pass


class ShapeMismatch(ValueError):
    pass
