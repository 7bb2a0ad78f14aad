class ParseError(ValueError):

    def __init__(self, message, position=None, text=None):
        self.position = position
        self.text = text
        if position is not None:
            message = "%s (at position %s)" % (message, position)
        super(ParseError, self).__init__(message)


class RingMismatch(ValueError):
    pass


class UnknownVariable(KeyError):
    pass


class LengthMismatch(ValueError):
    pass


class InvalidRing(ValueError):
    pass


class NotParametric(ValueError):
    pass
