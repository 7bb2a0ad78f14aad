class BasePointError(ValueError):
    pass


class DegenerateChain(RuntimeError):
    pass


class Inconclusive(RuntimeError):

    def __init__(self, message, last_degree=None):
        self.last_degree = last_degree
        if last_degree is not None:
            message = "%s (last degree tried: %s)" % (message, last_degree)
        super(Inconclusive, self).__init__(message)


class NotBirational(ValueError):
    pass
