

class UnknownScenario(KeyError):
    pass


class FixtureError(IOError):
    pass


class GenericityError(RuntimeError):
    pass
