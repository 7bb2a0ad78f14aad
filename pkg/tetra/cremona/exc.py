

class InvalidCenters(ValueError):
    pass


class BasisMismatch(ValueError):
    pass


class ChainScriptError(ValueError):
    pass
