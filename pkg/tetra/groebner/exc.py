class NotHomogeneous(ValueError):
    pass


class PositiveDimensional(ValueError):
    pass


class PointNotOnVariety(ValueError):
    pass


class ZeroIdeal(ValueError):
    pass


class InvalidBlock(KeyError):
    pass
