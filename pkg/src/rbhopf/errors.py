class RBError(Exception):
    """Base class for errors raised by this package."""


class AdjacentBrackets(RBError, ValueError):
    def __init__(self, position: int):
        self.position = position
        super().__init__("two adjacent brackets at item %d" % position)


class EmptyWord(RBError, ValueError):
    def __init__(self, what: str = "operation"):
        super().__init__("%s is undefined on the empty word 1" % what)


class WeightNotZero(RBError, ValueError):
    def __init__(self, mode):
        super().__init__(
            "the antipode and grading checks require weight 0 (got %s); whether the "
            "algebra is Hopf at nonzero weight is an open problem" % (mode,)
        )


class ParseError(RBError, ValueError):
    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__("%s at offset %d" % (message, position))


class UnknownIdentifier(ParseError):
    def __init__(self, name: str, position: int):
        self.name = name
        super().__init__("unknown identifier %r" % name, position)


class EvalError(RBError, ValueError):
    pass
