"""Exception types shared across the engine."""


class FrameDisksError(Exception):
    """Base class for all engine errors."""


class InhomogeneousPolynomial(FrameDisksError):
    """A polynomial whose terms have different degrees where a single
    degree is required."""


class UnknownGenerator(FrameDisksError):
    """An expression refers to a generator the model does not declare."""


class IndexOutOfRange(FrameDisksError):
    """An operation index outside the legal range of the model."""

    def __init__(self, op, i, n):
        self.op = op
        self.i = i
        self.n = n
        bound = "unbounded" if n is None else f"0..{n - 1}"
        super().__init__(f"{op} index {i} outside legal range {bound}")


class MissingActionTable(FrameDisksError):
    """The model has no rule for the requested operation on an element."""


class UnsupportedConfig(FrameDisksError):
    """A model configuration the builders do not support."""


class DepthExceeded(FrameDisksError):
    """A Kudo-Araki word grew beyond the configured depth bound."""


class UnsupportedShape(FrameDisksError):
    """An element outside the grammar a restricted model can evaluate."""


class NotInImageOfJ(FrameDisksError):
    """A degree that does not carry an image-of-J class."""


class EvenIndex(FrameDisksError):
    """A primitive operator was requested at an even index."""


class NotAComplex(FrameDisksError):
    """Differential matrices that do not square to zero."""


class NotChainMap(FrameDisksError):
    """Matrices that do not commute with the differentials."""


class SizeLimitExceeded(FrameDisksError):
    """A brute-force construction over a complex that is too large."""


class ExprSyntaxError(FrameDisksError):
    """Expression text that does not match the grammar."""

    def __init__(self, message, position):
        self.position = position
        super().__init__(f"{message} at offset {position}")
