"""Exception hierarchy shared by every module."""


class UnivcatError(Exception):
    pass


class BadParameter(UnivcatError, ValueError):
    pass


class PinOutOfRange(UnivcatError, IndexError):
    pass


class EmptyGraph(UnivcatError, ValueError):
    pass


class NotOriented(UnivcatError, ValueError):
    pass


class NotRigid(UnivcatError):
    """A gadget admits a non-identity endomorphism."""


class NotInduced(UnivcatError):
    """A homomorphism of replaced digraphs is not the lift of a base homomorphism."""


class EmbeddingFailed(UnivcatError):
    pass


class NotAHom(UnivcatError, ValueError):
    pass


class NotAMonoid(UnivcatError, ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ArityMismatch(UnivcatError, ValueError):
    pass


class PreconditionFailed(UnivcatError):
    pass


class NotNonstrict(UnivcatError, ValueError):
    pass


class RepresentationFailed(UnivcatError):
    def __init__(self, message, counterexample=None):
        super().__init__(message)
        self.counterexample = counterexample


class SizeBound(UnivcatError):
    pass


class EnumerationTruncated(UnivcatError):
    """Raised where a complete enumeration is required but a limit was hit."""


class ParseError(UnivcatError, ValueError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ConsistencyError(ParseError):
    pass
