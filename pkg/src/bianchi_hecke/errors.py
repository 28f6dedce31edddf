"""Exception hierarchy.

Domain errors are caused by bad input (a composite "prime", an unsupported
group type) and map to CLI exit code 2.  Invariant errors mean an internal
consistency check failed and map to exit code 1.
"""


class DomainError(ValueError):
    pass


class InvariantError(RuntimeError):
    pass


class NotPrime(DomainError):
    def __init__(self, value, witness=None):
        self.value = value
        self.witness = witness
        msg = f"{value} is not prime in Z[i]"
        if witness is not None:
            msg += f" (factor {witness[0]} * {witness[1]})"
        super().__init__(msg)


class NotPrimePower(DomainError):
    pass


class ParseError(DomainError):
    def __init__(self, text, position, reason):
        self.text = text
        self.position = position
        super().__init__(f"cannot parse {text!r} at position {position}: {reason}")


class UnknownType(DomainError):
    pass


class NotClosed(DomainError):
    pass


class NotSubgroup(DomainError):
    pass


class NotIsomorphism(DomainError):
    pass


class DimensionTooHigh(DomainError):
    pass


class NotAComplex(InvariantError):
    pass


class ComplexInconsistent(InvariantError):
    pass


class NotChainMap(InvariantError):
    def __init__(self, message, degree=None, block=None):
        self.degree = degree
        self.block = block
        super().__init__(message)


class TransversalInvalid(InvariantError):
    pass


class NoCoset(InvariantError):
    pass
