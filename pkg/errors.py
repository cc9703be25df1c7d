from typing import Optional, Sequence


class FueterError(Exception):
    """Base class for every error raised by the library."""


class ParseError(FueterError, ValueError):
    pass


class SpecMismatch(FueterError, ValueError):
    pass


class InvalidBasis(FueterError, ValueError):
    pass


class InvalidPartition(FueterError, ValueError):
    pass


class NotAdmissible(FueterError, ValueError):
    pass


class NotDivisible(FueterError, ValueError):
    def __init__(self, index: Optional[int], monomial: Sequence[int], message: str = ""):
        self.index = index
        self.monomial = tuple(monomial)
        if not message:
            message = f"x{index} does not divide monomial {self.monomial}"
        super().__init__(message)


class NotASliceInput(FueterError, ValueError):
    pass


class NotInKernelSA(FueterError, ValueError):
    pass


class InputNotPSlice(FueterError, ValueError):
    pass


class InputDependsOnX0(FueterError, ValueError):
    pass


class BlockSizeTwo(FueterError, ValueError):
    pass


class NotInFP(FueterError, ValueError):
    pass


class NotOddPartition(FueterError, ValueError):
    pass


class VerificationFailed(FueterError, RuntimeError):
    """An identity that must hold exactly was violated."""

    def __init__(self, identity: str, monomial: Optional[Sequence[int]] = None):
        self.identity = identity
        self.monomial = tuple(monomial) if monomial is not None else None
        message = f"identity failed: {identity}"
        if self.monomial is not None:
            message += f" (first offending monomial {self.monomial})"
        super().__init__(message)
