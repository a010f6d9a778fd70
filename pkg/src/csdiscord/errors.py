"""Exception types raised by csdiscord."""


class CSDiscordError(ValueError):
    """Base class for all csdiscord errors."""


class NotHermitian(CSDiscordError):
    def __init__(self, residual, index=None):
        self.residual = float(residual)
        self.index = index
        super().__init__(f"matrix is not Hermitian: max |m - m^H| = {self.residual:.3e} at {index}")


class TraceNotOne(CSDiscordError):
    def __init__(self, trace):
        self.trace = trace
        self.residual = abs(trace - 1.0)
        super().__init__(f"trace is {trace!r}, |tr - 1| = {self.residual:.3e}")


class NotPSD(CSDiscordError):
    def __init__(self, eigenvalue):
        self.eigenvalue = float(eigenvalue)
        self.residual = -self.eigenvalue
        super().__init__(f"matrix is not positive semidefinite: eigenvalue {self.eigenvalue:.6e}")


class NotCentrosymmetric(CSDiscordError):
    def __init__(self, residual, index):
        self.residual = float(residual)
        self.index = index
        super().__init__(
            f"matrix is not centrosymmetric: max violation {self.residual:.3e} at entry {index}"
        )


class NotXForm(CSDiscordError):
    def __init__(self, residual, index):
        self.residual = float(residual)
        self.index = index
        super().__init__(f"matrix is not of X form: |rho{index}| = {self.residual:.3e}")


class NotUnitary(CSDiscordError):
    def __init__(self, residual):
        self.residual = float(residual)
        super().__init__(f"matrix is not unitary: max |U^H U - I| = {self.residual:.3e}")


class NoConvergence(CSDiscordError, ArithmeticError):
    pass


class DomainError(CSDiscordError):
    pass


class NegativeEigenvalue(DomainError):
    def __init__(self, eigenvalue):
        self.eigenvalue = float(eigenvalue)
        super().__init__(f"eigenvalue {self.eigenvalue:.6e} is below the clamp threshold")


class AnalyticNotApplicable(CSDiscordError):
    """The state does not reduce to the real-X family with equal middle diagonals."""


class ParseError(CSDiscordError):
    pass
