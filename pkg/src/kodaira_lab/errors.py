"""Exception types shared across the package."""


class KodairaLabError(Exception):
    """Base class for all package errors."""


class SingularMatrix(KodairaLabError):
    """Exact elimination hit a zero pivot column (determinant is zero)."""


class DimensionMismatch(KodairaLabError):
    """Vector/matrix sizes are incompatible."""


class NotSL2Z(KodairaLabError):
    """Integer 2x2 matrix does not have determinant one."""


class NotKodairaMonodromy(KodairaLabError):
    """SL(2,Z) element is hyperbolic; no degenerate-fiber type matches it."""


class NoExponentData(KodairaLabError):
    """Fiber type has no vanishing-exponent table (it degenerates with
    double-logarithmic poles instead)."""


class OutOfDomain(KodairaLabError):
    """Input left the validity region of a local model."""


class NotInMW0(KodairaLabError):
    """Height pairing requested for a section not flagged as meeting the
    identity component over every point."""


class NonpositiveEpsilon(KodairaLabError):
    """Family parameter epsilon must be positive."""


class DomainError(KodairaLabError):
    """Point lies outside the half-plane/fiber coordinate domain."""


class ConvergenceGuard(KodairaLabError):
    """Series argument too close to the boundary of convergence."""


class PoleHit(KodairaLabError):
    """Series evaluation landed on (or within 1e-12 of) a pole."""


class ZeroChi(KodairaLabError):
    """Formulas requiring a positive Euler-Poincare characteristic."""


class OutOfInterval(KodairaLabError):
    """Parameter t outside the admissible open interval."""


class BadOrder(KodairaLabError):
    """Vanishing order d_p violates the congruence of the fiber type."""


class BadIndex(KodairaLabError):
    """Component index outside the table for this fiber type."""


class DegenerateDenominator(KodairaLabError):
    """Scaling denominator is not positive."""


class ParseError(KodairaLabError):
    """Malformed surface description (carries position information)."""


class ValidationError(KodairaLabError):
    """Surface description violates structural constraints.

    ``problems`` lists every violation found, not just the first.
    """

    def __init__(self, problems):
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))
