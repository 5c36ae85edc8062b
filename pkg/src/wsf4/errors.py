"""Exception hierarchy shared by all wsf4 modules."""


class WSF4Error(Exception):
    """Base class for all library errors."""


class NonDominant(WSF4Error):
    """Weight is not dominant with respect to the simple roots."""


class DimensionBoundExceeded(WSF4Error):
    """Requested representation is larger than the configured bound."""


class DecompositionFailure(WSF4Error):
    """Highest-weight stripping produced a negative multiplicity."""


class NonRegularMu(WSF4Error):
    """Coweight pairs to zero with some root; the alternating-sum engine degenerates."""


class PositivityViolation(WSF4Error):
    """Some embedding weight <w, mu> + u is not strictly positive."""


class WeightsNotIntegral(WSF4Error):
    """Embedding weights are half-integers (coordinate sum of mu is odd)."""


class NonExactDivision(WSF4Error):
    """Exact polynomial division left a nonzero remainder (internal bug)."""


class NonIntegralGrading(WSF4Error):
    """Series has half-integer exponents and cannot be expanded termwise."""


class NoMatchingGenerator(WSF4Error):
    """A quasilinear section asked for a generator weight that is absent."""


class PoleOrderMismatch(WSF4Error):
    """Numerator does not vanish at t=1 to the order required by the dimension."""


class NotZeroDimensional(WSF4Error):
    """Orbifold-locus series is positive-dimensional."""


class IndexOutOfRange(WSF4Error):
    """Family index outside the supported ladder range."""


class DataCorrupt(WSF4Error):
    """Embedded quadric table fails its checksum."""


class DegreeBoundExceeded(WSF4Error):
    """Graded-piece degree outside the supported desk-scale range."""


class PointNotOnVariety(WSF4Error):
    """Jacobian rank requested at a point where some quadric is nonzero."""
