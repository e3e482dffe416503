"""Exception types shared across the package."""


class QSphereError(Exception):
    """Base class for all errors raised by this package."""


class NotPrimeError(QSphereError):
    """The requested field characteristic is not prime."""


class EvenCharacteristicError(QSphereError):
    """The requested field has characteristic 2; only odd q is supported."""


class TooLargeError(QSphereError):
    """A field or enumeration domain exceeds the configured cap."""


class DivisionByZeroError(QSphereError, ZeroDivisionError):
    """Multiplicative inverse of zero requested."""


class DimensionMismatchError(QSphereError):
    """A vector's length does not match the ambient dimension."""


class ParityMismatchError(QSphereError):
    """A form kind was used with a dimension of the wrong parity."""


class DimensionTooSmallError(QSphereError):
    """The closed-form intersection table requires dimension at least 3."""


class SameSphereError(QSphereError):
    """Pairwise intersection of a sphere with itself requested."""


class EqualPointsError(QSphereError):
    """A bisector count needs two distinct points."""


class PNotInRangeError(QSphereError):
    """The density parameter is outside the admissible interval."""


class MixedSphereSizesError(QSphereError):
    """The weighted bound requires all spheres to have equal size."""


class MixedRadiiError(QSphereError):
    """All spheres must share one radius for this decomposition."""


class ZeroScalarError(QSphereError):
    """Dilation by zero is not invertible."""


class OddDimensionError(QSphereError):
    """The isotropic-subspace construction needs even dimension."""


class EvenDimensionError(QSphereError):
    """This construction needs odd dimension."""


class ConfigError(QSphereError):
    """Invalid run configuration (maps to process exit code 2)."""
