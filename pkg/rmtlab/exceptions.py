"""Error kinds raised across rmtlab.

ConfigError subclasses map to CLI exit code 1, NumericalError subclasses to exit code 2.
"""


class RmtlabError(Exception):
    kind = 'rmtlab_error'


class ConfigError(RmtlabError, ValueError):
    kind = 'config_error'


class NumericalError(RmtlabError, ArithmeticError):
    kind = 'numerical_failure'


class RegimeViolation(ConfigError):
    kind = 'regime_violation'


class InvalidHypothesis(ConfigError):
    kind = 'invalid_hypothesis'


class GridTooSmall(ConfigError):
    kind = 'grid_too_small'


class InsufficientSamples(ConfigError):
    kind = 'insufficient_samples'


class InvalidPoint(ConfigError):
    kind = 'invalid_point'


class OffContour(InvalidPoint):
    kind = 'off_contour'


class NotSymmetric(ConfigError):
    kind = 'not_symmetric'


class NotPositiveDefinite(NumericalError):
    kind = 'not_positive_definite'


class DecompositionFailure(NumericalError):
    kind = 'decomposition_failure'


class DegenerateRow(NumericalError):
    kind = 'degenerate_row'


class ZeroVector(NumericalError):
    kind = 'zero_vector'


class ZeroMeanVector(ZeroVector):
    kind = 'zero_mean_vector'


class PoleHit(NumericalError):
    kind = 'pole_hit'


class PathDisagreement(NumericalError):
    kind = 'path_disagreement'


class SpectrumOutsideContour(NumericalError):
    kind = 'spectrum_outside_contour'


class TooManyDegenerate(NumericalError):
    kind = 'too_many_degenerate'


class SingularDirection(NumericalError):
    kind = 'singular_direction'


class QuadratureError(NumericalError):
    kind = 'quadrature_error'
