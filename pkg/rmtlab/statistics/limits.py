'''Gaussian limits of (X_n, Y_n) and of the process (X_n(z), Y_n)
'''

from dataclasses import dataclass
import numpy as np
from rmtlab.config.values import POLE_TOL
from rmtlab.exceptions import InvalidHypothesis, PoleHit


@dataclass(frozen=True)
class LimitCovariance(object):
    gamma1: np.ndarray
    description: str


def gamma1(fAt1, gPrimeAt0):
    """Limiting covariance [[2f(1)^2, 2g'(0)f(1)], [2g'(0)f(1), 2g'(0)^2]]

    Arguments:
        fAt1 {float} -- f(1), nonzero
        gPrimeAt0 {float} -- g'(0), nonzero

    Returns:
        limit {rmtlab.statistics.limits.LimitCovariance}
    """
    if fAt1 == 0 or gPrimeAt0 == 0:
        raise InvalidHypothesis("f(1)=%g and g'(0)=%g must both be nonzero" % (fAt1, gPrimeAt0))
    a = np.array([fAt1, gPrimeAt0], dtype=float)
    return LimitCovariance(gamma1=2 * np.outer(a, a), description="f(1)=%g, g'(0)=%g" % (fAt1, gPrimeAt0))


def limitStieltjes(z):
    """m(z) = 1 / (1 - z), the transform of the point mass at 1"""
    z = np.asarray(z, dtype=complex)
    if np.any(np.abs(z - 1) <= POLE_TOL):
        raise PoleHit('m(z) has a pole at z = 1')
    value = 1 / (1 - z)
    return complex(value) if value.ndim == 0 else value


def limitKernel(z1, z2, gPrimeAt0):
    """Covariance kernel of the limit field (X(z), Y)

    Returns:
        kernel {numpy.ndarray} -- complex 2 x 2 matrix
            [[2 / ((1 - z1)(1 - z2)), 2g'(0) / (1 - z1)], [2g'(0) / (1 - z2), 2g'(0)^2]]
    """
    m1 = limitStieltjes(z1)
    m2 = limitStieltjes(z2)
    return np.array([[2 * m1 * m2, 2 * gPrimeAt0 * m1],
                     [2 * gPrimeAt0 * m2, 2 * gPrimeAt0 ** 2]], dtype=complex)
