'''Registry of standardized entry laws (mean 0, variance 1, finite fourth moment).

Every law carries closed forms for its truncated moments, which the truncation stage
uses for exact centering and rescaling.

Note: Please try to maintain proper documentation
'''

import math
import numpy as np
from scipy import stats
from rmtlab.exceptions import ConfigError

SQRT3 = math.sqrt(3.0)


class EntryDistribution(object):
    """Base class for the entry laws of the raw data matrix X

    Subclasses implement sampling and the moments of X·I(|X| <= t) in closed form.
    """

    kind = None
    fourthMoment = None

    def sample(self, rng, shape):
        raise NotImplementedError

    def truncatedMoments(self, t):
        """Moments of the entry law restricted to |X| <= t

        Arguments:
            t {numpy.ndarray} -- thresholds (may contain +inf)

        Returns:
            mean {numpy.ndarray} -- E[X I(|X| <= t)]
            second {numpy.ndarray} -- E[X^2 I(|X| <= t)]
            tail {numpy.ndarray} -- P(|X| > t)
        """
        raise NotImplementedError

    def tailFourthMoment(self, t):
        """E[X^4 I(|X| > t)], vectorized over thresholds t"""
        raise NotImplementedError

    def __repr__(self):
        return 'EntryDistribution(%s)' % self.kind


class Gaussian(EntryDistribution):

    kind = 'gaussian'
    fourthMoment = 3.0

    def sample(self, rng, shape):
        return rng.standard_normal(shape)

    def truncatedMoments(self, t):
        t = np.asarray(t, dtype=float)
        finite = np.where(np.isinf(t), 0.0, t)
        tail = 2 * stats.norm.sf(t)
        second = (1 - tail) - 2 * finite * stats.norm.pdf(finite)
        second = np.where(np.isinf(t), 1.0, second)
        return np.zeros_like(t), second, tail

    def tailFourthMoment(self, t):
        t = np.asarray(t, dtype=float)
        finite = np.where(np.isinf(t), 0.0, t)
        value = 2 * ((finite ** 3 + 3 * finite) * stats.norm.pdf(finite) + 3 * stats.norm.sf(finite))
        return np.where(np.isinf(t), 0.0, value)


class Rademacher(EntryDistribution):

    kind = 'rademacher'
    fourthMoment = 1.0

    def sample(self, rng, shape):
        return 2.0 * rng.integers(0, 2, size=shape) - 1.0

    def truncatedMoments(self, t):
        t = np.asarray(t, dtype=float)
        kept = (t >= 1.0).astype(float)
        return np.zeros_like(t), kept, 1.0 - kept

    def tailFourthMoment(self, t):
        t = np.asarray(t, dtype=float)
        return (t < 1.0).astype(float)


class UniformUnitVar(EntryDistribution):
    """Uniform law on [-sqrt(3), sqrt(3)]"""

    kind = 'uniform_unit_var'
    fourthMoment = 9.0 / 5.0

    def sample(self, rng, shape):
        return rng.uniform(-SQRT3, SQRT3, size=shape)

    def truncatedMoments(self, t):
        t = np.minimum(np.asarray(t, dtype=float), SQRT3)
        second = t ** 3 / (3 * SQRT3)
        tail = 1.0 - t / SQRT3
        return np.zeros_like(t), second, tail

    def tailFourthMoment(self, t):
        t = np.minimum(np.asarray(t, dtype=float), SQRT3)
        return (9 * SQRT3 - t ** 5) / (5 * SQRT3)


class CenteredExponential(EntryDistribution):
    """Exp(1) - 1, supported on [-1, inf)"""

    kind = 'centered_exponential'
    fourthMoment = 9.0

    def sample(self, rng, shape):
        return rng.standard_exponential(size=shape) - 1.0

    @staticmethod
    def _window(t):
        # |E - 1| <= t  <=>  E in [a, b]
        t = np.asarray(t, dtype=float)
        a = np.maximum(0.0, 1.0 - t)
        b = 1.0 + t
        return a, b

    def truncatedMoments(self, t):
        a, b = self._window(t)
        ea = np.exp(-a)
        eb = np.exp(-b)
        bFinite = np.where(np.isinf(b), 0.0, b)
        mean = a * ea - bFinite * eb
        second = (a ** 2 + 1) * ea - (bFinite ** 2 + 1) * eb
        tail = 1.0 - (ea - eb)
        return mean, second, tail

    def tailFourthMoment(self, t):
        a, b = self._window(t)

        def antiderivative(e):
            y = e - 1
            return -np.exp(-e) * (y ** 4 + 4 * y ** 3 + 12 * y ** 2 + 24 * y + 24)

        bFinite = np.where(np.isinf(b), 0.0, b)
        upper = np.where(np.isinf(b), 0.0, antiderivative(bFinite))
        return self.fourthMoment - (upper - antiderivative(a))


DISTRIBUTIONS = {
    cls.kind: cls for cls in (Gaussian, Rademacher, UniformUnitVar, CenteredExponential)
}


def getDistribution(kind):
    """Returns the registry law for a kind name

    Arguments:
        kind {string} -- one of gaussian, rademacher, uniform_unit_var, centered_exponential

    Returns:
        dist {rmtlab.model.distributions.EntryDistribution} -- the entry law
    """
    if isinstance(kind, EntryDistribution):
        return kind
    try:
        return DISTRIBUTIONS[kind]()
    except KeyError:
        raise ConfigError('unknown entry distribution: %r (expected one of %s)' % (kind, ', '.join(sorted(DISTRIBUTIONS))))
