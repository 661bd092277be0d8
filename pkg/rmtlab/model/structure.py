from dataclasses import dataclass
import numpy as np
from rmtlab.exceptions import ConfigError, RegimeViolation


def _frozen(array):
    array = np.array(array, dtype=float)
    array.setflags(write=False)
    return array


@dataclass(frozen=True)
class Dimensions(object):
    """Dimensions of the projected model

    p -- reduced dimension, q -- observed dimension, m -- latent dimension, n -- sample size.
    Requires p <= q <= m and p < n.
    """

    p: int
    q: int
    m: int
    n: int

    def __post_init__(self):
        for name in ('p', 'q', 'm', 'n'):
            value = getattr(self, name)
            if int(value) != value or value < 1:
                raise ConfigError('%s must be a positive integer, got %r' % (name, value))
        if not (self.p <= self.q <= self.m):
            raise ConfigError('dimensions must satisfy p <= q <= m, got p=%d q=%d m=%d' % (self.p, self.q, self.m))
        if self.p >= self.n:
            raise RegimeViolation('p=%d must be smaller than n=%d' % (self.p, self.n))

    @property
    def cn(self):
        return self.p / self.n


@dataclass(frozen=True)
class ModelSpec(object):
    """Population objects of the projected model z_j = U mu + U Gamma x_j

    Sigma_p = U Gamma Gamma^T U^T, B = Sigma_p^{-1/2} U Gamma and mu_tilde = Sigma_p^{-1/2} U mu.
    All arrays are read-only so one model can be shared between workers.
    """

    dims: Dimensions
    mu: np.ndarray
    Gamma: np.ndarray
    U: np.ndarray
    SigmaP: np.ndarray
    SigmaPInvSqrt: np.ndarray
    B: np.ndarray
    muTilde: np.ndarray

    def __post_init__(self):
        for name in ('mu', 'Gamma', 'U', 'SigmaP', 'SigmaPInvSqrt', 'B', 'muTilde'):
            object.__setattr__(self, name, _frozen(getattr(self, name)))

    @property
    def columnNormsSquared(self):
        return np.sum(self.B ** 2, axis=0)


@dataclass(frozen=True)
class SampleBatch(object):
    """One draw of n observations

    X -- raw entries (m x n), xbar -- row means, Bxbar -- B xbar,
    zTilde -- whitened observations mu_tilde + B x_j (p x n), zTildeBar -- their mean.
    """

    X: np.ndarray
    xbar: np.ndarray
    Bxbar: np.ndarray
    zTilde: np.ndarray
    zTildeBar: np.ndarray

    def __post_init__(self):
        for name in ('X', 'xbar', 'Bxbar', 'zTilde', 'zTildeBar'):
            object.__setattr__(self, name, _frozen(getattr(self, name)))

    @property
    def n(self):
        return self.X.shape[1]
