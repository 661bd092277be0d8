from dataclasses import dataclass
import numpy as np


@dataclass(frozen=True)
class SpectralDecomposition(object):
    """Spectral decomposition A = V^T diag(lambda) V of a real symmetric matrix

    eigenvalues are ascending; the ROWS of eigenvectors are the eigenvectors.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def p(self):
        return self.eigenvalues.shape[0]

    def reconstruct(self):
        """Returns V^T diag(lambda) V"""
        V = self.eigenvectors
        return (V.T * self.eigenvalues) @ V

    def project(self, w):
        """Coordinates of w in the eigenbasis, V w"""
        return self.eigenvectors @ np.asarray(w, dtype=float)


@dataclass(frozen=True)
class CovarianceSet(object):
    """Centered and uncentered sample covariance matrices in whitened coordinates

    sCentered = (1/n) sum_j B(x_j - xbar)(x_j - xbar)^T B^T,
    sUncentered = (1/n) sum_j B x_j x_j^T B^T,
    relationResidual = max |sCentered - (sUncentered - Bxbar Bxbar^T)|.
    """

    sCentered: np.ndarray
    sUncentered: np.ndarray
    relationResidual: float


@dataclass(frozen=True)
class WeightedESD(object):
    """Spectral distribution placing mass weights[j] at lambdas[j]"""

    lambdas: np.ndarray
    weights: np.ndarray

    @property
    def totalMass(self):
        return float(np.sum(self.weights))

    def cdf(self, x):
        """F(x) = sum_j weights_j I(lambda_j <= x), vectorized over x"""
        x = np.asarray(x, dtype=float)
        return np.sum(self.weights * (self.lambdas <= x[..., None]), axis=-1)

    def massOutside(self, lo, hi):
        """Mass carried by eigenvalues outside [lo, hi]"""
        outside = (self.lambdas < lo) | (self.lambdas > hi)
        return float(np.sum(self.weights[outside]))
