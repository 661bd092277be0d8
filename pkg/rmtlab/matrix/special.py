'''Resolvent quantities evaluated through a spectral decomposition

Note: one decomposition serves every z, so nothing here forms an explicit inverse.
'''

import numpy as np
from rmtlab.config.values import POLE_TOL
from rmtlab.exceptions import PoleHit
from rmtlab.matrix.structure import SpectralDecomposition
from rmtlab.matrix.operations import eigSym, covarianceSet


def poleCheck(lambdas, z):
    """Raises PoleHit when a real z coincides with one of lambdas"""
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    real = z[z.imag == 0].real
    if real.size and np.min(np.abs(np.subtract.outer(np.asarray(lambdas), real))) <= POLE_TOL:
        raise PoleHit('real z coincides with a spectrum point within %g' % POLE_TOL)


def _sumOverPoles(lambdas, masses, z):
    z = np.asarray(z, dtype=complex)
    poleCheck(lambdas, z)
    values = np.sum(masses[:, None] / np.subtract.outer(lambdas, np.atleast_1d(z)), axis=0)
    if z.ndim == 0:
        return complex(values[0])
    return values.reshape(z.shape)


def stieltjes(esd, z):
    """Stieltjes transform m(z) = sum_j weights_j / (lambda_j - z)

    Arguments:
        esd {rmtlab.matrix.structure.WeightedESD} -- spectral distribution
        z {complex or numpy.ndarray} -- evaluation point(s)

    Returns:
        m {complex or numpy.ndarray} -- transform value(s)
    """
    return _sumOverPoles(np.asarray(esd.lambdas), np.asarray(esd.weights), z)


def resolventQform(S, w, z):
    """Quadratic form w^T (S - z I)^{-1} w

    Arguments:
        S {numpy.ndarray or rmtlab.matrix.structure.SpectralDecomposition} -- symmetric matrix or its decomposition
        w {numpy.ndarray} -- real vector
        z {complex or numpy.ndarray} -- evaluation point(s) off the spectrum

    Returns:
        q {complex or numpy.ndarray} -- sum_j (V w)_j^2 / (lambda_j - z)
    """
    decomposition = S if isinstance(S, SpectralDecomposition) else eigSym(S)
    masses = decomposition.project(w) ** 2
    return _sumOverPoles(decomposition.eigenvalues, masses, z)


def rankOneIdentityResidual(batch, model, z):
    """Residual of the rank-one update identity linking both covariance resolvents

    With r = B xbar, q_u = r^T (S_u - zI)^{-1} r and q_c = r^T (S_c - zI)^{-1} r,
    the identity S_c = S_u - r r^T gives q_u / (1 - q_u) = q_c.

    Returns:
        residual {float} -- |q_u / (1 - q_u) - q_c|
    """
    covariance = covarianceSet(batch, model)
    r = batch.Bxbar
    qu = resolventQform(covariance.sUncentered, r, z)
    qc = resolventQform(covariance.sCentered, r, z)
    return float(np.max(np.abs(qu / (1 - qu) - qc)))


def operatorNormRatio(batch, model):
    """Returns ||B X||_2 / sqrt(n), which tends to sqrt(||Sigma_p||) = 1 after whitening"""
    return float(np.linalg.norm(model.B @ batch.X, 2) / np.sqrt(batch.n))
