'''Construction of the projected population model and sampling of data batches

Note: Please try to maintain proper documentation
'''

import math
import numpy as np
from rmtlab.config.values import Q_FACTOR, M_FACTOR, GAMMA_KINDS, U_KINDS, WHITEN_TOL, PD_TOL
from rmtlab.exceptions import ConfigError, RegimeViolation, NotPositiveDefinite, DecompositionFailure
from rmtlab.matrix.checks import isPositiveDefinite, maxAbs
from rmtlab.matrix.operations import eigSym, applyMatrixFunction
from rmtlab.model.structure import Dimensions, ModelSpec, SampleBatch
from rmtlab.cli import logger


def dimsFromRegime(n, beta, scale=1.0, qFactor=Q_FACTOR, mFactor=M_FACTOR):
    """Dimensions for the regime p ~ scale * n^beta

    Arguments:
        n {int} -- sample size, at least 4
        beta {float} -- growth exponent in (0, 1)
        scale {float} -- positive multiplier

    Returns:
        dims {rmtlab.model.structure.Dimensions} -- p = max(1, floor(scale n^beta)), q = qFactor p, m = mFactor q
    """
    if int(n) != n or n < 4:
        raise ConfigError('n must be an integer >= 4, got %r' % (n,))
    if not 0 < beta < 1:
        raise ConfigError('beta must lie in (0, 1), got %r' % (beta,))
    if scale <= 0:
        raise ConfigError('scale must be positive, got %r' % (scale,))
    if int(qFactor) != qFactor or qFactor < 1 or int(mFactor) != mFactor or mFactor < 1:
        raise ConfigError('q_factor and m_factor must be positive integers')
    n = int(n)
    # guard floor() against n^beta landing a rounding step below an integer
    p = max(1, int(math.floor(scale * n ** beta + 1e-9)))
    if p >= n:
        raise RegimeViolation('p=%d from scale=%g, beta=%g is not smaller than n=%d' % (p, scale, beta, n))
    q = int(qFactor) * p
    m = int(mFactor) * q
    return Dimensions(p=p, q=q, m=m, n=n)


def _buildGamma(dims, gammaKind, rng):
    if gammaKind == 'identity_padded':
        return np.eye(dims.q, dims.m)
    return rng.standard_normal((dims.q, dims.m))


def _buildU(dims, uKind, rng):
    if uKind == 'coordinate_selection':
        return np.eye(dims.q)[:dims.p]
    Q, _ = np.linalg.qr(rng.standard_normal((dims.q, dims.p)))
    return Q.T


def buildModel(dims, gammaKind='identity_padded', uKind='coordinate_selection', mu=None, rng=None):
    """Builds the model z = U mu + U Gamma x together with its whitening map

    Arguments:
        dims {rmtlab.model.structure.Dimensions} -- dimensions (p, q, m, n)
        gammaKind {string} -- identity_padded or gaussian_random
        uKind {string} -- coordinate_selection or random_semi_orthogonal
        mu {numpy.ndarray} -- mean vector of length q (zero by default)
        rng {numpy.random.Generator} -- stream for the random kinds

    Returns:
        model {rmtlab.model.structure.ModelSpec} -- model satisfying B B^T = I_p
    """
    if gammaKind not in GAMMA_KINDS:
        raise ConfigError('unknown gamma_kind %r (expected one of %s)' % (gammaKind, ', '.join(GAMMA_KINDS)))
    if uKind not in U_KINDS:
        raise ConfigError('unknown u_kind %r (expected one of %s)' % (uKind, ', '.join(U_KINDS)))
    if rng is None:
        rng = np.random.default_rng(0)
    mu = np.zeros(dims.q) if mu is None else np.asarray(mu, dtype=float)
    if mu.shape != (dims.q,):
        raise ConfigError('mu must have length q=%d, got shape %s' % (dims.q, mu.shape))

    Gamma = _buildGamma(dims, gammaKind, rng)
    U = _buildU(dims, uKind, rng)
    UGamma = U @ Gamma
    SigmaP = UGamma @ UGamma.T
    SigmaP = (SigmaP + SigmaP.T) / 2
    decomposition = eigSym(SigmaP)
    if not isPositiveDefinite(decomposition.eigenvalues):
        raise NotPositiveDefinite('Sigma_p has eigenvalue range [%g, %g] below relative tolerance %g'
                                  % (decomposition.eigenvalues[0], decomposition.eigenvalues[-1], PD_TOL))
    SigmaPInvSqrt = applyMatrixFunction(decomposition, lambda x: 1 / np.sqrt(x))
    B = SigmaPInvSqrt @ UGamma
    muTilde = SigmaPInvSqrt @ (U @ mu)

    whitening = maxAbs(B @ B.T - np.eye(dims.p))
    if whitening > WHITEN_TOL:
        raise DecompositionFailure('whitening residual %g exceeds %g' % (whitening, WHITEN_TOL))
    normsSquared = np.sum(B ** 2, axis=0)
    if np.max(normsSquared) > 1 + WHITEN_TOL or abs(np.sum(normsSquared) - dims.p) > 1e-8 * dims.p:
        raise DecompositionFailure('column norms of B violate max ||b_j||^2 <= 1 and sum = p')
    model = ModelSpec(dims=dims, mu=mu, Gamma=Gamma, U=U, SigmaP=SigmaP,
                      SigmaPInvSqrt=SigmaPInvSqrt, B=B, muTilde=muTilde)
    logger.info('built model p=%d q=%d m=%d n=%d (%s, %s), whitening residual %.3g',
                dims.p, dims.q, dims.m, dims.n, gammaKind, uKind, whitening)
    return model


def batchFromEntries(model, X):
    """Wraps a raw m x n entry matrix into a SampleBatch of the model

    Arguments:
        model {rmtlab.model.structure.ModelSpec} -- population model
        X {numpy.ndarray} -- raw entries

    Returns:
        batch {rmtlab.model.structure.SampleBatch}
    """
    X = np.asarray(X, dtype=float)
    if X.ndim != 2 or X.shape[0] != model.dims.m:
        raise ConfigError('entry matrix must have %d rows, got shape %s' % (model.dims.m, X.shape))
    xbar = X.mean(axis=1)
    Bxbar = model.B @ xbar
    zTilde = model.muTilde[:, None] + model.B @ X
    zTildeBar = zTilde.mean(axis=1)
    return SampleBatch(X=X, xbar=xbar, Bxbar=Bxbar, zTilde=zTilde, zTildeBar=zTildeBar)


def sampleBatch(model, dist, rng, zeroNoise=False):
    """Draws n i.i.d. observations of the model

    Arguments:
        model {rmtlab.model.structure.ModelSpec} -- population model
        dist {rmtlab.model.distributions.EntryDistribution} -- entry law
        rng {numpy.random.Generator} -- random stream
        zeroNoise {bool} -- forces X = 0 (every observation equals mu_tilde)

    Returns:
        batch {rmtlab.model.structure.SampleBatch}
    """
    shape = (model.dims.m, model.dims.n)
    X = np.zeros(shape) if zeroNoise else dist.sample(rng, shape)
    return batchFromEntries(model, X)
