'''The resolvent process X_n(z) and its truncated version near the real axis

Note: Please try to maintain proper documentation
'''

import numpy as np
from rmtlab.config.values import TINY, PATH_TOL, CONTOUR_TOL, X_FORMS
from rmtlab.exceptions import ConfigError, ZeroMeanVector, PathDisagreement, OffContour
from rmtlab.matrix.operations import covarianceSet, eigSym
from rmtlab.matrix.special import resolventQform
from rmtlab.statistics.limits import limitStieltjes


def rhoN(n, vartheta):
    """Gap half-width sequence rho_n = n^(-vartheta)"""
    if not 0 < vartheta < 1:
        raise ConfigError('vartheta must lie in (0, 1), got %r' % (vartheta,))
    return float(n) ** (-vartheta)


class ProcessEvaluator(object):
    """Evaluates X_n(z) for one batch at any number of points

    Both covariance matrices are decomposed once. Every evaluation uses the centered
    covariance and is cross-checked against the uncentered one through
    q_c = q_u / (1 - q_u).

    form -- normalized gives sqrt(p) (q_c / ||r||^2 - m(z)), unnormalized gives
    (n / sqrt(p)) (q_c - c_n m(z)). A call may ask for the other form on the same batch.
    """

    def __init__(self, batch, model, form='normalized'):
        if form not in X_FORMS:
            raise ConfigError('x_form must be one of %s, got %r' % (', '.join(X_FORMS), form))
        self.form = form
        self.r = batch.Bxbar
        self.normSq = float(self.r @ self.r)
        if self.normSq <= TINY:
            raise ZeroMeanVector('||B xbar||^2 = %g vanishes' % self.normSq)
        self.covariance = covarianceSet(batch, model)
        self.centered = eigSym(self.covariance.sCentered)
        self.uncentered = eigSym(self.covariance.sUncentered)
        self.p = model.dims.p
        self.n = batch.n

    def centeredQform(self, z):
        return resolventQform(self.centered, self.r, z)

    def uncenteredQform(self, z):
        return resolventQform(self.uncentered, self.r, z)

    def __call__(self, z, form=None):
        form = self.form if form is None else form
        qc = self.centeredQform(z)
        qu = self.uncenteredQform(z)
        gap = np.abs(qc - qu / (1 - qu))
        if np.any(gap > PATH_TOL * (1 + np.abs(qc))):
            raise PathDisagreement('centered and rank-one paths differ by %g' % np.max(gap))
        scale = self.n / np.sqrt(self.p)
        cn = self.p / self.n
        if form == 'unnormalized':
            return scale * (qc - cn * limitStieltjes(z))
        return scale * cn * (qc / self.normSq - limitStieltjes(z))


def processXn(batch, model, z):
    """X_n(z) = sqrt(p) (r^T (S - zI)^{-1} r / ||r||^2 - 1 / (1 - z)) with r = B xbar

    Arguments:
        batch {rmtlab.model.structure.SampleBatch} -- sample batch
        model {rmtlab.model.structure.ModelSpec} -- model of the batch
        z {complex or numpy.ndarray} -- point(s) off the spectrum

    Returns:
        Xz {complex or numpy.ndarray}
    """
    return ProcessEvaluator(batch, model)(z)


def onVerticalSide(z, contour, tol=CONTOUR_TOL):
    z = complex(z)
    if abs(z.imag) > contour.v0 + tol:
        return None
    for u in (contour.uL, contour.uR):
        if abs(z.real - u) <= tol:
            return u
    return None


def onContour(z, contour, tol=CONTOUR_TOL):
    """Checks if z lies on the boundary of [u_l, u_r] x [-v0, v0]"""
    z = complex(z)
    if onVerticalSide(z, contour, tol) is not None:
        return True
    return abs(abs(z.imag) - contour.v0) <= tol and contour.uL - tol <= z.real <= contour.uR + tol


def truncatedProcess(evaluator, z, n, contour, vartheta=None):
    """X_hat_n(z): X_n(z) away from the real axis, linearly interpolated across |Im z| <= rho_n / n

    Arguments:
        evaluator {callable} -- z -> X_n(z)
        z {complex} -- point on the contour
        n {int} -- sample size
        contour {rmtlab.calculus.contour.ContourSpec} -- the contour
        vartheta {float} -- gap exponent (contour.vartheta by default)

    Returns:
        Xhat {complex}
    """
    z = complex(z)
    if not onContour(z, contour):
        raise OffContour('%s is not on the contour' % z)
    rho = rhoN(n, contour.vartheta if vartheta is None else vartheta)
    u = onVerticalSide(z, contour)
    v = z.imag
    if u is None or abs(v) > rho / n:
        return complex(evaluator(z))
    upper = complex(evaluator(complex(u, rho / n)))
    lower = complex(evaluator(complex(u, -rho / n)))
    return ((n * v + rho) / (2 * rho)) * upper + ((rho - n * v) / (2 * rho)) * lower


def hatProcess(evaluator, z, n, contour, vartheta=None):
    """X_hat_n(z) on the contour, X_n(z) anywhere else"""
    if onContour(z, contour):
        return truncatedProcess(evaluator, z, n, contour, vartheta)
    return complex(evaluator(z))
