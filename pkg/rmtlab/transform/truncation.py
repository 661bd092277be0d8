'''Entry truncation, centering and rescaling at the thresholds (np)^{1/4} / ||b_i||

Each row i of the raw matrix is cut at its own threshold, centered by the exact
truncated mean of its law and divided by a truncated standard deviation. Rows with
||b_i|| = 0 never reach the statistics and are left untouched.

Note: Please try to maintain proper documentation
'''

from dataclasses import dataclass
import numpy as np
from rmtlab.config.values import TRUNCATION_MODES
from rmtlab.exceptions import ConfigError, DegenerateRow
from rmtlab.matrix.operations import covarianceSet
from rmtlab.matrix.special import resolventQform
from rmtlab.model.operations import batchFromEntries
from rmtlab.cli import logger


@dataclass(frozen=True)
class TruncationReport(object):
    """Outcome of one truncation pass

    sigmaN -- averaged standard deviation sqrt(mean_i sigma_i^2) of the truncated entries,
    thresholds -- per-row cutoffs (+inf where ||b_i|| = 0),
    fractionTruncated -- share of all m n entries set to zero,
    maxAbsAfter -- max |X_hat_ij| ||b_i|| over rows with ||b_i|| > 0,
    mode -- per_row or uniform_sigma.
    """

    sigmaN: float
    thresholds: np.ndarray
    fractionTruncated: float
    maxAbsAfter: float
    mode: str


def columnNorms(B):
    """Euclidean norm of every column of B

    Arguments:
        B {numpy.ndarray} -- p x m matrix

    Returns:
        norms {numpy.ndarray} -- vector of length m
    """
    return np.linalg.norm(np.asarray(B, dtype=float), axis=0)


def truncationThresholds(norms, n, p):
    norms = np.asarray(norms, dtype=float)
    bound = (n * p) ** 0.25
    with np.errstate(divide='ignore'):
        return np.where(norms > 0, bound / np.where(norms > 0, norms, 1.0), np.inf)


def truncateStandardize(X, model, dist, mode='per_row'):
    """Truncates, centers and rescales a raw entry matrix

    Arguments:
        X {numpy.ndarray} -- raw m x n entries
        model {rmtlab.model.structure.ModelSpec} -- model providing B and p
        dist {rmtlab.model.distributions.EntryDistribution} -- law of the entries
        mode {string} -- per_row divides row i by its own sigma_i, uniform_sigma by the averaged sigma_n

    Returns:
        XHat {numpy.ndarray} -- processed entries
        report {rmtlab.transform.truncation.TruncationReport}
    """
    if mode not in TRUNCATION_MODES or mode == 'off':
        raise ConfigError('truncation mode must be per_row or uniform_sigma, got %r' % (mode,))
    X = np.asarray(X, dtype=float)
    m, n = X.shape
    if m != model.dims.m:
        raise ConfigError('entry matrix has %d rows, model expects %d' % (m, model.dims.m))

    norms = columnNorms(model.B)
    active = norms > 0
    thresholds = truncationThresholds(norms, n, model.dims.p)
    mean, second, _ = dist.truncatedMoments(thresholds)
    variance = np.where(active, second - mean ** 2, 1.0)
    degenerate = np.flatnonzero(active & (variance <= 0))
    if degenerate.size:
        raise DegenerateRow('rows %s have zero variance after truncation' % degenerate.tolist())
    rowSigma = np.sqrt(variance)
    sigmaN = float(np.sqrt(np.mean(variance)))
    scale = rowSigma if mode == 'per_row' else np.full(m, sigmaN)

    cut = np.abs(X) > thresholds[:, None]
    XHat = np.where(cut, 0.0, X)
    XHat = np.where(active[:, None], (XHat - mean[:, None]) / scale[:, None], X)

    fraction = float(np.count_nonzero(cut)) / X.size
    maxAbsAfter = float(np.max(np.abs(XHat[active]) * norms[active, None])) if active.any() else 0.0
    report = TruncationReport(sigmaN=sigmaN, thresholds=thresholds, fractionTruncated=fraction,
                              maxAbsAfter=maxAbsAfter, mode=mode)
    if fraction > 0:
        logger.info('truncation (%s) zeroed %d of %d entries, sigma_n=%.6f', mode, int(np.count_nonzero(cut)), X.size, sigmaN)
    return XHat, report


def truncationTailBound(model, dist, n):
    """Closed-form bounds on how often truncation bites

    Arguments:
        model {rmtlab.model.structure.ModelSpec} -- model providing B and p
        dist {rmtlab.model.distributions.EntryDistribution} -- entry law
        n {int} -- sample size

    Returns:
        unionBound {float} -- sum_i n P(|X| > t_i), an upper bound on P(X != X_hat)
        tailFourth {float} -- max_i E[X^4 I(|X| > t_i)]
    """
    norms = columnNorms(model.B)
    thresholds = truncationThresholds(norms, n, model.dims.p)
    _, _, tail = dist.truncatedMoments(thresholds)
    active = norms > 0
    unionBound = float(n * np.sum(tail[active]))
    tailFourth = float(np.max(dist.tailFourthMoment(thresholds[active]))) if active.any() else 0.0
    return unionBound, tailFourth


def truncationShift(batch, model, dist, z, mode='per_row'):
    """How far truncation moves the CLT-scale quantities of one batch

    Returns:
        qformShift {float} -- (n / sqrt(p)) |q(xbar) - q(xcheck)| with q the centered resolvent form at z
        normShift {float} -- (n / sqrt(p)) | ||B xbar||^2 - ||B xcheck||^2 |
    """
    XHat, _ = truncateStandardize(batch.X, model, dist, mode)
    truncated = batchFromEntries(model, XHat)
    scale = batch.n / np.sqrt(model.dims.p)
    raw = resolventQform(covarianceSet(batch, model).sCentered, batch.Bxbar, z)
    cut = resolventQform(covarianceSet(truncated, model).sCentered, truncated.Bxbar, z)
    normShift = abs(np.sum(batch.Bxbar ** 2) - np.sum(truncated.Bxbar ** 2))
    return float(scale * abs(raw - cut)), float(scale * normShift)
