'''Descriptive statistics of Monte Carlo samples

Note: Please try to maintain proper documentation
'''

import numpy as np
from scipy import stats
from rmtlab.config.values import CRAMER_WOLD, MIN_NORMALITY_SAMPLES, QUANTILES
from rmtlab.exceptions import InsufficientSamples, SingularDirection

SINGULAR_TOL = 1e-12


class SampleSpace(object):
    """Class used to represent a sample of real vectors, one row per replication
    """

    def __init__(self, values):
        values = np.asarray(values, dtype=float)
        if values.ndim == 1:
            values = values[:, None]
        self.values = values
        self.size = values.shape[0]

    @property
    def mean(self):
        return self.values.mean(axis=0)

    def project(self, direction):
        return self.values @ np.asarray(direction, dtype=float)


def empiricalCovariance(samples):
    """Unbiased sample covariance (divisor R - 1)

    Arguments:
        samples {array_like} -- R real vectors

    Returns:
        cov {numpy.ndarray} -- d x d matrix
    """
    space = samples if isinstance(samples, SampleSpace) else SampleSpace(samples)
    if space.size < 2:
        raise InsufficientSamples('covariance needs at least 2 samples, got %d' % space.size)
    return np.atleast_2d(np.cov(space.values, rowvar=False, ddof=1))


def normalityDiagnostics(samples, targetCov, directions=CRAMER_WOLD):
    """Skewness, excess kurtosis and Kolmogorov-Smirnov fit along fixed directions

    For every direction a, a^T sample is compared with N(0, a^T targetCov a); the
    p-value uses the asymptotic Kolmogorov distribution.

    Arguments:
        samples {array_like} -- at least 50 bivariate samples
        targetCov {numpy.ndarray} -- 2 x 2 target covariance

    Returns:
        diagnostics {list} -- one dict per direction
    """
    space = samples if isinstance(samples, SampleSpace) else SampleSpace(samples)
    if space.size < MIN_NORMALITY_SAMPLES:
        raise InsufficientSamples('normality diagnostics need %d samples, got %d' % (MIN_NORMALITY_SAMPLES, space.size))
    targetCov = np.asarray(targetCov, dtype=float)
    diagnostics = []
    for direction in directions:
        a = np.asarray(direction, dtype=float)
        variance = float(a @ targetCov @ a)
        if variance <= SINGULAR_TOL:
            raise SingularDirection('target variance %g along %s' % (variance, a.tolist()))
        projected = space.project(a)
        ks = stats.kstest(projected, 'norm', args=(0.0, np.sqrt(variance)), method='asymp')
        diagnostics.append({
            'direction': a.tolist(),
            'target_variance': variance,
            'empirical_variance': float(np.var(projected, ddof=1)),
            'skewness': float(stats.skew(projected)),
            'excess_kurtosis': float(stats.kurtosis(projected, fisher=True)),
            'ks_statistic': float(ks.statistic),
            'ks_pvalue': float(ks.pvalue),
            'degenerate': False,
        })
    return diagnostics


def degenerateDirection(samples, direction):
    """Diagnostics entry for a direction with zero target variance; the fit statistics are NaN"""
    space = samples if isinstance(samples, SampleSpace) else SampleSpace(samples)
    projected = space.project(direction)
    nan = float('nan')
    return {'direction': np.asarray(direction, dtype=float).tolist(), 'target_variance': 0.0,
            'empirical_variance': float(np.var(projected, ddof=1)), 'skewness': nan, 'excess_kurtosis': nan,
            'ks_statistic': nan, 'ks_pvalue': nan, 'degenerate': True}


def eigenConcentrationSummary(records):
    """Percentiles of max(|lambda_max - 1|, |lambda_min - 1|) over replications

    Arguments:
        records {list} -- per-replication records with lambdaMin and lambdaMax

    Returns:
        summary {dict} -- p50, p95, p99, p100
    """
    lambdaMin = np.array([r.lambdaMin for r in records], dtype=float)
    lambdaMax = np.array([r.lambdaMax for r in records], dtype=float)
    deviation = np.maximum(np.abs(lambdaMax - 1), np.abs(lambdaMin - 1))
    values = np.percentile(deviation, QUANTILES)
    return {'p%d' % q: float(v) for q, v in zip(QUANTILES, values)}
