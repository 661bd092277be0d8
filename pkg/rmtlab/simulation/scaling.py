'''Empirical decay rates of mean-vector moments along a grid of sample sizes

With p = floor(n^beta) and C = I, the second moments of
    mean_norm_dev  ||B xbar||^2 - c_n                     decay like n^(beta - 2),
    cross_qform    x_1^T B^T B xbar_1                     decay like n^(beta - 1),
    mean_qform     xbar_1^T B^T B xbar_1                  decay like n^(2 beta - 2),
where xbar_1 = xbar - x_1 / n leaves out the first observation.
'''

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
import os
import numpy as np
from scipy import stats
from rmtlab.exceptions import ConfigError, GridTooSmall
from rmtlab.model.distributions import getDistribution
from rmtlab.model.operations import dimsFromRegime, buildModel
from rmtlab.simulation.seeds import repStream
from rmtlab.cli import logger

QUANTITIES = ('mean_norm_dev', 'cross_qform', 'mean_qform')
MIN_GRID_POINTS = 4
MIN_GRID_SPAN = 8


@dataclass(frozen=True)
class ScalingResult(object):
    quantity: str
    slope: float
    intercept: float
    r2: float
    expectedSlope: float
    values: tuple

    def toDict(self):
        return {'quantity': self.quantity, 'slope': self.slope, 'intercept': self.intercept,
                'r2': self.r2, 'expected_slope': self.expectedSlope, 'values': list(self.values)}


def expectedSlope(quantity, beta):
    return {'mean_norm_dev': beta - 2, 'cross_qform': beta - 1, 'mean_qform': 2 * beta - 2}[quantity]


def scalingQuantity(quantity, X, B):
    """Squared value of the quantity for one raw m x n batch"""
    n = X.shape[1]
    p = B.shape[0]
    xbar = X.mean(axis=1)
    if quantity == 'mean_norm_dev':
        r = B @ xbar
        return (r @ r - p / n) ** 2
    leaveOut = B @ (xbar - X[:, 0] / n)
    if quantity == 'cross_qform':
        return (B @ X[:, 0] @ leaveOut) ** 2
    return (leaveOut @ leaveOut) ** 2


def checkGrid(nGrid):
    grid = sorted(set(int(n) for n in nGrid))
    if len(grid) < MIN_GRID_POINTS or grid[-1] < MIN_GRID_SPAN * grid[0]:
        raise GridTooSmall('grid needs >= %d distinct points spanning >= %dx, got %s'
                           % (MIN_GRID_POINTS, MIN_GRID_SPAN, list(nGrid)))
    return grid


def estimateScalingExponent(quantity, nGrid, beta, reps, seed=0, dist='gaussian', threads=None):
    """Fits log(empirical second moment) against log(n)

    Arguments:
        quantity {string} -- mean_norm_dev, cross_qform or mean_qform
        nGrid {list} -- sample sizes, >= 4 distinct values spanning >= 8x
        beta {float} -- p = floor(n^beta)
        reps {int} -- replications per grid point

    Returns:
        result {rmtlab.simulation.scaling.ScalingResult}
    """
    if quantity not in QUANTITIES:
        raise ConfigError('unknown quantity %r (expected one of %s)' % (quantity, ', '.join(QUANTITIES)))
    grid = checkGrid(nGrid)
    if int(reps) != reps or reps < 2:
        raise ConfigError('reps must be an integer >= 2, got %r' % (reps,))
    law = getDistribution(dist)
    values = []
    with ThreadPoolExecutor(max_workers=threads or os.cpu_count() or 1) as pool:
        for index, n in enumerate(grid):
            dims = dimsFromRegime(n, beta)
            B = buildModel(dims).B
            # attempt slot carries the grid index so grid points use disjoint streams
            draws = pool.map(lambda rep: scalingQuantity(quantity, law.sample(repStream(seed, rep, index), (dims.m, n)), B),
                             range(reps))
            moment = float(np.mean(list(draws)))
            values.append({'n': n, 'p': dims.p, 'moment': moment})
            logger.info('%s at n=%d, p=%d: second moment %.4g', quantity, n, dims.p, moment)
    fit = stats.linregress(np.log([v['n'] for v in values]), np.log([v['moment'] for v in values]))
    return ScalingResult(quantity=quantity, slope=float(fit.slope), intercept=float(fit.intercept),
                         r2=float(fit.rvalue ** 2), expectedSlope=expectedSlope(quantity, beta), values=tuple(values))
