from dataclasses import dataclass, field
import numpy as np


@dataclass(frozen=True)
class RepRecord(object):
    """Outcome of one replication

    lambdaMin and lambdaMax belong to the uncentered covariance; Xz holds X_hat_n(z)
    for every configured z point; resamples counts discarded degenerate draws; massOutside
    is the weighted ESD mass outside ESD_WINDOW. XnUnnormalized and XzUnnormalized repeat
    X_n and X_hat_n(z) in the unnormalized form, the one the limit covariances describe.
    """

    rep: int
    Xn: float
    Yn: float
    normSq: float
    lambdaMin: float
    lambdaMax: float
    Xz: tuple = ()
    resamples: int = 0
    fractionTruncated: float = None
    sigmaN: float = None
    massOutside: float = None
    XnUnnormalized: float = None
    XzUnnormalized: tuple = ()

    def csvRow(self):
        row = [self.rep, self.Xn, self.Yn, self.normSq, self.lambdaMin, self.lambdaMax]
        for value in self.Xz:
            row += [value.real, value.imag]
        return row


def perRepHeader(nz):
    header = ['rep', 'X_n', 'Y_n', 'norm_sq', 'lambda_min', 'lambda_max']
    for k in range(nz):
        header += ['Xz_re_%d' % k, 'Xz_im_%d' % k]
    return header


def rangeCheck(value, lower, upper, target=None):
    """Named acceptance criterion value in [lower, upper]"""
    return {'value': value, 'target': target, 'lower': lower, 'upper': upper,
            'passed': bool(np.isfinite(value) and lower <= value <= upper)}


def relativeCheck(value, target, tolerance):
    """Named acceptance criterion |value - target| <= tolerance |target|"""
    spread = tolerance * abs(target)
    return rangeCheck(value, target - spread, target + spread, target)


def complexCheck(value, target, tolerance):
    """Named acceptance criterion |value - target| <= tolerance |target| for complex moments"""
    check = rangeCheck(abs(value - target), 0.0, tolerance * abs(target), target)
    check['value'] = value
    return check


@dataclass
class MonteCarloReport(object):
    """Aggregated outcome of a replicated experiment

    perRep is ordered by replication index. Aggregates (empiricalMean, empiricalCov,
    normality, concentration) are computed from it in that order; checks maps
    acceptance criterion names to pass/fail records. empiricalCov belongs to the configured
    x_form, limitCov to the unnormalized (X_n, Y_n) that normality and checks compare with Gamma_1.
    """

    config: dict
    dims: dict
    perRep: tuple
    empiricalMean: np.ndarray
    empiricalCov: np.ndarray
    gamma1Target: np.ndarray
    kernelTargets: list = field(default_factory=list)
    processMoments: list = field(default_factory=list)
    normality: list = None
    concentration: dict = None
    truncation: dict = None
    resampleCount: int = 0
    wallTime: float = 0.0
    checks: dict = field(default_factory=dict)
    limitCov: np.ndarray = None

    @property
    def reps(self):
        return len(self.perRep)

    def allPassed(self):
        return all(check['passed'] for check in self.checks.values())

    def toDict(self):
        return {
            'config': self.config,
            'dims': self.dims,
            'reps': self.reps,
            'empirical_mean': self.empiricalMean,
            'empirical_cov': self.empiricalCov,
            'gamma1_target': self.gamma1Target,
            'kernel_targets': self.kernelTargets,
            'process_moments': self.processMoments,
            'normality': self.normality,
            'concentration': self.concentration,
            'truncation': self.truncation,
            'resample_count': self.resampleCount,
            'wall_time': self.wallTime,
            'checks': self.checks,
            'limit_cov': self.limitCov,
        }
