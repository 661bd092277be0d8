'''Replicated experiments checking the limit laws of (X_n, Y_n) and X_n(z)

Each replication is a pure function of (config, rep index): its random stream is
derived from the master seed and the index only, and aggregation runs in index
order, so results do not depend on the number of threads.

Note: Please try to maintain proper documentation
'''

import os
import time
from concurrent.futures import ThreadPoolExecutor
from functools import partial
import numpy as np
from rmtlab.config.values import MAX_DRAW_FACTOR, MIN_NORMALITY_SAMPLES, ESD_WINDOW, CRAMER_WOLD
from rmtlab.exceptions import ConfigError, InvalidPoint, SingularDirection, TooManyDegenerate, ZeroVector
from rmtlab.matrix.operations import covarianceSet, weightedEsd
from rmtlab.matrix.special import resolventQform
from rmtlab.model.operations import buildModel, sampleBatch, batchFromEntries
from rmtlab.simulation.descriptive import (empiricalCovariance, normalityDiagnostics, degenerateDirection,
                                           eigenConcentrationSummary)
from rmtlab.simulation.report import RepRecord, MonteCarloReport, rangeCheck, relativeCheck, complexCheck
from rmtlab.simulation.seeds import modelStream, repStream
from rmtlab.statistics.limits import gamma1, limitKernel, limitStieltjes
from rmtlab.statistics.process import ProcessEvaluator, hatProcess
from rmtlab.statistics.quadratic import computeXY
from rmtlab.transform.truncation import truncateStandardize
from rmtlab.cli import logger


class ExperimentSetup(object):
    """Objects shared read-only by all replications of one run"""

    def __init__(self, config):
        self.config = config.validate()
        self.dims = config.dims()
        self.model = buildModel(self.dims, config.gammaKind, config.uKind, config.mu(self.dims),
                                modelStream(config.seed))
        self.dist = config.distribution()
        self.fg = config.fg()
        self.contour = config.contour()

    @property
    def maxDraws(self):
        return MAX_DRAW_FACTOR * self.config.reps

    def dimsDict(self):
        return {'p': self.dims.p, 'q': self.dims.q, 'm': self.dims.m, 'n': self.dims.n, 'c_n': self.dims.cn}


def drawBatch(setup, rep, attempt=0):
    """Samples the batch of (rep, attempt), truncated when the config asks for it

    Returns:
        batch {rmtlab.model.structure.SampleBatch}
        truncation {rmtlab.transform.truncation.TruncationReport} -- None when truncation is off
    """
    batch = sampleBatch(setup.model, setup.dist, repStream(setup.config.seed, rep, attempt))
    if setup.config.truncation == 'off':
        return batch, None
    XHat, truncation = truncateStandardize(batch.X, setup.model, setup.dist, setup.config.truncation)
    return batchFromEntries(setup.model, XHat), truncation


def replicate(setup, rep):
    """Runs one replication, resampling degenerate draws if allowed

    Arguments:
        setup {rmtlab.simulation.experiment.ExperimentSetup} -- shared objects
        rep {int} -- replication index

    Returns:
        record {rmtlab.simulation.report.RepRecord}
    """
    config = setup.config
    attempt = 0
    while True:
        batch, truncation = drawBatch(setup, rep, attempt)
        try:
            evaluator = ProcessEvaluator(batch, setup.model, config.xForm)
            statistics = computeXY(batch, setup.model, setup.fg, evaluator.centered)
            break
        except ZeroVector as err:
            if not config.resampleDegenerate:
                raise
            attempt += 1
            logger.warn('replication %d: degenerate draw (%s), resampling', rep, err)
            if attempt >= setup.maxDraws:
                raise TooManyDegenerate('replication %d needed more than %d draws' % (rep, setup.maxDraws))

    Xz = tuple(hatProcess(evaluator, z, setup.dims.n, setup.contour) for z in config.zPoints)
    XzUnnormalized = Xz
    if config.xForm != 'unnormalized':
        unnormalized = partial(evaluator, form='unnormalized')
        XzUnnormalized = tuple(hatProcess(unnormalized, z, setup.dims.n, setup.contour) for z in config.zPoints)
    lambdas = evaluator.uncentered.eigenvalues
    esd = weightedEsd(evaluator.centered, evaluator.r)
    return RepRecord(rep=rep, Xn=statistics.x(config.xForm), Yn=statistics.Yn, normSq=statistics.normSq,
                     lambdaMin=float(lambdas[0]), lambdaMax=float(lambdas[-1]), Xz=Xz, resamples=attempt,
                     fractionTruncated=None if truncation is None else truncation.fractionTruncated,
                     sigmaN=None if truncation is None else truncation.sigmaN,
                     massOutside=esd.massOutside(*ESD_WINDOW), XnUnnormalized=statistics.XnUnnormalized,
                     XzUnnormalized=XzUnnormalized)


def _workers(config):
    return config.threads or os.cpu_count() or 1


def runReplications(setup):
    """All replications in index order"""
    config = setup.config
    with ThreadPoolExecutor(max_workers=_workers(config)) as pool:
        records = tuple(pool.map(partial(replicate, setup), range(config.reps)))
    draws = sum(1 + r.resamples for r in records)
    logger.debug('%d replications used %d draws', config.reps, draws)
    if draws > setup.maxDraws:
        raise TooManyDegenerate('%d draws for %d replications exceed %d' % (draws, config.reps, setup.maxDraws))
    return records


def _truncationSummary(setup, records):
    if setup.config.truncation == 'off':
        return None
    fractions = np.array([r.fractionTruncated for r in records])
    sigmas = np.array([r.sigmaN for r in records])
    return {'mode': setup.config.truncation, 'fraction_truncated_mean': float(fractions.mean()),
            'fraction_truncated_max': float(fractions.max()), 'sigma_n_min': float(sigmas.min())}


def _normality(samples, target):
    # Gamma_1 has rank one, so a fixed direction can carry zero target variance
    diagnostics = []
    for direction in CRAMER_WOLD:
        try:
            diagnostics += normalityDiagnostics(samples, target, (direction,))
        except SingularDirection as err:
            logger.warn('normality diagnostics: %s, reported as degenerate', err)
            diagnostics.append(degenerateDirection(samples, direction))
    return diagnostics


def _summarize(setup, records, start):
    samples = np.array([[r.Xn, r.Yn] for r in records])
    empiricalCov = empiricalCovariance(samples)
    limitSamples = np.array([[r.XnUnnormalized, r.Yn] for r in records])
    limitCov = empiricalCovariance(limitSamples)
    target = gamma1(setup.fg.fAt1, setup.fg.gPrimeAt0).gamma1
    normality = None
    if len(records) >= MIN_NORMALITY_SAMPLES:
        normality = _normality(limitSamples, target)
    else:
        logger.warn('normality diagnostics skipped: %d replications < %d', len(records), MIN_NORMALITY_SAMPLES)
    concentration = eigenConcentrationSummary(records)
    concentration['mass_outside_mean'] = float(np.mean([r.massOutside for r in records]))
    concentration['operator_norm_ratio_median'] = float(np.median(np.sqrt([r.lambdaMax for r in records])))

    gPrime = setup.fg.gPrimeAt0
    kernelTargets = []
    for z in setup.config.zPoints:
        kernel = limitKernel(z, z, gPrime)
        kernelTargets.append({'z': z, 'xx': kernel[0, 0], 'xy': kernel[0, 1]})

    checks = {
        'var_X': relativeCheck(float(limitCov[0, 0]), float(target[0, 0]), 0.25),
        'cov_XY': relativeCheck(float(limitCov[0, 1]), float(target[0, 1]), 0.25),
        'var_Y': relativeCheck(float(limitCov[1, 1]), float(target[1, 1]), 0.15),
        'eigen_p99': rangeCheck(concentration['p99'], 0.0, 0.3),
    }
    if normality is not None and not normality[1]['degenerate']:
        checks['ks_Y'] = rangeCheck(normality[1]['ks_pvalue'], 0.01, 1.0)
    truncation = _truncationSummary(setup, records)
    if truncation is not None:
        checks['fraction_truncated'] = rangeCheck(truncation['fraction_truncated_max'], 0.0, 1e-3)

    resamples = sum(r.resamples for r in records)
    return MonteCarloReport(config=setup.config.echo(), dims=setup.dimsDict(), perRep=records,
                            empiricalMean=samples.mean(axis=0), empiricalCov=empiricalCov,
                            gamma1Target=target, kernelTargets=kernelTargets, normality=normality,
                            concentration=concentration, truncation=truncation, resampleCount=resamples,
                            wallTime=time.perf_counter() - start, checks=checks, limitCov=limitCov)


def runCltExperiment(config):
    """Replicates (X_n, Y_n) and compares its law with N(0, Gamma_1)

    Arguments:
        config {rmtlab.simulation.config.ExperimentConfig} -- run configuration

    Returns:
        report {rmtlab.simulation.report.MonteCarloReport}
    """
    start = time.perf_counter()
    setup = ExperimentSetup(config)
    logger.info('clt experiment: p=%d n=%d reps=%d dist=%s %s', setup.dims.p, setup.dims.n,
                config.reps, config.dist, setup.fg)
    records = runReplications(setup)
    report = _summarize(setup, records, start)
    logger.info('clt experiment finished in %.2fs with %d resamples', report.wallTime, report.resampleCount)
    return report


def runProcessExperiment(config):
    """Replicates X_hat_n(z) at every configured z and compares its moments with the limit kernel

    Second moments are products without conjugation, E[X(z1) X(z2)] for all pairs z1, z2
    (with repetition), and mixed moments E[X(z) Y]. They use the unnormalized form whatever
    the configured x_form, since the kernel describes that form.

    Returns:
        report {rmtlab.simulation.report.MonteCarloReport} -- processMoments and checks filled
    """
    if not config.zPoints:
        raise ConfigError('the process experiment needs at least one z point')
    start = time.perf_counter()
    setup = ExperimentSetup(config)
    logger.info('process experiment: p=%d n=%d reps=%d at %d points', setup.dims.p, setup.dims.n,
                config.reps, len(config.zPoints))
    records = runReplications(setup)
    report = _summarize(setup, records, start)

    zPoints = setup.config.zPoints
    Xz = np.array([r.XzUnnormalized for r in records], dtype=complex)
    Y = np.array([r.Yn for r in records])
    gPrime = setup.fg.gPrimeAt0
    moments = []
    checks = {}
    for k, z1 in enumerate(zPoints):
        for l in range(k, len(zPoints)):
            z2 = zPoints[l]
            empirical = complex(np.mean(Xz[:, k] * Xz[:, l]))
            target = complex(limitKernel(z1, z2, gPrime)[0, 0])
            moments.append({'kind': 'xx', 'z1': z1, 'z2': z2, 'empirical': empirical, 'target': target})
            checks['xx_%d_%d' % (k, l)] = complexCheck(empirical, target, 0.25)
        empirical = complex(np.mean(Xz[:, k] * Y))
        target = complex(limitKernel(z1, z1, gPrime)[0, 1])
        moments.append({'kind': 'xy', 'z1': z1, 'z2': None, 'empirical': empirical, 'target': target})
        checks['xy_%d' % k] = complexCheck(empirical, target, 0.25)
    report.processMoments = moments
    report.checks = checks
    report.wallTime = time.perf_counter() - start
    return report


def resolventMeanCheck(config, z):
    """Average of xbar^T B^T (S - zI)^{-1} B xbar over replications, against c_n / (1 - z)

    S is the uncentered covariance. z must avoid the positive real axis.

    Returns:
        empiricalMean {complex}
        target {complex} -- c_n m(z)
        scaledGap {float} -- (n / sqrt(p)) |empiricalMean - target|
    """
    z = complex(z)
    if z.imag == 0 and z.real > 0:
        raise InvalidPoint('z=%s must have nonzero imaginary part or nonpositive real part' % z)
    setup = ExperimentSetup(config)

    def qform(rep):
        batch, _ = drawBatch(setup, rep)
        return resolventQform(covarianceSet(batch, setup.model).sUncentered, batch.Bxbar, z)

    with ThreadPoolExecutor(max_workers=_workers(config)) as pool:
        values = np.array(list(pool.map(qform, range(config.reps))), dtype=complex)
    dims = setup.dims
    empiricalMean = complex(values.mean())
    target = dims.cn * limitStieltjes(z)
    scaledGap = dims.n / np.sqrt(dims.p) * abs(empiricalMean - target)
    logger.info('resolvent mean at z=%s: mean=%s target=%s scaled gap=%.4f', z, empiricalMean, target, scaledGap)
    return empiricalMean, target, float(scaledGap)
