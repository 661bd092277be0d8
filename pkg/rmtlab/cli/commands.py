'''Command line front-end: clt, contour-check, scaling, eigen, process and resolvent

Exit codes: 0 success, 1 configuration error, 2 numerical failure, 3 failed
acceptance check under --check.

Note: Please try to maintain proper documentation
'''

import argparse
import os
import shlex
import sys
from rmtlab.config.values import VERSION, X_FORMS
from rmtlab.exceptions import ConfigError, NumericalError
from rmtlab.calculus.integration import cauchyFunctional, limitVarianceIntegrals
from rmtlab.calculus.contour import residueError
from rmtlab.functions.registry import DEFAULT_F, DEFAULT_G, makeF, makeG
from rmtlab.io.parser import readConfigFile, mergeConfig, parseGrid
from rmtlab.io.writer import RunManifest, writePerRep, writeJson, resultString, PER_REP, REPORT
from rmtlab.simulation.descriptive import eigenConcentrationSummary
from rmtlab.simulation.experiment import (ExperimentSetup, drawBatch, runCltExperiment, runProcessExperiment,
                                          resolventMeanCheck)
from rmtlab.simulation.report import RepRecord, rangeCheck
from rmtlab.simulation.scaling import QUANTITIES, estimateScalingExponent
from rmtlab.statistics.process import ProcessEvaluator
from rmtlab.cli import logger

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_NUMERICAL = 2
EXIT_CHECK = 3

CAUCHY_GAP_TOL = 1e-6
VARIANCE_GAP_TOL = 1e-8
SLOPE_TOL = 0.15
RESOLVENT_GAP_TOL = 0.5


class CommandParser(argparse.ArgumentParser):
    """ArgumentParser reporting bad usage as a ConfigError (exit 1) instead of exit 2"""

    def error(self, message):
        raise ConfigError(message)


def _addConfigFlags(parser):
    parser.add_argument('--config', help='flat key = value config file')
    parser.add_argument('--n', type=int)
    parser.add_argument('--beta', type=float)
    parser.add_argument('--scale', type=float)
    parser.add_argument('--q-factor', dest='qFactor', type=int)
    parser.add_argument('--m-factor', dest='mFactor', type=int)
    parser.add_argument('--gamma-kind', dest='gammaKind')
    parser.add_argument('--u-kind', dest='uKind')
    parser.add_argument('--dist')
    parser.add_argument('--mu-mode', dest='muMode')
    parser.add_argument('--seed', type=int)
    parser.add_argument('--truncation')
    parser.add_argument('--x-form', dest='xForm', choices=X_FORMS)
    parser.add_argument('--f')
    parser.add_argument('--g')
    parser.add_argument('--reps', type=int)
    parser.add_argument('--z', dest='zPoints', help='comma separated z points, e.g. --z=-1,1+i,1-i')
    parser.add_argument('--delta', type=float)
    parser.add_argument('--v0', type=float)
    parser.add_argument('--nq', type=int)
    parser.add_argument('--vartheta', type=float)
    parser.add_argument('--threads', type=int)
    parser.add_argument('--no-resample', dest='resampleDegenerate', action='store_const', const=False)
    _addOutputFlags(parser)


def _addOutputFlags(parser):
    parser.add_argument('--out', default='out', help='output directory')
    parser.add_argument('--check', action='store_true', help='exit 3 when an acceptance criterion fails')


CONFIG_FIELDS = ('n', 'beta', 'scale', 'qFactor', 'mFactor', 'gammaKind', 'uKind', 'dist', 'muMode', 'seed',
                 'truncation', 'xForm', 'f', 'g', 'reps', 'zPoints', 'delta', 'v0', 'nq', 'vartheta', 'threads',
                 'resampleDegenerate')


def configFromArgs(args):
    fileValues = readConfigFile(args.config) if args.config else {}
    flags = {name: getattr(args, name) for name in CONFIG_FIELDS}
    return mergeConfig(fileValues, flags).validate()


def _startRun(args, command, config):
    os.makedirs(args.out, exist_ok=True)
    logger.setLogFile(os.path.join(args.out, 'log.txt'))
    manifest = RunManifest(args.out, command, config, config.get('seed'))
    return manifest.start()


def _finishRun(args, manifest, checks, operation, inputs, outputs):
    path = os.path.join(args.out, REPORT)
    manifest.addOutput(path)
    failed = [name for name, check in checks.items() if not check['passed']]
    outputs = outputs + [('failed checks', ', '.join(failed) or 'none')]
    print(resultString(operation, inputs, outputs))
    code = EXIT_CHECK if args.check and failed else EXIT_OK
    if code == EXIT_CHECK:
        logger.error('%s: acceptance checks failed: %s', operation, ', '.join(failed))
    manifest.finish(code)
    return code


def _writeExperiment(args, manifest, report):
    perRep = writePerRep(os.path.join(args.out, PER_REP), report.perRep, len(report.config['zPoints']))
    manifest.addOutput(perRep)
    writeJson(os.path.join(args.out, REPORT), report.toDict())


def cmdClt(args):
    """Replicates (X_n, Y_n) and compares its covariance with Gamma_1"""
    config = configFromArgs(args)
    manifest = _startRun(args, 'clt', config.echo())
    report = runCltExperiment(config)
    _writeExperiment(args, manifest, report)
    cov = report.empiricalCov
    outputs = [('p', report.dims['p']), ('var X_n', float(cov[0, 0])), ('cov X_n Y_n', float(cov[0, 1])),
               ('var Y_n', float(cov[1, 1])), ('unnormalized cov', report.limitCov.tolist()),
               ('target', report.gamma1Target.tolist()),
               ('resamples', report.resampleCount)]
    return _finishRun(args, manifest, report.checks, 'clt', {'n': config.n, 'reps': config.reps}, outputs)


def cmdContourCheck(args):
    """Runs the Cauchy functional and variance integral suites and prints the gaps"""
    config = configFromArgs(args)
    manifest = _startRun(args, 'contour-check', config.echo())
    setup = ExperimentSetup(config)
    contour = setup.contour
    functions = [makeF(spec) for spec in DEFAULT_F]

    cauchy = []
    for rep in range(config.reps):
        batch, _ = drawBatch(setup, rep)
        evaluator = ProcessEvaluator(batch, setup.model)
        for f in functions:
            lhs, rhs, gap = cauchyFunctional(batch, setup.model, f, contour, evaluator)
            cauchy.append({'rep': rep, 'f': str(f), 'lhs': lhs, 'rhs': rhs, 'gap': gap})
    variance = []
    for f in functions:
        for gName in DEFAULT_G:
            gPrime = makeG(gName).derivativeAtZero
            varX, covXY, varY = limitVarianceIntegrals(f, gPrime, contour)
            targets = (2 * f.atOne ** 2, 2 * gPrime * f.atOne, 2 * gPrime ** 2)
            gap = max(abs(varX - targets[0]), abs(covXY - targets[1]), abs(varY - targets[2]))
            variance.append({'f': str(f), 'g': gName, 'values': [varX, covXY, varY], 'targets': list(targets), 'gap': gap})

    residue = residueError(contour)
    maxCauchy = max(row['gap'] for row in cauchy)
    maxVariance = max(row['gap'] for row in variance)
    logger.info('contour check: residue error %.3g, max cauchy gap %.3g, max variance gap %.3g',
                residue, maxCauchy, maxVariance)
    checks = {'cauchy_gap': rangeCheck(maxCauchy, 0.0, CAUCHY_GAP_TOL),
              'variance_gap': rangeCheck(maxVariance, 0.0, VARIANCE_GAP_TOL)}
    writeJson(os.path.join(args.out, REPORT), {'config': config.echo(), 'residue_error': residue,
                                               'cauchy': cauchy, 'variance': variance, 'checks': checks})
    outputs = [('residue error', residue), ('max cauchy gap', maxCauchy)]
    outputs += [('%s, %s' % (row['f'], row['g']), row['gap']) for row in variance]
    return _finishRun(args, manifest, checks, 'contour-check', {'n': config.n, 'nq': config.nq}, outputs)


def cmdScaling(args):
    """Fits decay exponents of mean-vector moments over a grid of n"""
    grid = parseGrid(args.grid)
    quantities = QUANTITIES if args.quantity == 'all' else (args.quantity,)
    inputs = {'quantity': args.quantity, 'grid': grid, 'beta': args.beta, 'reps': args.reps, 'seed': args.seed}
    manifest = _startRun(args, 'scaling', inputs)
    results = [estimateScalingExponent(q, grid, args.beta, args.reps, args.seed, args.dist, args.threads)
               for q in quantities]
    checks = {r.quantity: rangeCheck(r.slope, r.expectedSlope - SLOPE_TOL, r.expectedSlope + SLOPE_TOL, r.expectedSlope)
              for r in results}
    writeJson(os.path.join(args.out, REPORT), {'inputs': inputs, 'results': [r.toDict() for r in results],
                                               'checks': checks})
    outputs = [('%s slope' % r.quantity, '%.4f (expected %.4f, r2 %.4f)' % (r.slope, r.expectedSlope, r.r2))
               for r in results]
    return _finishRun(args, manifest, checks, 'scaling', inputs, outputs)


def cmdEigen(args):
    """Percentiles of the largest eigenvalue deviation from 1"""
    config = configFromArgs(args)
    manifest = _startRun(args, 'eigen', config.echo())
    if args.identity_spectrum:
        records = tuple(RepRecord(rep=rep, Xn=0.0, Yn=0.0, normSq=0.0, lambdaMin=1.0, lambdaMax=1.0)
                        for rep in range(config.reps))
        summary = eigenConcentrationSummary(records)
    else:
        report = runCltExperiment(config)
        records = report.perRep
        summary = report.concentration
    manifest.addOutput(writePerRep(os.path.join(args.out, PER_REP), records, 0))
    checks = {'eigen_p99': rangeCheck(summary['p99'], 0.0, 0.3)}
    writeJson(os.path.join(args.out, REPORT), {'config': config.echo(), 'concentration': summary, 'checks': checks})
    outputs = [(key, value) for key, value in summary.items()]
    return _finishRun(args, manifest, checks, 'eigen', {'n': config.n, 'reps': config.reps}, outputs)


def cmdProcess(args):
    """Second moments of X_hat_n(z) against the limit kernel"""
    config = configFromArgs(args)
    manifest = _startRun(args, 'process', config.echo())
    report = runProcessExperiment(config)
    _writeExperiment(args, manifest, report)
    outputs = []
    for moment in report.processMoments:
        label = 'E[X(%s)X(%s)]' % (moment['z1'], moment['z2']) if moment['kind'] == 'xx' else 'E[X(%s)Y]' % moment['z1']
        outputs.append((label, '%s (target %s)' % (moment['empirical'], moment['target'])))
    return _finishRun(args, manifest, report.checks, 'process', {'n': config.n, 'reps': config.reps}, outputs)


def cmdResolvent(args):
    """Mean of the uncentered resolvent form against c_n / (1 - z)"""
    config = configFromArgs(args)
    if not config.zPoints:
        raise ConfigError('resolvent needs --z')
    manifest = _startRun(args, 'resolvent', config.echo())
    rows = []
    checks = {}
    for k, z in enumerate(config.zPoints):
        mean, target, gap = resolventMeanCheck(config, z)
        rows.append({'z': z, 'empirical_mean': mean, 'target': target, 'scaled_gap': gap})
        checks['scaled_gap_%d' % k] = rangeCheck(gap, 0.0, RESOLVENT_GAP_TOL)
    writeJson(os.path.join(args.out, REPORT), {'config': config.echo(), 'resolvent': rows, 'checks': checks})
    outputs = [('z=%s' % row['z'], 'scaled gap %.4g' % row['scaled_gap']) for row in rows]
    return _finishRun(args, manifest, checks, 'resolvent', {'n': config.n, 'reps': config.reps}, outputs)


def buildParser():
    parser = CommandParser(prog='rmtlab', description='Monte Carlo laboratory for random quadratic form CLTs')
    parser.add_argument('--version', action='version', version='rmtlab ' + VERSION)
    commands = parser.add_subparsers(dest='command', parser_class=CommandParser)
    commands.required = True

    clt = commands.add_parser('clt', help='joint CLT of (X_n, Y_n)')
    _addConfigFlags(clt)
    clt.set_defaults(handler=cmdClt)

    contour = commands.add_parser('contour-check', help='Cauchy functional and variance integral gaps')
    _addConfigFlags(contour)
    contour.set_defaults(handler=cmdContourCheck)

    scaling = commands.add_parser('scaling', help='decay exponents of mean-vector moments')
    scaling.add_argument('--quantity', choices=QUANTITIES + ('all',), default='all')
    scaling.add_argument('--grid', default='256,512,1024,2048,4096')
    scaling.add_argument('--beta', type=float, default=0.5)
    scaling.add_argument('--reps', type=int, default=2000)
    scaling.add_argument('--seed', type=int, default=0)
    scaling.add_argument('--dist', default='gaussian')
    scaling.add_argument('--threads', type=int)
    _addOutputFlags(scaling)
    scaling.set_defaults(handler=cmdScaling)

    eigen = commands.add_parser('eigen', help='eigenvalue concentration around 1')
    _addConfigFlags(eigen)
    eigen.add_argument('--identity-spectrum', action='store_true', help=argparse.SUPPRESS)
    eigen.set_defaults(handler=cmdEigen)

    process = commands.add_parser('process', help='moments of the truncated process X_hat_n(z)')
    _addConfigFlags(process)
    process.set_defaults(handler=cmdProcess)

    resolvent = commands.add_parser('resolvent', help='mean deviation of the resolvent quadratic form')
    _addConfigFlags(resolvent)
    resolvent.set_defaults(handler=cmdResolvent)
    return parser


def main(argv=None):
    """Runs one command and returns its exit code"""
    logger.setLogName('rmtlab')
    parser = buildParser()
    try:
        args = parser.parse_args(argv)
        return args.handler(args)
    except ConfigError as err:
        logger.error('configuration error (%s): %s', err.kind, err)
        print('error: %s' % err, file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_CONFIG
    except NumericalError as err:
        logger.error('numerical failure (%s): %s', err.kind, err)
        print('numerical failure (%s): %s' % (err.kind, err), file=sys.stderr)
        return EXIT_NUMERICAL
    except Exception as err:
        logger.critical('unexpected error: %r', err)
        raise


def commandExec(command):
    """Runs a command line typed in the interactive shell"""
    return main(shlex.split(command))


def cli():
    sys.exit(main())
