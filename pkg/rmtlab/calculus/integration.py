import numpy as np
from rmtlab.config.values import PI, IOTA
from rmtlab.exceptions import ConfigError, SpectrumOutsideContour, QuadratureError
from rmtlab.calculus.contour import contourIntegral
from rmtlab.matrix.operations import weightedEsd
from rmtlab.statistics.process import ProcessEvaluator
from rmtlab.cli import logger

IMAG_TOL = 1e-9


def cauchyFunctional(batch, model, f, contour, evaluator=None):
    """Compares sqrt(p) (sum_j t_j^2 f(lambda_j) - f(1)) with -(1 / 2 pi i) of the contour integral of f(z) X_n(z)

    Arguments:
        batch {rmtlab.model.structure.SampleBatch} -- sample batch
        model {rmtlab.model.structure.ModelSpec} -- model of the batch
        f {rmtlab.functions.structure.TestFunction} -- test function
        contour {rmtlab.calculus.contour.ContourSpec} -- contour enclosing the spectrum
        evaluator {rmtlab.statistics.process.ProcessEvaluator} -- reused when given

    Returns:
        lhs {float} -- value from the weighted ESD
        rhs {complex} -- value by contour quadrature
        gap {float} -- |lhs - rhs|
    """
    if evaluator is None:
        evaluator = ProcessEvaluator(batch, model)
    if evaluator.form != 'normalized':
        raise ConfigError('the Cauchy functional is defined for the normalized process')
    lambdas = evaluator.centered.eigenvalues
    if lambdas[0] <= contour.uL or lambdas[-1] >= contour.uR:
        raise SpectrumOutsideContour('spectrum [%g, %g] is not inside (%g, %g)'
                                     % (lambdas[0], lambdas[-1], contour.uL, contour.uR))
    esd = weightedEsd(evaluator.centered, evaluator.r)
    lhs = float(np.sqrt(model.dims.p) * (np.sum(esd.weights * np.real(f(esd.lambdas))) - f.atOne))
    integral = contourIntegral(f(contour.nodes) * evaluator(contour.nodes), contour)
    rhs = -integral / (2 * PI * IOTA)
    return lhs, rhs, abs(lhs - rhs)


def limitVarianceIntegrals(f, gPrimeAt0, contour):
    """Contour-integral forms of the limiting variances

    With I the contour integral of f(z) / (z - 1):
    var_X = -(1 / 4 pi^2) 2 I^2, cov_XY = (1 / pi i) g'(0) I, var_Y = 2 g'(0)^2.
    The double integral factorizes, so I is computed once.

    Returns:
        varX {float}
        covXY {float}
        varY {float}
    """
    single = contourIntegral(lambda z: f(z) / (z - 1), contour)
    varX = -2 * single ** 2 / (4 * PI ** 2)
    covXY = gPrimeAt0 * single / (PI * IOTA)
    residue = max(abs(varX.imag), abs(covXY.imag))
    if residue > IMAG_TOL:
        logger.warn('variance integrals for %s carry imaginary part %.3g', f, residue)
        raise QuadratureError('imaginary residue %g exceeds %g' % (residue, IMAG_TOL))
    return float(varX.real), float(covXY.real), float(2 * gPrimeAt0 ** 2)
