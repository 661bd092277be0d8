import numpy as np
import pytest
from rmtlab.calculus.contour import buildContour, contourIntegral, reverseContour, residueError
from rmtlab.calculus.integration import cauchyFunctional, limitVarianceIntegrals
from rmtlab.exceptions import ConfigError, SpectrumOutsideContour
from rmtlab.functions.polynomial import Polynomial
from rmtlab.functions.registry import makeF, makeG, DEFAULT_F, DEFAULT_G
from rmtlab.statistics.process import ProcessEvaluator
from tests.tester import scalarBatch, randomInstance

#####################
# calculus.contour #
#####################


def test_buildContour():

    contour = buildContour()
    assert (contour.uL, contour.uR, contour.v0) == (0.5, 1.5, 1.0)
    assert contour.nodes.shape == (256,)
    assert contour.corners == (0.5 - 1j, 1.5 - 1j, 1.5 + 1j, 0.5 + 1j)
    assert np.all((contour.nodes.real >= 0.5) & (contour.nodes.real <= 1.5))
    assert np.max(np.abs(contour.nodes.imag)) <= 1.0

    for values in ({'delta': 0.0}, {'delta': 1.0}, {'v0': 0.0}, {'nqPerSegment': 7}, {'vartheta': 1.0}):
        with pytest.raises(ConfigError):
            buildContour(**values)


def test_contourIntegral():

    contour = buildContour(0.5, 1.0, 64)
    assert abs(np.sum(contour.weights)) <= 1e-13
    assert abs(contourIntegral(lambda z: 1 / (z - 1), contour) - 2j * np.pi) <= 1e-10
    assert abs(contourIntegral(lambda z: 1 / (z - 5), contour)) <= 1e-10
    assert abs(contourIntegral(1 / (contour.nodes - 1.2), contour) - 2j * np.pi) <= 1e-10
    assert residueError(contour) <= 1e-10


def test_reverseContour():

    contour = buildContour()
    reverse = reverseContour(contour)
    h = lambda z: np.exp(z) / (z - 1.1)
    assert contourIntegral(h, reverse) == pytest.approx(-contourIntegral(h, contour))


def test_residueConvergence():

    coarse = residueError(buildContour(nqPerSegment=8))
    fine = residueError(buildContour(nqPerSegment=16))
    assert fine * 10 <= coarse


#########################
# calculus.integration #
#########################


def test_cauchyFunctionalScalar():

    # x = (1, 3.2): the centered covariance is s = 1.21
    model, batch = scalarBatch([1.0, 3.2])
    lhs, rhs, gap = cauchyFunctional(batch, model, Polynomial([0, 0, 1]), buildContour())
    assert lhs == pytest.approx(1.21 ** 2 - 1)
    assert gap <= 1e-8
    assert abs(rhs.imag) <= 1e-8


def test_cauchyFunctionalConstant():

    model, batch = randomInstance(8, 500, seed=2)
    lhs, rhs, _ = cauchyFunctional(batch, model, Polynomial([1]), buildContour())
    assert abs(lhs) <= 1e-12
    assert abs(rhs) <= 1e-8


@pytest.mark.parametrize('spec', DEFAULT_F)
def test_cauchyFunctionalRandom(spec):

    model, batch = randomInstance(8, 500, seed=3)
    evaluator = ProcessEvaluator(batch, model)
    _, _, gap = cauchyFunctional(batch, model, makeF(spec), buildContour(nqPerSegment=256), evaluator)
    assert gap <= 1e-6


def test_cauchyFunctionalManyInstances():

    contour = buildContour(nqPerSegment=256)
    f = Polynomial([0, 0, 1])
    gaps = []
    for seed in range(50):
        model, batch = randomInstance(8, 500, seed=seed)
        _, _, gap = cauchyFunctional(batch, model, f, contour, ProcessEvaluator(batch, model))
        gaps.append(gap)
    assert max(gaps) <= 1e-6


def test_cauchyFunctionalErrors():

    model, batch = randomInstance(8, 50, seed=4)
    with pytest.raises(SpectrumOutsideContour):
        cauchyFunctional(batch, model, Polynomial([0, 1]), buildContour(delta=0.001))
    with pytest.raises(ConfigError):
        cauchyFunctional(batch, model, Polynomial([0, 1]), buildContour(),
                         ProcessEvaluator(batch, model, 'unnormalized'))


def test_limitVarianceIntegrals():

    contour = buildContour()
    np.testing.assert_allclose(limitVarianceIntegrals(Polynomial([0, 1]), 1.0, contour), (2, 2, 2), atol=1e-8)
    np.testing.assert_allclose(limitVarianceIntegrals(Polynomial([0, 0, 1]), 3.0, contour), (2, 6, 18), atol=1e-8)
    np.testing.assert_allclose(limitVarianceIntegrals(Polynomial([-3, 2]), 1.0, contour), (2, -2, 2), atol=1e-8)


@pytest.mark.parametrize('fSpec', DEFAULT_F)
@pytest.mark.parametrize('gName', DEFAULT_G)
def test_limitVarianceIntegralsRegistry(fSpec, gName):

    f = makeF(fSpec)
    gPrime = makeG(gName).derivativeAtZero
    expected = (2 * f.atOne ** 2, 2 * gPrime * f.atOne, 2 * gPrime ** 2)
    np.testing.assert_allclose(limitVarianceIntegrals(f, gPrime, buildContour(nqPerSegment=256)), expected, atol=1e-8)
