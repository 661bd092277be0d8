import numpy as np
import pytest
from scipy import stats
from rmtlab.exceptions import ConfigError, DegenerateRow
from rmtlab.model.distributions import getDistribution
from rmtlab.model.operations import sampleBatch
from rmtlab.transform.truncation import (columnNorms, truncationThresholds, truncateStandardize,
                                         truncationTailBound, truncationShift)
from tests.tester import identityModel, randomModel, seededRng, PointMass


#######################
# columnNorms        #
#######################


def test_columnNorms():

    np.testing.assert_allclose(columnNorms(np.eye(2)), [1.0, 1.0])
    np.testing.assert_array_equal(columnNorms(np.zeros((2, 3))), np.zeros(3))
    np.testing.assert_allclose(columnNorms([[1.0, 0.0], [0.0, 0.6]]), [1.0, 0.6])


def test_truncationThresholds():

    thresholds = truncationThresholds([1.0, 0.5, 0.0], 4, 4)
    np.testing.assert_allclose(thresholds[:2], [2.0, 4.0])
    assert np.isinf(thresholds[2])


#########################
# truncateStandardize  #
#########################


def test_rademacherUnchanged():

    model = randomModel(2, 40, seed=4)
    batch = sampleBatch(model, getDistribution('rademacher'), seededRng(2))
    XHat, report = truncateStandardize(batch.X, model, getDistribution('rademacher'))
    np.testing.assert_array_equal(XHat, batch.X)
    assert report.sigmaN == 1.0
    assert report.fractionTruncated == 0.0
    assert report.mode == 'per_row'


def test_zeroNormRowUnchanged():

    # B = (1, 0): the second row never reaches the statistics
    model = identityModel(1, q=2, m=2, n=2)
    X = np.array([[0.5, 3.0], [40.0, -70.0]])
    XHat, report = truncateStandardize(X, model, getDistribution('gaussian'))
    assert np.isinf(report.thresholds[1])
    np.testing.assert_array_equal(XHat[1], X[1])


def test_handTruncation():

    model = identityModel(1, n=2)
    dist = getDistribution('gaussian')
    XHat, report = truncateStandardize(np.array([[0.5, 3.0]]), model, dist)
    threshold = 2 ** 0.25
    assert report.thresholds[0] == pytest.approx(threshold)
    assert report.fractionTruncated == 0.5
    _, second, _ = dist.truncatedMoments(np.array([threshold]))
    np.testing.assert_allclose(XHat, [[0.5 / np.sqrt(second[0]), 0.0]])
    assert report.sigmaN == pytest.approx(np.sqrt(second[0]))
    assert report.maxAbsAfter == pytest.approx(0.5 / np.sqrt(second[0]))


def test_gaussianTailFraction():

    model = identityModel(4, n=256)
    dist = getDistribution('gaussian')
    batch = sampleBatch(model, dist, seededRng(9))
    _, report = truncateStandardize(batch.X, model, dist)
    expected = 2 * stats.norm.sf((256 * 4) ** 0.25)
    standardError = np.sqrt(expected * (1 - expected) / batch.X.size)
    assert abs(report.fractionTruncated - expected) <= 3 * standardError + 1e-12


def test_highThresholdIsIdentity():

    model = identityModel(8, n=4096)
    dist = getDistribution('gaussian')
    batch = sampleBatch(model, dist, seededRng(3))
    XHat, report = truncateStandardize(batch.X, model, dist)
    assert report.fractionTruncated == 0.0
    np.testing.assert_allclose(XHat, batch.X, rtol=1e-14)


def test_untouchedBatchIsFixedPoint():

    model = identityModel(8, n=4096)
    dist = getDistribution('gaussian')
    XHat, first = truncateStandardize(sampleBatch(model, dist, seededRng(4)).X, model, dist)
    again, second = truncateStandardize(XHat, model, dist)
    assert first.fractionTruncated == second.fractionTruncated == 0.0
    np.testing.assert_allclose(again, XHat, rtol=1e-8)


@pytest.mark.parametrize('mode', ['per_row', 'uniform_sigma'])
@pytest.mark.parametrize('kind', ['gaussian', 'rademacher', 'uniform_unit_var', 'centered_exponential'])
def test_maxAbsAfterBound(kind, mode):

    n = 64
    model = randomModel(4, n, seed=2)
    dist = getDistribution(kind)
    _, report = truncateStandardize(dist.sample(seededRng(9), (model.dims.m, n)), model, dist, mode)
    assert report.maxAbsAfter <= 2 * (n * model.dims.p) ** 0.25


def test_truncatedFractionDecreasing():

    dist = getDistribution('centered_exponential')
    fractions = []
    for n in [16, 64, 256, 1024]:
        model = identityModel(4, n=n)
        rng = seededRng(n)
        values = [truncateStandardize(dist.sample(rng, (4, n)), model, dist)[1].fractionTruncated for _ in range(200)]
        fractions.append(np.mean(values))
    assert all(later < earlier for earlier, later in zip(fractions, fractions[1:]))


@pytest.mark.parametrize('mode', ['per_row', 'uniform_sigma'])
def test_modesUndoToCutEntries(mode):

    model = randomModel(2, 16, seed=6)
    dist = getDistribution('centered_exponential')
    X = dist.sample(seededRng(8), (model.dims.m, 16))
    XHat, report = truncateStandardize(X, model, dist, mode)
    mean, second, _ = dist.truncatedMoments(report.thresholds)
    rowSigma = np.sqrt(second - mean ** 2)
    assert report.sigmaN == pytest.approx(np.sqrt(np.mean(rowSigma ** 2)))
    scale = rowSigma if mode == 'per_row' else np.full(model.dims.m, report.sigmaN)
    cut = np.where(np.abs(X) > report.thresholds[:, None], 0.0, X)
    np.testing.assert_allclose(XHat * scale[:, None] + mean[:, None], cut, atol=1e-12)


def test_standardizedMoments():

    # threshold (16 * 1)^{1/4} = 2 cuts about 5% of centered exponential entries
    model = identityModel(1, n=16)
    dist = getDistribution('centered_exponential')
    rng = seededRng(12)
    values = []
    fractions = []
    for _ in range(4000):
        XHat, report = truncateStandardize(dist.sample(rng, (1, 16)), model, dist)
        values.append(XHat.ravel())
        fractions.append(report.fractionTruncated)
    values = np.concatenate(values)
    assert abs(values.mean()) < 0.02
    assert abs(values.var() - 1) < 0.05
    assert np.mean(fractions) == pytest.approx(np.exp(-3), abs=0.005)


def test_truncationErrors():

    model = identityModel(2, n=8)
    X = np.ones((2, 8))
    with pytest.raises(ConfigError):
        truncateStandardize(X, model, getDistribution('gaussian'), 'off')
    with pytest.raises(ConfigError):
        truncateStandardize(X, model, getDistribution('gaussian'), 'winsorize')
    with pytest.raises(ConfigError):
        truncateStandardize(np.ones((3, 8)), model, getDistribution('gaussian'))
    with pytest.raises(DegenerateRow):
        truncateStandardize(X, model, PointMass())


########################
# bounds and shifts   #
########################


def test_tailBoundDecreasing():

    model = identityModel(2, n=4096)
    gaussian = getDistribution('gaussian')
    exponential = getDistribution('centered_exponential')
    small, _ = truncationTailBound(model, gaussian, 64)
    large, _ = truncationTailBound(model, gaussian, 4096)
    assert large < small
    _, fourthSmall = truncationTailBound(model, exponential, 64)
    _, fourthLarge = truncationTailBound(model, exponential, 4096)
    assert 0 < fourthLarge < fourthSmall < exponential.fourthMoment


def test_truncationShiftRademacher():

    model = randomModel(2, 30, seed=1)
    dist = getDistribution('rademacher')
    batch = sampleBatch(model, dist, seededRng(4))
    qformShift, normShift = truncationShift(batch, model, dist, -1.0)
    assert qformShift == 0.0
    assert normShift == 0.0
