import numpy as np
from rmtlab.model.distributions import EntryDistribution
from rmtlab.model.operations import buildModel, batchFromEntries, sampleBatch
from rmtlab.model.structure import Dimensions
from rmtlab.model.distributions import getDistribution
from rmtlab.simulation.config import ExperimentConfig


def seededRng(seed=0):
    return np.random.default_rng(seed)


def identityModel(p, q=None, m=None, n=None, mu=None):
    """Model with Gamma = [I 0] and U selecting the first p coordinates, so B = [I_p 0]"""
    q = p if q is None else q
    m = q if m is None else m
    n = p + 1 if n is None else n
    return buildModel(Dimensions(p, q, m, n), mu=mu)


def randomModel(p, n, seed=0, qFactor=2, mFactor=2):
    dims = Dimensions(p, qFactor * p, mFactor * qFactor * p, n)
    return buildModel(dims, 'gaussian_random', 'random_semi_orthogonal', rng=seededRng(seed))


def handBatch(model, X):
    return batchFromEntries(model, np.array(X, dtype=float))


def scalarBatch(x):
    """p = q = m = 1, B = (1) and the given observations"""
    model = identityModel(1, n=len(x))
    return model, handBatch(model, [x])


def randomInstance(p, n, seed=0, dist='gaussian'):
    model = randomModel(p, n, seed)
    batch = sampleBatch(model, getDistribution(dist), seededRng(seed + 1))
    return model, batch


def randomSymmetric(p, seed=0):
    A = seededRng(seed).standard_normal((p, p))
    return (A + A.T) / 2


def smallConfig(**values):
    settings = dict(n=16, beta=0.25, reps=2, seed=1, threads=1)
    settings.update(values)
    return ExperimentConfig(**settings)


class PointMass(EntryDistribution):
    """Degenerate law at 0, used to force zero mean vectors and degenerate rows"""

    kind = 'point_mass'
    fourthMoment = 0.0

    def sample(self, rng, shape):
        return np.zeros(shape)

    def truncatedMoments(self, t):
        t = np.asarray(t, dtype=float)
        return np.zeros_like(t), np.zeros_like(t), np.zeros_like(t)

    def tailFourthMoment(self, t):
        return np.zeros_like(np.asarray(t, dtype=float))
