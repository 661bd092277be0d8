from dataclasses import dataclass
import numpy as np
from rmtlab.config.values import TINY
from rmtlab.exceptions import ZeroMeanVector
from rmtlab.matrix.operations import covarianceSet, eigSym, applyMatrixFunction


@dataclass(frozen=True)
class CLTStatistics(object):
    """The pair (X_n, Y_n) of one batch

    ratio -- v^T f(S) v / ||v||^2 with v = zbar - mu_tilde and S the centered covariance,
    normSq -- ||v||^2,
    XnUnnormalized -- (n / sqrt(p)) (v^T f(S) v - c_n f(1)), the form without division by ||v||^2.
    """

    Xn: float
    Yn: float
    ratio: float
    normSq: float
    XnUnnormalized: float

    def x(self, form='normalized'):
        return self.Xn if form == 'normalized' else self.XnUnnormalized


def computeXY(batch, model, fg, decomposition=None):
    """Computes X_n = (n / sqrt(p)) c_n (ratio - f(1)) and Y_n = (n / sqrt(p)) (g(||v||^2) - g(c_n))

    Arguments:
        batch {rmtlab.model.structure.SampleBatch} -- sample batch
        model {rmtlab.model.structure.ModelSpec} -- model of the batch
        fg {rmtlab.functions.structure.TestFunctionPair} -- test functions
        decomposition {rmtlab.matrix.structure.SpectralDecomposition} -- centered covariance decomposition, if already known

    Returns:
        statistics {rmtlab.statistics.quadratic.CLTStatistics}
    """
    v = batch.zTildeBar - model.muTilde
    normSq = float(v @ v)
    if normSq <= TINY:
        raise ZeroMeanVector('||zbar - mu_tilde||^2 = %g vanishes' % normSq)
    if decomposition is None:
        decomposition = eigSym(covarianceSet(batch, model).sCentered)
    fS = applyMatrixFunction(decomposition, fg.f)
    form = float(v @ fS @ v)
    ratio = form / normSq

    p, n = model.dims.p, batch.n
    cn = p / n
    scale = n / np.sqrt(p)
    Xn = scale * cn * (ratio - fg.fAt1)
    Yn = scale * (float(np.real(fg.g(normSq))) - float(np.real(fg.g(cn))))
    unnormalized = scale * (form - cn * fg.fAt1)
    return CLTStatistics(Xn=float(Xn), Yn=float(Yn), ratio=ratio, normSq=normSq, XnUnnormalized=float(unnormalized))
