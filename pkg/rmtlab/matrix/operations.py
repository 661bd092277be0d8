import numpy as np
import scipy.linalg
from rmtlab.config.values import TINY
from rmtlab.exceptions import DecompositionFailure, NotSymmetric, ZeroVector
from rmtlab.matrix.checks import isSymmetric, maxAbs
from rmtlab.matrix.structure import SpectralDecomposition, CovarianceSet, WeightedESD


def eigSym(A):
    """Symmetric eigendecomposition in the row convention A = V^T diag(lambda) V

    Arguments:
        A {numpy.ndarray} -- real symmetric p x p matrix

    Returns:
        decomposition {rmtlab.matrix.structure.SpectralDecomposition} -- ascending eigenvalues, rows are eigenvectors
    """
    A = np.asarray(A, dtype=float)
    if not isSymmetric(A):
        raise NotSymmetric('matrix of shape %s is not symmetric' % (A.shape,))
    try:
        eigenvalues, eigenvectors = scipy.linalg.eigh((A + A.T) / 2)
    except (np.linalg.LinAlgError, ValueError) as err:
        raise DecompositionFailure('symmetric eigensolver did not converge: %s' % err)
    return SpectralDecomposition(eigenvalues=eigenvalues, eigenvectors=eigenvectors.T)


def applyMatrixFunction(decomposition, f):
    """Computes f(A) = V^T diag(f(lambda_1), ..., f(lambda_p)) V

    Arguments:
        decomposition {rmtlab.matrix.structure.SpectralDecomposition} -- decomposition of A
        f {callable} -- function defined at every eigenvalue

    Returns:
        fA {numpy.ndarray} -- real symmetric p x p matrix
    """
    values = np.real_if_close(np.asarray(f(decomposition.eigenvalues)))
    values = np.broadcast_to(values, decomposition.eigenvalues.shape).astype(float)
    V = decomposition.eigenvectors
    return (V.T * values) @ V


def covarianceSet(batch, model):
    """Centered and uncentered sample covariances of a batch in whitened coordinates

    Arguments:
        batch {rmtlab.model.structure.SampleBatch} -- sample batch
        model {rmtlab.model.structure.ModelSpec} -- model the batch was drawn from

    Returns:
        covariance {rmtlab.matrix.structure.CovarianceSet}
    """
    n = batch.n
    W = model.B @ batch.X
    r = batch.Bxbar
    sUncentered = W @ W.T / n
    Wc = W - W.mean(axis=1, keepdims=True)
    sCentered = Wc @ Wc.T / n
    residual = maxAbs(sCentered - (sUncentered - np.outer(r, r)))
    return CovarianceSet(sCentered=sCentered, sUncentered=sUncentered, relationResidual=residual)


def weightedEsd(decomposition, v):
    """Weighted ESD with masses t_j^2, t = V v / ||v||

    Arguments:
        decomposition {rmtlab.matrix.structure.SpectralDecomposition} -- decomposition of S
        v {numpy.ndarray} -- nonzero vector

    Returns:
        esd {rmtlab.matrix.structure.WeightedESD}
    """
    v = np.asarray(v, dtype=float)
    norm = np.linalg.norm(v)
    if norm <= TINY:
        raise ZeroVector('cannot normalise a vector of norm %g' % norm)
    t = decomposition.project(v / norm)
    return WeightedESD(lambdas=decomposition.eigenvalues, weights=t ** 2)


def esd(decomposition):
    """Plain ESD placing mass 1/p at every eigenvalue"""
    p = decomposition.p
    return WeightedESD(lambdas=decomposition.eigenvalues, weights=np.full(p, 1.0 / p))
