import numpy as np
from rmtlab.config.values import SYM_TOL, PD_TOL


def maxAbs(A):
    """Returns the max-norm of an array (0 for empty arrays)"""
    A = np.asarray(A)
    if A.size == 0:
        return 0.0
    return float(np.max(np.abs(A)))


def isSquare(A):
    A = np.asarray(A)
    return A.ndim == 2 and A.shape[0] == A.shape[1]


def isSymmetric(A, tol=SYM_TOL):
    """Checks if a matrix is symmetric within a relative tolerance

    Arguments:
        A {numpy.ndarray} -- square matrix
        tol {float} -- tolerance relative to max(1, ||A||_max)

    Returns:
        bool -- if symmetric or not
    """
    if not isSquare(A):
        return False
    return maxAbs(A - A.T) <= tol * max(1.0, maxAbs(A))


def orthonormalityResidual(V):
    """Returns ||V V^T - I||_max"""
    V = np.asarray(V)
    return maxAbs(V @ V.T - np.eye(V.shape[0]))


def reconstructionResidual(decomposition, A):
    """Returns ||V^T diag(lambda) V - A||_max"""
    return maxAbs(decomposition.reconstruct() - np.asarray(A))


def isPositiveDefinite(eigenvalues, tol=PD_TOL):
    """Checks min eigenvalue > tol * max eigenvalue

    Arguments:
        eigenvalues {numpy.ndarray} -- eigenvalues of a symmetric matrix

    Returns:
        bool -- if positive definite or not
    """
    eigenvalues = np.asarray(eigenvalues)
    top = np.max(eigenvalues)
    return top > 0 and np.min(eigenvalues) > tol * top
