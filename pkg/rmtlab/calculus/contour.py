'''Rectangular contour around [1 - delta, 1 + delta] with Gauss-Legendre quadrature

Note: Please try to maintain proper documentation
'''

from dataclasses import dataclass
import numpy as np
from numpy.polynomial.legendre import leggauss
from rmtlab.config.values import DEFAULT_DELTA, DEFAULT_V0, DEFAULT_NQ, DEFAULT_VARTHETA, PI, IOTA
from rmtlab.exceptions import ConfigError


@dataclass(frozen=True)
class ContourSpec(object):
    """Boundary of [uL, uR] x [-v0, v0], traversed counterclockwise

    nodes[k] and weights[k] form a quadrature rule for the closed contour integral
    of an analytic integrand, so sum_k weights[k] h(nodes[k]) approximates the integral of h(z) dz.
    """

    uL: float
    uR: float
    v0: float
    delta: float
    vartheta: float
    nodes: np.ndarray
    weights: np.ndarray
    nqPerSegment: int

    @property
    def corners(self):
        """Corners in traversal order, starting bottom left"""
        return (complex(self.uL, -self.v0), complex(self.uR, -self.v0),
                complex(self.uR, self.v0), complex(self.uL, self.v0))


def _segmentRule(a, b, x, w):
    half = (b - a) / 2
    return (a + b) / 2 + half * x, half * w


def buildContour(delta=DEFAULT_DELTA, v0=DEFAULT_V0, nqPerSegment=DEFAULT_NQ, vartheta=DEFAULT_VARTHETA):
    """Builds the contour and its Gauss-Legendre nodes, nqPerSegment on each side

    Arguments:
        delta {float} -- half-width of the enclosed real segment, in (0, 1)
        v0 {float} -- half-height, positive
        nqPerSegment {int} -- nodes per side, at least 8
        vartheta {float} -- gap exponent used by the truncated process, in (0, 1)

    Returns:
        contour {rmtlab.calculus.contour.ContourSpec}
    """
    if not 0 < delta < 1:
        raise ConfigError('delta must lie in (0, 1), got %r' % (delta,))
    if not v0 > 0:
        raise ConfigError('v0 must be positive, got %r' % (v0,))
    if int(nqPerSegment) != nqPerSegment or nqPerSegment < 8:
        raise ConfigError('nq must be an integer >= 8, got %r' % (nqPerSegment,))
    if not 0 < vartheta < 1:
        raise ConfigError('vartheta must lie in (0, 1), got %r' % (vartheta,))
    nqPerSegment = int(nqPerSegment)
    uL, uR = 1 - delta, 1 + delta
    x, w = leggauss(nqPerSegment)
    corners = (complex(uL, -v0), complex(uR, -v0), complex(uR, v0), complex(uL, v0))
    nodes = []
    weights = []
    for k in range(4):
        segmentNodes, segmentWeights = _segmentRule(corners[k], corners[(k + 1) % 4], x, w)
        nodes.append(segmentNodes)
        weights.append(segmentWeights)
    return ContourSpec(uL=uL, uR=uR, v0=float(v0), delta=float(delta), vartheta=float(vartheta),
                       nodes=np.concatenate(nodes), weights=np.concatenate(weights),
                       nqPerSegment=nqPerSegment)


def contourIntegral(integrand, contour):
    """Quadrature of a closed contour integral

    Arguments:
        integrand {callable or numpy.ndarray} -- h, or its values at contour.nodes
        contour {rmtlab.calculus.contour.ContourSpec} -- contour

    Returns:
        integral {complex} -- sum_k weights_k h(nodes_k)
    """
    values = integrand(contour.nodes) if callable(integrand) else np.asarray(integrand)
    return complex(np.sum(contour.weights * values))


def reverseContour(contour):
    """Same contour traversed clockwise"""
    return ContourSpec(uL=contour.uL, uR=contour.uR, v0=contour.v0, delta=contour.delta,
                       vartheta=contour.vartheta, nodes=contour.nodes[::-1].copy(),
                       weights=-contour.weights[::-1], nqPerSegment=contour.nqPerSegment)


def residueError(contour, pole=1.0):
    """|integral of dz / (z - pole) - 2 pi i| for a pole inside the contour"""
    return abs(contourIntegral(lambda z: 1 / (z - pole), contour) - 2 * PI * IOTA)
