'''Declarative configuration of one Monte Carlo run

Note: Please try to maintain proper documentation
'''

from dataclasses import dataclass, field, asdict
import numpy as np
from rmtlab.config.values import (Q_FACTOR, M_FACTOR, TRUNCATION_MODES, X_FORMS, DEFAULT_DELTA, DEFAULT_V0,
                                  DEFAULT_NQ, DEFAULT_VARTHETA)
from rmtlab.exceptions import ConfigError, InvalidPoint
from rmtlab.calculus.contour import buildContour
from rmtlab.functions.registry import makePair
from rmtlab.model.distributions import getDistribution
from rmtlab.model.operations import dimsFromRegime
from rmtlab.simulation.seeds import SEED_MASK


@dataclass
class ExperimentConfig(object):
    """All inputs of a replicated experiment

    Model keys (n, beta, scale, qFactor, mFactor, gammaKind, uKind, dist, muMode),
    statistic keys (f, g, xForm, zPoints), contour keys (delta, v0, nq, vartheta) and
    run keys (reps, seed, truncation, threads, resampleDegenerate).
    """

    n: int = None
    beta: float = 0.4
    scale: float = 1.0
    qFactor: int = Q_FACTOR
    mFactor: int = M_FACTOR
    gammaKind: str = 'identity_padded'
    uKind: str = 'coordinate_selection'
    dist: str = 'gaussian'
    muMode: str = 'zero'
    seed: int = 0
    truncation: str = 'off'
    xForm: str = 'normalized'
    f: str = 'poly:[0,1]'
    g: str = 'identity'
    reps: int = 100
    zPoints: tuple = field(default_factory=tuple)
    delta: float = DEFAULT_DELTA
    v0: float = DEFAULT_V0
    nq: int = DEFAULT_NQ
    vartheta: float = DEFAULT_VARTHETA
    threads: int = None
    resampleDegenerate: bool = True

    def validate(self):
        """Checks every field and returns self

        Raises:
            ConfigError -- on a missing or malformed value
            InvalidPoint -- when a z point lies on the real segment [u_l, u_r]
        """
        if self.n is None:
            raise ConfigError('n is required')
        if int(self.reps) != self.reps or self.reps < 2:
            raise ConfigError('reps must be an integer >= 2, got %r' % (self.reps,))
        if self.truncation not in TRUNCATION_MODES:
            raise ConfigError('truncation must be one of %s, got %r' % (', '.join(TRUNCATION_MODES), self.truncation))
        if self.xForm not in X_FORMS:
            raise ConfigError('x_form must be one of %s, got %r' % (', '.join(X_FORMS), self.xForm))
        if self.threads is not None and (int(self.threads) != self.threads or self.threads < 1):
            raise ConfigError('threads must be a positive integer, got %r' % (self.threads,))
        if int(self.seed) != self.seed or self.seed < 0:
            raise ConfigError('seed must be a non-negative integer, got %r' % (self.seed,))
        self.seed = int(self.seed) & SEED_MASK
        self.muValue()
        self.dims()
        self.distribution()
        self.fg()
        contour = self.contour()
        self.zPoints = tuple(complex(z) for z in self.zPoints)
        for z in self.zPoints:
            if z.imag == 0 and contour.uL <= z.real <= contour.uR:
                raise InvalidPoint('z=%s lies on the real segment [%g, %g]' % (z, contour.uL, contour.uR))
        return self

    def muValue(self):
        if self.muMode == 'zero':
            return 0.0
        kind, _, value = self.muMode.partition(':')
        if kind == 'constant':
            try:
                return float(value)
            except ValueError:
                pass
        raise ConfigError("mu_mode must be 'zero' or 'constant:<value>', got %r" % (self.muMode,))

    def mu(self, dims):
        return np.full(dims.q, self.muValue())

    def dims(self):
        return dimsFromRegime(self.n, self.beta, self.scale, self.qFactor, self.mFactor)

    def contour(self):
        return buildContour(self.delta, self.v0, self.nq, self.vartheta)

    def fg(self):
        return makePair(self.f, self.g)

    def distribution(self):
        return getDistribution(self.dist)

    def echo(self):
        """Plain dict of the configuration for manifests and reports"""
        values = asdict(self)
        values['zPoints'] = [[z.real, z.imag] for z in map(complex, self.zPoints)]
        return values
