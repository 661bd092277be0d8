'''Parsing of test-function names into TestFunction objects

f is given as poly:[c0,c1,...] or expaff:a,c; g is one of identity, poly2, expm1.
'''

from rmtlab.exceptions import ConfigError
from rmtlab.functions.exponential import ExpAffine
from rmtlab.functions.polynomial import Polynomial
from rmtlab.functions.structure import TestFunctionPair

G_REGISTRY = {
    'identity': lambda: Polynomial([0.0, 1.0]),
    'poly2': lambda: Polynomial([0.0, 1.0, 1.0]),
    'expm1': lambda: ExpAffine(1.0, -1.0),
}

DEFAULT_F = ('poly:[0,1]', 'poly:[0,0,1]', 'poly:[-3,2]', 'expaff:1,0')
DEFAULT_G = tuple(G_REGISTRY)


def _numbers(text, name):
    try:
        return [float(c) for c in text.split(',') if c.strip()]
    except ValueError:
        raise ConfigError('cannot read numbers from %s %r' % (name, text))


def makeF(spec):
    """Builds f from its config string

    Arguments:
        spec {string} -- poly:[c0,c1,...] or expaff:a,c

    Returns:
        f {rmtlab.functions.structure.TestFunction}
    """
    spec = spec.replace(' ', '')
    kind, _, body = spec.partition(':')
    if kind == 'poly':
        if not (body.startswith('[') and body.endswith(']')):
            raise ConfigError('polynomial f must look like poly:[c0,c1,...], got %r' % spec)
        coefficients = _numbers(body[1:-1], 'f')
        if not coefficients:
            raise ConfigError('polynomial f needs at least one coefficient')
        return Polynomial(coefficients)
    if kind == 'expaff':
        values = _numbers(body, 'f')
        if len(values) != 2:
            raise ConfigError('affine-exponential f must look like expaff:a,c, got %r' % spec)
        return ExpAffine(*values)
    raise ConfigError('unknown test function %r (expected poly:[...] or expaff:a,c)' % spec)


def makeG(spec):
    try:
        return G_REGISTRY[spec.strip()]()
    except KeyError:
        raise ConfigError('unknown g %r (expected one of %s)' % (spec, ', '.join(G_REGISTRY)))


def makePair(fSpec, gSpec):
    return TestFunctionPair(makeF(fSpec), makeG(gSpec))
