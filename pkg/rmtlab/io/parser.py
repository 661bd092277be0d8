'''Reading of run configuration: flat key = value files, command-line flags and z lists

Note: Please try to maintain proper documentation
'''

import os
from rmtlab.config.values import SEED_ENV
from rmtlab.exceptions import ConfigError, InvalidPoint
from rmtlab.simulation.config import ExperimentConfig


def isFloat(val):

    try:
        float(val)
        return True
    except ValueError:
        return False


def isInt(val):

    try:
        int(val)
        return True
    except ValueError:
        return False


def parseInt(text):
    text = text.strip()
    if not isInt(text):
        raise ConfigError('expected an integer, got %r' % text)
    return int(text)


def parseFloat(text):
    text = text.strip()
    if not isFloat(text):
        raise ConfigError('expected a number, got %r' % text)
    return float(text)


def parseBool(text):
    text = text.strip().lower()
    if text in ('1', 'true', 'yes', 'on'):
        return True
    if text in ('0', 'false', 'no', 'off'):
        return False
    raise ConfigError('expected a boolean, got %r' % text)


def parseComplex(text):
    """Reads a complex number written with i or j, e.g. -1, 1+i, 2+0.5i"""
    cleaned = text.strip().replace(' ', '').replace('i', 'j')
    try:
        return complex(cleaned)
    except ValueError:
        raise InvalidPoint('invalid z value %r' % text)


def parseComplexList(text):
    if isinstance(text, (list, tuple)):
        return tuple(complex(z) if not isinstance(z, str) else parseComplex(z) for z in text)
    return tuple(parseComplex(z) for z in text.split(',') if z.strip())


def parseGrid(text):
    """Reads a comma separated list of sample sizes"""
    if isinstance(text, (list, tuple)):
        return [parseInt(str(n)) for n in text]
    return [parseInt(n) for n in text.split(',') if n.strip()]


def _text(value):
    return value.strip()


# config file key -> (ExperimentConfig field, reader)
CONFIG_KEYS = {
    'n': ('n', parseInt),
    'beta': ('beta', parseFloat),
    'scale': ('scale', parseFloat),
    'q_factor': ('qFactor', parseInt),
    'm_factor': ('mFactor', parseInt),
    'gamma_kind': ('gammaKind', _text),
    'u_kind': ('uKind', _text),
    'dist': ('dist', _text),
    'mu_mode': ('muMode', _text),
    'seed': ('seed', parseInt),
    'truncation': ('truncation', _text),
    'x_form': ('xForm', _text),
    'f': ('f', _text),
    'g': ('g', _text),
    'reps': ('reps', parseInt),
    'z_points': ('zPoints', parseComplexList),
    'delta': ('delta', parseFloat),
    'v0': ('v0', parseFloat),
    'nq': ('nq', parseInt),
    'vartheta': ('vartheta', parseFloat),
    'threads': ('threads', parseInt),
    'resample_degenerate': ('resampleDegenerate', parseBool),
}


def parseConfigText(text, source='<config>'):
    """Parses key = value lines; blank lines and # comments are skipped

    Returns:
        values {dict} -- ExperimentConfig field name -> value
    """
    values = {}
    for number, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith('#'):
            continue
        key, sep, value = line.partition('=')
        key = key.strip()
        if not sep:
            raise ConfigError('%s:%d: expected key = value, got %r' % (source, number, line))
        if key not in CONFIG_KEYS:
            raise ConfigError('%s:%d: unknown key %r' % (source, number, key))
        name, reader = CONFIG_KEYS[key]
        try:
            values[name] = reader(value)
        except ConfigError as err:
            raise err.__class__('%s:%d: %s: %s' % (source, number, key, err))
    return values


def readConfigFile(path):
    try:
        with open(path) as f:
            return parseConfigText(f.read(), path)
    except IOError as err:
        raise ConfigError('cannot read config file %s: %s' % (path, err))


def mergeConfig(fileValues, flagValues, environ=None):
    """Builds an ExperimentConfig; flags win over file values

    The seed falls back to $RMTLAB_SEED, then 0.

    Arguments:
        fileValues {dict} -- values from the config file
        flagValues {dict} -- values given on the command line (None when absent)

    Returns:
        config {rmtlab.simulation.config.ExperimentConfig}
    """
    environ = os.environ if environ is None else environ
    values = dict(fileValues)
    values.update({k: v for k, v in flagValues.items() if v is not None})
    if 'seed' not in values:
        values['seed'] = parseInt(environ[SEED_ENV]) if environ.get(SEED_ENV, '').strip() else 0
    if 'zPoints' in values:
        values['zPoints'] = parseComplexList(values['zPoints'])
    return ExperimentConfig(**values)
