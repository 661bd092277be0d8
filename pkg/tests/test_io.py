import json
import os
import numpy as np
import pytest
from rmtlab.exceptions import ConfigError, InvalidPoint
from rmtlab.io.parser import (isFloat, isInt, parseBool, parseComplex, parseComplexList, parseGrid,
                              parseConfigText, readConfigFile, mergeConfig)
from rmtlab.io.writer import (formatFloat, toJsonable, writeJson, RunManifest, writePerRep, readPerRep,
                              resultString, MANIFEST)
from rmtlab.simulation.report import RepRecord

###############
# io.parser  #
###############


def test_scalars():

    assert isFloat('1e-3') and not isFloat('x')
    assert isInt('12') and not isInt('1.5')
    assert parseBool(' Yes ') is True
    assert parseBool('off') is False
    with pytest.raises(ConfigError):
        parseBool('maybe')


def test_parseComplex():

    assert parseComplex('-1') == -1
    assert parseComplex('1+i') == 1 + 1j
    assert parseComplex('2 + 0.5i') == 2 + 0.5j
    assert parseComplex('1-1j') == 1 - 1j
    with pytest.raises(InvalidPoint):
        parseComplex('one')
    assert parseComplexList('-1, 1+i,1-i') == (-1, 1 + 1j, 1 - 1j)
    assert parseComplexList(['1+i', 2]) == (1 + 1j, 2)
    assert parseGrid('64, 128,256') == [64, 128, 256]
    with pytest.raises(ConfigError):
        parseGrid('64,1e3')


def test_parseConfigText():

    text = '''
    # desk scale run
    n = 4000
    beta = 0.4
    f = poly:[0, 1]
    z_points = -1, 1+i
    resample_degenerate = no
    x_form = unnormalized
    '''
    values = parseConfigText(text)
    assert values == {'n': 4000, 'beta': 0.4, 'f': 'poly:[0, 1]', 'zPoints': (-1, 1 + 1j),
                      'resampleDegenerate': False, 'xForm': 'unnormalized'}

    with pytest.raises(ConfigError, match='unknown key'):
        parseConfigText('size = 3')
    with pytest.raises(ConfigError, match='key = value'):
        parseConfigText('n 3')
    with pytest.raises(ConfigError, match='run.cfg:2: n'):
        parseConfigText('beta = 0.4\nn = many', 'run.cfg')
    with pytest.raises(InvalidPoint):
        parseConfigText('z_points = 1+q')


def test_readConfigFile(tmp_path):

    path = tmp_path / 'run.cfg'
    path.write_text('n = 64\nseed = 9\n')
    assert readConfigFile(str(path)) == {'n': 64, 'seed': 9}
    with pytest.raises(ConfigError):
        readConfigFile(str(tmp_path / 'missing.cfg'))


def test_mergeConfig():

    config = mergeConfig({'n': 64, 'reps': 5, 'seed': 3}, {'n': 128, 'reps': None}, environ={})
    assert (config.n, config.reps, config.seed) == (128, 5, 3)

    assert mergeConfig({}, {'n': 64}, environ={'RMTLAB_SEED': '42'}).seed == 42
    assert mergeConfig({}, {'n': 64}, environ={}).seed == 0
    assert mergeConfig({'seed': 1}, {}, environ={'RMTLAB_SEED': '42'}).seed == 1
    assert mergeConfig({}, {'seed': 7}, environ={'RMTLAB_SEED': '42'}).seed == 7
    assert mergeConfig({}, {'n': 64, 'zPoints': '-1,1+i'}, environ={}).zPoints == (-1, 1 + 1j)
    with pytest.raises(ConfigError):
        mergeConfig({}, {'n': 64}, environ={'RMTLAB_SEED': 'abc'})


###############
# io.writer  #
###############


def test_toJsonable():

    payload = toJsonable({'z': 1 - 2j, 'values': np.array([1.5, np.nan]), 'count': np.int64(3),
                          'flag': np.bool_(True), 1: (np.float64(np.inf),)})
    assert payload == {'z': {'re': 1.0, 'im': -2.0}, 'values': [1.5, None], 'count': 3, 'flag': True, '1': [None]}
    assert float(formatFloat(0.1)) == 0.1
    assert formatFloat(1 / 3) == '0.33333333333333331'


def test_writeJson(tmp_path):

    path = str(tmp_path / 'report.json')
    writeJson(path, {'b': 1, 'a': [1j]})
    with open(path) as f:
        text = f.read()
    assert text.index('"a"') < text.index('"b"')
    assert json.loads(text) == {'a': [{'re': 0.0, 'im': 1.0}], 'b': 1}


def test_RunManifest(tmp_path):

    outDir = str(tmp_path / 'run')
    manifest = RunManifest(outDir, 'clt', {'n': 16}, 5).start()
    with open(os.path.join(outDir, MANIFEST)) as f:
        started = json.load(f)
    assert started['end'] is None
    assert started['master_seed'] == 5

    manifest.addOutput(os.path.join(outDir, 'per_rep.csv'))
    manifest.finish(3)
    with open(os.path.join(outDir, MANIFEST)) as f:
        finished = json.load(f)
    assert finished['outputs'] == ['per_rep.csv']
    assert finished['exit_code'] == 3
    assert finished['end'] is not None


def test_perRepFile(tmp_path):

    records = [RepRecord(rep=k, Xn=0.1 * k, Yn=1 / 3, normSq=0.5, lambdaMin=0.9, lambdaMax=1.1, Xz=(1 + 2j,))
               for k in range(3)]
    path = writePerRep(str(tmp_path / 'per_rep.csv'), records, 1)
    header, rows = readPerRep(path)
    assert header == ['rep', 'X_n', 'Y_n', 'norm_sq', 'lambda_min', 'lambda_max', 'Xz_re_0', 'Xz_im_0']
    assert len(rows) == 3
    assert rows[2] == [2, 0.2, 1 / 3, 0.5, 0.9, 1.1, 1.0, 2.0]


def test_resultString():

    text = resultString('clt', {'n': 16, 'reps': 2}, [('var Y_n', 2.0123456789), ('p', 2)])
    lines = text.splitlines()
    assert lines[0] == 'OPERATION: clt'
    assert lines[1] == 'INPUT: n=16, reps=2'
    assert lines[2] == 'OUTPUT:'
    assert lines[3] == '  var Y_n  2.01235'
    assert lines[4] == '  p        2'
