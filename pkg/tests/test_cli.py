import datetime
import json
import os
import pytest
from rmtlab.cli import logger
from rmtlab.cli.commands import main, commandExec, EXIT_OK, EXIT_CONFIG, EXIT_NUMERICAL, EXIT_CHECK
from rmtlab.io.writer import readPerRep


def _run(tmp_path, name, *argv):
    outDir = str(tmp_path / name)
    return main(list(argv) + ['--out', outDir]), outDir


def _json(outDir, name='report.json'):
    with open(os.path.join(outDir, name)) as f:
        return json.load(f)


def _read(outDir, name='per_rep.csv'):
    with open(os.path.join(outDir, name), 'rb') as f:
        return f.read()


##############
# cli: clt  #
##############


def test_clt(tmp_path, capsys):

    argv = ['clt', '--n', '64', '--beta', '0.4', '--reps', '4', '--f', 'poly:[0,1]', '--g', 'identity', '--seed', '1']
    code, first = _run(tmp_path, 'first', *argv)
    assert code == EXIT_OK
    header, rows = readPerRep(os.path.join(first, 'per_rep.csv'))
    assert header[:3] == ['rep', 'X_n', 'Y_n']
    assert [row[0] for row in rows] == [0, 1, 2, 3]
    assert 'OPERATION: clt' in capsys.readouterr().out

    manifest = _json(first, 'manifest.json')
    assert manifest['command'] == 'clt'
    assert manifest['master_seed'] == 1
    assert manifest['exit_code'] == 0
    assert sorted(manifest['outputs']) == ['per_rep.csv', 'report.json']
    report = _json(first)
    assert report['dims']['p'] == 5
    assert report['reps'] == 4

    code, second = _run(tmp_path, 'second', *argv)
    assert code == EXIT_OK
    assert _read(first) == _read(second)


def test_cltSeedFromEnvironment(tmp_path, monkeypatch):

    monkeypatch.setenv('RMTLAB_SEED', '1')
    code, fromEnv = _run(tmp_path, 'env', 'clt', '--n', '16', '--beta', '0.25', '--reps', '2')
    assert code == EXIT_OK
    monkeypatch.delenv('RMTLAB_SEED')
    code, fromFlag = _run(tmp_path, 'flag', 'clt', '--n', '16', '--beta', '0.25', '--reps', '2', '--seed', '1')
    assert _read(fromEnv) == _read(fromFlag)


def test_cltConfigFile(tmp_path):

    path = tmp_path / 'run.cfg'
    path.write_text('n = 16\nbeta = 0.25\nreps = 3\nseed = 2\n')
    code, outDir = _run(tmp_path, 'cfg', 'clt', '--config', str(path), '--reps', '2')
    assert code == EXIT_OK
    assert len(readPerRep(os.path.join(outDir, 'per_rep.csv'))[1]) == 2


def test_cltConfigErrors(tmp_path, capsys):

    code, _ = _run(tmp_path, 'missing', 'clt', '--reps', '2')
    assert code == EXIT_CONFIG
    assert 'usage' in capsys.readouterr().err
    assert _run(tmp_path, 'flag', 'clt', '--n', 'many')[0] == EXIT_CONFIG
    assert _run(tmp_path, 'regime', 'clt', '--n', '4', '--beta', '0.99', '--scale', '3')[0] == EXIT_CONFIG
    assert _run(tmp_path, 'hypothesis', 'clt', '--n', '16', '--f', 'poly:[-1,1]')[0] == EXIT_CONFIG
    assert main(['unknown']) == EXIT_CONFIG


##########################
# cli: contour-check    #
##########################


def test_contourCheck(tmp_path):

    base = ['contour-check', '--n', '400', '--beta', '0.3', '--reps', '2']
    code, coarse = _run(tmp_path, 'coarse', *(base + ['--nq', '8']))
    assert code == EXIT_OK
    code, fine = _run(tmp_path, 'fine', *(base + ['--nq', '64']))
    assert code == EXIT_OK
    assert _json(fine)['residue_error'] < _json(coarse)['residue_error']
    assert _json(fine)['checks']['variance_gap']['passed']
    assert len(_json(fine)['cauchy']) == 2 * 4
    assert len(_json(fine)['variance']) == 4 * 3

    code, _ = _run(tmp_path, 'strict', *(base + ['--nq', '8', '--check']))
    assert code == EXIT_CHECK


def test_contourCheckTinyContour(tmp_path, capsys):

    code, _ = _run(tmp_path, 'tiny', 'contour-check', '--n', '50', '--delta', '0.001', '--reps', '2')
    assert code == EXIT_NUMERICAL
    assert 'spectrum_outside_contour' in capsys.readouterr().err


####################
# cli: scaling    #
####################


def test_scaling(tmp_path):

    code, outDir = _run(tmp_path, 'grid', 'scaling', '--quantity', 'mean_norm_dev', '--grid', '16,32,64,128',
                        '--reps', '10', '--threads', '1')
    assert code == EXIT_OK
    report = _json(outDir)
    assert [r['quantity'] for r in report['results']] == ['mean_norm_dev']
    assert report['results'][0]['expected_slope'] == -1.5

    assert _run(tmp_path, 'small', 'scaling', '--grid', '256,512')[0] == EXIT_CONFIG
    assert _run(tmp_path, 'quantity', 'scaling', '--quantity', 'norm')[0] == EXIT_CONFIG


#####################################
# cli: eigen, process, resolvent   #
#####################################


def test_eigenIdentitySpectrum(tmp_path):

    code, outDir = _run(tmp_path, 'eigen', 'eigen', '--n', '16', '--beta', '0.25', '--reps', '3',
                        '--identity-spectrum')
    assert code == EXIT_OK
    assert _json(outDir)['concentration'] == {'p50': 0.0, 'p95': 0.0, 'p99': 0.0, 'p100': 0.0}
    assert len(readPerRep(os.path.join(outDir, 'per_rep.csv'))[1]) == 3


def test_process(tmp_path):

    code, outDir = _run(tmp_path, 'process', 'process', '--n', '16', '--beta', '0.25', '--reps', '3',
                        '--z=-1,1+i,1-i')
    assert code == EXIT_OK
    header, rows = readPerRep(os.path.join(outDir, 'per_rep.csv'))
    assert header[-2:] == ['Xz_re_2', 'Xz_im_2']
    assert len(rows) == 3
    assert rows[0][-1] == pytest.approx(-rows[0][-3])

    assert _run(tmp_path, 'segment', 'process', '--n', '16', '--beta', '0.25', '--z', '1.2')[0] == EXIT_CONFIG
    assert _run(tmp_path, 'nopoints', 'process', '--n', '16', '--beta', '0.25')[0] == EXIT_CONFIG


def test_resolvent(tmp_path):

    code, outDir = _run(tmp_path, 'resolvent', 'resolvent', '--n', '16', '--beta', '0.25', '--reps', '4',
                        '--z=-1,1+i')
    assert code == EXIT_OK
    rows = _json(outDir)['resolvent']
    assert rows[0]['target'] == {'re': pytest.approx(0.0625), 'im': 0.0}
    assert rows[1]['target'] == {'re': pytest.approx(0.0), 'im': pytest.approx(0.125)}

    assert _run(tmp_path, 'nopoints', 'resolvent', '--n', '16', '--beta', '0.25')[0] == EXIT_CONFIG


def test_commandExec(tmp_path):

    outDir = str(tmp_path / 'shell')
    assert commandExec('clt --n 16 --beta 0.25 --reps 2 --out "%s"' % outDir) == EXIT_OK
    assert os.path.exists(os.path.join(outDir, 'manifest.json'))


##############
# cli: logger #
##############


def test_logger(tmp_path, monkeypatch):

    path = str(tmp_path / 'log.txt')
    monkeypatch.setattr(logger, 'LOGFILE', path)
    monkeypatch.setattr(logger, 'NAME', 'test')
    monkeypatch.setattr(logger, 'THRES_LEV', logger.WARNING)
    when = datetime.datetime(2024, 3, 5, 7, 9)
    assert logger.formatRecord('INFO', 'rate %d%%', 50, when=when) == '2024-03-05 07:09 - test - INFO: rate 50%\n'
    assert logger.formatRecord('INFO', '100% plain', when=when).endswith('INFO: 100% plain\n')

    assert logger.info('below threshold') is None
    assert logger.debug('below threshold') is None
    assert logger.warn('draw %d', 3).endswith(' - test - WARNING: draw 3\n')
    assert logger.critical('stop').endswith(' - test - CRITICAL: stop\n')
    with open(path) as f:
        lines = f.read().splitlines()
    assert len(lines) == 2
    assert lines[0].endswith('WARNING: draw 3') and lines[1].endswith('CRITICAL: stop')


def test_logFileFollowsOut(tmp_path):

    code, outDir = _run(tmp_path, 'logged', 'clt', '--n', '64', '--beta', '0.4', '--reps', '2', '--seed', '1')
    assert code == EXIT_OK
    with open(os.path.join(outDir, 'log.txt')) as f:
        text = f.read()
    assert ' - rmtlab - INFO: ' in text
    assert ' - rmtlab - DEBUG: ' not in text
    assert logger.THRES_LEV == logger.INFO


def test_cltDegenerateDirection(tmp_path):

    code, outDir = _run(tmp_path, 'degenerate', 'clt', '--n', '16', '--beta', '0.25', '--reps', '60',
                        '--f', 'poly:[-3,2]', '--seed', '1')
    assert code == EXIT_OK
    normality = _json(outDir)['normality']
    assert [d['degenerate'] for d in normality] == [False, False, True]
    assert normality[2]['ks_pvalue'] is None
