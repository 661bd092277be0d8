'''Result files of a run: manifest.json, per_rep.csv and report.json

Note: Please try to maintain proper documentation
'''

import csv
import datetime
import json
import math
import os
import numpy as np
from rmtlab.config.values import VERSION
from rmtlab.simulation.report import perRepHeader

MANIFEST = 'manifest.json'
PER_REP = 'per_rep.csv'
REPORT = 'report.json'


def formatFloat(value):
    """17 significant digits, enough to read back the identical double"""
    return '%.17g' % value


def toJsonable(obj):
    """Converts numpy and complex values into plain JSON types

    Complex numbers become {"re": ..., "im": ...}; non-finite floats become null.
    """
    if isinstance(obj, dict):
        return {str(k): toJsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [toJsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return toJsonable(obj.tolist())
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return {'re': toJsonable(obj.real), 'im': toJsonable(obj.imag)}
    if isinstance(obj, (float, np.floating)):
        return float(obj) if math.isfinite(obj) else None
    return obj


def writeJson(path, payload):
    with open(path, 'w') as f:
        json.dump(toJsonable(payload), f, indent=2, sort_keys=True)
        f.write('\n')


def _now():
    return datetime.datetime.now().isoformat(timespec='seconds')


class RunManifest(object):
    """Manifest written before any result file and completed at exit

    A manifest without an end timestamp marks an interrupted run.
    """

    def __init__(self, outDir, command, config, masterSeed):
        self.outDir = outDir
        self.path = os.path.join(outDir, MANIFEST)
        self.payload = {'command': command, 'config': config, 'version': VERSION,
                        'master_seed': masterSeed, 'start': None, 'end': None, 'outputs': []}

    def start(self):
        os.makedirs(self.outDir, exist_ok=True)
        self.payload['start'] = _now()
        writeJson(self.path, self.payload)
        return self

    def addOutput(self, path):
        self.payload['outputs'].append(os.path.basename(path))
        writeJson(self.path, self.payload)

    def finish(self, exitCode=0):
        self.payload['end'] = _now()
        self.payload['exit_code'] = exitCode
        writeJson(self.path, self.payload)


def writePerRep(path, records, nz):
    """Writes one CSV row per replication

    Header: rep,X_n,Y_n,norm_sq,lambda_min,lambda_max[,Xz_re_k,Xz_im_k]
    """
    with open(path, 'w', newline='') as f:
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(perRepHeader(nz))
        for record in records:
            row = record.csvRow()
            writer.writerow([str(row[0])] + [formatFloat(v) for v in row[1:]])
    return path


def readPerRep(path):
    with open(path, newline='') as f:
        rows = list(csv.reader(f))
    return rows[0], [[int(r[0])] + [float(v) for v in r[1:]] for r in rows[1:]]


def resultString(operation, inputs, outputs):
    """Plain text summary printed by the command line

    Arguments:
        operation {string} -- command name
        inputs {dict} -- echoed inputs
        outputs {list} -- (label, value) pairs

    Returns:
        finalSteps {string}
    """
    finalSteps = 'OPERATION: ' + operation + '\n'
    finalSteps += 'INPUT: ' + ', '.join('%s=%s' % (k, v) for k, v in inputs.items()) + '\n'
    finalSteps += 'OUTPUT:' + '\n'
    width = max([len(label) for label, _ in outputs] + [1])
    for label, value in outputs:
        if isinstance(value, float):
            value = '%.6g' % value
        finalSteps += '  ' + label.ljust(width) + '  ' + str(value) + '\n'
    return finalSteps
