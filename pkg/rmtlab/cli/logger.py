'''File logger shared by the library and the command line

Every record is one line "<YYYY-mm-dd HH:MM> - <name> - <LEVEL>: <message>" appended to LOGFILE.
Replications run on worker threads, so writes go through a lock.
'''

import os
import datetime
import threading


DEBUG = 10
INFO = 20
WARNING = 30
ERROR = 40
CRITICAL = 50
LEVEL_NAMES = {DEBUG: 'DEBUG', INFO: 'INFO', WARNING: 'WARNING', ERROR: 'ERROR', CRITICAL: 'CRITICAL'}

THRES_LEV = INFO
NAME = ''
LOGFILE = 'log.txt'
_lock = threading.Lock()


def setLogName(name):
    global NAME
    NAME = name


def setLevel(level):
    global THRES_LEV
    THRES_LEV = level


def setLogFile(path):
    '''Redirects the records; the CLI points this at <out>/log.txt'''
    global LOGFILE
    LOGFILE = path


def formatRecord(levType, msg, *args, when=None):
    when = datetime.datetime.now() if when is None else when
    text = msg % args if args else msg
    return '%s - %s - %s: %s\n' % (when.strftime('%Y-%m-%d %H:%M'), NAME, levType, text)


def logWriter(levType, msg, *args):
    record = formatRecord(levType, msg, *args)
    with _lock:
        try:
            with open(os.path.abspath(LOGFILE), 'a') as logFile:
                logFile.write(record)
        except OSError:
            print('Can\'t open the log file ' + LOGFILE)
    return record


def _log(level, msg, *args):
    if level >= THRES_LEV:
        return logWriter(LEVEL_NAMES[level], msg, *args)


def debug(msg, *args):
    return _log(DEBUG, msg, *args)


def info(msg, *args):
    return _log(INFO, msg, *args)


def warn(msg, *args):
    return _log(WARNING, msg, *args)


def error(msg, *args):
    return _log(ERROR, msg, *args)


def critical(msg, *args):
    return _log(CRITICAL, msg, *args)
