import os
from cmd import Cmd
from rmtlab.cli.commands import commandExec
from rmtlab.cli import logger


MANUAL_ROWS = [
    ('exit or Ctrl + D', 'closes the prompt'),
    ('clt --n N --beta B --reps R --f poly:[0,1] --g identity --out DIR', 'joint CLT of (X_n, Y_n)'),
    ('contour-check --n N --nq 256', 'Cauchy functional and variance integral gaps'),
    ('scaling --quantity mean_norm_dev --grid 256,512,1024,2048,4096', 'decay exponents'),
    ('eigen --n N --reps R', 'eigenvalue concentration around 1'),
    ('process --n N --z=-1,1+i,1-i', 'moments of the truncated process'),
    ('resolvent --n N --z=-1', 'mean deviation of the resolvent quadratic form'),
]
MANUAL_NOTE = 'Add --config FILE for a key = value config file and --check for acceptance exit codes.'


def userManual(rows=MANUAL_ROWS, note=MANUAL_NOTE):
    """Renders the boxed command table printed by 'manual'"""
    lines = ['%s ->> %s' % row for row in rows]
    width = max(len(line) for line in lines + [note]) + 2
    rule = '|' + '-' * width + '|'
    body = ['| ' + line.ljust(width - 1) + '|' for line in lines]
    return '\n'.join([' ' + '_' * width, *body, rule, '| ' + note.ljust(width - 1) + '|', '|' + '_' * width + '|'])


class RmtlabShell(Cmd):
    '''Interactive prompt; every line that is not a shell command goes to the rmtlab command parser'''

    prompt = '>>> '
    intro = "Welcome! This is the rmtlab interactive shell...\ntype 'manual' for a User Manual and Ctrl + D to Exit prompt\n"

    def do_manual(self, inp):
        '''Displays a list of commands that can be used'''
        print(userManual())

    def do_exit(self, inp):
        '''Exits rmtlab prompt'''
        print('Exiting rmtlab...')
        logger.info('shell closed')
        return True

    do_EOF = do_exit

    def emptyline(self):
        print('Empty line received as input\n')

    def default(self, inp):
        # argparse exits on --help and on malformed flags
        try:
            code = commandExec(inp)
        except SystemExit:
            return
        except Exception as err:
            print('Invalid command: %s (%s)\n' % (inp, err))
            return
        if code:
            print('Command exited with code %d\n' % code)


def init(logFile='shell_log.txt'):
    open(os.path.abspath(logFile), 'w').close()
    logger.setLogFile(logFile)
    logger.setLevel(logger.DEBUG)
    logger.setLogName('shell')
    logger.info('shell started')
    RmtlabShell().cmdloop()


if __name__ == '__main__':
    init()
