import math

# tolerances
PD_TOL = 1e-10
TINY = 1e-300
POLE_TOL = 1e-14
SYM_TOL = 1e-12
WHITEN_TOL = 1e-10
PATH_TOL = 1e-6
CONTOUR_TOL = 1e-12

# model defaults
Q_FACTOR = 2
M_FACTOR = 2
GAMMA_KINDS = ('identity_padded', 'gaussian_random')
U_KINDS = ('coordinate_selection', 'random_semi_orthogonal')
TRUNCATION_MODES = ('off', 'per_row', 'uniform_sigma')
X_FORMS = ('normalized', 'unnormalized')

# contour defaults
DEFAULT_DELTA = 0.5
DEFAULT_V0 = 1.0
DEFAULT_NQ = 64
DEFAULT_VARTHETA = 0.5

# monte carlo
MAX_DRAW_FACTOR = 10
QUANTILES = (50, 95, 99, 100)
CRAMER_WOLD = ((1.0, 0.0), (0.0, 1.0), (1 / math.sqrt(2), 1 / math.sqrt(2)))
MIN_NORMALITY_SAMPLES = 50
ESD_WINDOW = (0.7, 1.3)

# cli
SEED_ENV = 'RMTLAB_SEED'
VERSION = '1.0.0'

# constants
PI = math.pi
IOTA = complex(0, 1)
