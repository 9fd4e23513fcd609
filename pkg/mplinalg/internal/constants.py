EPS_D = 2.0 ** -53
EPS_DD = 2.0 ** -104
""" Unit roundoff of the double-double format, about 4.93e-32 """

EPS_QD = 2.0 ** -209
""" Unit roundoff of the quad-double format, about 1.21e-63 """

PRECISIONS = ['d', 'dd', 'qd']

ROUND_TRIP_DIGITS = {
    'd': 17,
    'dd': 40,
    'qd': 70,
}
""" Decimal digits printed by to_string so that parsing gives the value back """

ALGORITHMS = ['simple', 'block', 'strassen', 'winograd']
RECURSIVE_ALGORITHMS = ['strassen', 'winograd']

DEFAULT_BLOCK_SIZE = 32
DEFAULT_N_MIN = 32
DEFAULT_REPETITIONS = 3
DEFAULT_SEED = 20151026

EXECUTORS = ['thread', 'process']

MATRIX_KINDS = ['bench', 'random', 'dominant', 'lotkin']

SPLITMIX_GAMMA = 0x9E3779B97F4A7C15
SPLITMIX_MUL1 = 0xBF58476D1CE4E5B9
SPLITMIX_MUL2 = 0x94D049BB133111EB
MASK64 = 0xFFFFFFFFFFFFFFFF

CSV_HEADER = [
    'experiment',
    'precision',
    'algorithm',
    'n',
    'bs',
    'nmin',
    'alpha',
    'workers',
    'reps',
    'seconds_median',
    'mul_count',
    'add_count',
    'max_rel_error',
]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAILURE = 2
