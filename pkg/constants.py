import pathlib

ROOT_DIR = str(pathlib.Path.cwd())

OUTPUT_DIR = ROOT_DIR + '/__output'

CHECKS_CONF_PATH = str(pathlib.Path(__file__).resolve().parent) + '/harness/checks.reporter.json'

ERROR_FILENAME = 'error.txt'

CLI_TRUE_KEYWORD_ARRAY = ['yes', 'y', 'true', '1', 1]

SLO_MAX_KEYWORD_ARRAY = ['max', 'none', 'inf']

NS_PER_S = 1000 * 1000 * 1000

PERCENTILES = [50, 90, 99, 99.9]

CLASS_BIG = 'big'
CLASS_LITTLE = 'little'
CLASS_OVERALL = 'overall'

## variable-load phase schedule, (name, multiplier, share of run)
VARIABLE_LOAD_PHASES = [
    ('x1', 1, 0.2),
    ('x128', 128, 0.2),
    ('x1-back', 1, 0.2),
    ('random', None, 0.2),
    ('x1024', 1024, 0.2)
]

RANDOM_PHASE_MULTIPLIERS = [1, 2, 4, 8, 16, 32, 64, 128]
