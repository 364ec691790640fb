# Search budgets
DEFAULT_MAX_PREFIX_STATES = 5_000_000
DEFAULT_MAX_NODES = 100_000
DEFAULT_SUMMIT_STEPS = 100_000

# Generic enumeration of rigid conjugacy sets is only attempted up to this
# many strands unless forced.
ORACLE_MAX_STRANDS = 11

# Plain and tau sides of the family graph are disjoint from here on.
DISJOINT_REGIME_MIN_STRANDS = 14

# Smallest strand count for the M0 classes.
M0_MIN_STRANDS = 10

DEFAULT_SAMPLE_SIZE = 5
DEFAULT_SEED = 0

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

CUT_HEAD = "cut-head"
ADD_TAIL = "add-tail"
CONJUGATOR_KINDS = (CUT_HEAD, ADD_TAIL)

# Edge kinds produced by the family graph generator
CYCLING = "cycling"
SWITCHING = "switching"
INITIALIZING = "initializing"

PLAIN = "plain"
TAU = "tau"
