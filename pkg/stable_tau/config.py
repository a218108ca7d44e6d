FIELD_RATIONALS = "Q"
FIELD_PRIME_PREFIX = "Fp:"

DEFAULT_MAX_VERTICES = 10000
DEFAULT_NILPOTENCY_BOUND = 20
DEFAULT_SEED = 0xA1

ISO_RANDOM_TRIALS = 32
IDEMPOTENT_SEARCH_TRIALS = 64
RANDOM_COEFFICIENT_BOUND = 97
DECOMPOSITION_FITTING_TRIALS = 8

# Primes p with p = 1 mod small exponents, offered when a field lacks roots of unity.
SUGGESTED_PRIMES = (7, 13, 31, 37, 61, 73, 97, 101)

EXIT_PASS = 0
EXIT_CHECK_FAILURE = 1
EXIT_INPUT_ERROR = 2
EXIT_RESOURCE_ABORT = 3

STABLE_VERTEX_COLOR = "darkorange"
SOURCE_VERTEX_COLOR = "forestgreen"
SINK_VERTEX_COLOR = "blue"

CLASS_TILTING = "tilting"
CLASS_TAU_TILTING = "tau-tilting"
CLASS_SUPPORT_TAU_TILTING = "support-tau-tilting"
