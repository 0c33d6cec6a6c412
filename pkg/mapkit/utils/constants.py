DEFAULT_SEED = 0

SEED_ENV_NAME = "MAPKIT_SEED"

WITNESS_EXTENSION = ".tmap"

# Exhaustive searches refuse larger inputs.
EXACT_DECOMPOSE_MAX_VERTICES = 25
ORACLE_MAX_VERTICES_DELETION = 18
ORACLE_MAX_VERTICES_CYCLES = 14

# Per-node crossing cap: 2|Original(t)| + 4|Cliques(t)| for cycles and paths,
# 24 * (width(D) + 1) for cycle packing.
CYCLE_CAP_PER_ORIGINAL = 2
CYCLE_CAP_PER_CLIQUE = 4
PACKING_CAP_PER_BAG_SLOT = 24

PROBLEMS = ("vc", "fvs", "longest-cycle", "longest-path", "cycle-packing")

BENCH_COLUMNS = (
    "instance",
    "problem",
    "k",
    "width_D",
    "maxbag_Dprime",
    "cap",
    "max_states",
    "answer",
    "millis",
)

PROFILE_COLUMNS = ("instance", "problem", "k", "node", "states", "crossing")

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INPUT_INVALID = 3
EXIT_ORACLE_MISMATCH = 4
