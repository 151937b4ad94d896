# Sketch budget: R = SKETCH_CONSTANT * (m + n) * eps^-3 * ln(n).
SKETCH_CONSTANT = 144
# Constant C of the budget-limited variant.
SUBLINEAR_C = 48 * 6 ** 3

ORACLE_MAX_STOCHASTIC_EDGES = 22
OPT_MAX_SUBSETS = 10 ** 5
# Boolean cells allocated per vectorized oracle block.
ORACLE_BLOCK_CELLS = 1 << 24

OVERLAY_WEIGHT = 1e-12

RNG_BLOCK = 4096

# Stream ids derived from the master seed.
STREAM_SKETCH = 1
STREAM_PICK = 2
STREAM_REPETITION = 3
STREAM_ESTIMATE = 4
STREAM_GENERATOR = 5

BRANCH_GREEDY = 'greedy'
BRANCH_DEGREE_SAMPLE = 'degree-sample'
BRANCH_UNION = 'union'
BRANCH_TRIVIAL = 'trivial'
