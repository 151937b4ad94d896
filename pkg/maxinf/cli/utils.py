EXIT_USAGE = 2
EXIT_DATA = 3
EXIT_CAPACITY = 4

FORMAT_JSON = 'json'
FORMAT_CSV = 'csv'

CONVENTIONS = (
    'Conventions: every logarithm is natural (ln). A step is one edge coin '
    'flip during a cascade traversal, plus one step per RR-set root '
    'selection; step budgets R count steps. Exit codes: 0 success, 2 usage '
    'error, 3 data error (parse/domain), 4 oracle capacity exceeded. '
    'The seed falls back to MAXINF_SEED, then to a fixed default.'
)

GEN_LOWER_BOUND = 'lower-bound'
GEN_RANDOM = 'random'
