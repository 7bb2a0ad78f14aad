DEFAULT_PRIME       = 10000019
DEFAULT_SEED        = 7
DEFAULT_STRATEGY    = 'interpolation'
DEFAULT_FORMAT      = 'json'
DEFAULT_INVERSE_DEGREE = 6
DEFAULT_IMAGE_DEGREE = 6
RESAMPLE_LIMIT      = 8
REJECTION_WINDOW    = 1000
TRIPLE_POINT        = (1, 1, 1, -1)
SCENARIOS           = ('code1', 'code2', 'lemma', 'chain')
STRATEGIES          = ('interpolation', 'elimination', 'toric', 'auto')
ENV_FIXTURES        = 'TETRA_FIXTURES'
