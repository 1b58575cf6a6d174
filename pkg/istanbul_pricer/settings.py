from os import getenv

# simulation
STEPS = int(getenv('ISTANBUL_STEPS', 2500))
PATHS = int(getenv('ISTANBUL_PATHS', 10000))
BLOCK_SIZE = int(getenv('ISTANBUL_BLOCK_SIZE', 250))
WORKERS = int(getenv('ISTANBUL_WORKERS', 1))
SEED = int(getenv('ISTANBUL_SEED', 20210))

# quadrature
QUAD_ABS_TOL = float(getenv('ISTANBUL_QUAD_ABS_TOL', 1e-10))
QUAD_REL_TOL = float(getenv('ISTANBUL_QUAD_REL_TOL', 1e-8))
QUAD_LIMIT = int(getenv('ISTANBUL_QUAD_LIMIT', 200))
# outer tolerance of the nested quadrature price
PRICE_REL_TOL = float(getenv('ISTANBUL_PRICE_REL_TOL', 1e-7))

# closed form
SINGULARITY_EPSILON = 1e-6
BARRIER_EPSILON = 1e-8
NEGATIVE_CLAMP = 1e-9

# greeks
DELTA_BUMP = float(getenv('ISTANBUL_DELTA_BUMP', 1e-2))

LOG_LEVEL = getenv('ISTANBUL_LOG_LEVEL', 'WARNING')
