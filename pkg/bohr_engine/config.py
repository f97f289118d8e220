"""
Configuration settings for the Bohr radius engine
"""


class Config:
    """Base configuration class."""

    VERSION = '1.0.0'

    # Logging Configuration
    LOG_LEVEL = 'WARNING'
    LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'

    # Evaluation domain: every r, and every series argument, must stay below 1
    MAX_RADIUS = 1.0 - 1e-6

    # Root Solver Configuration
    DEFAULT_TOL = 1e-12
    MIN_TOL = 1e-15
    MAX_TOL = 1e-3
    RESIDUAL_TOL = 1e-10
    MAX_ITER = 200
    NEWTON_STEPS = 5
    FD_STEP = 1e-7
    BRACKET_MAX_HALVINGS = 40
    MONOTONE_SAMPLES = 1000

    # Series Kernel Configuration
    IDENTITY_TAIL_TARGET = 1e-12
    IDENTITY_MAX_ORDER = 1 << 16
    IDENTITY_GRID = (0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9)

    # Verification Configuration
    TABLE_TOLERANCE = 1e-4
    SHARPNESS_EPSILONS = (1e-2, 1e-3)
    SAMPLING_TRIALS = 10000
    SAMPLING_TERMS = 40
    SAMPLING_SLACK = 1e-12
    MONOTONE_SUITE_SIZE = 24

    # Area Functional Configuration
    AREA_TERMS = 60
    AREA_GRID = 512
    AREA_TOLERANCE = 1e-6
    AREA_REFINEMENT_TOLERANCE = 1e-4
    AREA_BAND_SIZE = 64
    AREA_RADII = (0.1, 0.25, 0.4, 0.5, 0.6)

    # Output Configuration
    OUTPUT_DIGITS = 12
    MAX_WORKERS = 4


class DevelopmentConfig(Config):
    """Development configuration."""

    # More verbose logging in development
    LOG_LEVEL = 'DEBUG'


class TestingConfig(Config):
    """Testing configuration."""

    LOG_LEVEL = 'INFO'

    # Fast testing configurations
    SAMPLING_TRIALS = 2000
    MONOTONE_SUITE_SIZE = 20
    AREA_GRID = 256


# Configuration dictionary
config = {
    'development': DevelopmentConfig,
    'testing': TestingConfig,
    'default': Config
}


# Radius problem registry. `params` lists the accepted key=value names in
# CLI order; `integer_params` must be integers >= 1.
PROBLEM_CONFIGURATIONS = {
    'T31': {
        'name': 'Operator plus majorant, stable univalent',
        'mapping_class': 'SHU',
        'params': ['m', 'p'],
        'integer_params': ['m', 'p'],
        'defaults': {},
        'target': 0.25
    },
    'T32': {
        'name': 'Operator plus majorant, stable convex',
        'mapping_class': 'SHC',
        'params': ['m', 'p'],
        'integer_params': ['m', 'p'],
        'defaults': {},
        'target': 0.5
    },
    'T33': {
        'name': 'Powers of operator and growth, stable univalent',
        'mapping_class': 'SHU',
        'params': ['s', 'm', 'p', 'q'],
        'integer_params': ['s', 'm', 'p', 'q'],
        'defaults': {},
        'target': 1.0
    },
    'T34': {
        'name': 'Powers of operator and growth, stable convex',
        'mapping_class': 'SHC',
        'params': ['s', 'm', 'p', 'q'],
        'integer_params': ['s', 'm', 'p', 'q'],
        'defaults': {},
        'target': 1.0
    },
    'T41': {
        'name': 'Convex combination F_lambda, stable univalent',
        'mapping_class': 'SHU',
        'params': ['m', 'lambda'],
        'integer_params': ['m'],
        'defaults': {},
        'target': 0.25
    },
    'T42': {
        'name': 'Convex combination F_lambda, stable convex',
        'mapping_class': 'SHC',
        'params': ['m', 'lambda'],
        'integer_params': ['m'],
        'defaults': {},
        'target': 0.5
    },
    'T43': {
        'name': 'Second-order operator plus majorant tail, stable univalent',
        'mapping_class': 'SHU',
        'params': ['m', 'p', 'N'],
        'integer_params': ['m', 'p', 'N'],
        'defaults': {'N': 2},
        'target': 0.25
    },
    'T44': {
        'name': 'Second-order operator plus majorant tail, stable convex',
        'mapping_class': 'SHC',
        'params': ['m', 'p', 'N'],
        'integer_params': ['m', 'p', 'N'],
        'defaults': {'N': 2},
        'target': 0.5
    },
    'T51': {
        'name': 'Majorant plus polynomial of the area functional',
        'mapping_class': 'SHU',
        'params': ['m', 'poly'],
        'integer_params': ['m'],
        'defaults': {},
        'target': 0.25
    }
}


# Published radii, six decimals.
REFERENCE_TABLES = {
    '3.1': {
        'problem': 'T31',
        'columns': ['m', 'p'],
        'rows': [
            ({'m': 1, 'p': 1}, 0.093200),
            ({'m': 2, 'p': 1}, 0.157800),
            ({'m': 2, 'p': 2}, 0.305300),
            ({'m': 1, 'p': 2}, 0.133100)
        ]
    },
    '3.2': {
        'problem': 'T32',
        'columns': ['m', 'p'],
        'rows': [
            ({'m': 1, 'p': 1}, 0.183500),
            ({'m': 2, 'p': 1}, 0.386900),
            ({'m': 2, 'p': 2}, 0.428400),
            ({'m': 1, 'p': 2}, 0.246800)
        ]
    },
    '3.3': {
        'problem': 'T33',
        'columns': ['s', 'm', 'p', 'q'],
        'rows': [
            ({'s': 2, 'm': 1, 'p': 1, 'q': 1}, 0.250500),
            ({'s': 2, 'm': 2, 'p': 3, 'q': 1}, 0.378000),
            ({'s': 3, 'm': 2, 'p': 5, 'q': 5}, 0.533600),
            ({'s': 2, 'm': 1, 'p': 7, 'q': 2}, 0.284800)
        ]
    },
    '3.4': {
        'problem': 'T34',
        'columns': ['s', 'm', 'p', 'q'],
        'rows': [
            ({'s': 2, 'm': 1, 'p': 1, 'q': 1}, 0.326200),
            ({'s': 2, 'm': 2, 'p': 3, 'q': 1}, 0.485200),
            ({'s': 3, 'm': 2, 'p': 5, 'q': 5}, 0.618300),
            ({'s': 2, 'm': 1, 'p': 7, 'q': 2}, 0.382000)
        ]
    }
}


# Printed radii that are not roots of their own equation, keyed by
# (table id, row index). The value is the root recomputed from the equation
# and is what a row is checked against; the printed value is still reported.
# 3.2 row (2,1): printed 0.386900, the equation gives 0.286876.
# 3.4 row (3,2,5,5): printed 0.618300; with t = r^2 the equation is
# (t / (1 - t)^2)^3 + O(1e-5) = 1, whose root is r = 0.618034.
TABLE_ERRATA = {
    ('3.2', 1): 0.286876,
    ('3.4', 2): 0.618034
}


# Parameter sets scanned next to the table problems. The T51 polynomial is
# 16/9 t + 18.6095 t^2, the constants carried over from the analytic case.
SHARPNESS_DEFAULTS = {
    'T41': {'m': 1, 'lambda': 0.5},
    'T42': {'m': 1, 'lambda': 0.5},
    'T43': {'m': 1, 'p': 1, 'N': 2},
    'T44': {'m': 1, 'p': 1, 'N': 2},
    'T51': {'m': 1, 'poly': (16.0 / 9.0, 18.6095)}
}
