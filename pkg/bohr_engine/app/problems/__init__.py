"""
Bohr radius problems for stable harmonic mappings
"""

from .base_problem import (
    PROFILES,
    STABLE_CONVEX,
    STABLE_UNIVALENT,
    BaseProblem,
    GapEvaluation,
    MappingClassProfile,
    NonnegPolynomial
)
from .convex import (
    ConvexCombinationProblem,
    ConvexOperatorMajorantProblem,
    ConvexPowerProblem,
    ConvexSecondOrderProblem
)
from .univalent import (
    AreaFunctionalProblem,
    UnivalentCombinationProblem,
    UnivalentOperatorMajorantProblem,
    UnivalentPowerProblem,
    UnivalentSecondOrderProblem
)

PROBLEM_CLASSES = {
    cls.problem_id: cls
    for cls in (
        UnivalentOperatorMajorantProblem,
        ConvexOperatorMajorantProblem,
        UnivalentPowerProblem,
        ConvexPowerProblem,
        UnivalentCombinationProblem,
        ConvexCombinationProblem,
        UnivalentSecondOrderProblem,
        ConvexSecondOrderProblem,
        AreaFunctionalProblem
    )
}

__all__ = [
    'PROBLEM_CLASSES',
    'PROFILES',
    'STABLE_CONVEX',
    'STABLE_UNIVALENT',
    'BaseProblem',
    'GapEvaluation',
    'MappingClassProfile',
    'NonnegPolynomial',
    'AreaFunctionalProblem',
    'ConvexCombinationProblem',
    'ConvexOperatorMajorantProblem',
    'ConvexPowerProblem',
    'ConvexSecondOrderProblem',
    'UnivalentCombinationProblem',
    'UnivalentOperatorMajorantProblem',
    'UnivalentPowerProblem',
    'UnivalentSecondOrderProblem'
]
