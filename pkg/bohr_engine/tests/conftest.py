"""
Shared fixtures for the Bohr engine tests
"""

import pytest
from click.testing import CliRunner

from config import config
from app.root_solver import RootSolver
from app.router import ProblemRouter
from app.verification import Verifier


@pytest.fixture(scope='session')
def testing_config():
    return config['testing']


@pytest.fixture(scope='session')
def router():
    return ProblemRouter()


@pytest.fixture(scope='session')
def solver(testing_config):
    return RootSolver(testing_config)


@pytest.fixture(scope='session')
def verifier(testing_config, solver, router):
    return Verifier(testing_config, solver=solver, router=router)


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def build(router):
    """build('T31', m=1, p=1); use lam= for lambda."""
    def _build(problem_id, **params):
        if 'lam' in params:
            params['lambda'] = params.pop('lam')
        return router.build(problem_id, params)
    return _build
