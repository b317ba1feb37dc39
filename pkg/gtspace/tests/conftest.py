from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from gtspace.core import make_space

# Derived families are brute force over the power set; keep examples small
settings.register_profile('gtspace', deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile('gtspace')


@pytest.fixture
def spaces_dir():
    return Path(__file__).resolve().parent.parent.parent / 'spaces'


@pytest.fixture
def e0():
    return make_space(['a', 'b'], [], 'E0')


@pytest.fixture
def e1():
    return make_space(['a', 'b', 'c', 'd'], [['a', 'b'], ['b', 'c'], ['a', 'b', 'c']], 'E1')


@pytest.fixture
def e2():
    return make_space(['a', 'b', 'c'], [['a', 'b']], 'E2')


@pytest.fixture
def discrete2():
    return make_space(['a', 'b'], [['a'], ['b'], ['a', 'b']], 'D2')


@pytest.fixture
def clean_env(monkeypatch, tmp_path):
    """No GT_* variables in the process and an empty .env to point at."""
    from gtspace.settings import ENV_VARIABLES

    for variable in ENV_VARIABLES:
        # record the variable so values loaded from .env are undone too
        monkeypatch.setenv(variable, '')
        monkeypatch.delenv(variable)
    env_file = tmp_path / '.env'
    env_file.write_text('', encoding='utf-8')
    return env_file

