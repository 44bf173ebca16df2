import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from src.core.elliptic import curve_new  # noqa: E402
from src.core.field import field_build  # noqa: E402

TVZ_VARIABLES = [
    "TVZ_FIELD_BUDGET",
    "TVZ_CODE_BUDGET",
    "TVZ_DECODE_BUDGET",
    "TVZ_POINT_BUDGET",
    "TVZ_GROUP_BUDGET",
    "TVZ_WORKERS",
    "TVZ_SEED",
    "TVZ_LOG_LEVEL",
    "LOG_LEVEL",
]


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    """Run every test against the built-in defaults."""
    for name in TVZ_VARIABLES:
        monkeypatch.delenv(name, raising=False)


@pytest.fixture
def f5():
    return field_build(5)


@pytest.fixture
def f7():
    return field_build(7)


@pytest.fixture
def f9():
    return field_build(3, 2)


@pytest.fixture
def f49():
    return field_build(7, 2)


@pytest.fixture
def e7(f7):
    """y^2 = x^3 + x + 1 over F_7: four affine points, N = 5."""
    return curve_new(f7, 1, 1)


@pytest.fixture
def e5_1728(f5):
    """y^2 = x^3 + x over F_5: full rational 2-torsion, N = 4."""
    return curve_new(f5, 1, 0)
