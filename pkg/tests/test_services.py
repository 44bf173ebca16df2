import pytest

from src.core.tvz_toolkit import TVZToolkit
from src.models.config import ToolkitConfig
from src.models.exceptions import BoundDomainError, BudgetExceeded, KOutOfRange, NotPrime, TVZUndefined


@pytest.fixture
def toolkit():
    return TVZToolkit(config=ToolkitConfig())


def test_rs_params(toolkit):
    params = toolkit.coding.rs_params(7, 7, 3)
    assert (params.n, params.k, params.d, params.d_exact) == (7, 3, 5, True)
    params = toolkit.coding.rs_params(49, 10, 2)
    assert (params.n, params.k, params.d) == (10, 2, 9)


def test_rs_params_errors(toolkit):
    with pytest.raises(KOutOfRange):
        toolkit.coding.rs_params(7, 7, 0)


@pytest.mark.parametrize("n", [8, 0, -1])
def test_rs_length_must_fit_the_field(toolkit, n):
    with pytest.raises(KOutOfRange):
        toolkit.coding.rs_params(7, n, 3)
    with pytest.raises(KOutOfRange):
        toolkit.coding.decoding_trials(7, n, 3, 1, 5)


def test_rs_params_respects_code_budget():
    small = TVZToolkit(config=ToolkitConfig(code_budget=100))
    with pytest.raises(BudgetExceeded):
        small.coding.rs_params(7, 7, 3)


def test_ag_and_line_params(toolkit):
    ag = toolkit.coding.ag_params("E[q=7;A=1;B=1]", 2)
    assert (ag.params.n, ag.params.k, ag.genus) == (4, 2, 1)
    line = toolkit.coding.line_params(7, 2)
    assert (line.params.n, line.params.k, line.params.d, line.genus) == (7, 3, 5, 0)


def test_channel_weights_default_to_configured_seed():
    a = TVZToolkit(config=ToolkitConfig(seed=3)).coding.channel_weights(7, 20, 0.2, 5)
    b = TVZToolkit(config=ToolkitConfig()).coding.channel_weights(7, 20, 0.2, 5, seed=3)
    assert a == b
    assert len(a) == 5


def test_two_errors_always_decoded(toolkit):
    assert toolkit.coding.decoding_trials(7, 7, 3, 2, 100) == 100


def test_bounds_service(toolkit):
    assert len(toolkit.bounds.table(49, 11)) == 11
    assert toolkit.bounds.crossover(49).beats
    with pytest.raises(TVZUndefined):
        toolkit.bounds.crossover(4)
    with pytest.raises(BoundDomainError):
        toolkit.bounds.crossover(-1)


def test_curve_service(toolkit):
    curves = toolkit.curves
    curve = curves.parse("E[q=5;A=1;B=0]")
    assert len(curves.points(curve)) == curves.count(curve) == 4
    assert curves.group(curve).n1 == 2
    assert curves.trace(curve) == 2
    assert not curves.supersingular(curve)
    assert curves.torsion(curve, 2) == 4


def test_modular_service(toolkit):
    modular = toolkit.modular
    assert modular.x0(23).genus == 2
    assert len(modular.supersingular(11)) == modular.expected_count(11) == 2
    assert modular.special_pattern(7) == {"j0": False, "j1728": True}
    assert modular.fibre(7, 11).total == 6
    assert [row.ratio for row in modular.ihara(7, [11, 23])] == [6, 6]
    with pytest.raises(NotPrime):
        modular.x0(9)
