import pytest

from shiftpois import signs
from shiftpois.suites import SUITES, run_all


@pytest.mark.parametrize("k", sorted(SUITES))
def test_small_runs_pass(k):
    res = SUITES[k](7, 4)
    assert res.ok, res.witness
    assert res.cases > 0
    assert res.to_json()["ok"]


def test_size_zero_is_vacuous():
    assert all(r.ok and r.cases == 0 for r in run_all(0, 0))


def test_failures_carry_witnesses():
    with signs.mutated("koszul"):
        (res,) = run_all(0, 4, [1])
    assert not res.ok and res.witness is not None
