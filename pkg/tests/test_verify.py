import pytest

from qufti import run_verify


def test_default_style_run_passes():
    results = run_verify(n_max=5, cases=5, seed=1)
    assert len(results) == 5
    assert all(r.passed for r in results)
    assert all(r.measured <= r.tolerance for r in results)


def test_check_names_are_stable():
    names = [r.name for r in run_verify(n_max=3, cases=2, seed=0)]
    assert names == [
        "permanent_oracle_equivalence",
        "unitarity_and_double_stochasticity",
        "truncation_order",
        "closed_form_agreement",
        "ratio_universality",
    ]


def test_corrupt_hook_trips_only_the_unitarity_check():
    results = {r.name: r for r in run_verify(n_max=4, cases=4, seed=2, corrupt=True)}
    assert not results["unitarity_and_double_stochasticity"].passed
    assert results["permanent_oracle_equivalence"].passed


def test_same_seed_reproduces_measurements():
    a = run_verify(n_max=5, cases=6, seed=9)
    b = run_verify(n_max=5, cases=6, seed=9)
    assert [(r.name, r.measured) for r in a] == [(r.name, r.measured) for r in b]


def test_different_seeds_draw_different_cases():
    a = run_verify(n_max=5, cases=6, seed=9)
    b = run_verify(n_max=5, cases=6, seed=10)
    assert [r.measured for r in a] != [r.measured for r in b]


@pytest.mark.parametrize("bad", [0, 9, -1])
def test_rejects_out_of_range_mode_limit(bad):
    with pytest.raises(ValueError):
        run_verify(n_max=bad)


def test_rejects_zero_cases():
    with pytest.raises(ValueError):
        run_verify(cases=0)
