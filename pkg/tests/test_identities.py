import pytest

from macinterp.combin import bar_point
from macinterp.exactalg import A
from macinterp.families import K_plus
from macinterp.identities import (REGISTRY, SweepConfig, check_binomial, check_closed_forms_n1,
                                  check_dual_binomial, check_duality, check_duality_steps,
                                  check_eval_relations, check_negative_degree,
                                  check_okounkov, check_orthogonality, check_primed_duality,
                                  check_symmetrization, check_theoremA, check_theoremC,
                                  check_transfer, check_twisted_duality, register, run_identity,
                                  run_suite)
from macinterp.report import TRUNCATION_MARKER, WITNESS_LIMIT, IdentityReport

EXPECTED_KEYS = ["duality", "twisted-duality", "primed-duality", "theorem-a", "theorem-c",
                 "binomial", "dual-binomial", "orthogonality", "okounkov", "transfer",
                 "eval-relations", "hecke-relations", "duality-steps"]


def ok(rep):
    assert rep.passed, rep.to_text()
    assert rep.checked > 0


def test_registry_keys():
    assert list(REGISTRY)[:13] == EXPECTED_KEYS


@pytest.mark.parametrize("u,v", [((0, 0), (0, 0)), ((1, 0), (0, -1)), ((2,), (3,)),
                                 ((1, 0), (0, 0)), ((-1, 2), (1, 1))])
def test_dualities(u, v):
    ok(check_duality(u, v))
    ok(check_twisted_duality(u, v))
    ok(check_primed_duality(u, v))


def test_closed_forms_n1():
    ok(check_closed_forms_n1(5))


@pytest.mark.parametrize("alpha", [(0, 0), (1, 0), (0, 1), (2, 1), (1, 1, 0)])
def test_construction_theorems(alpha):
    ok(check_theoremA(alpha))
    ok(check_theoremC(alpha, 2))
    ok(check_eval_relations(alpha))


@pytest.mark.parametrize("alpha", [(0, 0), (1, 0), (1, 1), (0, 2), (2, 1), (3,)])
def test_binomial_formulas(alpha):
    ok(check_binomial(alpha))
    ok(check_dual_binomial(alpha))


@pytest.mark.parametrize("alpha,gamma", [((1, 0), (1, 0)), ((1, 0), (0, 0)), ((1, 1), (1, 0)),
                                         ((0, 2), (1, 0)), ((2, 1), (0, 2))])
def test_orthogonality(alpha, gamma):
    ok(check_orthogonality(alpha, gamma))


@pytest.mark.parametrize("lam,mu", [((0, 0), (0, 0)), ((1, 0), (2, 0)), ((2, 1), (1, 1))])
def test_okounkov(lam, mu):
    ok(check_okounkov(lam, mu))


def test_okounkov_needs_the_t_shift():
    # without the factor t^{1-n} the symmetry already fails for lambda = 0
    lhs = K_plus((0, 0)).substitute(bar_point((1, 0)).inverse().scale(A))
    rhs = K_plus((1, 0)).substitute(bar_point((0, 0)).inverse().scale(A))
    assert lhs != rhs


@pytest.mark.parametrize("v", [(0, 0), (1, 0), (1, 1), (0, -1), (-1, 2)])
@pytest.mark.parametrize("which", ["H", "Xi", "Phi", "laurent"])
def test_transfer(v, which):
    ok(check_transfer(v, which))


@pytest.mark.parametrize("v", [(-1, 0), (0, -1), (-2, 1), (1, -1)])
def test_negative_degree(v):
    ok(check_negative_degree(v))


@pytest.mark.parametrize("u,v", [((0, 0), (0, 0)), ((1, 0), (0, 0)), ((0, 0), (0, 1)),
                                 ((-1, 1), (2, 0))])
def test_duality_steps(u, v):
    ok(check_duality_steps(u, v))


def test_symmetrization():
    ok(check_symmetrization((0, 1)))


def test_sweep_config_validation():
    with pytest.raises(ValueError):
        SweepConfig(2, 1, 0, 3)
    assert SweepConfig.default(3).as_dict() == {"n": 3, "lo": 0, "hi": 2, "max_weight": 3}


def test_small_suite():
    reps = run_suite(SweepConfig.default(2, 2))
    assert [r.identity for r in reps] == EXPECTED_KEYS
    assert all(r.passed for r in reps), [r.to_text() for r in reps if not r.passed]


def test_report_determinism():
    cfg = SweepConfig.default(2, 2)
    a = run_identity("duality", cfg).to_json(timing=False)
    b = run_identity("duality", cfg).to_json(timing=False)
    assert a == b


def test_false_identity_is_reported():
    def sweep(cfg):
        rep = IdentityReport("always-false", {})
        rep.record(False, {"i": 0}, "x" * (WITNESS_LIMIT + 10), 0)
        return [rep]

    register("always-false", sweep)
    try:
        rep = run_identity("always-false", SweepConfig.default(1))
    finally:
        REGISTRY.pop("always-false")
    assert rep.status == "fail"
    assert rep.witnesses[0]["lhs"].endswith(TRUNCATION_MARKER)
    assert len(rep.witnesses[0]["lhs"]) == WITNESS_LIMIT + len(TRUNCATION_MARKER)
