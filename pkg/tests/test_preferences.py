import numpy as np
import pytest

from fuzzdec import (
    DecompositionError,
    FuzzyRelation,
    RuleClass,
    Verdict,
    audit_fp,
    canonical_decompose,
    classify_rule,
    crisp_decompose,
    enumerate_decompositions,
    find_collapse_witness,
    make_conorm,
    make_norm,
    make_rule,
    mj_counterexample,
    relation_from_dict,
    sample_relations,
    tie_strict_max_decomposition,
    triplet_from_decomposition,
    verify_weak,
)


def two_rel(r_xy, r_yx, diag=1.0):
    return relation_from_dict(
        ["x", "y"],
        {("x", "x"): diag, ("y", "y"): diag, ("x", "y"): r_xy, ("y", "x"): r_yx},
    )


# ---------------------------------------------------------------------------
# audits


def test_canonical_outputs_pass_all_axioms():
    for family, lam in (("product", None), ("minimum", None), ("lukasiewicz", None)):
        S = make_conorm(family, lam)
        for R in sample_relations(30, size=3, grid_step=0.05, seed=5):
            d = canonical_decompose(R, S)
            report = audit_fp(triplet_from_decomposition(R, d))
            assert report.overall, (family, report.failed_axioms())


def test_tie_promoting_rule_fails_exactly_fp4():
    R = two_rel(0.5, 0.5)
    d = tie_strict_max_decomposition(R)
    assert verify_weak(R, d).verdict is Verdict.HOLDS  # it is a weak decomposition
    report = audit_fp(triplet_from_decomposition(R, d))
    assert report.failed_axioms() == ("FP4",)
    x, y = report.verdicts["FP4"].witness
    assert d.strict.value(x, y) > 0 and R.value(x, y) == R.value(y, x)


def test_tie_promoting_rule_matches_plain_max_rule_off_ties():
    R = two_rel(0.9, 0.4)
    d = tie_strict_max_decomposition(R)
    canonical = canonical_decompose(R, make_conorm("max"))
    np.testing.assert_array_equal(d.strict.degrees, canonical.strict.degrees)


def test_crisp_preorder_audits_clean():
    R = FuzzyRelation(("a", "b", "c"), np.array([[1, 1, 1], [0, 1, 1], [0, 0, 1.0]]))
    P, I = crisp_decompose(R)
    report = audit_fp(PreferenceTripletShim(R, P, I))
    assert report.overall


def PreferenceTripletShim(R, P, I):
    from fuzzdec import PreferenceTriplet

    return PreferenceTriplet(R, P, I)


def test_audit_witnesses_are_lexicographically_first():
    R = two_rel(0.5, 0.5)
    P = FuzzyRelation(("x", "y"), np.array([[0.0, 0.4], [0.3, 0.0]]))
    I = FuzzyRelation(("x", "y"), np.minimum(R.degrees, R.degrees.T))
    report = audit_fp(PreferenceTripletShim(R, P, I))
    assert not report.verdicts["FP1"].passed
    assert report.verdicts["FP1"].witness == ("x", "y")


def test_audit_rejects_universe_mismatch():
    R = two_rel(1, 0.5)
    other = relation_from_dict(["p", "q"], {})
    with pytest.raises(ValueError):
        PreferenceTripletShim(R, other, other)


def test_fp6_sampled_path_agrees_on_large_universe():
    rng = np.random.default_rng(2)
    m = rng.uniform(size=(7, 7))
    R = FuzzyRelation(tuple(f"v{k}" for k in range(7)), m)
    d = canonical_decompose(R, make_conorm("prob"))
    report = audit_fp(triplet_from_decomposition(R, d), fp6_sample=20000, seed=4)
    assert report.verdicts["FP6"].passed


def test_every_weak_decomposition_satisfies_the_unconditional_axioms():
    # FP1, FP2, FP3, FP5, FP6 and the forward half of FP4 hold for any weak
    # decomposition, canonical or not: check the enumerated ones
    S = make_conorm("lukasiewicz")
    for R in sample_relations(10, size=2, grid_step=0.25, seed=9, reflexive=True):
        for d in enumerate_decompositions(R, S, grid_step=0.05):
            rep = audit_fp(triplet_from_decomposition(R, d))
            for axiom in ("FP1", "FP2", "FP3", "FP5", "FP6"):
                assert rep.verdicts[axiom].passed
            P, Rm = d.strict.degrees, R.degrees
            fwd_bad = (Rm > Rm.T) & ~(P > 0)
            assert not fwd_bad.any()


# ---------------------------------------------------------------------------
# rules


def test_make_rule_reproduces_known_formulas():
    R = two_rel(0.8, 0.3)
    max_rule = make_rule(make_conorm("max"))
    assert max_rule(R).strict.value("x", "y") == 0.8
    luk_rule = make_rule(make_conorm("lukasiewicz"))
    assert luk_rule(R).strict.value("x", "y") == pytest.approx(0.5, abs=1e-12)
    prob_rule = make_rule(make_conorm("prob"))
    assert prob_rule(R).strict.value("x", "y") == pytest.approx(0.5 / 0.7, abs=1e-12)


def test_make_rule_refuses_discontinuous_conorm():
    with pytest.raises(DecompositionError):
        make_rule(make_conorm("drastic"))


# ---------------------------------------------------------------------------
# collapse witnesses and multiplicity


def test_collapse_witness_sweep():
    assert find_collapse_witness(make_conorm("max"), 0.01) is None
    assert find_collapse_witness(make_conorm("prob"), 0.01) is None
    w, t, s = find_collapse_witness(make_conorm("lukasiewicz"), 0.01)
    SL = make_conorm("lukasiewicz")
    assert SL(t, w) == SL(s, w) > w
    w, t, s = find_collapse_witness(make_conorm("ordinal_sum"), 0.01)
    SO = make_conorm("ordinal_sum")
    assert SO(t, w) == SO(s, w) > w


def test_mj_counterexample_lukasiewicz():
    R, d1, d2 = mj_counterexample(make_conorm("lukasiewicz"), 0.5, 0.6, 0.7)
    assert R.value("a", "b") == 1.0 and R.value("b", "a") == 0.5
    for d in (d1, d2):
        assert verify_weak(R, d).verdict is Verdict.HOLDS
        assert audit_fp(triplet_from_decomposition(R, d)).overall
    assert d1.strict.value("a", "b") == 0.6 and d2.strict.value("a", "b") == 0.7


def test_mj_counterexample_ordinal_sum():
    S = make_conorm("ordinal_sum")
    assert S(0.4, 0.3) == S(0.45, 0.3) == 0.5
    R, d1, d2 = mj_counterexample(S, 0.3, 0.4, 0.45)
    for d in (d1, d2):
        assert verify_weak(R, d).verdict is Verdict.HOLDS
        assert audit_fp(triplet_from_decomposition(R, d)).overall


def test_mj_counterexample_rejects_nonwitnesses():
    with pytest.raises(ValueError):
        mj_counterexample(make_conorm("max"), 0.5, 0.6, 0.7)
    with pytest.raises(ValueError):
        mj_counterexample(make_conorm("prob"), 0.5, 0.6, 0.7)
    with pytest.raises(ValueError):
        mj_counterexample(make_conorm("lukasiewicz"), 0.5, 0.6, 0.6)


def test_unique_preference_decomposition_under_max():
    # among all enumerated weak decompositions under the maximum, exactly
    # the canonical one forms a preference
    for R in sample_relations(15, size=3, grid_step=0.05, seed=21):
        ds = enumerate_decompositions(R, make_conorm("max"), grid_step=0.05)
        passing = [d for d in ds if audit_fp(triplet_from_decomposition(R, d)).overall]
        assert len(passing) == 1
        canonical = canonical_decompose(R, make_conorm("max"))
        np.testing.assert_allclose(
            passing[0].strict.degrees, canonical.strict.degrees, atol=1e-9
        )


# ---------------------------------------------------------------------------
# classification


def test_classify_weak_rules():
    assert classify_rule(make_conorm("max")).verdict is RuleClass.INDUCED
    c = classify_rule(make_conorm("lukasiewicz"))
    assert c.verdict is RuleClass.COMPATIBLE
    w, t, s = c.witness
    SL = make_conorm("lukasiewicz")
    assert SL(t, w) == SL(s, w) > w
    assert classify_rule(make_conorm("drastic")).verdict is RuleClass.NOT_COMPATIBLE
    assert classify_rule(make_conorm("prob")).verdict is RuleClass.INDUCED
    assert classify_rule(make_conorm("ordinal_sum")).verdict is RuleClass.COMPATIBLE


def test_classify_strong_rules():
    assert (
        classify_rule(make_conorm("lukasiewicz"), make_norm("lukasiewicz")).verdict
        is RuleClass.INDUCED
    )
    assert (
        classify_rule(make_conorm("lukasiewicz"), make_norm("drastic")).verdict
        is RuleClass.COMPATIBLE
    )
    assert (
        classify_rule(make_conorm("max"), make_norm("min")).verdict
        is RuleClass.NOT_COMPATIBLE
    )


def test_classify_open_cells_stay_undetermined():
    c = classify_rule(make_conorm("schweizer_sklar", 0.5))
    assert c.verdict is RuleClass.UNDETERMINED
    assert c.oracle_verdict is RuleClass.COMPATIBLE  # evidence, not a verdict
    c = classify_rule(
        make_conorm("schweizer_sklar", 2.0), make_norm("schweizer_sklar", 2.0)
    )
    assert c.verdict is RuleClass.UNDETERMINED
    c = classify_rule(make_conorm("schweizer_sklar", 2.0), make_norm("drastic"))
    assert c.verdict is RuleClass.UNDETERMINED


def test_classify_is_seed_deterministic():
    a = classify_rule(make_conorm("lukasiewicz"), samples=10, seed=3)
    b = classify_rule(make_conorm("lukasiewicz"), samples=10, seed=3)
    assert a == b
