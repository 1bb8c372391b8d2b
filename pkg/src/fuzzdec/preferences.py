"""Fuzzy preference triplets, the six structural axioms, and the
classification of decomposition rules.

A triplet (R, P, I) is a fuzzy preference when

  FP1  P is asymmetric,
  FP2  I is symmetric,
  FP3  P(x,y) <= R(x,y),
  FP4  R(x,y) > R(y,x)  iff  P(x,y) > 0,
  FP5  P(x,y) = 0  implies  R(x,y) = I(x,y),
  FP6  I(x,y) <= I(z,w) and P(x,y) <= P(z,w)  imply  R(x,y) <= R(z,w).

Every weak or strong decomposition delivers FP1, FP2, FP3, FP5, FP6 and the
forward half of FP4; the backward half can fail for non-canonical
decompositions unless the conorm rises strictly near zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from .operators import (
    EPSILON,
    BinaryOp,
    Kind,
    check_collapse_implies_absorption,
    check_first_coordinate_continuity,
    degree_grid,
    make_conorm,
    ss_regime,
)
from .decompose import (
    Decomposition,
    DecompositionError,
    Mode,
    canonical_decompose,
    strong_decompose,
)
from .divisors import strong_existence, strong_uniqueness
from .relations import FuzzyRelation
from .verdicts import Verdict

FP_AXIOMS = ("FP1", "FP2", "FP3", "FP4", "FP5", "FP6")


@dataclass(frozen=True)
class PreferenceTriplet:
    """A candidate (weak, strict, indifference) triplet.  Holding a failing
    triplet is allowed: the axioms are audited, not enforced."""

    weak: FuzzyRelation
    strict: FuzzyRelation
    indifference: FuzzyRelation

    def __post_init__(self):
        if not (self.weak.universe == self.strict.universe == self.indifference.universe):
            raise ValueError("triplet components must share one universe")


def triplet_from_decomposition(R: FuzzyRelation, D: Decomposition) -> PreferenceTriplet:
    return PreferenceTriplet(R, D.strict, D.indifference)


@dataclass(frozen=True)
class AxiomVerdict:
    passed: bool
    witness: Optional[tuple] = None

    def __str__(self) -> str:
        return "pass" if self.passed else f"fail (witness {self.witness})"


@dataclass(frozen=True)
class FPReport:
    verdicts: Dict[str, AxiomVerdict]

    @property
    def overall(self) -> bool:
        return all(v.passed for v in self.verdicts.values())

    def failed_axioms(self) -> Tuple[str, ...]:
        return tuple(k for k in FP_AXIOMS if not self.verdicts[k].passed)

    def __str__(self) -> str:
        lines = [f"{k}: {self.verdicts[k]}" for k in FP_AXIOMS]
        lines.append(f"overall: {'pass' if self.overall else 'fail'}")
        return "\n".join(lines)


def audit_fp(
    t: PreferenceTriplet,
    fp6_sample: int = 100_000,
    seed: int = 0,
) -> FPReport:
    """Audit all six axioms.  FP1-FP5 are exhaustive over ordered pairs.
    FP6 is exhaustive over quadruples for universes of at most 6 elements
    and falls back to seeded random sampling above that.

    Strict comparisons are exact; tolerant comparisons get the package
    epsilon.  Witnesses are the lexicographically first failing tuple in
    universe order.
    """

    R, P, I = t.weak.degrees, t.strict.degrees, t.indifference.degrees
    labels = t.weak.universe
    n = len(labels)
    out: Dict[str, AxiomVerdict] = {}

    bad = (P > 0.0) & (P.T > 0.0)
    out["FP1"] = AxiomVerdict(not bad.any(), _pair_witness(labels, bad))

    bad = I != I.T
    out["FP2"] = AxiomVerdict(not bad.any(), _pair_witness(labels, bad))

    bad = P > R + EPSILON
    out["FP3"] = AxiomVerdict(not bad.any(), _pair_witness(labels, bad))

    bad = (R > R.T) != (P > 0.0)
    out["FP4"] = AxiomVerdict(not bad.any(), _pair_witness(labels, bad))

    bad = (P == 0.0) & (np.abs(R - I) > EPSILON)
    out["FP5"] = AxiomVerdict(not bad.any(), _pair_witness(labels, bad))

    i_flat, p_flat, r_flat = I.ravel(), P.ravel(), R.ravel()
    if n <= 6:
        ante = (i_flat[:, None] <= i_flat[None, :]) & (p_flat[:, None] <= p_flat[None, :])
        viol = ante & (r_flat[:, None] > r_flat[None, :] + EPSILON)
        if viol.any():
            a, b = np.argwhere(viol)[0]
            witness = (
                labels[a // n], labels[a % n], labels[b // n], labels[b % n],
            )
            out["FP6"] = AxiomVerdict(False, witness)
        else:
            out["FP6"] = AxiomVerdict(True, None)
    else:
        rng = np.random.default_rng(seed)
        total = n * n
        a = rng.integers(0, total, size=fp6_sample)
        b = rng.integers(0, total, size=fp6_sample)
        viol = (
            (i_flat[a] <= i_flat[b])
            & (p_flat[a] <= p_flat[b])
            & (r_flat[a] > r_flat[b] + EPSILON)
        )
        if viol.any():
            k = int(np.argmax(viol))
            witness = (
                labels[a[k] // n], labels[a[k] % n], labels[b[k] // n], labels[b[k] % n],
            )
            out["FP6"] = AxiomVerdict(False, witness)
        else:
            out["FP6"] = AxiomVerdict(True, None)
    return FPReport(out)


def _pair_witness(labels, mask: np.ndarray) -> Optional[tuple]:
    if not mask.any():
        return None
    a, b = np.argwhere(mask)[0]
    return (labels[a], labels[b])


# ---------------------------------------------------------------------------
# decomposition rules


@dataclass(frozen=True)
class DecompositionRule:
    """A map sending each relation to a (P, I) pair meant to make
    (R, P, I) a fuzzy preference."""

    name: str
    conorm: BinaryOp
    norm: Optional[BinaryOp]
    apply: Callable[[FuzzyRelation], Decomposition] = field(compare=False)

    def __call__(self, R: FuzzyRelation) -> Decomposition:
        return self.apply(R)


def make_rule(S: BinaryOp, T: Optional[BinaryOp] = None) -> DecompositionRule:
    """The canonical rule R |-> (residual P, min I).  Raises when the conorm
    is discontinuous in the first coordinate (no rule can exist then)."""

    cont = check_first_coordinate_continuity(S)
    if cont.verdict is Verdict.FAILS:
        raise DecompositionError(
            f"{S.display_name} is discontinuous in the first coordinate; "
            "it admits no decomposition rule"
        )
    if T is None:
        fn = lambda R: canonical_decompose(R, S)
        name = f"canonical[{S.spec_string()}]"
    else:
        fn = lambda R: strong_decompose(R, T, S)
        name = f"canonical[{T.spec_string()},{S.spec_string()}]"
    return DecompositionRule(name, S, T, fn)


def tie_strict_max_decomposition(R: FuzzyRelation) -> Decomposition:
    """A deliberately flawed variant of the maximum rule: besides the strict
    winners it also promotes symmetric pairs below 1 into the strict part
    (first direction in universe order, to keep P asymmetric).

    Reconstructs under the maximum and satisfies every axiom except the
    backward half of FP4.
    """

    m = R.degrees
    n = R.size
    P = np.zeros_like(m)
    for a in range(n):
        for b in range(n):
            if m[a, b] > m[b, a]:
                P[a, b] = m[a, b]
            elif a < b and m[a, b] == m[b, a] and m[a, b] < 1.0:
                P[a, b] = m[a, b]
    I = np.minimum(m, m.T)
    return Decomposition(
        FuzzyRelation(R.universe, P),
        FuzzyRelation(R.universe, I),
        make_conorm("minimum"),
        None,
        Mode.WEAK,
    )


# ---------------------------------------------------------------------------
# multiplicity witnesses


def find_collapse_witness(S: BinaryOp, step: float = 0.01) -> Optional[Tuple[float, float, float]]:
    """Grid sweep for (w, t, s) with S(t,w) = S(s,w) > w and t != s; None if
    the precondition is unsatisfiable on the grid."""

    g = degree_grid(step, ())
    T_, S_, W = np.meshgrid(g, g, g, indexing="ij")
    vt = np.asarray(S.evaluator(T_, W), dtype=float)
    vs = np.asarray(S.evaluator(S_, W), dtype=float)
    bad = (T_ < S_) & (np.abs(vt - vs) <= EPSILON) & (vt > W + EPSILON)
    if not bad.any():
        return None
    i, j, k = np.argwhere(bad)[0]
    return (float(g[k]), float(g[i]), float(g[j]))


def mj_counterexample(
    S: BinaryOp, w: float, t: float, s: float
) -> Tuple[FuzzyRelation, Decomposition, Decomposition]:
    """Two distinct preference-inducing weak decompositions of one relation,
    built from a collapse witness S(t,w) = S(s,w) > w with t != s.

    The relation puts S(t,w) on (a,b), w on (b,a) and 1 on the diagonal;
    the two strict parts place t respectively s on (a,b).
    """

    if S.kind is not Kind.CONORM:
        raise ValueError("mj_counterexample expects a conorm")
    if t == s:
        raise ValueError("witness degrees t and s must differ")
    v1, v2 = S(t, w), S(s, w)
    if abs(v1 - v2) > EPSILON or not v1 > w + EPSILON:
        raise ValueError(
            f"precondition S(t,w) = S(s,w) > w violated: "
            f"S({t:g},{w:g}) = {v1:g}, S({s:g},{w:g}) = {v2:g}, w = {w:g}"
        )
    universe = ("a", "b")
    m = np.array([[1.0, v1], [w, 1.0]])
    R = FuzzyRelation(universe, m)
    I = np.minimum(m, m.T)

    def decomp(p_ab: float) -> Decomposition:
        P = np.zeros((2, 2))
        P[0, 1] = p_ab
        return Decomposition(
            FuzzyRelation(universe, P), FuzzyRelation(universe, I), S, None, Mode.WEAK
        )

    return R, decomp(t), decomp(s)


# ---------------------------------------------------------------------------
# rule classification


class RuleClass(Enum):
    NOT_COMPATIBLE = "not-compatible"
    COMPATIBLE = "compatible"
    INDUCED = "induced"
    UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class RuleClassification:
    verdict: RuleClass
    reason: str
    witness: Optional[tuple] = None
    oracle_verdict: Optional[RuleClass] = None  # set for undetermined cells

    def __str__(self) -> str:
        text = f"{self.verdict.value}: {self.reason}"
        if self.witness is not None:
            text += f" (witness {self.witness})"
        return text


def _undetermined_cell(S: BinaryOp, T: Optional[BinaryOp]) -> bool:
    """The (family, lambda) combinations whose rule status the reference
    classification leaves open.  These are reported UNDETERMINED and never
    resolved, even though the sampling oracles often suggest an answer."""

    if not S.is_builtin or (T is not None and not T.is_builtin):
        return False
    s_ss_pos = S.family == "schweizer_sklar" and ss_regime(S.parameter) == "pos"
    if T is None:
        return s_ss_pos
    t_fam, s_fam = T.family, S.family
    if t_fam == "drastic" and s_ss_pos:
        return True
    if t_fam == "lukasiewicz" and S.family == "schweizer_sklar" and ss_regime(S.parameter) == "pos" and S.parameter >= 1.0:
        return True
    if (
        t_fam == "schweizer_sklar"
        and s_fam == "schweizer_sklar"
        and T.parameter == S.parameter
        and ss_regime(S.parameter) == "pos"
        and S.parameter >= 1.0
    ):
        return True
    return False


def sample_relations(
    count: int,
    size: int = 3,
    grid_step: float = 0.05,
    seed: int = 0,
    reflexive: bool = False,
) -> List[FuzzyRelation]:
    """Seeded random relations with degrees on a uniform grid."""

    rng = np.random.default_rng(seed)
    levels = round(1.0 / grid_step)
    labels = tuple(f"x{k}" for k in range(size))
    out = []
    for _ in range(count):
        m = rng.integers(0, levels + 1, size=(size, size)) / levels
        if reflexive:
            np.fill_diagonal(m, 1.0)
        out.append(FuzzyRelation(labels, m))
    return out


def classify_rule(
    S: BinaryOp,
    T: Optional[BinaryOp] = None,
    samples: int = 25,
    seed: int = 0,
) -> RuleClassification:
    """Classify the canonical rule for S (weak) or (T, S) (strong).

    NOT_COMPATIBLE when decompositions can fail to exist or some sampled
    canonical output fails the preference audit; INDUCED when additionally
    no second preference-inducing decomposition can exist (collapse forces
    absorption for weak rules, uniqueness for strong ones); COMPATIBLE in
    between; UNDETERMINED for the open cells of the reference classification
    and for custom operators whose checks stay sampled.
    """

    computed = _classify_computed(S, T, samples, seed)
    if _undetermined_cell(S, T):
        return RuleClassification(
            RuleClass.UNDETERMINED,
            "reference classification leaves this operator family open",
            None,
            computed.verdict,
        )
    return computed


def _classify_computed(
    S: BinaryOp, T: Optional[BinaryOp], samples: int, seed: int
) -> RuleClassification:
    if T is None:
        exist = check_first_coordinate_continuity(S)
        if exist.verdict is Verdict.FAILS:
            return RuleClassification(
                RuleClass.NOT_COMPATIBLE,
                "weak decompositions do not always exist (conorm discontinuous "
                "in the first coordinate)",
                exist.witness,
            )
    else:
        exist = strong_existence(T, S)
        if exist.verdict is Verdict.FAILS:
            return RuleClassification(
                RuleClass.NOT_COMPATIBLE,
                f"strong decompositions do not always exist: {exist.detail}",
                exist.witness,
            )

    rule = make_rule(S, T)
    for R in sample_relations(samples, size=3, grid_step=0.05, seed=seed, reflexive=False):
        d = rule(R)
        report = audit_fp(triplet_from_decomposition(R, d))
        if not report.overall:
            axiom = report.failed_axioms()[0]
            return RuleClassification(
                RuleClass.NOT_COMPATIBLE,
                f"canonical output violates {axiom} on a sampled relation",
                report.verdicts[axiom].witness,
            )

    if T is None:
        collapse = check_collapse_implies_absorption(S)
        if collapse.verdict is Verdict.HOLDS:
            return RuleClassification(
                RuleClass.INDUCED,
                "canonical outputs are preferences and any collapse of the "
                "conorm is absorbed, so no second preference-inducing "
                "decomposition exists",
            )
        if collapse.verdict is Verdict.FAILS:
            return RuleClassification(
                RuleClass.COMPATIBLE,
                "canonical outputs are preferences but a collapse witness "
                "yields a second preference-inducing decomposition",
                collapse.witness,
            )
        return RuleClassification(
            RuleClass.UNDETERMINED,
            "compatible on samples; inducement undecided for a custom conorm",
        )

    unique = strong_uniqueness(T, S)
    if unique.verdict is Verdict.HOLDS:
        return RuleClassification(
            RuleClass.INDUCED,
            "the strong decomposition is unique outright",
        )
    if unique.verdict is Verdict.FAILS:
        return RuleClassification(
            RuleClass.COMPATIBLE,
            "multiple strong decompositions exist and induce preferences",
            unique.witness,
        )
    return RuleClassification(
        RuleClass.UNDETERMINED,
        "compatible on samples; uniqueness undecided",
    )
