"""Decomposition of a fuzzy relation into strict preference and indifference.

Any reconstruction R = S(P, I) with P asymmetric and I symmetric forces
I(x,y) = min(R(x,y), R(y,x)); the canonical strict part is the residual
P(x,y) = inf{t : S(t, I(x,y)) >= R(x,y)}, which exists as a reconstructing
value exactly when S is continuous in its first coordinate.

Closed-form residuals are used for every built-in conorm; a 60-step
bisection covers custom operators and doubles as an independent oracle for
the closed forms.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple

import numpy as np

from .operators import (
    EPSILON,
    BinaryOp,
    Kind,
    check_first_coordinate_continuity,
    resolved_family,
)
from .divisors import BISECTION_STEPS, strong_existence
from .relations import FuzzyRelation, is_asymmetric, is_symmetric
from .verdicts import TriState, Verdict, fails, holds


class Mode(Enum):
    STRONG = "strong"
    WEAK = "weak"


class DecompositionError(ValueError):
    pass


@dataclass(frozen=True)
class ResidualValue:
    """Infimum of the reconstructing values, with an attainment flag.

    The infimum can fail to be a minimum only for conorms that are
    discontinuous in the first coordinate; the flag is the difference
    between a decomposition and a near-miss.
    """

    value: float
    attained: bool

    def __float__(self) -> float:
        return self.value


@dataclass(frozen=True)
class Decomposition:
    strict: FuzzyRelation
    indifference: FuzzyRelation
    conorm: BinaryOp
    norm: Optional[BinaryOp] = None
    mode: Mode = Mode.WEAK

    def __post_init__(self):
        if self.mode is Mode.STRONG and self.norm is None:
            raise ValueError("a strong decomposition must reference its norm")


# ---------------------------------------------------------------------------
# residual operator


def residual_array(S: BinaryOp, i, r) -> np.ndarray:
    """Vectorised inf{t : S(t, i) >= r}.  Where i >= r the residual is 0."""

    i = np.asarray(i, dtype=float)
    r = np.asarray(r, dtype=float)
    fam = resolved_family(S) if S.is_builtin else "custom"
    lam = S.parameter
    active = r > i  # elsewhere the residual is 0

    if fam == "minimum":
        out = np.where(active, r, 0.0)
    elif fam == "lukasiewicz":
        out = np.where(active, np.maximum(r - i, 0.0), 0.0)
    elif fam == "product":
        with np.errstate(all="ignore"):
            val = (r - i) / (1.0 - i)
        out = np.where(active, np.clip(val, 0.0, 1.0), 0.0)
    elif fam == "drastic":
        # for 0 < i < r the attaining set is (0,1]: infimum 0, not attained
        out = np.where(active & (i == 0.0), r, 0.0)
    elif fam == "ordinal_sum_lukasiewicz_half":
        scaled = np.maximum(r - i, 0.0)
        out = np.where(active, np.where((r <= 0.5) & (i <= 0.5), scaled, r), 0.0)
    elif fam == "schweizer_sklar":
        with np.errstate(all="ignore"):
            A = (1.0 - r) ** lam + 1.0 - (1.0 - i) ** lam
            val = 1.0 - A ** (1.0 / lam)
            if lam < 0:
                val = np.where(r == 1.0, 1.0, val)
            else:
                val = np.where(A <= 0.0, 1.0, val)
        out = np.where(active, np.clip(val, 0.0, 1.0), 0.0)
    elif fam == "hamacher":
        with np.errstate(all="ignore"):
            den = 1.0 - (2.0 - lam) * i + (1.0 - lam) * r * i
            val = (r - i) / den
        out = np.where(active, np.clip(val, 0.0, 1.0), 0.0)
    else:
        out = _bisect_residual_array(S, i, r)
    return out


def _bisect_residual_array(S: BinaryOp, i: np.ndarray, r: np.ndarray) -> np.ndarray:
    i, r = np.broadcast_arrays(i, r)
    lo = np.zeros(i.shape)
    hi = np.ones(i.shape)
    base = np.asarray(S.evaluator(lo, i), dtype=float) >= r
    for _ in range(BISECTION_STEPS):
        mid = 0.5 * (lo + hi)
        ok = np.asarray(S.evaluator(mid, i), dtype=float) >= r
        hi = np.where(ok, mid, hi)
        lo = np.where(ok, lo, mid)
    return np.where(base, 0.0, hi)


def bisection_residual(S: BinaryOp, i, r):
    """Residual computed by bisection regardless of family: the independent
    oracle for the closed forms.  Scalar in, scalar out; arrays broadcast."""
    out = _bisect_residual_array(S, np.asarray(i, float), np.asarray(r, float))
    if np.ndim(i) == 0 and np.ndim(r) == 0:
        return float(out)
    return out


def residual(S: BinaryOp, i: float, r: float) -> ResidualValue:
    """inf{t in [0,1] : S(t, i) >= r} together with whether the infimum
    itself reconstructs (S(inf, i) >= r)."""

    if S.kind is not Kind.CONORM:
        raise ValueError("residual expects a conorm")
    if not (0.0 <= i <= 1.0 and 0.0 <= r <= 1.0):
        raise ValueError("degrees must lie in [0,1]")
    v = float(residual_array(S, i, r))
    attained = S(v, i) >= r - EPSILON
    return ResidualValue(v, bool(attained))


# ---------------------------------------------------------------------------
# canonical decomposition


def indifference_part(R: FuzzyRelation) -> FuzzyRelation:
    """Pointwise minimum of R and its transpose: the only symmetric component
    any reconstruction can have."""
    return FuzzyRelation(R.universe, np.minimum(R.degrees, R.degrees.T))


def canonical_decompose(R: FuzzyRelation, S: BinaryOp) -> Decomposition:
    """I = min(R, R^t); P = pointwise residual.  Requires a conorm that is
    continuous in the first coordinate (otherwise some relations have no
    decomposition at all, and this one would not reconstruct)."""

    cont = check_first_coordinate_continuity(S)
    if cont.verdict is Verdict.FAILS:
        raise DecompositionError(
            f"{S.display_name} is not continuous in the first coordinate; "
            f"decomposition can fail: {cont.detail}"
        )
    i_mat = np.minimum(R.degrees, R.degrees.T)
    p_mat = residual_array(S, i_mat, R.degrees)
    recon = np.asarray(S.evaluator(p_mat, i_mat), dtype=float)
    gap = np.abs(recon - R.degrees)
    if gap.max() > EPSILON:
        a, b = np.argwhere(gap > EPSILON)[0]
        raise DecompositionError(
            f"residual infimum not attained at pair "
            f"({R.universe[a]},{R.universe[b]}): S(P,I) = {recon[a, b]!r} "
            f"but R = {R.degrees[a, b]!r}"
        )
    return Decomposition(
        strict=FuzzyRelation(R.universe, p_mat),
        indifference=FuzzyRelation(R.universe, i_mat),
        conorm=S,
        norm=None,
        mode=Mode.WEAK,
    )


def strong_decompose(R: FuzzyRelation, T: BinaryOp, S: BinaryOp) -> Decomposition:
    """Canonical decomposition re-verified against the norm condition
    T(P, I) = 0.  Requires the (T,S) existence certificate."""

    exist = strong_existence(T, S)
    if exist.verdict is Verdict.FAILS:
        raise DecompositionError(
            f"no strong decomposition under ({T.display_name}, {S.display_name}): {exist.detail}"
        )
    weak = canonical_decompose(R, S)
    d = Decomposition(weak.strict, weak.indifference, S, T, Mode.STRONG)
    check = verify_strong(R, d, T)
    if check.verdict is Verdict.FAILS:
        raise DecompositionError(
            f"internal consistency: canonical pair fails the norm condition: {check.detail}"
        )
    return d


# ---------------------------------------------------------------------------
# verification


def _structural_check(R: FuzzyRelation, D: Decomposition) -> Optional[TriState]:
    P, I = D.strict, D.indifference
    if not (R.universe == P.universe == I.universe):
        raise ValueError("relation and decomposition universes differ")
    if not is_asymmetric(P):
        m = P.degrees
        a, b = np.argwhere((m > 0.0) & (m.T > 0.0))[0]
        return fails(
            (float(m[a, b]), float(m[b, a])),
            f"strict part not asymmetric at ({R.universe[a]},{R.universe[b]})",
        )
    if not is_symmetric(I):
        m = I.degrees
        a, b = np.argwhere(m != m.T)[0]
        return fails(
            (float(m[a, b]), float(m[b, a])),
            f"indifference not symmetric at ({R.universe[a]},{R.universe[b]})",
        )
    recon = np.asarray(D.conorm.evaluator(P.degrees, I.degrees), dtype=float)
    gap = np.abs(recon - R.degrees)
    if gap.max() > EPSILON:
        a, b = np.argwhere(gap > EPSILON)[0]
        return fails(
            (float(recon[a, b]), float(R.degrees[a, b])),
            f"S(P,I) != R at ({R.universe[a]},{R.universe[b]})",
        )
    return None


def verify_weak(R: FuzzyRelation, D: Decomposition) -> TriState:
    """P asymmetric, I symmetric, S(P,I) = R, and I = 1 forces P = 0."""

    bad = _structural_check(R, D)
    if bad is not None:
        return bad
    P, I = D.strict.degrees, D.indifference.degrees
    viol = (I == 1.0) & (P > 0.0)
    if viol.any():
        a, b = np.argwhere(viol)[0]
        return fails(
            (float(P[a, b]), 1.0),
            f"I = 1 but P = {P[a, b]:g} at ({R.universe[a]},{R.universe[b]})",
        )
    return holds("weak decomposition verified")


def verify_strong(R: FuzzyRelation, D: Decomposition, T: BinaryOp) -> TriState:
    """P asymmetric, I symmetric, S(P,I) = R, and T(P,I) = 0."""

    bad = _structural_check(R, D)
    if bad is not None:
        return bad
    P, I = D.strict.degrees, D.indifference.degrees
    tvals = np.asarray(T.evaluator(P, I), dtype=float)
    viol = tvals > EPSILON
    if viol.any():
        a, b = np.argwhere(viol)[0]
        return fails(
            (float(P[a, b]), float(I[a, b])),
            f"T({P[a, b]:g},{I[a, b]:g}) = {tvals[a, b]:g} != 0 "
            f"at ({R.universe[a]},{R.universe[b]})",
        )
    return holds("strong decomposition verified")


# ---------------------------------------------------------------------------
# brute-force enumeration (uniqueness oracle)


def _grid_values(grid_step: float) -> np.ndarray:
    # k/n by direct division: bit-identical to degrees built the same way
    n = round(1.0 / grid_step)
    return np.arange(n + 1) / n


def enumerate_decompositions(
    R: FuzzyRelation,
    S: BinaryOp,
    T: Optional[BinaryOp] = None,
    grid_step: float = 0.01,
    search_indifference: bool = False,
    max_results: int = 500_000,
) -> List[Decomposition]:
    """All grid-valued decompositions of R with respect to S (and T when a
    strong decomposition is requested).

    By default the indifference part is pinned to min(R, R^t), which any
    reconstruction forces anyway; ``search_indifference=True`` drops that
    shortcut and brute-forces I as well, turning the enumeration into an
    independent oracle for the pinning itself.  Candidates for P are searched
    on every ordered pair subject to asymmetry.  Results are sorted
    lexicographically by (P, I) matrices.
    """

    if grid_step < 0.01 - 1e-12:
        raise ValueError("grid_step below 1/100 makes the search explode")
    n = R.size
    if n > 4:
        raise ValueError("enumeration is meant for universes of at most 4 elements")
    vals = _grid_values(grid_step)
    m = R.degrees

    def strict_candidates(i: float, r: float) -> np.ndarray:
        """Grid values p with S(p, i) = r (and T(p, i) = 0 when strong)."""
        col = np.full_like(vals, i)
        ok = np.abs(np.asarray(S.evaluator(vals, col), dtype=float) - r) <= EPSILON
        if T is not None:
            ok &= np.asarray(T.evaluator(vals, col), dtype=float) <= EPSILON
        return vals[ok]

    def zero_works(i: float, r: float) -> bool:
        if abs(S(0.0, i) - r) > EPSILON:
            return False
        return T is None or T(0.0, i) <= EPSILON

    # diagonal: asymmetry forces P(x,x) = 0, so I(x,x) must reproduce R(x,x)
    diag_choices: List[List[float]] = []
    for k in range(n):
        r = m[k, k]
        if search_indifference:
            opts = [float(v) for v in vals if zero_works(v, r)]
        else:
            opts = [float(r)] if zero_works(r, r) else []
        diag_choices.append(opts)

    # off-diagonal unordered pairs: candidates (i, p_xy, p_yx)
    pair_index = [(a, b) for a in range(n) for b in range(a + 1, n)]
    pair_choices: List[List[Tuple[float, float, float]]] = []
    for a, b in pair_index:
        r_ab, r_ba = m[a, b], m[b, a]
        i_options = (
            [float(v) for v in vals]
            if search_indifference
            else [float(min(r_ab, r_ba))]
        )
        combos: List[Tuple[float, float, float]] = []
        for i in i_options:
            if i == 1.0:
                # the weak condition pins both strict values to 0
                if zero_works(1.0, r_ab) and zero_works(1.0, r_ba):
                    combos.append((i, 0.0, 0.0))
                continue
            p_ab_opts = strict_candidates(i, r_ab)
            p_ba_opts = strict_candidates(i, r_ba)
            zero_ab = bool((p_ab_opts == 0.0).any())
            zero_ba = bool((p_ba_opts == 0.0).any())
            if zero_ba:
                combos.extend((i, float(p), 0.0) for p in p_ab_opts if p > 0.0)
            if zero_ab:
                combos.extend((i, 0.0, float(q)) for q in p_ba_opts if q > 0.0)
            if zero_ab and zero_ba:
                combos.append((i, 0.0, 0.0))
        pair_choices.append(combos)

    total = 1
    for opts in diag_choices + pair_choices:
        total *= len(opts)
        if total > max_results:
            raise ValueError(
                f"combinatorial bound exceeded: more than {max_results} candidates"
            )
    if total == 0:
        return []

    results: List[Decomposition] = []
    for diag in itertools.product(*diag_choices):
        for assignment in itertools.product(*pair_choices):
            P = np.zeros((n, n))
            I = np.zeros((n, n))
            for k in range(n):
                I[k, k] = diag[k]
            for (a, b), (i, p_ab, p_ba) in zip(pair_index, assignment):
                I[a, b] = I[b, a] = i
                P[a, b] = p_ab
                P[b, a] = p_ba
            d = Decomposition(
                FuzzyRelation(R.universe, P),
                FuzzyRelation(R.universe, I),
                S,
                T,
                Mode.STRONG if T is not None else Mode.WEAK,
            )
            if verify_weak(R, d).verdict is not Verdict.HOLDS:
                continue
            if T is not None and verify_strong(R, d, T).verdict is not Verdict.HOLDS:
                continue
            results.append(d)

    results.sort(
        key=lambda d: (
            tuple(d.strict.degrees.ravel()),
            tuple(d.indifference.degrees.ravel()),
        )
    )
    return results
