"""Machine-checked regeneration of the reference decomposability tables.

Two summary tables cover the standard operator families: one records, for
each (norm, conorm) pairing and for weak decomposition per conorm, whether
every relation decomposes and whether uniquely; the other records whether
the canonical decomposition yields a preference-forming rule, whether that
rule is the only preference-forming choice, or whether the question is
open.  Parametric families are summarised per lambda regime; a regime whose
samples disagree raises instead of summarising.

The expected tables embedded here are the reference verdicts with two
transcription slips repaired (see the repository notes): the strong
(Lukasiewicz, Schweizer-Sklar) cell had its 0<lambda<1 / lambda>1 regimes
swapped relative to its own divisor-interval formulas, and the weak
Schweizer-Sklar rule column listed nonexistence on -inf<lambda<=0 where
those strictly increasing conorms provably induce their rule (at lambda=0
the same conorm is the probabilistic sum, whose cell says exactly that).
Open cells stay open: they are reported as undetermined, never resolved.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .operators import (
    BinaryOp,
    check_first_coordinate_continuity,
    check_strictly_increasing_first,
    make_conorm,
    make_norm,
)
from .divisors import strong_existence, strong_uniqueness
from .preferences import RuleClass, classify_rule
from .verdicts import Verdict

NORM_FAMILIES = ("drastic", "minimum", "lukasiewicz", "product", "schweizer_sklar", "hamacher")
CONORM_FAMILIES = ("drastic", "minimum", "lukasiewicz", "product", "schweizer_sklar", "hamacher")

CONORM_LABELS = {
    "drastic": "Drastic",
    "minimum": "Maximum",
    "lukasiewicz": "Lukasiewicz",
    "product": "Probabilistic",
    "schweizer_sklar": "Schweizer-Sklar",
    "hamacher": "Hamacher",
}
NORM_LABELS = {
    "drastic": "Drastic",
    "minimum": "Minimum",
    "lukasiewicz": "Lukasiewicz",
    "product": "Product",
    "schweizer_sklar": "Schweizer-Sklar",
    "hamacher": "Hamacher",
}
WEAK_ROW = "weak"

DEFAULT_LAMBDA_SAMPLES = (-math.inf, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0, math.inf)


class Table1Verdict(Enum):
    NOT_EXISTS = "none"
    EXISTS = "exists"
    EXISTS_UNIQUE = "unique"


class Table2Verdict(Enum):
    NOT_EXISTS = "none"
    COMPATIBLE_RULE = "compatible"
    INDUCED_RULE = "induced"
    UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class Regime:
    label: str
    contains: Callable[[float], bool]


_R = Regime
ALL = _R("", lambda lam: True)

REGIMES = {
    "lambda<=0": _R("lambda<=0", lambda l: l <= 0.0),
    "0<lambda<1": _R("0<lambda<1", lambda l: 0.0 < l < 1.0),
    "0<lambda<+inf": _R("0<lambda<+inf", lambda l: 0.0 < l < math.inf),
    "lambda=1": _R("lambda=1", lambda l: l == 1.0),
    "1<lambda<+inf": _R("1<lambda<+inf", lambda l: 1.0 < l < math.inf),
    "lambda<1": _R("lambda<1", lambda l: l < 1.0),
    "lambda>1": _R("lambda>1", lambda l: l > 1.0),
    "lambda=+inf": _R("lambda=+inf", lambda l: l == math.inf),
    "lambda=-inf": _R("lambda=-inf", lambda l: l == -math.inf),
    "-inf<lambda<=0": _R("-inf<lambda<=0", lambda l: -math.inf < l <= 0.0),
    "lambda<+inf": _R("lambda<+inf", lambda l: l < math.inf),
}


@dataclass(frozen=True)
class TableCell:
    row: str
    col: str
    entries: Tuple[Tuple[str, Enum], ...]  # (regime label, verdict)

    def verdict_for(self, label: str = "") -> Enum:
        for lab, v in self.entries:
            if lab == label:
                return v
        raise KeyError(f"no regime {label!r} in cell ({self.row}, {self.col})")

    def render(self) -> str:
        if len(self.entries) == 1 and self.entries[0][0] == "":
            return self.entries[0][1].value
        return "; ".join(f"{lab}: {v.value}" for lab, v in self.entries)


# ---------------------------------------------------------------------------
# regime structure of each cell (which lambda ranges a cell distinguishes)


def _cell_regimes(row: str, col: str) -> Tuple[str, ...]:
    row_param = row in ("schweizer_sklar", "hamacher")
    col_param = col in ("schweizer_sklar", "hamacher")
    if not row_param and not col_param:
        return ("",)
    if row == "schweizer_sklar" and col == "schweizer_sklar":
        return ("lambda<1", "lambda=1", "1<lambda<+inf", "lambda=+inf")
    if col == "schweizer_sklar":
        if row == "lukasiewicz":
            return ("lambda<=0", "0<lambda<1", "lambda=1", "1<lambda<+inf", "lambda=+inf")
        if row == WEAK_ROW:
            return ("lambda=-inf", "-inf<lambda<=0", "0<lambda<+inf", "lambda=+inf")
        if row == "drastic":
            return ("lambda<=0", "0<lambda<+inf", "lambda=+inf")
        return ("",)  # minimum/product/hamacher norms: uniform nonexistence
    if row == "schweizer_sklar":
        if col == "lukasiewicz":
            return ("lambda<1", "lambda=1", "lambda>1")
        return ("",)  # verdict uniform in lambda for the other columns
    if col == "hamacher":
        if row == WEAK_ROW:
            return ("lambda<+inf", "lambda=+inf")
        return ("",)  # uniform: nonexistence for every lambda
    if row == "hamacher":
        return ("",)  # scoped to lambda < +inf (+inf reproduces the drastic row)
    return ("",)


def _samples_for(row: str, col: str, regime_label: str, lambda_samples: Sequence[float]) -> List[float]:
    if regime_label == "":
        reg = ALL
    else:
        reg = REGIMES[regime_label]
    vals = [l for l in lambda_samples if reg.contains(l)]
    if row == "hamacher" or col == "hamacher":
        vals = [l for l in vals if l >= 0.0]
        if row == "hamacher":
            vals = [l for l in vals if l < math.inf]
    if not vals:
        raise ValueError(
            f"lambda samples do not cover regime {regime_label!r} of cell ({row}, {col})"
        )
    return vals


def _ops_for(row: str, col: str, lam: Optional[float]) -> Tuple[Optional[BinaryOp], BinaryOp]:
    t_lam = lam if row in ("schweizer_sklar", "hamacher") else None
    s_lam = lam if col in ("schweizer_sklar", "hamacher") else None
    T = None if row == WEAK_ROW else make_norm(row, t_lam)
    S = make_conorm(col, s_lam)
    return T, S


class RegimeConsistencyError(RuntimeError):
    """A declared lambda regime produced different verdicts for different
    samples: the regime structure itself is wrong."""


def _summarise(row, col, label, verdicts):
    distinct = set(verdicts)
    if len(distinct) != 1:
        raise RegimeConsistencyError(
            f"cell ({row}, {col}) regime {label!r}: mixed verdicts {sorted(v.value for v in distinct)}"
        )
    return next(iter(distinct))


# ---------------------------------------------------------------------------
# engine verdicts


def _engine_table1(T: Optional[BinaryOp], S: BinaryOp) -> Table1Verdict:
    if T is None:
        if check_first_coordinate_continuity(S).verdict is Verdict.FAILS:
            return Table1Verdict.NOT_EXISTS
        if check_strictly_increasing_first(S).verdict is Verdict.HOLDS:
            return Table1Verdict.EXISTS_UNIQUE
        return Table1Verdict.EXISTS
    if strong_existence(T, S).verdict is not Verdict.HOLDS:
        return Table1Verdict.NOT_EXISTS
    if strong_uniqueness(T, S).verdict is Verdict.HOLDS:
        return Table1Verdict.EXISTS_UNIQUE
    return Table1Verdict.EXISTS


_RULECLASS_TO_T2 = {
    RuleClass.NOT_COMPATIBLE: Table2Verdict.NOT_EXISTS,
    RuleClass.COMPATIBLE: Table2Verdict.COMPATIBLE_RULE,
    RuleClass.INDUCED: Table2Verdict.INDUCED_RULE,
    RuleClass.UNDETERMINED: Table2Verdict.UNDETERMINED,
}


def _engine_table2(T: Optional[BinaryOp], S: BinaryOp, seed: int) -> Table2Verdict:
    return _RULECLASS_TO_T2[classify_rule(S, T, samples=12, seed=seed).verdict]


def _generate(which: int, lambda_samples: Sequence[float], seed: int) -> List[TableCell]:
    cells: List[TableCell] = []
    rows = list(NORM_FAMILIES) + [WEAK_ROW]
    for row in rows:
        for col in CONORM_FAMILIES:
            entries = []
            for label in _cell_regimes(row, col):
                row_param = row in ("schweizer_sklar", "hamacher")
                col_param = col in ("schweizer_sklar", "hamacher")
                if not row_param and not col_param:
                    lams: List[Optional[float]] = [None]
                else:
                    lams = _samples_for(row, col, label, lambda_samples)
                verdicts = []
                for lam in lams:
                    T, S = _ops_for(row, col, lam)
                    if which == 1:
                        verdicts.append(_engine_table1(T, S))
                    else:
                        verdicts.append(_engine_table2(T, S, seed))
                entries.append((label, _summarise(row, col, label, verdicts)))
            cells.append(TableCell(row, col, tuple(entries)))
    return cells


def generate_table1(lambda_samples: Sequence[float] = DEFAULT_LAMBDA_SAMPLES) -> List[TableCell]:
    """Existence/uniqueness verdicts computed from the divisor-interval and
    strictness machinery, one cell per (norm family, conorm family) plus a
    weak-decomposition row."""
    return _generate(1, lambda_samples, seed=0)


def generate_table2(
    lambda_samples: Sequence[float] = DEFAULT_LAMBDA_SAMPLES, seed: int = 0
) -> List[TableCell]:
    """Rule-classification verdicts computed by classify_rule."""
    return _generate(2, lambda_samples, seed=seed)


# ---------------------------------------------------------------------------
# embedded reference tables

_NE1 = Table1Verdict.NOT_EXISTS
_E1 = Table1Verdict.EXISTS
_U1 = Table1Verdict.EXISTS_UNIQUE

REFERENCE_TABLE1: Dict[Tuple[str, str], Tuple[Tuple[str, Table1Verdict], ...]] = {}


def _set1(row, col, *entries):
    REFERENCE_TABLE1[(row, col)] = tuple(entries)


for _col in CONORM_FAMILIES:
    _set1("minimum", _col, ("", _NE1))
    _set1("product", _col, ("", _NE1))
    _set1("hamacher", _col, ("", _NE1))

_set1("drastic", "drastic", ("", _NE1))
_set1("drastic", "minimum", ("", _NE1))
_set1("drastic", "lukasiewicz", ("", _E1))
_set1("drastic", "product", ("", _NE1))
_set1(
    "drastic",
    "schweizer_sklar",
    ("lambda<=0", _NE1),
    ("0<lambda<+inf", _E1),
    ("lambda=+inf", _NE1),
)
_set1("drastic", "hamacher", ("", _NE1))

_set1("lukasiewicz", "drastic", ("", _NE1))
_set1("lukasiewicz", "minimum", ("", _NE1))
_set1("lukasiewicz", "lukasiewicz", ("", _U1))
_set1("lukasiewicz", "product", ("", _NE1))
_set1(
    "lukasiewicz",
    "schweizer_sklar",
    ("lambda<=0", _NE1),
    ("0<lambda<1", _NE1),
    ("lambda=1", _U1),
    ("1<lambda<+inf", _E1),
    ("lambda=+inf", _NE1),
)
_set1("lukasiewicz", "hamacher", ("", _NE1))

_set1("schweizer_sklar", "drastic", ("", _NE1))
_set1("schweizer_sklar", "minimum", ("", _NE1))
_set1(
    "schweizer_sklar",
    "lukasiewicz",
    ("lambda<1", _NE1),
    ("lambda=1", _U1),
    ("lambda>1", _E1),
)
_set1("schweizer_sklar", "product", ("", _NE1))
_set1(
    "schweizer_sklar",
    "schweizer_sklar",
    ("lambda<1", _NE1),
    ("lambda=1", _U1),
    ("1<lambda<+inf", _E1),
    ("lambda=+inf", _NE1),
)
_set1("schweizer_sklar", "hamacher", ("", _NE1))

_set1(WEAK_ROW, "drastic", ("", _NE1))
_set1(WEAK_ROW, "minimum", ("", _E1))
_set1(WEAK_ROW, "lukasiewicz", ("", _E1))
_set1(WEAK_ROW, "product", ("", _U1))
_set1(
    WEAK_ROW,
    "schweizer_sklar",
    ("lambda=-inf", _E1),
    ("-inf<lambda<=0", _U1),
    ("0<lambda<+inf", _E1),
    ("lambda=+inf", _NE1),
)
_set1(WEAK_ROW, "hamacher", ("lambda<+inf", _U1), ("lambda=+inf", _NE1))


_NE2 = Table2Verdict.NOT_EXISTS
_CR2 = Table2Verdict.COMPATIBLE_RULE
_ID2 = Table2Verdict.INDUCED_RULE
_UN2 = Table2Verdict.UNDETERMINED

REFERENCE_TABLE2: Dict[Tuple[str, str], Tuple[Tuple[str, Table2Verdict], ...]] = {}


def _set2(row, col, *entries):
    REFERENCE_TABLE2[(row, col)] = tuple(entries)


for _col in CONORM_FAMILIES:
    _set2("minimum", _col, ("", _NE2))
    _set2("product", _col, ("", _NE2))
    _set2("hamacher", _col, ("", _NE2))

_set2("drastic", "drastic", ("", _NE2))
_set2("drastic", "minimum", ("", _NE2))
_set2("drastic", "lukasiewicz", ("", _CR2))
_set2("drastic", "product", ("", _NE2))
_set2(
    "drastic",
    "schweizer_sklar",
    ("lambda<=0", _NE2),
    ("0<lambda<+inf", _UN2),
    ("lambda=+inf", _NE2),
)
_set2("drastic", "hamacher", ("", _NE2))

_set2("lukasiewicz", "drastic", ("", _NE2))
_set2("lukasiewicz", "minimum", ("", _NE2))
_set2("lukasiewicz", "lukasiewicz", ("", _ID2))
_set2("lukasiewicz", "product", ("", _NE2))
_set2(
    "lukasiewicz",
    "schweizer_sklar",
    ("lambda<=0", _NE2),
    ("0<lambda<1", _NE2),
    ("lambda=1", _UN2),
    ("1<lambda<+inf", _UN2),
    ("lambda=+inf", _NE2),
)
_set2("lukasiewicz", "hamacher", ("", _NE2))

_set2("schweizer_sklar", "drastic", ("", _NE2))
_set2("schweizer_sklar", "minimum", ("", _NE2))
_set2(
    "schweizer_sklar",
    "lukasiewicz",
    ("lambda<1", _NE2),
    ("lambda=1", _ID2),
    ("lambda>1", _CR2),
)
_set2("schweizer_sklar", "product", ("", _NE2))
_set2(
    "schweizer_sklar",
    "schweizer_sklar",
    ("lambda<1", _NE2),
    ("lambda=1", _UN2),
    ("1<lambda<+inf", _UN2),
    ("lambda=+inf", _NE2),
)
_set2("schweizer_sklar", "hamacher", ("", _NE2))

_set2(WEAK_ROW, "drastic", ("", _NE2))
_set2(WEAK_ROW, "minimum", ("", _ID2))
_set2(WEAK_ROW, "lukasiewicz", ("", _CR2))
_set2(WEAK_ROW, "product", ("", _ID2))
_set2(
    WEAK_ROW,
    "schweizer_sklar",
    ("lambda=-inf", _ID2),
    ("-inf<lambda<=0", _ID2),
    ("0<lambda<+inf", _UN2),
    ("lambda=+inf", _NE2),
)
_set2(WEAK_ROW, "hamacher", ("lambda<+inf", _ID2), ("lambda=+inf", _NE2))


# ---------------------------------------------------------------------------
# diffing and rendering


@dataclass(frozen=True)
class TableMismatch:
    row: str
    col: str
    regime: str
    expected: Enum
    got: Enum

    def __str__(self) -> str:
        where = f"({self.row}, {self.col})" + (f" [{self.regime}]" if self.regime else "")
        return f"{where}: expected {self.expected.value}, got {self.got.value}"


def diff_against_reference(cells: List[TableCell], which: int) -> List[TableMismatch]:
    ref = REFERENCE_TABLE1 if which == 1 else REFERENCE_TABLE2
    mismatches = []
    for cell in cells:
        expected_entries = dict(ref[(cell.row, cell.col)])
        got_entries = dict(cell.entries)
        if set(expected_entries) != set(got_entries):
            raise RuntimeError(
                f"regime structure mismatch in cell ({cell.row}, {cell.col})"
            )
        for label, expected in expected_entries.items():
            got = got_entries[label]
            if got is not expected:
                mismatches.append(TableMismatch(cell.row, cell.col, label, expected, got))
    return mismatches


def render_table(cells: List[TableCell], which: int, fmt: str = "text") -> str:
    by_pos = {(c.row, c.col): c for c in cells}
    rows = list(NORM_FAMILIES) + [WEAK_ROW]
    if fmt == "csv":
        lines = ["row,conorm,regime,verdict"]
        for row in rows:
            for col in CONORM_FAMILIES:
                for label, v in by_pos[(row, col)].entries:
                    lines.append(f"{_row_label(row)},{CONORM_LABELS[col]},{label},{v.value}")
        return "\n".join(lines) + "\n"
    header = ["T \\ S"] + [CONORM_LABELS[c] for c in CONORM_FAMILIES]
    table_rows = [header]
    for row in rows:
        table_rows.append([_row_label(row)] + [by_pos[(row, col)].render() for col in CONORM_FAMILIES])
    widths = [max(len(r[k]) for r in table_rows) for k in range(len(header))]
    out = []
    for r in table_rows:
        out.append(" | ".join(cell.ljust(widths[k]) for k, cell in enumerate(r)))
    out.insert(1, "-+-".join("-" * w for w in widths))
    return "\n".join(out) + "\n"


def _row_label(row: str) -> str:
    if row == WEAK_ROW:
        return "Weak decomposition"
    return NORM_LABELS[row]


def oracle_evidence_for_open_cells(
    lambda_samples: Sequence[float] = DEFAULT_LAMBDA_SAMPLES,
    samples: int = 12,
    seed: int = 0,
) -> List[str]:
    """What the sampling oracles would say about the open cells of the rule
    table.  Informational only: the open cells stay undetermined."""

    lines = []
    for (row, col), entries in REFERENCE_TABLE2.items():
        for label, verdict in entries:
            if verdict is not Table2Verdict.UNDETERMINED:
                continue
            lams = _samples_for(row, col, label, lambda_samples)
            T, S = _ops_for(row, col, lams[0])
            info = classify_rule(S, T, samples=samples, seed=seed)
            says = (info.oracle_verdict or info.verdict).value
            where = f"({_row_label(row)}, {CONORM_LABELS[col]})" + (
                f" [{label}]" if label else ""
            )
            lines.append(f"{where}: oracle says {says}")
    return sorted(lines)
