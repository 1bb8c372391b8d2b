"""Three-valued verdicts for numerically checked universal claims.

Properties quantified over all of [0,1] cannot be decided exhaustively by
evaluation, so every checker in this package reports one of three outcomes:
the claim provably holds, it provably fails (with a witness that reproduces
the failure), or it survived a finite sample without being certified.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple


class Verdict(Enum):
    HOLDS = "holds"
    FAILS = "fails"
    UNKNOWN_SAMPLED = "unknown-sampled"


@dataclass(frozen=True)
class TriState:
    """Outcome of a universally quantified check.

    A FAILS verdict always carries a witness; re-evaluating the checked
    property at the witness reproduces the failure.
    """

    verdict: Verdict
    witness: Optional[Tuple[float, ...]] = None
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.verdict is not Verdict.FAILS

    def __str__(self) -> str:
        if self.verdict is Verdict.FAILS:
            parts = [f"FAILS witness={self.witness}"]
            if self.detail:
                parts.append(self.detail)
            return " -- ".join(parts)
        name = "HOLDS" if self.verdict is Verdict.HOLDS else "UNKNOWN (sampled)"
        return f"{name}" + (f" -- {self.detail}" if self.detail else "")


def holds(detail: str = "") -> TriState:
    return TriState(Verdict.HOLDS, None, detail)


def fails(witness: Tuple[float, ...], detail: str = "") -> TriState:
    if witness is None:
        raise ValueError("a failing verdict requires a witness")
    return TriState(Verdict.FAILS, tuple(float(v) for v in witness), detail)


def unknown(detail: str = "") -> TriState:
    return TriState(Verdict.UNKNOWN_SAMPLED, None, detail)
