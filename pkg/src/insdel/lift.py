"""Lift constant-weight L1 codes to insdel codes via the sorted-word map."""

from __future__ import annotations

import math
import os

from .errors import DomainError
from .words import CWL1, INSDEL, Code, code_min_distance, psi

DEFAULT_PAIR_CAP = 10**7
PAIR_CAP_ENV = "INSDEL_MAX_PAIRS"


def pair_cap() -> int:
    raw = os.environ.get(PAIR_CAP_ENV)
    return int(raw) if raw else DEFAULT_PAIR_CAP


def lift(code: Code, max_pairs: int | None = None) -> tuple[Code, dict]:
    """Apply the sorted-word map memberwise.

    The map is injective and distance-preserving (L1 in, insdel out), so
    the lifted code inherits the source's minimum distance. The inherited
    distance is re-verified by an exhaustive pairwise sweep whenever the
    pair count fits the cap; otherwise the report flags it as inherited
    but unverified.
    """
    if code.kind != CWL1:
        raise DomainError("lift expects a CWL1 code")
    cap = pair_cap() if max_pairs is None else max_pairs
    lifted = Code(code.q, code.n, tuple(psi(a) for a in code.members), kind=INSDEL)
    npairs = len(lifted) * (len(lifted) - 1) // 2
    report: dict = {"size": len(lifted), "pairs": npairs}
    if len(lifted) >= 2 and npairs <= cap:
        d, witness = code_min_distance(lifted, INSDEL)
        report["min_insdel"] = d
        report["witness"] = [list(w.symbols) for w in witness]
        report["verified"] = True
    else:
        report["min_insdel"] = None
        report["verified"] = False
        report["note"] = "inherited, unverified"
    return lifted, report


def guarantee_report(q: int, n: int, delta: int) -> dict:
    """Size guarantee of the lifted construction against the insdel
    Singleton ceiling, exact big-integer arithmetic throughout."""
    if q < 2 or delta < 2 or n < delta:
        raise DomainError(f"need q >= 2 and n >= delta >= 2, got q={q} n={n} delta={delta}")
    total = math.comb(n + q - 1, n)
    denom = (2 * q + 2) ** (delta - 2) * (2 * q + 1)
    guarantee = -(-total // denom)
    ceiling = q ** (n - delta + 1)
    return {
        "q": q,
        "n": n,
        "delta": delta,
        "guaranteed_size": guarantee,
        "singleton_ceiling": ceiling,
        "log_q_guarantee": math.log(guarantee, q) if guarantee > 0 else None,
        "singleton_exponent": n - delta + 1,
    }
