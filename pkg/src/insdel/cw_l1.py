"""Constant-weight L1 codes by residue bucketing.

Compositions of weight n over q bins are mapped to units of
F_r[x]/((x-alpha)^(delta-1)) via the product of (x-alpha_i)^(a_i); any two
compositions in the same fiber are at L1 distance >= 2*delta, so the
largest bucket is a constant-weight L1 code with a pigeonhole size
guarantee.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DomainError, ScaleCapExceeded
from .gf import (
    FieldCtx,
    Polynomial,
    ResidueCtx,
    UnitResidue,
    _is_irreducible_modp,
    field_make,
    is_prime,
    unit_group_size,
)
from .words import CWL1, Code, Composition, compositions_colex, l1_distance

ENUMERATION_CAP = 10**7


def smallest_construction_prime(q: int) -> int:
    """Smallest prime in [q+1, 2(q+1)]; one always exists by Bertrand."""
    for r in range(q + 1, 2 * (q + 1) + 1):
        if is_prime(r):
            return r
    raise RuntimeError(f"no prime in [{q + 1}, {2 * (q + 1)}]")  # unreachable


@dataclass(frozen=True)
class L1ConstructionSpec:
    """Parameters of one bucketing run.

    With the defaults, alpha = 0 and the bucketing points alpha_i are the q
    smallest nonzero elements of F_r; any valid assignment yields the same
    guarantees, fixing one makes output reproducible.
    """

    q: int
    n: int
    delta: int
    r: int = 0  # 0 = auto: smallest prime in [q+1, 2(q+1)]
    alpha: int = 0
    alphas: tuple[int, ...] = field(default=())
    # Expert option: a monic irreducible modulus of degree delta-1 over F_r
    # (low-first coefficient codes). Permits r = q; needs delta >= 3.
    irreducible_modulus: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if self.q < 2:
            raise DomainError(f"q must be >= 2, got {self.q}")
        if self.delta < 2:
            raise DomainError(f"delta must be >= 2, got {self.delta}")
        if self.n < self.delta:
            raise DomainError(f"need n >= delta, got n={self.n}, delta={self.delta}")
        if self.irreducible_modulus is not None:
            if self.delta < 3:
                raise DomainError("an irreducible modulus needs delta >= 3")
            r = self.r or smallest_construction_prime(self.q - 1)
            object.__setattr__(self, "r", r)
            if r < self.q:
                raise DomainError(f"need r >= q = {self.q}, got {r}")
        else:
            r = self.r or smallest_construction_prime(self.q)
            object.__setattr__(self, "r", r)
            if r < self.q + 1:
                raise DomainError(f"need r >= q+1 = {self.q + 1}, got {r}")
        if not is_prime(r):
            raise DomainError(f"r must be prime, got {r}")
        if not 0 <= self.alpha < r:
            raise DomainError(f"alpha {self.alpha} not in F_{r}")
        if self.irreducible_modulus is not None:
            alphas = self.alphas or tuple(range(r))[: self.q]
        else:
            alphas = self.alphas or tuple(
                a for a in range(r) if a != self.alpha
            )[: self.q]
        object.__setattr__(self, "alphas", tuple(alphas))
        if len(self.alphas) != self.q:
            raise DomainError(f"need {self.q} bucketing points, got {len(self.alphas)}")
        seen = set(self.alphas)
        if len(seen) != self.q:
            raise DomainError("the alpha_i must be pairwise distinct")
        if self.irreducible_modulus is None and self.alpha in seen:
            raise DomainError("alpha must differ from every alpha_i")
        for a in self.alphas:
            if not 0 <= a < r:
                raise DomainError(f"alpha_i {a} not in F_{r}")
        # Validate the expert modulus eagerly so bad input fails here.
        if self.irreducible_modulus is not None:
            self.residue_ctx()

    def field_ctx(self) -> FieldCtx:
        return field_make(self.r)

    def residue_ctx(self) -> ResidueCtx:
        fctx = self.field_ctx()
        if self.irreducible_modulus is None:
            return ResidueCtx.linear_power(fctx, self.alpha, self.delta)
        mod = Polynomial(fctx, self.irreducible_modulus)
        if mod.degree != self.delta - 1 or mod.coeffs[-1] != 1:
            raise DomainError(
                f"modulus must be monic of degree {self.delta - 1}"
            )
        if not _is_irreducible_modp(mod.coeffs, self.r):
            raise DomainError("modulus is reducible over F_r")
        return ResidueCtx(fctx, mod)

    def unit_count(self) -> int:
        if self.irreducible_modulus is None:
            return unit_group_size(self.r, self.delta)
        # Irreducible modulus of degree delta-1: the ring is a field.
        return self.r ** (self.delta - 1) - 1

    def guaranteed_lower_bound(self) -> int:
        """Pigeonhole floor on the largest bucket size, rounded up."""
        total = math.comb(self.n + self.q - 1, self.n)
        return -(-total // self.unit_count())


def pi_map(a: Composition, spec: L1ConstructionSpec) -> UnitResidue:
    """Residue of prod_i (x - alpha_i)^(a_i); a unit since no alpha_i
    equals alpha."""
    if a.q != spec.q or a.weight != spec.n:
        raise DomainError(f"composition {a.counts} does not match the construction parameters")
    rctx = spec.residue_ctx()
    fctx = spec.field_ctx()
    result = rctx.one()
    for ai, count in zip(spec.alphas, a.counts):
        if count:
            lin = rctx.reduce(Polynomial(fctx, (fctx.neg(ai), 1)))
            result = result * lin**count
    return result


def construct_l1(spec: L1ConstructionSpec) -> tuple[Code, dict]:
    """Bucket the whole composition space and keep the largest fiber.

    Ties go to the bucket whose unit has the smallest canonical encoding.
    The report carries the exhaustively verified minimum L1 distance next
    to the pigeonhole guarantee.
    """
    total = math.comb(spec.n + spec.q - 1, spec.n)
    if total > ENUMERATION_CAP:
        raise ScaleCapExceeded(
            f"{total} compositions exceed the enumeration cap {ENUMERATION_CAP}"
        )
    rctx = spec.residue_ctx()
    fctx = spec.field_ctx()
    # Residues of the q linear factors, reused across the whole sweep.
    factors = [
        rctx.reduce(Polynomial(fctx, (fctx.neg(ai), 1))) for ai in spec.alphas
    ]
    buckets: dict[int, list[Composition]] = {}
    for comp in compositions_colex(spec.n, spec.q):
        res = rctx.one()
        for f, count in zip(factors, comp.counts):
            if count:
                res = res * f**count
        buckets.setdefault(res.code, []).append(comp)
    best_code = min(
        buckets, key=lambda c: (-len(buckets[c]), c)
    )
    members = tuple(buckets[best_code])
    code = Code(spec.q, spec.n, members, kind=CWL1)
    if len(members) >= 2:
        verified_min, _ = _min_l1(members)
    else:
        verified_min = None
    report = {
        "q": spec.q,
        "n": spec.n,
        "delta": spec.delta,
        "r": spec.r,
        "bucket_unit": best_code,
        "size": len(members),
        "guaranteed_lower_bound": spec.guaranteed_lower_bound(),
        "verified_min_l1": verified_min,
    }
    return code, report


def _min_l1(members):
    best = None
    witness = None
    ordered = sorted(members)
    for i, u in enumerate(ordered):
        for v in ordered[i + 1 :]:
            d = l1_distance(u, v)
            if best is None or d < best:
                best, witness = d, (u, v)
    return best, witness


def verify_l1_code(code: Code, delta: int):
    """True iff all members share one weight and every pair is at L1
    distance >= 2*delta; returns a violating pair otherwise."""
    if code.kind != CWL1:
        raise DomainError("expected a CWL1 code")
    if len(code) < 2:
        return True, None
    best, witness = _min_l1(code.members)
    if best < 2 * delta:
        return False, witness
    return True, None
