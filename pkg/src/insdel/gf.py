"""Finite fields GF(p^m), polynomials, dense linear algebra, and unit
groups of residue rings.

Field elements are canonical integer codes in [0, q-1]: the code read in
base p gives the coefficient vector of the element, lowest degree first.
The total order on codes drives every deterministic greedy choice in the
construction modules.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .errors import ContextMismatch, DomainError, NonUnitError, ScaleCapExceeded

SIZE_CAP = 2**20


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for n < 3.3e24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than n."""
    c = n + 1
    while not is_prime(c):
        c += 1
    return c


class FieldCtx:
    """Arithmetic context for GF(p^m).

    Elements are plain ints in [0, q-1]. For m > 1 the modulus is the
    lexicographically smallest monic irreducible of degree m over GF(p)
    (coefficient tuples low-to-high, compared as base-p integers), so the
    encoding is reproducible across runs.
    """

    def __init__(self, p: int, m: int, modulus: tuple[int, ...]):
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = modulus  # monic, length m+1, low-first; () when m == 1

    def __repr__(self) -> str:
        return f"GF({self.q})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldCtx)
            and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)
        )

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    # -- encoding ----------------------------------------------------

    def decode(self, code: int) -> tuple[int, ...]:
        """Base-p coefficient vector (length m, low-first) of a code."""
        v = []
        for _ in range(self.m):
            v.append(code % self.p)
            code //= self.p
        return tuple(v)

    def encode(self, coeffs) -> int:
        code = 0
        for c in reversed(tuple(coeffs)):
            code = code * self.p + c % self.p
        return code

    def check(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise DomainError(f"element code {a} out of range for {self}")
        return a

    # -- arithmetic --------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        return self.encode(
            (x + y) % self.p for x, y in zip(self.decode(a), self.decode(b))
        )

    def sub(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a - b) % self.p
        return self.encode(
            (x - y) % self.p for x, y in zip(self.decode(a), self.decode(b))
        )

    def neg(self, a: int) -> int:
        return self.sub(0, a)

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return a * b % self.p
        prod = _poly_mul_modp(self.decode(a), self.decode(b), self.p)
        return self.encode(_poly_mod_modp(prod, self.modulus, self.p))

    def inv(self, a: int) -> int:
        if a == 0:
            raise DomainError("zero has no inverse")
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        result = 1
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def elements(self):
        return range(self.q)


def _poly_mul_modp(a, b, p):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def _poly_mod_modp(a, mod, p):
    """Remainder of a by a monic modulus, coefficients mod p, low-first."""
    a = list(a)
    dm = len(mod) - 1
    while len(a) >= len(mod):
        lead = a[-1]
        if lead:
            shift = len(a) - len(mod)
            for i, c in enumerate(mod):
                a[shift + i] = (a[shift + i] - lead * c) % p
        a.pop()
    a += [0] * (dm - len(a))
    return a[:dm]


def _is_irreducible_modp(coeffs: tuple[int, ...], p: int) -> bool:
    """Trial division by all monic polynomials of degree <= deg/2."""
    deg = len(coeffs) - 1
    for x in range(p):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * x + c) % p
        if acc == 0:
            return False
    for d in range(2, deg // 2 + 1):
        for lower in itertools.product(range(p), repeat=d):
            divisor = list(lower) + [1]
            if not any(_poly_mod_modp(coeffs, divisor, p)):
                return False
    return True


@lru_cache(maxsize=None)
def field_make(p: int, m: int = 1) -> FieldCtx:
    """Build GF(p^m) with a deterministically chosen modulus."""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if m < 1:
        raise DomainError(f"extension degree must be >= 1, got {m}")
    if p**m > SIZE_CAP:
        raise ScaleCapExceeded(f"field size {p}^{m} exceeds cap {SIZE_CAP}")
    if m == 1:
        return FieldCtx(p, 1, ())
    for code in range(p**m):
        coeffs = []
        c = code
        for _ in range(m):
            coeffs.append(c % p)
            c //= p
        candidate = tuple(coeffs) + (1,)
        if _is_irreducible_modp(candidate, p):
            return FieldCtx(p, m, candidate)
    raise RuntimeError(f"no irreducible of degree {m} over GF({p})")  # unreachable


def field_from_size(q: int) -> FieldCtx:
    """GF(q) for a prime power q, factoring q as p^m."""
    if q < 2:
        raise DomainError(f"field size must be >= 2, got {q}")
    if is_prime(q):
        return field_make(q)
    p = 2
    while p * p <= q:
        if q % p == 0:
            m = 0
            t = q
            while t % p == 0:
                t //= p
                m += 1
            if t != 1:
                raise DomainError(f"{q} is not a prime power")
            return field_make(p, m)
        p += 1
    raise DomainError(f"{q} is not a prime power")  # unreachable for q >= 2


NEG_INF = float("-inf")


@dataclass(frozen=True)
class Polynomial:
    """Dense polynomial over one field context, low-degree-first coefficients,
    trailing zeros trimmed."""

    ctx: FieldCtx
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(self.coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        for c in coeffs:
            self.ctx.check(c)
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def _same_ctx(self, other: "Polynomial") -> None:
        if self.ctx != other.ctx:
            raise ContextMismatch("polynomials from different fields")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._same_ctx(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return Polynomial(self.ctx, tuple(self.ctx.add(x, y) for x, y in zip(a, b)))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._same_ctx(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return Polynomial(self.ctx, tuple(self.ctx.sub(x, y) for x, y in zip(a, b)))

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._same_ctx(other)
        if self.is_zero() or other.is_zero():
            return Polynomial(self.ctx, ())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        ctx = self.ctx
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] = ctx.add(out[i + j], ctx.mul(x, y))
        return Polynomial(ctx, tuple(out))

    def scale(self, c: int) -> "Polynomial":
        return Polynomial(self.ctx, tuple(self.ctx.mul(c, x) for x in self.coeffs))

    def __divmod__(self, other: "Polynomial"):
        self._same_ctx(other)
        if other.is_zero():
            raise DomainError("division by zero polynomial")
        ctx = self.ctx
        rem = list(self.coeffs)
        quo = [0] * max(len(rem) - len(other.coeffs) + 1, 0)
        inv_lead = ctx.inv(other.coeffs[-1])
        while len(rem) >= len(other.coeffs) and any(rem):
            if rem[-1] == 0:
                rem.pop()
                continue
            shift = len(rem) - len(other.coeffs)
            factor = ctx.mul(rem[-1], inv_lead)
            quo[shift] = factor
            for i, c in enumerate(other.coeffs):
                rem[shift + i] = ctx.sub(rem[shift + i], ctx.mul(factor, c))
            rem.pop()
        return Polynomial(ctx, tuple(quo)), Polynomial(ctx, tuple(rem))

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    def __call__(self, x: int) -> int:
        acc = 0
        ctx = self.ctx
        for c in reversed(self.coeffs):
            acc = ctx.add(ctx.mul(acc, x), c)
        return acc


def poly_eval(f: Polynomial, x: int) -> int:
    """Horner evaluation of f at the element with code x."""
    return f(x)


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd by the Euclidean algorithm."""
    while not b.is_zero():
        a, b = b, a % b
    if a.is_zero():
        return a
    return a.scale(a.ctx.inv(a.coeffs[-1]))


@dataclass(frozen=True)
class Matrix:
    """Dense row-major matrix over one field context."""

    ctx: FieldCtx
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        entries = tuple(self.entries)
        if len(entries) != self.rows * self.cols:
            raise DomainError(
                f"expected {self.rows * self.cols} entries, got {len(entries)}"
            )
        for e in entries:
            self.ctx.check(e)
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, ctx: FieldCtx, rows) -> "Matrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        return cls(ctx, len(rows), ncols, tuple(e for r in rows for e in r))

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "Matrix":
        cols = [
            tuple(self.entries[r * self.cols + c] for r in range(self.rows))
            for c in range(self.cols)
        ]
        return Matrix.from_rows(self.ctx, cols)

    def __mul__(self, other: "Matrix") -> "Matrix":
        if self.ctx != other.ctx:
            raise ContextMismatch("matrices from different fields")
        if self.cols != other.rows:
            raise DomainError("dimension mismatch in matrix product")
        ctx = self.ctx
        out = []
        for i in range(self.rows):
            ri = self.row(i)
            out_row = []
            for j in range(other.cols):
                acc = 0
                for t in range(self.cols):
                    acc = ctx.add(acc, ctx.mul(ri[t], other.entries[t * other.cols + j]))
                out_row.append(acc)
            out.append(out_row)
        return Matrix.from_rows(ctx, out)


def det(m: Matrix) -> int:
    """Determinant via Gaussian elimination; exact over the field."""
    if m.rows != m.cols:
        raise DomainError("determinant of a non-square matrix")
    ctx = m.ctx
    a = m.to_rows()
    n = m.rows
    result = 1
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            result = ctx.neg(result)
        p = a[col][col]
        result = ctx.mul(result, p)
        pinv = ctx.inv(p)
        for r in range(col + 1, n):
            if a[r][col]:
                factor = ctx.mul(a[r][col], pinv)
                for c in range(col, n):
                    a[r][c] = ctx.sub(a[r][c], ctx.mul(factor, a[col][c]))
    return result


def _rref(rows, ctx):
    """In-place reduced row echelon form; returns pivot column list."""
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, nrows) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pinv = ctx.inv(rows[r][col])
        rows[r] = [ctx.mul(pinv, e) for e in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [
                    ctx.sub(e, ctx.mul(f, pe)) for e, pe in zip(rows[i], rows[r])
                ]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    return pivots


def nullspace(m: Matrix) -> list[tuple[int, ...]]:
    """Basis of the left nullspace {x : xM = 0}, reduced echelon form.

    Pivots are chosen deterministically (leftmost nonzero column, first
    qualifying row), so the basis is reproducible.
    """
    ctx = m.ctx
    # xM = 0  <=>  M^T x^T = 0: solve the right nullspace of the transpose.
    t = m.transpose().to_rows()
    nvars = m.rows
    if not t:
        t = []
    pivots = _rref(t, ctx)
    free = [c for c in range(nvars) if c not in pivots]
    basis = []
    for fc in free:
        vec = [0] * nvars
        vec[fc] = 1
        for r, pc in enumerate(pivots):
            if r < len(t):
                vec[pc] = ctx.neg(t[r][fc])
        basis.append(tuple(vec))
    return basis


def unit_group_size(r: int, delta: int) -> int:
    """Order of the unit group of F_r[x] modulo a degree-(delta-1) power of
    a linear factor."""
    if delta < 2:
        raise DomainError(f"delta must be >= 2, got {delta}")
    return r ** (delta - 2) * (r - 1)


@dataclass(frozen=True)
class ResidueCtx:
    """Residue ring F[x]/(modulus) with a canonical integer encoding of
    representatives (base-q coefficient vector, low degree first)."""

    field: FieldCtx
    modulus: Polynomial

    def __post_init__(self) -> None:
        if self.modulus.ctx != self.field:
            raise ContextMismatch("modulus from a different field")
        if self.modulus.degree < 1:
            raise DomainError("modulus must have degree >= 1")

    @classmethod
    def linear_power(cls, field: FieldCtx, alpha: int, delta: int) -> "ResidueCtx":
        """Ring modulo (x - alpha)^(delta-1)."""
        if delta < 2:
            raise DomainError(f"delta must be >= 2, got {delta}")
        field.check(alpha)
        lin = Polynomial(field, (field.neg(alpha), 1))
        mod = Polynomial(field, (1,))
        for _ in range(delta - 1):
            mod = mod * lin
        return cls(field, mod)

    @property
    def degree(self) -> int:
        return int(self.modulus.degree)

    def encode(self, coeffs: tuple[int, ...]) -> int:
        code = 0
        for c in reversed(coeffs):
            code = code * self.field.q + c
        return code

    def reduce(self, g: Polynomial) -> "UnitResidue":
        """Canonical unit representative of g; rejects non-units."""
        if g.ctx != self.field:
            raise ContextMismatch("polynomial from a different field")
        rep = g % self.modulus
        if not poly_gcd(rep, self.modulus).coeffs == (1,):
            raise NonUnitError(f"{g.coeffs} shares a factor with the modulus")
        coeffs = rep.coeffs + (0,) * (self.degree - len(rep.coeffs))
        return UnitResidue(self, coeffs)

    def one(self) -> "UnitResidue":
        return self.reduce(Polynomial(self.field, (1,)))

    def units(self):
        """All units, ascending canonical code. Exhaustive; desk scale only."""
        q = self.field.q
        for code in range(q**self.degree):
            coeffs = []
            c = code
            for _ in range(self.degree):
                coeffs.append(c % q)
                c //= q
            poly = Polynomial(self.field, tuple(coeffs))
            if poly_gcd(poly, self.modulus).coeffs == (1,):
                yield UnitResidue(self, tuple(coeffs))


@dataclass(frozen=True)
class UnitResidue:
    """A unit of a residue ring, stored as its reduced representative."""

    rctx: ResidueCtx
    coeffs: tuple[int, ...]  # fixed length = modulus degree, low-first

    @property
    def code(self) -> int:
        return self.rctx.encode(self.coeffs)

    def __mul__(self, other: "UnitResidue") -> "UnitResidue":
        if self.rctx != other.rctx:
            raise ContextMismatch("residues from different rings")
        a = Polynomial(self.rctx.field, self.coeffs)
        b = Polynomial(self.rctx.field, other.coeffs)
        rep = (a * b) % self.rctx.modulus
        coeffs = rep.coeffs + (0,) * (self.rctx.degree - len(rep.coeffs))
        return UnitResidue(self.rctx, coeffs)

    def __pow__(self, e: int) -> "UnitResidue":
        if e < 0:
            raise DomainError("negative powers not needed; invert explicitly")
        result = self.rctx.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result


def unit_reduce(g: Polynomial, rctx: ResidueCtx) -> UnitResidue:
    return rctx.reduce(g)
