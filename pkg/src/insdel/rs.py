"""Reed-Solomon codes under the insdel metric.

Covers encoding, the affine-map criterion deciding whether a dimension-2
code reaches insdel distance 2n-4, a greedy evaluation-vector construction
that always satisfies the criterion once the field is large enough, and a
certificate algorithm exhibiting two codewords at insdel distance at most
2n-4k+4 for every dimension k >= 3 of sufficient length.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import DomainError, ScaleCapExceeded
from .gf import FieldCtx, Matrix, Polynomial, det, field_make, next_prime, nullspace
from .words import lcs_length_raw

EXHAUSTIVE_CAP = 10**4  # max q^k codewords for the exhaustive sweep

ALL_FIXED = "all"


@dataclass(frozen=True)
class RsCode:
    """Evaluations of all polynomials of degree < k at n distinct points."""

    ctx: FieldCtx
    alphas: tuple[int, ...]
    k: int

    def __post_init__(self) -> None:
        alphas = tuple(self.ctx.check(a) for a in self.alphas)
        object.__setattr__(self, "alphas", alphas)
        if len(set(alphas)) != len(alphas):
            raise DomainError("evaluation points must be pairwise distinct")
        if not 1 <= self.k <= len(alphas):
            raise DomainError(f"need 1 <= k <= n, got k={self.k}, n={len(alphas)}")

    @property
    def n(self) -> int:
        return len(self.alphas)


def rs_encode(code: RsCode, f: Polynomial) -> tuple[int, ...]:
    """Codeword of a message polynomial: evaluations at the alpha vector."""
    if f.ctx != code.ctx:
        raise DomainError("message polynomial from a different field")
    if f.degree >= code.k:
        raise DomainError(f"message degree {f.degree} not below k={code.k}")
    return tuple(f(a) for a in code.alphas)


def _encode_coeffs(ctx: FieldCtx, alphas, coeffs) -> tuple[int, ...]:
    out = []
    for a in alphas:
        acc = 0
        for c in reversed(coeffs):
            acc = ctx.add(ctx.mul(acc, a), c)
        out.append(acc)
    return tuple(out)


@dataclass(frozen=True)
class AffineMap:
    """The map x -> ax + b with a != 0; acts on the point at alpha by
    alpha -> a^(-1)(alpha - b)."""

    ctx: FieldCtx
    a: int
    b: int

    def __post_init__(self) -> None:
        self.ctx.check(self.a)
        self.ctx.check(self.b)
        if self.a == 0:
            raise DomainError("affine map needs a != 0")

    def is_identity(self) -> bool:
        return self.a == 1 and self.b == 0

    def apply_polynomial(self, f: Polynomial) -> Polynomial:
        """Substitute ax + b for x in f."""
        ctx = self.ctx
        lin = Polynomial(ctx, (self.b, self.a))
        acc = Polynomial(ctx, ())
        for c in reversed(f.coeffs):
            acc = acc * lin + Polynomial(ctx, (c,))
        return acc


def affine_apply(s: AffineMap, alpha: int) -> int:
    """Action on evaluation points: the inverse image of the substitution."""
    ctx = s.ctx
    return ctx.mul(ctx.inv(s.a), ctx.sub(alpha, s.b))


def affine_through(ctx: FieldCtx, src: tuple[int, int], dst: tuple[int, int]) -> AffineMap:
    """The unique map sending the two source points to the two destination
    points, from the 2x2 linear system b1*a + b = a1, b2*a + b = a2."""
    a1, a2 = src
    b1, b2 = dst
    if a1 == a2:
        raise DomainError("source points must be distinct")
    if b1 == b2:
        raise DomainError("destination points must be distinct")
    a = ctx.div(ctx.sub(a1, a2), ctx.sub(b1, b2))
    b = ctx.sub(a1, ctx.mul(b1, a))
    return AffineMap(ctx, a, b)


def affine_fixed_points(s: AffineMap):
    """Fixed evaluation points: "all" for the identity, else at most one."""
    if s.is_identity():
        return ALL_FIXED
    ctx = s.ctx
    if s.a == 1:
        return frozenset()
    return frozenset({ctx.div(s.b, ctx.sub(1, s.a))})


def _triples_with_gap(n: int):
    """Ordered pairs of increasing index triples differing in >= 2 slots."""
    triples = list(itertools.combinations(range(n), 3))
    for i in triples:
        for j in triples:
            if sum(1 for x, y in zip(i, j) if x != y) >= 2:
                yield i, j


def check_rs2_criterion(code: RsCode):
    """Decide whether a dimension-2 code reaches insdel distance 2n-4.

    Only the affine map matching the first two coordinates of a triple pair
    can carry one triple onto the other (the map is determined by two point
    images), so scanning ordered triple pairs suffices. On failure the
    witness (i, j, map) converts to two codewords sharing a length-3
    subsequence.
    """
    if code.k != 2:
        raise DomainError(f"criterion applies to k=2, got k={code.k}")
    if code.n < 3:
        raise DomainError(f"criterion needs n >= 3, got n={code.n}")
    ctx = code.ctx
    alphas = code.alphas
    for i, j in _triples_with_gap(code.n):
        src = (alphas[i[0]], alphas[i[1]])
        dst = (alphas[j[0]], alphas[j[1]])
        sigma = affine_through(ctx, src, dst)
        if affine_apply(sigma, alphas[i[2]]) == alphas[j[2]]:
            return False, (i, j, sigma)
    return True, None


def rs2_field_threshold(n: int) -> int:
    """Field sizes above n(n-1)^2(n-2)^2/4 guarantee the greedy
    construction succeeds."""
    if n < 4:
        raise DomainError(f"need n >= 4, got {n}")
    return n * (n - 1) ** 2 * (n - 2) ** 2 // 4


def construct_rs2(n: int, ctx: FieldCtx | None = None) -> RsCode:
    """Greedy evaluation vector for a distance-(2n-4) dimension-2 code.

    Starts from the three smallest field elements and, at each step, takes
    the smallest element avoiding every image and fixed point of the maps
    determined by pairs of already-chosen points. The full criterion is
    re-checked afterwards and a failure is an internal error, not a data
    condition.
    """
    threshold = rs2_field_threshold(n)
    if ctx is None:
        ctx = field_make(next_prime(threshold))
    if ctx.q <= threshold:
        raise DomainError(
            f"field size {ctx.q} does not exceed the threshold {threshold} for n={n}"
        )
    alphas: list[int] = [0, 1, 2]
    for _ in range(3, n):
        forbidden = set(alphas)
        m = len(alphas)
        for (i, j) in itertools.combinations(range(m), 2):
            for (k, l) in itertools.combinations(range(m), 2):
                sigma = affine_through(
                    ctx, (alphas[i], alphas[j]), (alphas[k], alphas[l])
                )
                for t in range(m):
                    forbidden.add(affine_apply(sigma, alphas[t]))
                fixed = affine_fixed_points(sigma)
                if fixed is not ALL_FIXED:
                    forbidden.update(fixed)
        candidate = next(c for c in range(ctx.q) if c not in forbidden)
        alphas.append(candidate)
    code = RsCode(ctx, tuple(alphas), 2)
    ok, witness = check_rs2_criterion(code)
    if not ok:
        raise RuntimeError(f"greedy vector failed the criterion: {witness}")
    return code


def _all_messages(ctx: FieldCtx, k: int):
    for coeffs in itertools.product(range(ctx.q), repeat=k):
        yield coeffs


def rs_exhaustive_insdel(code: RsCode, cap: int = EXHAUSTIVE_CAP):
    """Exact minimum insdel distance over all distinct codeword pairs."""
    count = code.ctx.q**code.k
    if count > cap:
        raise ScaleCapExceeded(f"{count} codewords exceed the sweep cap {cap}")
    ctx = code.ctx
    words = [
        _encode_coeffs(ctx, code.alphas, coeffs)
        for coeffs in _all_messages(ctx, code.k)
    ]
    n2 = 2 * code.n
    best = None
    witness = None
    for idx, u in enumerate(words):
        for v in words[idx + 1 :]:
            d = n2 - 2 * lcs_length_raw(u, v)
            if best is None or d < best:
                best, witness = d, (u, v)
                if best == 0:
                    return best, witness
    return best, witness


def invertible_difference_indices(code: RsCode, k: int):
    """Two strictly increasing index vectors of length k-1 whose power
    difference matrix is invertible, built inductively.

    The base for k=3 is i=(2,3), j=(0,2) in 0-based indexing. Each step
    appends j_new = j_last + 1 and the smallest admissible i_new at which
    the bordered determinant polynomial does not vanish; the determinant
    polynomial is expanded once along its last column and then evaluated
    per candidate.
    """
    if k < 3:
        raise DomainError(f"need k >= 3, got {k}")
    need = k * (k + 1) // 2 - 2
    if code.n < need:
        raise DomainError(f"need n >= {need} for k={k}, got n={code.n}")
    ctx = code.ctx
    alphas = code.alphas
    ii = [2, 3]
    jj = [0, 2]
    for dim in range(3, k):
        # Extend from dimension `dim` to `dim + 1`.
        rows = dim  # bordered matrix is dim x dim
        j_new = jj[-1] + 1
        cof = _last_column_cofactors(ctx, alphas, ii, jj, rows)
        aj = alphas[j_new]
        const = 0
        for s in range(1, rows + 1):
            const = ctx.sub(const, ctx.mul(cof[s - 1], ctx.pow(aj, s)))
        limit = (dim + 1) * (dim + 2) // 2 - 2  # 1-based bound on i_new
        chosen = None
        for cand in range(ii[-1] + 1, limit):  # 0-based: cand <= limit - 1
            x = alphas[cand]
            val = const
            for s in range(1, rows + 1):
                val = ctx.add(val, ctx.mul(cof[s - 1], ctx.pow(x, s)))
            if val != 0:
                chosen = cand
                break
        if chosen is None:
            raise RuntimeError("no admissible index; counting argument violated")
        ii.append(chosen)
        jj.append(j_new)
    m = _difference_matrix(ctx, alphas, ii, jj)
    if det(m) == 0:
        raise RuntimeError("difference matrix unexpectedly singular")
    return tuple(ii), tuple(jj)


def _difference_matrix(ctx, alphas, ii, jj) -> Matrix:
    size = len(ii)
    rows = []
    for s in range(1, size + 1):
        rows.append(
            [
                ctx.sub(ctx.pow(alphas[ic], s), ctx.pow(alphas[jc], s))
                for ic, jc in zip(ii, jj)
            ]
        )
    return Matrix.from_rows(ctx, rows)


def _last_column_cofactors(ctx, alphas, ii, jj, rows):
    """Signed minors along the last column of the bordered matrix.

    Column c < rows-1 holds alpha_i^s - alpha_j^s for s = 1..rows; the
    cofactor of row s is (-1)^(s + rows) times the minor omitting row s.
    """
    base = []
    for s in range(1, rows + 1):
        base.append(
            [
                ctx.sub(ctx.pow(alphas[ic], s), ctx.pow(alphas[jc], s))
                for ic, jc in zip(ii, jj)
            ]
        )
    cofactors = []
    for s in range(rows):
        minor_rows = [base[r] for r in range(rows) if r != s]
        minor = Matrix.from_rows(ctx, minor_rows) if minor_rows else None
        d = det(minor) if minor is not None else 1
        if (s + rows + 1) % 2 == 1:  # (-1)^((s+1) + rows)
            d = ctx.neg(d)
        cofactors.append(d)
    return cofactors


def low_distance_witness(code: RsCode, k: int | None = None) -> dict:
    """Two distinct degree-(<k) messages whose codewords share a length
    2k-2 common subsequence, certifying insdel distance <= 2n-4k+4.

    The index vectors from the inductive construction are extended by the
    smallest fresh increasing indices, a left-nullspace vector of the tall
    evaluation matrix supplies the coefficients, and the certificate is
    re-verified by direct evaluation and an LCS computation.
    """
    if k is None:
        k = code.k
    if k < 3:
        raise DomainError(f"need k >= 3, got {k}")
    need = k * (k + 1) // 2 + k - 3
    if code.n < need:
        raise DomainError(f"need n >= {need} for k={k}, got n={code.n}")
    ctx = code.ctx
    alphas = code.alphas
    ii, jj = invertible_difference_indices(code, k)
    ii = list(ii) + list(range(ii[-1] + 1, ii[-1] + k))
    jj = list(jj) + list(range(jj[-1] + 1, jj[-1] + k))
    if ii[-1] >= code.n or jj[-1] >= code.n:
        raise RuntimeError("index extension ran past the code length")
    # (2k-1) x (2k-2) evaluation matrix: all-ones row, then powers at the
    # i-indices, then powers at the j-indices.
    rows = [[1] * (2 * k - 2)]
    for s in range(1, k):
        rows.append([ctx.pow(alphas[c], s) for c in ii])
    for s in range(1, k):
        rows.append([ctx.pow(alphas[c], s) for c in jj])
    a_matrix = Matrix.from_rows(ctx, rows)
    basis = nullspace(a_matrix)
    if not basis:
        raise RuntimeError("left nullspace unexpectedly trivial")
    vec = next((v for v in basis if v[0] != 0), None)
    if vec is None:
        vec = basis[0]  # leading coordinate zero: the difference-matrix
        # invertibility argument still guarantees f != g below.
    a0 = vec[0]
    a_coeffs = (a0,) + tuple(vec[1:k])
    b_coeffs = vec[k : 2 * k - 1]
    f = Polynomial(ctx, a_coeffs)
    g = Polynomial(ctx, (0,) + tuple(ctx.neg(b) for b in b_coeffs))
    if f.coeffs == g.coeffs:
        raise RuntimeError("certificate polynomials collapsed")
    for ic, jc in zip(ii, jj):
        if f(alphas[ic]) != g(alphas[jc]):
            raise RuntimeError("certificate equalities failed")
    cf = rs_encode(RsCode(ctx, alphas, k), f)
    cg = rs_encode(RsCode(ctx, alphas, k), g)
    lcs = lcs_length_raw(cf, cg)
    if lcs < 2 * k - 2:
        raise RuntimeError("certificate LCS shorter than promised")
    return {
        "f": f.coeffs,
        "g": g.coeffs,
        "i": tuple(ii),
        "j": tuple(jj),
        "lcs_lower_bound": lcs,
        "distance_upper_bound": 2 * code.n - 4 * k + 4,
        "codeword_f": cf,
        "codeword_g": cg,
    }
