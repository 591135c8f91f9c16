"""Exact Chow-ring arithmetic for the Grassmannian G(k, n).

Classes are stored in the Schubert basis: a map from partitions fitting in
the k x (n-k) box to arbitrary-precision integers.  Products are computed
through the universal Littlewood-Richardson expansion, discarding partitions
that leave the box.  On top of the ring the module provides the Chern
classes of the universal bundles, Chern classes of their m-fold (dualized)
direct sums, the total Chern class of the tangent bundle via the splitting
principle, the degree map, and the matrix of degrees of tangent-twisted
products of those Chern classes that drives the characteristic-class
formulas downstream.

Everything is a pure function of immutable values; the module-level caches
(LR expansions, universal tensor polynomials) are deterministic and safe to
repopulate idempotently from concurrent callers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .errors import BoxSizeError, ParameterError
from .partitions import Partition, fits_in, lr_expansion, normalize

# Desk-scale guardrail against accidental combinatorial blowup; override via
# set_box_cell_limit (library) or --max-box (CLI).
DEFAULT_BOX_CELL_LIMIT = 36
_box_cell_limit = DEFAULT_BOX_CELL_LIMIT


def set_box_cell_limit(cells: int) -> int:
    """Set the maximum allowed rows*cols for a Box; returns the old limit."""
    global _box_cell_limit
    old = _box_cell_limit
    _box_cell_limit = int(cells)
    return old


@dataclass(frozen=True)
class Box:
    """The k x (n-k) rectangle indexing the Schubert basis of G(k, n)."""

    rows: int
    cols: int

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ParameterError(f"box sides must be positive, got {self.rows}x{self.cols}")
        if self.rows * self.cols > _box_cell_limit:
            raise BoxSizeError(
                f"box {self.rows}x{self.cols} exceeds the cell limit "
                f"{_box_cell_limit}; raise it with set_box_cell_limit()"
            )

    @property
    def dim(self) -> int:
        return self.rows * self.cols

    @property
    def full(self) -> Partition:
        """Partition of the point class (the full rectangle)."""
        return (self.cols,) * self.rows

    def fits(self, lam: Partition) -> bool:
        return fits_in(lam, self.rows, self.cols)


class ChowClass:
    """Integer combination of Schubert classes in a fixed box."""

    __slots__ = ("box", "terms")

    def __init__(self, box: Box, terms: dict[Partition, int] | None = None):
        self.box = box
        clean: dict[Partition, int] = {}
        if terms:
            for lam, c in terms.items():
                if c == 0:
                    continue
                lam = normalize(lam)
                if not box.fits(lam):
                    raise ValueError(f"partition {lam} does not fit in {box.rows}x{box.cols}")
                clean[lam] = clean.get(lam, 0) + c
        self.terms = clean

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, lam) -> int:
        return self.terms.get(normalize(lam), 0)

    def graded_piece(self, d: int) -> "ChowClass":
        return ChowClass(self.box, {lam: c for lam, c in self.terms.items() if sum(lam) == d})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ChowClass)
            and self.box == other.box
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.box, tuple(sorted(self.terms.items()))))

    def __add__(self, other: "ChowClass") -> "ChowClass":
        self._check_box(other)
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out.get(lam, 0) + c
        return ChowClass(self.box, out)

    def __neg__(self) -> "ChowClass":
        return ChowClass(self.box, {lam: -c for lam, c in self.terms.items()})

    def __sub__(self, other: "ChowClass") -> "ChowClass":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return ChowClass(self.box, {lam: c * other for lam, c in self.terms.items()})
        self._check_box(other)
        out: dict[Partition, int] = {}
        rows, cols = self.box.rows, self.box.cols
        for lam, ca in self.terms.items():
            for mu, cb in other.terms.items():
                for nu, lr in lr_expansion(lam, mu).items():
                    if fits_in(nu, rows, cols):
                        out[nu] = out.get(nu, 0) + ca * cb * lr
        return ChowClass(self.box, out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for lam in sorted(self.terms):
            c = self.terms[lam]
            bits.append(f"{c}*s{list(lam)}")
        return " + ".join(bits)

    def _check_box(self, other: "ChowClass") -> None:
        if self.box != other.box:
            raise ValueError(f"box mismatch: {self.box} vs {other.box}")


def zero(box: Box) -> ChowClass:
    return ChowClass(box)


def one(box: Box) -> ChowClass:
    return ChowClass(box, {(): 1})


def schubert_class(box: Box, lam) -> ChowClass:
    return ChowClass(box, {normalize(lam): 1})


def multiply(a: ChowClass, b: ChowClass) -> ChowClass:
    """Product in the Chow ring (alias for the * operator)."""
    return a * b


def integrate(x: ChowClass) -> int:
    """Degree map: the coefficient of the point class (full box)."""
    return x.terms.get(x.box.full, 0)


def chern_Q(box: Box) -> list[ChowClass]:
    """Chern classes of the universal quotient bundle: c_i(Q) = s_(i)."""
    return [one(box)] + [schubert_class(box, (i,)) for i in range(1, box.cols + 1)]


def chern_S_dual(box: Box) -> list[ChowClass]:
    """Chern classes of the dual universal subbundle: c_i(S*) = s_(1^i)."""
    return [one(box)] + [schubert_class(box, (1,) * i) for i in range(1, box.rows + 1)]


def bundle_power_chern(chern: list[ChowClass], m: int, dualize: bool = False) -> list[ChowClass]:
    """Graded Chern classes of the m-fold direct sum of a bundle, optionally
    dualized first (sign (-1)^i on the degree-i input piece); truncated at
    the box dimension."""
    if m < 1:
        raise ParameterError(f"multiplicity must be positive, got {m}")
    if not chern or chern[0] != one(chern[0].box):
        raise ValueError("total Chern class sequence must start with 1")
    box = chern[0].box
    top = box.dim
    base = [zero(box) for _ in range(top + 1)]
    for i, piece in enumerate(chern[: top + 1]):
        base[i] = -piece if (dualize and i % 2 == 1) else piece
    out = [one(box)] + [zero(box) for _ in range(top)]
    for _ in range(m):
        nxt = [zero(box) for _ in range(top + 1)]
        for d in range(top + 1):
            acc = zero(box)
            for a in range(d + 1):
                if out[a].is_zero() or base[d - a].is_zero():
                    continue
                acc = acc + out[a] * base[d - a]
            nxt[d] = acc
        out = nxt
    return out


# --- tangent bundle via the splitting principle ----------------------------
#
# c(S* (x) Q) = prod_{i<=rows, j<=cols} (1 + x_i + y_j) with e_r(x) = c_r(S*)
# and e_s(y) = c_s(Q).  The product over j for a fixed i collapses through
# prod_j((1+x_i) + y_j) = sum_s e_s(y) (1+x_i)^(cols-s), so only the x side
# needs the successive-division reduction to elementary generators.  The
# reduced universal polynomial depends only on the box shape and is memoized.


def _poly_mul(p: dict, q: dict) -> dict:
    out: dict = {}
    for ka, va in p.items():
        for kb, vb in q.items():
            key = tuple(a + b for a, b in zip(ka, kb))
            s = out.get(key, 0) + va * vb
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return out


@lru_cache(maxsize=None)
def _elementary_monomials(nvars: int, r: int) -> tuple[tuple[int, ...], ...]:
    """Exponent vectors of e_r in nvars variables (all r-subsets)."""
    from itertools import combinations

    out = []
    for subset in combinations(range(nvars), r):
        key = [0] * nvars
        for s in subset:
            key[s] = 1
        out.append(tuple(key))
    return tuple(out)


@lru_cache(maxsize=None)
def _e_product_expansion(nvars: int, epows: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Monomial expansion of prod_r e_r^epows[r-1] in nvars variables."""
    poly = {(0,) * nvars: 1}
    for r, power in enumerate(epows, start=1):
        factor = {key: 1 for key in _elementary_monomials(nvars, r)}
        for _ in range(power):
            poly = _poly_mul(poly, factor)
    return tuple(sorted(poly.items()))


def symmetric_to_elementary(poly: dict[tuple[int, ...], int], nvars: int) -> dict[tuple[int, ...], int]:
    """Rewrite a symmetric polynomial (monomial dict) in the elementary
    symmetric generators by successive division on the lex-leading term.
    Returns a map from e-exponent vectors (entry r-1 = power of e_r)."""
    out: dict[tuple[int, ...], int] = {}
    work = {k: v for k, v in poly.items() if v}
    while work:
        lead = max(work)
        if any(lead[i] < lead[i + 1] for i in range(nvars - 1)):
            raise ValueError("input polynomial is not symmetric")
        c = work[lead]
        epows = tuple(
            lead[i] - (lead[i + 1] if i + 1 < nvars else 0) for i in range(nvars)
        )
        out[epows] = out.get(epows, 0) + c
        for mono, ec in _e_product_expansion(nvars, epows):
            s = work.get(mono, 0) - c * ec
            if s:
                work[mono] = s
            else:
                work.pop(mono, None)
    return out


@lru_cache(maxsize=None)
def _tensor_chern_universal(rows: int, cols: int) -> tuple[tuple[tuple[int, ...], tuple[int, ...], int], ...]:
    """Universal expansion of prod (1 + x_i + y_j) as a polynomial in the
    elementary symmetric functions of the two alphabets.

    Returns triples (ex, ey, coeff): ex[r-1] is the power of e_r(x), ey[s-1]
    the power of e_s(y).
    """
    # Expand over the x alphabet with coefficients tracking one e_s(y) factor
    # per i; keys are (x exponents..., counts of e_1(y)..e_cols(y)).
    width = rows + cols
    poly: dict[tuple[int, ...], int] = {(0,) * width: 1}
    for i in range(rows):
        factor: dict[tuple[int, ...], int] = {}
        for s in range(cols + 1):
            for t in range(cols - s + 1):
                key = [0] * width
                key[i] = t
                if s:
                    key[rows + s - 1] = 1
                key = tuple(key)
                factor[key] = factor.get(key, 0) + comb(cols - s, t)
        poly = _poly_mul(poly, factor)
    # Group by the e(y) part and reduce the x part.
    grouped: dict[tuple[int, ...], dict[tuple[int, ...], int]] = {}
    for key, c in poly.items():
        xpart, ypart = key[:rows], key[rows:]
        grouped.setdefault(ypart, {})[xpart] = c
    result = []
    for ypart in sorted(grouped):
        for ex, c in sorted(symmetric_to_elementary(grouped[ypart], rows).items()):
            result.append((ex, ypart, c))
    return tuple(result)


def tangent_chern(box: Box) -> ChowClass:
    """Total Chern class of the tangent bundle of G(k, n) (rank-k and
    rank-(n-k) alphabets tensored), reduced into the Schubert basis."""
    data = _tensor_chern_universal(box.rows, box.cols)
    s_dual = chern_S_dual(box)
    q = chern_Q(box)
    total = zero(box)
    for ex, ey, coeff in data:
        cls = one(box) * coeff
        for r, p in enumerate(ex, start=1):
            for _ in range(p):
                cls = cls * s_dual[r]
        if cls.is_zero():
            continue
        for s, p in enumerate(ey, start=1):
            for _ in range(p):
                cls = cls * q[s]
        if not cls.is_zero():
            total = total + cls
    return total


def a_matrix(m: int, n: int, k: int) -> list[list[int]]:
    """Square integer matrix of size m(n-k)+1 whose (i, p) entry is the
    degree of c(T_G) c_i(Q*^m) c_(p-i)(S*^m) on G(k, n).

    Entries vanish for i > p (negative Chern index) and whenever either
    Chern class degree exceeds the box dimension.
    """
    if not (1 <= k <= n - 1 <= m - 1):
        raise ParameterError(f"need 1 <= k <= n-1 <= m-1, got m={m} n={n} k={k}")
    box = Box(k, n - k)
    size = m * (n - k) + 1
    tangent = tangent_chern(box)
    cq = bundle_power_chern(chern_Q(box), m, dualize=True)
    cs = bundle_power_chern(chern_S_dual(box), m, dualize=False)
    matrix = [[0] * size for _ in range(size)]
    for i in range(min(box.dim, size - 1) + 1):
        if cq[i].is_zero():
            continue
        row_factor = tangent * cq[i]
        for j in range(min(box.dim, size - 1 - i) + 1):
            if cs[j].is_zero():
                continue
            matrix[i][i + j] = integrate(row_factor * cs[j])
    return matrix
