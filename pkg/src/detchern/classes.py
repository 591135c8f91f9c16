"""Characteristic classes of determinantal varieties in projective space.

tau(m, n, k) is the variety of m x n matrices (up to scalar, m >= n) of
kernel dimension >= k inside P^(mn-1).  This module computes its
Chern-Mather class, the Chern-Schwartz-MacPherson classes of the variety
and of its open strata, local Euler obstructions, and (for the
hypersurface case) the Chern-Fulton and Milnor classes.  All classes live
in the Chow group of P^(mn-1) and are stored little-endian over the basis
[P^0], ..., [P^N]; the reversal to hyperplane-power coefficients happens in
exactly one place (ProjClass.h_coefficients / from_h_coefficients).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParameterError
from .partitions import binom
from .schubert import a_matrix


class ProjClass:
    """Integer class in the Chow group of P^N, coefficients over [P^l]."""

    __slots__ = ("coeffs",)

    def __init__(self, ambient_dim: int, coeffs=None):
        if coeffs is None:
            coeffs = [0] * (ambient_dim + 1)
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != ambient_dim + 1:
            raise ValueError(
                f"expected {ambient_dim + 1} coefficients, got {len(coeffs)}"
            )
        self.coeffs = coeffs

    @property
    def ambient_dim(self) -> int:
        return len(self.coeffs) - 1

    # The single conversion point between the [P^l] basis and powers of the
    # hyperplane class: coefficient of H^j equals coefficient of [P^(N-j)].
    def h_coefficients(self) -> tuple[int, ...]:
        return tuple(reversed(self.coeffs))

    @classmethod
    def from_h_coefficients(cls, hcoeffs) -> "ProjClass":
        hcoeffs = list(hcoeffs)
        return cls(len(hcoeffs) - 1, list(reversed(hcoeffs)))

    def coefficient(self, l: int) -> int:
        return self.coeffs[l]

    def hyperplane_power(self, p: int) -> "ProjClass":
        """Cap with H^p: shifts [P^l] down to [P^(l-p)], truncating below 0."""
        if p < 0:
            raise ValueError("hyperplane power must be nonnegative")
        n = self.ambient_dim
        return ProjClass(n, [self.coeffs[l + p] if l + p <= n else 0 for l in range(n + 1)])

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other: "ProjClass") -> "ProjClass":
        self._check(other)
        return ProjClass(self.ambient_dim, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "ProjClass") -> "ProjClass":
        self._check(other)
        return ProjClass(self.ambient_dim, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "ProjClass":
        return ProjClass(self.ambient_dim, [-a for a in self.coeffs])

    def __mul__(self, scalar: int) -> "ProjClass":
        if not isinstance(scalar, int):
            return NotImplemented
        return ProjClass(self.ambient_dim, [a * scalar for a in self.coeffs])

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, ProjClass) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"ProjClass({list(self.coeffs)})"

    def _check(self, other: "ProjClass") -> None:
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch")


@dataclass(frozen=True)
class StrataVector:
    """Integers indexed by strata lo..lo+len(values)-1 of the rank filtration."""

    lo: int
    values: tuple[int, ...]

    @property
    def hi(self) -> int:
        return self.lo + len(self.values) - 1

    def __getitem__(self, stratum: int) -> int:
        if not (self.lo <= stratum <= self.hi):
            raise IndexError(f"stratum {stratum} outside {self.lo}..{self.hi}")
        return self.values[stratum - self.lo]


def variety_dim(m: int, n: int, k: int) -> int:
    """dim tau(m, n, k) = (m+k)(n-k) - 1."""
    return (m + k) * (n - k) - 1


def _check_params(m: int, n: int, k: int, k_min: int) -> None:
    if not (k_min <= k <= n - 1 <= m - 1):
        raise ParameterError(
            f"need {k_min} <= k <= n-1 <= m-1, got m={m} n={n} k={k}"
        )


def b_matrix(m: int, n: int, k: int) -> list[list[int]]:
    """Square binomial matrix of size m(n-k)+1 with entry (i, p) equal to
    binom(m(n-k)-p, i-p); vanishes above the diagonal (i < p)."""
    _check_params(m, n, k, k_min=1)
    size = m * (n - k) + 1
    top = m * (n - k)
    return [[binom(top - p, i - p) for p in range(size)] for i in range(size)]


_CM_CACHE: dict[tuple[int, int, int], ProjClass] = {}


def cm_class(m: int, n: int, k: int) -> ProjClass:
    """Chern-Mather class of tau(m, n, k) pushed to P^(mn-1).

    For k >= 1 the H^l coefficient is the closed double sum
    gamma_l = sum_i sum_{mk+j-p=l} A[i][p] * B[j][i] over the degree matrix
    A and the binomial matrix B.  For k = 0 the variety is the ambient
    space and the class is (1+H)^(mn) truncated.
    """
    _check_params(m, n, k, k_min=0)
    key = (m, n, k)
    hit = _CM_CACHE.get(key)
    if hit is not None:
        return hit
    N = m * n - 1
    if k == 0:
        out = ProjClass(N, [binom(m * n, l + 1) for l in range(N + 1)])
    else:
        top = m * (n - k)
        A = a_matrix(m, n, k)
        gamma = [0] * (N + 1)
        for i in range(top + 1):
            row = A[i]
            for p in range(top + 1):
                a = row[p]
                if a == 0:
                    continue
                for j in range(top + 1):
                    l = m * k + j - p
                    if 0 <= l <= N:
                        gamma[l] += a * binom(top - i, j - i)
        out = ProjClass.from_h_coefficients(gamma)
    _CM_CACHE[key] = out
    return out


def cm_class_via_trace(m: int, n: int, k: int) -> ProjClass:
    """Cross-check path: literal trace of A * H * B over the truncated
    polynomial ring Z[H]/(H^mn), where H is the matrix [H^(mk+j-i)].
    Monomials with negative exponents must cancel identically."""
    _check_params(m, n, k, k_min=1)
    N = m * n - 1
    top = m * (n - k)
    A = a_matrix(m, n, k)
    B = b_matrix(m, n, k)
    trace: dict[int, int] = {}
    for i in range(top + 1):
        for j in range(top + 1):
            # entry (i, j) of A*H is sum_p A[i][p] H^(mk+j-p)
            for p in range(top + 1):
                a = A[i][p]
                if a == 0:
                    continue
                c = a * B[j][i]
                if c == 0:
                    continue
                e = m * k + j - p
                if e <= N:  # truncate H^mn and above
                    trace[e] = trace.get(e, 0) + c
    gamma = [0] * (N + 1)
    for e, c in trace.items():
        if c == 0:
            continue
        if e < 0:
            raise ArithmeticError(f"negative hyperplane power survived: H^{e}")
        gamma[e] = c
    return ProjClass.from_h_coefficients(gamma)


def csm_class(m: int, n: int, k: int) -> ProjClass:
    """Chern-Schwartz-MacPherson class of the closed variety tau(m, n, k):
    alternating binomial combination of the Chern-Mather classes of the
    deeper strata closures."""
    _check_params(m, n, k, k_min=0)
    if k == 0:
        return cm_class(m, n, 0)
    out = ProjClass(m * n - 1)
    for i in range(n - k):
        out = out + (-1) ** i * binom(k + i - 1, k - 1) * cm_class(m, n, k + i)
    return out


def csm_open(m: int, n: int, k: int) -> ProjClass:
    """Chern-Schwartz-MacPherson class of the open stratum (matrices of
    kernel dimension exactly k)."""
    _check_params(m, n, k, k_min=0)
    out = ProjClass(m * n - 1)
    for i in range(n - k):
        out = out + (-1) ** i * binom(k + i, k) * cm_class(m, n, k + i)
    return out


def euler_obstruction(m: int, n: int, k: int) -> StrataVector:
    """Local Euler obstruction of tau(m, n, k): binom(k+i, i) on the
    stratum of kernel dimension exactly k+i."""
    _check_params(m, n, k, k_min=1)
    return StrataVector(k, tuple(binom(k + i, i) for i in range(n - k)))


def chern_fulton_hypersurface(n: int) -> ProjClass:
    """Chern-Fulton class of the degree-n determinant hypersurface in
    P^(n^2-1): nH (1+H)^(n^2) / (1+nH), the division expanded as the
    truncated geometric series."""
    if n < 2:
        raise ParameterError(f"need n >= 2, got {n}")
    N = n * n - 1
    h = [0] * (N + 1)
    for j in range(1, N + 1):
        # coefficient of H^j in nH (1+H)^(n^2) sum_i (-nH)^i
        total = 0
        for a in range(j):
            total += binom(n * n, a) * (-n) ** (j - 1 - a)
        h[j] = n * total
    return ProjClass.from_h_coefficients(h)


def milnor_class(n: int) -> ProjClass:
    """Milnor class of the determinant hypersurface: the signed difference
    (-1)^dim (c_Fulton - c_SM), supported on the singular locus."""
    if n < 2:
        raise ParameterError(f"need n >= 2, got {n}")
    sign = (-1) ** (n * n - 2)
    return sign * (chern_fulton_hypersurface(n) - csm_class(n, n, 1))


def cm_cache_export() -> dict[tuple[int, int, int], tuple[int, ...]]:
    return {key: cls.coeffs for key, cls in _CM_CACHE.items()}


def cm_cache_import(entries: dict[tuple[int, int, int], tuple[int, ...]]) -> None:
    for key, coeffs in entries.items():
        _CM_CACHE.setdefault(key, ProjClass(len(coeffs) - 1, coeffs))
