"""Numerical spectra and the clique/spectral-radius bound machinery.

The eigensolver is a plain cyclic Jacobi rotation scheme (symmetric input,
unconditional convergence).  The spectral radius is additionally certified by
Sturm-sequence bisection on the exact characteristic polynomial, so the
headline quantity never depends on floating point alone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb, isqrt

from .charpoly import charpoly
from .graph import Graph
from .polynomial import IntPolynomial

JACOBI_SWEEP_CAP = 100
RADIUS_TOL = 1e-10
CERT_MARGIN = 1e-9


class ConvergenceError(RuntimeError):
    pass


@dataclass(frozen=True)
class Spectrum:
    """All adjacency eigenvalues, sorted descending, plus the tolerance used."""

    values: tuple[float, ...]
    tol: float


@dataclass(frozen=True)
class RadiusBounds:
    lower: float
    upper: float
    p: int


def jacobi_eigenvalues(matrix: list[list[float]], tol: float = 1e-12) -> list[float]:
    """Eigenvalues of a symmetric matrix by cyclic Jacobi sweeps, iterated
    until the off-diagonal Frobenius norm drops below ``tol``."""
    n = len(matrix)
    a = [[float(x) for x in row] for row in matrix]
    for _ in range(JACOBI_SWEEP_CAP):
        off = math.sqrt(sum(a[i][j] ** 2 for i in range(n) for j in range(n) if i != j))
        if off < tol:
            return sorted((a[i][i] for i in range(n)), reverse=True)
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p][q]
                if apq == 0.0:
                    continue
                theta = (a[q][q] - a[p][p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                for k in range(n):
                    akp, akq = a[k][p], a[k][q]
                    a[k][p] = c * akp - s * akq
                    a[k][q] = s * akp + c * akq
                for k in range(n):
                    apk, aqk = a[p][k], a[q][k]
                    a[p][k] = c * apk - s * aqk
                    a[q][k] = s * apk + c * aqk
    raise ConvergenceError(f"Jacobi did not converge in {JACOBI_SWEEP_CAP} sweeps")


def eigenvalues(g: Graph, tol: float = 1e-12) -> Spectrum:
    if tol <= 0:
        raise ValueError("tol must be positive")
    if g.n == 0:
        return Spectrum((), tol)
    vals = jacobi_eigenvalues(g.adjacency_matrix(), tol)
    return Spectrum(tuple(vals), tol)


# -- Sturm sequences ---------------------------------------------------------


def _primitive(coeffs: list[Fraction]) -> IntPolynomial:
    """Scale a rational polynomial by a positive constant to a primitive
    integer polynomial (sign preserved)."""
    denom = math.lcm(*(c.denominator for c in coeffs)) if coeffs else 1
    ints = [int(c * denom) for c in coeffs]
    g = math.gcd(*ints) if any(ints) else 1
    return IntPolynomial(tuple(c // g for c in ints))


def sturm_chain(poly: IntPolynomial) -> list[IntPolynomial]:
    """Sturm chain of ``poly``; each remainder is reduced to its primitive
    part (positive scaling keeps the sign-variation counts intact)."""
    chain = [poly, poly.derivative()]
    while not chain[-1].is_zero() and chain[-1].degree > 0:
        f, g = chain[-2], chain[-1]
        rem = [Fraction(c) for c in f.coeffs]
        gc = g.coeffs
        glead = Fraction(gc[-1])
        while len(rem) >= len(gc) and any(rem):
            if rem[-1] == 0:
                rem.pop()
                continue
            factor = rem[-1] / glead
            shift = len(rem) - len(gc)
            for k, c in enumerate(gc):
                rem[shift + k] -= factor * c
            rem.pop()
        while rem and rem[-1] == 0:
            rem.pop()
        if not rem:
            break
        chain.append(-_primitive(rem))
    return chain


def _poly_div_exact(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    """Quotient f/g where g divides f over the rationals; returned primitive."""
    rem = [Fraction(c) for c in f.coeffs]
    quo = [Fraction(0)] * (f.degree - g.degree + 1)
    glead = Fraction(g.coeffs[-1])
    for k in range(f.degree - g.degree, -1, -1):
        factor = rem[k + g.degree] / glead
        quo[k] = factor
        for i, c in enumerate(g.coeffs):
            rem[k + i] -= factor * c
    assert all(c == 0 for c in rem)
    return _primitive(quo)


def squarefree_part(poly: IntPolynomial) -> IntPolynomial:
    """poly / gcd(poly, poly'): same distinct roots, all simple."""
    chain = sturm_chain(poly)
    gcd = chain[-1]
    if gcd.is_zero() or gcd.degree == 0:
        return poly
    return _poly_div_exact(poly, gcd)


def _sign_at_dyadic(poly: IntPolynomial, num: int, k: int) -> int:
    """Sign of poly(num / 2**k) via the integer-scaled value."""
    d = poly.degree
    total = sum(c * num**i * (1 << (k * (d - i))) for i, c in enumerate(poly.coeffs))
    return (total > 0) - (total < 0)


def sturm_count_above(chain: list[IntPolynomial], num: int, k: int) -> int:
    """Number of distinct real roots in (num/2**k, +inf)."""
    def variations(values):
        nz = [(v > 0) - (v < 0) for v in values if v != 0]
        return sum(1 for a, b in zip(nz, nz[1:]) if a != b)

    at_x = variations([_sign_at_dyadic(f, num, k) for f in chain])
    at_inf = variations([f.coeffs[-1] for f in chain])
    return at_x - at_inf


def largest_root(poly: IntPolynomial, tol: float = RADIUS_TOL) -> float:
    """Largest real root by Sturm-count bisection over dyadic rationals.
    Assumes at least one real root (always true for adjacency polynomials)."""
    poly = squarefree_part(poly)
    chain = sturm_chain(poly)
    n = poly.degree
    bound = n + max((abs(c) for c in poly.coeffs[:-1]), default=0)
    k = 0
    lo, hi = -(bound + 1), bound + 1  # all roots in (lo, hi]
    if sturm_count_above(chain, lo, 0) == 0:
        raise ValueError("polynomial has no real root")
    # bisect: keep >= 1 root in (lo/2^k, hi/2^k]
    steps = max(1, math.ceil(math.log2(max(2 * (bound + 1) / tol, 2))))
    for _ in range(steps):
        k += 1
        lo <<= 1
        hi <<= 1
        mid = (lo + hi) // 2
        if sturm_count_above(chain, mid, k) >= 1:
            lo = mid
        else:
            hi = mid
    return hi / (1 << k)


def spectral_radius(g: Graph) -> float:
    """Largest adjacency eigenvalue, refined to RADIUS_TOL by Sturm bisection
    on the exact characteristic polynomial."""
    if g.n == 0:
        raise ValueError("spectral radius of the empty graph is undefined")
    if g.edge_count() == 0:
        return 0.0
    return largest_root(charpoly(g), RADIUS_TOL)


# -- paper bounds -------------------------------------------------------------


def kite_radius_bounds(p: int) -> RadiusBounds:
    """Sandwich for the kite spectral radius, valid for p >= 3 and any q >= 1:
    p-1 + 1/p^2 + 1/p^3 < rho < p-1 + 1/(4p) + 1/(p^2 - 2p)."""
    if p < 3:
        raise ValueError("bounds require p >= 3")
    lower = p - 1 + 1.0 / p**2 + 1.0 / p**3
    upper = p - 1 + 1.0 / (4 * p) + 1.0 / (p * p - 2 * p)
    return RadiusBounds(lower, upper, p)


def nikiforov_bound(m: int, r: int) -> float:
    """Spectral-radius ceiling sqrt(2m(r-1)/r) for K_{r+1}-free graphs."""
    if m < 0 or r < 1:
        raise ValueError("m >= 0 and r >= 1 required")
    return math.sqrt(2.0 * m * (r - 1) / r)


def clique_lower_bound_spectral(g: Graph) -> int:
    """Certified clique lower bound: 1 + the largest r with
    rho(G) > sqrt(2m(r-1)/r) + margin; ties are not certified."""
    if g.n == 0 or g.edge_count() == 0:
        return 1 if g.n else 0
    rho = spectral_radius(g)
    m = g.edge_count()
    best = 1
    for r in range(1, g.n):
        if rho > nikiforov_bound(m, r) + CERT_MARGIN:
            best = r + 1
    return best


def kite_clique_bound(p: int, q: int) -> int:
    """Clique lower bound p - 2q + 1 for any graph cospectral with a kite
    (may be <= 1, in which case it is vacuous)."""
    if p < 3 or q < 1:
        raise ValueError("p >= 3 and q >= 1 required")
    return p - 2 * q + 1


@dataclass(frozen=True)
class InequalityCheck:
    p: int
    q: int
    r: int
    lhs_squared: Fraction
    rhs_squared: Fraction
    holds: bool

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "r": self.r,
            "lhs_squared": str(self.lhs_squared),
            "rhs_squared": str(self.rhs_squared),
            "holds": self.holds,
        }


def verify_lemma41_inequality(p_max: int) -> list[InequalityCheck]:
    """Exact-rational replacement for the computer-algebra step behind the
    clique bound: for every p <= p_max, q >= 1 with p - 2q >= 3 and
    2 <= r < p - 2q, check 2m(r-1)/r < (p-1 + 1/p^2 + 1/p^3)^2 where
    m = (p^2 - p + 2q)/2. Squares are compared, so no radicals appear."""
    if p_max < 3:
        raise ValueError("p_max >= 3 required")
    checks = []
    for p in range(3, p_max + 1):
        rhs = (Fraction(p - 1) + Fraction(1, p * p) + Fraction(1, p**3)) ** 2
        q = 1
        while p - 2 * q >= 3:
            two_m = p * p - p + 2 * q
            for r in range(2, p - 2 * q):
                lhs = Fraction(two_m * (r - 1), r)
                checks.append(InequalityCheck(p, q, r, lhs, rhs, lhs < rhs))
            q += 1
    return checks


def spectrum_sane(spec: Spectrum, edge_count: int) -> bool:
    n = len(spec.values)
    tol = max(spec.tol, 1e-12)
    if abs(sum(spec.values)) > n * max(tol, 1e-9):
        return False
    return abs(sum(v * v for v in spec.values) - 2 * edge_count) <= n * n * max(tol, 1e-9)
