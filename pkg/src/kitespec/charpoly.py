"""Exact characteristic polynomials and cospectrality decisions.

Three algorithmically independent routes are provided:

* :func:`charpoly` -- division-free Berkowitz method (the default),
* :func:`charpoly_pendant_recursive` -- repeated pendant deletion via
  P(G) = lambda*P(G - x1) - P(G - x1 - x2) for a pendant x1 with neighbor x2,
* :func:`charpoly_interpolated` -- fraction-free (Bareiss) determinants of
  lambda*I - A at n+1 integer points, Lagrange-interpolated back.

All results are monic integer polynomials; cospectrality is decided only on
these exact coefficient vectors, never on floating-point spectra.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .graph import Graph, make_complete, make_kite
from .polynomial import IntPolynomial, ONE, X, lagrange_integer


def charpoly(g: Graph) -> IntPolynomial:
    """det(lambda*I - A(G)) by the Berkowitz division-free algorithm."""
    n = g.n
    if n == 0:
        return ONE
    a = g.adjacency_matrix()
    # vec holds the coefficients of the leading principal charpoly,
    # highest power first
    vec = [1, -a[0][0]]
    for i in range(1, n):
        row = [a[i][j] for j in range(i)]
        col = [a[j][i] for j in range(i)]
        # Toeplitz column: 1, -a_ii, -row.col, -row.A.col, ...
        t = [1, -a[i][i]]
        v = col
        t.append(-_dot(row, v))
        for _ in range(i - 1):
            v = [_dot(a[r][:i], v) for r in range(i)]
            t.append(-_dot(row, v))
        new = [0] * (i + 2)
        for r in range(i + 2):
            s = 0
            for c in range(min(r, i) + 1):
                s += t[r - c] * vec[c]
            new[r] = s
        vec = new
    return IntPolynomial(tuple(reversed(vec)))


def _dot(x, y):
    return sum(a * b for a, b in zip(x, y))


def _find_pendant(g: Graph) -> int | None:
    for v in range(g.n - 1, -1, -1):
        if g.rows[v].bit_count() == 1:
            return v
    return None


def charpoly_pendant_recursive(g: Graph) -> IntPolynomial:
    """Strip pendant vertices (highest index first) with the deletion rule
    P(G) = lambda*P(G1) - P(G2); fall back to :func:`charpoly` once no
    pendant remains."""
    x1 = _find_pendant(g)
    if x1 is None:
        return charpoly(g)
    x2 = g.rows[x1].bit_length() - 1
    g1 = g.subgraph_without(x1)
    g2 = g.subgraph_without({x1, x2})
    return charpoly_pendant_recursive(g1).shift(1) - charpoly_pendant_recursive(g2)


def bareiss_det(matrix: list[list[int]]) -> int:
    """Exact determinant of an integer matrix by fraction-free elimination."""
    n = len(matrix)
    if n == 0:
        return 1
    m = [row[:] for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def charpoly_interpolated(g: Graph) -> IntPolynomial:
    """Evaluate det(x*I - A) at x = 0..n by Bareiss elimination and
    interpolate the degree-n polynomial through those points."""
    n = g.n
    if n == 0:
        return ONE
    a = g.adjacency_matrix()
    points = []
    for x in range(n + 1):
        m = [[(x if i == j else 0) - a[i][j] for j in range(n)] for i in range(n)]
        points.append((x, bareiss_det(m)))
    return lagrange_integer(points)


# -- closed forms ----------------------------------------------------------


def closed_form_complete(p: int) -> IntPolynomial:
    """(lambda - p + 1) * (lambda + 1)**(p-1), the K_p polynomial."""
    if p < 1:
        raise ValueError("p >= 1 required")
    return IntPolynomial((1 - p, 1)) * IntPolynomial((1, 1)).pow(p - 1)


def _kite1_cubic(p: int) -> IntPolynomial:
    # lambda^3 - (p-2) lambda^2 - p lambda + (p-2)
    return IntPolynomial((p - 2, -p, -(p - 2), 1))


def closed_form_kite1(p: int) -> IntPolynomial:
    """(lambda+1)**(p-2) * [lambda^3 - (p-2)lambda^2 - p*lambda + (p-2)],
    the short-kite polynomial."""
    if p < 2:
        raise ValueError("p >= 2 required")
    return IntPolynomial((1, 1)).pow(p - 2) * _kite1_cubic(p)


def closed_form_kite2(p: int) -> IntPolynomial:
    """(lambda^2 - 1)*P(K_p) - lambda*P(K_{p-1})."""
    if p < 2:
        raise ValueError("p >= 2 required")
    return (
        IntPolynomial((-1, 0, 1)) * closed_form_complete(p)
        - closed_form_complete(p - 1).shift(1)
    )


def closed_form_gc(p: int) -> IntPolynomial:
    """Polynomial of K_p with two pendants on distinct clique vertices,
    by pendant deletion: lambda*P(Kite_{p,1}) - P(Kite_{p-1,1}).

    Expanding gives (lambda+1)**(p-3) times a degree-5 factor
    lambda^5 + (3-p)lambda^4 + (1-2p)lambda^3 + (p-5)lambda^2
    + (2p-3)lambda + (3-p).
    """
    if p < 3:
        raise ValueError("p >= 3 required")
    return closed_form_kite1(p).shift(1) - closed_form_kite1(p - 1)


def path_poly_a(n: int) -> IntPolynomial:
    """n-th solution of a_n = lambda*a_{n-1} - a_{n-2} with a_0 = 1,
    a_1 = lambda; equals the path polynomial P(P_n) for n >= 1."""
    if n < 0:
        raise ValueError("n >= 0 required")
    prev, cur = ONE, X
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, cur.shift(1) - prev
    return cur


# -- u-substitution identity ------------------------------------------------


class SingularU(ValueError):
    """u in {0, 1, -1} makes the 1 - u**2 denominators vanish."""


def path_poly_u_value(n: int, u: Fraction) -> Fraction:
    """Closed form a_n(u + 1/u) = u**-n * (1 - u**(2n+2)) / (1 - u**2)."""
    u = Fraction(u)
    if u in (0, 1, -1):
        raise SingularU(f"singular u = {u}")
    return u ** -n * (1 - u ** (2 * n + 2)) / (1 - u**2)


def kite_u_closed_form(p: int, q: int, u: Fraction) -> Fraction:
    """The compact kite closed form at lambda = u + 1/u:

    u**-q * (1 + u + 1/u)**(p-2) / (1 - u**2)
      * [(2-p)*(1 + 1/u - u**(2q+2) - u**(2q+3)) + (1/u**2 - u**(2q+4))]
    """
    u = Fraction(u)
    if u in (0, 1, -1):
        raise SingularU(f"singular u = {u}")
    pre = u ** -q * (1 + u + 1 / u) ** (p - 2) / (1 - u**2)
    bracket = (2 - p) * (1 + 1 / u - u ** (2 * q + 2) - u ** (2 * q + 3)) + (
        u ** -2 - u ** (2 * q + 4)
    )
    return pre * bracket


def kite_u_identity_check(p: int, q: int, u: Fraction) -> bool:
    """With lambda = u + 1/u, compare the compact closed form against the
    exact kite polynomial evaluated at lambda; also re-check the a_n closed
    form at n = q and n = q + 1. All arithmetic is exact rational."""
    if p < 3 or q < 1:
        raise ValueError("p >= 3 and q >= 1 required")
    u = Fraction(u)
    if u in (0, 1, -1):
        raise SingularU(f"singular u = {u}")
    lam = u + 1 / u
    for n in (q, q + 1):
        recur = path_poly_a(n)(lam)
        if recur != path_poly_u_value(n, u):
            return False
    direct = _kite_poly_cached(p, q)(lam)
    return direct == kite_u_closed_form(p, q, u)


@lru_cache(maxsize=256)
def _kite_poly_cached(p: int, q: int) -> IntPolynomial:
    return charpoly(make_kite(p=p, q=q))


# -- cospectrality and walks -------------------------------------------------


def are_cospectral(g: Graph, h: Graph) -> bool:
    """Exact coefficient-by-coefficient equality of characteristic polynomials."""
    if g.n != h.n:
        return False
    return charpoly(g) == charpoly(h)


def walk_count(g: Graph, i: int) -> int:
    """tr(A**i), the number of closed walks of length i, by exact integer
    matrix powering."""
    if i < 1:
        raise ValueError("walk length must be >= 1")
    a = g.adjacency_matrix()
    power = a
    for _ in range(i - 1):
        power = _matmul(power, a)
    return sum(power[k][k] for k in range(g.n))


def _matmul(a, b):
    n = len(a)
    bt = list(zip(*b))
    return [[_dot(row, col) for col in bt] for row in a]


def coefficient_edge_count(poly: IntPolynomial) -> int:
    """Edge count read off the lambda^{n-2} coefficient (which equals -m)."""
    return -poly[poly.degree - 2] if poly.degree >= 2 else 0


def coefficient_triangle_count(poly: IntPolynomial) -> int:
    """Triangle count read off the lambda^{n-3} coefficient (equals -2t)."""
    if poly.degree < 3:
        return 0
    c = poly[poly.degree - 3]
    assert c % 2 == 0
    return -c // 2


def kite_charpoly(p: int, q: int) -> IntPolynomial:
    """Kite polynomial by the path recursion: a_q*P(K_p) - a_{q-1}*P(K_{p-1})."""
    if p < 1 or q < 0:
        raise ValueError("p >= 1 and q >= 0 required")
    if p == 1:
        return path_poly_a(q + 1)
    if q == 0:
        return closed_form_complete(p)
    return path_poly_a(q) * closed_form_complete(p) - path_poly_a(q - 1) * closed_form_complete(p - 1)


def kite_edge_formula(p: int, q: int) -> int:
    return comb(p, 2) + q
