"""Brute-force ground truth, independent of the quotient-matrix formulas.

Three kinds of oracle live here:

* a dense symmetric eigensolver (`sym_eigs`), row-cyclic Jacobi with
  vectorized row and column updates;
* exact integer linear algebra: `deradicalize` turns the sqrt(q_i) entries of
  the quotient matrix into an integer matrix with the same characteristic
  polynomial, `exact_det` is fraction-free (Bareiss) elimination, and
  `lap_charpoly_eval` evaluates det(tI - L) of a tree exactly by leaf
  elimination, division-free;
* root isolation (`min_root`): square-free reduction, a float grid scan for
  the leftmost sign change, then exact rational bisection.

None of this uses the suffix recursions under test, and nothing here calls
numpy's eigensolver; numpy is array plumbing only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

import numpy as np

from .charpoly import IntPolynomial, StructuredC
from .graphs import Graph, build_caterpillar, matrices
from .model import CaterpillarSpec


class NonConvergence(RuntimeError):
    """Jacobi sweep cap hit before the off-diagonal norm dropped below tolerance."""


class NoRootFound(RuntimeError):
    """No sign change of the (square-free) polynomial inside the search window."""


@dataclass
class EigenResult:
    values: np.ndarray      # ascending
    vectors: np.ndarray     # orthonormal columns, vectors[:, i] pairs with values[i]
    sweeps: int
    residual: float         # max_i ||M v_i - lambda_i v_i||_inf


def _offdiag_norm(a: np.ndarray) -> float:
    # computed entrywise, not as ||A||^2 - ||diag||^2, which cancels catastrophically
    b = a.copy()
    np.fill_diagonal(b, 0.0)
    return float(np.linalg.norm(b))


def sym_eigs(m: np.ndarray, max_sweeps: int = 100) -> EigenResult:
    """All eigenvalues and eigenvectors of a symmetric matrix by cyclic Jacobi.

    Row-cyclic pivot order with the inner-rotation convention (|theta| <=
    pi/4), which is the provably convergent combination; row and column
    updates are vectorized.  Convergence: off-diagonal Frobenius norm below
    1e-12 * ||M||_F, cap max_sweeps full sweeps (NonConvergence beyond it).
    """
    m = np.asarray(m, dtype=float)
    n = m.shape[0]
    if m.shape != (n, n):
        raise ValueError("matrix is not square")
    if n == 0:
        return EigenResult(np.zeros(0), np.zeros((0, 0)), 0, 0.0)
    if not np.allclose(m, m.T, atol=1e-8 * (1.0 + np.abs(m).max())):
        raise ValueError("matrix is not symmetric")

    a = (m + m.T) / 2.0
    v = np.eye(n)
    tol = 1e-12 * max(np.linalg.norm(a), 1e-300)
    skip = tol / (2.0 * n)      # rotations below this cannot keep the norm above tol
    sweeps = 0
    while _offdiag_norm(a) > tol:
        if sweeps >= max_sweeps:
            raise NonConvergence(
                f"off-diagonal norm {_offdiag_norm(a):.3e} after {sweeps} sweeps (tol {tol:.3e})"
            )
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= skip:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(tau) > 1e150:
                    t = 1.0 / (2.0 * tau)
                else:
                    t = (1.0 if tau >= 0.0 else -1.0) / (abs(tau) + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                ap, aq = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * ap - s * aq
                a[q, :] = s * ap + c * aq
                ap, aq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                a[p, q] = a[q, p] = 0.0
                vp, vq = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
        sweeps += 1

    vals = np.diag(a).copy()
    order = np.argsort(vals, kind="stable")
    vals = vals[order]
    vecs = v[:, order]
    residual = float(np.abs(m @ vecs - vecs * vals).max()) if n else 0.0
    return EigenResult(vals, vecs, sweeps, residual)


@lru_cache(maxsize=None)
def mu_oracle(spec: CaterpillarSpec) -> float:
    """Algebraic connectivity straight from the dense Laplacian of the tree."""
    g = build_caterpillar(spec)
    if g.n < 2:
        raise ValueError("algebraic connectivity needs at least 2 vertices")
    return float(sym_eigs(matrices(g)["L"]).values[1])


def deradicalize(c: StructuredC) -> list[list[int]]:
    """Integer matrix with the same characteristic polynomial as C.

    Each sqrt(q_i) pair is replaced asymmetrically: the leg-slot row keeps
    q_i, the spine-edge row keeps 1 (the diagonal similarity with 1/sqrt(q_i)
    at the leg slots; for q_i = 0 the leg row stays all zero, so no directed
    cycle of the determinant expansion is affected and the characteristic
    polynomial is still preserved).  Weight-1 ties are untouched.
    """
    b = [[0] * c.dim for _ in range(c.dim)]
    for i, d in enumerate(c.diag):
        b[i][i] = d
    for i, j, w2 in c.offdiag:
        leg_i, leg_j = c.slot_q[i] is not None, c.slot_q[j] is not None
        if leg_i and leg_j:
            raise ValueError("two leg slots tied directly; not a quotient-matrix structure")
        if not leg_i and not leg_j:
            b[i][j] = b[j][i] = w2      # always 1
        else:
            leg, other = (i, j) if leg_i else (j, i)
            b[leg][other] = w2
            b[other][leg] = 1
    return b


def exact_det(m, t: int = 0) -> int:
    """det(M - tI) over the integers by fraction-free (Bareiss) elimination."""
    a = [[int(x) for x in row] for row in m]
    n = len(a)
    for i in range(n):
        if len(a[i]) != n:
            raise ValueError("matrix is not square")
        a[i][i] -= t
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for col in range(n - 1):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            sign = -sign
        for r in range(col + 1, n):
            for cc in range(col + 1, n):
                a[r][cc] = (a[r][cc] * a[col][col] - a[r][col] * a[col][cc]) // prev
            a[r][col] = 0
        prev = a[col][col]
    return sign * a[n - 1][n - 1]


def lap_charpoly_eval(g: Graph, t: int) -> int:
    """Exact det(tI - L(g)) for a tree, by division-free leaf elimination.

    Rooted at vertex 1: a_v = (t - d_v) prod_c a_c - sum_c b_c prod_{c' != c} a_{c'},
    b_v = prod_c a_c over children c; the determinant telescopes to a_root.
    """
    n = g.n
    if n == 0:
        return 1
    adj: dict[int, list[int]] = {u: [] for u in range(1, n + 1)}
    for u, w in g.edges:
        adj[u].append(w)
        adj[w].append(u)
    # BFS from 1 to get parent pointers and a processing order
    order = [1]
    parent = {1: 0}
    for u in order:
        for w in adj[u]:
            if w not in parent:
                parent[w] = u
                order.append(w)
    if len(order) != n:
        raise ValueError("graph is not a connected tree")
    av = {}
    bv = {}
    for u in reversed(order):
        kids = [w for w in adj[u] if parent.get(w) == u]
        prod = 1
        for w in kids:
            prod *= av[w]
        acc = (t - len(adj[u])) * prod
        for w in kids:
            rest = 1
            for w2 in kids:
                if w2 != w:
                    rest *= av[w2]
            acc -= bv[w] * rest
        av[u] = acc
        bv[u] = prod
    return av[1]


# ---------------------------------------------------------------------------
# root isolation
# ---------------------------------------------------------------------------

def _frac_divmod(a: list[Fraction], b: list[Fraction]):
    """Polynomial divmod on ascending Fraction coefficient lists."""
    r = list(a)
    quot = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    while len(r) >= len(b) and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) < len(b):
            break
        f = r[-1] / b[-1]
        shift = len(r) - len(b)
        quot[shift] += f
        for i, bc in enumerate(b):
            r[shift + i] -= f * bc
        r.pop()
    while len(r) > 1 and r[-1] == 0:
        r.pop()
    return quot, (r or [Fraction(0)])


def _square_free(p: IntPolynomial) -> IntPolynomial:
    """p with repeated roots collapsed to simple ones: p / gcd(p, p')."""
    if p.degree <= 1:
        return p
    a = [Fraction(c) for c in p.coeffs]
    b = [Fraction(c) for c in p.deriv().coeffs]
    while True:
        _, r = _frac_divmod(a, b)
        if len(r) == 1 and r[0] == 0:
            break
        a, b = b, [c / r[-1] for c in r]      # keep remainders monic
    g = b
    if len(g) == 1:
        return p
    quot, rem = _frac_divmod([Fraction(c) for c in p.coeffs], g)
    assert len(rem) == 1 and rem[0] == 0, "gcd does not divide p"
    denom = 1
    for c in quot:
        denom = denom * c.denominator // gcd(denom, c.denominator)
    ints = [int(c * denom) for c in quot]
    content = 0
    for c in ints:
        content = gcd(content, c)
    if content > 1:
        ints = [c // content for c in ints]
    return IntPolynomial(tuple(ints))


def min_root(p: IntPolynomial, lo: float, hi: float) -> float:
    """Smallest real root of p in [lo, hi] to absolute tolerance 1e-12.

    Grid scan (step <= 1e-3) of the square-free part for the leftmost sign
    change, signs confirmed exactly over the rationals, then exact bisection.
    Repeated roots are fine (the square-free part changes sign at them).
    """
    if hi <= lo:
        raise ValueError("empty interval")
    sf = _square_free(p)
    if sf.is_zero():
        raise NoRootFound("zero polynomial")
    flo = Fraction(lo)
    fhi = Fraction(hi)
    nsteps = max(1, int(np.ceil((hi - lo) / 1e-3)))
    step = (fhi - flo) / nsteps
    xs = np.linspace(lo, hi, nsteps + 1)
    ys = sf(xs)

    def exact_sign(x: Fraction) -> int:
        val = sf(x)
        return (val > 0) - (val < 0)

    candidates = np.nonzero(ys[:-1] * ys[1:] <= 0)[0]
    for i in candidates:
        a = flo + int(i) * step
        b = a + step
        sa, sb = exact_sign(a), exact_sign(b)
        if sa == 0:
            return float(a)
        if sb == 0:
            return float(b)
        if sa * sb > 0:
            continue        # float roundoff suggested a change that is not there
        while float(b - a) > 1e-12:
            mid = (a + b) / 2
            sm = exact_sign(mid)
            if sm == 0:
                return float(mid)
            if sm == sa:
                a = mid
            else:
                b = mid
        return float((a + b) / 2)
    raise NoRootFound(f"no sign change of degree-{sf.degree} square-free part in [{lo}, {hi}]")
