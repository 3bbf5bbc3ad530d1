"""Independent reference computations used by the tests.

None of these touch the fast paths in the package: determinants are expanded
by cofactors (or handed to sympy), inverses come from sympy, and modular
solutions come from exhaustive search.
"""
from __future__ import annotations

from collections import deque
from fractions import Fraction

import sympy


def cofactor_det(m) -> int:
    """Laplace expansion along the first row.  Exponential; keep n small."""
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        if m[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        total += (-1) ** j * m[0][j] * cofactor_det(minor)
    return total


def gauss_det(m) -> int:
    """Textbook elimination over Fractions with partial pivot search."""
    a = [[Fraction(x) for x in row] for row in m]
    n, det = len(a), Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return int(det)


def sympy_det(m) -> int:
    return int(sympy.Matrix(m).det())


def sympy_inverse(m) -> list[list[Fraction]]:
    inv = sympy.Matrix(m).inv()
    return [[Fraction(int(x.p), int(x.q)) for x in inv.row(i)] for i in range(inv.rows)]


def sympy_solve(m, rhs) -> list[Fraction]:
    sol = sympy.Matrix(m).LUsolve(sympy.Matrix(rhs))
    return [Fraction(int(x.p), int(x.q)) for x in sol]


def residue_search(b: int, target: int, modulus: int) -> list[int]:
    return [x for x in range(1, modulus) if (b * x - target) % modulus == 0]


def build_matrix(weights, edges):
    n = len(weights)
    m = [[0] * n for _ in range(n)]
    for i, w in enumerate(weights):
        m[i][i] = w
    for u, v in edges:
        m[u][v] = m[v][u] = 1
    return m


def cut_off_vertices(n: int, edges, v: int, u: int) -> list[int]:
    adj = {i: set() for i in range(n)}
    for x, y in edges:
        adj[x].add(y)
        adj[y].add(x)
    seen, todo = {u}, deque([u])
    while todo:
        x = todo.popleft()
        for y in adj[x]:
            if y != v and y not in seen:
                seen.add(y)
                todo.append(y)
    return sorted(seen)


def sub_det_neg(weights, edges, verts) -> int:
    """``det(-A)`` restricted to ``verts``."""
    idx = {v: i for i, v in enumerate(verts)}
    sub_edges = [(idx[x], idx[y]) for x, y in edges if x in idx and y in idx]
    m = build_matrix([weights[v] for v in verts], sub_edges)
    neg = [[-x for x in row] for row in m]
    return cofactor_det(neg) if len(verts) <= 6 else gauss_det(neg)
