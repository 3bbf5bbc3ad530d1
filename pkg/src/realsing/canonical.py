"""Canonical class of the resolution and the numerically-Gorenstein verdict.

With ``D = -K - E`` the adjunction formula becomes ``A d = chi`` where
``chi_j`` is the Euler characteristic of the j-th curve punctured at its
intersection points.  ``d`` is obtained twice: by exact elimination on the
tree, and from splice-diagram path products (``d = -(-A)^-1 chi``).  Both
routes always run and must agree exactly.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InternalConsistencyError
from .exact import exact_inverse
from .plumbing import ChiConvention, PlumbingGraph, postorder, intersection_matrix
from .seifert import FamilyParams
from .splice import SpliceDiagram, splice_weights

NUMERICALLY_GORENSTEIN = "NumericallyGorenstein"
NOT_NUMERICALLY_GORENSTEIN = "NotNumericallyGorenstein"


@dataclass(frozen=True)
class ChiVector:
    values: tuple[int, ...]
    convention: str

    def __iter__(self):
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class CanonicalReport:
    convention: str
    d: tuple[Fraction, ...]
    k: tuple[Fraction, ...]
    k_squared: Fraction
    integral: bool
    classification: str
    method: str = "both-agree"


@dataclass(frozen=True)
class Verdict:
    computed_integral: bool
    predicted_integral: bool
    agree: bool
    subcase: str


def chi_vector(g: PlumbingGraph, convention: ChiConvention = "paper") -> ChiVector:
    if convention == "paper":
        vals = [2 - g.valence(v.id) for v in g.vertices]
    elif convention == "genus":
        vals = [2 - 2 * v.genus - g.valence(v.id) for v in g.vertices]
    else:
        raise ValueError(f"unknown chi convention {convention!r}")
    return ChiVector(tuple(vals), convention)


def solve_D(g: PlumbingGraph, chi: ChiVector | tuple[int, ...]) -> tuple[Fraction, ...]:
    """Solve ``A d = chi`` by Gaussian elimination in leaf-first order.

    On a tree this order produces no fill-in: eliminating vertex ``x`` only
    touches the diagonal entry and right-hand side of its parent.  Indefinite
    trees can hit a zero pivot; those fall back to a dense inverse.
    """
    rhs = [Fraction(c) for c in chi]
    if len(rhs) != len(g):
        raise ValueError("chi vector length does not match the graph")
    order, parent = postorder(g)
    pivot = [Fraction(v.weight) for v in g.vertices]
    for x in order:
        if pivot[x] == 0:
            inv = exact_inverse(intersection_matrix(g))
            return tuple(sum((a * c for a, c in zip(row, chi)), Fraction(0)) for row in inv)
        par = parent[x]
        if par is not None:
            pivot[par] -= 1 / pivot[x]
            rhs[par] -= rhs[x] / pivot[x]
    d = [Fraction(0)] * len(g)
    for x in reversed(order):
        par = parent[x]
        d[x] = (rhs[x] - (d[par] if par is not None else 0)) / pivot[x]
    return tuple(d)


def splice_D(sd: SpliceDiagram, chi: ChiVector | tuple[int, ...]) -> tuple[Fraction, ...]:
    values = list(chi)
    out = []
    for i in range(len(sd.graph)):
        row = sd.path_products(i)
        out.append(Fraction(-sum(l * c for l, c in zip(row, values)), sd.determinant))
    return tuple(out)


def residual(g: PlumbingGraph, d, chi) -> tuple[Fraction, ...]:
    """``A d - chi``; identically zero for a correct solution."""
    A = intersection_matrix(g)
    return tuple(sum(a * x for a, x in zip(row, d)) - c for row, c in zip(A, chi))


def quadratic_form(g: PlumbingGraph, x) -> Fraction:
    """``x^T A x`` using the sparse tree structure."""
    total = sum(Fraction(v.weight) * x[v.id] ** 2 for v in g.vertices)
    total += 2 * sum(x[u] * x[v] for u, v in g.edges)
    return Fraction(total)


def canonical_class(
    g: PlumbingGraph,
    chi: ChiVector,
    diagram: SpliceDiagram | None = None,
) -> CanonicalReport:
    diagram = diagram or splice_weights(g)
    d_solve = solve_D(g, chi)
    d_splice = splice_D(diagram, chi)
    if d_solve != d_splice:
        bad = next(i for i, (x, y) in enumerate(zip(d_solve, d_splice)) if x != y)
        raise InternalConsistencyError(
            f"d-vector disagreement at vertex {bad}: solve={d_solve[bad]} splice={d_splice[bad]}"
        )
    k = tuple(-x - 1 for x in d_solve)
    integral = all(x.denominator == 1 for x in k)
    return CanonicalReport(
        convention=chi.convention,
        d=d_solve,
        k=k,
        k_squared=quadratic_form(g, k),
        integral=integral,
        classification=NUMERICALLY_GORENSTEIN if integral else NOT_NUMERICALLY_GORENSTEIN,
    )


def subcase(fp: FamilyParams) -> str:
    if fp.a == 1:
        return "a=1"
    if fp.a == 2:
        return "a=2"
    if (fp.a - 2) % fp.delta == 0:
        return "a==2 mod delta"
    return "a!=2 mod delta"


def classify(fp: FamilyParams, report: CanonicalReport) -> Verdict:
    if report.convention != "paper":
        raise ValueError("classification is defined for the paper chi convention only")
    predicted = fp.a == 2
    return Verdict(
        computed_integral=report.integral,
        predicted_integral=predicted,
        agree=report.integral == predicted,
        subcase=subcase(fp),
    )
