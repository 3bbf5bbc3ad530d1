import math

from realsing.plumbing import build_star_graph
from realsing.seifert import family_params, seifert_data


def coprime_grid(pmax=12, qmax=12, rmax=20, ordered=True):
    """Coprime triples with 2 <= p (< q when ordered) and 2 <= r <= rmax."""
    out = []
    for p in range(2, pmax + 1):
        for q in range(2, qmax + 1):
            if (ordered and q <= p) or math.gcd(p, q) != 1:
                continue
            for r in range(2, rmax + 1):
                out.append((p, q, r))
    return out


GRID = coprime_grid()
SMALL_GRID = coprime_grid(7, 7, 10)


def graph_for(p, q, r):
    return build_star_graph(seifert_data(family_params(p, q, r)))
