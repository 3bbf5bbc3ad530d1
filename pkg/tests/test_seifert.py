import math
from fractions import Fraction

import pytest

from realsing.errors import InvalidParameters
from realsing.seifert import family_params, seifert_data, seifert_data_complex

from helpers import coprime_grid
from oracles import residue_search


@pytest.mark.parametrize(
    "pqr, delta, a, b",
    [((3, 4, 10), 5, 2, 1), ((2, 3, 3), 1, 3, 1), ((3, 5, 2), 1, 2, 7), ((3, 4, 5), 5, 1, 1)],
)
def test_family_params(pqr, delta, a, b):
    fp = family_params(*pqr)
    assert (fp.delta, fp.a, fp.b) == (delta, a, b)


@pytest.mark.parametrize(
    "pqr, message",
    [((2, 4, 3), "p and q must be coprime"), ((1, 3, 3), "p must be >= 2"),
     ((2, 3, 1), "r must be >= 2"), ((6, 9, 4), "coprime")],
)
def test_family_params_rejects(pqr, message):
    with pytest.raises(InvalidParameters, match=message):
        family_params(*pqr)


def _oracle_pairs(p, q, r):
    fp = family_params(p, q, r)
    a, b = fp.a, fp.b
    (b1,) = residue_search(b, -1, a * q)
    (b2,) = residue_search(b, -1, a * p)
    pairs = [(a * q, b1), (a * p, b2)]
    if a > 1:
        (b3,) = residue_search(b, 1, a)
        pairs.append((a, b3))
    return tuple(pairs)


@pytest.mark.parametrize(
    "pqr, genus, e0, pairs",
    [
        ((2, 3, 3), 0, Fraction(-1, 18), ((9, 8), (6, 5), (3, 1))),
        ((3, 4, 10), 2, Fraction(-5, 24), ((8, 7), (6, 5), (2, 1))),
        ((3, 4, 5), 2, Fraction(-5, 12), ((4, 3), (3, 2))),
        ((3, 5, 2), 0, Fraction(-1, 30), ((10, 7), (6, 5), (2, 1))),
    ],
)
def test_seifert_data_golden(pqr, genus, e0, pairs):
    assert _oracle_pairs(*pqr) == pairs
    sd = seifert_data(family_params(*pqr))
    assert (sd.genus, sd.e0, sd.pairs) == (genus, e0, pairs)


@pytest.mark.parametrize("p, q", [(3, 4), (2, 3), (4, 7), (5, 6)])
def test_a2_b1_family_pairs(p, q):
    # r = 2 (pq - p - q) gives a = 2, b = 1
    fp = family_params(p, q, 2 * (p * q - p - q))
    assert (fp.a, fp.b) == (2, 1)
    assert seifert_data(fp).pairs == ((2 * q, 2 * q - 1), (2 * p, 2 * p - 1), (2, 1))


def test_seifert_data_complex_examples():
    assert seifert_data_complex(3, 5).pairs[0] == (10, 7)
    assert residue_search(23, 1, 10) == [7]
    sd = seifert_data_complex(2, 3)
    assert sd.pairs[0] == (6, 5) and residue_search(11, 1, 6) == [5]
    assert sd.genus == 0 and sd.e0 == Fraction(-1, 12)


def test_seifert_invariants_on_grid():
    for p, q, r in coprime_grid(15, 15, 30, ordered=False):
        fp = family_params(p, q, r)
        assert fp.m % 2 == 1 and fp.b % 2 == 1 and fp.delta % 2 == 1
        assert math.gcd(fp.a, fp.b) == 1
        sd = seifert_data(fp)
        assert sd.genus == (fp.delta - 1) // 2
        assert sd.e0 == Fraction(-fp.delta, fp.a * p * q) < 0
        assert len(sd.pairs) == (3 if fp.a > 1 else 2)
        signs = (-1, -1, 1)
        for (alpha, beta), s in zip(sd.pairs, signs):
            assert 0 < beta < alpha and math.gcd(alpha, beta) == 1
            assert (fp.b * beta - s) % alpha == 0


def test_comparison_theorem_small():
    for p in range(2, 20):
        for q in range(2, 20):
            if math.gcd(p, q) == 1:
                assert seifert_data(family_params(p, q, 2)) == seifert_data_complex(p, q)
                assert seifert_data_complex(p, q).pairs[2] == (2, 1)
