"""Core semigroup arithmetic against independent sieve oracles."""

import random

import pytest

from numsgps import (
    EmptyGeneratorsError,
    GcdNotOneError,
    GeneratorTooLargeError,
    NumericalSemigroup,
)
from oracles import (
    brute_factorizations,
    gaps_to_generators,
    genus_tree_semigroups,
    random_generators,
    sieve_invariants,
)

WORKED = (13, 45, 72, 79, 99)


def test_constructor_reduces_to_minimal_generators():
    S = NumericalSemigroup((4, 6, 8, 9, 13))
    assert S.generators == (4, 6, 9)
    T = NumericalSemigroup((9, 6, 4, 6))
    assert T.generators == (4, 6, 9)


def test_constructor_rejects_bad_input():
    with pytest.raises(EmptyGeneratorsError):
        NumericalSemigroup(())
    with pytest.raises(GcdNotOneError):
        NumericalSemigroup((4, 6))
    with pytest.raises(GcdNotOneError):
        NumericalSemigroup((6,))
    with pytest.raises(ValueError):
        NumericalSemigroup((0, 5))
    with pytest.raises(GeneratorTooLargeError):
        NumericalSemigroup((2, 2**31 + 1))


def test_trivial_semigroup_conventions():
    N = NumericalSemigroup((1,))
    assert N.is_full()
    assert N.generators == (1,)
    assert N.frobenius == -1
    assert N.genus == 0
    assert N.type == 1
    assert N.pseudo_frobenius() == (-1,)
    assert N.contains(0) and N.contains(7) and not N.contains(-1)


def test_worked_example_invariants():
    S = NumericalSemigroup(WORKED)
    assert S.multiplicity == 13
    assert S.embedding_dimension == 5
    assert S.frobenius == 244
    assert S.genus == 126
    assert S.type == 4
    assert S.pseudo_frobenius() == (59, 185, 212, 244)


def test_apery_set_structure():
    S = NumericalSemigroup((5, 7, 9))
    ap = S.apery_set(5)
    assert len(ap) == 5
    assert ap[0] == 0
    for r, w in enumerate(ap):
        assert w % 5 == r
        assert S.contains(w)
        assert not S.contains(w - 5)
    assert S.frobenius == max(ap) - 5


def test_invariants_match_sieve_on_census():
    for gaps in genus_tree_semigroups(8):
        gens = gaps_to_generators(gaps)
        S = NumericalSemigroup(gens)
        assert S.generators == gens
        assert S.genus == len(gaps)
        assert S.frobenius == (max(gaps) if gaps else -1)
        assert set(S.gaps()) == set(gaps)


def test_invariants_match_sieve_random():
    rng = random.Random(20260824)
    for _ in range(40):
        gens = random_generators(rng, frobenius_cap=600)
        S = NumericalSemigroup(gens)
        members, frob, genus, pf, contains = sieve_invariants(gens)
        assert S.frobenius == frob
        assert S.genus == genus
        assert S.pseudo_frobenius() == pf
        for x in range(frob + 2):
            assert S.contains(x) == contains(x)


def test_member_table_and_mask_agree():
    S = NumericalSemigroup((7, 11, 13))
    table = S.member_table()
    mask = S.member_mask()
    for x in range(S.window()):
        assert table[x] == S.contains(x)
        assert bool((mask >> x) & 1) == table[x]


def test_elements_below():
    S = NumericalSemigroup((5, 7, 9))
    assert list(S.elements_below(15)) == [0, 5, 7, 9, 10, 12, 14]
    assert list(S.elements_below(0)) == []


def test_factorizations_match_bruteforce():
    S = NumericalSemigroup((5, 7, 9))
    for x in (0, 5, 14, 31, 45, 61):
        assert sorted(S.factorization_tuples(x)) == brute_factorizations(
            (5, 7, 9), x
        )
    assert S.factorization_tuples(4) == []
    assert S.factorization_tuples(-3) == []


def test_factorization_support_restriction():
    S = NumericalSemigroup((5, 7, 9))
    # support (0, 2) forbids the middle generator
    full = S.factorization_tuples(45)
    restricted = S.factorization_tuples(45, support=(0, 2))
    assert restricted == [t for t in full if t[1] == 0]


def test_leq_partial_order():
    S = NumericalSemigroup((5, 7, 9))
    assert S.leq(5, 12)
    assert S.leq(0, 9)
    assert not S.leq(5, 11)
    assert not S.leq(7, 5)


def test_gaps_and_pf_consistency():
    rng = random.Random(7)
    for _ in range(20):
        gens = random_generators(rng, frobenius_cap=300)
        S = NumericalSemigroup(gens)
        gaps = set(S.gaps())
        assert len(gaps) == S.genus
        pf = S.pseudo_frobenius()
        assert set(pf) <= gaps
        assert pf[-1] == S.frobenius
        assert list(pf) == sorted(pf)
        for f in pf:
            assert all(S.contains(f + n) for n in gens)
        for g in gaps - set(pf):
            assert any(not S.contains(g + n) for n in gens)
