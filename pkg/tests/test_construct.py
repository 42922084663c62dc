"""Duplication, towers, and the named extremal families."""

import pytest

from numsgps import (
    DuplicationSpec,
    Family,
    FamilyParams,
    FamilyPreconditionError,
    NotAlmostSymmetricError,
    NotAMemberError,
    NotAnIdealError,
    NotOddError,
    NumericalSemigroup,
    ParameterTooSmallError,
    RelativeIdeal,
    backelin,
    build_family,
    duplication_tower,
    family_dim6,
    ideal_from_generators,
    is_almost_symmetric,
    is_nearly_gorenstein,
    is_symmetric,
    numerical_duplication,
    smallest_odd_generator,
)
from numsgps.construct import dim6_progression, dim6_raw_generators


def test_duplication_spec_validation():
    S = NumericalSemigroup((3, 4, 5))
    M = RelativeIdeal.maximal_ideal(S)
    with pytest.raises(NotOddError):
        DuplicationSpec(S, M, 4)
    with pytest.raises(NotAMemberError):
        DuplicationSpec(S, M, 1)
    bad = RelativeIdeal((0, 1), 5)
    assert not bad.is_ideal_of(S)
    with pytest.raises(NotAnIdealError):
        DuplicationSpec(S, bad, 3)


def test_duplication_example():
    S = NumericalSemigroup((3, 4, 5))
    D = numerical_duplication(
        DuplicationSpec(S, RelativeIdeal.maximal_ideal(S), 3)
    )
    assert D.generators == (6, 8, 9, 10, 11, 13)
    assert D.frobenius == 2 * S.frobenius + 3
    assert D.type == 2 * S.type + 1
    assert is_almost_symmetric(D)


def test_duplication_membership_identity():
    S = NumericalSemigroup((5, 7, 9))
    E = ideal_from_generators(S, (7, 10))
    for b in (5, 7, 19):
        D = numerical_duplication(DuplicationSpec(S, E, b))
        for x in range(D.window()):
            if x % 2 == 0:
                assert D.contains(x) == S.contains(x // 2)
            else:
                assert D.contains(x) == ((x - b) // 2 in E)


def test_duplication_frobenius_law():
    # F(2S u (2E + b)) = 2 * (largest integer outside E) + b
    S = NumericalSemigroup((4, 9, 11))
    for elems in ((4, 9), (9, 11), (8, 13)):
        E = ideal_from_generators(S, elems)
        gap_top = max(x for x in range(E.conductor) if x not in E)
        for b in smallest_b_values(S, 2):
            D = numerical_duplication(DuplicationSpec(S, E, b))
            assert D.frobenius == 2 * gap_top + b


def smallest_b_values(S, count):
    out = []
    x = 1
    while len(out) < count:
        if x % 2 == 1 and S.contains(x):
            out.append(x)
        x += 2
    return out


def test_duplication_type_law_on_almost_symmetric_bases():
    for gens in ((3, 4, 5), (4, 9, 11), (5, 6, 7, 8, 9), (6, 8, 9, 10, 11, 13)):
        S = NumericalSemigroup(gens)
        assert is_almost_symmetric(S)
        M = RelativeIdeal.maximal_ideal(S)
        for b in smallest_b_values(S, 2):
            D = numerical_duplication(DuplicationSpec(S, M, b))
            assert D.type == 2 * S.type + 1
            assert D.embedding_dimension == 2 * S.embedding_dimension
            assert is_almost_symmetric(D)


def test_tower_on_small_base():
    S = NumericalSemigroup((3, 4, 5))
    chain = duplication_tower(S, 2)
    assert [T.embedding_dimension for T in chain] == [3, 6, 12]
    assert [T.type for T in chain] == [2, 5, 11]
    excess0 = S.type - 2 * S.embedding_dimension
    for i, T in enumerate(chain):
        assert T.type - 2 * T.embedding_dimension == (
            (1 << i) * excess0 + (1 << i) - 1
        )
        assert is_almost_symmetric(T)


def test_tower_rejects_non_almost_symmetric_seed():
    S = NumericalSemigroup((5, 6, 8))
    assert not is_almost_symmetric(S)
    with pytest.raises(NotAlmostSymmetricError):
        duplication_tower(S, 1)


def test_tower_from_trivial_seed():
    N = NumericalSemigroup((1,))
    chain = duplication_tower(N, 2)
    assert chain[1].generators == (2, 3)
    assert is_symmetric(chain[1])
    assert is_almost_symmetric(chain[2])


def test_smallest_odd_generator():
    assert smallest_odd_generator(NumericalSemigroup((3, 4, 5))) == 3
    assert smallest_odd_generator(NumericalSemigroup((4, 6, 9))) == 9


def test_backelin_examples():
    B3 = backelin(3)
    assert B3.generators == (124, 127, 134, 135)
    assert not is_nearly_gorenstein(B3)
    B2 = backelin(2)
    assert B2.embedding_dimension == 4
    assert B2.type < B3.type
    with pytest.raises(ParameterTooSmallError):
        backelin(1)


def test_dim6_example():
    S = family_dim6(2, 4, 3)
    assert dim6_raw_generators(2, 4, 3) == (30, 33, 51, 34, 37, 55)
    assert S.generators == (30, 33, 34, 37, 51, 55)
    progression = dim6_progression(2, 4, 3)
    assert progression == (69, 73)
    pf = S.pseudo_frobenius()
    for value in progression:
        assert value in pf
    assert is_almost_symmetric(S)
    assert S.type == 6


def test_dim6_preconditions():
    with pytest.raises(FamilyPreconditionError) as exc:
        family_dim6(3, 9, 3)
    assert "gcd" in exc.value.condition
    with pytest.raises(FamilyPreconditionError):
        family_dim6(6, 37, 6)
    with pytest.raises(FamilyPreconditionError):
        family_dim6(2, 3, 2)
    S = family_dim6(4, 16, 5)
    assert S.embedding_dimension == 6


def test_ideal_from_generators():
    S = NumericalSemigroup((3, 4, 5))
    E = ideal_from_generators(S, (4, 7))
    assert E.is_ideal_of(S)
    assert E.min_element() == 4
    for x in range(30):
        expected = (x - 4 >= 0 and S.contains(x - 4)) or (
            x - 7 >= 0 and S.contains(x - 7)
        )
        assert (x in E) == expected


def test_build_family_dispatch():
    assert build_family(FamilyParams(Family.BACKELIN, T=3)).generators == (
        124,
        127,
        134,
        135,
    )
    assert build_family(FamilyParams(Family.DIM6, T=2, d=4, k=3)).generators == (
        30,
        33,
        34,
        37,
        51,
        55,
    )
    chain = build_family(
        FamilyParams(Family.DUP_TOWER, depth=1),
        base=NumericalSemigroup((3, 4, 5)),
    )
    assert chain[1].generators == (6, 8, 9, 10, 11, 13)
    with pytest.raises(ValueError):
        build_family(FamilyParams(Family.DUP_TOWER, depth=1))


def test_family_round_trip():
    # regenerating from the printed generators reproduces every invariant
    for S in (
        backelin(3),
        family_dim6(2, 4, 3),
        numerical_duplication(
            DuplicationSpec(
                NumericalSemigroup((3, 4, 5)),
                RelativeIdeal.maximal_ideal(NumericalSemigroup((3, 4, 5))),
                3,
            )
        ),
    ):
        T = NumericalSemigroup(S.generators)
        assert T.generators == S.generators
        assert T.frobenius == S.frobenius
        assert T.genus == S.genus
        assert T.type == S.type
        assert T.pseudo_frobenius() == S.pseudo_frobenius()
