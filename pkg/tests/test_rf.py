"""Row-factorization matrices, pair compatibility, and PF splitting."""

import pytest

from numsgps import (
    EmbeddingDimensionError,
    EnumerationCapError,
    MismatchedPairError,
    NotPseudoFrobeniusError,
    NumericalSemigroup,
    RFKind,
    VectorEntryError,
    check_coppie,
    classify_pf,
    is_nearly_gorenstein,
    max_gap_table,
    mu_values,
    ng_vectors,
    resolve_matrix_cap,
    rf_minus,
    rf_minus_count,
    rf_minus_iter,
    rf_plus,
    rf_plus_count,
    rf_plus_iter,
    zero_pattern,
)
from oracles import (
    brute_factorizations,
    brute_rf_minus,
    brute_rf_plus,
    gaps_to_generators,
    genus_tree_semigroups,
)

WORKED = (13, 45, 72, 79, 99)


def census(genus_max):
    for gaps in genus_tree_semigroups(genus_max):
        if gaps:
            yield NumericalSemigroup(gaps_to_generators(gaps))


def test_rf_plus_row_equations():
    S = NumericalSemigroup(WORKED)
    for f in S.pseudo_frobenius():
        for M in rf_plus(S, f):
            assert M.kind is RFKind.PLUS
            assert M.f == f
            for i, row in enumerate(M.entries):
                assert row[i] == -1
                assert all(c >= 0 for j, c in enumerate(row) if j != i)
                assert sum(c * n for c, n in zip(row, WORKED)) == f


def test_rf_minus_row_equations():
    S = NumericalSemigroup(WORKED)
    vec = ng_vectors(S)[1]
    f = 59
    for M in rf_minus(S, vec, f):
        assert M.kind is RFKind.MINUS
        assert M.f == f
        for i, row in enumerate(M.entries):
            assert row[i] == -1
            assert sum(c * n for c, n in zip(row, WORKED)) == vec.entries[i] - f


def test_rf_plus_matches_bruteforce_census():
    checked = 0
    for S in census(7):
        for f in S.pseudo_frobenius():
            if rf_plus_count(S, f) > 300:
                continue
            got = sorted(M.entries for M in rf_plus(S, f))
            want = sorted(brute_rf_plus(S.generators, f))
            assert got == want
            checked += 1
    assert checked > 100


def test_rf_minus_matches_bruteforce_census():
    checked = 0
    for S in census(7):
        if not is_nearly_gorenstein(S):
            continue
        pf = S.pseudo_frobenius()
        for vec in ng_vectors(S)[:3]:
            for f in pf:
                if f in vec.entries:
                    continue
                if rf_minus_count(S, vec, f) > 300:
                    continue
                got = sorted(M.entries for M in rf_minus(S, vec, f))
                want = sorted(brute_rf_minus(S.generators, vec.entries, f))
                assert got == want
                checked += 1
    assert checked > 30


def test_counts_match_enumeration():
    S = NumericalSemigroup(WORKED)
    vec = ng_vectors(S)[0]
    for f in S.pseudo_frobenius():
        assert rf_plus_count(S, f) == len(rf_plus(S, f))
        assert rf_plus_count(S, f) == len(list(rf_plus_iter(S, f)))
        if f not in vec.entries:
            assert rf_minus_count(S, vec, f) == len(rf_minus(S, vec, f))


def test_enumeration_cap():
    S = NumericalSemigroup((5, 6, 7, 8, 9))
    count = rf_plus_count(S, 4)
    assert count == 4
    with pytest.raises(EnumerationCapError) as exc:
        rf_plus(S, 4, cap=3)
    assert exc.value.count == 4
    assert exc.value.cap == 3
    assert len(rf_plus(S, 4, cap=4)) == 4


def test_matrix_cap_env_override(monkeypatch):
    assert resolve_matrix_cap() == 10**6
    assert resolve_matrix_cap(55) == 55
    monkeypatch.setenv("SGP_MATRIX_CAP", "123")
    assert resolve_matrix_cap() == 123


def test_rf_plus_rejects_non_pf():
    S = NumericalSemigroup(WORKED)
    with pytest.raises(NotPseudoFrobeniusError):
        rf_plus(S, 60)


def test_rf_minus_rejects_vector_entry():
    S = NumericalSemigroup(WORKED)
    vec = ng_vectors(S)[0]
    with pytest.raises(VectorEntryError):
        rf_minus(S, vec, 244)


def test_check_coppie_pair_validation():
    S = NumericalSemigroup(WORKED)
    vec = ng_vectors(S)[0]
    A = rf_plus(S, 59)[0]
    B = rf_minus(S, vec, 59)[0]
    assert check_coppie(A, B)
    with pytest.raises(MismatchedPairError):
        check_coppie(B, A)
    with pytest.raises(MismatchedPairError):
        check_coppie(A, rf_minus(S, vec, 185)[0])


def test_check_coppie_holds_on_census():
    # the compatibility A[j][k] * B[k][j] == 0 for every additive and
    # subtractive pair over the same avoided pseudo-Frobenius number
    checked = 0
    for S in census(7):
        if not is_nearly_gorenstein(S):
            continue
        pf = S.pseudo_frobenius()
        for vec in ng_vectors(S)[:2]:
            for f in pf:
                if f in vec.entries:
                    continue
                plus = rf_plus(S, f, cap=10**6)
                minus = rf_minus(S, vec, f, cap=10**6)
                if len(plus) * len(minus) > 200:
                    continue
                for A in plus:
                    for B in minus:
                        assert check_coppie(A, B)
                        checked += 1
    assert checked > 100


def test_zero_pattern():
    S = NumericalSemigroup(WORKED)
    M = rf_plus(S, 59)[0]
    pattern = zero_pattern(M)
    for i, row in enumerate(M.entries):
        for j, c in enumerate(row):
            if i == j:
                assert not pattern[i][j]
            else:
                assert pattern[i][j] == (c == 0)


def test_max_gap_table_defining_property():
    for S in (NumericalSemigroup(WORKED), NumericalSemigroup((5, 7, 9, 11))):
        table = max_gap_table(S)
        gens = S.generators
        nu = len(gens)
        for i in range(1, nu + 1):
            for j in range(1, nu + 1):
                if i == j:
                    continue
                lam = table.lam[(i, j)]
                value = lam * gens[j - 1] - gens[i - 1]
                assert table.gap[(i, j)] == value
                assert lam >= 1
                assert not S.contains(value)
                top = (S.frobenius + gens[i - 1]) // gens[j - 1] + 2
                for k in range(lam + 1, top + 1):
                    assert S.contains(k * gens[j - 1] - gens[i - 1])


def test_classify_pf_worked_example():
    S = NumericalSemigroup(WORKED)
    vec = ng_vectors(S)[1]
    cls = classify_pf(S, vec)
    assert cls.entries == vec.entries
    assert cls.pf1 == (59,)
    assert cls.pf2 == ()
    for w in cls.witnesses[59]:
        if w.side == "plus":
            assert 59 + WORKED[w.i - 1] == w.lam * WORKED[w.j - 1]
        else:
            assert (
                WORKED[w.i - 1] + vec.entries[w.i - 1] - 59
                == w.lam * WORKED[w.j - 1]
            )
        assert w.lam >= 1 and w.i != w.j


def test_classify_pf_rejects_bad_vector():
    S = NumericalSemigroup(WORKED)
    with pytest.raises(MismatchedPairError):
        classify_pf(S, (244, 244, 244, 244, 244))


def test_classify_pf_matches_row_scan():
    # membership in the first class == some additive or subtractive row
    # with a single nonzero off-diagonal entry; rows are shared across
    # matrices, so scanning per-position factorizations is exhaustive
    checked = 0
    for S in census(7):
        if not is_nearly_gorenstein(S) or S.embedding_dimension < 3:
            continue
        gens = S.generators
        for vec in ng_vectors(S)[:2]:
            cls = classify_pf(S, vec)
            for f in cls.pf1 + cls.pf2:
                single = False
                for i, n in enumerate(gens):
                    others = gens[:i] + gens[i + 1 :]
                    for value in (f + n, vec.entries[i] - f + n):
                        for combo in brute_factorizations(others, value):
                            if sum(1 for c in combo if c > 0) == 1:
                                single = True
                assert (f in cls.pf1) == single
                checked += 1
    assert checked > 20


def test_mu_values_worked_example():
    S = NumericalSemigroup(WORKED)
    vec = ng_vectors(S)[1]
    cls = classify_pf(S, vec)
    result = mu_values(S, cls)
    assert len(result.mus) == 5
    table = max_gap_table(S)
    pf1 = set(cls.pf1)
    for s in range(1, 6):
        expect = sum(1 for i in range(1, 6) if i != s and table.gap[(i, s)] in pf1)
        assert result.mus[s - 1] == expect
    assert result.bound <= 38
    assert len(cls.pf1) <= result.bound


def test_mu_values_requires_five_generators():
    S = NumericalSemigroup((3, 4, 5))
    vec = ng_vectors(S)[0]
    with pytest.raises(EmbeddingDimensionError):
        mu_values(S, classify_pf(S, vec))
