"""Row-factorization matrices and the induced splitting of the
pseudo-Frobenius set.

For a pseudo-Frobenius number f, an additive matrix has row i listing a
factorization of f + n_i with the diagonal entry replaced by -1, so every
row evaluates to f.  Given a nearly Gorenstein vector (f_1, ..., f_nu) and
f outside its entries, a subtractive matrix has row i factoring
n_i + f_i - f, again with diagonal -1, so row i evaluates to f_i - f.
Matrices of either kind are Cartesian products of independent row choices;
enumeration order is row-major over factorization lists, which are
themselves in descending lexicographic order.

Matrix positions inside `entries` are plain 0-based Python indices; the
index fields of Witness and the keys of MaxGapTable are 1-based generator
positions, matching the usual n_1 < ... < n_nu notation.
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Sequence

from .core import NumericalSemigroup
from .errors import (
    EmbeddingDimensionError,
    EnumerationCapError,
    MismatchedPairError,
    NotPseudoFrobeniusError,
    VectorEntryError,
)
from .gorenstein import NGVector, is_ng_vector

DEFAULT_MATRIX_CAP = 10**6
MATRIX_CAP_ENV = "SGP_MATRIX_CAP"


class RFKind(Enum):
    PLUS = "plus"
    MINUS = "minus"


@dataclass(frozen=True)
class RFMatrix:
    """One row-factorization matrix; `ng` carries the vector entries for
    the subtractive kind and is None otherwise."""

    kind: RFKind
    f: int
    generators: tuple[int, ...]
    entries: tuple[tuple[int, ...], ...]
    ng: tuple[int, ...] | None = None


def resolve_matrix_cap(cap: int | None = None) -> int:
    if cap is not None:
        return cap
    return int(os.environ.get(MATRIX_CAP_ENV, DEFAULT_MATRIX_CAP))


def _vector_entries(ng: NGVector | Sequence[int]) -> tuple[int, ...]:
    if isinstance(ng, NGVector):
        return ng.entries
    return tuple(ng)


def _rows_with_diagonal(factorizations: list[tuple[int, ...]], i: int) -> list[tuple[int, ...]]:
    rows = []
    for coeffs in factorizations:
        assert coeffs[i] == 0
        rows.append(coeffs[:i] + (-1,) + coeffs[i + 1 :])
    return rows


def plus_row_lists(S: NumericalSemigroup, f: int) -> list[list[tuple[int, ...]]]:
    """Per-position row choices for the additive matrices of f."""
    if f not in S.pseudo_frobenius():
        raise NotPseudoFrobeniusError(f"{f} is not a pseudo-Frobenius number")
    return [
        _rows_with_diagonal(S.factorization_tuples(f + n), i)
        for i, n in enumerate(S.generators)
    ]


def minus_row_lists(
    S: NumericalSemigroup, ng: NGVector | Sequence[int], f: int
) -> list[list[tuple[int, ...]]]:
    """Per-position row choices for the subtractive matrices of f."""
    entries = _vector_entries(ng)
    if not is_ng_vector(S, entries):
        raise MismatchedPairError(f"{entries} is not a nearly Gorenstein vector of {S!r}")
    if f not in S.pseudo_frobenius():
        raise NotPseudoFrobeniusError(f"{f} is not a pseudo-Frobenius number")
    if f in entries:
        raise VectorEntryError(f"{f} occurs in the vector {entries}; no subtractive matrix")
    return [
        _rows_with_diagonal(S.factorization_tuples(n + fi - f), i)
        for i, (n, fi) in enumerate(zip(S.generators, entries))
    ]


def _count(row_lists: list[list[tuple[int, ...]]]) -> int:
    return math.prod(len(rows) for rows in row_lists)


def _iter_matrices(
    kind: RFKind,
    f: int,
    generators: tuple[int, ...],
    row_lists: list[list[tuple[int, ...]]],
    ng: tuple[int, ...] | None,
) -> Iterator[RFMatrix]:
    for combo in itertools.product(*row_lists):
        yield RFMatrix(kind, f, generators, combo, ng)


def rf_plus_count(S: NumericalSemigroup, f: int) -> int:
    return _count(plus_row_lists(S, f))


def rf_minus_count(S: NumericalSemigroup, ng: NGVector | Sequence[int], f: int) -> int:
    return _count(minus_row_lists(S, ng, f))


def rf_plus_iter(S: NumericalSemigroup, f: int) -> Iterator[RFMatrix]:
    yield from _iter_matrices(RFKind.PLUS, f, S.generators, plus_row_lists(S, f), None)


def rf_minus_iter(
    S: NumericalSemigroup, ng: NGVector | Sequence[int], f: int
) -> Iterator[RFMatrix]:
    entries = _vector_entries(ng)
    yield from _iter_matrices(
        RFKind.MINUS, f, S.generators, minus_row_lists(S, ng, f), entries
    )


def rf_plus(S: NumericalSemigroup, f: int, cap: int | None = None) -> list[RFMatrix]:
    """All additive matrices of f, or EnumerationCapError carrying the
    exact count when there are more than the cap allows."""
    rows = plus_row_lists(S, f)
    count = _count(rows)
    cap = resolve_matrix_cap(cap)
    if count > cap:
        raise EnumerationCapError(count, cap)
    return list(_iter_matrices(RFKind.PLUS, f, S.generators, rows, None))


def rf_minus(
    S: NumericalSemigroup, ng: NGVector | Sequence[int], f: int, cap: int | None = None
) -> list[RFMatrix]:
    """All subtractive matrices of f for the given vector, cap as above."""
    entries = _vector_entries(ng)
    rows = minus_row_lists(S, entries, f)
    count = _count(rows)
    cap = resolve_matrix_cap(cap)
    if count > cap:
        raise EnumerationCapError(count, cap)
    return list(_iter_matrices(RFKind.MINUS, f, S.generators, rows, entries))


def check_coppie(A: RFMatrix, B: RFMatrix) -> bool:
    """Product-zero compatibility of an (additive, subtractive) pair for
    the same pseudo-Frobenius number: A[j][k] * B[k][j] = 0 off the
    diagonal."""
    if A.kind is not RFKind.PLUS or B.kind is not RFKind.MINUS:
        raise MismatchedPairError("expected an (additive, subtractive) pair in that order")
    if A.generators != B.generators:
        raise MismatchedPairError("matrices belong to different semigroups")
    if A.f != B.f:
        raise MismatchedPairError(f"matrices factor different numbers: {A.f} vs {B.f}")
    nu = len(A.generators)
    for j in range(nu):
        for k in range(nu):
            if j != k and A.entries[j][k] != 0 and B.entries[k][j] != 0:
                return False
    return True


def zero_pattern(M: RFMatrix) -> tuple[tuple[bool, ...], ...]:
    """Boolean mask of the zero entries, diagonal excluded."""
    return tuple(
        tuple(i != j and M.entries[i][j] == 0 for j in range(len(row)))
        for i, row in enumerate(M.entries)
    )


# ----------------------------------------------------------------------
# extremal gaps of the form lambda * n_j - n_i


@dataclass(frozen=True)
class MaxGapTable:
    """For each ordered pair of positions (i, j), i != j, 1-based:
    lam[(i, j)] is the largest lambda with lambda * n_j - n_i outside S,
    and gap[(i, j)] = lam[(i, j)] * n_j - n_i."""

    generators: tuple[int, ...]
    lam: dict[tuple[int, int], int]
    gap: dict[tuple[int, int], int]


def max_gap_table(S: NumericalSemigroup) -> MaxGapTable:
    """Largest non-member of the form lambda * n_j - n_i per pair.

    lambda = 1 always qualifies (n_j - n_i is negative or a non-member,
    as both are minimal generators), so the maximum exists; the scan runs
    downward because the qualifying set need not be an interval.
    """
    if S.embedding_dimension < 2:
        raise EmbeddingDimensionError("need at least 2 generators")
    gens = S.generators
    F = S.frobenius
    lam: dict[tuple[int, int], int] = {}
    gap: dict[tuple[int, int], int] = {}
    for i, ni in enumerate(gens, start=1):
        for j, nj in enumerate(gens, start=1):
            if i == j:
                continue
            k = -((F + ni) // -nj) + 1
            while k >= 1:
                if not S.contains(k * nj - ni):
                    break
                k -= 1
            assert k >= 1
            lam[(i, j)] = k
            gap[(i, j)] = k * nj - ni
    return MaxGapTable(gens, lam, gap)


# ----------------------------------------------------------------------
# splitting of the pseudo-Frobenius numbers outside a vector


@dataclass(frozen=True)
class Witness:
    """A single-generator factorization certifying membership in the
    first class: for side "plus", f + n_i = lam * n_j; for side "minus",
    n_i + f_i - f = lam * n_j.  Positions i, j are 1-based."""

    side: str
    i: int
    j: int
    lam: int


@dataclass(frozen=True)
class PFClassification:
    """Split of the pseudo-Frobenius numbers outside the vector entries.

    pf1 holds those with some matrix row carrying nu - 2 zeroes
    (equivalently: a single-generator factorization witness); pf2 the
    rest.  All witnesses are recorded per number.
    """

    entries: tuple[int, ...]
    pf1: tuple[int, ...]
    pf2: tuple[int, ...]
    witnesses: dict[int, tuple[Witness, ...]]


def classify_pf(S: NumericalSemigroup, ng: NGVector | Sequence[int]) -> PFClassification:
    """Classify every pseudo-Frobenius number outside the vector entries.

    A row with nu - 2 zeroes exists iff the row value is an exact multiple
    of a single generator, so the scan is O(nu^2) divisibility checks per
    number and never enumerates matrices.
    """
    entries = _vector_entries(ng)
    if not is_ng_vector(S, entries):
        raise MismatchedPairError(f"{entries} is not a nearly Gorenstein vector of {S!r}")
    gens = S.generators
    pf1: list[int] = []
    pf2: list[int] = []
    witnesses: dict[int, tuple[Witness, ...]] = {}
    entry_set = set(entries)
    for f in S.pseudo_frobenius():
        if f in entry_set:
            continue
        found: list[Witness] = []
        for i, ni in enumerate(gens, start=1):
            plus_value = f + ni
            minus_value = ni + entries[i - 1] - f
            for j, nj in enumerate(gens, start=1):
                if i == j:
                    continue
                if plus_value % nj == 0:
                    found.append(Witness("plus", i, j, plus_value // nj))
                if minus_value % nj == 0 and minus_value > 0:
                    found.append(Witness("minus", i, j, minus_value // nj))
        witnesses[f] = tuple(found)
        (pf1 if found else pf2).append(f)
    return PFClassification(entries, tuple(pf1), tuple(pf2), witnesses)


@dataclass(frozen=True)
class MuBound:
    """The per-position counts mu_s = #{i : gap[(i, s)] in pf1} for
    s = 1..5 (mus[s-1]) and the induced bound on |pf1|."""

    mus: tuple[int, ...]
    bound: int


def mu_values(S: NumericalSemigroup, classification: PFClassification) -> MuBound:
    """Counts of extremal gaps landing in the first class, and the bound
    38 - sum(C(mu_s - 1, 2)) they induce; 5-generated semigroups only."""
    if S.embedding_dimension != 5:
        raise EmbeddingDimensionError("mu bound is specific to 5 generators")
    table = max_gap_table(S)
    pf1 = set(classification.pf1)
    mus = tuple(
        sum(1 for i in range(1, 6) if i != s and table.gap[(i, s)] in pf1)
        for s in range(1, 6)
    )
    bound = 38 - sum(math.comb(max(mu - 1, 0), 2) for mu in mus)
    return MuBound(mus, bound)
