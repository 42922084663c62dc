"""Builders for explicit semigroup families and the numerical duplication.

Every builder re-proves the properties it promises on the concrete
instance it returns; a violated property raises FamilyPropertyError
instead of returning a semigroup that silently lacks it.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import reduce
from math import gcd

from .core import NumericalSemigroup
from .errors import (
    EmptyGeneratorsError,
    FamilyPreconditionError,
    FamilyPropertyError,
    NotAlmostSymmetricError,
    NotAMemberError,
    NotAnIdealError,
    NotOddError,
    ParameterTooSmallError,
)
from .gorenstein import RelativeIdeal, is_almost_symmetric
from .rf import plus_row_lists


@dataclass(frozen=True)
class DuplicationSpec:
    """Input triple for the numerical duplication 2*S union (2*E + b).

    base is the semigroup S, ideal an integral ideal E of S (closed under
    adding elements of S), and b an odd element of S.  Validation happens
    here so an instance is usable as soon as it exists.
    """

    base: NumericalSemigroup
    ideal: RelativeIdeal
    b: int

    def __post_init__(self) -> None:
        if self.b % 2 == 0:
            raise NotOddError(f"b = {self.b} must be odd")
        if self.b < 0 or self.b not in self.base:
            raise NotAMemberError(f"b = {self.b} does not belong to the semigroup")
        if not self.ideal.is_ideal_of(self.base):
            raise NotAnIdealError(
                "the given set is not an ideal of the semigroup contained in it"
            )


def ideal_generators(S: NumericalSemigroup, E: RelativeIdeal) -> list[int]:
    """Minimal generators of an integral ideal: elements e with e - n
    outside the ideal for every generator n.  Anything at or above
    conductor + multiplicity is reducible, which bounds the scan."""
    top = E.conductor + S.multiplicity
    return [
        e
        for e in E.elements_in(E.min_element(), top)
        if all(not E.contains(e - n) for n in S.generators)
    ]


def numerical_duplication(spec: DuplicationSpec) -> NumericalSemigroup:
    """The semigroup 2*S union (2*E + b) for S = base, E = ideal.

    The doubled generators of S together with the shifted doubles of the
    ideal generators of E generate the union; the constructor prunes them
    to a minimal system.  The element-level identity (even x: x/2 in S;
    odd x: (x - b)/2 in E) is then checked on a full window.  When E is
    the maximal ideal the embedding dimension must double, and when the
    base is additionally almost symmetric the result must be almost
    symmetric of type 2 t + 1; both facts are asserted here.  The trivial
    base N is excluded from those assertions: its duplication is
    two-generated and symmetric, so the type law genuinely fails there.
    """
    S, E, b = spec.base, spec.ideal, spec.b
    raw = {2 * n for n in S.generators} | {2 * e + b for e in ideal_generators(S, E)}
    dup = NumericalSemigroup(sorted(raw))

    for x in range(dup.window()):
        if x % 2 == 0:
            expected = S.contains(x // 2)
        else:
            expected = E.contains((x - b) // 2)
        if dup.contains(x) != expected:
            raise FamilyPropertyError(
                f"duplication identity fails at {x}: constructed semigroup "
                f"{'contains' if dup.contains(x) else 'misses'} it"
            )

    if not S.is_full() and E == RelativeIdeal.maximal_ideal(S):
        if dup.embedding_dimension != 2 * S.embedding_dimension:
            raise FamilyPropertyError(
                f"embedding dimension {dup.embedding_dimension} instead of "
                f"{2 * S.embedding_dimension} for a maximal-ideal duplication"
            )
        if is_almost_symmetric(S):
            if not is_almost_symmetric(dup):
                raise FamilyPropertyError(
                    "duplication of an almost symmetric base lost almost symmetry"
                )
            if dup.type != 2 * S.type + 1:
                raise FamilyPropertyError(
                    f"type {dup.type} instead of {2 * S.type + 1}"
                )
    return dup


def smallest_odd_generator(S: NumericalSemigroup) -> int:
    # gcd 1 forces an odd generator, so the scan always succeeds
    for n in S.generators:
        if n % 2 == 1:
            return n
    raise FamilyPropertyError("no odd generator found")


def duplication_tower(
    S: NumericalSemigroup,
    depth: int,
    b_selector=None,
) -> list[NumericalSemigroup]:
    """Iterated maximal-ideal duplication [S, S_1, ..., S_depth].

    Each level S_i duplicates S_{i-1} with E = M(S_{i-1}) and b chosen by
    b_selector (default: the smallest odd generator).  Almost symmetry is
    asserted at every level, and for a proper seed the excess follows
    type(S_i) - 2 nu(S_i) = 2^i (type(S) - 2 nu(S)) + 2^i - 1, asserted
    as well.  The trivial seed N is accepted but skips the excess law,
    which fails for it.
    """
    if depth < 0:
        raise ValueError(f"depth must be nonnegative, got {depth}")
    if not (S.is_full() or is_almost_symmetric(S)):
        raise NotAlmostSymmetricError(f"{S!r} is not almost symmetric")
    if b_selector is None:
        b_selector = smallest_odd_generator
    chain = [S]
    excess = S.type - 2 * S.embedding_dimension
    for level in range(1, depth + 1):
        prev = chain[-1]
        spec = DuplicationSpec(prev, RelativeIdeal.maximal_ideal(prev), b_selector(prev))
        nxt = numerical_duplication(spec)
        if not is_almost_symmetric(nxt):
            raise FamilyPropertyError(
                f"level {level} of the tower is not almost symmetric"
            )
        if not S.is_full():
            want = (1 << level) * excess + (1 << level) - 1
            got = nxt.type - 2 * nxt.embedding_dimension
            if got != want:
                raise FamilyPropertyError(
                    f"excess {got} at tower level {level}, expected {want}"
                )
        chain.append(nxt)
    return chain


def _zero_shape(rows) -> tuple:
    return tuple(tuple(c == 0 for c in row) for row in rows)


def _require_rows(S: NumericalSemigroup, target: int, rows, label: str) -> None:
    lists = plus_row_lists(S, target)
    for i, row in enumerate(rows):
        if row not in lists[i]:
            raise FamilyPropertyError(
                f"{label}: predicted row {row} for generator "
                f"{S.generators[i]} is not a factorization of {target} + it"
            )


def backelin(T: int) -> NumericalSemigroup:
    """The four-generated family <s, s+3, s+3T+1, s+3T+2> with
    s = (3T+2)^2 + 3, whose type grows with T.

    Asserts the advertised shape: with f = (3T+3) n_4 - n_1, every
    f - 3 lambda for lambda = 1..T is pseudo-Frobenius and owns a row
    factorization matrix with rows

        (-1, 0, 3L, 3T+3-3L)
        (0, -1, 3L-3, 3T+6-3L)
        (T+4+L, 2T-L, -1, 0)
        (2T+3+L, T-L, 1, -1)

    whose zero pattern is constant on the interior range 2..T-1 (the
    boundary values turn single entries to zero).
    """
    if T < 2:
        raise ParameterTooSmallError(f"family parameter T = {T} must be at least 2")
    s = (3 * T + 2) ** 2 + 3
    gens = (s, s + 3, s + 3 * T + 1, s + 3 * T + 2)
    S = NumericalSemigroup(gens)
    if S.generators != gens:
        raise FamilyPropertyError(
            f"formula generators {gens} are not a minimal system"
        )
    f = (3 * T + 3) * gens[3] - gens[0]
    pf = set(S.pseudo_frobenius())
    patterns = []
    for lam in range(1, T + 1):
        target = f - 3 * lam
        if target not in pf:
            raise FamilyPropertyError(
                f"{target} = f - 3*{lam} is not pseudo-Frobenius for T = {T}"
            )
        rows = (
            (-1, 0, 3 * lam, 3 * T + 3 - 3 * lam),
            (0, -1, 3 * lam - 3, 3 * T + 6 - 3 * lam),
            (T + 4 + lam, 2 * T - lam, -1, 0),
            (2 * T + 3 + lam, T - lam, 1, -1),
        )
        _require_rows(S, target, rows, f"four-generator family T={T} lambda={lam}")
        patterns.append(_zero_shape(rows))
    interior = patterns[1 : T - 1]
    if interior and any(p != interior[0] for p in interior[1:]):
        raise FamilyPropertyError(
            f"zero pattern varies on the interior lambda range for T = {T}"
        )
    return S


def dim6_raw_generators(T: int, d: int, k: int) -> tuple[int, ...]:
    """Six-generator system in construction order (n_1, n_2, n_3,
    n_1 + d, n_2 + d, n_3 + d); not ascending in general."""
    sq = (T + 1) ** 2
    raw = (k * (sq + 1), k * (sq + T), k * (sq + 2 * T + 4))
    return raw + tuple(n + d for n in raw)


def dim6_progression(T: int, d: int, k: int) -> tuple[int, ...]:
    """The arithmetic progression of pseudo-Frobenius numbers the
    six-generated family is built to contain."""
    f = k * (T * (T + 1) * (T + 2) - 1)
    return tuple(f + lam * d for lam in range(T))


def ideal_from_generators(S: NumericalSemigroup, elements) -> RelativeIdeal:
    """The integral ideal generated by the given elements of S:
    everything of the form element + member."""
    elems = sorted(set(elements))
    if not elems:
        raise EmptyGeneratorsError("an ideal needs at least one generator")
    conductor = elems[0] + S.frobenius + 1
    below = set()
    for e in elems:
        below.update(e + s for s in S.elements_below(conductor - e))
    return RelativeIdeal(tuple(sorted(below)), conductor)


def family_dim6(T: int, d: int, k: int) -> NumericalSemigroup:
    """Six-generated family with an arithmetic progression of
    pseudo-Frobenius numbers f, f + d, ..., f + (T-1) d.

    Generators come from n_1 = k[(T+1)^2 + 1], n_2 = k[(T+1)^2 + T],
    n_3 = k[(T+1)^2 + 2T + 4] and n_{i+3} = n_i + d, with
    f = k[T(T+1)(T+2) - 1].  Sufficient conditions k >= T, d >= T^2,
    gcd(d, k) = 1, T not congruent to 1 mod 5 are enforced as
    preconditions, and the conclusion is still verified per instance.
    The construction order is not ascending (n_4 < n_3 for small d), so
    predicted rows are permuted into generator order before checking.
    """
    for name, value in (("T", T), ("d", d), ("k", k)):
        if value < 1:
            raise FamilyPreconditionError(f"{name} >= 1", value)
    if T % 5 == 1:
        raise FamilyPreconditionError("T not congruent to 1 mod 5", T)
    if k < T:
        raise FamilyPreconditionError("k >= T", k)
    if d < T * T:
        raise FamilyPreconditionError("d >= T^2", d)
    if gcd(d, k) != 1:
        raise FamilyPreconditionError("gcd(d, k) = 1", gcd(d, k))

    raw = dim6_raw_generators(T, d, k)
    if reduce(gcd, raw) != 1:
        raise FamilyPropertyError(f"generators {raw} are not coprime")
    S = NumericalSemigroup(sorted(raw))
    if S.embedding_dimension != 6 or set(S.generators) != set(raw):
        raise FamilyPropertyError(
            f"formula generators {raw} are not a minimal system"
        )
    # order[p] = construction index sitting at ascending position p
    order = sorted(range(6), key=lambda i: raw[i])

    pf = set(S.pseudo_frobenius())
    patterns = []
    for lam, target in enumerate(dim6_progression(T, d, k)):
        if target not in pf:
            raise FamilyPropertyError(
                f"{target} = f + {lam}*d is not pseudo-Frobenius for "
                f"T={T}, d={d}, k={k}"
            )
        printed = (
            (-1, T + 1 - lam, 0, 0, lam, 0),
            (0, -1, T - lam, 0, 0, lam),
            (T + 2 - lam, 0, -1, lam, 0, 0),
            (0, T - lam, 0, -1, lam + 1, 0),
            (0, 0, T - 1 - lam, 0, -1, lam + 1),
            (T + 1 - lam, 0, 0, lam + 1, 0, -1),
        )
        rows = [
            tuple(printed[order[p]][order[q]] for q in range(6)) for p in range(6)
        ]
        _require_rows(S, target, rows, f"six-generator family lambda={lam}")
        patterns.append(_zero_shape(rows))
    interior = patterns[1 : T - 1]
    if interior and any(p != interior[0] for p in interior[1:]):
        raise FamilyPropertyError(
            f"zero pattern varies on the interior lambda range for T = {T}"
        )
    return S


class Family(Enum):
    """Named builders reachable from parameter records."""

    BACKELIN = "backelin"
    DIM6 = "dim6"
    DUP_TOWER = "tower"


@dataclass(frozen=True)
class FamilyParams:
    """Parameter record for a family build; unused fields stay at their
    defaults (e.g. d, k only matter for DIM6)."""

    family: Family
    T: int = 0
    d: int = 0
    k: int = 0
    depth: int = 0


def build_family(
    params: FamilyParams,
    base: NumericalSemigroup | None = None,
    b_selector=None,
):
    """Dispatch a FamilyParams record to its builder.  DUP_TOWER needs the
    seed semigroup and returns the whole chain; the others return a single
    semigroup."""
    if params.family is Family.BACKELIN:
        return backelin(params.T)
    if params.family is Family.DIM6:
        return family_dim6(params.T, params.d, params.k)
    if params.family is Family.DUP_TOWER:
        if base is None:
            raise ValueError("a tower needs a base semigroup")
        return duplication_tower(base, params.depth, b_selector)
    raise ValueError(f"unknown family {params.family!r}")
