"""Canonical ideal, symmetry predicates, and nearly Gorenstein vectors.

Two routes to near-Gorensteinness are kept deliberately separate: the
candidate-set route (for every generator n_i there is some pseudo-Frobenius
f_i with n_i + f_i - f in S for all pseudo-Frobenius f) and the trace route
(the canonical ideal K and its dual S - K satisfy K + (S - K) >= M).  They
are compared against each other by the verification harness.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import NumericalSemigroup
from .errors import EmbeddingDimensionError, NotNearlyGorensteinError


@dataclass(frozen=True)
class RelativeIdeal:
    """A relative ideal given by its sporadic elements plus a conductor:
    the ideal is elements_below_conductor together with every integer
    >= conductor."""

    elements_below_conductor: tuple[int, ...]
    conductor: int

    def __post_init__(self) -> None:
        kept = tuple(sorted({e for e in self.elements_below_conductor if e < self.conductor}))
        object.__setattr__(self, "elements_below_conductor", kept)
        object.__setattr__(self, "_sporadic", frozenset(kept))

    def contains(self, x: int) -> bool:
        return x >= self.conductor or x in self._sporadic

    __contains__ = contains

    def min_element(self) -> int:
        if self.elements_below_conductor:
            return self.elements_below_conductor[0]
        return self.conductor

    def elements_in(self, lo: int, hi: int) -> list[int]:
        """Elements in [lo, hi), ascending."""
        out = [e for e in self.elements_below_conductor if lo <= e < hi]
        out.extend(range(max(self.conductor, lo), hi))
        return out

    def is_ideal_of(self, S: NumericalSemigroup) -> bool:
        """True iff the set is a nonempty ideal contained in S:
        closed under adding elements of S."""
        if self.conductor <= S.frobenius:
            return False
        if any(not S.contains(e) for e in self.elements_below_conductor):
            return False
        below = set(self.elements_below_conductor)
        for e in self.elements_below_conductor:
            for n in S.generators:
                x = e + n
                if x < self.conductor and x not in below:
                    return False
        return True

    @classmethod
    def maximal_ideal(cls, S: NumericalSemigroup) -> "RelativeIdeal":
        """M(S): all nonzero elements."""
        if S.is_full():
            return cls((), 1)
        elems = tuple(x for x in range(1, S.frobenius + 1) if S.contains(x))
        return cls(elems, S.frobenius + 1)


def _require_proper(S: NumericalSemigroup) -> None:
    if S.embedding_dimension < 2:
        raise EmbeddingDimensionError("operation needs a proper semigroup (at least 2 generators)")


def canonical_ideal(S: NumericalSemigroup) -> RelativeIdeal:
    """K(S) = {x in N : frobenius - x not in S}."""
    F = S.frobenius
    elems = tuple(sorted(F - g for g in S.gaps()))
    return RelativeIdeal(elems, F + 1)


def is_symmetric(S: NumericalSemigroup) -> bool:
    """True iff the canonical ideal equals S itself."""
    K = canonical_ideal(S)
    below = tuple(x for x in range(K.conductor) if S.contains(x))
    return K.elements_below_conductor == below


def pf_shift_mask(S: NumericalSemigroup) -> int:
    """Bit v set iff v - f lies in S for every pseudo-Frobenius f.

    Valid for v in [0, window); built by intersecting shifted membership
    masks, one shift per pseudo-Frobenius number.
    """
    mask = S.member_mask()
    w = S.window()
    # everything at or above the window is a member as far as shifts care
    mask |= ((1 << w) - 1) << w
    pf = S.pseudo_frobenius()
    acc = mask << pf[0]
    for f in pf[1:]:
        acc &= mask << f
    return acc


def ng_candidates(S: NumericalSemigroup) -> list[frozenset[int]]:
    """Per-generator candidate sets: position i holds those pseudo-Frobenius
    g with n_i + g - f in S for every pseudo-Frobenius f.

    The semigroup is nearly Gorenstein iff every set is nonempty; the first
    set is always a subset of {frobenius}.
    """
    _require_proper(S)
    acc = pf_shift_mask(S)
    pf = S.pseudo_frobenius()
    return [
        frozenset(g for g in pf if (acc >> (n + g)) & 1) for n in S.generators
    ]


def is_nearly_gorenstein(S: NumericalSemigroup) -> bool:
    return all(ng_candidates(S))


def is_almost_symmetric(S: NumericalSemigroup) -> bool:
    """True iff n + frobenius - f lies in S for every generator n and every
    pseudo-Frobenius f."""
    _require_proper(S)
    acc = pf_shift_mask(S)
    F = S.frobenius
    return all((acc >> (n + F)) & 1 for n in S.generators)


def nearly_gorenstein_via_trace(S: NumericalSemigroup) -> bool:
    """Independent route: K(S) + (S - K(S)) contains every nonzero element.

    All set arithmetic happens on the finite window [0, frobenius +
    largest generator + 1]; the containment there decides the infinite
    statement because both sides are closed under adding elements of S.
    """
    _require_proper(S)
    F = S.frobenius
    w = S.window()
    full = (1 << (2 * w)) - 1
    mask = S.member_mask() | (full ^ ((1 << w) - 1))

    k_mask = (full ^ ((1 << (F + 1)) - 1)) & ((1 << w) - 1)
    for g in S.gaps():
        k_mask |= 1 << (F - g)

    # dual: x with x + K inside S; only k <= F constrain, larger k land
    # past the Frobenius number automatically
    dual = (1 << w) - 1
    k = k_mask
    while k:
        low = k & -k
        i = low.bit_length() - 1
        if i > F:
            break
        dual &= mask >> i
        k ^= low

    trace = 0
    d = dual
    while d:
        low = d & -d
        x = low.bit_length() - 1
        trace |= k_mask << x
        d ^= low

    m_bits = (S.member_mask() & ~1) & ((1 << w) - 1)
    return m_bits & ~trace & ((1 << w) - 1) == 0


@dataclass(frozen=True)
class NGVector:
    """A nearly Gorenstein vector (f_1, ..., f_nu).

    entries[i] is the pseudo-Frobenius number attached to the (i+1)-th
    generator.  h is the smallest 1-based position whose entry differs
    from the Frobenius number (None when all entries equal it), and ell
    is the smallest 1-based position with f_h = F - n_h + n_ell; both
    follow the mathematical 1-based indexing of generator positions.
    """

    entries: tuple[int, ...]
    h: int | None
    ell: int | None


def _divergence(S: NumericalSemigroup, entries: tuple[int, ...]) -> tuple[int | None, int | None]:
    F = S.frobenius
    gens = S.generators
    for i, f in enumerate(entries):
        if f != F:
            for j in range(i):
                if f == F - gens[i] + gens[j]:
                    return i + 1, j + 1
            raise RuntimeError(
                f"minimum-index property violated for {entries} of {S!r}"
            )
    return None, None


def ng_vectors(S: NumericalSemigroup) -> list[NGVector]:
    """All nearly Gorenstein vectors, entries enumerated per position in
    descending order (so the all-frobenius vector, when present, is first).

    Raises NotNearlyGorensteinError when some position admits no entry.
    """
    cands = ng_candidates(S)
    for i, c in enumerate(cands):
        if not c:
            raise NotNearlyGorensteinError(
                f"no admissible pseudo-Frobenius number for generator {S.generators[i]}"
            )
    ordered = [sorted(c, reverse=True) for c in cands]
    out = []
    for entries in itertools.product(*ordered):
        h, ell = _divergence(S, entries)
        out.append(NGVector(entries, h, ell))
    return out


def is_ng_vector(S: NumericalSemigroup, entries: tuple[int, ...]) -> bool:
    """Membership test for the defining condition, without enumerating."""
    if len(entries) != S.embedding_dimension:
        return False
    pf = set(S.pseudo_frobenius())
    if any(f not in pf for f in entries):
        return False
    acc = pf_shift_mask(S)
    return all((acc >> (n + f)) & 1 for n, f in zip(S.generators, entries))
