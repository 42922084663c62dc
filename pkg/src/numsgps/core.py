"""Core arithmetic of numerical semigroups.

A numerical semigroup S is an additive submonoid of the natural numbers
whose complement (the set of gaps) is finite; equivalently it is generated
by finitely many positive integers with gcd 1.  Everything here is exact
integer arithmetic: the Apery set with respect to the multiplicity is the
single derived structure, and membership, Frobenius number, genus, gaps,
pseudo-Frobenius numbers and factorizations all read off it.

The full semigroup N (generated by 1) is admitted with the conventions
frobenius = -1, pseudo-Frobenius set {-1}, type 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import (
    EmptyGeneratorsError,
    GcdNotOneError,
    GeneratorTooLargeError,
    NotAMemberError,
)

GENERATOR_LIMIT = 2**31

_INF = float("inf")


def _apery_by_relaxation(modulus: int, generators: Sequence[int]) -> list[int]:
    """Least element of <generators> in each residue class mod `modulus`.

    Shortest-path relaxation on the residue graph: edge r -> (r + g) mod m
    of weight g for each generator g, relaxed round-robin until a full
    pass makes no improvement.  Exact because all weights are positive.
    """
    dist: list[float] = [_INF] * modulus
    dist[0] = 0
    steps = [(g, g % modulus) for g in generators if g % modulus != 0]
    changed = True
    while changed:
        changed = False
        for g, step in steps:
            for r in range(modulus):
                d = dist[r]
                if d is _INF:
                    continue
                nr = r + step
                if nr >= modulus:
                    nr -= modulus
                nd = d + g
                if nd < dist[nr]:
                    dist[nr] = nd
                    changed = True
    return [int(d) for d in dist]


@dataclass(frozen=True, slots=True)
class FactorizationVector:
    """One expression of `value` as a nonnegative combination of the
    minimal generators; `coeffs[k]` multiplies the k-th generator
    (0-based, generators ascending)."""

    coeffs: tuple[int, ...]
    value: int


class NumericalSemigroup:
    """Numerical semigroup given by an arbitrary generating set.

    The constructor validates the input (nonempty, positive, gcd 1,
    below 2**31), reduces it to the unique minimal system of generators,
    and computes the Apery set with respect to the multiplicity.
    """

    __slots__ = (
        "generators",
        "apery",
        "frobenius",
        "genus",
        "_pf",
        "_member_table",
        "_ext_mask",
    )

    def __init__(self, generators: Iterable[int]) -> None:
        raw = sorted(set(generators))
        if not raw:
            raise EmptyGeneratorsError("need at least one generator")
        for g in raw:
            if not isinstance(g, int) or isinstance(g, bool):
                raise TypeError(f"generator {g!r} is not an integer")
            if g <= 0:
                raise ValueError(f"generator {g} is not positive")
            if g > GENERATOR_LIMIT:
                raise GeneratorTooLargeError(f"generator {g} exceeds {GENERATOR_LIMIT}")
        if math.gcd(*raw) != 1:
            raise GcdNotOneError(f"gcd of {raw} is {math.gcd(*raw)}, not 1")

        if raw[0] == 1:
            self._init_parts((1,), (0,))
            return

        m = raw[0]
        apery = _apery_by_relaxation(m, raw)

        def member(x: int) -> bool:
            return x >= 0 and x >= apery[x % m]

        # g is redundant iff g = g' + s with g' a listed generator and s a
        # nonzero element; any decomposition can be rewritten in that form.
        minimal = tuple(
            g
            for g in raw
            if not any(gp < g and g - gp > 0 and member(g - gp) for gp in raw)
        )
        self._init_parts(minimal, tuple(apery))

    def _init_parts(self, generators: tuple[int, ...], apery: tuple[int, ...]) -> None:
        m = generators[0]
        self.generators = generators
        self.apery = apery
        self.frobenius = max(apery) - m
        self.genus = sum(a // m for a in apery)
        self._pf = None
        self._member_table = None
        self._ext_mask = None

    @classmethod
    def _from_minimal_data(
        cls, generators: tuple[int, ...], apery: tuple[int, ...]
    ) -> "NumericalSemigroup":
        """Trusted fast path: `generators` already minimal and ascending,
        `apery` the Apery set with respect to generators[0]."""
        self = object.__new__(cls)
        self._init_parts(generators, apery)
        return self

    # ------------------------------------------------------------------
    # basic invariants

    @property
    def multiplicity(self) -> int:
        return self.generators[0]

    @property
    def embedding_dimension(self) -> int:
        return len(self.generators)

    @property
    def type(self) -> int:
        return len(self.pseudo_frobenius())

    def is_full(self) -> bool:
        """True iff S = N."""
        return self.generators == (1,)

    # ------------------------------------------------------------------
    # membership and windows

    def contains(self, x: int) -> bool:
        return x >= 0 and x >= self.apery[x % self.generators[0]]

    __contains__ = contains

    def leq(self, x: int, y: int) -> bool:
        """Order induced by S: x <= y iff y - x lies in S."""
        return self.contains(y - x)

    def window(self) -> int:
        """Width of the cached membership window [0, window)."""
        return self.frobenius + self.generators[-1] + 2

    def member_table(self) -> bytearray:
        """Membership of [0, window) as a bytearray (1 = element)."""
        if self._member_table is None:
            w = self.window()
            table = bytearray(w)
            m = self.generators[0]
            apery = self.apery
            for x in range(w):
                if x >= apery[x % m]:
                    table[x] = 1
            self._member_table = table
        return self._member_table

    def member_mask(self) -> int:
        """Membership of [0, window) as a bitmask integer (bit x set
        iff x is an element)."""
        if self._ext_mask is None:
            mask = 0
            for x, bit in enumerate(self.member_table()):
                if bit:
                    mask |= 1 << x
            self._ext_mask = mask
        return self._ext_mask

    # ------------------------------------------------------------------
    # gap structure

    def gaps(self) -> list[int]:
        """All positive integers outside S, ascending."""
        m = self.generators[0]
        out = [x for r, a in enumerate(self.apery) for x in range(r, a, m) if x > 0]
        out.sort()
        return out

    def apery_set(self, n: int) -> list[int]:
        """The n smallest elements of S, one per residue class mod n.

        Entry r is the least element congruent to r; requires n in S.
        """
        if n <= 0 or not self.contains(n):
            raise NotAMemberError(f"{n} is not a nonzero element of the semigroup")
        if n == self.generators[0]:
            return list(self.apery)
        return _apery_by_relaxation(n, self.generators)

    def pseudo_frobenius(self) -> tuple[int, ...]:
        """Ascending tuple of pseudo-Frobenius numbers: gaps f with
        f + s in S for every nonzero element s."""
        if self._pf is None:
            if self.is_full():
                self._pf = (-1,)
            else:
                gens = self.generators
                self._pf = tuple(
                    g for g in self.gaps() if all(self.contains(g + n) for n in gens)
                )
        return self._pf

    def _pf_via_apery_maximality(self) -> tuple[int, ...]:
        """Independent route: f is pseudo-Frobenius iff f + m is maximal
        in the Apery set under the order induced by S."""
        m = self.generators[0]
        apery = self.apery
        out = [
            w - m
            for w in apery
            if not any(wp != w and self.contains(wp - w) for wp in apery)
        ]
        out.sort()
        return tuple(out)

    # ------------------------------------------------------------------
    # factorizations

    def factorizations(
        self, x: int, support: Sequence[int] | None = None
    ) -> list[FactorizationVector]:
        """All expressions of x as nonnegative combinations of the minimal
        generators, in lexicographically descending coefficient order.

        `support` optionally restricts the usable generator positions
        (0-based); coefficients outside it are zero.
        """
        if not self.contains(x):
            raise NotAMemberError(f"{x} is not an element of the semigroup")
        return [
            FactorizationVector(coeffs, x) for coeffs in self.factorization_tuples(x, support)
        ]

    def factorization_tuples(
        self, x: int, support: Sequence[int] | None = None
    ) -> list[tuple[int, ...]]:
        """Like factorizations() but plain coefficient tuples, and without
        the membership precondition (returns [] when x has none)."""
        nu = len(self.generators)
        positions = tuple(range(nu)) if support is None else tuple(sorted(support))
        out: list[tuple[int, ...]] = []
        coeffs = [0] * nu
        gens = self.generators

        def descend(k: int, rest: int) -> None:
            if k == len(positions):
                if rest == 0:
                    out.append(tuple(coeffs))
                return
            pos = positions[k]
            g = gens[pos]
            if k == len(positions) - 1:
                if rest % g == 0:
                    coeffs[pos] = rest // g
                    out.append(tuple(coeffs))
                    coeffs[pos] = 0
                return
            for c in range(rest // g, -1, -1):
                coeffs[pos] = c
                descend(k + 1, rest - c * g)
            coeffs[pos] = 0

        if x >= 0:
            descend(0, x)
        return out

    # ------------------------------------------------------------------
    # dunder plumbing

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.generators == other.generators

    def __hash__(self) -> int:
        return hash(self.generators)

    def __repr__(self) -> str:
        return f"NumericalSemigroup({', '.join(map(str, self.generators))})"

    def __setattr__(self, name: str, value: object) -> None:
        object.__setattr__(self, name, value)

    def elements_below(self, bound: int) -> Iterator[int]:
        """Elements of S in [0, bound), ascending."""
        for x in range(max(bound, 0)):
            if self.contains(x):
                yield x
