"""Genus-tree enumeration of numerical semigroups.

Removing a minimal generator larger than the Frobenius number takes a
semigroup of genus g to one of genus g + 1, and every semigroup arises
exactly once this way (put the Frobenius number back to recover the
parent).  The walk keeps a membership bitmask per node, so child
generator systems are maintained incrementally instead of recomputed.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from ..core import NumericalSemigroup


def _mask_width(genus_max: int) -> int:
    # generators stay below 3 * genus and candidate probes below 4 * genus
    return 4 * genus_max + 8


def _child_generators(mask: int, gens: tuple[int, ...], g: int) -> tuple[int, ...]:
    """Minimal generators after removing g, given the child mask.

    Surviving generators keep their minimality.  A new generator must be
    g + s for a member s between the old and the new multiplicity, which
    leaves one candidate (g + m) in general and two (2m, m + m') when the
    multiplicity m itself was removed.
    """
    m = gens[0]
    if g == m:
        mp = m + 1
        while not (mask >> mp) & 1:
            mp += 1
        lo = mp
        cand = (2 * m, m + mp)
    else:
        lo = m
        cand = (g + m,)
    kept = [n for n in gens if n != g]
    for x in cand:
        if x in kept:
            continue
        a = lo
        reducible = False
        while 2 * a <= x:
            if (mask >> a) & 1 and (mask >> (x - a)) & 1:
                reducible = True
                break
            a += 1
        if not reducible:
            kept.append(x)
    kept.sort()
    return tuple(kept)


def _root_node(genus_max: int) -> tuple[int, tuple[int, ...], int, int]:
    width = _mask_width(genus_max)
    return ((1 << width) - 1, (1,), -1, 0)


def _nodes_from(
    start: tuple[int, tuple[int, ...], int, int], genus_max: int
) -> Iterator[tuple[int, tuple[int, ...], int, int]]:
    """Depth-first stream of (mask, generators, frobenius, genus) nodes
    in the subtree of `start`, children visited by increasing removed
    generator.  The start mask must have been built for a width covering
    genus_max."""
    stack = [start]
    while stack:
        mask, gens, frob, genus = stack.pop()
        yield mask, gens, frob, genus
        if genus >= genus_max:
            continue
        children = []
        for g in gens:
            if g <= frob:
                continue
            child_mask = mask & ~(1 << g)
            children.append(
                (child_mask, _child_generators(child_mask, gens, g), g, genus + 1)
            )
        stack.extend(reversed(children))


def _nodes(genus_max: int) -> Iterator[tuple[int, tuple[int, ...], int, int]]:
    return _nodes_from(_root_node(genus_max), genus_max)


def _semigroup_from_node(gens: tuple[int, ...], mask: int) -> NumericalSemigroup:
    m = gens[0]
    if m == 1:
        return NumericalSemigroup._from_minimal_data((1,), (0,))
    apery = [-1] * m
    apery[0] = 0
    found = 1
    x = m
    while found < m:
        if (mask >> x) & 1:
            r = x % m
            if apery[r] < 0:
                apery[r] = x
                found += 1
        x += 1
    return NumericalSemigroup._from_minimal_data(gens, tuple(apery))


def semigroups_up_to(
    genus_max: int,
    embdim: Iterable[int] | None = None,
) -> Iterator[NumericalSemigroup]:
    """Every numerical semigroup of genus <= genus_max, exactly once, in a
    deterministic depth-first order.  embdim restricts the yielded (not
    the visited) semigroups to the given embedding dimensions."""
    if genus_max < 0:
        raise ValueError(f"genus_max must be nonnegative, got {genus_max}")
    wanted = None if embdim is None else frozenset(embdim)
    for mask, gens, _frob, _genus in _nodes(genus_max):
        if wanted is None or len(gens) in wanted:
            yield _semigroup_from_node(gens, mask)


def count_by_genus(genus_max: int) -> list[int]:
    """Number of semigroups of each genus 0..genus_max (no construction,
    walk only)."""
    counts = [0] * (genus_max + 1)
    for _mask, _gens, _frob, genus in _nodes(genus_max):
        counts[genus] += 1
    return counts
