"""Exhaustive verification harness: claims over every semigroup up to a
genus bound, or over ad-hoc generator systems.

The summary it produces is deterministic for a given configuration,
independent of the worker count: work units are genus-subtrees of the
enumeration, partial aggregates combine by sums and maxima, and all
collected lists are sorted by generator tuple before the summary is
assembled.  Timing lives on individual reports, never in the summary.
"""

from __future__ import annotations

import multiprocessing
import time
from collections.abc import Callable
from dataclasses import dataclass, field

from ..core import NumericalSemigroup
from ..rf import resolve_matrix_cap
from .claims import (
    CLAIM_FUNCTIONS,
    CLAIM_NAMES,
    FAIL,
    ClaimContext,
    ClaimResult,
    run_claims,
)
from .enumeration import _nodes_from, _root_node, _semigroup_from_node

SCHEMA_VERSION = "1"

# genus at which the enumeration tree is cut into per-worker subtrees
SPLIT_DEPTH = 6


@dataclass(frozen=True)
class HarnessConfig:
    """Configuration for an exhaustive run."""

    genus_max: int
    embdim_filter: frozenset[int] | None = None
    claims: tuple[str, ...] = CLAIM_NAMES
    workers: int = 1
    seed: int = 0
    coppie_pair_cap: int = 10_000

    def __post_init__(self):
        if self.genus_max < 0:
            raise ValueError(f"genus_max must be nonnegative, got {self.genus_max}")
        if self.workers < 1:
            raise ValueError(f"workers must be positive, got {self.workers}")
        if self.coppie_pair_cap < 1:
            raise ValueError(
                f"coppie_pair_cap must be positive, got {self.coppie_pair_cap}"
            )
        unknown = [n for n in self.claims if n not in CLAIM_FUNCTIONS]
        if unknown:
            raise ValueError(f"unknown claims: {unknown}")
        # normalize to canonical order with duplicates dropped
        chosen = frozenset(self.claims)
        object.__setattr__(
            self, "claims", tuple(n for n in CLAIM_NAMES if n in chosen)
        )
        if self.embdim_filter is not None:
            object.__setattr__(self, "embdim_filter", frozenset(self.embdim_filter))


@dataclass(frozen=True)
class ClaimRecord:
    claim: str
    status: str
    payload: dict | None = None

    def as_dict(self) -> dict:
        out = {"claim": self.claim, "status": self.status}
        if self.payload is not None:
            out["payload"] = self.payload
        return out


@dataclass(frozen=True)
class CheckReport:
    """Everything the harness knows about one semigroup: basic facts,
    one record per requested claim, advisory notes, and the time spent."""

    generators: tuple[int, ...]
    genus: int
    frobenius: int
    multiplicity: int
    embedding_dimension: int
    type: int
    nearly_gorenstein: bool | None
    almost_symmetric: bool | None
    vector_count: int
    claims: tuple[ClaimRecord, ...]
    notes: tuple[str, ...]
    seconds: float

    @property
    def failures(self) -> tuple[ClaimRecord, ...]:
        return tuple(r for r in self.claims if r.status == FAIL)

    def as_dict(self) -> dict:
        return {
            "generators": list(self.generators),
            "genus": self.genus,
            "frobenius": self.frobenius,
            "multiplicity": self.multiplicity,
            "embedding_dimension": self.embedding_dimension,
            "type": self.type,
            "nearly_gorenstein": self.nearly_gorenstein,
            "almost_symmetric": self.almost_symmetric,
            "vector_count": self.vector_count,
            "claims": [r.as_dict() for r in self.claims],
            "notes": list(self.notes),
            "seconds": self.seconds,
        }


def _classification_variance(ctx: ClaimContext) -> list[tuple[int, list[str]]]:
    """Pseudo-Frobenius numbers whose one-generator/two-generator class
    differs across the recorded NG-vectors."""
    if not ctx.classifications:
        return []
    seen: dict[int, set[str]] = {}
    for _vec, cls in ctx.classifications:
        for f in cls.pf1:
            seen.setdefault(f, set()).add("pf1")
        for f in cls.pf2:
            seen.setdefault(f, set()).add("pf2")
    return [(f, sorted(kinds)) for f, kinds in sorted(seen.items()) if len(kinds) > 1]


def _build_report(
    S: NumericalSemigroup,
    results: dict[str, ClaimResult],
    ctx: ClaimContext,
    seconds: float,
) -> CheckReport:
    notes = []
    t = S.type
    nu = S.embedding_dimension
    if t > 2 * nu:
        notes.append(f"type {t} exceeds twice the embedding dimension {nu}")
    for f, kinds in _classification_variance(ctx):
        notes.append(
            f"classification of {f} varies across NG-vectors: {', '.join(kinds)}"
        )
    if ctx.vector_error:
        notes.append(ctx.vector_error)
    return CheckReport(
        generators=S.generators,
        genus=S.genus,
        frobenius=S.frobenius,
        multiplicity=S.multiplicity,
        embedding_dimension=nu,
        type=t,
        nearly_gorenstein=ctx.nearly_gorenstein,
        almost_symmetric=ctx.almost_symmetric,
        vector_count=ctx.vector_count if ctx.nearly_gorenstein else 0,
        claims=tuple(
            ClaimRecord(n, results[n].status, results[n].payload) for n in results
        ),
        notes=tuple(notes),
        seconds=seconds,
    )


def check_semigroup(
    generators,
    claims: tuple[str, ...] = CLAIM_NAMES,
    seed: int = 0,
    coppie_pair_cap: int = 10_000,
) -> CheckReport:
    """Run the named claims on one semigroup given by any generating set."""
    S = (
        generators
        if isinstance(generators, NumericalSemigroup)
        else NumericalSemigroup(generators)
    )
    start = time.perf_counter()
    results, ctx = run_claims(S, claims, seed=seed, coppie_pair_cap=coppie_pair_cap)
    return _build_report(S, results, ctx, time.perf_counter() - start)


# ----------------------------------------------------------------------
# aggregation


def _cell_key(nu: int, ng: bool | None, asym: bool | None) -> str:
    def render(v):
        return "none" if v is None else ("true" if v else "false")

    return f"nu={nu}|ng={render(ng)}|as={render(asym)}"


def _empty_aggregate(claims: tuple[str, ...]) -> dict:
    return {
        "semigroups": 0,
        "by_genus": {},
        "claims": {n: {"pass": 0, "fail": 0, "inapplicable": 0} for n in claims},
        "cells": {},
        "failures": [],
        "question_flags": [],
        "classification_varies": [],
    }


def _consume(agg: dict, cfg: HarnessConfig, S: NumericalSemigroup, sink=None) -> None:
    if cfg.embdim_filter is not None and S.embedding_dimension not in cfg.embdim_filter:
        return
    start = time.perf_counter()
    results, ctx = run_claims(
        S, cfg.claims, seed=cfg.seed, coppie_pair_cap=cfg.coppie_pair_cap
    )
    agg["semigroups"] += 1
    agg["by_genus"][S.genus] = agg["by_genus"].get(S.genus, 0) + 1
    key = _cell_key(S.embedding_dimension, ctx.nearly_gorenstein, ctx.almost_symmetric)
    cell = agg["cells"].setdefault(key, {"count": 0, "max_type": 0})
    cell["count"] += 1
    cell["max_type"] = max(cell["max_type"], S.type)
    gens = list(S.generators)
    for name, res in results.items():
        agg["claims"][name][res.status] += 1
        if res.status == FAIL:
            agg["failures"].append({"claim": name, **res.payload})
        elif name == "QUESTION_MS" and res.payload is not None:
            agg["question_flags"].append(res.payload)
    for f, kinds in _classification_variance(ctx):
        agg["classification_varies"].append(
            {"generators": gens, "f": f, "classes": kinds}
        )
    if sink is not None:
        sink(_build_report(S, results, ctx, time.perf_counter() - start))


def _merge(agg: dict, part: dict) -> None:
    agg["semigroups"] += part["semigroups"]
    for g, n in part["by_genus"].items():
        agg["by_genus"][g] = agg["by_genus"].get(g, 0) + n
    for name, counts in part["claims"].items():
        dst = agg["claims"][name]
        for k, v in counts.items():
            dst[k] += v
    for key, cell in part["cells"].items():
        dst = agg["cells"].setdefault(key, {"count": 0, "max_type": 0})
        dst["count"] += cell["count"]
        dst["max_type"] = max(dst["max_type"], cell["max_type"])
    agg["failures"].extend(part["failures"])
    agg["question_flags"].extend(part["question_flags"])
    agg["classification_varies"].extend(part["classification_varies"])


def _subtree_worker(args: tuple) -> dict:
    node, cfg = args
    agg = _empty_aggregate(cfg.claims)
    for mask, gens, _frob, _genus in _nodes_from(node, cfg.genus_max):
        _consume(agg, cfg, _semigroup_from_node(gens, mask))
    return agg


def _finalize(agg: dict, cfg: HarnessConfig) -> dict:
    agg["failures"].sort(key=lambda e: (e["generators"], e["claim"]))
    agg["question_flags"].sort(key=lambda e: e["generators"])
    agg["classification_varies"].sort(key=lambda e: (e["generators"], e["f"]))
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "verify-summary",
        "genus_max": cfg.genus_max,
        "embdim_filter": (
            sorted(cfg.embdim_filter) if cfg.embdim_filter is not None else None
        ),
        "claims_checked": list(cfg.claims),
        "seed": cfg.seed,
        "caps": {
            "coppie_pair_cap": cfg.coppie_pair_cap,
            "matrix_cap": resolve_matrix_cap(),
        },
        "semigroups": agg["semigroups"],
        "by_genus": {str(g): agg["by_genus"][g] for g in sorted(agg["by_genus"])},
        "claims": agg["claims"],
        "cells": {k: agg["cells"][k] for k in sorted(agg["cells"])},
        "total_failures": len(agg["failures"]),
        "failures": agg["failures"],
        "question_flags": agg["question_flags"],
        "classification_varies": agg["classification_varies"],
    }


def check_all(cfg: HarnessConfig, sink: Callable[[CheckReport], None] | None = None) -> dict:
    """Run the configured claims on every semigroup of genus at most
    cfg.genus_max and return the summary dictionary.

    `sink` receives the per-semigroup CheckReport in enumeration order
    and requires workers == 1 (reports are not shipped across worker
    boundaries).
    """
    if sink is not None and cfg.workers > 1:
        raise ValueError("per-semigroup reports require workers == 1")
    agg = _empty_aggregate(cfg.claims)
    root = _root_node(cfg.genus_max)
    if cfg.workers == 1 or cfg.genus_max <= SPLIT_DEPTH:
        for mask, gens, _frob, _genus in _nodes_from(root, cfg.genus_max):
            _consume(agg, cfg, _semigroup_from_node(gens, mask), sink)
        return _finalize(agg, cfg)
    units = []
    for node in _nodes_from(root, SPLIT_DEPTH):
        mask, gens, _frob, genus = node
        if genus == SPLIT_DEPTH:
            units.append((node, cfg))
        else:
            _consume(agg, cfg, _semigroup_from_node(gens, mask))
    ctx = multiprocessing.get_context("fork")
    with ctx.Pool(processes=cfg.workers) as pool:
        for part in pool.imap_unordered(_subtree_worker, units):
            _merge(agg, part)
    return _finalize(agg, cfg)
