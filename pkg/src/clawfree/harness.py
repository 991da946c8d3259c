"""
Verification Suites
===================

Exhaustive (or seeded random) checks of the characterizations implemented
by this package. A suite walks every labeled graph on n vertices, split
into disjoint edge-bitmask ranges that run in worker processes, and
reports how many units it checked and which ones disagreed.

    theorem1      classify() agrees with brute-force claw/co-claw search,
                  and every certificate re-verifies                (n <= 8)
    theorem2-23   S(U), S(co-U) bipartite  <=>  component/P9 test  (n <= 8)
    theorem2-12   same H3 for G, G + U  =>  S(U), S(co-U) bipartite (n <= 5)
    theorem2-31   property (3)  =>  decompose() verifies           (n <= 9)
    star          U claw-free  <=>  S(U) triangle-free             (n <= 8)
    claim         bipartite U  =>  c(x)+c(y) colors S(co-U)        (n <= 8)
    harary        claw/diamond-free  <=>  L(R), R triangle-free    (n <= 6)
    lemma3        the three equal-H3 conditions agree              (n <= 5)
    hypomorphy    3-hypomorphic up to complementation <=> same H3  (n <= 5)

Usage:
    >>> from clawfree.harness import VerifyOptions, run_suite
    >>> report = run_suite(VerifyOptions(suite="theorem1", n=4, jobs=1))
    >>> report.summary()
    '64 graphs, 0 mismatches'
"""

from __future__ import annotations

import logging
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from enum import Enum
from functools import lru_cache
from itertools import product
from typing import Callable, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .decompose import decompose, property2, property3, verify_decomposition
from .edge_graph import claim_holds, edge_graph, star_equivalence_check
from .embedding import find_induced_embedding
from .formats import encode_graph6
from .graph import (
    Graph,
    boolean_sum,
    claw,
    co_claw,
    complement,
    cycle,
    disjoint_union,
    graph_count,
    graph_from_mask,
    p9,
    paley9,
    path,
    relabel,
    two_coloring,
)
from .homogeneous import lemma3_condition_b, same_3_homogeneous, splits_independently
from .incidence import is_k_hypomorphic_up_to_comp
from .stability import beta
from .structure import classify, is_claw_diamond_free, triangle_free_root_exists

logger = logging.getLogger(__name__)

MAX_RANDOM_N = 16


class Suite(str, Enum):
    THEOREM1 = "theorem1"
    THEOREM2_23 = "theorem2-23"
    THEOREM2_12 = "theorem2-12"
    THEOREM2_31 = "theorem2-31"
    STAR = "star"
    CLAIM = "claim"
    HARARY = "harary"
    LEMMA3 = "lemma3"
    HYPOMORPHY = "hypomorphy"


SUITE_CAPS: Dict[Suite, int] = {
    Suite.THEOREM1: 8,
    Suite.THEOREM2_23: 8,
    Suite.THEOREM2_12: 5,
    Suite.THEOREM2_31: 9,
    Suite.STAR: 8,
    Suite.CLAIM: 8,
    Suite.HARARY: 6,
    Suite.LEMMA3: 5,
    Suite.HYPOMORPHY: 5,
}

# suites whose unit is a pair (G, G + U) rather than a single graph
PAIR_SUITES = (Suite.THEOREM2_12, Suite.LEMMA3, Suite.HYPOMORPHY)

# suites that may sample random graphs beyond the exhaustive cap
SAMPLING_SUITES = (Suite.THEOREM1, Suite.THEOREM2_23, Suite.THEOREM2_31, Suite.STAR, Suite.CLAIM)


# ── Options & report ─────────────────────────────────────────────────

class VerifyOptions(BaseModel):
    """Validated options of one verification run."""
    model_config = ConfigDict(frozen=True)

    suite: Suite
    n: int = Field(ge=0)
    jobs: int = Field(default_factory=lambda: os.cpu_count() or 1, ge=1)
    max_counterexamples: int = Field(default=10, ge=0)
    samples: Optional[int] = Field(default=None, ge=1)
    seed: int = 0

    @model_validator(mode="after")
    def _within_cap(self) -> "VerifyOptions":
        if self.samples is not None:
            if self.suite not in SAMPLING_SUITES:
                raise ValueError(f"suite {self.suite.value} does not support random sampling")
            if self.n > MAX_RANDOM_N:
                raise ValueError(f"random sampling supports n <= {MAX_RANDOM_N}, got {self.n}")
        elif self.n > SUITE_CAPS[self.suite]:
            raise ValueError(f"suite {self.suite.value} supports n <= {SUITE_CAPS[self.suite]}, got {self.n}")
        return self

    @property
    def uses_family(self) -> bool:
        """theorem2-31 at n=9 runs on path_cycle_family(9), not on all graphs."""
        return self.samples is None and self.suite == Suite.THEOREM2_31 and self.n == 9

    @property
    def mode(self) -> str:
        if self.samples is not None:
            return f"{self.samples} random"
        return "family" if self.uses_family else "exhaustive"


class SuiteReport(BaseModel):
    suite: Suite
    n: int
    unit: str
    checked: int
    mismatch_count: int
    mismatches: List[str] = Field(default_factory=list)
    elapsed: float

    @property
    def ok(self) -> bool:
        return self.mismatch_count == 0

    def summary(self) -> str:
        return f"{self.checked} {self.unit}, {self.mismatch_count} mismatches"


# ── Per-graph checks ─────────────────────────────────────────────────
# Each check returns (units checked, counterexample or None).

_CLAW = claw()
_CO_CLAW = co_claw()


def _check_theorem1(g: Graph) -> Tuple[int, Optional[str]]:
    brute = find_induced_embedding(_CLAW, g) is None and find_induced_embedding(_CO_CLAW, g) is None
    try:
        cert = classify(g)
    except RuntimeError:
        return 1, encode_graph6(g)
    ok = cert.in_class == brute and cert.verify(g)
    return 1, None if ok else encode_graph6(g)


def _check_theorem2_23(u: Graph) -> Tuple[int, Optional[str]]:
    return 1, None if property2(u) == property3(u).holds else encode_graph6(u)


def _check_theorem2_31(u: Graph) -> Tuple[int, Optional[str]]:
    d = decompose(u)
    if property3(u).holds:
        ok = d is not None and verify_decomposition(d)
    else:
        ok = d is None
    return 1, None if ok else encode_graph6(u)


def _check_star(u: Graph) -> Tuple[int, Optional[str]]:
    return 1, None if star_equivalence_check(u) else encode_graph6(u)


def _check_claim(u: Graph) -> Tuple[int, Optional[str]]:
    return 1, None if claim_holds(u, two_coloring(u)) else encode_graph6(u)


def _check_harary(g: Graph) -> Tuple[int, Optional[str]]:
    return 1, None if is_claw_diamond_free(g) == triangle_free_root_exists(g) else encode_graph6(g)


def _pair_text(g: Graph, u: Graph) -> str:
    return f"{encode_graph6(g)} {encode_graph6(u)}"


def _check_theorem2_12(u: Graph) -> Tuple[int, Optional[str]]:
    total = graph_count(u.n)
    if property2(u):
        return total, None
    for mask in range(total):
        g = graph_from_mask(u.n, mask)
        if same_3_homogeneous(g, boolean_sum(g, u)):
            return total, _pair_text(g, u)
    return total, None


def _check_lemma3(u: Graph) -> Tuple[int, Optional[str]]:
    s_u = edge_graph(u)
    s_co = edge_graph(complement(u))
    total = graph_count(u.n)
    for mask in range(total):
        g = graph_from_mask(u.n, mask)
        a = same_3_homogeneous(g, boolean_sum(g, u))
        b = lemma3_condition_b(g, u)
        c = splits_independently(s_u, g) and splits_independently(s_co, g)
        if not a == b == c:
            return total, _pair_text(g, u)
    return total, None


def _check_hypomorphy(u: Graph) -> Tuple[int, Optional[str]]:
    total = graph_count(u.n)
    if u.n < 3:
        return total, None
    for mask in range(total):
        g = graph_from_mask(u.n, mask)
        h = boolean_sum(g, u)
        if is_k_hypomorphic_up_to_comp(g, h, 3) != same_3_homogeneous(g, h):
            return total, _pair_text(g, u)
    return total, None


_CHECKS: Dict[Suite, Callable[[Graph], Tuple[int, Optional[str]]]] = {
    Suite.THEOREM1: _check_theorem1,
    Suite.THEOREM2_23: _check_theorem2_23,
    Suite.THEOREM2_12: _check_theorem2_12,
    Suite.THEOREM2_31: _check_theorem2_31,
    Suite.STAR: _check_star,
    Suite.CLAIM: _check_claim,
    Suite.HARARY: _check_harary,
    Suite.LEMMA3: _check_lemma3,
    Suite.HYPOMORPHY: _check_hypomorphy,
}


# ── Units ────────────────────────────────────────────────────────────

def _partitions(n: int, largest: int) -> List[Tuple[int, ...]]:
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, largest), 0, -1):
        out += [(first,) + rest for rest in _partitions(n - first, first)]
    return out


@lru_cache(maxsize=None)
def path_cycle_family(n: int) -> Tuple[Graph, ...]:
    """Disjoint unions of paths and even cycles on n vertices, their complements, P9 and Paley(9)."""
    family = []
    for parts in _partitions(n, n):
        options = [[path(k)] + ([cycle(k)] if k >= 4 and k % 2 == 0 else []) for k in parts]
        for pieces in product(*options):
            g = disjoint_union(*pieces)
            family += [g, complement(g)]
    if n == 9:
        family += [p9(), paley9()]
    rng = random.Random(n)
    shuffled = []
    for g in family:
        perm = list(range(n))
        rng.shuffle(perm)
        shuffled.append(relabel(g, perm))
    return tuple(family + shuffled)


def _unit_count(options: VerifyOptions) -> int:
    if options.samples is not None:
        return options.samples
    if options.uses_family:
        return len(path_cycle_family(9))
    return graph_count(options.n)


def _unit(options: VerifyOptions, i: int) -> Graph:
    n = options.n
    if options.samples is not None:
        rng = random.Random(options.seed * 1_000_003 + i)
        return graph_from_mask(n, rng.getrandbits(n * (n - 1) // 2) if n > 1 else 0)
    if options.uses_family:
        return path_cycle_family(9)[i]
    return graph_from_mask(n, i)


def _run_shard(options: VerifyOptions, start: int, stop: int) -> Tuple[int, int, List[str]]:
    """Check units [start, stop); returns (checked, mismatch count, capped counterexamples)."""
    check = _CHECKS[options.suite]
    checked = 0
    bad = 0
    found: List[str] = []
    for i in range(start, stop):
        count, counterexample = check(_unit(options, i))
        checked += count
        if counterexample is not None:
            bad += 1
            if len(found) < options.max_counterexamples:
                found.append(counterexample)
    logger.debug("%s n=%d shard [%d, %d): %d checked, %d mismatches",
                 options.suite.value, options.n, start, stop, checked, bad)
    return checked, bad, found


def shard_ranges(total: int, shards: int) -> List[Tuple[int, int]]:
    """Split [0, total) into at most ``shards`` contiguous, nearly equal ranges."""
    shards = max(1, min(shards, total))
    step, extra = divmod(total, shards)
    ranges = []
    start = 0
    for s in range(shards):
        stop = start + step + (1 if s < extra else 0)
        ranges.append((start, stop))
        start = stop
    return ranges


@beta(note="report fields may grow")
def run_suite(options: VerifyOptions) -> SuiteReport:
    """Run one suite, sharded over ``options.jobs`` worker processes."""
    started = time.perf_counter()
    total = _unit_count(options)
    checked = bad = 0
    found: List[str] = []
    if options.jobs == 1 or total < 2:
        results = [_run_shard(options, 0, total)]
    else:
        ranges = shard_ranges(total, options.jobs * 4)
        logger.debug("dispatching %d shards to %d workers", len(ranges), options.jobs)
        with ProcessPoolExecutor(max_workers=options.jobs) as pool:
            futures = [pool.submit(_run_shard, options, a, b) for a, b in ranges]
            results = [f.result() for f in futures]
    for c, b, f in results:
        checked += c
        bad += b
        found += f
    unit = "pairs" if options.suite in PAIR_SUITES else "graphs"
    return SuiteReport(
        suite=options.suite,
        n=options.n,
        unit=unit,
        checked=checked,
        mismatch_count=bad,
        mismatches=found[:options.max_counterexamples],
        elapsed=round(time.perf_counter() - started, 3),
    )
