"""The judge: coloring validation, star color minima, and seeded sampling.

A coloring of K_p certifies R > p for the instance (n, t, s) exactly when
every n-edge star in it shows at least s+1 distinct colors.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .coloring import EdgeColoring, all_edges, color_degree_profile
from .errors import InvalidParameterError


def validate(coloring: EdgeColoring) -> list[str]:
    """Return a list of defects; empty means the coloring is well formed.

    Defects are data, not exceptions: missing edges, unexpected edges
    (out of range or not in canonical (u < v) form), and colors outside
    1..t are all enumerated.
    """
    defects: list[str] = []
    if coloring.p < 1:
        defects.append(f"graph order must be >= 1, got {coloring.p}")
    if coloring.t < 1:
        defects.append(f"color count must be >= 1, got {coloring.t}")
    if defects:
        return defects
    expected = set(all_edges(coloring.p))
    present = set(coloring.colors)
    for edge in sorted(expected - present):
        defects.append(f"missing edge {edge}")
    for edge in sorted(present - expected):
        defects.append(f"unexpected edge {edge}")
    for edge in sorted(present & expected):
        c = coloring.colors[edge]
        if not (1 <= c <= coloring.t):
            defects.append(f"color out of range on edge {edge}: {c}")
    return defects


def min_star_colors(coloring: EdgeColoring, n: int) -> int | None:
    """Fewest distinct colors over all n-edge stars; None when no star exists.

    At a vertex, the k largest color classes cover the most edges any k
    colors can, so scanning sorted color degrees by descending prefix
    sums is exact.
    """
    if n < 1:
        raise InvalidParameterError(f"star size must be >= 1, got {n}")
    if coloring.p - 1 < n:
        return None
    best = coloring.t
    for row in color_degree_profile(coloring):
        acc = 0
        for k, d in enumerate(sorted(row, reverse=True), start=1):
            if k > best:
                break
            acc += d
            if acc >= n:
                if k < best:
                    best = k
                break
    return best


@dataclass(frozen=True)
class Certificate:
    """Outcome of checking that a coloring witnesses R > p for (n, t, s)."""

    coloring: EdgeColoring
    n: int
    s: int
    passed: bool
    min_colors: int | None
    offending_vertex: int | None = None
    offending_colors: tuple[int, ...] = ()
    covered_edges: int = 0
    recipe: object | None = None


def _offending_star(coloring: EdgeColoring, n: int, s: int):
    """Smallest vertex carrying an n-star on at most s colors, with the color set."""
    for v, row in enumerate(color_degree_profile(coloring), start=1):
        ranked = sorted(range(1, coloring.t + 1), key=lambda c: (-row[c - 1], c))
        acc = 0
        chosen = []
        for c in ranked:
            chosen.append(c)
            acc += row[c - 1]
            if acc >= n:
                break
        if acc >= n and len(chosen) <= s:
            return v, tuple(chosen), acc
    return None


def check_certificate(coloring: EdgeColoring, n: int, s: int,
                      recipe: object | None = None) -> Certificate:
    """Pass iff every n-star uses more than s colors (or no n-star exists)."""
    defects = validate(coloring)
    if defects:
        raise InvalidParameterError(
            "invalid coloring: " + "; ".join(defects[:5])
        )
    if s < 1:
        raise InvalidParameterError(f"color budget must be >= 1, got {s}")
    k = min_star_colors(coloring, n)
    if k is None or k >= s + 1:
        return Certificate(coloring, n, s, True, k, recipe=recipe)
    v, chosen, covered = _offending_star(coloring, n, s)
    return Certificate(coloring, n, s, False, k,
                       offending_vertex=v, offending_colors=chosen,
                       covered_edges=covered, recipe=recipe)


@dataclass(frozen=True)
class SampleCheckResult:
    """Outcome of the randomized necessary-condition check of R <= p."""

    passed: bool
    trials: int
    trial_index: int | None = None
    counterexample: EdgeColoring | None = None


def sample_upper_check(p: int, n: int, t: int, s: int, trials: int,
                       seed: int) -> SampleCheckResult:
    """Sample uniform t-colorings of K_p; pass iff every one contains an
    n-star with at most s colors.

    A sample where every n-star needs more than s colors disproves
    R <= p and is returned as a counterexample.  Trial i draws from a
    generator seeded with (seed, i), so the verdict does not depend on
    evaluation order or worker count.
    """
    if p < 1 or n < 1 or t < 1 or s < 1 or trials < 1:
        raise InvalidParameterError("p, n, t, s, trials must all be >= 1")
    if seed < 0:
        raise InvalidParameterError(f"seed must be >= 0, got {seed}")
    edges = all_edges(p)
    if p - 1 < n:
        # No n-star exists at all: any sample is a counterexample.
        rng = np.random.default_rng([seed, 0])
        cols = rng.integers(1, t + 1, size=len(edges))
        cex = EdgeColoring(p, t, dict(zip(edges, (int(c) for c in cols))))
        return SampleCheckResult(False, trials, 0, cex)
    us = np.array([u - 1 for u, _ in edges])
    vs = np.array([v - 1 for _, v in edges])
    for i in range(trials):
        rng = np.random.default_rng([seed, i])
        cols = rng.integers(1, t + 1, size=len(edges))
        counts = np.zeros((p, t), dtype=np.int64)
        np.add.at(counts, (us, cols - 1), 1)
        np.add.at(counts, (vs, cols - 1), 1)
        top = -np.sort(-counts, axis=1)
        prefix = top.cumsum(axis=1)
        k_per_vertex = (prefix < n).sum(axis=1) + 1
        if int(k_per_vertex.min()) > s:
            cex = EdgeColoring(p, t, dict(zip(edges, (int(c) for c in cols))))
            return SampleCheckResult(False, trials, i, cex)
    return SampleCheckResult(True, trials)
