"""Builders for the explicit colorings behind each lower-bound certificate.

Every builder checks its own postcondition before returning, so a
coloring handed back from this module is always a valid certificate for
the property its recipe promises.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .coloring import (
    EdgeColoring,
    color_degree_profile,
    near_one_factorization,
    one_factorization,
)
from .errors import ConstructionFailedError, InvalidParameterError
from .formulas import CaseVerdict, WitnessRecipe, classify
from .verify import min_star_colors


@dataclass(frozen=True)
class ClassLayout:
    """Circle positions used by the rotation colorings of odd K_x.

    ``singletons`` come first, then ``classes`` of t positions each, with
    len(singletons) + t * len(classes) == x.  The color-regular layout
    additionally places class i and class q+1-i so that paired positions
    sum to 0 mod x, which puts the prescribed edge inside the last
    vertex's matching.
    """

    x: int
    singletons: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]


def regular_layout(t: int, q: int) -> ClassLayout:
    """Positions for the q-regular-per-color coloring: the lone vertex at x,
    classes 1..q/2 before it and their mirror images after it."""
    x = t * q + 1
    classes = []
    for i in range(1, q + 1):
        if i <= q // 2:
            row = tuple((i - 1) * t + j for j in range(1, t + 1))
        else:
            row = tuple(x - ((q - i) * t + j) for j in range(1, t + 1))
        classes.append(row)
    return ClassLayout(x=x, singletons=(x,), classes=tuple(classes))


def near_regular_layout(t: int, q: int, r: int) -> ClassLayout:
    """Positions for the floor-regular coloring: singletons 1..r, then
    classes of t consecutive positions."""
    x = t * q + r
    classes = tuple(
        tuple(r + (i - 1) * t + j for j in range(1, t + 1))
        for i in range(1, q + 1)
    )
    return ClassLayout(x=x, singletons=tuple(range(1, r + 1)), classes=classes)


def balanced_class_sizes(total: int, parts: int) -> list[int]:
    """Split ``total`` into ``parts`` sizes differing by at most one, small first."""
    if parts < 1 or total < 0:
        raise InvalidParameterError(f"bad split: total={total}, parts={parts}")
    q, r = divmod(total, parts)
    return [q] * (parts - r) + [q + 1] * r


def partitioned_factorization_coloring(p: int, class_sizes: list[int]) -> EdgeColoring:
    """Group the p-1 perfect matchings of even K_p into color classes.

    Each matching touches every vertex once, so every vertex sees
    exactly class_sizes[c-1] edges of color c.
    """
    if p < 2 or p % 2:
        raise InvalidParameterError(f"need even p >= 2, got {p}")
    sizes = list(class_sizes)
    if not sizes or any(sz < 0 for sz in sizes):
        raise InvalidParameterError(f"class sizes must be nonnegative, got {sizes}")
    if sum(sizes) != p - 1:
        raise InvalidParameterError(
            f"class sizes must sum to p-1={p - 1}, got {sizes} (sum {sum(sizes)})"
        )
    rounds = one_factorization(p)
    colors: dict = {}
    idx = 0
    for c, size in enumerate(sizes, start=1):
        for matching in rounds[idx:idx + size]:
            for e in matching:
                colors[e] = c
        idx += size
    coloring = EdgeColoring(p, len(sizes), colors)
    for row in color_degree_profile(coloring):
        if row != sizes:
            raise ConstructionFailedError(
                f"partitioned factorization row {row} != {sizes}"
            )
    return coloring


def regular_coloring(t: int, q: int) -> EdgeColoring:
    """t-coloring of K_{tq+1}, q even, with every color class q-regular.

    The matching of the j-th vertex of every class is colored wholly
    with j, and the edge of the last vertex's matching joining the j-th
    vertices of classes i and q+1-i is colored j as well.  The mirrored
    layout makes those paired positions sum to 0 mod x, so that edge
    really does lie in the last vertex's matching.
    """
    if t < 2:
        raise InvalidParameterError(f"need t >= 2, got {t}")
    if q < 2 or q % 2:
        raise InvalidParameterError(f"need even q >= 2, got {q}")
    layout = regular_layout(t, q)
    x = layout.x
    matchings = near_one_factorization(x)
    colors: dict = {}
    for cls in layout.classes:
        for j, m in enumerate(cls, start=1):
            for e in matchings[m - 1].edges:
                colors[e] = j
    last = matchings[x - 1]
    for i in range(q // 2):
        for j in range(t):
            m = layout.classes[i][j]
            partner = layout.classes[q - 1 - i][j]
            if (m + partner) % x != 0:
                raise ConstructionFailedError(
                    f"layout pair ({m}, {partner}) does not sum to 0 mod {x}"
                )
            # edge k of the last matching joins positions k and x-k
            colors[last.edges[min(m, partner) - 1]] = j + 1
    coloring = EdgeColoring(x, t, colors)
    expected = [q] * t
    for row in color_degree_profile(coloring):
        if row != expected:
            raise ConstructionFailedError(
                f"regular coloring row {row} != {expected}"
            )
    return coloring


def _near_regular_build(t: int, q: int, r: int, offset: int) -> EdgeColoring:
    layout = near_regular_layout(t, q, r)
    x = layout.x
    matchings = near_one_factorization(x)
    colors: dict = {}
    for cls in layout.classes:
        for j, m in enumerate(cls, start=1):
            for e in matchings[m - 1].edges:
                colors[e] = j
    # last singleton counts 1, 2, ..., t along its edge order; the first
    # counts t, t-1, ..., 1; singletons in between get a cyclic filler
    for k, e in enumerate(matchings[r - 1].edges, start=1):
        colors[e] = (k - 1) % t + 1
    for k, e in enumerate(matchings[0].edges, start=1):
        colors[e] = (t - k) % t + 1
    for mid in range(2, r):
        for k, e in enumerate(matchings[mid - 1].edges, start=1):
            colors[e] = (k + mid - 1 + offset) % t + 1
    return EdgeColoring(x, t, colors)


def _near_regular_search(t: int, q: int, r: int) -> tuple[EdgeColoring, int]:
    """Build the floor-regular coloring, trying shifted completions if needed."""
    if t < 3:
        raise InvalidParameterError(f"need t >= 3, got {t}")
    if q < 1:
        raise InvalidParameterError(f"need q >= 1, got {q}")
    if not 2 <= r <= t - 1:
        raise InvalidParameterError(f"need 2 <= r <= t-1, got r={r}, t={t}")
    x = t * q + r
    if x % 2 == 0:
        raise InvalidParameterError(f"order tq+r={x} must be odd")
    floor = [q] * t
    offsets = range(t) if r > 2 else range(1)
    for offset in offsets:
        coloring = _near_regular_build(t, q, r, offset)
        if all(all(row[c] >= floor[c] for c in range(t))
               for row in color_degree_profile(coloring)):
            return coloring, offset
    raise ConstructionFailedError(
        f"no cyclic completion meets the floor {q} for t={t}, q={q}, r={r}"
    )


def near_regular_coloring(t: int, q: int, r: int) -> EdgeColoring:
    """t-coloring of odd K_{tq+r}, 2 <= r <= t-1, with >= q of every color
    at every vertex.

    The r leftover matchings are finished with a deterministic cyclic
    pattern; shifted patterns are tried as a fallback before giving up.
    """
    coloring, _ = _near_regular_search(t, q, r)
    return coloring


def cyclic_matching_coloring(p: int, t: int) -> EdgeColoring:
    """Color edge k of every near-matching of odd K_p with ((k-1) mod t) + 1.

    Used both as the three-color balanced coloring for odd orders and as
    the filler certificate when no n-star exists at all.
    """
    if t < 1:
        raise InvalidParameterError(f"need t >= 1, got {t}")
    if p < 1 or p % 2 == 0:
        raise InvalidParameterError(f"need odd p >= 1, got {p}")
    if p == 1:
        return EdgeColoring(1, t, {})
    colors: dict = {}
    for m in near_one_factorization(p):
        for k, e in enumerate(m.edges, start=1):
            colors[e] = (k - 1) % t + 1
    return EdgeColoring(p, t, colors)


def three_color_balanced_coloring(n: int) -> EdgeColoring:
    """3-coloring of K_{3n-2} with exactly n-1 edges of each color at
    every vertex.

    Even orders group a 1-factorization into three classes of n-1; odd
    orders color the near-matchings cyclically, which is balanced
    because the edge index within a matching depends only on the
    circular distance of its endpoints, and each color then collects
    (n-1)/2 distance classes contributing two edges per vertex.
    """
    if n < 2:
        raise InvalidParameterError(f"need n >= 2, got {n}")
    x = 3 * n - 2
    if x % 2 == 0:
        coloring = partitioned_factorization_coloring(x, [n - 1] * 3)
    else:
        coloring = cyclic_matching_coloring(x, 3)
    expected = [n - 1] * 3
    for row in color_degree_profile(coloring):
        if row != expected:
            raise ConstructionFailedError(
                f"three-color balanced row {row} != {expected}"
            )
    return coloring


def matching_class_coloring(p: int, class_sizes: list[int]) -> EdgeColoring:
    """Group the p near-matchings of odd K_p into color classes.

    Vertex v misses only its own matching, so its row equals the class
    sizes with one unit removed in the class holding matching v.  This
    is the odd-order counterpart of the partitioned factorization.
    """
    if p < 3 or p % 2 == 0:
        raise InvalidParameterError(f"need odd p >= 3, got {p}")
    sizes = list(class_sizes)
    if not sizes or any(sz < 0 for sz in sizes):
        raise InvalidParameterError(f"class sizes must be nonnegative, got {sizes}")
    if sum(sizes) != p:
        raise InvalidParameterError(
            f"class sizes must sum to p={p}, got {sizes} (sum {sum(sizes)})"
        )
    matchings = near_one_factorization(p)
    colors: dict = {}
    class_of_matching: dict[int, int] = {}
    idx = 0
    for c, size in enumerate(sizes, start=1):
        for m in matchings[idx:idx + size]:
            class_of_matching[m.center] = c
            for e in m.edges:
                colors[e] = c
        idx += size
    coloring = EdgeColoring(p, len(sizes), colors)
    for v, row in enumerate(color_degree_profile(coloring), start=1):
        expected = list(sizes)
        expected[class_of_matching[v] - 1] -= 1
        if row != expected:
            raise ConstructionFailedError(
                f"matching-class row {row} != {expected} at vertex {v}"
            )
    return coloring


def build_recipe(recipe: WitnessRecipe) -> tuple[EdgeColoring, WitnessRecipe]:
    """Run a witness recipe; the returned recipe records what was executed."""
    params = recipe.params
    if recipe.tag == "cyclic":
        return cyclic_matching_coloring(params["p"], params["t"]), recipe
    if recipe.tag == "partitioned-factorization":
        return (
            partitioned_factorization_coloring(params["p"], params["class_sizes"]),
            recipe,
        )
    if recipe.tag == "regular":
        return regular_coloring(params["t"], params["q"]), recipe
    if recipe.tag == "near-regular":
        coloring, offset = _near_regular_search(params["t"], params["q"], params["r"])
        if offset:
            recipe = replace(recipe, params={**params, "offset": offset})
        return coloring, recipe
    if recipe.tag == "three-color-balanced":
        return three_color_balanced_coloring(params["n"]), recipe
    if recipe.tag == "matching-classes":
        return matching_class_coloring(params["p"], params["class_sizes"]), recipe
    raise InvalidParameterError(f"unknown recipe tag {recipe.tag!r}")


def witness_coloring(n: int, t: int, s: int) -> tuple[EdgeColoring, WitnessRecipe]:
    """Certificate coloring of K_{R-1} for the instance (n, t, s).

    The coloring is checked against the claim (every n-star shows at
    least s+1 colors) before it is returned; a failed check raises
    rather than handing back a bad certificate.
    """
    verdict: CaseVerdict = classify(n, t, s)
    coloring, recipe = build_recipe(verdict.witness)
    k = min_star_colors(coloring, n)
    if k is not None and k < s + 1:
        raise ConstructionFailedError(
            f"recipe {recipe.describe()} for (n={n}, t={t}, s={s}) built K_{coloring.p} "
            f"with an n-star on {k} <= {s} colors; "
            f"the case value {verdict.value} ({verdict.case_tag}) has no certificate here"
        )
    return coloring, recipe
