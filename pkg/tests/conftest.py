import itertools

from hypothesis import strategies as st

from starramsey import EdgeColoring, all_edges


@st.composite
def colorings(draw, min_p=1, max_p=9, min_t=1, max_t=5):
    """Arbitrary valid edge colorings of small complete graphs."""
    p = draw(st.integers(min_p, max_p))
    t = draw(st.integers(min_t, max_t))
    edges = all_edges(p)
    cols = draw(
        st.lists(st.integers(1, t), min_size=len(edges), max_size=len(edges))
    )
    return EdgeColoring(p, t, dict(zip(edges, cols)))


def brute_min_star(coloring: EdgeColoring, n: int):
    """Reference implementation: enumerate every n-subset of every star."""
    best = None
    for v in range(1, coloring.p + 1):
        incident = [
            c for (a, b), c in coloring.colors.items() if v in (a, b)
        ]
        if len(incident) < n:
            continue
        for combo in itertools.combinations(incident, n):
            k = len(set(combo))
            if best is None or k < best:
                best = k
    return best


def brute_max_min_star(p: int, n: int, t: int) -> int:
    """Reference oracle: plain enumeration over all t-colorings of K_p."""
    edges = all_edges(p)
    best = 0
    for combo in itertools.product(range(1, t + 1), repeat=len(edges)):
        c = EdgeColoring(p, t, dict(zip(edges, combo)))
        v = brute_min_star(c, n)
        if v is not None and v > best:
            best = v
    return best
