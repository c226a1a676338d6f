"""Induced-path detection: verification, exact longest-path search, freeness tests.

The search is exact exponential DFS, sized for desk-scale corpora (roughly
n <= 30 when capped, n <= 16 uncapped). Heuristics are deliberately out of
scope: downstream checks need the true induced-path order.
"""

from __future__ import annotations

from .graphs import Graph


def verify_induced_path(g: Graph, vs: list[int]) -> bool:
    """True iff vs is a nonempty induced path of g.

    Exactly the consecutive pairs may be adjacent; all vertices distinct.
    """
    if not vs:
        return False
    if len(set(vs)) != len(vs):
        return False
    if any(not 0 <= v < g.n for v in vs):
        return False
    for i in range(len(vs) - 1):
        if not g.has_edge(vs[i], vs[i + 1]):
            return False
    for i in range(len(vs)):
        for j in range(i + 2, len(vs)):
            if g.has_edge(vs[i], vs[j]):
                return False
    return True


def longest_induced_path_order(
    g: Graph, cap: int | None = None
) -> tuple[int, list[int]]:
    """Number of vertices in a maximum-order induced path, with a witness.

    With `cap`, the search stops as soon as any induced path of `cap` vertices
    is found and reports (cap, witness). The witness is the first optimum in
    pruned-DFS order (start vertices ascending, extensions ascending); that
    order is deterministic but not promised to be the lexicographic minimum.
    """
    n = g.n
    if n == 0:
        return 0, []
    if cap is not None and cap < 1:
        raise ValueError(f"cap must be >= 1, got {cap}")
    nbr = [0] * n
    for v in range(n):
        for u in g.adj[v]:
            nbr[v] |= 1 << u
    best_order = 1
    best_path = [0]
    if cap == 1:
        return 1, [0]
    path: list[int] = []

    def extend(tip: int, blocked: int) -> bool:
        # blocked = path vertices plus everything adjacent to a non-tip path
        # vertex; a legal extension is a neighbor of the tip outside it.
        nonlocal best_order, best_path
        cand = nbr[tip] & ~blocked
        new_blocked = blocked | nbr[tip]
        while cand:
            low = cand & -cand
            cand ^= low
            w = low.bit_length() - 1
            path.append(w)
            if len(path) > best_order:
                best_order = len(path)
                best_path = list(path)
                if cap is not None and best_order >= cap:
                    return True
            if extend(w, new_blocked | low):
                return True
            path.pop()
        return False

    for start in range(n):
        path = [start]
        if extend(start, 1 << start):
            break
    return best_order, best_path


def is_pt_free(g: Graph, t: int) -> tuple[bool, list[int] | None]:
    """Whether g has no induced path on t vertices.

    When it does, also returns one such path (exactly t vertices) as a
    certificate; the certificate always passes `verify_induced_path`.
    """
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    order, witness = longest_induced_path_order(g, cap=t)
    if order < t:
        return True, None
    return False, witness
