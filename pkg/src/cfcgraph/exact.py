"""Exact computation of the conflict-free connection number.

The solver runs iterative deepening on the number of colors, starting from
an analytic lower bound.  Each level is an exhaustive backtracking search
over canonical colorings (a new color may only be introduced as 1 + the
maximum color used so far), so when level k is fruitless the value is
provably > k.  A level equal to the constructive bridge/block upper bound
needs no search: the constructive coloring is the certificate.

Pruning is sound only: a partial assignment is rejected exactly when some
vertex pair's every simple path is fully colored and none is conflict-free,
which no extension can repair.  Every returned certificate is re-checked by
the independent path-enumeration verifier.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .coloring import (
    EdgeColoring,
    bridge_block_coloring,
    is_conflict_free_connected,
)
from .graphs import DEFAULT_PATH_CAP, Graph, enumerate_simple_paths, require_connected

DEFAULT_BUDGET = 10**8


class SearchBudgetExceeded(RuntimeError):
    """The node budget ran out; the value is unknown, never guessed."""

    def __init__(self, budget: int, nodes: int):
        super().__init__(f"search budget of {budget} nodes exhausted ({nodes} used)")
        self.budget = budget
        self.nodes = nodes


@dataclass(frozen=True)
class SearchEvidence:
    """Why the reported value is a true minimum.

    ``analytic_bound`` names the closed-form argument when the value equals
    the analytic lower bound; otherwise ``exhausted`` maps each color count
    below the value to the number of search nodes its fruitless exhaustive
    sweep examined.
    """

    analytic_bound: str | None
    exhausted: dict[int, int] = field(default_factory=dict)
    nodes: int = 0


@dataclass(frozen=True)
class CfcResult:
    value: int
    certificate: EdgeColoring
    lower_bound: int
    evidence: SearchEvidence


def _lower_bound_reason(g: Graph) -> tuple[int, str | None]:
    best, reason = 1, None

    # Pendant edges sharing a vertex v: two leaves x, y adjacent to v have
    # the unique connecting path x-v-y, conflict-free only when the two
    # pendant colors differ.  So all pendant edges at v are pairwise
    # distinctly colored.
    pendant = 0
    for v in range(g.n):
        at_v = sum(1 for w, _ in g.adjacency[v] if g.degree(w) == 1)
        if at_v > pendant:
            pendant = at_v
    if pendant > best:
        best, reason = pendant, "pendant-edges"

    # Trees need ceil(log2 n) colors.  Fix a root r and map each vertex v to
    # the set of colors appearing an odd number of times on the unique r-v
    # path.  For u != v the u-v path is the symmetric difference of the two
    # root paths, so per color the parities add; equal sets would make every
    # color appear an even number of times on the u-v path, and its unique
    # path would not be conflict-free.  The map is injective, so n <= 2^k.
    if g.m == g.n - 1 and g.n >= 2:
        tree_bound = (g.n - 1).bit_length()
        if tree_bound > best:
            best, reason = tree_bound, "tree-parity"
    return best, reason


def cfc_lower_bound(g: Graph) -> int:
    """Analytic lower bound on the conflict-free connection number; see
    _lower_bound_reason for the two arguments it rests on."""
    require_connected(g)
    if g.n < 2:
        raise ValueError("need n >= 2")
    return _lower_bound_reason(g)[0]


def _path_cache(g: Graph, cap: int = DEFAULT_PATH_CAP) -> list[list[tuple[int, ...]]]:
    """All simple paths (as edge-id tuples) for every vertex pair in
    lexicographic pair order."""
    cache = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            cache.append([p.edges for p in enumerate_simple_paths(g, u, v, cap=cap)])
    return cache


class _Budget:
    __slots__ = ("limit", "nodes")

    def __init__(self, limit: int):
        self.limit = limit
        self.nodes = 0

    def spend(self) -> None:
        self.nodes += 1
        if self.nodes > self.limit:
            raise SearchBudgetExceeded(self.limit, self.nodes)


def _search_level(
    m: int, pairs_paths: list[list[tuple[int, ...]]], k: int, budget: _Budget
) -> tuple[int, ...] | None:
    """Exhaustive search for a canonical coloring of m edges with at most k
    colors satisfying every pair; None when no such coloring exists."""
    # a pair is decided once its highest-indexed path edge is colored
    buckets: list[list[int]] = [[] for _ in range(m)]
    for pi, paths in enumerate(pairs_paths):
        buckets[max(max(p) for p in paths)].append(pi)

    colors = [0] * m
    max_before = [0] * (m + 1)

    def decided_ok(i: int) -> bool:
        for pi in buckets[i]:
            satisfied = False
            for p in pairs_paths[pi]:
                counts = [0] * (k + 1)
                for e in p:
                    counts[colors[e]] += 1
                if 1 in counts[1:]:
                    satisfied = True
                    break
            if not satisfied:
                return False
        return True

    i = 0
    while i >= 0:
        c = colors[i] + 1
        if c > min(k, max_before[i] + 1):
            colors[i] = 0
            i -= 1
            continue
        colors[i] = c
        budget.spend()
        if not decided_ok(i):
            continue
        if i == m - 1:
            return tuple(colors)
        if c > max_before[i]:
            max_before[i + 1] = c
        else:
            max_before[i + 1] = max_before[i]
        i += 1
    return None


def cfc_exact(
    g: Graph,
    budget: int = DEFAULT_BUDGET,
    use_analytic_bounds: bool = True,
    use_constructive_upper: bool = True,
    path_cap: int = DEFAULT_PATH_CAP,
) -> CfcResult:
    """Exact conflict-free connection number with a verified certificate.

    The two switches exist for cross-validation: with both off the solver
    degenerates to pure iterative deepening from 1 and trusts nothing but
    the verifier.
    """
    require_connected(g)
    if g.n < 2:
        raise ValueError("need n >= 2")
    lb, lb_reason = _lower_bound_reason(g) if use_analytic_bounds else (1, None)
    tracker = _Budget(budget)
    exhausted: dict[int, int] = {}

    # verify=False here: whichever certificate wins is re-checked below
    upper_cert = bridge_block_coloring(g, verify=False) if use_constructive_upper else None
    if upper_cert is not None and upper_cert.k < lb:
        raise RuntimeError(
            f"bound inversion: constructive {upper_cert.k} below analytic {lb}"
        )
    cap = upper_cert.k if upper_cert is not None else g.m

    cache: list[list[tuple[int, ...]]] | None = None
    value, certificate = None, None
    for k in range(lb, cap + 1):
        if upper_cert is not None and k == upper_cert.k:
            value, certificate = k, upper_cert
            break
        if k == 1:
            tracker.spend()
            ones = EdgeColoring((1,) * g.m)
            if is_conflict_free_connected(g, ones, cap=path_cap).ok:
                value, certificate = 1, ones
                break
            exhausted[1] = 1
            continue
        if cache is None:
            cache = _path_cache(g, path_cap)
        before = tracker.nodes
        found = _search_level(g.m, cache, k, tracker)
        if found is not None:
            value, certificate = k, EdgeColoring(found)
            break
        exhausted[k] = tracker.nodes - before
    if value is None or certificate is None:
        raise RuntimeError("search ended without a certificate; bounds are broken")

    report = is_conflict_free_connected(g, certificate, cap=path_cap)
    if not report.ok:
        raise RuntimeError(
            f"certificate failed independent verification at {report.failure_pair}"
        )
    evidence = SearchEvidence(
        analytic_bound=lb_reason if (value == lb and lb > 1) else None,
        exhausted=exhausted,
        nodes=tracker.nodes,
    )
    return CfcResult(value, certificate, lb, evidence)
