"""Induced-subgraph detection and class predicates (bipartite/chordal/split).

All searches are deterministic: candidates are scanned in ascending id order,
so the witness returned is the lexicographically least one.  Patterns are
small (<= 10 vertices); the backtracking search with bitset pruning is more
than enough at that scale.
"""

from dataclasses import dataclass

from .errors import PatternTooLarge
from .graphs import Graph, bits, induced, mask_of

MAX_PATTERN = 10

__all__ = [
    "Embedding",
    "find_induced",
    "is_family_free",
    "find_induced_cycle",
    "is_bipartite",
    "is_chordal",
    "is_split",
]


@dataclass(frozen=True)
class Embedding:
    """Injective map pattern -> host preserving adjacency and
    non-adjacency (an induced embedding)."""

    pattern: Graph
    host: Graph
    map: tuple

    def verify(self):
        p, h, m = self.pattern, self.host, self.map
        if len(set(m)) != p.n:
            return False
        for a in range(p.n):
            for b in range(a + 1, p.n):
                if p.has_edge(a, b) != h.has_edge(m[a], m[b]):
                    return False
        return True


def find_induced(host, pattern):
    """Lexicographically least induced embedding of pattern in host, or None.

    Pattern vertices are matched in id order; host candidates per pattern
    vertex are pre-filtered by degree and extended with full
    adjacency/non-adjacency checks against already-placed vertices.
    """
    if pattern.n > MAX_PATTERN:
        raise PatternTooLarge(f"pattern has {pattern.n} > {MAX_PATTERN} vertices")
    p, h = pattern, host
    if p.n > h.n:
        return None
    if p.n == 0:
        return Embedding(p, h, ())
    pdeg = [p.degree(v) for v in range(p.n)]
    cands = [[v for v in range(h.n) if h.degree(v) >= pdeg[u]] for u in range(p.n)]
    image = [0] * p.n
    used = 0

    def place(u):
        nonlocal used
        prow = p.adj[u]
        for v in cands[u]:
            bit = 1 << v
            if used & bit:
                continue
            ok = True
            for w in range(u):
                if bool(prow & (1 << w)) != bool(h.adj[v] & (1 << image[w])):
                    ok = False
                    break
            if not ok:
                continue
            image[u] = v
            if u + 1 == p.n:
                return True
            used |= bit
            if place(u + 1):
                return True
            used &= ~bit
        return False

    if place(0):
        return Embedding(p, h, tuple(image))
    return None


def is_family_free(host, family):
    """(True, None) if no family member embeds induced, else
    (False, first witness) scanning the family in order."""
    for pattern in family:
        emb = find_induced(host, pattern)
        if emb is not None:
            return False, emb
    return True, None


def find_induced_cycle(host, length):
    """Ordered vertex list of a chordless cycle of the given length, or None.

    Canonical choice: the cycle starts at the least possible vertex and the
    search extends by ascending ids, so the returned tuple is the
    lexicographically least among all orientations it examines.
    """
    n = length
    if n < 3 or n > host.n:
        return None
    from .graphs import make_named

    emb = find_induced(host, make_named("C", n))
    if emb is None:
        return None
    return list(emb.map)


def is_bipartite(g):
    """2-partition certificate (side0, side1) or None.  Each component's
    least vertex goes in side 0."""
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = [root]
        while queue:
            v = queue.pop(0)
            for u in bits(g.adj[v]):
                if color[u] == -1:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    side0 = [v for v in range(g.n) if color[v] == 0]
    side1 = [v for v in range(g.n) if color[v] == 1]
    return side0, side1


def is_chordal(g):
    """Perfect elimination order or None.

    Runs maximum cardinality search (ties by least id) to get a candidate
    order, then verifies the elimination property directly: every vertex's
    later neighbors must form a clique.  The verification pass makes the
    certificate self-checking.
    """
    n = g.n
    if n == 0:
        return ()
    weight = [0] * n
    picked = [False] * n
    mcs = []
    for _ in range(n):
        v = max(((weight[u], -u) for u in range(n) if not picked[u]))[1]
        v = -v
        picked[v] = True
        mcs.append(v)
        for u in bits(g.adj[v]):
            if not picked[u]:
                weight[u] += 1
    peo = tuple(reversed(mcs))
    pos = {v: i for i, v in enumerate(peo)}
    for v in peo:
        later = [u for u in bits(g.adj[v]) if pos[u] > pos[v]]
        for a in range(len(later)):
            for b in range(a + 1, len(later)):
                if not g.has_edge(later[a], later[b]):
                    return None
    return peo


def is_split(g):
    """Split certificate (clique part, independent part) or None.

    Candidate clique side: the m largest-degree vertices from the classic
    degree-sequence test, verified directly; a brute-force fallback covers
    degenerate ties.  The clique side is then grown by the least-id
    independent vertex adjacent to all of it, so no independent vertex sees
    the whole clique side in the returned certificate.
    """
    n = g.n
    if n == 0:
        return [], []
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    degs = [g.degree(v) for v in order]
    m = 0
    for i in range(n):
        if degs[i] >= i:
            m = i + 1
    lhs = sum(degs[:m])
    rhs = m * (m - 1) + sum(degs[m:])
    if lhs != rhs:
        return None

    def valid(cl):
        cmask = mask_of(cl)
        for v in cl:
            if (g.adj[v] & cmask).bit_count() != len(cl) - 1:
                return False
        rest = [v for v in range(n) if not (cmask >> v) & 1]
        rmask = mask_of(rest)
        return all(g.adj[v] & rmask == 0 for v in rest)

    clique = sorted(order[:m])
    if not valid(clique):
        clique = _split_fallback(g, m)
        if clique is None:
            return None
    cmask = mask_of(clique)
    for v in range(n):
        if not (cmask >> v) & 1 and g.adj[v] & cmask == cmask:
            clique = sorted(clique + [v])
            cmask |= 1 << v
            break
    independent = [v for v in range(n) if not (cmask >> v) & 1]
    return clique, independent


def _split_fallback(g, m):
    """Exhaustive search for a clique side of size m (rare tie repair)."""
    from itertools import combinations

    for cl in combinations(range(g.n), m):
        cmask = mask_of(cl)
        if any((g.adj[v] & cmask).bit_count() != m - 1 for v in cl):
            continue
        rest = [v for v in range(g.n) if not (cmask >> v) & 1]
        rmask = mask_of(rest)
        if all(g.adj[v] & rmask == 0 for v in rest):
            return sorted(cl)
    return None


def brute_force_induced(host, pattern):
    """Independent oracle: try every |pattern|-subset and every ordering.

    Deliberately naive (used to cross-check find_induced); the only
    optimization is a sorted-degree prefilter per subset.
    """
    from itertools import combinations, permutations

    p = pattern
    if p.n > host.n:
        return False
    pseq = p.degree_sequence()
    for subset in combinations(range(host.n), p.n):
        sub = induced(host, subset)
        if sub.degree_sequence() != pseq:
            continue
        for perm in permutations(range(p.n)):
            if all(
                p.has_edge(a, b) == sub.has_edge(perm[a], perm[b])
                for a in range(p.n)
                for b in range(a + 1, p.n)
            ):
                return True
    return False
