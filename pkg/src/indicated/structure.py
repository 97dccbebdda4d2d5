"""Structural decompositions and chromatic formulas for the supported
forbidden-subgraph classes.

Every decomposer validates the full claim list of its target structure as a
postcondition and fails loudly on violation instead of trusting the class
check; the class check and the decomposition cross-verify each other.
"""

from dataclasses import dataclass

from .detect import find_induced_cycle, is_bipartite, is_chordal, is_family_free, is_split
from .errors import (
    BadParam,
    Disconnected,
    NoInducedC5,
    NoInducedC6,
    NotInClass,
    StructureViolation,
)
from .graphs import Graph, bits, induced, is_connected, make_named, mask_of

__all__ = [
    "ExpansionStructure",
    "C5Decomposition",
    "C6Decomposition",
    "P5C4Decomposition",
    "Pod",
    "ComponentTag",
    "recognize_expansion",
    "decompose_p5k4kitebull",
    "decompose_p6c5claw",
    "decompose_p5c4",
    "sumner_classify",
    "chi_formula_kc5",
    "chi_p5k4kitebull",
    "family_p5k4kitebull",
    "family_p6c5claw",
    "family_p5c4",
    "family_sumner",
    "family_figure1",
]


def family_p5k4kitebull():
    return [make_named("P", 5), make_named("K", 4), make_named("Kite"), make_named("Bull")]


def family_p6c5claw():
    return [make_named("P", 6), make_named("C", 5), make_named("claw")]


def family_p6c5_house_claw():
    return family_p6c5claw() + [make_named("p5_bar")]


def family_p5c4():
    return [make_named("P", 5), make_named("C", 4)]


def family_sumner():
    return [make_named("P", 5), make_named("K", 3)]


def family_split_c5():
    return [make_named("P", 5), make_named("p2up3_bar"), make_named("p5_bar"),
            make_named("Dart")]


def family_figure1():
    """The five-vertex obstruction set used by the detector oracle."""
    return [make_named("Kite"), make_named("Dart"), make_named("Bull"),
            make_named("p5_bar"), make_named("p2up3_bar")]


# ---------------------------------------------------------------------------
# edge-set helpers
# ---------------------------------------------------------------------------

def _complete_between(g, xs, ys):
    ymask = mask_of(ys)
    return all((g.adj[x] & ymask) == (ymask & ~(1 << x)) for x in xs)


def _empty_between(g, xs, ys):
    ymask = mask_of(ys)
    return all(g.adj[x] & (ymask & ~(1 << x)) == 0 for x in xs)


def _is_clique(g, xs):
    m = mask_of(xs)
    return all((g.adj[x] & m).bit_count() == len(xs) - 1 for x in xs)


def _is_independent(g, xs):
    m = mask_of(xs)
    return all(g.adj[x] & m == 0 for x in xs)


# ---------------------------------------------------------------------------
# expansion recognition
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExpansionStructure:
    """A partition of V into modules realizing a cycle's adjacency: modules
    fully joined across cycle edges, fully non-adjacent otherwise."""

    graph: Graph
    base: Graph
    modules: tuple   # sorted vertex tuples, in cycle order
    kinds: tuple     # "complete" | "independent" | "split" | "arbitrary"

    @property
    def sizes(self):
        return tuple(len(m) for m in self.modules)

    def split_parts(self):
        """(clique part, independent part) per module, via the split
        certificate on each module's induced subgraph."""
        out = []
        for mod in self.modules:
            sub = induced(self.graph, mod)
            cert = is_split(sub)
            if cert is None:
                out.append(None)
                continue
            cl, ind = cert
            out.append((tuple(mod[i] for i in cl), tuple(mod[i] for i in ind)))
        return tuple(out)

    def validate(self):
        g = self.graph
        n = self.base.n
        all_vs = sorted(v for m in self.modules for v in m)
        if all_vs != list(range(g.n)):
            raise StructureViolation("modules do not partition V")
        for i in range(n):
            for j in range(i + 1, n):
                adjacent = (j - i) % n in (1, n - 1) or (i - j) % n in (1, n - 1)
                if n == 2:
                    adjacent = True
                if adjacent:
                    if not _complete_between(g, self.modules[i], self.modules[j]):
                        raise StructureViolation(f"[M{i},M{j}] not complete")
                elif not _empty_between(g, self.modules[i], self.modules[j]):
                    raise StructureViolation(f"[M{i},M{j}] not empty")
        for i, kind in enumerate(self.kinds):
            sub_ok = {
                "complete": _is_clique(g, self.modules[i]),
                "independent": _is_independent(g, self.modules[i]),
                "split": is_split(induced(g, self.modules[i])) is not None,
                "arbitrary": True,
            }[kind]
            if not sub_ok:
                raise StructureViolation(f"module {i} is not {kind}")
        return self


def _cycle_order(base):
    """Vertices of a cycle graph in traversal order, or None."""
    n = base.n
    if n < 3 or any(base.degree(v) != 2 for v in range(n)):
        return None
    order = [0]
    prev = None
    cur = 0
    for _ in range(n - 1):
        nbrs = [u for u in bits(base.adj[cur]) if u != prev]
        nxt = min(nbrs)
        order.append(nxt)
        prev, cur = cur, nxt
    if len(set(order)) != n or not base.has_edge(order[-1], order[0]):
        return None
    return order


def _induced_cycles(g, n):
    """All induced n-cycles, canonically (min vertex first, lesser neighbor
    second), in lexicographic order."""
    adj = g.adj
    out = []

    def grow(path, pmask):
        i = len(path)
        if i == n:
            if adj[path[-1]] & 1 << path[0]:
                out.append(tuple(path))
            return
        v0 = path[0]
        for x in bits(adj[path[-1]]):
            if x <= v0 or pmask & (1 << x):
                continue
            bad = False
            for j in range(i - 1):
                needs = (i == n - 1 and j == 0)
                if bool(adj[x] & (1 << path[j])) != needs:
                    bad = True
                    break
            if bad:
                continue
            if i == n - 1 and path[1] > x:
                # canonical direction: second vertex below last
                continue
            path.append(x)
            grow(path, pmask | (1 << x))
            path.pop()

    for v0 in range(g.n):
        grow([v0], 1 << v0)
    return sorted(out)


def _kind_label(g, module, allowed):
    sub_clique = _is_clique(g, module)
    sub_ind = _is_independent(g, module)
    for kind in allowed:
        if kind == "complete" and sub_clique:
            return kind
        if kind == "independent" and sub_ind:
            return kind
        if kind == "split" and is_split(induced(g, module)) is not None:
            return kind
        if kind == "arbitrary":
            return kind
    return None


def recognize_expansion(g, base, allowed=("complete", "independent")):
    """Recognize g as an expansion of the cycle `base` whose modules all fall
    under the allowed kinds; None if no such partition exists.

    Seeds on induced base-length cycles in lexicographic order, assigns the
    remaining vertices to cycle positions by their adjacency pattern against
    the seed (backtracking over the rare ambiguous cases), and canonicalizes
    the module order over all rotations/reflections by least contained id.
    """
    order = _cycle_order(base)
    if order is None or base.n > 8:
        raise BadParam("base must be a cycle on 3..8 vertices")
    n = base.n
    if g.n < n:
        return None
    only_complete = set(allowed) == {"complete"}
    only_independent = set(allowed) == {"independent"}

    for seed in _induced_cycles(g, n):
        assignment = _assign_to_cycle(g, seed, n, only_complete, only_independent)
        if assignment is None:
            continue
        modules = [[] for _ in range(n)]
        for v, pos in enumerate(assignment):
            modules[pos].append(v)
        kinds = [None] * n
        ok = True
        for i in range(n):
            modules[i].sort()
            kinds[i] = _kind_label(g, modules[i], allowed)
            if kinds[i] is None:
                ok = False
                break
        if not ok:
            continue
        modules, kinds = _canonical_rotation(modules, kinds, n)
        structure = ExpansionStructure(g, base, tuple(tuple(m) for m in modules),
                                       tuple(kinds))
        try:
            structure.validate()
        except StructureViolation:
            continue
        return structure
    return None


def _assign_to_cycle(g, seed, n, only_complete, only_independent):
    """Map every vertex to a cycle position consistent with the seed, or
    None.  seed[i] anchors position i."""
    pos = [-1] * g.n
    for i, v in enumerate(seed):
        pos[v] = i
    rest = [v for v in range(g.n) if pos[v] == -1]

    def candidates(v):
        row = g.adj[v]
        cands = []
        for p in range(n):
            ok = True
            for q in range(n):
                has = bool(row & (1 << seed[q]))
                if q == p:
                    if only_complete and not has:
                        ok = False
                    if only_independent and has:
                        ok = False
                elif (q - p) % n in (1, n - 1):
                    ok = ok and has
                else:
                    ok = ok and not has
                if not ok:
                    break
            if ok:
                cands.append(p)
        return cands

    def consistent(v, p, placed):
        row = g.adj[v]
        for u in placed:
            q = pos[u]
            has = bool(row & (1 << u))
            if q == p:
                if only_complete and not has:
                    return False
                if only_independent and has:
                    return False
            elif (q - p) % n in (1, n - 1):
                if not has:
                    return False
            elif has:
                return False
        return True

    placed = []

    def assign(idx):
        if idx == len(rest):
            return True
        v = rest[idx]
        for p in candidates(v):
            if consistent(v, p, placed):
                pos[v] = p
                placed.append(v)
                if assign(idx + 1):
                    return True
                placed.pop()
                pos[v] = -1
        return False

    if assign(0):
        return pos
    return None


def _canonical_rotation(modules, kinds, n):
    best = None
    for refl in (False, True):
        idx = list(range(n))
        if refl:
            idx = [0] + list(range(n - 1, 0, -1))
        for r in range(n):
            perm = [idx[(i + r) % n] for i in range(n)]
            key = tuple(modules[p][0] for p in perm)
            if best is None or key < best[0]:
                best = (key, perm)
    perm = best[1]
    return [modules[p] for p in perm], [kinds[p] for p in perm]


# ---------------------------------------------------------------------------
# layered decomposition around an induced C5
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class C5Decomposition:
    """Partition of a connected {P5,K4,Kite,Bull}-free graph around an
    induced 5-cycle: five sets A_0..A_4 extending the cycle into an
    independent expansion, a hub set B seeing the whole cycle, the
    second-layer split S / rest, and the third layer with its apex."""

    graph: Graph
    cycle: tuple
    A: tuple        # five sorted vertex tuples (A_i contains cycle[i])
    B: tuple
    S: tuple
    n2_rest: tuple
    V3: tuple
    xstar: object   # vertex or None

    @property
    def V1(self):
        return tuple(sorted(v for part in self.A for v in part) + list(self.n2_rest))

    @property
    def V2(self):
        return tuple(sorted(self.B + self.S))

    @property
    def is_unit(self):
        """True when the graph is exactly an independent expansion of C5."""
        return not self.B

    def validate(self):
        g = self.graph
        v1, v2, v3 = self.V1, self.V2, self.V3
        pieces = list(v1) + list(v2) + list(v3)
        if sorted(pieces) != list(range(g.n)):
            raise StructureViolation("blocks do not partition V")
        if not _is_independent(g, self.B):
            raise StructureViolation("B is not independent")
        if not _is_independent(g, self.S):
            raise StructureViolation("S is not independent")
        if not _complete_between(g, self.B, self.S):
            raise StructureViolation("[B,S] not complete")
        if not _complete_between(g, v1, self.B):
            raise StructureViolation("[V1,B] not complete")
        if not _empty_between(g, v1, self.S):
            raise StructureViolation("[V1,S] not empty")
        if not _empty_between(g, v1, v3):
            raise StructureViolation("[V1,V3] not empty")
        if not _empty_between(g, v3, self.B):
            raise StructureViolation("[V3,B] not empty")
        if v3:
            if self.xstar is None or self.xstar not in self.S:
                raise StructureViolation("missing apex vertex for V3")
            if not _complete_between(g, [self.xstar], v3):
                raise StructureViolation("[apex,V3] not complete")
        a_all = sorted(v for part in self.A for v in part)
        if not _empty_between(g, a_all, self.n2_rest):
            raise StructureViolation("cycle classes touch the second layer")
        if recognize_expansion(induced(g, a_all), make_named("C", 5),
                               allowed=("independent",)) is None:
            raise StructureViolation(
                "cycle classes are not an independent C5 expansion")
        core = induced(g, v1 + v3) if v1 or v3 else None
        if core is not None:
            _check_ic5_or_bipartite_components(core)
        return self


def _check_ic5_or_bipartite_components(g):
    """Each component must be bipartite or an independent expansion of C5."""
    from .graphs import components

    base = make_named("C", 5)
    for comp in components(g):
        sub = induced(g, comp)
        if is_bipartite(sub) is not None:
            continue
        if recognize_expansion(sub, base, allowed=("independent",)) is None:
            raise StructureViolation(
                "component neither bipartite nor an independent C5 expansion")


def decompose_p5k4kitebull(g):
    """Layered decomposition of a connected {P5,K4,Kite,Bull}-free graph
    containing an induced C5.

    Layers are distances from the (lexicographically least) induced C5.
    First-layer vertices land in A_i when they see exactly the two cycle
    vertices around position i, in B when they see all five; second-layer
    vertices with third-layer neighbors form S; layer four must be empty.
    The full invariant suite is re-validated before returning.
    """
    if not is_connected(g):
        raise Disconnected("decomposition requires a connected graph")
    cyc = find_induced_cycle(g, 5)
    if cyc is None:
        raise NoInducedC5("no induced C5")
    free, witness = is_family_free(g, family_p5k4kitebull())
    if not free:
        raise NotInClass("graph is not {P5,K4,Kite,Bull}-free", witness)
    layers = _bfs_layers(g, cyc)
    if len(layers) > 4:
        raise StructureViolation("vertices at distance >= 4 from the cycle")
    n1 = layers[1] if len(layers) > 1 else []
    n2 = layers[2] if len(layers) > 2 else []
    n3 = layers[3] if len(layers) > 3 else []
    A = [[cyc[i]] for i in range(5)]
    B = []
    cyc_pos = {v: i for i, v in enumerate(cyc)}
    for x in n1:
        hits = sorted(cyc_pos[u] for u in bits(g.adj[x]) if u in cyc_pos)
        if len(hits) == 5:
            B.append(x)
        elif len(hits) == 2 and (hits[1] - hits[0]) % 5 in (2, 3):
            a, b = hits
            i = (a + 1) % 5 if (b - a) % 5 == 2 else (b + 1) % 5
            A[i].append(x)
        else:
            raise StructureViolation(
                f"first-layer vertex {x} sees cycle positions {hits}")
    n3mask = mask_of(n3)
    S = [x for x in n2 if g.adj[x] & n3mask]
    n2_rest = [x for x in n2 if x not in set(S)]
    xstar = None
    if n3:
        for x in S:
            if g.adj[x] & n3mask == n3mask:
                xstar = x
                break
        if xstar is None:
            raise StructureViolation("no second-layer vertex sees all of V3")
    dec = C5Decomposition(
        graph=g,
        cycle=tuple(cyc),
        A=tuple(tuple(sorted(part)) for part in A),
        B=tuple(sorted(B)),
        S=tuple(sorted(S)),
        n2_rest=tuple(sorted(n2_rest)),
        V3=tuple(sorted(n3)),
        xstar=xstar,
    )
    return dec.validate()


def _bfs_layers(g, roots):
    dist = [-1] * g.n
    frontier = list(roots)
    for v in frontier:
        dist[v] = 0
    d = 0
    layers = [sorted(frontier)]
    while frontier:
        nxt = []
        for v in frontier:
            for u in bits(g.adj[v]):
                if dist[u] == -1:
                    dist[u] = d + 1
                    nxt.append(u)
        d += 1
        frontier = nxt
        if frontier:
            layers.append(sorted(frontier))
    return layers


def chi_p5k4kitebull(dec):
    """Chromatic number from the decomposition: 3 exactly when the graph is
    an independent C5 expansion (B empty), else 4."""
    return 3 if dec.is_unit else 4


# ---------------------------------------------------------------------------
# structure around an induced C6
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class C6Decomposition:
    """Structure of a connected {P6,C5,claw}-free graph with an induced C6:
    six clique sets A_0..A_5 forming a complete expansion of C6, plus three
    clique sets B_0..B_2 (B_j attached to every A_i with i % 3 != j)."""

    graph: Graph
    cycle: tuple
    A: tuple   # six sorted vertex tuples
    B: tuple   # three sorted vertex tuples

    @property
    def is_kc6(self):
        return not any(self.B)

    def validate(self):
        g = self.graph
        pieces = [v for part in self.A for v in part]
        pieces += [v for part in self.B for v in part]
        if sorted(pieces) != list(range(g.n)):
            raise StructureViolation("blocks do not partition V")
        for i in range(6):
            if not _is_clique(g, self.A[i]):
                raise StructureViolation(f"A_{i} is not a clique")
            if not _complete_between(g, self.A[i], self.A[(i + 1) % 6]):
                raise StructureViolation(f"[A_{i},A_{i + 1}] not complete")
            for d in (2, 3):
                if not _empty_between(g, self.A[i], self.A[(i + d) % 6]):
                    raise StructureViolation(f"[A_{i},A_{i + d}] not empty")
        for j in range(3):
            if not _is_clique(g, self.B[j]):
                raise StructureViolation(f"B_{j} is not a clique")
            for jj in range(j + 1, 3):
                if not _empty_between(g, self.B[j], self.B[jj]):
                    raise StructureViolation(f"[B_{j},B_{jj}] not empty")
        for i in range(6):
            for j in range(3):
                if i % 3 == j:
                    if not _empty_between(g, self.A[i], self.B[j]):
                        raise StructureViolation(f"[A_{i},B_{j}] not empty")
                elif not _complete_between(g, self.A[i], self.B[j]):
                    raise StructureViolation(f"[A_{i},B_{j}] not complete")
        return self


def decompose_p6c5claw(g):
    """Classify a connected {P6,C5,claw}-free graph with an induced C6.

    Every vertex is within distance 1 of the cycle; first-layer vertices see
    either three consecutive cycle vertices (joining A of the middle one) or
    everything except an opposite pair (joining the B class of that pair).
    """
    if not is_connected(g):
        raise Disconnected("decomposition requires a connected graph")
    cyc = find_induced_cycle(g, 6)
    if cyc is None:
        raise NoInducedC6("no induced C6")
    free, witness = is_family_free(g, family_p6c5claw())
    if not free:
        raise NotInClass("graph is not {P6,C5,claw}-free", witness)
    layers = _bfs_layers(g, cyc)
    if len(layers) > 2:
        raise StructureViolation("vertices at distance >= 2 from the cycle")
    A = [[cyc[i]] for i in range(6)]
    B = [[], [], []]
    cyc_pos = {v: i for i, v in enumerate(cyc)}
    for x in (layers[1] if len(layers) > 1 else []):
        hits = {cyc_pos[u] for u in bits(g.adj[x]) if u in cyc_pos}
        placed = False
        if len(hits) == 3:
            for i in range(6):
                if hits == {(i - 1) % 6, i, (i + 1) % 6}:
                    A[i].append(x)
                    placed = True
                    break
        elif len(hits) == 4:
            missing = set(range(6)) - hits
            lo = min(missing)
            if missing == {lo, lo + 3}:
                B[lo % 3].append(x)
                placed = True
        if not placed:
            raise StructureViolation(
                f"first-layer vertex {x} sees cycle positions {sorted(hits)}")
    dec = C6Decomposition(
        graph=g,
        cycle=tuple(cyc),
        A=tuple(tuple(sorted(part)) for part in A),
        B=tuple(tuple(sorted(part)) for part in B),
    )
    return dec.validate()


# ---------------------------------------------------------------------------
# triangle-free / P5-free classification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ComponentTag:
    vertices: tuple
    kind: str        # "bipartite" | "ic5"
    certificate: object


def sumner_classify(g):
    """Per-component certificates for a {P5,K3}-free graph: a 2-partition,
    or the module structure of an independent C5 expansion."""
    from .graphs import components

    free, witness = is_family_free(g, family_sumner())
    if not free:
        raise NotInClass("graph is not {P5,K3}-free", witness)
    base = make_named("C", 5)
    tags = []
    for comp in components(g):
        sub = induced(g, comp)
        two = is_bipartite(sub)
        if two is not None:
            side0 = tuple(comp[i] for i in two[0])
            side1 = tuple(comp[i] for i in two[1])
            tags.append(ComponentTag(tuple(comp), "bipartite", (side0, side1)))
            continue
        es = recognize_expansion(sub, base, allowed=("independent",))
        if es is None:
            raise StructureViolation(
                "non-bipartite component is not an independent C5 expansion")
        modules = tuple(tuple(comp[i] for i in mod) for mod in es.modules)
        tags.append(ComponentTag(tuple(comp), "ic5", modules))
    return tags


# ---------------------------------------------------------------------------
# chromatic formulas
# ---------------------------------------------------------------------------

def chi_formula_kc5(sizes):
    """Chromatic number of a complete expansion of C5 with the given part
    sizes: the larger of the biggest adjacent-pair sum and half the order,
    rounded up."""
    m = tuple(sizes)
    if len(m) != 5 or any(x < 1 for x in m):
        raise BadParam("need five positive part sizes")
    omega = max(m[i] + m[(i + 1) % 5] for i in range(5))
    return max(omega, (sum(m) + 1) // 2)


# ---------------------------------------------------------------------------
# chordal part + complete-expansion pods ({P5,C4}-free graphs)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Pod:
    """A complete expansion of C5 hanging off a clique neighborhood."""

    vertices: tuple
    modules: tuple        # five sorted vertex tuples
    clique_nbhd: tuple    # N(pod), a clique inside the chordal part

    @property
    def sizes(self):
        return tuple(len(m) for m in self.modules)


@dataclass(frozen=True)
class P5C4Decomposition:
    graph: Graph
    chordal_part: tuple
    elimination_order: tuple
    pods: tuple

    def validate(self):
        g = self.graph
        pieces = list(self.chordal_part)
        for pod in self.pods:
            pieces += list(pod.vertices)
        if sorted(pieces) != list(range(g.n)):
            raise StructureViolation("pods + chordal part do not partition V")
        sub = induced(g, self.chordal_part)
        if is_chordal(sub) is None:
            raise StructureViolation("claimed chordal part is not chordal")
        core = set(self.chordal_part)
        for pod in self.pods:
            _validate_kc5_modules(g, pod.modules)
            nbhd = set()
            for v in pod.vertices:
                nbhd |= {u for u in bits(g.adj[v]) if u not in pod.vertices}
            if nbhd != set(pod.clique_nbhd):
                raise StructureViolation("pod neighborhood mismatch")
            if not nbhd <= core:
                raise StructureViolation("pod touches another pod")
            if not _is_clique(g, sorted(nbhd)):
                raise StructureViolation("pod neighborhood is not a clique")
            if not _complete_between(g, pod.vertices, sorted(nbhd)):
                raise StructureViolation("pod not fully joined to its neighborhood")
        return self


def _validate_kc5_modules(g, modules):
    for i in range(5):
        if not _is_clique(g, modules[i]):
            raise StructureViolation("pod module is not a clique")
        if not _complete_between(g, modules[i], modules[(i + 1) % 5]):
            raise StructureViolation("adjacent pod modules not joined")
        if not _empty_between(g, modules[i], modules[(i + 2) % 5]):
            raise StructureViolation("distant pod modules adjacent")


def decompose_p5c4(g):
    """Split a connected {P5,C4}-free graph into a chordal part and pods,
    each pod a complete expansion of C5 fully joined to a clique inside the
    chordal part.

    Pods are grown greedily: seed an induced C5 among unassigned vertices,
    absorb vertices whose adjacency matches one module's pattern until a
    fixpoint, validate, repeat.  Seeds are tried in lexicographic order, so
    the result is deterministic; postcondition validation guards the greedy
    choices.
    """
    if not is_connected(g):
        raise Disconnected("decomposition requires a connected graph")
    free, witness = is_family_free(g, family_p5c4())
    if not free:
        raise NotInClass("graph is not {P5,C4}-free", witness)
    remaining = list(range(g.n))
    pods = []
    while True:
        sub = induced(g, remaining)
        pod = None
        for seed in _induced_cycles(sub, 5):
            modules = _grow_kc5_pod(sub, seed)
            if modules is not None:
                pod = tuple(tuple(sorted(remaining[i] for i in mod)) for mod in modules)
                break
        if pod is None:
            break
        pod_vs = tuple(sorted(v for mod in pod for v in mod))
        pod_mask = mask_of(pod_vs)
        nbhd = set()
        for v in pod_vs:
            nbhd |= {u for u in bits(g.adj[v] & ~pod_mask)}
        pods.append(Pod(pod_vs, pod, tuple(sorted(nbhd))))
        remaining = [v for v in remaining if v not in set(pod_vs)]
    dec = P5C4Decomposition(
        graph=g,
        chordal_part=tuple(remaining),
        elimination_order=is_chordal(induced(g, remaining)) or (),
        pods=tuple(pods),
    )
    return dec.validate()


def _grow_kc5_pod(g, seed):
    """Extend an induced C5 to maximal modules matching the complete
    expansion pattern; None if the result is not a clean pod."""
    modules = [[v] for v in seed]
    assigned = set(seed)
    changed = True
    while changed:
        changed = False
        for x in range(g.n):
            if x in assigned:
                continue
            for i in range(5):
                inside = modules[(i - 1) % 5] + modules[i] + modules[(i + 1) % 5]
                outside = modules[(i + 2) % 5] + modules[(i + 3) % 5]
                if all(g.has_edge(x, u) for u in inside) and \
                        not any(g.has_edge(x, u) for u in outside):
                    modules[i].append(x)
                    assigned.add(x)
                    changed = True
                    break
    try:
        _validate_kc5_modules(g, [tuple(sorted(m)) for m in modules])
    except StructureViolation:
        return None
    return [sorted(m) for m in modules]
