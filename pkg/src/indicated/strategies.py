"""Constructive vertex-selection strategies, each certified by play against
the optimal adversary.

A strategy is a stateful policy: ``next_vertex(state)`` picks the vertex to
present, ``notify(state)`` observes the adversary's reply.  Factories raise
NotApplicable when the graph is outside the strategy's class and
BoundViolated when the palette is below the strategy's guaranteed bound.

Several strategies run sub-strategies on induced subgraphs over a virtual
palette (a subset of the host colors).  The wrapper checks that every reply
on the subgraph lands inside the virtual palette whenever the surrounding
decomposition guarantees it, turning the correctness argument's claims into
runtime assertions.
"""

from .detect import is_family_free
from .errors import (
    BoundViolated,
    Disconnected,
    NoInducedC5,
    NoInducedC6,
    NotApplicable,
    NotInClass,
    NotWinnable,
    StructureViolation,
    StrategyInvariantViolation,
    TooLarge,
)
from .game import DEFAULT_SOLVE_LIMIT, GameSolver, GameState, _concrete_replies, chi_exact
from .graphs import components, degeneracy, induced, make_named
from .structure import (
    chi_formula_kc5,
    chi_p5k4kitebull,
    decompose_p5c4,
    decompose_p5k4kitebull,
    family_p6c5_house_claw,
    recognize_expansion,
)

__all__ = [
    "Strategy",
    "CounterLedger",
    "strat_degeneracy",
    "strat_cycle_expansion",
    "strat_kc6",
    "strat_kc5",
    "strat_union",
    "strat_components",
    "strat_p5k4kitebull",
    "strat_split_c5",
    "strat_split_c5_plus_clique",
    "strat_p5c4",
    "strat_p6c5_class",
    "strat_solver_backed",
    "STRATEGY_REGISTRY",
]


class Strategy:
    """Base selector policy."""

    name = "strategy"

    def next_vertex(self, state):
        raise NotImplementedError

    def notify(self, state):
        pass


def _decompose_for_strategy(decomposer, g):
    """Class preconditions surface as NotApplicable at the strategy level."""
    try:
        return decomposer(g)
    except (Disconnected, NoInducedC5, NoInducedC6, NotInClass) as exc:
        raise NotApplicable(str(exc)) from exc


# ---------------------------------------------------------------------------
# phase framework
# ---------------------------------------------------------------------------

class StaticPhase:
    """Presents a fixed vertex list in order."""

    def __init__(self, vertices, guard=None):
        self.vertices = list(vertices)
        self.guard = guard

    def done(self, state):
        return all(state.colors[v] for v in self.vertices)

    def next_vertex(self, state):
        for v in self.vertices:
            if not state.colors[v]:
                if self.guard is not None:
                    self.guard(state, v)
                return v
        raise StrategyInvariantViolation("phase already finished")

    def notify(self, state):
        pass


class SubGamePhase:
    """Plays an induced subgraph with a lazily-built sub-strategy over a
    virtual palette (None = the full host palette)."""

    def __init__(self, vertices, factory, palette=None, label=""):
        self.vertices = tuple(sorted(vertices))
        self.factory = factory
        self.palette_fn = palette
        self.label = label
        self._sub = None
        self._palette = None
        self._graph = None

    def _ensure(self, state):
        if self._sub is not None:
            return
        if self.palette_fn is None:
            self._palette = tuple(range(1, state.k + 1))
        else:
            self._palette = tuple(sorted(self.palette_fn(state)))
        self._graph = induced(state.graph, self.vertices)
        self._sub = self.factory(self._graph, len(self._palette))

    def _local_state(self, state):
        colors = []
        for v in self.vertices:
            c = state.colors[v]
            if c == 0:
                colors.append(0)
            elif c in self._palette:
                colors.append(self._palette.index(c) + 1)
            else:
                raise StructureViolation(
                    f"{self.label or 'sub-play'}: reply color {c} outside the "
                    f"virtual palette {self._palette}")
        return GameState(self._graph, len(self._palette), colors)

    def done(self, state):
        return all(state.colors[v] for v in self.vertices)

    def next_vertex(self, state):
        self._ensure(state)
        local = self._sub.next_vertex(self._local_state(state))
        return self.vertices[local]

    def notify(self, state):
        if self._sub is None:
            return
        self._sub.notify(self._local_state(state))


class PhasedStrategy(Strategy):
    """Runs phases to completion in order."""

    def __init__(self, name, phases):
        self.name = name
        self.phases = list(phases)
        self._idx = 0

    def _current(self, state):
        while self._idx < len(self.phases) and self.phases[self._idx].done(state):
            self._idx += 1
        if self._idx == len(self.phases):
            raise StrategyInvariantViolation("all phases finished but game continues")
        return self.phases[self._idx]

    def next_vertex(self, state):
        return self._current(state).next_vertex(state)

    def notify(self, state):
        if self._idx < len(self.phases):
            self.phases[self._idx].notify(state)


# ---------------------------------------------------------------------------
# elementary strategies
# ---------------------------------------------------------------------------

def strat_degeneracy(g, k):
    """Present vertices in reverse minimum-degree elimination order, so each
    presented vertex has fewer colored neighbors than col(G)."""
    res = degeneracy(g)
    if k < res.col:
        raise BoundViolated(f"need k >= col = {res.col}, got {k}")
    return PhasedStrategy("degeneracy", [StaticPhase(list(reversed(res.order)))])


def strat_solver_backed(g, k, *, solve_limit=DEFAULT_SOLVE_LIMIT, canon="twins"):
    """Game-theoretically optimal play from the memoized exact solve."""
    if g.n > solve_limit:
        raise TooLarge(f"n={g.n} exceeds solve limit {solve_limit}")
    solver = GameSolver(g, k, canon=canon)
    if not solver.value(()):
        raise NotWinnable(f"position not winnable with k={k}")
    return _SolverStrategy(solver)


class _SolverStrategy(Strategy):
    name = "solver"

    def __init__(self, solver):
        self.solver = solver

    def next_vertex(self, state):
        g, k = self.solver.g, self.solver.k
        by_color = state.color_class_masks()
        for v in range(g.n):
            if state.colors[v]:
                continue
            replies = _concrete_replies(g, k, by_color, v)
            if replies and all(self.solver.value(ch) for _, ch in replies):
                return v
        raise StrategyInvariantViolation("solver-backed strategy in a lost position")


def strat_cycle_expansion(g, k):
    """Winning plan for independent expansions of a cycle: one
    representative per module around the cycle, then everything else."""
    structure = None
    for n in range(3, g.n + 1):
        structure = recognize_expansion(g, make_named("C", n),
                                        allowed=("independent",))
        if structure is not None:
            break
    if structure is None:
        raise NotApplicable("not an independent expansion of a cycle")
    n = structure.base.n
    chi = 2 if n % 2 == 0 else 3
    if k < chi:
        raise BoundViolated(f"need k >= {chi}, got {k}")
    reps = [mod[0] for mod in structure.modules]
    rest = sorted(v for mod in structure.modules for v in mod[1:])
    return PhasedStrategy("cycle-expansion", [StaticPhase(reps), StaticPhase(rest)])


# ---------------------------------------------------------------------------
# complete expansions of C6
# ---------------------------------------------------------------------------

def _dihedral_orders(n):
    for refl in (False, True):
        base = list(range(n)) if not refl else [0] + list(range(n - 1, 0, -1))
        for r in range(n):
            yield [base[(i + r) % n] for i in range(n)]


def _rotate_modules(structure, score):
    """Best dihedral reordering of the modules by `score` (lower wins)."""
    mods = structure.modules
    n = len(mods)
    best = None
    for perm in _dihedral_orders(n):
        cand = tuple(mods[p] for p in perm)
        key = score(tuple(len(m) for m in cand)) + (tuple(m[0] for m in cand),)
        if best is None or key < best[0]:
            best = (key, cand)
    return best[1]


def strat_kc6(g, k):
    """Winning plan for complete expansions of C6: a maximum clique pair
    first, its two outside neighbors next, then the remaining opposite pair
    interleaved so the later module never runs out of colors."""
    structure = recognize_expansion(g, make_named("C", 6), allowed=("complete",))
    if structure is None:
        raise NotApplicable("not a complete expansion of C6")
    sizes = structure.sizes
    omega = max(sizes[i] + sizes[(i + 1) % 6] for i in range(6))
    if k < omega:
        raise BoundViolated(f"need k >= clique number {omega}, got {k}")
    mods = _rotate_modules(structure, lambda s: (-(s[0] + s[1]), s))
    return _KC6Strategy(g, k, mods)


class _KC6Strategy(Strategy):
    name = "kc6"

    def __init__(self, g, k, modules):
        self.g = g
        self.k = k
        self.modules = modules
        self.inspection = []
        self._stage = 0    # 0: m0+m1, 1: m2, 2: m5, 3: m3 scan, 4: m4, 5: m3 rest

    def _uncolored(self, state, idx):
        return [v for v in self.modules[idx] if not state.colors[v]]

    def _avail(self, state, idx):
        taken = set()
        for j in (idx - 1, idx, idx + 1):
            for v in self.modules[j % 6]:
                if state.colors[v]:
                    taken.add(state.colors[v])
        return set(range(1, self.k + 1)) - taken

    def next_vertex(self, state):
        plan = [sorted(self.modules[0] + self.modules[1]), self.modules[2],
                self.modules[5]]
        for stage in range(3):
            if self._stage == stage:
                todo = [v for v in plan[stage] if not state.colors[v]]
                if todo:
                    return todo[0]
                self._stage = stage + 1
        if self._stage == 3:
            m3_left = self._uncolored(state, 3)
            m4_left = self._uncolored(state, 4)
            if m3_left and len(self._avail(state, 4)) > len(m4_left):
                return m3_left[0]
            self._stage = 4
        if self._stage == 4:
            m4_left = self._uncolored(state, 4)
            if len(self._avail(state, 4)) < len(m4_left):
                raise StrategyInvariantViolation(
                    "fewer colors than uncolored vertices in the deferred module")
            if m4_left:
                return m4_left[0]
            self._stage = 5
        m3_left = self._uncolored(state, 3)
        if m3_left:
            return m3_left[0]
        raise StrategyInvariantViolation("no vertex left to present")

    def notify(self, state):
        # stronger quantity kept for inspection only: colors still open for
        # the opposite pair, against its remaining demand
        a34 = self._avail(state, 3) | self._avail(state, 4)
        demand = len(self._uncolored(state, 3)) + len(self._uncolored(state, 4))
        self.inspection.append((len(a34), demand))


# ---------------------------------------------------------------------------
# complete expansions of C5
# ---------------------------------------------------------------------------

class CounterLedger:
    """Counters for the part-by-part plan on a complete expansion of C5.

    With modules m0..m4 in cycle order (m0 presented first), tracks per
    module the uncolored count N and the commonly-available color set C
    (every vertex of a module has the same neighborhood outside it, so the
    available set is shared).  The algebra the plan relies on:

    * right after m0 completes (starred values): |C|-|N| equals
      k-|m0|-|m_i| for the modules adjacent to m0, k-|m_i| for the other
      two, and |C_i u C_j|-|N_i|-|N_j| equals k-|m_i|-|m_j| for adjacent
      pairs among m1..m4 — all positive when k exceeds the clique number;
    * a ply inside module t leaves |C_t|-|N_t| and every adjacent-pair
      union quantity containing t unchanged;
    * the reply to a module-t vertex always comes from C_t.

    Violations raise StrategyInvariantViolation: they would disprove the
    plan's correctness argument, so they must surface loudly.
    """

    def __init__(self, k, modules):
        self.k = k
        self.modules = modules
        self.sizes = tuple(len(m) for m in modules)
        self.star = None
        self.prev = None

    def values(self, state):
        palette = set(range(1, self.k + 1))
        colors_on = [{state.colors[v] for v in mod if state.colors[v]}
                     for mod in self.modules]
        uncolored = [sum(1 for v in mod if not state.colors[v])
                     for mod in self.modules]
        avail = [palette - (colors_on[(i - 1) % 5] | colors_on[i] | colors_on[(i + 1) % 5])
                 for i in range(5)]
        return avail, uncolored

    def single(self, vals, i):
        avail, unc = vals
        return len(avail[i]) - unc[i]

    def union(self, vals, i, j):
        avail, unc = vals
        return len(avail[i] | avail[j]) - unc[i] - unc[j]

    def check_star(self, state):
        vals = self.values(state)
        k, s = self.k, self.sizes
        expected = {
            ("single", 1): k - s[0] - s[1],
            ("single", 4): k - s[0] - s[4],
            ("single", 2): k - s[2],
            ("single", 3): k - s[3],
            ("union", 1, 2): k - (s[1] + s[2]),
            ("union", 2, 3): k - (s[2] + s[3]),
            ("union", 3, 4): k - (s[3] + s[4]),
        }
        for key, want in expected.items():
            got = self.single(vals, key[1]) if key[0] == "single" \
                else self.union(vals, key[1], key[2])
            if got != want:
                raise StrategyInvariantViolation(
                    f"baseline counter {key} = {got}, expected {want}")
            if want <= 0:
                raise StrategyInvariantViolation(
                    f"baseline counter {key} not positive: {want}")
        self.star = vals
        self.prev = vals

    def check_ply(self, state, module_idx, reply_color):
        """Constancy and membership checks after a reply in module_idx."""
        vals = self.values(state)
        prev = self.prev
        self.prev = vals
        if prev is None or module_idx == 0:
            return
        t = module_idx
        if reply_color not in prev[0][t]:
            raise StrategyInvariantViolation(
                f"reply {reply_color} was not in the shared available set of "
                f"module {t}")
        if self.single(vals, t) != self.single(prev, t):
            raise StrategyInvariantViolation(
                f"|C|-|N| of module {t} changed on an internal ply")
        for i, j in ((t - 1, t), (t, t + 1)):
            if 1 <= i and j <= 4:
                if self.union(vals, i, j) != self.union(prev, i, j):
                    raise StrategyInvariantViolation(
                        f"pair counter ({i},{j}) changed on a module-{t} ply")


def strat_kc5(g, k):
    """Winning plan for complete expansions of C5.

    Two branches: when the clique number covers half the graph, a maximum
    clique pair is presented first and the rest follows directly; otherwise
    m0 is presented alone and the remaining four modules are paced by the
    CounterLedger, scanning m2 until one of three stopping conditions fires
    and finishing with the smaller-slack-first pairing rule.
    """
    structure = recognize_expansion(g, make_named("C", 5), allowed=("complete",))
    if structure is None:
        raise NotApplicable("not a complete expansion of C5")
    sizes = structure.sizes
    chi = chi_formula_kc5(sizes)
    if k < chi:
        raise BoundViolated(f"need k >= {chi}, got {k}")
    omega = max(sizes[i] + sizes[(i + 1) % 5] for i in range(5))
    if 2 * omega >= g.n:
        mods = _rotate_modules(structure, lambda s: (-(s[0] + s[1]), s))
        order = sorted(mods[0] + mods[1]) + list(mods[2]) + list(mods[4]) + list(mods[3])
        return PhasedStrategy("kc5", [StaticPhase(order)])
    mods = _rotate_modules(structure, lambda s: (0 if s[2] >= s[3] else 1, s))
    if len(mods[2]) < len(mods[3]):
        raise StrategyInvariantViolation("rotation failed to order the scan pair")
    return _KC5LedgerStrategy(g, k, mods)


class _KC5LedgerStrategy(Strategy):
    name = "kc5"

    V1, SCAN, C1_V2, C2_V2, C2_V3REST, PAIR34, C3_PAIR34, PAIR12 = range(8)

    def __init__(self, g, k, modules):
        self.g = g
        self.k = k
        self.modules = modules
        self.ledger = CounterLedger(k, modules)
        self._stage = self.V1
        self._last_module = None
        self._last_vertex = None
        self._case = None

    def _uncolored(self, state, idx):
        return [v for v in self.modules[idx] if not state.colors[v]]

    def _present(self, state, idx):
        todo = self._uncolored(state, idx)
        vals = self.ledger.values(state)
        if self.ledger.single(vals, idx) < 0:
            raise StrategyInvariantViolation(
                f"module {idx} has fewer shared colors than uncolored vertices")
        self._last_module = idx
        self._last_vertex = todo[0]
        return todo[0]

    def _pair(self, state, i, j):
        vals = self.ledger.values(state)
        left_i = self._uncolored(state, i)
        left_j = self._uncolored(state, j)
        side = i
        if not left_i:
            side = j
        elif left_j and self.ledger.single(vals, j) < self.ledger.single(vals, i):
            side = j
        return self._present(state, side)

    def next_vertex(self, state):
        led = self.ledger
        if self._stage == self.V1:
            todo = self._uncolored(state, 0)
            if todo:
                self._last_module = 0
                self._last_vertex = todo[0]
                return todo[0]
            led.check_star(state)
            self._stage = self.SCAN
        if self._stage == self.SCAN:
            vals = led.values(state)
            if not self._uncolored(state, 2):
                self._case = 1
                self._stage = self.C1_V2
            elif led.single(vals, 1) == 0:
                self._case = 2
                self._stage = self.C2_V2
            elif led.union(vals, 3, 4) == 0:
                self._case = 3
                self._stage = self.C3_PAIR34
            else:
                return self._present(state, 2)
        if self._stage in (self.C1_V2, self.C2_V2):
            if self._uncolored(state, 1):
                return self._present(state, 1)
            if self._stage == self.C1_V2:
                self._stage = self.PAIR34
            else:
                self._stage = self.C2_V3REST
        if self._stage == self.C2_V3REST:
            if self._uncolored(state, 2):
                return self._present(state, 2)
            self._check_final_slack(state, 3, 4)
            self._stage = self.PAIR34
        if self._stage in (self.PAIR34, self.C3_PAIR34):
            if self._uncolored(state, 3) or self._uncolored(state, 4):
                return self._pair(state, 3, 4)
            if self._stage == self.C3_PAIR34:
                self._check_final_slack(state, 1, 2)
                self._stage = self.PAIR12
            else:
                raise StrategyInvariantViolation("no vertex left to present")
        if self._stage == self.PAIR12:
            if self._uncolored(state, 1) or self._uncolored(state, 2):
                return self._pair(state, 1, 2)
        raise StrategyInvariantViolation("no vertex left to present")

    def _check_final_slack(self, state, i, j):
        """Entering the last pairing phase, the pair's slack must be exactly
        2k - n: the scanned module consumed everything else."""
        vals = self.ledger.values(state)
        want = 2 * self.k - self.g.n
        got = self.ledger.union(vals, i, j)
        if got != want:
            raise StrategyInvariantViolation(
                f"pair ({i},{j}) slack {got} != 2k-n = {want}")
        if want < 0:
            raise StrategyInvariantViolation(f"2k-n negative: {want}")

    def notify(self, state):
        if self._last_vertex is None or self.ledger.star is None:
            return
        reply = state.colors[self._last_vertex]
        self.ledger.check_ply(state, self._last_module, reply)


# ---------------------------------------------------------------------------
# composition
# ---------------------------------------------------------------------------

def strat_union(parts, k):
    """Compose per-component strategies over a disjoint-union layout.

    parts: (strategy, graph) pairs whose graphs occupy consecutive id blocks
    of the host (the layout produced by graphs.union); each component is
    played to completion in block order, which is ascending least-id order.
    """
    phases = []
    offset = 0
    for strat, g in parts:
        block = range(offset, offset + g.n)
        phases.append(SubGamePhase(block, lambda gg, kk, s=strat: s,
                                   label="union part"))
        offset += g.n
    return PhasedStrategy("union", phases)


def strat_components(g, k, factory):
    """One sub-strategy per connected component (built eagerly so class and
    bound errors surface now), components in ascending least-id order."""
    phases = []
    for comp in components(g):
        sub = factory(induced(g, comp), k)
        phases.append(SubGamePhase(comp, lambda gg, kk, s=sub: s,
                                   label="component"))
    return PhasedStrategy("components", phases)


# ---------------------------------------------------------------------------
# layered C5 class ({P5,K4,Kite,Bull}-free with an induced C5)
# ---------------------------------------------------------------------------

def strat_p5k4kitebull(g, k):
    """Winning plan for connected {P5,K4,Kite,Bull}-free graphs with an
    induced C5, driven by the layered decomposition.

    Pure independent expansions delegate to the cycle plan.  Otherwise: one
    hub vertex b, then the third-layer apex if needed; the first block's
    components over the palette without c(b) and the third layer's over the
    palette without c(apex); finally the leftover hub/second-layer vertices,
    for which those two colors stay open.
    """
    dec = _decompose_for_strategy(decompose_p5k4kitebull, g)
    chi = chi_p5k4kitebull(dec)
    if k < chi:
        raise BoundViolated(f"need k >= {chi}, got {k}")
    if dec.is_unit:
        return strat_cycle_expansion(g, k)
    b = dec.B[0]
    xstar = dec.xstar
    phases = [StaticPhase([b])]
    if dec.V3:
        phases.append(StaticPhase([xstar]))

    def without_color_of(anchor):
        def palette(state):
            c = state.colors[anchor]
            if not c:
                raise StrategyInvariantViolation(
                    f"anchor vertex {anchor} not yet colored")
            return [x for x in range(1, state.k + 1) if x != c]
        return palette

    def sub_factory(gg, kk):
        try:
            return strat_cycle_expansion(gg, kk)
        except NotApplicable:
            return strat_solver_backed(gg, kk)

    v1 = dec.V1
    if v1:
        sub = induced(g, v1)
        for comp in components(sub):
            phases.append(SubGamePhase([v1[i] for i in comp], sub_factory,
                                       palette=without_color_of(b),
                                       label="first block"))
    if dec.V3:
        sub = induced(g, dec.V3)
        for comp in components(sub):
            phases.append(SubGamePhase([dec.V3[i] for i in comp], sub_factory,
                                       palette=without_color_of(xstar),
                                       label="third layer"))
    leftovers = sorted((set(dec.B) | set(dec.S)) - {b, xstar})
    if leftovers:
        bset = set(dec.B)

        def guard(state, v):
            anchor = b if v in bset else xstar
            want = state.colors[anchor]
            taken = {state.colors[u] for u in state.graph.neighbors(v)}
            if want in taken:
                raise StrategyInvariantViolation(
                    f"color of {'b' if v in bset else 'apex'} not open for "
                    f"leftover vertex {v}")

        phases.append(StaticPhase(leftovers, guard=guard))
    return PhasedStrategy("p5k4kitebull", phases)


# ---------------------------------------------------------------------------
# split expansions of C5, with and without a joined clique
# ---------------------------------------------------------------------------

def strat_split_c5(g, k):
    """Winning plan for expansions of C5 whose modules are split graphs:
    play the clique-part expansion first, then the independent leftovers
    (each has a non-neighbor inside its module's clique part, whose color
    stays open for it)."""
    structure = recognize_expansion(g, make_named("C", 5), allowed=("split",))
    if structure is None:
        raise NotApplicable("not an expansion of C5 into split modules")
    chi = chi_exact(g)
    if k < chi:
        raise BoundViolated(f"need k >= {chi}, got {k}")
    parts = structure.split_parts()
    if any(p is None for p in parts):
        raise StructureViolation("split certificate missing for a module")
    clique_sizes = tuple(len(p[0]) for p in parts)
    if k < chi_formula_kc5(clique_sizes):
        raise StrategyInvariantViolation(
            "palette below the clique-part expansion's chromatic number")
    core = sorted(v for cl, _ in parts for v in cl)
    rest = sorted(v for _, ind in parts for v in ind)
    module_of = {}
    for idx, (cl, ind) in enumerate(parts):
        for v in ind:
            module_of[v] = idx

    def guard(state, v):
        cl = parts[module_of[v]][0]
        open_colors = {state.colors[u] for u in cl
                       if state.colors[u] and not state.graph.has_edge(u, v)}
        if not open_colors - {state.colors[u] for u in state.graph.neighbors(v)}:
            raise StrategyInvariantViolation(
                f"no clique-part non-neighbor color open for {v}")

    phases = [SubGamePhase(core, strat_kc5, label="clique parts")]
    if rest:
        phases.append(StaticPhase(rest, guard=guard))
    return PhasedStrategy("split-c5", phases)


def strat_split_c5_plus_clique(g, k):
    """Winning plan for a split expansion of C5 joined with a clique: the
    universal clique first (always colorable, consuming one color each),
    then the expansion over the leftover palette."""
    universal = [v for v in range(g.n) if g.degree(v) == g.n - 1]
    if not universal:
        return strat_split_c5(g, k)
    rest = [v for v in range(g.n) if v not in set(universal)]
    if not rest:
        raise NotApplicable("no expansion part left after the universal clique")
    restg = induced(g, rest)
    if recognize_expansion(restg, make_named("C", 5), allowed=("split",)) is None:
        raise NotApplicable("remainder is not a split expansion of C5")
    t = len(universal)
    chi = t + chi_exact(restg)
    if k < chi:
        raise BoundViolated(f"need k >= {chi}, got {k}")

    def leftover_palette(state):
        taken = {state.colors[u] for u in universal}
        if 0 in taken:
            raise StrategyInvariantViolation("universal clique not fully colored")
        return [c for c in range(1, state.k + 1) if c not in taken]

    return PhasedStrategy("split-c5-clique", [
        StaticPhase(sorted(universal)),
        SubGamePhase(rest, strat_split_c5, palette=leftover_palette,
                     label="expansion part"),
    ])


# ---------------------------------------------------------------------------
# {P5,C4}-free graphs
# ---------------------------------------------------------------------------

def strat_p5c4(g, k):
    """Winning plan for connected {P5,C4}-free graphs: the chordal part by
    reverse elimination order, then each pod (a complete expansion of C5)
    over the palette without the colors on its clique neighborhood."""
    dec = _decompose_for_strategy(decompose_p5c4, g)
    chi = chi_exact(g)
    if k < chi:
        raise BoundViolated(f"need k >= {chi}, got {k}")
    phases = []
    if dec.chordal_part:
        phases.append(SubGamePhase(dec.chordal_part, strat_degeneracy,
                                   label="chordal part"))

    def without_nbhd(pod):
        def palette(state):
            taken = {state.colors[u] for u in pod.clique_nbhd}
            if 0 in taken:
                raise StrategyInvariantViolation("pod neighborhood not colored yet")
            return [c for c in range(1, state.k + 1) if c not in taken]
        return palette

    for pod in dec.pods:
        phases.append(SubGamePhase(pod.vertices, strat_kc5,
                                   palette=without_nbhd(pod), label="pod"))
    return PhasedStrategy("p5c4", phases)


# ---------------------------------------------------------------------------
# {P6,C5,house,claw}-free graphs with induced C6
# ---------------------------------------------------------------------------

def strat_p6c5_class(g, k):
    """Per-component complete-C6-expansion plans for {P6,C5,house,claw}-free
    graphs whose components all contain an induced C6."""
    free, witness = is_family_free(g, family_p6c5_house_claw())
    if not free:
        raise NotApplicable("graph is not {P6,C5,house,claw}-free")
    return strat_components(g, k, strat_kc6)


STRATEGY_REGISTRY = {
    "degeneracy": strat_degeneracy,
    "cycle": strat_cycle_expansion,
    "kc5": strat_kc5,
    "kc6": strat_kc6,
    "p5k4kitebull": strat_p5k4kitebull,
    "split-c5": strat_split_c5,
    "split-c5-clique": strat_split_c5_plus_clique,
    "p5c4": strat_p5c4,
    "p6c5": strat_p6c5_class,
    "solver": strat_solver_backed,
}
