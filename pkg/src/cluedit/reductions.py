"""Hardness-instance generators: SAT formulas to cluster-editing instances.

Two constructions live here.

The balanced-clique construction turns a 3-CNF formula (after the
regularizing rewrite) into a p-cluster-editing instance built around 6p
large cliques.  Faithful instances are far too big to materialize, so the
artifact is a structural description: exact vertex/edge counts, a budget,
and id arithmetic.  A guarded materializer produces a real Graph for
downscaled instances.

The bounded-degree construction turns a 3-CNF formula into a (max degree 5)
cluster-editing instance with budget 14m; these graphs are always small
enough to materialize.

Both carry exact-budget witness builders that convert a satisfying
assignment into a clustering whose edit cost meets the budget exactly.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .cnf import CnfFormula, falsified_clause
from .graph import Clustering, EditSet, Graph
from .regularize import Recipe, RegularizedFormula, regularize

MATERIALIZE_VERTEX_LIMIT = 12000

RoleSpan = tuple[int, int, str]          # [start, stop) vertex range + role tag


def _norm6(z: int) -> int:
    return (z - 1) % 6 + 1


def _apply_recipes(recipes: tuple[Recipe, ...], assignment: dict[int, bool]) -> dict[int, bool]:
    out: dict[int, bool] = {}
    for v, rec in enumerate(recipes, start=1):
        if rec[0] == "const":
            out[v] = rec[1]
        else:
            _, src, keep = rec
            try:
                val = assignment[src]
            except KeyError:
                raise ValueError(f"assignment misses source variable {src}") from None
            out[v] = val if keep else not val
    return out


# ===========================================================================
# balanced-clique construction


def budget_summands(n_reg: int, m_reg: int, p: int, L: int) -> dict[str, int]:
    """The six budget components; total is the editing budget."""
    ws = 6 * n_reg + 9 * m_reg
    if ws % (6 * p):
        raise ValueError("vertex total not divisible by cluster count")
    size = ws // (6 * p)
    s = {
        "clique_clique": 0,
        "clique_rest": (6 * n_reg + 36 * m_reg) * L,
        "rest_all_pairs": 6 * p * comb(size, 2),
        "rest_existing": 6 * n_reg + 27 * m_reg,
        "cycle_kept": 3 * n_reg,
        "attachment_kept": 9 * m_reg,
    }
    s["total"] = (s["clique_clique"] + s["clique_rest"] + s["rest_all_pairs"]
                  + s["rest_existing"] - 2 * s["cycle_kept"] - 2 * s["attachment_kept"])
    return s


@dataclass(frozen=True)
class CliqueArtifact:
    """Structural description of a balanced-clique instance."""

    regularized: RegularizedFormula
    p: int                       # part count; the instance asks for 6p clusters
    k: int                       # solver budget named in the size hypotheses
    epsilon: Fraction
    L: int                       # clique size
    L_factor: int                # 1000 is faithful; smaller values are test-scale
    budget: int
    vertex_count: int
    edge_count: int
    role_map: tuple[RoleSpan, ...]

    @property
    def n_reg(self) -> int:
        return self.regularized.formula.var_count

    @property
    def m_reg(self) -> int:
        return len(self.regularized.formula.clauses)

    def clique_range(self, r: int, alpha: int) -> range:
        base = ((r - 1) * 6 + (alpha - 1)) * self.L
        return range(base, base + self.L)

    def w_id(self, x: int, c: int) -> int:
        return 6 * self.p * self.L + (x - 1) * 6 + (c - 1)

    def s_id(self, j: int, beta: int, xi: int) -> int:
        base = 6 * self.p * self.L + 6 * self.n_reg
        return base + 9 * j + 3 * (beta - 1) + (xi - 1)


def _w_attached(part: int, c: int) -> tuple[tuple[int, int], ...]:
    return ((part, c), (part, _norm6(c + 1)))


def _s_w_neighbors(clause: tuple[int, ...], beta: int) -> tuple[tuple[int, int], ...]:
    """(variable, cycle position) of the three cycle neighbors of s_{beta,*}."""
    return tuple((abs(clause[eta - 1]), _norm6(2 * beta + 2 * eta - 3))
                 for eta in (1, 2, 3))


def _s_attached(clause: tuple[int, ...], part_of: dict[int, int],
                beta: int, xi: int) -> tuple[tuple[int, int], ...]:
    out = []
    for eta in (1, 2, 3):
        lit = clause[eta - 1]
        r = part_of[abs(lit)]
        if xi == 1:
            sgn = 1 if lit > 0 else 0
            out.append((r, _norm6(2 * beta + 2 * eta - 2 - sgn)))
        else:
            out.append((r, _norm6(2 * beta + 2 * eta - 3)))
            out.append((r, _norm6(2 * beta + 2 * eta - 2)))
    return tuple(out)


def build_multivariate(phi: CnfFormula, p: int, k: int,
                       epsilon: Fraction | int = 1,
                       L_factor: int = 1000) -> CliqueArtifact:
    """Build the balanced-clique instance; checks the size hypotheses exactly.

    L_factor below 1000 downsizes the cliques for test runs and is not
    faithful to the soundness argument.
    """
    eps = Fraction(epsilon)
    if eps <= 0:
        raise ValueError("epsilon must be positive")
    if p < 1:
        raise ValueError("p must be at least 1")
    if L_factor < 1:
        raise ValueError("L_factor must be at least 1")
    n, m = phi.var_count, len(phi.clauses)
    if Fraction(k) < eps * p:
        raise ValueError(f"hypothesis violated: k >= epsilon*p ({k} < {eps * p})")
    if Fraction(n) < eps * p:
        raise ValueError(f"hypothesis violated: n >= epsilon*p ({n} < {eps * p})")
    if (Fraction(n) * eps) ** 2 > p * k:
        raise ValueError(f"hypothesis violated: n <= sqrt(p*k)/epsilon (n={n})")
    if (Fraction(m) * eps) ** 2 > p * k:
        raise ValueError(f"hypothesis violated: m <= sqrt(p*k)/epsilon (m={m})")

    reg = regularize(phi, p, eps)
    n_reg = reg.formula.var_count
    m_reg = len(reg.formula.clauses)

    eps_l = min(eps, Fraction(1))        # larger epsilon only strengthens the hypotheses
    val = L_factor * (1 + Fraction(n_reg) / (p * eps_l))
    L = -((-val.numerator) // val.denominator)

    budget = budget_summands(n_reg, m_reg, p, L)["total"]
    vertices = 6 * p * L + 6 * n_reg + 9 * m_reg
    edges = (6 * p * comb(L, 2) + (12 * n_reg + 45 * m_reg) * L
             + 6 * n_reg + 27 * m_reg)

    spans: list[RoleSpan] = []
    for r in range(1, p + 1):
        for alpha in range(1, 7):
            base = ((r - 1) * 6 + (alpha - 1)) * L
            spans.append((base, base + L, f"clique r={r} alpha={alpha}"))
    wb = 6 * p * L
    for x in range(1, n_reg + 1):
        spans.append((wb + (x - 1) * 6, wb + x * 6, f"cycle x={x}"))
    sb = wb + 6 * n_reg
    for j in range(m_reg):
        spans.append((sb + 9 * j, sb + 9 * (j + 1), f"clause j={j}"))

    return CliqueArtifact(reg, p, k, eps, L, L_factor, budget,
                          vertices, edges, tuple(spans))


def attachment_counts(art: CliqueArtifact) -> dict[tuple[int, int], int]:
    """How many cycle/clause vertices are fully joined to each clique."""
    part_of = art.regularized.part_index()
    counts = {(r, a): 0 for r in range(1, art.p + 1) for a in range(1, 7)}
    for x in range(1, art.n_reg + 1):
        for c in range(1, 7):
            for key in _w_attached(part_of[x], c):
                counts[key] += 1
    for clause in art.regularized.formula.clauses:
        for beta in (1, 2, 3):
            for xi in (1, 2, 3):
                for key in set(_s_attached(clause, part_of, beta, xi)):
                    counts[key] += 1
    return counts


def materialize_graph(art: CliqueArtifact) -> Graph:
    """Actually build the graph; only sensible for downsized instances."""
    n = art.vertex_count
    if n > MATERIALIZE_VERTEX_LIMIT:
        raise ValueError(f"graph too large to materialize ({n} vertices)")
    part_of = art.regularized.part_index()
    L = art.L
    rows = [0] * n

    def range_mask(r: int, alpha: int) -> int:
        lo = art.clique_range(r, alpha).start
        return ((1 << L) - 1) << lo

    attach_bits = {(r, a): 0 for r in range(1, art.p + 1) for a in range(1, 7)}

    for x in range(1, art.n_reg + 1):
        for c in range(1, 7):
            w = art.w_id(x, c)
            rows[w] |= 1 << art.w_id(x, _norm6(c + 1))
            rows[art.w_id(x, _norm6(c + 1))] |= 1 << w
            for key in _w_attached(part_of[x], c):
                rows[w] |= range_mask(*key)
                attach_bits[key] |= 1 << w

    for j, clause in enumerate(art.regularized.formula.clauses):
        for beta in (1, 2, 3):
            wkeys = _s_w_neighbors(clause, beta)
            for xi in (1, 2, 3):
                s = art.s_id(j, beta, xi)
                for x, c in wkeys:
                    rows[s] |= 1 << art.w_id(x, c)
                    rows[art.w_id(x, c)] |= 1 << s
                for key in set(_s_attached(clause, part_of, beta, xi)):
                    rows[s] |= range_mask(*key)
                    attach_bits[key] |= 1 << s

    for r in range(1, art.p + 1):
        for alpha in range(1, 7):
            full = range_mask(r, alpha) | attach_bits[(r, alpha)]
            for v in art.clique_range(r, alpha):
                rows[v] = full ^ (1 << v)

    m = sum(row.bit_count() for row in rows) // 2
    if m != art.edge_count:
        raise AssertionError(f"materialized edge count {m} != predicted {art.edge_count}")
    return Graph(n, tuple(rows), m)


@dataclass
class CliqueWitness:
    """Counted exact-budget witness for a balanced-clique instance.

    Clusters are keyed by (part, alpha); clique members are implicit.
    Costs are counted from the cluster assignment, not copied from the
    budget formula.
    """

    cluster_of_w: dict[tuple[int, int], tuple[int, int]]   # (x, c) -> cluster
    cluster_of_s: dict[tuple[int, int, int], tuple[int, int]]
    cut_clique: int
    cut_cycle: int
    cut_attachment: int
    additions: int
    cost: int
    cluster_sizes: dict[tuple[int, int], int]
    kept_cycle: int
    kept_attachment: int


def multivariate_witness(art: CliqueArtifact,
                         assignment: dict[int, bool]) -> CliqueWitness:
    """Clustering + counted edit cost for a balanced satisfying assignment.

    The assignment addresses the regularized formula's variables; push a
    source-formula assignment through `extend_assignment` first.
    """
    reg = art.regularized
    f = reg.formula
    bad = falsified_clause(f, assignment)
    if bad is not None:
        raise ValueError(f"assignment falsifies clause {bad}")
    for ri, block in enumerate(reg.parts, start=1):
        true_count = sum(assignment[v] for v in block)
        if 2 * true_count != len(block):
            raise ValueError(f"part {ri} unbalanced: {true_count} true of {len(block)}")
    part_of = reg.part_index()
    L = art.L

    place_w: dict[tuple[int, int], tuple[int, int]] = {}
    for x in range(1, f.var_count + 1):
        want_odd = assignment[x]
        for c in range(1, 7):
            a1, a2 = c, _norm6(c + 1)
            alpha = a1 if (a1 % 2 == 1) == want_odd else a2
            place_w[(x, c)] = (part_of[x], alpha)

    place_s: dict[tuple[int, int, int], tuple[int, int]] = {}
    for j, clause in enumerate(f.clauses):
        sat_eta = next(eta for eta in (1, 2, 3)
                       if assignment[abs(clause[eta - 1])] == (clause[eta - 1] > 0))
        for beta in (1, 2, 3):
            for xi in (1, 2, 3):
                eta = (sat_eta + xi - 2) % 3 + 1
                lit = clause[eta - 1]
                x = abs(lit)
                phi = 1 if assignment[x] else 0
                place_s[(j, beta, xi)] = (part_of[x], _norm6(2 * beta + 2 * eta - 2 - phi))

    cut_clique = 0
    for (x, c), cl in place_w.items():
        attached = _w_attached(part_of[x], c)
        if cl not in attached:
            raise AssertionError("cycle vertex placed away from its cliques")
        cut_clique += L * (len(attached) - 1)
    for j, clause in enumerate(f.clauses):
        for beta in (1, 2, 3):
            for xi in (1, 2, 3):
                attached = set(_s_attached(clause, part_of, beta, xi))
                cl = place_s[(j, beta, xi)]
                if cl not in attached:
                    raise AssertionError("clause vertex placed away from its cliques")
                cut_clique += L * (len(attached) - 1)

    kept_cycle = cut_cycle = 0
    for x in range(1, f.var_count + 1):
        for c in range(1, 7):
            if place_w[(x, c)] == place_w[(x, _norm6(c + 1))]:
                kept_cycle += 1
            else:
                cut_cycle += 1
    kept_att = cut_att = 0
    for j, clause in enumerate(f.clauses):
        for beta in (1, 2, 3):
            wkeys = _s_w_neighbors(clause, beta)
            for xi in (1, 2, 3):
                cl = place_s[(j, beta, xi)]
                for key in wkeys:
                    if place_w[key] == cl:
                        kept_att += 1
                    else:
                        cut_att += 1

    members = {(r, a): 0 for r in range(1, art.p + 1) for a in range(1, 7)}
    for cl in place_w.values():
        members[cl] += 1
    for cl in place_s.values():
        members[cl] += 1
    additions = sum(comb(L + t, 2) - comb(L, 2) - L * t for t in members.values())
    additions -= kept_cycle + kept_att

    cost = cut_clique + cut_cycle + cut_att + additions
    if cost != art.budget:
        raise AssertionError(f"witness cost {cost} != budget {art.budget}")
    sizes = {cl: L + t for cl, t in members.items()}
    return CliqueWitness(place_w, place_s, cut_clique, cut_cycle, cut_att,
                         additions, cost, sizes, kept_cycle, kept_att)


def witness_clustering(art: CliqueArtifact, wit: CliqueWitness) -> Clustering:
    """Explicit per-vertex clustering of a witness (guarded by graph size)."""
    if art.vertex_count > MATERIALIZE_VERTEX_LIMIT:
        raise ValueError("instance too large for an explicit clustering")
    idx = {(r, a): (r - 1) * 6 + (a - 1)
           for r in range(1, art.p + 1) for a in range(1, 7)}
    assignment = [0] * art.vertex_count
    for r in range(1, art.p + 1):
        for alpha in range(1, 7):
            for v in art.clique_range(r, alpha):
                assignment[v] = idx[(r, alpha)]
    for (x, c), cl in wit.cluster_of_w.items():
        assignment[art.w_id(x, c)] = idx[cl]
    for (j, beta, xi), cl in wit.cluster_of_s.items():
        assignment[art.s_id(j, beta, xi)] = idx[cl]
    return Clustering(tuple(assignment), 6 * art.p)


# ===========================================================================
# bounded-degree construction


def normalize_for_eth(f: CnfFormula) -> tuple[CnfFormula, tuple[Recipe, ...]]:
    """Equisatisfiable rewrite: 3 distinct variables per clause, every
    variable used in both polarities, no unused variables.

    Short clauses are expanded over fresh variables (all sign patterns, so
    the original literal is still forced); missing polarities are supplied
    by clauses over a fresh always-satisfiable triple.  Recipes extend a
    satisfying assignment of the input to one of the output.
    """
    clauses: list[tuple[int, ...]] = []
    n = f.var_count
    recipes: dict[int, Recipe] = {v: ("var", v, True) for v in range(1, n + 1)}

    def fresh(value: bool) -> int:
        nonlocal n
        n += 1
        recipes[n] = ("const", value)
        return n

    for cl in f.clauses:
        if len(cl) > 3:
            raise ValueError("clauses wider than 3 are not supported")
        seen: list[int] = []
        taut = False
        for lit in cl:
            if -lit in seen:
                taut = True
                break
            if lit not in seen:
                seen.append(lit)
        if taut:
            continue
        if len(seen) == 3:
            clauses.append(tuple(seen))
        elif len(seen) == 2:
            c = fresh(True)
            clauses.append(tuple(seen) + (c,))
            clauses.append(tuple(seen) + (-c,))
        else:
            a, b = fresh(True), fresh(True)
            for sa in (a, -a):
                for sb in (b, -b):
                    clauses.append((seen[0], sa, sb))

    pos = {abs(l) for c in clauses for l in c if l > 0}
    neg = {abs(l) for c in clauses for l in c if l < 0}
    trio: tuple[int, int, int] | None = None

    def get_trio() -> tuple[int, int, int]:
        nonlocal trio
        if trio is None:
            t1, t2, t3 = fresh(True), fresh(False), fresh(True)
            clauses.append((t1, t2, t3))
            clauses.append((-t1, -t2, -t3))
            trio = (t1, t2, t3)
        return trio

    for v in sorted(pos | neg):
        if v not in pos:
            t1, t2, _ = get_trio()
            clauses.append((v, t1, t2))
        if v not in neg:
            t1, t2, _ = get_trio()
            clauses.append((-v, t1, t2))

    used = sorted({abs(l) for c in clauses for l in c})
    renum = {old: i for i, old in enumerate(used, start=1)}
    out_clauses = tuple(tuple((1 if l > 0 else -1) * renum[abs(l)] for l in c)
                        for c in clauses)
    out_recipes = tuple(recipes[old] for old in used)
    return CnfFormula(len(used), out_clauses), out_recipes


@dataclass(frozen=True)
class DegreeArtifact:
    """Bounded-degree instance: graph, budget 14m, and id arithmetic."""

    formula: CnfFormula                  # normalized form
    recipes: tuple[Recipe, ...]          # extend a source assignment to `formula`
    source_var_count: int
    graph: Graph
    budget: int
    cycle_base: tuple[int, ...]          # per variable (index v-1)
    occurrence_index: dict[tuple[int, int], int]   # (clause j, eta) -> slot on var's cycle
    gadget_base: int
    role_map: tuple[RoleSpan, ...]

    def cycle_length(self, x: int) -> int:
        nxt = (self.cycle_base[x] if x < len(self.cycle_base) else self.gadget_base)
        return nxt - self.cycle_base[x - 1]

    def cycle_vertex(self, x: int, slot: int, j: int) -> int:
        """j in 1..4 inside occurrence `slot` of variable x."""
        return self.cycle_base[x - 1] + 4 * slot + (j - 1)

    def gadget_vertex(self, j: int, name: str, eta: int) -> int:
        off = (0 if name == "p" else 3) + (eta - 1)
        return self.gadget_base + 6 * j + off


def extend_eth_assignment(art: DegreeArtifact,
                          assignment: dict[int, bool]) -> dict[int, bool]:
    return _apply_recipes(art.recipes, assignment)


def build_eth(phi: CnfFormula) -> DegreeArtifact:
    """Construct the bounded-degree instance (normalizes the formula first)."""
    f, recipes = normalize_for_eth(phi)
    n = f.var_count
    occs: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for j, clause in enumerate(f.clauses):
        for eta, lit in enumerate(clause, start=1):
            occs[abs(lit) - 1].append((j, eta))

    cycle_base = []
    total = 0
    for x in range(n):
        cycle_base.append(total)
        total += 4 * len(occs[x])
    gadget_base = total
    vcount = total + 6 * len(f.clauses)

    occurrence_index = {key: slot for x in range(n)
                        for slot, key in enumerate(occs[x])}

    edges: list[tuple[int, int]] = []
    for x in range(n):
        ln = 4 * len(occs[x])
        for i in range(ln):
            edges.append((cycle_base[x] + i, cycle_base[x] + (i + 1) % ln))
    for j, clause in enumerate(f.clauses):
        base = gadget_base + 6 * j
        ps = [base + i for i in range(3)]
        qs = [base + 3 + i for i in range(3)]
        for a in range(3):
            for b in range(a + 1, 3):
                edges.append((ps[a], ps[b]))
        for pv in ps:
            for qv in qs:
                edges.append((pv, qv))
        for eta, lit in enumerate(clause, start=1):
            x = abs(lit)
            slot = occurrence_index[(j, eta)]
            b = cycle_base[x - 1] + 4 * slot
            if lit > 0:
                edges.append((qs[eta - 1], b))
                edges.append((qs[eta - 1], b + 1))
            else:
                edges.append((qs[eta - 1], b + 1))
                edges.append((qs[eta - 1], b + 2))

    g = Graph.from_edges(vcount, edges)
    spans: list[RoleSpan] = []
    for x in range(1, n + 1):
        stop = cycle_base[x] if x < n else gadget_base
        spans.append((cycle_base[x - 1], stop, f"cycle x={x}"))
    for j in range(len(f.clauses)):
        spans.append((gadget_base + 6 * j, gadget_base + 6 * (j + 1), f"gadget j={j}"))

    return DegreeArtifact(f, recipes, phi.var_count, g, 14 * len(f.clauses),
                          tuple(cycle_base), occurrence_index, gadget_base,
                          tuple(spans))


def eth_witness(art: DegreeArtifact, assignment: dict[int, bool]
                ) -> tuple[Clustering, EditSet, int]:
    """Exact-budget witness: clustering + edit set of size 14m.

    `assignment` addresses the normalized formula; use
    `extend_eth_assignment` to push a source assignment through.
    """
    f = art.formula
    bad = falsified_clause(f, assignment)
    if bad is not None:
        raise ValueError(f"assignment falsifies clause {bad}")

    removals: list[tuple[int, int]] = []
    additions: list[tuple[int, int]] = []
    blocks: list[list[int]] = []
    pair_block: dict[int, int] = {}      # kept-pair lead vertex -> block index

    occ_count = [0] * f.var_count
    for clause in f.clauses:
        for lit in clause:
            occ_count[abs(lit) - 1] += 1

    for x in range(1, f.var_count + 1):
        base = art.cycle_base[x - 1]
        ln = 4 * occ_count[x - 1]
        for slot in range(occ_count[x - 1]):
            b = base + 4 * slot
            if assignment[x]:
                removals.append((b + 1, b + 2))
                removals.append((b + 3, base + (4 * slot + 4) % ln))
                kept = [(b, b + 1), (b + 2, b + 3)]
            else:
                removals.append((b, b + 1))
                removals.append((b + 2, b + 3))
                kept = [(b + 1, b + 2), (b + 3, base + (4 * slot + 4) % ln)]
            for u, v in kept:
                pair_block[u] = len(blocks)
                blocks.append([u, v])

    for j, clause in enumerate(f.clauses):
        sat_eta = next(eta for eta in (1, 2, 3)
                       if assignment[abs(clause[eta - 1])] == (clause[eta - 1] > 0))
        ps = [art.gadget_vertex(j, "p", e) for e in (1, 2, 3)]
        qs = [art.gadget_vertex(j, "q", e) for e in (1, 2, 3)]
        q_star = qs[sat_eta - 1]
        for pv in ps:
            removals.append((q_star, pv))
        others = [e for e in (1, 2, 3) if e != sat_eta]
        for eta in others:
            lit = clause[eta - 1]
            x = abs(lit)
            slot = art.occurrence_index[(j, eta)]
            b = art.cycle_base[x - 1] + 4 * slot
            if lit > 0:
                removals.append((qs[eta - 1], b))
                removals.append((qs[eta - 1], b + 1))
            else:
                removals.append((qs[eta - 1], b + 1))
                removals.append((qs[eta - 1], b + 2))
        additions.append((qs[others[0] - 1], qs[others[1] - 1]))
        blocks.append(ps + [qs[e - 1] for e in others])

        # the chosen q joins the kept cycle pair it is attached to
        lit = clause[sat_eta - 1]
        slot = art.occurrence_index[(j, sat_eta)]
        b = art.cycle_base[abs(lit) - 1] + 4 * slot
        lead = b if lit > 0 else b + 1
        blocks[pair_block[lead]].append(q_star)

    edits = EditSet.from_pairs(removals + additions)
    if len(edits.pairs) != art.budget:
        raise AssertionError(f"witness size {len(edits.pairs)} != budget {art.budget}")
    clustering = Clustering.from_blocks(art.graph.n, blocks)
    return clustering, edits, len(edits.pairs)


# ===========================================================================
# sidecar files


def sidecar_dict(art: CliqueArtifact | DegreeArtifact) -> dict:
    if isinstance(art, CliqueArtifact):
        return {
            "schema": 1,
            "kind": "multivariate",
            "budget": art.budget,
            "vertex_count": art.vertex_count,
            "edge_count": art.edge_count,
            "parameters": {
                "p": art.p,
                "k": art.k,
                "epsilon": str(art.epsilon),
                "L": art.L,
                "L_factor": art.L_factor,
                "n_regular": art.n_reg,
                "m_regular": art.m_reg,
                "source_vars": art.regularized.source_var_count,
                "flag": art.regularized.flag,
            },
            "role_map": [list(span) for span in art.role_map],
        }
    return {
        "schema": 1,
        "kind": "eth",
        "budget": art.budget,
        "vertex_count": art.graph.n,
        "edge_count": art.graph.m,
        "parameters": {
            "clause_count": len(art.formula.clauses),
            "var_count": art.formula.var_count,
            "source_vars": art.source_var_count,
        },
        "role_map": [list(span) for span in art.role_map],
    }


def write_sidecar(path, art) -> None:
    with open(path, "w") as fh:
        json.dump(sidecar_dict(art), fh, indent=2, sort_keys=True)
        fh.write("\n")
