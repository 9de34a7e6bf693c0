"""Reduction rules that shrink the cluster count before the solver runs.

An exact-p instance with p much larger than k must already contain many
finished clusters: at most 2k clusters can touch an edit pair, so p - 2k of
them sit in the input as isolated clique components.  The rules reject when
those are missing (Rule 1) and otherwise peel guaranteed-safe components --
an isolated vertex when 2k+1 of them exist (Rule 2), a largest isolated
clique when 2k+1 nontrivial ones exist (Rule 3) -- until p' <= 6k.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .graph import (Clustering, EditSet, Graph, bits, connected_components,
                    induced_subgraph)


@dataclass(frozen=True)
class Instance:
    """A (p-)cluster-editing decision instance.

    mode "exact" asks for exactly p clusters, "at_most" for up to p.
    Reduction can legitimately drive p to 0 (k = 0 peels every required
    cluster), so p >= 0 here; the CLI rejects user-level p < 1.
    """

    g: Graph
    p: int
    k: int
    mode: str = "exact"

    def __post_init__(self) -> None:
        if self.p < 0:
            raise ValueError("p must be >= 0")
        if self.k < 0:
            raise ValueError("k must be >= 0")
        if self.mode not in ("exact", "at_most"):
            raise ValueError(f"unknown mode {self.mode!r}")


@dataclass
class PreprocessOutcome:
    """Reduced instance plus the log needed to lift solutions back."""

    rejected: bool
    reason: str | None
    instance: Instance | None
    vertex_map: tuple[int, ...]  # reduced id -> original id
    removed: list[tuple[str, tuple[int, ...]]] = field(default_factory=list)
    rules_applied: list[str] = field(default_factory=list)


def clique_component_masks(g: Graph) -> list[int]:
    """Masks of connected components that are cliques, in component order."""
    out = []
    for comp in connected_components(g):
        if all(g.rows[v] == comp ^ (1 << v) for v in bits(comp)):
            out.append(comp)
    return out


def rule1_rejects(g: Graph, p: int, k: int) -> bool:
    """Reject iff fewer than p - 2k components of g are cliques."""
    return len(clique_component_masks(g)) < p - 2 * k


def rule2_target(g: Graph, k: int) -> int | None:
    """Mask of the isolated vertex Rule 2 would delete, or None.

    Fires when at least 2k+1 isolated vertices exist; deletes the one with
    the smallest id.
    """
    isolated = [1 << v for v in range(g.n) if g.rows[v] == 0]
    if len(isolated) >= 2 * k + 1:
        return isolated[0]
    return None


def rule3_target(g: Graph, k: int) -> int | None:
    """Mask of the clique component Rule 3 would delete, or None.

    Fires when at least 2k+1 isolated nontrivial cliques exist; deletes a
    largest one, ties broken towards the smallest contained vertex id.
    """
    cliques = [c for c in clique_component_masks(g) if c.bit_count() >= 2]
    if len(cliques) < 2 * k + 1:
        return None
    best = cliques[0]
    for c in cliques[1:]:
        if c.bit_count() > best.bit_count():
            best = c
    return best


def preprocess(inst: Instance) -> PreprocessOutcome:
    """Apply Rules 1-3 while p' > 6k; equivalence-preserving for exact mode.

    In at-most mode nothing fires (the solver loops over exact p' itself).
    Also rejects when the reduced graph has fewer vertices than clusters
    demanded.
    """
    identity = tuple(range(inst.g.n))
    if inst.mode != "exact":
        return PreprocessOutcome(False, None, inst, identity)

    g, p, k = inst.g, inst.p, inst.k
    vmap = list(identity)
    removed: list[tuple[str, tuple[int, ...]]] = []
    applied: list[str] = []

    def delete(mask: int, rule: str) -> None:
        nonlocal g, p, vmap
        removed.append((rule, tuple(vmap[v] for v in bits(mask))))
        applied.append(rule)
        full = (1 << g.n) - 1
        g, submap = induced_subgraph(g, full ^ mask)
        vmap = [vmap[o] for o in submap]
        p -= 1

    while p > 6 * k:
        if rule1_rejects(g, p, k):
            return PreprocessOutcome(True, "rule1", None, tuple(vmap),
                                     removed, applied + ["rule1"])
        target = rule3_target(g, k)
        if target is not None:
            delete(target, "rule3")
            continue
        target = rule2_target(g, k)
        if target is not None:
            delete(target, "rule2")
            continue
        break  # unreachable when p > 6k and Rule 1 passed; stay safe

    if p > g.n:
        return PreprocessOutcome(True, "p_exceeds_n", None, tuple(vmap),
                                 removed, applied)
    reduced = Instance(g, p, k, "exact")
    return PreprocessOutcome(False, None, reduced, tuple(vmap), removed, applied)


def lift_clustering(outcome: PreprocessOutcome, cl: Clustering,
                    original_n: int) -> Clustering:
    """Map a clustering of the reduced graph back to the original vertices,
    re-attaching every removed component as its own cluster."""
    assignment = [-1] * original_n
    for reduced_v, orig_v in enumerate(outcome.vertex_map):
        assignment[orig_v] = cl.assignment[reduced_v]
    next_id = cl.c
    for _, vertices in outcome.removed:
        for v in vertices:
            assignment[v] = next_id
        next_id += 1
    if any(a == -1 for a in assignment):
        raise ValueError("lift does not cover the original vertex set")
    return Clustering(tuple(assignment), next_id)


def lift_edits(outcome: PreprocessOutcome, edits: EditSet) -> EditSet:
    vmap = outcome.vertex_map
    return EditSet.from_pairs((vmap[u], vmap[v]) for u, v in edits.pairs)
