#!/usr/bin/env python3
"""Reduce a 3-CNF formula to bounded-degree cluster editing, with witness.

Each variable becomes a cycle of paired vertices and each clause a small
gadget; the formula is satisfiable exactly when the graph can be edited
into a cluster graph with at most 14m edits, where m counts clauses of
the normalized formula.  The demo builds the graph for a satisfiable and
an unsatisfiable formula, derives the exact-budget witness from a
satisfying assignment, and checks it edge by edge.
"""
from collections import Counter

from cluedit import (CnfFormula, apply_edits, brute_force_sat,
                     build_eth, cluster_graph_of, eth_witness,
                     extend_eth_assignment, normalize_for_eth)


def main():
    phi = CnfFormula(3, ((1, 2, 3), (-1, 2, -3), (1, -2, 3)))
    print("formula: (x1 v x2 v x3) & (~x1 v x2 v ~x3) & (x1 v ~x2 v x3)")

    norm, _ = normalize_for_eth(phi)
    print(f"normalized: {norm.var_count} variables, {len(norm.clauses)} clauses"
          " (every clause 3 distinct variables, both polarities present)")

    art = build_eth(phi)
    g = art.graph
    maxdeg = max(g.degree(v) for v in range(g.n))
    print(f"graph: n={g.n} m={g.m} max degree {maxdeg}")
    print(f"budget 14m = {art.budget}")

    src = brute_force_sat(phi)
    print(f"\nsatisfying assignment of the source: {src}")
    full = extend_eth_assignment(art, src)
    clustering, edits, cost = eth_witness(art, full)
    print(f"witness: {clustering.c} clusters, {cost} edits (== budget: "
          f"{cost == art.budget})")
    print(f"cluster size census: {dict(sorted(Counter(clustering.sizes()).items()))}")
    assert apply_edits(g, edits) == cluster_graph_of(g.n, clustering)
    print("applying the edit set yields exactly that cluster graph")

    print("\nunsatisfiable formula: (x1) & (~x1)")
    bad = CnfFormula(1, ((1,), (-1,)))
    art = build_eth(bad)
    print(f"graph: n={art.graph.n} m={art.graph.m}  budget {art.budget}")
    print(f"brute-force SAT: {brute_force_sat(bad)}")
    try:
        eth_witness(art, {v: True for v in range(1, art.formula.var_count + 1)})
    except ValueError as exc:
        print(f"witness for an arbitrary assignment refuses: {exc}")
    print("(no assignment satisfies it, so no exact-budget witness exists)")


if __name__ == "__main__":
    main()
