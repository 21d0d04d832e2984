"""Independent values frozen into the unit tests (networkx + plain Python exact cover).

Run: python3 tests/oracles/derive.py
"""
import itertools
import sys
import networkx as nx

DATA = "tests/data"


def cycles(g):
    out = set()
    for c in nx.simple_cycles(g):
        if len(c) < 3:
            continue
        es = frozenset(frozenset((c[i], c[(i + 1) % len(c)])) for i in range(len(c)))
        out.add(es)
    return sorted(out, key=lambda s: sorted(tuple(sorted(e)) for e in s))


def cdc_census(g, max_size):
    cs = cycles(g)
    edges = [frozenset(e) for e in g.edges()]
    cov = {e: 0 for e in edges}
    counts = {}

    def rec(i, size, double):
        if size > max_size:
            return
        if all(v == 2 for v in cov.values()):
            key = size
            a, t = counts.get(key, (0, 0))
            counts[key] = (a + 1, t + (0 if double else 1))
            return
        if i == len(cs):
            return
        c = cs[i]
        for mult in (0, 1, 2):
            if any(cov[e] + mult > 2 for e in c):
                break
            for e in c:
                cov[e] += mult
            rec(i + 1, size + mult, double or mult == 2)
            for e in c:
                cov[e] -= mult

    rec(0, 0, False)
    return dict(sorted(counts.items()))


def ham_count(g):
    n = g.number_of_nodes()
    count = 0
    for perm in itertools.permutations(range(1, n)):
        if perm[0] > perm[-1]:
            continue
        path = (0,) + perm
        if all(g.has_edge(path[i], path[(i + 1) % n]) for i in range(n)):
            count += 1
    return count


def prism(n):
    h = n // 2
    g = nx.cycle_graph(h)
    g.add_edges_from((i + h, (i + 1) % h + h) for i in range(h))
    g.add_edges_from((i, i + h) for i in range(h))
    return g


def antiprism(k):
    g = prism(2 * k)
    g.add_edges_from((i, (i + 1) % k + k) for i in range(k))
    return g


def read(name):
    with open(f"{DATA}/{name}", "rb") as f:
        return [nx.from_graph6_bytes(line.strip()) for line in f if line.strip()]


if __name__ == "__main__":
    named = {"K4": nx.complete_graph(4), "K5": nx.complete_graph(5), "K6": nx.complete_graph(6),
             "petersen": nx.petersen_graph(), "cube": prism(8), "octahedron": nx.octahedral_graph(),
             "K33": nx.complete_bipartite_graph(3, 3)}
    for name, g in named.items():
        print("cycles", name, len(cycles(g)))
    for name in ("K4", "K33", "octahedron"):
        print("census", name, cdc_census(named[name], 8))
    print("census prism6", cdc_census(prism(6), 6))
    print("census cube", cdc_census(prism(8), 5))
    print("census antiprism6", cdc_census(antiprism(3), 8))
    if "--quick" in sys.argv:
        sys.exit()
    bl = read("bridgeless_n3to7.g6")
    print("bridgeless corpus", len(bl), "planar", sum(nx.check_planarity(g)[0] for g in bl))
    for k in (2, 3, 4):
        print("bridgeless corpus node_connectivity>=", k, sum(nx.node_connectivity(g) >= k for g in bl))
    print("bridgeless corpus cubic", sum(all(d == 3 for _, d in g.degree()) for g in bl))
    for n in (8, 9):
        print("ham planar_4conn", n, [ham_count(g) for g in read(f"planar_4conn_n{n}.g6")])
    print("graph6", nx.to_graph6_bytes(nx.petersen_graph(), header=False).strip().decode(),
          nx.to_graph6_bytes(nx.complete_graph(4), header=False).strip().decode())
    print("sparse6 K4", nx.to_sparse6_bytes(nx.complete_graph(4), header=False).strip().decode())
