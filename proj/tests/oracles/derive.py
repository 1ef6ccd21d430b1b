# Copyright 2026 The colnum Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Brute-force reference values frozen into the C++ unit tests.

Shares no code with the library. Run: python3 tests/oracles/derive.py
"""

import itertools
import json

import networkx as nx

INF = None


def simple_paths(g, x, max_len):
    stack = [(x, [x])]
    while stack:
        v, path = stack.pop()
        yield path
        if len(path) - 1 == max_len:
            continue
        for w in g[v]:
            if w not in path:
                stack.append((w, path + [w]))


def weak(g, rank, x, L):
    out = set()
    for p in simple_paths(g, x, L):
        y = p[-1]
        if rank[y] <= rank[x] and all(rank[v] >= rank[y] for v in p):
            out.add(y)
    return out


def strong(g, rank, x, L):
    out = set()
    for p in simple_paths(g, x, L):
        y = p[-1]
        if rank[y] <= rank[x] and all(rank[v] >= rank[x] for v in p[:-1]):
            out.add(y)
    return out


def back(g, rank, x, L):
    paths = [p[1:] for p in simple_paths(g, x, L)
             if len(p) > 1 and rank[p[-1]] < rank[x]
             and all(rank[v] > rank[x] for v in p[1:-1])]
    best = 0

    def rec(i, used, count):
        nonlocal best
        best = max(best, count)
        for j in range(i, len(paths)):
            if used.isdisjoint(paths[j]):
                rec(j + 1, used | set(paths[j]), count + 1)

    rec(0, frozenset(), 0)
    return best


def value(g, order, kind, r):
    n = g.number_of_nodes()
    L = n if r is INF else r
    rank = {v: i for i, v in enumerate(order)}
    if kind == "weak":
        return max(len(weak(g, rank, x, L)) for x in g)
    if kind == "strong":
        return max(len(strong(g, rank, x, L)) for x in g)
    return max(back(g, rank, x, L) + 1 for x in g)


def optimum(g, kind, r):
    return min(value(g, order, kind, r) for order in itertools.permutations(sorted(g)))


def treewidth(g):
    best = None
    for order in itertools.permutations(sorted(g)):
        h = nx.Graph(g)
        width = 0
        for v in order:
            nbrs = list(h[v])
            width = max(width, len(nbrs))
            h.add_edges_from(itertools.combinations(nbrs, 2))
            h.remove_node(v)
        best = width if best is None else min(best, width)
    return best


def treedepth(g):
    if g.number_of_nodes() == 0:
        return 0
    comps = list(nx.connected_components(g))
    if len(comps) > 1:
        return max(treedepth(g.subgraph(c).copy()) for c in comps)
    if g.number_of_nodes() == 1:
        return 1
    return 1 + min(treedepth(g.subgraph(set(g) - {v}).copy()) for v in g)


def reach_graph(g, order, r):
    rank = {v: i for i, v in enumerate(order)}
    h = nx.Graph()
    h.add_nodes_from(g)
    for v in g:
        for u in weak(g, rank, v, r):
            if u != v:
                h.add_edge(u, v)
    return h


def collect(n, layers):
    """layers: list of (graph, r, a, order). Deterministic tie-breaks."""
    hs = [reach_graph(g, order, r) for g, r, a, order in layers]
    ranks = [{v: i for i, v in enumerate(order)} for _, _, _, order in layers]
    m = {v: [a for _, _, a, _ in layers] for v in range(n)}
    uncollected = set(range(n))
    star = []
    sigma1 = layers[0][3]
    v = next(u for u in sigma1 if u in uncollected)
    rounds = 0
    while uncollected:
        i = next(j for j in range(len(layers)) if m[v][j] > 0)
        m[v][i] -= 1
        rounds += 1
        if sum(m[v]) == 0:
            uncollected.discard(v)
            star.append(v)
        cand = [u for u in list(hs[i][v]) + [v] if u in uncollected]
        if cand:
            v = min(cand, key=lambda u: ranks[i][u])
        elif uncollected:
            v = next(u for u in sigma1 if u in uncollected)
    return star, rounds


def named_graphs():
    return {
        "P5": nx.path_graph(5),
        "C6": nx.cycle_graph(6),
        "K23": nx.complete_bipartite_graph(2, 3),
        "W5": nx.wheel_graph(6),
        "house": nx.house_graph(),
        "Q3": nx.hypercube_graph(3),
    }


def main():
    out = {}
    for name, g in named_graphs().items():
        g = nx.convert_node_labels_to_integers(g, ordering="sorted")
        entry = {"n": g.number_of_nodes(), "edges": sorted(tuple(sorted(e)) for e in g.edges())}
        if g.number_of_nodes() <= 6:
            for r in (1, 2, 3, INF):
                for kind in ("weak", "strong", "adm"):
                    if kind == "adm" and r is INF:
                        continue
                    entry[f"{kind}_{'inf' if r is INF else r}"] = optimum(g, kind, r)
        entry["tw"] = treewidth(g) if g.number_of_nodes() <= 7 else None
        entry["td"] = treedepth(g)
        out[name] = entry

    atlas = nx.graph_atlas_g()
    counts = [0] * 8
    connected = [0] * 8
    for g in atlas[1:]:
        counts[g.number_of_nodes()] += 1
        connected[g.number_of_nodes()] += nx.is_connected(g)
    out["corpus_counts"] = counts[1:]
    out["corpus_connected"] = connected[1:]

    c6 = nx.cycle_graph(6)
    star, rounds = collect(6, [(c6, 1, 2, list(range(6))), (c6, 2, 1, [5, 4, 3, 2, 1, 0])])
    out["collect_c6"] = {"sigma_star": star, "rounds": rounds}
    p3 = nx.path_graph(3)
    star, rounds = collect(3, [(p3, 1, 1, [0, 1, 2])])
    out["collect_p3"] = {"sigma_star": star, "rounds": rounds}
    print(json.dumps(out, indent=1))


if __name__ == "__main__":
    main()
