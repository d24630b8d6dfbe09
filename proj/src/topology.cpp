#include "stpgc/topology.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <queue>
#include <string>

namespace stpgc {

long long GraphView::edge_count() const {
    long long twice = 0;
    for (const auto& a : adj) twice += static_cast<long long>(a.size());
    return twice / 2;
}

GraphView snapshot(const WorkingGraph& g) {
    GraphView v;
    v.ids = g.alive_node_ids();
    v.n = static_cast<int>(v.ids.size());
    std::vector<int> compact(g.original_nodes(), -1);
    for (int i = 0; i < v.n; ++i) compact[v.ids[i]] = i;
    v.adj.resize(v.n);
    for (int i = 0; i < v.n; ++i) {
        for (NodeId w : g.neighbors(v.ids[i])) v.adj[i].push_back(compact[w]);
        // neighbors() is ascending in original ids, so compact ids are sorted
    }
    return v;
}

GraphView view_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    GraphView v;
    v.n = n;
    v.ids.resize(n);
    std::iota(v.ids.begin(), v.ids.end(), 0);
    v.adj.resize(n);
    for (auto [a, b] : edges) {
        v.adj[a].push_back(b);
        v.adj[b].push_back(a);
    }
    for (auto& a : v.adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    return v;
}

namespace {

// adj[u] entries strictly greater than u
std::vector<int> upper_neighbors(const GraphView& g, int u) {
    const auto& a = g.adj[u];
    auto it = std::upper_bound(a.begin(), a.end(), u);
    return {it, a.end()};
}

template <size_t K>
int simplex_index(const std::vector<std::array<int, K>>& sorted, std::array<int, K> key) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), key);
    return static_cast<int>(it - sorted.begin());
}

}  // namespace

CliqueComplex build_clique_complex(const GraphView& g, int max_dim) {
    if (max_dim != 2 && max_dim != 3)
        throw std::invalid_argument("max_dim must be 2 or 3");
    CliqueComplex k;
    k.max_dim = max_dim;
    k.nodes.resize(g.n);
    std::iota(k.nodes.begin(), k.nodes.end(), 0);

    for (int u = 0; u < g.n; ++u)
        for (int v : upper_neighbors(g, u)) k.edges.push_back({u, v});

    // ordered enumeration u < v < w keeps every triangle unique and the
    // list lexicographically sorted
    for (const auto& [u, v] : k.edges) {
        std::vector<int> common;
        std::set_intersection(g.adj[u].begin(), g.adj[u].end(),
                              g.adj[v].begin(), g.adj[v].end(),
                              std::back_inserter(common));
        for (int w : common) {
            if (w <= v) continue;
            k.triangles.push_back({u, v, w});
            if (static_cast<long long>(k.triangles.size()) > kOracleSimplexGuard)
                throw OracleScaleError("triangle enumeration exceeds oracle guard");
        }
    }

    if (max_dim == 3) {
        for (const auto& [u, v, w] : k.triangles) {
            for (int z : upper_neighbors(g, w)) {
                if (g.has_edge(u, z) && g.has_edge(v, z)) {
                    k.tetrahedra.push_back({u, v, w, z});
                    if (static_cast<long long>(k.tetrahedra.size()) > kOracleSimplexGuard)
                        throw OracleScaleError("tetrahedron enumeration exceeds oracle guard");
                }
            }
        }
    }

    k.d1.reserve(k.edges.size());
    for (const auto& [u, v] : k.edges) k.d1.push_back({u, v});

    k.d2.reserve(k.triangles.size());
    for (const auto& [u, v, w] : k.triangles) {
        k.d2.push_back({simplex_index<2>(k.edges, {u, v}),
                        simplex_index<2>(k.edges, {u, w}),
                        simplex_index<2>(k.edges, {v, w})});
    }

    if (max_dim == 3) {
        k.d3.reserve(k.tetrahedra.size());
        for (const auto& [u, v, w, z] : k.tetrahedra) {
            k.d3.push_back({simplex_index<3>(k.triangles, {u, v, w}),
                            simplex_index<3>(k.triangles, {u, v, z}),
                            simplex_index<3>(k.triangles, {u, w, z}),
                            simplex_index<3>(k.triangles, {v, w, z})});
        }
    }
    return k;
}

long long gf2_rank(const std::vector<std::vector<int>>& columns, int rows) {
    const int words = (rows + 63) / 64;
    if (words == 0 || columns.empty()) return 0;
    std::vector<std::vector<uint64_t>> pivots;  // reduced columns
    std::vector<int> pivot_row;

    std::vector<uint64_t> col(words);
    for (const auto& entries : columns) {
        std::fill(col.begin(), col.end(), 0);
        for (int r : entries) col[r >> 6] ^= 1ull << (r & 63);
        for (size_t p = 0; p < pivots.size(); ++p) {
            int r = pivot_row[p];
            if (col[r >> 6] >> (r & 63) & 1)
                for (int w = 0; w < words; ++w) col[w] ^= pivots[p][w];
        }
        int lead = -1;
        for (int w = 0; w < words && lead < 0; ++w) {
            if (col[w]) lead = w * 64 + std::countr_zero(col[w]);
        }
        if (lead >= 0) {
            pivots.push_back(col);
            pivot_row.push_back(lead);
        }
    }
    return static_cast<long long>(pivots.size());
}

BettiVector betti_numbers(const CliqueComplex& k) {
    const long long n = static_cast<long long>(k.nodes.size());
    const long long m = static_cast<long long>(k.edges.size());
    const long long t = static_cast<long long>(k.triangles.size());
    const long long r1 = gf2_rank(k.d1, static_cast<int>(n));
    const long long r2 = gf2_rank(k.d2, static_cast<int>(m));
    BettiVector b;
    b.beta0 = n - r1;
    b.beta1 = (m - r1) - r2;
    if (k.max_dim == 3) {
        const long long r3 = gf2_rank(k.d3, static_cast<int>(t));
        b.beta2 = (t - r2) - r3;
    }
    return b;
}

namespace {

std::vector<int> closed_neighborhood(const GraphView& g, int u) {
    std::vector<int> c = g.adj[u];
    c.insert(std::lower_bound(c.begin(), c.end(), u), u);
    return c;
}

// lowest-id v != u with N[u] ⊆ N[v], or -1
int node_dominator_ref(const GraphView& g, const std::vector<std::vector<int>>& closed, int u) {
    for (int v = 0; v < g.n; ++v) {
        if (v == u) continue;
        if (std::includes(closed[v].begin(), closed[v].end(),
                          closed[u].begin(), closed[u].end()))
            return v;
    }
    return -1;
}

int edge_dominator_ref(const GraphView& g, const std::vector<std::vector<int>>& closed,
                       int x, int y) {
    std::vector<int> nxy;
    std::set_intersection(closed[x].begin(), closed[x].end(),
                          closed[y].begin(), closed[y].end(),
                          std::back_inserter(nxy));
    for (int v = 0; v < g.n; ++v) {
        if (v == x || v == y) continue;
        if (std::includes(closed[v].begin(), closed[v].end(), nxy.begin(), nxy.end()))
            return v;
    }
    return -1;
}

}  // namespace

DominatedScan brute_force_dominated_scan(const GraphView& g) {
    std::vector<std::vector<int>> closed(g.n);
    for (int u = 0; u < g.n; ++u) closed[u] = closed_neighborhood(g, u);

    DominatedScan out;
    for (int u = 0; u < g.n; ++u) {
        int v = node_dominator_ref(g, closed, u);
        if (v >= 0) out.nodes.emplace_back(u, v);
    }
    for (int x = 0; x < g.n; ++x) {
        for (int y : upper_neighbors(g, x)) {
            int v = edge_dominator_ref(g, closed, x, y);
            if (v >= 0) out.edges.push_back({x, y, v});
        }
    }
    return out;
}

DominatedScan brute_force_dominated_scan_parallel(const GraphView& g) {
    std::vector<std::vector<int>> closed(g.n);
    for (int u = 0; u < g.n; ++u) closed[u] = closed_neighborhood(g, u);

    std::vector<int> node_dom(g.n, -1);
#pragma omp parallel for schedule(dynamic, 64)
    for (int u = 0; u < g.n; ++u) node_dom[u] = node_dominator_ref(g, closed, u);

    std::vector<std::array<int, 2>> edges;
    for (int x = 0; x < g.n; ++x)
        for (int y : upper_neighbors(g, x)) edges.push_back({x, y});
    std::vector<int> edge_dom(edges.size(), -1);
#pragma omp parallel for schedule(dynamic, 64)
    for (long long i = 0; i < static_cast<long long>(edges.size()); ++i)
        edge_dom[i] = edge_dominator_ref(g, closed, edges[i][0], edges[i][1]);

    DominatedScan out;
    for (int u = 0; u < g.n; ++u)
        if (node_dom[u] >= 0) out.nodes.emplace_back(u, node_dom[u]);
    for (size_t i = 0; i < edges.size(); ++i)
        if (edge_dom[i] >= 0) out.edges.push_back({edges[i][0], edges[i][1], edge_dom[i]});
    return out;
}

namespace {

void bfs_row(const GraphView& g, int src, std::vector<int>& dist) {
    std::fill(dist.begin(), dist.end(), kUnreachable);
    dist[src] = 0;
    std::queue<int> q;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.adj[u]) {
            if (dist[w] == kUnreachable) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
        }
    }
}

}  // namespace

std::vector<std::vector<int>> all_pairs_distances(const GraphView& g) {
    std::vector<std::vector<int>> dist(g.n, std::vector<int>(g.n));
    for (int s = 0; s < g.n; ++s) bfs_row(g, s, dist[s]);
    return dist;
}

std::vector<std::vector<int>> all_pairs_distances_parallel(const GraphView& g) {
    std::vector<std::vector<int>> dist(g.n, std::vector<int>(g.n));
#pragma omp parallel for schedule(dynamic, 8)
    for (int s = 0; s < g.n; ++s) bfs_row(g, s, dist[s]);
    return dist;
}

int connected_components(const GraphView& g) {
    std::vector<int> parent(g.n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int components = g.n;
    for (int u = 0; u < g.n; ++u) {
        for (int v : upper_neighbors(g, u)) {
            int ru = find(u), rv = find(v);
            if (ru != rv) {
                parent[ru] = rv;
                --components;
            }
        }
    }
    return components;
}

}  // namespace stpgc
