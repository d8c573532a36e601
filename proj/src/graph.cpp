#include "nesto/graph.hpp"

#include <algorithm>
#include <numeric>

namespace nesto {

Mask Graph::component_of(int start, Mask within) const {
    if (!contains(within, start)) return 0;
    Mask comp = bit_of(start);
    Mask frontier = comp;
    while (frontier) {
        Mask next = 0;
        for (Mask f = frontier; f;) {
            int v = lowest_element(f);
            f &= f - 1;
            next |= adj[v - 1] & within & ~comp;
        }
        comp |= next;
        frontier = next;
    }
    return comp;
}

bool Graph::is_connected_subset(Mask s) const {
    if (s == 0) return false;
    return component_of(lowest_element(s), s) == s;
}

Graph Graph::contract(Mask i_set) const {
    Graph h(n);
    Mask rest = full_mask(n) & ~i_set;
    for (int i = 1; i <= n; ++i) {
        if (!contains(rest, i)) continue;
        for (int j = i + 1; j <= n; ++j) {
            if (!contains(rest, j)) continue;
            bool edge = has_edge(i, j) || ((adj[i - 1] & i_set) && (adj[j - 1] & i_set));
            if (edge) h.add_edge(i, j);
        }
    }
    // nodes inside i_set stay isolated; callers restrict to `rest`
    return h;
}

namespace {

struct BiconnState {
    const Graph* g;
    std::vector<int> disc, low;
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<BiconnectedComponent> out;
    int timer = 0;

    void pop_component(std::pair<int, int> until) {
        BiconnectedComponent comp;
        while (true) {
            auto e = edge_stack.back();
            edge_stack.pop_back();
            comp.nodes |= bit_of(e.first) | bit_of(e.second);
            comp.edge_count += 1;
            if (e == until) break;
        }
        out.push_back(comp);
    }

    void dfs(int u, int parent) {
        disc[u - 1] = low[u - 1] = ++timer;
        for (Mask m = g->adj[u - 1]; m;) {
            int v = lowest_element(m);
            m &= m - 1;
            if (v == parent) {
                parent = 0;  // skip the tree edge once; parallel edges are excluded anyway
                continue;
            }
            if (disc[v - 1] == 0) {
                edge_stack.push_back({u, v});
                dfs(v, u);
                low[u - 1] = std::min(low[u - 1], low[v - 1]);
                if (low[v - 1] >= disc[u - 1]) pop_component({u, v});
            } else if (disc[v - 1] < disc[u - 1]) {
                edge_stack.push_back({u, v});
                low[u - 1] = std::min(low[u - 1], disc[v - 1]);
            }
        }
    }
};

}  // namespace

std::vector<BiconnectedComponent> biconnected_components(const Graph& g) {
    BiconnState st;
    st.g = &g;
    st.disc.assign(g.n, 0);
    st.low.assign(g.n, 0);
    for (int v = 1; v <= g.n; ++v)
        if (st.disc[v - 1] == 0 && g.adj[v - 1]) st.dfs(v, 0);
    // canonical order: by (popcount, mask) of the node set
    std::sort(st.out.begin(), st.out.end(), [](const auto& a, const auto& b) {
        return canonical_less(a.nodes, b.nodes);
    });
    return st.out;
}

long wiener_index(const Graph& g) {
    long total = 0;
    for (int s = 1; s <= g.n; ++s) {
        std::vector<int> dist(g.n, -1);
        dist[s - 1] = 0;
        std::vector<int> queue{s};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            for (Mask m = g.adj[u - 1]; m;) {
                int v = lowest_element(m);
                m &= m - 1;
                if (dist[v - 1] < 0) {
                    dist[v - 1] = dist[u - 1] + 1;
                    queue.push_back(v);
                }
            }
        }
        for (int t = s + 1; t <= g.n; ++t) {
            if (dist[t - 1] < 0) throw invalid_input_error("wiener_index: graph is disconnected");
            total += dist[t - 1];
        }
    }
    return total;
}

Graph line_graph(const Graph& g) {
    auto e = g.edges();
    Graph h(static_cast<int>(e.size()));
    for (size_t a = 0; a < e.size(); ++a)
        for (size_t b = a + 1; b < e.size(); ++b) {
            Mask ma = bit_of(e[a].first) | bit_of(e[a].second);
            Mask mb = bit_of(e[b].first) | bit_of(e[b].second);
            if (ma & mb) h.add_edge(static_cast<int>(a) + 1, static_cast<int>(b) + 1);
        }
    return h;
}

bool is_perfectly_labelled_chordal(const Graph& g) {
    for (int i = 1; i <= g.n; ++i) {
        Mask later = g.adj[i - 1] & ~full_mask(i);  // neighbors with labels > i
        // later neighbors of i must form a clique
        for (Mask m = later; m;) {
            int j = lowest_element(m);
            m &= m - 1;
            if ((later & ~g.adj[j - 1] & ~bit_of(j)) != 0) return false;
        }
    }
    return true;
}

std::vector<int> perfect_elimination_ordering(const Graph& g) {
    std::vector<int> order;
    Mask alive = full_mask(g.n);
    for (int step = 0; step < g.n; ++step) {
        int found = 0;
        for (int v = 1; v <= g.n && !found; ++v) {
            if (!contains(alive, v)) continue;
            Mask nb = g.adj[v - 1] & alive;
            bool simplicial = true;
            for (Mask m = nb; m && simplicial;) {
                int u = lowest_element(m);
                m &= m - 1;
                if ((nb & ~g.adj[u - 1] & ~bit_of(u)) != 0) simplicial = false;
            }
            if (simplicial) found = v;
        }
        if (!found) return {};  // not chordal
        order.push_back(found);
        alive &= ~bit_of(found);
    }
    return order;
}

std::vector<int> perfect_labelling(const Graph& g) {
    auto order = perfect_elimination_ordering(g);
    if (g.n > 0 && order.empty()) throw invalid_input_error("perfect_labelling: graph is not chordal");
    std::vector<int> perm(g.n, 0);
    for (int k = 0; k < g.n; ++k) perm[order[k] - 1] = k + 1;
    return perm;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    Graph h(g.n);
    for (auto [i, j] : g.edges()) h.add_edge(perm[i - 1], perm[j - 1]);
    return h;
}

}  // namespace nesto
