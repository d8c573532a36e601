#pragma once

#include <utility>
#include <vector>

#include "nesto/errors.hpp"
#include "nesto/mask.hpp"

namespace nesto {

// Simple undirected graph on nodes 1..n, no loops or multi-edges.
struct Graph {
    int n = 0;
    std::vector<Mask> adj;  // adj[i] = neighbor mask of node i+1

    Graph() = default;
    explicit Graph(int n_) : n(n_), adj(n_, 0) {
        if (n_ < 0 || n_ > 64) throw invalid_input_error("graph: node count out of range");
    }

    void add_edge(int i, int j) {
        if (i < 1 || j < 1 || i > n || j > n)
            throw invalid_input_error("graph: edge endpoint out of range");
        if (i == j) throw invalid_input_error("graph: loop edge");
        adj[i - 1] |= bit_of(j);
        adj[j - 1] |= bit_of(i);
    }
    bool has_edge(int i, int j) const { return contains(adj[i - 1], j); }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> e;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (has_edge(i, j)) e.emplace_back(i, j);
        return e;
    }
    int edge_count() const {
        int c = 0;
        for (int i = 0; i < n; ++i) c += popcount(adj[i]);
        return c / 2;
    }

    // connected component of `start` inside the induced subgraph on `within`
    Mask component_of(int start, Mask within) const;
    bool is_connected_subset(Mask s) const;
    bool is_connected() const { return n == 0 || is_connected_subset(full_mask(n)); }

    // node contraction used by the graphical-building contraction rule:
    // i,j in V\I are adjacent iff they are adjacent in G or both have a
    // neighbor inside I (labels kept, I removed)
    Graph contract(Mask i_set) const;
};

// biconnected components as edge sets (bridges are single-edge components);
// each component is reported as the mask of its node set together with its
// edge count
struct BiconnectedComponent {
    Mask nodes = 0;
    int edge_count = 0;
};
std::vector<BiconnectedComponent> biconnected_components(const Graph& g);

// sum of pairwise shortest-path distances; throws on disconnected input
long wiener_index(const Graph& g);

// nodes of the line graph are the edges of g in (i,j) lexicographic order
Graph line_graph(const Graph& g);

// no induced triple i<j<k with edges (i,j),(i,k) but not (j,k)
bool is_perfectly_labelled_chordal(const Graph& g);

// greedy simplicial elimination; empty result when g is not chordal.
// In the returned order, the later neighbors of each node form a clique.
std::vector<int> perfect_elimination_ordering(const Graph& g);

// relabelling that makes g perfectly labelled (node order[k-1] gets label k);
// throws when g is not chordal.  perm[old-1] = new label.
std::vector<int> perfect_labelling(const Graph& g);

Graph relabel(const Graph& g, const std::vector<int>& perm);

}  // namespace nesto
