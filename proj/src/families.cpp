#include "nesto/families.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "nesto/nested.hpp"
#include "nesto/series.hpp"

namespace nesto {

Graph spider_graph(const std::vector<int>& a) {
    for (int len : a)
        if (len < 0) throw invalid_input_error("spider_graph: negative leg length");
    int n = std::accumulate(a.begin(), a.end(), 0) + 1;
    Graph g(n);
    int next = 1;
    for (int len : a) {
        for (int v = 0; v + 1 < len; ++v, ++next) g.add_edge(next, next + 1);
        if (len > 0) {
            g.add_edge(next, n);
            ++next;
        }
    }
    return g;
}

Graph hedgehog_graph(const std::vector<int>& a) {
    for (int len : a)
        if (len < 0) throw invalid_input_error("hedgehog_graph: negative chain length");
    int n = std::accumulate(a.begin(), a.end(), 0);
    Graph g(n);
    std::vector<int> first;
    int next = 1;
    for (int len : a) {
        if (len == 0) continue;
        first.push_back(next);
        for (int v = 0; v + 1 < len; ++v, ++next) g.add_edge(next, next + 1);
        ++next;
    }
    for (size_t i = 0; i < first.size(); ++i)
        for (size_t j = i + 1; j < first.size(); ++j) g.add_edge(first[i], first[j]);
    return g;
}

BuildingSet binary_tree_cube_building(int n) {
    if (n < 1 || n > 64) throw invalid_input_error("binary_tree_cube_building: leaf count");
    std::vector<Mask> mem;
    for (int i = 1; i <= n; ++i) mem.push_back(bit_of(i));
    Mask interval = bit_of(1);
    for (int j = 2; j <= n; ++j) {
        interval |= bit_of(j);
        mem.push_back(interval);
    }
    return validate_building(mem, n);
}

BuildingSet stanley_pitman_building(int n) {
    if (n < 1 || n > 64) throw invalid_input_error("stanley_pitman_building: size");
    std::vector<Mask> mem;
    Mask suffix = 0;
    for (int i = n; i >= 1; --i) {
        suffix |= bit_of(i);
        mem.push_back(bit_of(i));
        mem.push_back(suffix);
    }
    std::sort(mem.begin(), mem.end());
    mem.erase(std::unique(mem.begin(), mem.end()), mem.end());
    return validate_building(mem, n);
}

namespace {

Graph simple_path(int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph star_center_first(int leaves) {  // centre labelled 1, 3-star for leaves=2
    Graph g(leaves + 1);
    for (int v = 2; v <= leaves + 1; ++v) g.add_edge(1, v);
    return g;
}

void need_params(const std::vector<int>& params, size_t count, const char* name) {
    if (params.size() != count)
        throw invalid_input_error(std::string("named_family: ") + name +
                                  ": wrong number of parameters");
}

}  // namespace

FamilyObject named_family(const std::string& name, const std::vector<int>& params) {
    if (name == "path") {
        need_params(params, 1, "path");
        if (params[0] < 1) throw invalid_input_error("named_family: path needs n >= 1");
        return simple_path(params[0]);
    }
    if (name == "cycle") {
        need_params(params, 1, "cycle");
        if (params[0] < 3) throw invalid_input_error("named_family: cycle needs n >= 3");
        Graph g = simple_path(params[0]);
        g.add_edge(params[0], 1);
        return g;
    }
    if (name == "complete") {
        need_params(params, 1, "complete");
        if (params[0] < 1) throw invalid_input_error("named_family: complete needs n >= 1");
        Graph g(params[0]);
        for (int i = 1; i <= params[0]; ++i)
            for (int j = i + 1; j <= params[0]; ++j) g.add_edge(i, j);
        return g;
    }
    if (name == "star") {
        need_params(params, 1, "star");
        int m = params[0];
        if (m < 0) throw invalid_input_error("named_family: star needs m >= 0");
        Graph g(m + 1);
        for (int v = 1; v <= m; ++v) g.add_edge(v, m + 1);
        return g;
    }
    if (name == "daisy" || name == "dynkinD") {
        int n, k;
        if (name == "dynkinD") {
            need_params(params, 1, "dynkinD");
            n = params[0];
            k = 2;
        } else {
            need_params(params, 2, "daisy");
            n = params[0];
            k = params[1];
        }
        if (k < 1 || n < k + 2)
            throw invalid_input_error("named_family: daisy needs k >= 1 and n >= k+2");
        std::vector<int> legs{n - k - 1};
        legs.insert(legs.end(), k, 1);
        return spider_graph(legs);
    }
    if (name == "kite") {
        need_params(params, 2, "kite");
        int n = params[0], k = params[1];
        if (k < 2 || n < k) throw invalid_input_error("named_family: kite needs 2 <= k <= n");
        std::vector<int> chains{n - k + 1};
        chains.insert(chains.end(), k - 1, 1);
        return hedgehog_graph(chains);
    }
    if (name == "affineD") {
        need_params(params, 1, "affineD");
        if (params[0] < 5) throw invalid_input_error("named_family: affineD needs n >= 5");
        return path_like_graph(star_center_first(2), 1, star_center_first(2), 1, params[0]);
    }
    if (name == "binaryTreeCube") {
        need_params(params, 1, "binaryTreeCube");
        return binary_tree_cube_building(params[0]);
    }
    if (name == "stanleyPitman") {
        need_params(params, 1, "stanleyPitman");
        return stanley_pitman_building(params[0]);
    }
    throw invalid_input_error("named_family: unknown family " + name);
}

ZonotopeFaces zonotope_face_polys(const Graph& g) {
    ZonotopeFaces r;
    r.h = IntPoly::one();
    r.gamma = IntPoly::one();
    for (const auto& comp : biconnected_components(g)) {
        int c = popcount(comp.nodes);
        if (comp.edge_count != c * (c - 1) / 2) {
            r.offending = comp.nodes;
            return r;
        }
        r.h *= eulerian_polynomial(c);
        r.gamma *= gamma_from_h(eulerian_polynomial(c), c - 1).poly();
    }
    r.simple = true;
    r.f = f_from_h(r.h);
    return r;
}

namespace {

// canonical nested-parentheses code of the rooted tree
std::string rooted_code(const std::vector<std::vector<int>>& adj, int v, int parent) {
    std::vector<std::string> child;
    for (int u : adj[v])
        if (u != parent) child.push_back(rooted_code(adj, u, v));
    std::sort(child.begin(), child.end());
    std::string s = "(";
    for (const auto& c : child) s += c;
    return s + ")";
}

std::vector<int> tree_centers(const std::vector<std::vector<int>>& adj) {
    int n = static_cast<int>(adj.size()) - 1;
    std::vector<int> deg(n + 1), layer;
    int remaining = n;
    for (int v = 1; v <= n; ++v) {
        deg[v] = static_cast<int>(adj[v].size());
        if (deg[v] <= 1) layer.push_back(v);
    }
    while (remaining > 2) {
        std::vector<int> next;
        remaining -= static_cast<int>(layer.size());
        for (int v : layer)
            for (int u : adj[v])
                if (--deg[u] == 1) next.push_back(u);
        layer = std::move(next);
    }
    return layer;
}

std::string tree_code(const std::vector<std::vector<int>>& adj) {
    std::string best;
    for (int c : tree_centers(adj)) {
        std::string s = rooted_code(adj, c, 0);
        if (best.empty() || s < best) best = s;
    }
    return best;
}

// componentwise order on gamma vectors; returns {a<=b, b<=a}
std::pair<bool, bool> gamma_compare(const IntPoly& a, const IntPoly& b) {
    int d = std::max(a.degree(), b.degree());
    bool le = true, ge = true;
    for (int i = 0; i <= d; ++i) {
        if (a.coeff(i) > b.coeff(i)) le = false;
        if (a.coeff(i) < b.coeff(i)) ge = false;
    }
    return {le, ge};
}

}  // namespace

TreeSurvey tree_gamma_survey(int n) {
    if (n < 4 || n > 9) throw resource_cap_error("tree_gamma_survey: n out of range");
    // decode every sequence in [n]^{n-2}, keep one labelled tree per code
    std::map<std::string, std::vector<std::pair<int, int>>> trees;
    std::vector<int> pruefer(n - 2, 1);
    while (true) {
        std::vector<int> deg(n + 1, 1);
        for (int v : pruefer) ++deg[v];
        std::vector<std::pair<int, int>> edges;
        std::vector<std::vector<int>> adj(n + 1);
        Mask used = 0;
        for (int v : pruefer) {
            for (int w = 1; w <= n; ++w)
                if (deg[w] == 1 && !contains(used, w)) {
                    edges.emplace_back(w, v);
                    used |= bit_of(w);
                    --deg[v];
                    break;
                }
        }
        int last1 = 0, last2 = 0;
        for (int w = 1; w <= n; ++w)
            if (deg[w] == 1 && !contains(used, w)) (last1 ? last2 : last1) = w;
        edges.emplace_back(last1, last2);
        for (auto [u, v] : edges) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        trees.emplace(tree_code(adj), edges);

        int pos = n - 3;
        while (pos >= 0 && pruefer[pos] == n) pruefer[pos--] = 1;
        if (pos < 0) break;
        ++pruefer[pos];
    }

    TreeSurvey s;
    s.n = n;
    int path_row = -1, star_row = -1;
    for (const auto& [code, edges] : trees) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        TreeSurveyRow row;
        row.code = code;
        for (int v = 1; v <= n; ++v) row.degree_sequence.push_back(popcount(g.adj[v - 1]));
        std::sort(row.degree_sequence.rbegin(), row.degree_sequence.rend());
        row.wiener = wiener_index(g);
        row.gamma = gamma_from_h(h_via_descents(graphical_building(g)), n - 1).poly();
        if (row.degree_sequence[0] == 2) path_row = static_cast<int>(s.rows.size());
        if (row.degree_sequence[0] == n - 1) star_row = static_cast<int>(s.rows.size());
        s.rows.push_back(std::move(row));
    }

    int m = static_cast<int>(s.rows.size());
    s.path_unique_min = s.star_unique_max = true;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto [le, ge] = gamma_compare(s.rows[i].gamma, s.rows[j].gamma);
            if (!le && !ge) {
                s.has_incomparable_pair = true;
                s.incomparable_pairs.emplace_back(i, j);
            }
        }
    for (int i = 0; i < m; ++i) {
        if (i != path_row) {
            auto [le, ge] = gamma_compare(s.rows[path_row].gamma, s.rows[i].gamma);
            if (!le || s.rows[path_row].gamma == s.rows[i].gamma) s.path_unique_min = false;
        }
        if (i != star_row) {
            auto [le, ge] = gamma_compare(s.rows[i].gamma, s.rows[star_row].gamma);
            if (!le || s.rows[star_row].gamma == s.rows[i].gamma) s.star_unique_max = false;
        }
    }
    return s;
}

std::string tree_survey_csv(const TreeSurvey& s) {
    int width = 0;
    for (const auto& row : s.rows) width = std::max(width, row.gamma.degree() + 1);
    std::ostringstream out;
    out << "tree_code,degree_sequence,wiener";
    for (int i = 0; i < width; ++i) out << ",gamma_" << i;
    out << "\n";
    for (const auto& row : s.rows) {
        out << row.code << ",";
        for (size_t i = 0; i < row.degree_sequence.size(); ++i)
            out << (i ? " " : "") << row.degree_sequence[i];
        out << "," << row.wiener;
        for (int i = 0; i < width; ++i) out << "," << row.gamma.coeff(i);
        out << "\n";
    }
    return out.str();
}

}  // namespace nesto
