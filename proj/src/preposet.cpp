#include "nesto/preposet.hpp"

#include <algorithm>
#include <numeric>

#include "nesto/errors.hpp"

namespace nesto {

Preposet::Preposet(int n, const std::vector<std::pair<int, int>>& relations) : n_(n) {
    if (n < 1 || n > 64) throw invalid_input_error("preposet: ground size out of range");
    rows_.assign(n, 0);
    for (int i = 1; i <= n; ++i) rows_[i - 1] = bit_of(i);
    for (auto [i, j] : relations) {
        if (i < 1 || j < 1 || i > n || j > n)
            throw invalid_input_error("preposet: relation endpoint out of range");
        rows_[i - 1] |= bit_of(j);
    }
    // Warshall closure, one row at a time
    for (int k = 1; k <= n; ++k)
        for (int i = 1; i <= n; ++i)
            if (contains(rows_[i - 1], k)) rows_[i - 1] |= rows_[k - 1];
}

std::vector<Mask> Preposet::equivalence_classes() const {
    std::vector<Mask> classes;
    Mask seen = 0;
    for (int i = 1; i <= n_; ++i) {
        if (contains(seen, i)) continue;
        Mask cls = 0;
        for (int j = 1; j <= n_; ++j)
            if (relates(i, j) && relates(j, i)) cls |= bit_of(j);
        classes.push_back(cls);
        seen |= cls;
    }
    return classes;
}

bool Preposet::is_poset() const {
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j)
            if (relates(i, j) && relates(j, i)) return false;
    return true;
}

bool Preposet::is_connected() const {
    Mask comp = bit_of(1);
    bool grew = true;
    while (grew) {
        grew = false;
        for (int i = 1; i <= n_; ++i) {
            if (contains(comp, i)) continue;
            for (int j = 1; j <= n_; ++j)
                if (contains(comp, j) && (relates(i, j) || relates(j, i))) {
                    comp |= bit_of(i);
                    grew = true;
                    break;
                }
        }
    }
    return comp == full_mask(n_);
}

Preposet transitive_closure(int n, const std::vector<std::pair<int, int>>& relations) {
    return Preposet(n, relations);
}

Preposet closure_union(const Preposet& a, const Preposet& b) {
    if (a.n() != b.n()) throw invalid_input_error("closure_union: ground sizes differ");
    std::vector<std::pair<int, int>> rel;
    for (int i = 1; i <= a.n(); ++i)
        for (int j = 1; j <= a.n(); ++j)
            if (a.relates(i, j) || b.relates(i, j)) rel.emplace_back(i, j);
    return Preposet(a.n(), rel);
}

bool is_contraction(const Preposet& q, const Preposet& p) {
    if (q.n() != p.n()) throw invalid_input_error("is_contraction: ground sizes differ");
    int n = q.n();
    // q must contain p, and must equal the closure of p plus the reversals of
    // exactly those relations of p whose endpoints q merges
    std::vector<std::pair<int, int>> rel;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (!p.relates(i, j)) continue;
            if (!q.relates(i, j)) return false;
            rel.emplace_back(i, j);
            if (q.equivalent(i, j)) rel.emplace_back(j, i);
        }
    return Preposet(n, rel) == q;
}

bool properly_intersect(const Preposet& a, const Preposet& b) {
    Preposet u = closure_union(a, b);
    return is_contraction(u, a) && is_contraction(u, b);
}

namespace {

void extensions_dfs(const Preposet& q, Mask placed, std::vector<int>& word,
                    std::vector<std::vector<int>>& out, size_t cap) {
    int n = q.n();
    if (static_cast<int>(word.size()) == n) {
        if (out.size() >= cap)
            throw resource_cap_error("linear_extensions: more than cap extensions");
        out.push_back(word);
        return;
    }
    for (int v = 1; v <= n; ++v) {
        if (contains(placed, v)) continue;
        bool minimal = true;
        for (int u = 1; u <= n && minimal; ++u)
            if (u != v && !contains(placed, u) && q.relates(u, v)) minimal = false;
        if (!minimal) continue;
        word.push_back(v);
        extensions_dfs(q, placed | bit_of(v), word, out, cap);
        word.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> linear_extensions(const Preposet& q, size_t cap) {
    if (!q.is_poset()) throw invalid_input_error("linear_extensions: not a poset");
    std::vector<std::vector<int>> out;
    std::vector<int> word;
    extensions_dfs(q, 0, word, out, cap);
    return out;
}

std::vector<std::pair<int, int>> covers(const Preposet& q) {
    if (!q.is_poset()) throw invalid_input_error("covers: not a poset");
    int n = q.n();
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j || !q.relates(i, j)) continue;
            bool cover = true;
            for (int k = 1; k <= n && cover; ++k)
                if (k != i && k != j && q.relates(i, k) && q.relates(k, j)) cover = false;
            if (cover) out.emplace_back(i, j);
        }
    return out;
}

bool is_tree_poset(const Preposet& q) {
    return q.is_poset() && static_cast<int>(covers(q).size()) == q.n() - 1 && q.is_connected();
}

DescentInfo poset_descents(const Preposet& q) {
    DescentInfo d;
    for (auto [i, j] : covers(q))
        if (i > j) d.pairs.emplace_back(i, j);
    d.count = static_cast<int>(d.pairs.size());
    return d;
}

Preposet relabel(const Preposet& q, const std::vector<int>& w) {
    std::vector<std::pair<int, int>> rel;
    for (int i = 1; i <= q.n(); ++i)
        for (int j = 1; j <= q.n(); ++j)
            if (q.relates(i, j)) rel.emplace_back(w[i - 1], w[j - 1]);
    return Preposet(q.n(), rel);
}

IntPoly generalized_eulerian(const Preposet& q, int n_cap) {
    if (!is_tree_poset(q)) throw invalid_input_error("generalized_eulerian: not a tree-poset");
    int n = q.n();
    if (n > n_cap) throw resource_cap_error("generalized_eulerian: ground size above cap");
    // relabelling maps covers to covers, so des(wQ) counts cover pairs that w
    // puts out of integer order
    auto cov = covers(q);
    std::vector<Int> counts(n, 0);
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    do {
        int des = 0;
        for (auto [i, j] : cov)
            if (w[i - 1] > w[j - 1]) ++des;
        counts[des] += 1;
    } while (std::next_permutation(w.begin(), w.end()));
    return IntPoly{counts};
}

FanResult is_complete_fan(const std::vector<Preposet>& fan) {
    FanResult r;
    if (fan.empty()) {
        r.status = FanStatus::gap;
        r.reason = "empty fan";
        return r;
    }
    int n = fan[0].n();
    for (size_t i = 0; i < fan.size(); ++i) {
        if (fan[i].n() != n) throw invalid_input_error("is_complete_fan: ground sizes differ");
        if (!fan[i].is_poset()) {
            r.status = FanStatus::not_poset;
            r.reason = "member is not a poset";
            r.poset_witness = {i};
            return r;
        }
        for (size_t j = 0; j < i; ++j)
            if (fan[i] == fan[j]) {
                r.status = FanStatus::duplicate;
                r.reason = "duplicate posets";
                r.poset_witness = {j, i};
                return r;
            }
    }
    for (size_t i = 0; i < fan.size(); ++i)
        for (size_t j = i + 1; j < fan.size(); ++j)
            if (!properly_intersect(fan[i], fan[j])) {
                r.status = FanStatus::improper;
                r.reason = "improper intersection";
                r.poset_witness = {i, j};
                return r;
            }
    if (n > 10) throw resource_cap_error("is_complete_fan: ground size above cap");
    std::vector<std::vector<std::pair<int, int>>> cov;
    for (const Preposet& q : fan) cov.push_back(covers(q));
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    std::vector<int> pos(n + 1, 0);
    do {
        for (int k = 0; k < n; ++k) pos[w[k]] = k;
        size_t hits = 0, first = 0;
        for (size_t i = 0; i < fan.size(); ++i) {
            bool ext = true;
            for (auto [a, b] : cov[i])
                if (pos[a] > pos[b]) {
                    ext = false;
                    break;
                }
            if (ext) {
                if (hits == 0) first = i;
                ++hits;
            }
        }
        if (hits != 1) {
            r.status = hits == 0 ? FanStatus::gap : FanStatus::overlap;
            r.reason = hits == 0 ? "ordering extends no poset" : "ordering extends several posets";
            r.perm_witness = w;
            if (hits > 1) r.poset_witness = {first};
            return r;
        }
    } while (std::next_permutation(w.begin(), w.end()));
    r.complete = true;
    r.status = FanStatus::ok;
    return r;
}

IntPoly h_of_poset_fan(const std::vector<Preposet>& fan) {
    FanResult fr = is_complete_fan(fan);
    if (!fr.complete)
        throw invalid_input_error("h_of_poset_fan: not a complete fan: " + fr.reason);
    int n = fan[0].n();
    std::vector<Int> counts(n, 0);
    for (const Preposet& q : fan) {
        if (!is_tree_poset(q))
            throw invalid_input_error("h_of_poset_fan: member is not a tree-poset");
        counts[poset_descents(q).count] += 1;
    }
    return IntPoly{counts};
}

}  // namespace nesto
