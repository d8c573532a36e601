#include "nesto/nested.hpp"

#include <algorithm>
#include <map>

#include "nesto/errors.hpp"

namespace nesto {

BTree make_b_tree(int n, const std::vector<int>& parent) {
    if (static_cast<int>(parent.size()) != n)
        throw invalid_input_error("b_tree: parent array size mismatch");
    BTree t;
    t.n = n;
    t.parent = parent;
    for (int v = 1; v <= n; ++v) {
        int p = parent[v - 1];
        if (p == 0) {
            if (t.root != 0) throw invalid_input_error("b_tree: several roots");
            t.root = v;
        } else if (p < 1 || p > n || p == v) {
            throw invalid_input_error("b_tree: bad parent value");
        }
    }
    if (t.root == 0) throw invalid_input_error("b_tree: no root");
    t.below.assign(n, 0);
    for (int v = 1; v <= n; ++v) {
        Mask seen = 0;
        for (int u = v; u != 0; u = parent[u - 1]) {
            if (contains(seen, u)) throw invalid_input_error("b_tree: parent cycle");
            seen |= bit_of(u);
            t.below[u - 1] |= bit_of(v);
        }
    }
    return t;
}

namespace {

bool nested_or_disjoint(Mask a, Mask b) {
    Mask c = a & b;
    return c == 0 || c == a || c == b;
}

// is there a pairwise-disjoint subfamily of `pool` (indices >= from), all
// disjoint from `acc`, making acc's union a member once at least `need` more
// sets join?  On success the family is appended to `picked`.
bool disjoint_union_member(const BuildingSet& b, const std::vector<Mask>& pool, size_t from,
                           Mask acc, int need, std::vector<Mask>& picked) {
    if (need <= 0 && b.is_member(acc)) return true;
    for (size_t i = from; i < pool.size(); ++i) {
        if (acc & pool[i]) continue;
        picked.push_back(pool[i]);
        if (disjoint_union_member(b, pool, i + 1, acc | pool[i], need - 1, picked)) return true;
        picked.pop_back();
    }
    return false;
}

}  // namespace

NestedResult is_nested(const BuildingSet& b, const std::vector<Mask>& members, bool flag_known) {
    for (Mask m : members) {
        if (!b.is_member(m))
            throw invalid_input_error("is_nested: " + mask_to_string(m) + " is not a member");
        for (Mask mx : b.maximal_members())
            if (m == mx)
                throw invalid_input_error("is_nested: " + mask_to_string(m) +
                                          " is a maximal member");
    }
    NestedResult r;
    for (size_t i = 0; i < members.size(); ++i)
        for (size_t j = i + 1; j < members.size(); ++j)
            if (!nested_or_disjoint(members[i], members[j])) {
                r.nested = false;
                r.reason = "members neither nested nor disjoint";
                r.witness = {members[i], members[j]};
                return r;
            }
    if (flag_known) {
        for (size_t i = 0; i < members.size(); ++i)
            for (size_t j = i + 1; j < members.size(); ++j)
                if ((members[i] & members[j]) == 0 && b.is_member(members[i] | members[j])) {
                    r.nested = false;
                    r.reason = "union of a disjoint pair is a member";
                    r.witness = {members[i], members[j]};
                    return r;
                }
        return r;
    }
    std::vector<Mask> picked;
    for (size_t i = 0; i < members.size(); ++i) {
        picked.assign(1, members[i]);
        if (disjoint_union_member(b, members, i + 1, members[i], 1, picked)) {
            r.nested = false;
            r.reason = "union of a disjoint family is a member";
            r.witness = picked;
            return r;
        }
    }
    return r;
}

namespace {

struct FaceEnum {
    const BuildingSet* b;
    std::vector<Mask> cand;  // members minus maximal members, canonical order
    std::vector<Mask> cur;
    std::vector<std::size_t> counts;  // faces by nested-set size
    std::size_t total = 0, cap = 0;
    int d = 0;

    bool can_add(Mask m) const {
        for (Mask x : cur)
            if (!nested_or_disjoint(x, m)) return false;
        // no pairwise-disjoint subfamily through m may union to a member
        std::vector<Mask> picked{m};
        return !disjoint_union_member(*b, cur, 0, m, 1, picked);
    }

    void dfs(size_t from) {
        if (++total > cap) throw resource_cap_error("nested_complex_fvector: cap exceeded");
        if (counts.size() <= cur.size()) counts.resize(cur.size() + 1, 0);
        counts[cur.size()] += 1;
        bool extended = false;
        for (size_t i = from; i < cand.size(); ++i) {
            if (!can_add(cand[i])) continue;
            extended = true;
            cur.push_back(cand[i]);
            dfs(i + 1);
            cur.pop_back();
        }
        if (!extended) {
            // no later candidate fits; if no earlier one does either, this
            // nested set is maximal and must have full size
            bool maximal = true;
            for (size_t i = 0; i < from && maximal; ++i)
                if (std::find(cur.begin(), cur.end(), cand[i]) == cur.end() && can_add(cand[i]))
                    maximal = false;
            if (maximal && static_cast<int>(cur.size()) != d)
                throw cross_check_error("nested_complex_fvector: maximal nested set of size " +
                                        std::to_string(cur.size()) + ", expected " +
                                        std::to_string(d));
        }
    }
};

}  // namespace

FVector nested_complex_fvector(const BuildingSet& b, std::size_t cap) {
    FaceEnum fe;
    fe.b = &b;
    fe.cap = cap;
    fe.d = b.ground_size() - static_cast<int>(b.maximal_members().size());
    for (Mask m : b.members()) {
        bool maximal = false;
        for (Mask mx : b.maximal_members()) maximal |= (m == mx);
        if (!maximal) fe.cand.push_back(m);
    }
    fe.dfs(0);
    FVector fv;
    fv.d = fe.d;
    fv.f.c.assign(fe.d + 1, 0);
    for (size_t s = 0; s < fe.counts.size(); ++s) fv.f.c[fe.d - s] = Int(fe.counts[s]);
    fv.f.normalize();
    return fv;
}

namespace {

struct PartialTree {
    int root = 0;
    std::vector<std::pair<int, int>> edges;  // (child, parent)
};

void gen_trees(const BuildingSet& sub, std::size_t cap, std::size_t& made,
               std::vector<PartialTree>& out) {
    Mask g = sub.ground();
    for (Mask gm = g; gm;) {
        int i = lowest_element(gm);
        gm &= gm - 1;
        if (g == bit_of(i)) {
            if (++made > cap) throw resource_cap_error("enumerate_b_trees: cap exceeded");
            out.push_back({i, {}});
            continue;
        }
        BuildingSet rest = restriction(sub, g & ~bit_of(i));
        std::vector<std::vector<PartialTree>> comp_trees;
        for (const BuildingSet& comp : connected_components(rest)) {
            comp_trees.emplace_back();
            std::size_t inner = 0;
            gen_trees(comp, cap, inner, comp_trees.back());
        }
        // cartesian product over component choices
        std::vector<size_t> idx(comp_trees.size(), 0);
        while (true) {
            if (++made > cap) throw resource_cap_error("enumerate_b_trees: cap exceeded");
            PartialTree t;
            t.root = i;
            for (size_t c = 0; c < comp_trees.size(); ++c) {
                const PartialTree& sub_t = comp_trees[c][idx[c]];
                t.edges.insert(t.edges.end(), sub_t.edges.begin(), sub_t.edges.end());
                t.edges.emplace_back(sub_t.root, i);
            }
            out.push_back(std::move(t));
            size_t c = 0;
            while (c < idx.size() && ++idx[c] == comp_trees[c].size()) idx[c++] = 0;
            if (c == idx.size()) break;
        }
    }
}

}  // namespace

std::vector<BTree> enumerate_b_trees(const BuildingSet& b, std::size_t cap) {
    if (!b.is_connected()) throw invalid_input_error("enumerate_b_trees: building not connected");
    std::vector<PartialTree> parts;
    std::size_t made = 0;
    gen_trees(b, cap, made, parts);
    int n = highest_element(b.ground());
    std::vector<BTree> out;
    out.reserve(parts.size());
    for (const PartialTree& p : parts) {
        std::vector<int> parent(n, 0);
        for (auto [c, pa] : p.edges) parent[c - 1] = pa;
        out.push_back(make_b_tree(n, parent));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_b_tree(const BuildingSet& b, const BTree& t) {
    if (full_mask(t.n) != b.ground() || !b.is_connected()) return false;
    std::vector<Mask> nonroot;
    for (int v = 1; v <= t.n; ++v) {
        if (!b.is_member(t.below[v - 1])) return false;
        if (v != t.root) nonroot.push_back(t.below[v - 1]);
    }
    return is_nested(b, nonroot).nested;
}

namespace {

void psi_rec(const BuildingSet& sub, const std::vector<int>& word, std::vector<int>& parent,
             int attach_to) {
    int root = word.back();
    parent[root - 1] = attach_to;
    if (word.size() == 1) return;
    Mask rest_mask = 0;
    for (size_t k = 0; k + 1 < word.size(); ++k) rest_mask |= bit_of(word[k]);
    BuildingSet rest = restriction(sub, rest_mask);
    for (const BuildingSet& comp : connected_components(rest)) {
        std::vector<int> subword;
        for (size_t k = 0; k + 1 < word.size(); ++k)
            if (contains(comp.ground(), word[k])) subword.push_back(word[k]);
        psi_rec(comp, subword, parent, root);
    }
}

}  // namespace

BTree psi_map(const BuildingSet& b, const std::vector<int>& w) {
    if (!b.is_connected()) throw invalid_input_error("psi_map: building not connected");
    int n = b.ground_size();
    if (static_cast<int>(w.size()) != n) throw invalid_input_error("psi_map: word length mismatch");
    Mask seen = 0;
    for (int v : w) {
        if (v < 1 || v > n || contains(seen, v))
            throw invalid_input_error("psi_map: not a permutation");
        seen |= bit_of(v);
    }
    std::vector<int> parent(n, 0);
    psi_rec(b, w, parent, 0);
    return make_b_tree(n, parent);
}

namespace {

void b_perm_dfs(const BuildingSet& b, Mask remaining, std::vector<int>& w, int pos,
                std::vector<std::vector<int>>& out, std::size_t cap) {
    if (remaining == 0) {
        if (out.size() >= cap) throw resource_cap_error("b_permutations: cap exceeded");
        out.push_back(w);
        return;
    }
    BuildingSet rest = restriction(b, remaining);
    int top = highest_element(remaining);
    for (Mask comp : rest.maximal_members()) {
        if (!contains(comp, top)) continue;
        for (Mask cm = comp; cm;) {
            int v = lowest_element(cm);
            cm &= cm - 1;
            w[pos - 1] = v;
            b_perm_dfs(b, remaining & ~bit_of(v), w, pos - 1, out, cap);
        }
        break;
    }
}

}  // namespace

std::vector<std::vector<int>> b_permutations(const BuildingSet& b, std::size_t cap) {
    if (!b.is_connected()) throw invalid_input_error("b_permutations: building not connected");
    int n = b.ground_size();
    std::vector<int> w(n, 0);
    std::vector<std::vector<int>> out;
    b_perm_dfs(b, b.ground(), w, n, out, cap);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> lex_min_extension(const BTree& t) {
    int n = t.n;
    // forward: repeatedly remove the minimal leaf
    std::vector<int> child_count(n, 0);
    for (int v = 1; v <= n; ++v)
        if (v != t.root) child_count[t.parent[v - 1] - 1] += 1;
    Mask alive = full_mask(n);
    std::vector<int> fwd;
    for (int step = 0; step < n; ++step) {
        for (int v = 1; v <= n; ++v)
            if (contains(alive, v) && child_count[v - 1] == 0) {
                fwd.push_back(v);
                alive &= ~bit_of(v);
                if (v != t.root) child_count[t.parent[v - 1] - 1] -= 1;
                break;
            }
    }
    // backward: w(i) is the root of the component of the remaining forest
    // containing the maximal remaining vertex
    std::vector<int> bwd(n, 0);
    Mask remaining = full_mask(n);
    for (int i = n; i >= 1; --i) {
        int m = highest_element(remaining);
        int r = m;
        while (t.parent[r - 1] != 0 && contains(remaining, t.parent[r - 1])) r = t.parent[r - 1];
        bwd[i - 1] = r;
        remaining &= ~bit_of(r);
    }
    if (fwd != bwd)
        throw cross_check_error("lex_min_extension: forward and backward constructions differ");
    return fwd;
}

int permutation_descents(const std::vector<int>& w) {
    int d = 0;
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) ++d;
    return d;
}

IntPoly h_via_descents(const BuildingSet& b, std::size_t cap) {
    if (!b.is_connected()) throw invalid_input_error("h_via_descents: building not connected");
    int n = b.ground_size();
    std::vector<Int> counts(n, 0);
    for (const BTree& t : enumerate_b_trees(b, cap)) counts[t.descents()] += 1;
    IntPoly h{counts};
    if (is_chordal(b).chordal) {
        std::vector<Int> counts2(n, 0);
        for (const auto& w : b_permutations(b, cap)) counts2[permutation_descents(w)] += 1;
        if (IntPoly{counts2} != h)
            throw cross_check_error("h_via_descents: tree and permutation descent counts differ");
    }
    return h;
}

namespace {

using Memo = std::map<std::vector<Mask>, IntPoly>;

IntPoly f_restr(const BuildingSet& sub, Memo& memo);

IntPoly f_restr_connected(const BuildingSet& sub, Memo& memo) {
    Mask g = sub.ground();
    int sz = popcount(g);
    IntPoly f;
    // sum over proper subsets I of the ground, weighted by codimension
    for (Mask i_set = (g - 1) & g;; i_set = (i_set - 1) & g) {
        IntPoly inner = i_set ? f_restr(restriction(sub, i_set), memo) : IntPoly::one();
        f = f + inner * IntPoly::monomial(sz - popcount(i_set) - 1);
        if (i_set == 0) break;
    }
    return f;
}

IntPoly f_restr(const BuildingSet& sub, Memo& memo) {
    auto key = sub.canonical_signature();
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    IntPoly f = IntPoly::one();
    if (sub.is_connected()) {
        f = f_restr_connected(sub, memo);
    } else {
        for (const BuildingSet& comp : connected_components(sub)) f = f * f_restr(comp, memo);
    }
    memo[key] = f;
    return f;
}

// reversed f-polynomial, with constant term 1, by the derivative identity
IntPoly f_tilde(const BuildingSet& sub, Memo& memo) {
    auto key = sub.canonical_signature();
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    IntPoly rhs;
    for (Mask m : sub.members()) {
        bool maximal = false;
        for (Mask mx : sub.maximal_members()) maximal |= (m == mx);
        if (maximal) continue;
        rhs = rhs + f_tilde(restriction(sub, m), memo) * f_tilde(contraction(sub, m), memo);
    }
    IntPoly ft;
    ft.c.assign(rhs.degree() + 2, 0);
    ft.c[0] = 1;
    for (int k = 0; k <= rhs.degree(); ++k) {
        Int q, r;
        mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), rhs.c[k].get_mpz_t(), k + 1);
        if (r != 0)
            throw cross_check_error("f_recurrence_contraction: non-integral coefficient");
        ft.c[k + 1] = q;
    }
    ft.normalize();
    memo[key] = ft;
    return ft;
}

}  // namespace

IntPoly f_recurrence_restriction(const BuildingSet& b) {
    Memo memo;
    return f_restr(b, memo);
}

IntPoly f_recurrence_contraction(const BuildingSet& b) {
    Memo memo;
    IntPoly ft = f_tilde(b, memo);
    int d = b.ground_size() - static_cast<int>(b.maximal_members().size());
    if (ft.degree() > d)
        throw cross_check_error("f_recurrence_contraction: degree exceeds dimension");
    return ft.reverse(d);
}

}  // namespace nesto
