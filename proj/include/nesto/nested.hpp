#pragma once

#include <cstddef>
#include <vector>

#include "nesto/building.hpp"
#include "nesto/poly.hpp"

namespace nesto {

// Rooted tree on 1..n with cached descendant masks.
struct BTree {
    int n = 0;
    int root = 0;
    std::vector<int> parent;  // parent[i-1], 0 at the root
    std::vector<Mask> below;  // below[i-1] = descendants of i, including i

    int descents() const {
        int d = 0;
        for (int v = 1; v <= n; ++v)
            if (v != root && v > parent[v - 1]) ++d;
        return d;
    }
    bool operator==(const BTree& o) const { return parent == o.parent; }
    bool operator<(const BTree& o) const {
        if (root != o.root) return root < o.root;
        return parent < o.parent;
    }
};

// computes root and descendant masks; validates that parent describes a tree
BTree make_b_tree(int n, const std::vector<int>& parent);

struct NestedResult {
    bool nested = true;
    std::string reason;
    std::vector<Mask> witness;  // offending pair or disjoint family
};

// members must lie in B minus its maximal members; checks that any two are
// nested or disjoint and that no union of >= 2 pairwise-disjoint members is
// a member.  With flag_known true the disjoint-union check is pairwise only.
NestedResult is_nested(const BuildingSet& b, const std::vector<Mask>& members,
                       bool flag_known = false);

struct FVector {
    IntPoly f;
    int d = 0;  // dimension, ground size minus number of maximal members
};

// face counts of the complex of nested sets, by depth-first enumeration
FVector nested_complex_fvector(const BuildingSet& b, std::size_t cap = 10000000);

// all trees satisfying the descendant conditions, sorted by (root, parent)
std::vector<BTree> enumerate_b_trees(const BuildingSet& b, std::size_t cap = 1000000);

// validity check used as a test oracle
bool is_b_tree(const BuildingSet& b, const BTree& t);

// the tree whose fiber under the vertex surjection contains w
BTree psi_map(const BuildingSet& b, const std::vector<int>& w);

// permutations w such that w(i) and max(w(1..i)) always share a connected
// component of the restriction to {w(1..i)}; sorted lexicographically
std::vector<std::vector<int>> b_permutations(const BuildingSet& b, std::size_t cap = 1000000);

// lexicographically minimal linear extension; the forward (minimal leaf) and
// backward (root-first) constructions are both run and must agree
std::vector<int> lex_min_extension(const BTree& t);

int permutation_descents(const std::vector<int>& w);

// sum of t^{descents} over the trees; for suffix-closed buildings the same
// statistic over the distinguished permutations is cross-checked
IntPoly h_via_descents(const BuildingSet& b, std::size_t cap = 1000000);

// f-polynomial via the restriction recurrence (sum over proper subsets)
IntPoly f_recurrence_restriction(const BuildingSet& b);

// f-polynomial via the derivative recurrence over member contractions
IntPoly f_recurrence_contraction(const BuildingSet& b);

}  // namespace nesto
