#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nesto/mask.hpp"
#include "nesto/poly.hpp"

namespace nesto {

// Reflexive transitive relation on 1..n, stored as bit-matrix rows.
// Construction closes the generating relations transitively.
class Preposet {
  public:
    Preposet(int n, const std::vector<std::pair<int, int>>& relations);

    int n() const { return n_; }
    bool relates(int i, int j) const { return contains(rows_[i - 1], j); }
    bool equivalent(int i, int j) const { return relates(i, j) && relates(j, i); }
    const std::vector<Mask>& rows() const { return rows_; }

    // classes of the mutual-relation equivalence, ordered by lowest element
    std::vector<Mask> equivalence_classes() const;
    bool is_poset() const;
    // comparability graph connected
    bool is_connected() const;

    bool operator==(const Preposet& o) const { return n_ == o.n_ && rows_ == o.rows_; }
    bool operator!=(const Preposet& o) const { return !(*this == o); }

  private:
    int n_;
    std::vector<Mask> rows_;
};

Preposet transitive_closure(int n, const std::vector<std::pair<int, int>>& relations);
Preposet closure_union(const Preposet& a, const Preposet& b);

// Q arises from P by reversing some subset R of P's relations and closing,
// i.e. Q = closure(P + R^op) for some R inside P
bool is_contraction(const Preposet& q, const Preposet& p);

// closure of the union is a contraction of both arguments
bool properly_intersect(const Preposet& a, const Preposet& b);

// all orderings w(1),...,w(n) compatible with the poset, in lexicographic
// order of the word; throws resource_cap_error past `cap` extensions
std::vector<std::vector<int>> linear_extensions(const Preposet& q, size_t cap = 1000000);

// covering relations (transitive reduction), lex order; requires a poset
std::vector<std::pair<int, int>> covers(const Preposet& q);

// Hasse diagram is a spanning tree
bool is_tree_poset(const Preposet& q);

struct DescentInfo {
    std::vector<std::pair<int, int>> pairs;  // covers (i,j) with i > j as integers
    int count = 0;
};
DescentInfo poset_descents(const Preposet& q);

// image poset under the permutation w (element i becomes w[i-1])
Preposet relabel(const Preposet& q, const std::vector<int>& w);

// sum of t^{descents} over all n! relabellings of a tree-poset; capped ground size
IntPoly generalized_eulerian(const Preposet& q, int n_cap = 9);

enum class FanStatus { ok, duplicate, not_poset, improper, overlap, gap };

struct FanResult {
    bool complete = false;
    FanStatus status = FanStatus::ok;
    std::string reason;
    // indices into the input list for duplicate/improper/overlap witnesses
    std::vector<size_t> poset_witness;
    // uncovered or doubly covered permutation
    std::vector<int> perm_witness;
};

// distinct posets, pairwise proper intersection, linear extension sets
// partition all n! orderings
FanResult is_complete_fan(const std::vector<Preposet>& fan);

// sum of t^{des(Q)} over a verified complete fan of tree-posets
IntPoly h_of_poset_fan(const std::vector<Preposet>& fan);

}  // namespace nesto
