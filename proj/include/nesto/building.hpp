#pragma once

#include <optional>
#include <vector>

#include "nesto/graph.hpp"
#include "nesto/mask.hpp"

namespace nesto {

// Family of nonempty subsets of a ground mask containing all singletons and
// closed under unions of intersecting members.  Members are kept sorted in the
// canonical (popcount, mask) order; construction validates the axioms.
class BuildingSet {
  public:
    // throws invalid_input_error naming the violated axiom and a witness
    BuildingSet(std::vector<Mask> members, Mask ground);

    Mask ground() const { return ground_; }
    int ground_size() const { return popcount(ground_); }
    const std::vector<Mask>& members() const { return members_; }
    const std::vector<Mask>& maximal_members() const { return b_max_; }
    bool is_member(Mask m) const;
    bool is_connected() const { return b_max_.size() == 1; }

    bool operator==(const BuildingSet& o) const {
        return ground_ == o.ground_ && members_ == o.members_;
    }

    // members re-indexed to ground 0..k-1 by increasing original label;
    // isomorphic sub-buildings on different grounds share this key
    std::vector<Mask> canonical_signature() const;

  private:
    Mask ground_;
    std::vector<Mask> members_;
    std::vector<Mask> b_max_;
};

BuildingSet validate_building(const std::vector<Mask>& members, int n);

// members are exactly the connected node subsets of g
BuildingSet graphical_building(const Graph& g);

// B|_I = {J in B : J subset of I}, a building set on ground I
BuildingSet restriction(const BuildingSet& b, Mask i_set);

// B/I = {J in ground\I : J in B or J+I in B}, requires I in B
BuildingSet contraction(const BuildingSet& b, Mask i_set);

// restrictions to the maximal members; grounds partition the ground set
std::vector<BuildingSet> connected_components(const BuildingSet& b);

struct ChordalWitness {
    Mask member = 0;  // member whose suffix is missing
    Mask suffix = 0;
};
struct ChordalResult {
    bool chordal = true;
    std::optional<ChordalWitness> witness;
};
// every suffix {i_s,...,i_r} of every member {i_1<...<i_r} is a member
ChordalResult is_chordal(const BuildingSet& b);

struct FlagResult {
    bool flag = true;
    // on failure: pairwise-disjoint members whose union is a member but which
    // admit no split into two member unions
    std::vector<Mask> witness;
};
FlagResult is_flag(const BuildingSet& b);

// smallest building set containing the given subsets (union closure plus
// singletons); utility for random-building generation
BuildingSet building_closure(const std::vector<Mask>& seeds, int n);
// smallest chordal building set containing b
BuildingSet chordal_closure(const BuildingSet& b);

}  // namespace nesto
