#pragma once

#include <vector>

#include "nesto/building.hpp"
#include "nesto/poly.hpp"

namespace nesto {

// leap past the end of its defined range
struct leap_undefined_error : invalid_input_error {
    using invalid_input_error::invalid_input_error;
};

// Classification of every entry of w under the convention w(0) = w(n+1) = 0.
// Sets are stored as masks of entry values, not positions.
struct PeakDecomposition {
    std::vector<int> w;
    Mask peaks = 0;
    Mask valleys = 0;
    Mask ascent_intermediary = 0;
    Mask descent_intermediary = 0;
    int peak_count = 0;
    int descent_count = 0;

    // no final or double descent, i.e. no descent-intermediary entry
    bool no_descent_intermediary() const { return descent_intermediary == 0; }
    // peaks and valleys of w in word order
    std::vector<int> peak_valley_sequence() const;
};

PeakDecomposition peak_decompose(const std::vector<int>& w);

// move the intermediary entry a across |r| slopes, rightward for r > 0,
// leftward for r < 0; throws leap_undefined_error past the range
std::vector<int> leap(const std::vector<int>& w, int a, int r);

// single leap away from the current slope: rightward for an
// ascent-intermediary entry, leftward for a descent-intermediary one
std::vector<int> hop(const std::vector<int>& w, int a);

// membership test for the distinguished permutations of a connected building
bool is_b_permutation(const BuildingSet& b, const std::vector<int>& w);

// smallest odd leap of a that lands on a distinguished permutation again;
// requires a suffix-closed connected building
std::vector<int> b_hop(const BuildingSet& b, const std::vector<int>& w, int a);

// gamma polynomial as the peak generating function over distinguished
// permutations without descent-intermediary entries; cross-checked against
// the change of basis from the descent generating function
IntPoly gamma_chordal(const BuildingSet& b, std::size_t cap = 1000000);

}  // namespace nesto
