#include "nesto/gamma.hpp"

#include <algorithm>

#include "nesto/nested.hpp"

namespace nesto {

namespace {

int entry_at(const std::vector<int>& w, int pos) {  // 1-based, 0 outside
    if (pos < 1 || pos > static_cast<int>(w.size())) return 0;
    return w[pos - 1];
}

}  // namespace

std::vector<int> PeakDecomposition::peak_valley_sequence() const {
    std::vector<int> seq;
    for (int v : w)
        if (contains(peaks, v) || contains(valleys, v)) seq.push_back(v);
    return seq;
}

PeakDecomposition peak_decompose(const std::vector<int>& w) {
    int n = static_cast<int>(w.size());
    PeakDecomposition d;
    d.w = w;
    for (int i = 1; i <= n; ++i) {
        int prev = entry_at(w, i - 1), cur = w[i - 1], next = entry_at(w, i + 1);
        if (prev < cur && cur > next) {
            d.peaks |= bit_of(cur);
            ++d.peak_count;
        } else if (prev > cur && cur < next) {
            d.valleys |= bit_of(cur);
        } else if (prev < cur && cur < next) {
            d.ascent_intermediary |= bit_of(cur);
        } else {
            d.descent_intermediary |= bit_of(cur);
        }
        if (i < n && cur > next) ++d.descent_count;
    }
    return d;
}

std::vector<int> leap(const std::vector<int>& w, int a, int r) {
    PeakDecomposition d = peak_decompose(w);
    if (!contains(d.ascent_intermediary | d.descent_intermediary, a))
        throw invalid_input_error("leap: entry is not intermediary");
    std::vector<int> v = w;
    int n = static_cast<int>(v.size());
    for (int step = 0; step < std::abs(r); ++step) {
        int i = static_cast<int>(std::find(v.begin(), v.end(), a) - v.begin()) + 1;
        bool moved = false;
        if (r > 0) {
            for (int j = i + 1; j <= n; ++j) {
                int lo = entry_at(v, j), hi = entry_at(v, j + 1);
                if ((lo < a && a < hi) || (lo > a && a > hi)) {
                    v.erase(v.begin() + (i - 1));
                    v.insert(v.begin() + (j - 1), a);  // right after the old w(j)
                    moved = true;
                    break;
                }
            }
        } else {
            for (int k = i - 2; k >= 0; --k) {
                int lo = entry_at(v, k), hi = entry_at(v, k + 1);
                if ((lo < a && a < hi) || (lo > a && a > hi)) {
                    v.erase(v.begin() + (i - 1));
                    v.insert(v.begin() + k, a);  // right after the old w(k)
                    moved = true;
                    break;
                }
            }
        }
        if (!moved) throw leap_undefined_error("leap: no slope left in that direction");
    }
    return v;
}

std::vector<int> hop(const std::vector<int>& w, int a) {
    PeakDecomposition d = peak_decompose(w);
    if (contains(d.ascent_intermediary, a)) return leap(w, a, 1);
    if (contains(d.descent_intermediary, a)) return leap(w, a, -1);
    throw invalid_input_error("hop: entry is not intermediary");
}

bool is_b_permutation(const BuildingSet& b, const std::vector<int>& w) {
    int n = b.ground_size();
    if (static_cast<int>(w.size()) != n) return false;
    Mask prefix = 0;
    int mx = 0;
    for (int v : w) {
        if (v < 1 || v > n || contains(prefix, v)) return false;
        prefix |= bit_of(v);
        mx = std::max(mx, v);
        BuildingSet rest = restriction(b, prefix);
        bool ok = false;
        for (Mask comp : rest.maximal_members())
            if (contains(comp, v) && contains(comp, mx)) ok = true;
        if (!ok) return false;
    }
    return true;
}

std::vector<int> b_hop(const BuildingSet& b, const std::vector<int>& w, int a) {
    if (!b.is_connected() || !is_chordal(b).chordal)
        throw invalid_input_error("b_hop: building must be connected and suffix-closed");
    if (!is_b_permutation(b, w))
        throw invalid_input_error("b_hop: not a distinguished permutation");
    PeakDecomposition d = peak_decompose(w);
    int dir;
    if (contains(d.ascent_intermediary, a)) {
        dir = 1;
    } else if (contains(d.descent_intermediary, a)) {
        dir = -1;
    } else {
        throw invalid_input_error("b_hop: entry is not intermediary");
    }
    // the smallest odd leap in the prescribed direction works; even leaps
    // keep the entry on the same slope type and can be skipped
    for (int r = dir;; r += 2 * dir) {
        std::vector<int> u = leap(w, a, r);
        if (is_b_permutation(b, u)) return u;
    }
}

IntPoly gamma_chordal(const BuildingSet& b, std::size_t cap) {
    if (!b.is_connected()) throw invalid_input_error("gamma_chordal: building not connected");
    if (!is_chordal(b).chordal)
        throw invalid_input_error("gamma_chordal: building not suffix-closed");
    int n = b.ground_size();
    std::vector<Int> counts(n / 2 + 1, 0);
    for (const auto& w : b_permutations(b, cap)) {
        PeakDecomposition d = peak_decompose(w);
        if (d.no_descent_intermediary()) counts[d.peak_count - 1] += 1;
    }
    IntPoly g{counts};
    GammaVector gv = gamma_from_h(h_via_descents(b, cap), n - 1);
    if (gv.poly() != g)
        throw cross_check_error("gamma_chordal: peak count disagrees with the h expansion");
    return g;
}

}  // namespace nesto
