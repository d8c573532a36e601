#include "nesto/building.hpp"

#include <algorithm>
#include <set>

namespace nesto {

BuildingSet::BuildingSet(std::vector<Mask> members, Mask ground) : ground_(ground) {
    if (ground == 0) throw invalid_input_error("building: empty ground set");
    std::sort(members.begin(), members.end(), canonical_less);
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (Mask m : members) {
        if (m == 0) throw invalid_input_error("building: empty member");
        if (m & ~ground)
            throw invalid_input_error("building: member " + mask_to_string(m) +
                                      " leaves the ground set " + mask_to_string(ground));
    }
    // (B2): every singleton present
    for (Mask g = ground; g;) {
        int e = lowest_element(g);
        g &= g - 1;
        if (!std::binary_search(members.begin(), members.end(), bit_of(e), canonical_less))
            throw invalid_input_error("building: missing singleton {" + std::to_string(e) + "}");
    }
    // (B1): union of intersecting members is a member
    for (size_t i = 0; i < members.size(); ++i)
        for (size_t j = i + 1; j < members.size(); ++j) {
            if ((members[i] & members[j]) == 0) continue;
            Mask u = members[i] | members[j];
            if (!std::binary_search(members.begin(), members.end(), u, canonical_less))
                throw invalid_input_error("building: union of intersecting members " +
                                          mask_to_string(members[i]) + " and " +
                                          mask_to_string(members[j]) + " is missing");
        }
    members_ = std::move(members);
    // maximal members; (B1)+(B2) make them a partition of the ground set
    Mask covered = 0;
    for (Mask m : members_) {
        bool maximal = true;
        for (Mask other : members_)
            if (other != m && (other & m) == m) {
                maximal = false;
                break;
            }
        if (maximal) {
            b_max_.push_back(m);
            covered |= m;
        }
    }
    std::sort(b_max_.begin(), b_max_.end(), canonical_less);
}

bool BuildingSet::is_member(Mask m) const {
    return std::binary_search(members_.begin(), members_.end(), m, canonical_less);
}

std::vector<Mask> BuildingSet::canonical_signature() const {
    auto elems = elements_of(ground_);
    std::vector<int> newpos(65, 0);
    for (size_t k = 0; k < elems.size(); ++k) newpos[elems[k]] = static_cast<int>(k);
    std::vector<Mask> sig;
    sig.reserve(members_.size());
    for (Mask m : members_) {
        Mask r = 0;
        for (Mask x = m; x;) {
            int e = lowest_element(x);
            x &= x - 1;
            r |= Mask(1) << newpos[e];
        }
        sig.push_back(r);
    }
    std::sort(sig.begin(), sig.end(), canonical_less);
    return sig;
}

BuildingSet validate_building(const std::vector<Mask>& members, int n) {
    if (n < 1 || n > 64) throw invalid_input_error("building: ground size out of range");
    return BuildingSet(members, full_mask(n));
}

BuildingSet graphical_building(const Graph& g) {
    if (g.n < 1) throw invalid_input_error("graphical_building: empty graph");
    if (g.n > 24) throw resource_cap_error("graphical_building: node count too large to enumerate");
    std::vector<Mask> members;
    for (Mask m = 1; m <= full_mask(g.n); ++m)
        if (g.is_connected_subset(m)) members.push_back(m);
    return BuildingSet(std::move(members), full_mask(g.n));
}

BuildingSet restriction(const BuildingSet& b, Mask i_set) {
    if (i_set == 0) throw invalid_input_error("restriction: empty subset");
    if (i_set & ~b.ground()) throw invalid_input_error("restriction: subset leaves the ground set");
    std::vector<Mask> members;
    for (Mask m : b.members())
        if ((m & ~i_set) == 0) members.push_back(m);
    return BuildingSet(std::move(members), i_set);
}

BuildingSet contraction(const BuildingSet& b, Mask i_set) {
    if (!b.is_member(i_set))
        throw invalid_input_error("contraction: " + mask_to_string(i_set) + " is not a member");
    Mask rest = b.ground() & ~i_set;
    if (rest == 0) throw invalid_input_error("contraction: nothing left of the ground set");
    // {J in ground\I : J in B or J+I in B} = {M\I nonempty : M in B}: the
    // definition's J with J in B appear as M disjoint from I, the J with
    // J+I in B appear as M = J+I, and any other M\I is recovered through
    // the member M+I supplied by union closure
    std::vector<Mask> members;
    for (Mask m : b.members())
        if (Mask j = m & ~i_set) members.push_back(j);
    return BuildingSet(std::move(members), rest);
}

std::vector<BuildingSet> connected_components(const BuildingSet& b) {
    std::vector<BuildingSet> out;
    for (Mask m : b.maximal_members()) out.push_back(restriction(b, m));
    return out;
}

ChordalResult is_chordal(const BuildingSet& b) {
    for (Mask m : b.members()) {
        for (Mask s = m; s;) {
            // strip the lowest element: next proper suffix
            s &= s - 1;
            if (s && !b.is_member(s)) return {false, ChordalWitness{m, s}};
        }
    }
    return {true, std::nullopt};
}

namespace {

struct FlagSearch {
    const BuildingSet* b;
    std::vector<Mask> parts;
    std::vector<Mask> witness;

    // does some subfamily split into two groups with both unions in B?
    bool splits() const {
        int l = static_cast<int>(parts.size());
        for (unsigned sel = 1; sel + 1 < (1u << l); ++sel) {
            Mask u1 = 0, u2 = 0;
            for (int i = 0; i < l; ++i)
                ((sel >> i) & 1 ? u1 : u2) |= parts[i];
            if (b->is_member(u1) && b->is_member(u2)) return true;
        }
        return false;
    }

    // partitions of `rest` into members pairwise union-free with the current
    // parts; a minimal flag violation always has this shape
    bool search(Mask rest) {
        if (!witness.empty()) return true;
        if (rest == 0) {
            if (parts.size() >= 3 && !splits()) {
                witness = parts;
                return true;
            }
            return false;
        }
        int e = lowest_element(rest);
        for (Mask m : b->members()) {
            if (!contains(m, e) || (m & ~rest)) continue;
            bool union_free = true;
            for (Mask p : parts)
                if (b->is_member(p | m)) {
                    union_free = false;
                    break;
                }
            if (!union_free) continue;
            parts.push_back(m);
            if (search(rest & ~m)) return true;
            parts.pop_back();
        }
        return false;
    }
};

}  // namespace

FlagResult is_flag(const BuildingSet& b) {
    FlagSearch fs;
    fs.b = &b;
    for (Mask u : b.members()) {
        if (popcount(u) < 3) continue;
        fs.parts.clear();
        if (fs.search(u)) return {false, fs.witness};
    }
    return {true, {}};
}

BuildingSet building_closure(const std::vector<Mask>& seeds, int n) {
    std::set<Mask> fam;
    for (int e = 1; e <= n; ++e) fam.insert(bit_of(e));
    for (Mask m : seeds)
        if (m) fam.insert(m & full_mask(n));
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Mask> cur(fam.begin(), fam.end());
        for (size_t i = 0; i < cur.size() && !changed; ++i)
            for (size_t j = i + 1; j < cur.size() && !changed; ++j)
                if ((cur[i] & cur[j]) && !fam.count(cur[i] | cur[j])) {
                    fam.insert(cur[i] | cur[j]);
                    changed = true;
                }
    }
    return BuildingSet(std::vector<Mask>(fam.begin(), fam.end()), full_mask(n));
}

BuildingSet chordal_closure(const BuildingSet& b) {
    std::set<Mask> fam(b.members().begin(), b.members().end());
    int n = highest_element(b.ground());
    bool grew = true;
    while (grew) {
        grew = false;
        // add missing suffixes
        std::vector<Mask> cur(fam.begin(), fam.end());
        for (Mask m : cur)
            for (Mask s = m; s;) {
                s &= s - 1;
                if (s && !fam.count(s)) {
                    fam.insert(s);
                    grew = true;
                }
            }
        // restore union closure
        cur.assign(fam.begin(), fam.end());
        for (size_t i = 0; i < cur.size(); ++i)
            for (size_t j = i + 1; j < cur.size(); ++j)
                if ((cur[i] & cur[j]) && !fam.count(cur[i] | cur[j])) {
                    fam.insert(cur[i] | cur[j]);
                    grew = true;
                }
    }
    return BuildingSet(std::vector<Mask>(fam.begin(), fam.end()), b.ground());
}

}  // namespace nesto
