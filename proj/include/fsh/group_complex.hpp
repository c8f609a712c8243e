#pragma once

#include <functional>
#include <map>
#include <vector>

#include "fsh/group.hpp"

namespace fsh {

// Bounded cochain complex of finitely generated abelian groups (degree +1
// differentials). Homological complexes are stored via F^{-n} = F_n.
class GroupComplex {
public:
    GroupComplex() : lo_(0), hi_(-1) {}
    GroupComplex(int lo, std::vector<FgAbGroup> terms, std::vector<GroupHom> diffs, bool validate = true);

    static GroupComplex single(const FgAbGroup& g, int degree);
    static GroupComplex zero_complex() { return GroupComplex(); }

    bool empty() const { return lo_ > hi_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }

    const FgAbGroup& term(int i) const;  // zero group outside bounds
    GroupHom diff(int i) const;          // zero hom outside bounds

    bool is_zero() const;
    std::string to_string() const;

private:
    int lo_, hi_;
    std::vector<FgAbGroup> terms_;
    std::vector<GroupHom> diffs_;
    static const FgAbGroup zero_group_;
};

// ker(d^i)/im(d^{i-1}) together with the generator lift: column j of `lift`
// is a cycle in term i representing homology generator j. Lifts come from
// the deterministic SNF kernel basis, so induced-map matrices reproduce.
struct HomologySlot {
    FgAbGroup group;
    IntMatrix lift;
};

FgAbGroup complex_homology(const GroupComplex& c, int degree);
HomologySlot homology_slot(const GroupComplex& c, int degree);
bool complex_is_exact(const GroupComplex& c);

// All nonzero homology invariants on [lo, hi] as a degree-indexed map.
std::map<int, GroupInvariants> homology_table(const GroupComplex& c);

// Chain map between group complexes; commutation with differentials is
// checked modulo target relations.
class ChainMap {
public:
    ChainMap(GroupComplex source, GroupComplex target, std::map<int, IntMatrix> maps, bool validate = true);

    static ChainMap identity(const GroupComplex& c);

    const GroupComplex& source() const { return src_; }
    const GroupComplex& target() const { return tgt_; }
    GroupHom map(int i) const;  // zero hom outside

    ChainMap compose(const ChainMap& inner) const;

private:
    GroupComplex src_, tgt_;
    std::map<int, IntMatrix> maps_;
};

GroupHom induced_map_on_homology(const ChainMap& f, int degree);
GroupHom induced_map_on_homology(const ChainMap& f, int degree, const HomologySlot& src_slot,
                                 const HomologySlot& tgt_slot);

GroupComplex shift_complex(const GroupComplex& c, int k);  // shift[k]: term^n = c^{n+k}, d -> (-1)^k d
GroupComplex cone(const ChainMap& f);                      // cone^n = A^{n+1} ⊕ B^n
GroupComplex cocone(const ChainMap& f);                    // cone(f)[-1]
GroupComplex direct_sum(const GroupComplex& a, const GroupComplex& b);

// Inclusion B -> cone(f) and projection cone(f) -> A[1].
ChainMap cone_inclusion(const ChainMap& f, const GroupComplex& cne);
ChainMap cone_projection(const ChainMap& f, const GroupComplex& cne);

// Quasi-isomorphic complex of free groups, built degreewise from the chosen
// free resolutions of the homology groups (bounded complexes of abelian
// groups split as the sum of their cohomologies).
GroupComplex free_model(const GroupComplex& c);

// Hom^n(P, D) = ⊕_i Hom(P^i, D^{i+n}) for P a complex of free groups, with
// the Koszul differential φ -> d∘φ - (-1)^n φ∘d.
GroupComplex hom_complex_free_source(const GroupComplex& p, const GroupComplex& d);

// Derived duals and Homs of group complexes.
GroupComplex dual_group_complex(const GroupComplex& c);               // RHom(c, Z)
GroupComplex rhom_groups(const GroupComplex& c, const GroupComplex& d);
GroupComplex tensor_free_source(const GroupComplex& p, const GroupComplex& d);
GroupComplex derived_tensor_groups(const GroupComplex& c, const GroupComplex& d);

}  // namespace fsh
