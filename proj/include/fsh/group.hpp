#pragma once

#include <string>
#include <vector>

#include "fsh/smith.hpp"

namespace fsh {

// Complete isomorphism invariant of a finitely generated abelian group:
// free rank plus the invariant-factor chain (each entry > 1, d_i | d_{i+1}).
struct GroupInvariants {
    int free_rank = 0;
    std::vector<Int> torsion;

    bool operator==(const GroupInvariants& o) const = default;
    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    std::string to_string() const;
};

// Finitely generated abelian group presented as Z^gens / (column lattice of
// rels). Groups are presentations, not canonical forms: maps are tracked on
// generators, equality of groups means equality of invariants.
class FgAbGroup {
public:
    FgAbGroup() : gens_(0), rels_(0, 0) { compute_invariants(); }
    explicit FgAbGroup(int gens) : gens_(gens), rels_(gens, 0) { compute_invariants(); }
    FgAbGroup(int gens, IntMatrix rels);

    static FgAbGroup zero() { return FgAbGroup(0); }
    static FgAbGroup free_group(int rank) { return FgAbGroup(rank); }
    static FgAbGroup cyclic(const Int& n);  // Z/n (n = 0 gives Z)
    static FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b);

    int gens() const { return gens_; }
    const IntMatrix& rels() const { return rels_; }
    const GroupInvariants& invariants() const { return inv_; }
    bool is_trivial() const { return inv_.is_trivial(); }
    bool isomorphic(const FgAbGroup& o) const { return inv_ == o.inv_; }

    // True if v lies in the relation lattice, i.e. represents 0.
    bool is_zero_element(const std::vector<Int>& v) const;

    std::string to_string() const { return inv_.to_string(); }

private:
    int gens_;
    IntMatrix rels_;
    GroupInvariants inv_;

    void compute_invariants();
};

// Homomorphism between presented groups, acting on generators: column j of
// `matrix` is the image of source generator j. Construction checks that the
// source relations map into the target relation lattice.
class GroupHom {
public:
    GroupHom() = default;
    GroupHom(FgAbGroup source, FgAbGroup target, IntMatrix matrix);

    static GroupHom zero(const FgAbGroup& source, const FgAbGroup& target);
    static GroupHom identity(const FgAbGroup& g);

    const FgAbGroup& source() const { return src_; }
    const FgAbGroup& target() const { return tgt_; }
    const IntMatrix& matrix() const { return m_; }

    GroupHom compose(const GroupHom& inner) const;  // this ∘ inner
    GroupHom operator+(const GroupHom& o) const;
    GroupHom operator-(const GroupHom& o) const;
    GroupHom negated() const;
    bool equals(const GroupHom& o) const;  // equality as maps (mod target relations)
    bool is_zero() const;
    bool is_isomorphism() const;

    // Inverse of an isomorphism (throws if not one).
    GroupHom inverse() const;

    std::vector<Int> apply(const std::vector<Int>& v) const { return mat_vec(m_, v); }

private:
    FgAbGroup src_, tgt_;
    IntMatrix m_;
};

// Subquotient presentations with their structure maps.
struct SubquotientGroup {
    FgAbGroup group;
    GroupHom to_ambient;    // kernel/image: inclusion into the ambient group
    GroupHom from_ambient;  // cokernel/image: projection from the ambient group
};

SubquotientGroup hom_kernel(const GroupHom& h);    // to_ambient: ker -> source
SubquotientGroup hom_image(const GroupHom& h);     // to_ambient: im -> target, from_ambient: source -> im
SubquotientGroup hom_cokernel(const GroupHom& h);  // from_ambient: target -> coker

FgAbGroup tensor_group(const FgAbGroup& a, const FgAbGroup& b);
GroupHom tensor_hom(const GroupHom& f, const GroupHom& g);

// Hom(A, B) as a presented group. Each generator is a homomorphism; the
// embedding records it as a column-major vectorized (B.gens x A.gens) matrix.
struct HomGroup {
    FgAbGroup group;
    IntMatrix embedding;  // (B.gens * A.gens) x group.gens
    int a_gens = 0, b_gens = 0;

    // The homomorphism represented by coordinates `coords` on group.gens.
    IntMatrix element_matrix(const std::vector<Int>& coords) const;
};

HomGroup hom_group_of_groups(const FgAbGroup& a, const FgAbGroup& b);

// Coordinates in `target_hom` of the element with vectorized matrix `w`
// (throws if w is not a valid homomorphism coordinate vector).
std::vector<Int> express_in_hom_group(const HomGroup& target_hom, const FgAbGroup& b, const std::vector<Int>& w);

// Product group Π g_i as a presentation, with generator offsets.
struct ProductGroup {
    FgAbGroup group;
    std::vector<int> offsets;  // offsets[i] = first generator index of factor i
    GroupHom projection(const std::vector<FgAbGroup>& factors, int i) const;
    GroupHom inclusion(const std::vector<FgAbGroup>& factors, int i) const;
};

ProductGroup product_group(const std::vector<FgAbGroup>& factors);

}  // namespace fsh
