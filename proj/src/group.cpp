#include "fsh/group.hpp"

#include <sstream>
#include <stdexcept>

namespace fsh {

std::string GroupInvariants::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank == 1) {
        os << "Z";
        first = false;
    } else if (free_rank > 1) {
        os << "Z^" << free_rank;
        first = false;
    }
    for (const Int& d : torsion) {
        if (!first) os << " + ";
        os << "Z/" << d;
        first = false;
    }
    return os.str();
}

FgAbGroup::FgAbGroup(int gens, IntMatrix rels) : gens_(gens), rels_(std::move(rels)) {
    if (rels_.rows() != gens_) throw std::invalid_argument("FgAbGroup: relation matrix must have one row per generator");
    compute_invariants();
}

FgAbGroup FgAbGroup::cyclic(const Int& n) {
    IntMatrix r(1, 1);
    r.at(0, 0) = n;
    return FgAbGroup(1, std::move(r));
}

FgAbGroup FgAbGroup::direct_sum(const FgAbGroup& a, const FgAbGroup& b) {
    return FgAbGroup(a.gens_ + b.gens_, IntMatrix::block_diag(a.rels_, b.rels_));
}

void FgAbGroup::compute_invariants() {
    std::vector<Int> d = smith_invariant_factors(rels_);
    inv_.free_rank = gens_ - int(d.size());
    inv_.torsion.clear();
    for (Int& x : d)
        if (x > 1) inv_.torsion.push_back(std::move(x));
}

bool FgAbGroup::is_zero_element(const std::vector<Int>& v) const {
    return solve(rels_, v).has_value();
}

GroupHom::GroupHom(FgAbGroup source, FgAbGroup target, IntMatrix matrix)
    : src_(std::move(source)), tgt_(std::move(target)), m_(std::move(matrix)) {
    if (m_.rows() != tgt_.gens() || m_.cols() != src_.gens())
        throw std::invalid_argument("GroupHom: matrix shape must be target.gens x source.gens");
    if (src_.rels().cols() > 0 && !solve_matrix(tgt_.rels(), m_ * src_.rels()))
        throw std::invalid_argument("GroupHom: not well-defined (source relations escape the target relation lattice)");
}

GroupHom GroupHom::zero(const FgAbGroup& source, const FgAbGroup& target) {
    return GroupHom(source, target, IntMatrix::zero(target.gens(), source.gens()));
}

GroupHom GroupHom::identity(const FgAbGroup& g) { return GroupHom(g, g, IntMatrix::identity(g.gens())); }

GroupHom GroupHom::compose(const GroupHom& inner) const {
    if (inner.tgt_.gens() != src_.gens()) throw std::invalid_argument("GroupHom::compose: shape mismatch");
    return GroupHom(inner.src_, tgt_, m_ * inner.m_);
}

GroupHom GroupHom::operator+(const GroupHom& o) const { return GroupHom(src_, tgt_, m_ + o.m_); }
GroupHom GroupHom::operator-(const GroupHom& o) const { return GroupHom(src_, tgt_, m_ - o.m_); }
GroupHom GroupHom::negated() const { return GroupHom(src_, tgt_, -m_); }

bool GroupHom::equals(const GroupHom& o) const {
    if (m_.rows() != o.m_.rows() || m_.cols() != o.m_.cols()) return false;
    IntMatrix d = m_ - o.m_;
    if (d.is_zero()) return true;
    return solve_matrix(tgt_.rels(), d).has_value();
}

bool GroupHom::is_zero() const {
    if (m_.is_zero()) return true;
    return solve_matrix(tgt_.rels(), m_).has_value();
}

bool GroupHom::is_isomorphism() const {
    return hom_kernel(*this).group.is_trivial() && hom_cokernel(*this).group.is_trivial();
}

GroupHom GroupHom::inverse() const {
    // Solve m * X = I modulo target relations: [m | rels_src']... we need a
    // right inverse on generators: find X with m X ≡ I (mod tgt rels), then X
    // is automatically a two-sided inverse as maps when this is an iso.
    IntMatrix lhs = m_.hstack(tgt_.rels());
    auto sol = solve_matrix(lhs, IntMatrix::identity(tgt_.gens()));
    if (!sol) throw std::invalid_argument("GroupHom::inverse: not an isomorphism");
    IntMatrix x = sol->submatrix_rows(0, src_.gens());
    GroupHom inv(tgt_, src_, std::move(x));
    if (!inv.compose(*this).equals(GroupHom::identity(src_)))
        throw std::invalid_argument("GroupHom::inverse: not an isomorphism");
    return inv;
}

SubquotientGroup hom_kernel(const GroupHom& h) {
    // Lattice of generator vectors landing in the target relation lattice,
    // modulo the source relations.
    IntMatrix k = preimage_lattice(h.matrix(), h.target().rels());
    IntMatrix rels = preimage_lattice(k, h.source().rels());
    FgAbGroup ker(k.cols(), rels);
    SubquotientGroup out;
    out.to_ambient = GroupHom(ker, h.source(), k);
    out.group = std::move(ker);
    return out;
}

SubquotientGroup hom_image(const GroupHom& h) {
    // im h ≃ source / {x : h(x) = 0 in target}.
    IntMatrix k = preimage_lattice(h.matrix(), h.target().rels());
    FgAbGroup im(h.source().gens(), k);
    SubquotientGroup out;
    out.from_ambient = GroupHom(h.source(), im, IntMatrix::identity(h.source().gens()));
    out.to_ambient = GroupHom(im, h.target(), h.matrix());
    out.group = std::move(im);
    return out;
}

SubquotientGroup hom_cokernel(const GroupHom& h) {
    FgAbGroup coker(h.target().gens(), h.matrix().hstack(h.target().rels()));
    SubquotientGroup out;
    out.from_ambient = GroupHom(h.target(), coker, IntMatrix::identity(h.target().gens()));
    out.group = std::move(coker);
    return out;
}

FgAbGroup tensor_group(const FgAbGroup& a, const FgAbGroup& b) {
    // Generators e_i ⊗ f_j in column-major order (j * a.gens fast index: we
    // fix (i,j) -> j + i*b.gens? keep kron convention: index = i*b.gens + j).
    IntMatrix ra = IntMatrix::kronecker(a.rels(), IntMatrix::identity(b.gens()));
    IntMatrix rb = IntMatrix::kronecker(IntMatrix::identity(a.gens()), b.rels());
    return FgAbGroup(a.gens() * b.gens(), ra.hstack(rb));
}

GroupHom tensor_hom(const GroupHom& f, const GroupHom& g) {
    return GroupHom(tensor_group(f.source(), g.source()), tensor_group(f.target(), g.target()),
                    IntMatrix::kronecker(f.matrix(), g.matrix()));
}

IntMatrix HomGroup::element_matrix(const std::vector<Int>& coords) const {
    std::vector<Int> w = mat_vec(embedding, coords);
    IntMatrix m(b_gens, a_gens);
    for (int j = 0; j < a_gens; ++j)
        for (int i = 0; i < b_gens; ++i) m.at(i, j) = w[size_t(j) * b_gens + i];
    return m;
}

HomGroup hom_group_of_groups(const FgAbGroup& a, const FgAbGroup& b) {
    // Valid matrices: vec(Φ) with (R_a^T ⊗ I_b) vec(Φ) in the lattice of
    // I_{#rels_a} ⊗ R_b; maps are identified modulo vec(R_b Λ) = (I_a ⊗ R_b) vec(Λ).
    int ag = a.gens(), bg = b.gens();
    IntMatrix cond = IntMatrix::kronecker(a.rels().transpose(), IntMatrix::identity(bg));
    IntMatrix target_rels = IntMatrix::kronecker(IntMatrix::identity(a.rels().cols()), b.rels());
    IntMatrix valid = preimage_lattice(cond, target_rels);
    IntMatrix modded = IntMatrix::kronecker(IntMatrix::identity(ag), b.rels());
    HomGroup out;
    out.a_gens = ag;
    out.b_gens = bg;
    out.embedding = valid;
    out.group = FgAbGroup(valid.cols(), preimage_lattice(valid, modded));
    return out;
}

std::vector<Int> express_in_hom_group(const HomGroup& target_hom, const FgAbGroup& b, const std::vector<Int>& w) {
    IntMatrix modded = IntMatrix::kronecker(IntMatrix::identity(target_hom.a_gens), b.rels());
    IntMatrix lhs = target_hom.embedding.hstack(modded);
    auto sol = solve(lhs, w);
    if (!sol) throw std::runtime_error("express_in_hom_group: vector is not a homomorphism class");
    return std::vector<Int>(sol->begin(), sol->begin() + target_hom.group.gens());
}

ProductGroup product_group(const std::vector<FgAbGroup>& factors) {
    ProductGroup out;
    FgAbGroup acc = FgAbGroup::zero();
    out.offsets.reserve(factors.size());
    for (const FgAbGroup& f : factors) {
        out.offsets.push_back(acc.gens());
        acc = FgAbGroup::direct_sum(acc, f);
    }
    out.group = std::move(acc);
    return out;
}

GroupHom ProductGroup::projection(const std::vector<FgAbGroup>& factors, int i) const {
    IntMatrix m(factors[i].gens(), group.gens());
    for (int g = 0; g < factors[i].gens(); ++g) m.at(g, offsets[i] + g) = 1;
    return GroupHom(group, factors[i], std::move(m));
}

GroupHom ProductGroup::inclusion(const std::vector<FgAbGroup>& factors, int i) const {
    IntMatrix m(group.gens(), factors[i].gens());
    for (int g = 0; g < factors[i].gens(); ++g) m.at(offsets[i] + g, g) = 1;
    return GroupHom(factors[i], group, std::move(m));
}

}  // namespace fsh
