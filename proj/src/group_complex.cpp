#include "fsh/group_complex.hpp"

#include <sstream>
#include <stdexcept>

namespace fsh {

const FgAbGroup GroupComplex::zero_group_ = FgAbGroup::zero();

GroupComplex::GroupComplex(int lo, std::vector<FgAbGroup> terms, std::vector<GroupHom> diffs, bool validate)
    : lo_(lo), hi_(lo + int(terms.size()) - 1), terms_(std::move(terms)), diffs_(std::move(diffs)) {
    if (terms_.empty()) {
        lo_ = 0;
        hi_ = -1;
        return;
    }
    if (int(diffs_.size()) != int(terms_.size()) - 1)
        throw std::invalid_argument("GroupComplex: need one differential per adjacent pair");
    for (size_t i = 0; i < diffs_.size(); ++i) {
        if (diffs_[i].source().gens() != terms_[i].gens() || diffs_[i].target().gens() != terms_[i + 1].gens())
            throw std::invalid_argument("GroupComplex: differential endpoints do not match terms");
    }
    if (validate) {
        for (size_t i = 0; i + 1 < diffs_.size(); ++i)
            if (!diffs_[i + 1].compose(diffs_[i]).is_zero())
                throw std::invalid_argument("GroupComplex: d o d != 0");
    }
}

GroupComplex GroupComplex::single(const FgAbGroup& g, int degree) {
    return GroupComplex(degree, {g}, {});
}

const FgAbGroup& GroupComplex::term(int i) const {
    if (i < lo_ || i > hi_) return zero_group_;
    return terms_[i - lo_];
}

GroupHom GroupComplex::diff(int i) const {
    if (i >= lo_ && i < hi_) return diffs_[i - lo_];
    return GroupHom::zero(term(i), term(i + 1));
}

bool GroupComplex::is_zero() const {
    for (int i = lo_; i <= hi_; ++i)
        if (!term(i).is_trivial()) return false;
    return true;
}

std::string GroupComplex::to_string() const {
    std::ostringstream os;
    for (int i = lo_; i <= hi_; ++i) os << (i > lo_ ? " -> " : "") << term(i).to_string();
    return os.str();
}

HomologySlot homology_slot(const GroupComplex& c, int degree) {
    const FgAbGroup& t = c.term(degree);
    if (t.gens() == 0) return {FgAbGroup::zero(), IntMatrix(0, 0)};
    GroupHom out = c.diff(degree);
    GroupHom in = c.diff(degree - 1);
    // Cycles: generator vectors whose image lies in the next term's relation lattice.
    IntMatrix cycles = preimage_lattice(out.matrix(), c.term(degree + 1).rels());
    IntMatrix boundary_and_rels = in.matrix().hstack(t.rels());
    IntMatrix rels = preimage_lattice(cycles, boundary_and_rels);
    return {FgAbGroup(cycles.cols(), rels), cycles};
}

FgAbGroup complex_homology(const GroupComplex& c, int degree) { return homology_slot(c, degree).group; }

bool complex_is_exact(const GroupComplex& c) {
    for (int i = c.lo(); i <= c.hi(); ++i)
        if (!complex_homology(c, i).is_trivial()) return false;
    return true;
}

std::map<int, GroupInvariants> homology_table(const GroupComplex& c) {
    std::map<int, GroupInvariants> t;
    for (int i = c.lo(); i <= c.hi(); ++i) {
        GroupInvariants inv = complex_homology(c, i).invariants();
        if (!inv.is_trivial()) t[i] = std::move(inv);
    }
    return t;
}

ChainMap::ChainMap(GroupComplex source, GroupComplex target, std::map<int, IntMatrix> maps, bool validate)
    : src_(std::move(source)), tgt_(std::move(target)), maps_(std::move(maps)) {
    for (auto& [i, m] : maps_) {
        if (m.rows() != tgt_.term(i).gens() || m.cols() != src_.term(i).gens())
            throw std::invalid_argument("ChainMap: component shape mismatch");
    }
    if (validate) {
        int lo = std::min(src_.lo(), tgt_.lo()) - 1, hi = std::max(src_.hi(), tgt_.hi());
        for (int i = lo; i <= hi; ++i)
            if (!tgt_.diff(i).compose(map(i)).equals(map(i + 1).compose(src_.diff(i))))
                throw std::invalid_argument("ChainMap: squares do not commute");
    }
}

ChainMap ChainMap::identity(const GroupComplex& c) {
    std::map<int, IntMatrix> maps;
    for (int i = c.lo(); i <= c.hi(); ++i) maps[i] = IntMatrix::identity(c.term(i).gens());
    return ChainMap(c, c, std::move(maps), false);
}

GroupHom ChainMap::map(int i) const {
    auto it = maps_.find(i);
    if (it == maps_.end()) return GroupHom::zero(src_.term(i), tgt_.term(i));
    return GroupHom(src_.term(i), tgt_.term(i), it->second);
}

ChainMap ChainMap::compose(const ChainMap& inner) const {
    std::map<int, IntMatrix> maps;
    int lo = std::min(inner.src_.lo(), src_.lo()), hi = std::max(inner.src_.hi(), src_.hi());
    for (int i = lo; i <= hi; ++i) {
        IntMatrix m = map(i).matrix() * inner.map(i).matrix();
        if (m.rows() > 0 && m.cols() > 0) maps[i] = std::move(m);
    }
    return ChainMap(inner.src_, tgt_, std::move(maps), false);
}

GroupHom induced_map_on_homology(const ChainMap& f, int degree, const HomologySlot& src_slot,
                                 const HomologySlot& tgt_slot) {
    IntMatrix images = f.map(degree).matrix() * src_slot.lift;
    IntMatrix coords(tgt_slot.group.gens(), images.cols());
    if (images.cols() > 0) {
        auto sol = solve_matrix(tgt_slot.lift, images);
        if (!sol) throw std::runtime_error("induced_map_on_homology: chain image escapes the cycle lattice");
        coords = *sol;
    }
    return GroupHom(src_slot.group, tgt_slot.group, std::move(coords));
}

GroupHom induced_map_on_homology(const ChainMap& f, int degree) {
    return induced_map_on_homology(f, degree, homology_slot(f.source(), degree), homology_slot(f.target(), degree));
}

GroupComplex shift_complex(const GroupComplex& c, int k) {
    if (c.empty()) return c;
    std::vector<FgAbGroup> terms;
    std::vector<GroupHom> diffs;
    for (int i = c.lo(); i <= c.hi(); ++i) terms.push_back(c.term(i));
    for (int i = c.lo(); i < c.hi(); ++i) diffs.push_back(k % 2 == 0 ? c.diff(i) : c.diff(i).negated());
    return GroupComplex(c.lo() - k, std::move(terms), std::move(diffs), false);
}

GroupComplex cone(const ChainMap& f) {
    const GroupComplex &a = f.source(), &b = f.target();
    int lo = std::min(a.lo() - 1, b.lo()), hi = std::max(a.hi() - 1, b.hi());
    if (lo > hi) return GroupComplex();
    std::vector<FgAbGroup> terms;
    std::vector<GroupHom> diffs;
    for (int n = lo; n <= hi; ++n) terms.push_back(FgAbGroup::direct_sum(a.term(n + 1), b.term(n)));
    for (int n = lo; n < hi; ++n) {
        int a1 = a.term(n + 1).gens(), b0 = b.term(n).gens();
        int a2 = a.term(n + 2).gens(), b1 = b.term(n + 1).gens();
        IntMatrix m(a2 + b1, a1 + b0);
        IntMatrix da = a.diff(n + 1).matrix();
        IntMatrix db = b.diff(n).matrix();
        IntMatrix fm = f.map(n + 1).matrix();
        for (int r = 0; r < a2; ++r)
            for (int c = 0; c < a1; ++c) m.at(r, c) = -da.at(r, c);
        for (int r = 0; r < b1; ++r) {
            for (int c = 0; c < a1; ++c) m.at(a2 + r, c) = fm.at(r, c);
            for (int c = 0; c < b0; ++c) m.at(a2 + r, a1 + c) = db.at(r, c);
        }
        diffs.push_back(GroupHom(terms[n - lo], terms[n - lo + 1], std::move(m)));
    }
    return GroupComplex(lo, std::move(terms), std::move(diffs), false);
}

GroupComplex cocone(const ChainMap& f) { return shift_complex(cone(f), -1); }

GroupComplex direct_sum(const GroupComplex& a, const GroupComplex& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    int lo = std::min(a.lo(), b.lo()), hi = std::max(a.hi(), b.hi());
    std::vector<FgAbGroup> terms;
    std::vector<GroupHom> diffs;
    for (int n = lo; n <= hi; ++n) terms.push_back(FgAbGroup::direct_sum(a.term(n), b.term(n)));
    for (int n = lo; n < hi; ++n)
        diffs.push_back(GroupHom(terms[n - lo], terms[n - lo + 1],
                                 IntMatrix::block_diag(a.diff(n).matrix(), b.diff(n).matrix())));
    return GroupComplex(lo, std::move(terms), std::move(diffs), false);
}

ChainMap cone_inclusion(const ChainMap& f, const GroupComplex& cne) {
    const GroupComplex &a = f.source(), &b = f.target();
    std::map<int, IntMatrix> maps;
    for (int n = b.lo(); n <= b.hi(); ++n) {
        int a1 = a.term(n + 1).gens(), b0 = b.term(n).gens();
        IntMatrix m(a1 + b0, b0);
        for (int r = 0; r < b0; ++r) m.at(a1 + r, r) = 1;
        maps[n] = std::move(m);
    }
    return ChainMap(b, cne, std::move(maps), false);
}

ChainMap cone_projection(const ChainMap& f, const GroupComplex& cne) {
    const GroupComplex& a = f.source();
    GroupComplex a1 = shift_complex(a, 1);
    std::map<int, IntMatrix> maps;
    for (int n = cne.lo(); n <= cne.hi(); ++n) {
        int ag = a.term(n + 1).gens(), bg = f.target().term(n).gens();
        if (ag == 0) continue;
        IntMatrix m(ag, ag + bg);
        for (int r = 0; r < ag; ++r) m.at(r, r) = 1;
        maps[n] = std::move(m);
    }
    return ChainMap(cne, a1, std::move(maps), false);
}

GroupComplex free_model(const GroupComplex& c) {
    GroupComplex acc;
    for (int i = c.lo(); i <= c.hi(); ++i) {
        GroupInvariants inv = complex_homology(c, i).invariants();
        int k = int(inv.torsion.size());
        if (inv.free_rank == 0 && k == 0) continue;
        FgAbGroup low = FgAbGroup::free_group(k);
        FgAbGroup high = FgAbGroup::free_group(inv.free_rank + k);
        IntMatrix d(inv.free_rank + k, k);
        for (int j = 0; j < k; ++j) d.at(j, j) = inv.torsion[j];
        GroupComplex elem = k == 0 ? GroupComplex::single(high, i)
                                   : GroupComplex(i - 1, {low, high}, {GroupHom(low, high, std::move(d))}, false);
        acc = direct_sum(acc, elem);
    }
    return acc;
}

GroupComplex hom_complex_free_source(const GroupComplex& p, const GroupComplex& d) {
    for (int i = p.lo(); i <= p.hi(); ++i)
        if (p.term(i).rels().cols() != 0)
            throw std::invalid_argument("hom_complex_free_source: source terms must be free");
    if (p.empty() || d.empty()) return GroupComplex();
    int lo = d.lo() - p.hi(), hi = d.hi() - p.lo();

    // Term^n = ⊕_i Hom(P^i, D^{i+n}), one copy of D^{i+n} per generator of P^i.
    auto build_term = [&](int n, std::vector<int>& offs, std::vector<int>& which) {
        FgAbGroup acc = FgAbGroup::zero();
        offs.assign(size_t(p.hi() - p.lo() + 1), -1);
        which.clear();
        for (int i = p.lo(); i <= p.hi(); ++i) {
            int a = p.term(i).gens();
            const FgAbGroup& dg = d.term(i + n);
            if (a == 0 || dg.gens() == 0) continue;
            offs[i - p.lo()] = acc.gens();
            FgAbGroup copies = FgAbGroup(a * dg.gens(), IntMatrix::kronecker(IntMatrix::identity(a), dg.rels()));
            acc = FgAbGroup::direct_sum(acc, copies);
            which.push_back(i);
        }
        return acc;
    };

    std::vector<FgAbGroup> terms;
    std::vector<std::vector<int>> offsets;
    for (int n = lo; n <= hi; ++n) {
        std::vector<int> offs, which;
        terms.push_back(build_term(n, offs, which));
        offsets.push_back(std::move(offs));
    }

    std::vector<GroupHom> diffs;
    for (int n = lo; n < hi; ++n) {
        IntMatrix m(terms[n - lo + 1].gens(), terms[n - lo].gens());
        auto put_block = [&](int r0, int c0, const IntMatrix& b) {
            for (int r = 0; r < b.rows(); ++r)
                for (int c = 0; c < b.cols(); ++c)
                    if (b.at(r, c) != 0) m.at(r0 + r, c0 + c) = b.at(r, c);
        };
        for (int i = p.lo(); i <= p.hi(); ++i) {
            int a = p.term(i).gens();
            int src_off = offsets[n - lo][i - p.lo()];
            if (a == 0 || src_off < 0) continue;
            // postcompose with d_D: Hom(P^i, D^{i+n}) -> Hom(P^i, D^{i+n+1})
            if (offsets[n - lo + 1][i - p.lo()] >= 0 && d.term(i + n + 1).gens() > 0) {
                IntMatrix blk = IntMatrix::kronecker(IntMatrix::identity(a), d.diff(i + n).matrix());
                put_block(offsets[n - lo + 1][i - p.lo()], src_off, blk);
            }
            // precompose with d_P: Hom(P^i, D^{i+n}) -> Hom(P^{i-1}, D^{i+n})
            if (i - 1 >= p.lo() && offsets[n - lo + 1][i - 1 - p.lo()] >= 0) {
                IntMatrix blk = IntMatrix::kronecker(p.diff(i - 1).matrix().transpose(),
                                                     IntMatrix::identity(d.term(i + n).gens()));
                Int sign = (n % 2 == 0) ? -1 : 1;  // -(-1)^n
                put_block(offsets[n - lo + 1][i - 1 - p.lo()], src_off, blk.scaled(sign));
            }
        }
        diffs.push_back(GroupHom(terms[n - lo], terms[n - lo + 1], std::move(m)));
    }
    return GroupComplex(lo, std::move(terms), std::move(diffs));
}

GroupComplex dual_group_complex(const GroupComplex& c) {
    return hom_complex_free_source(free_model(c), GroupComplex::single(FgAbGroup::free_group(1), 0));
}

GroupComplex rhom_groups(const GroupComplex& c, const GroupComplex& d) {
    return hom_complex_free_source(free_model(c), d);
}

GroupComplex tensor_free_source(const GroupComplex& p, const GroupComplex& d) {
    for (int i = p.lo(); i <= p.hi(); ++i)
        if (p.term(i).rels().cols() != 0)
            throw std::invalid_argument("tensor_free_source: first factor terms must be free");
    if (p.empty() || d.empty()) return GroupComplex();
    int lo = p.lo() + d.lo(), hi = p.hi() + d.hi();

    auto term_offsets = [&](int n, std::vector<int>& offs) {
        FgAbGroup acc = FgAbGroup::zero();
        offs.assign(size_t(p.hi() - p.lo() + 1), -1);
        for (int i = p.lo(); i <= p.hi(); ++i) {
            int a = p.term(i).gens();
            const FgAbGroup& dg = d.term(n - i);
            if (a == 0 || dg.gens() == 0) continue;
            offs[i - p.lo()] = acc.gens();
            acc = FgAbGroup::direct_sum(acc, FgAbGroup(a * dg.gens(),
                                                       IntMatrix::kronecker(IntMatrix::identity(a), dg.rels())));
        }
        return acc;
    };

    std::vector<FgAbGroup> terms;
    std::vector<std::vector<int>> offsets;
    for (int n = lo; n <= hi; ++n) {
        std::vector<int> offs;
        terms.push_back(term_offsets(n, offs));
        offsets.push_back(std::move(offs));
    }
    std::vector<GroupHom> diffs;
    for (int n = lo; n < hi; ++n) {
        IntMatrix m(terms[n - lo + 1].gens(), terms[n - lo].gens());
        auto put_block = [&](int r0, int c0, const IntMatrix& b) {
            for (int r = 0; r < b.rows(); ++r)
                for (int c = 0; c < b.cols(); ++c)
                    if (b.at(r, c) != 0) m.at(r0 + r, c0 + c) = b.at(r, c);
        };
        for (int i = p.lo(); i <= p.hi(); ++i) {
            int src_off = offsets[n - lo][i - p.lo()];
            if (src_off < 0) continue;
            int a = p.term(i).gens();
            // d_P ⊗ id: component i -> i+1 (degree of D part stays n-i).
            if (i + 1 <= p.hi() && offsets[n - lo + 1][i + 1 - p.lo()] >= 0) {
                IntMatrix blk = IntMatrix::kronecker(p.diff(i).matrix(), IntMatrix::identity(d.term(n - i).gens()));
                put_block(offsets[n - lo + 1][i + 1 - p.lo()], src_off, blk);
            }
            // (-1)^i id ⊗ d_D: component i stays.
            if (offsets[n - lo + 1][i - p.lo()] >= 0 && d.term(n - i + 1).gens() > 0) {
                IntMatrix blk = IntMatrix::kronecker(IntMatrix::identity(a), d.diff(n - i).matrix());
                put_block(offsets[n - lo + 1][i - p.lo()], src_off, i % 2 == 0 ? blk : blk.scaled(-1));
            }
        }
        diffs.push_back(GroupHom(terms[n - lo], terms[n - lo + 1], std::move(m)));
    }
    return GroupComplex(lo, std::move(terms), std::move(diffs));
}

GroupComplex derived_tensor_groups(const GroupComplex& c, const GroupComplex& d) {
    return tensor_free_source(free_model(c), d);
}

}  // namespace fsh
