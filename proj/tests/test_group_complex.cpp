#include <doctest.h>

#include <random>

#include "fsh/group_complex.hpp"

using namespace fsh;

namespace {

GroupComplex two_term(const Int& k) {
    FgAbGroup z = FgAbGroup::free_group(1);
    IntMatrix m(1, 1);
    m.at(0, 0) = k;
    return GroupComplex(0, {z, z}, {GroupHom(z, z, m)});
}

// The global section complex of the constant data Z on the pseudocircle,
// written down by hand: vertices a,b,c,d and the four edges a<c, a<d, b<c,
// b<d of the order complex (a 4-cycle).
GroupComplex pseudocircle_cochain() {
    FgAbGroup v = FgAbGroup::free_group(4), e = FgAbGroup::free_group(4);
    // (ds)_{x<y} = s_y - s_x; edge order: ac, ad, bc, bd.
    IntMatrix d{{-1, 0, 1, 0}, {-1, 0, 0, 1}, {0, -1, 1, 0}, {0, -1, 0, 1}};
    return GroupComplex(0, {v, e}, {GroupHom(v, e, d)});
}

IntMatrix random_unimodular(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(0, n - 1), val(-2, 2);
    IntMatrix u = IntMatrix::identity(n);
    for (int step = 0; step < 3 * n; ++step) {
        int i = pick(rng), j = pick(rng);
        if (i != j) u.add_row_multiple(i, j, val(rng));
    }
    return u;
}

void check_exact_sequence(const std::vector<FgAbGroup>& groups, const std::vector<GroupHom>& maps) {
    GroupComplex seq(0, groups, maps);
    CHECK(complex_is_exact(seq));
}

}  // namespace

TEST_CASE("homology of 0 -> Z --2--> Z -> 0") {
    GroupComplex c = two_term(2);
    CHECK(complex_homology(c, 0).is_trivial());
    CHECK(complex_homology(c, 1).invariants() == FgAbGroup::cyclic(2).invariants());
    CHECK(complex_homology(c, 5).is_trivial());
    CHECK(complex_homology(c, -3).is_trivial());
}

TEST_CASE("zero differentials give back the terms") {
    FgAbGroup a = FgAbGroup::cyclic(6), b = FgAbGroup::free_group(2);
    GroupComplex c(0, {a, b}, {GroupHom::zero(a, b)});
    CHECK(complex_homology(c, 0).invariants() == a.invariants());
    CHECK(complex_homology(c, 1).invariants() == b.invariants());
}

TEST_CASE("pseudocircle cochain complex has H0 = H1 = Z") {
    GroupComplex c = pseudocircle_cochain();
    CHECK(complex_homology(c, 0).invariants() == GroupInvariants{1, {}});
    CHECK(complex_homology(c, 1).invariants() == GroupInvariants{1, {}});
}

TEST_CASE("d squared is validated") {
    FgAbGroup z = FgAbGroup::free_group(1);
    GroupHom one = GroupHom::identity(z);
    CHECK_THROWS_AS(GroupComplex(0, {z, z, z}, {one, one}), std::invalid_argument);
}

TEST_CASE("exact complexes have vanishing homology") {
    FgAbGroup z = FgAbGroup::free_group(1), z2 = FgAbGroup::free_group(2);
    // 0 -> Z --(1,2)--> Z^2 --(2,-1)--> Z -> 0 is exact.
    GroupComplex c(0, {z, z2, z}, {GroupHom(z, z2, IntMatrix{{1}, {2}}), GroupHom(z2, z, IntMatrix{{2, -1}})});
    CHECK(complex_is_exact(c));
}

TEST_CASE("homology invariants survive unimodular change of basis") {
    std::mt19937_64 rng(99);
    GroupComplex c = pseudocircle_cochain();
    IntMatrix u0 = random_unimodular(4, rng), u1 = random_unimodular(4, rng);
    // d' = u1 d u0^{-1}; build from solve since u0 is unimodular.
    auto u0inv = solve_matrix(u0, IntMatrix::identity(4));
    REQUIRE(u0inv);
    IntMatrix d2 = u1 * c.diff(0).matrix() * (*u0inv);
    FgAbGroup f4 = FgAbGroup::free_group(4);
    GroupComplex c2(0, {f4, f4}, {GroupHom(f4, f4, d2)});
    for (int i = 0; i <= 1; ++i)
        CHECK(complex_homology(c, i).invariants() == complex_homology(c2, i).invariants());
}

TEST_CASE("induced map: identity and acyclic cases") {
    GroupComplex c = pseudocircle_cochain();
    ChainMap id = ChainMap::identity(c);
    CHECK(induced_map_on_homology(id, 0).equals(GroupHom::identity(complex_homology(c, 0))));
    CHECK(induced_map_on_homology(id, 1).is_isomorphism());

    GroupComplex acyclic = two_term(1);
    std::map<int, IntMatrix> maps{{0, IntMatrix{{1}}}, {1, IntMatrix{{2}}}};
    ChainMap f(acyclic, two_term(2), maps);
    CHECK(induced_map_on_homology(f, 1).is_zero());
    CHECK(induced_map_on_homology(f, 0).is_zero());
}

TEST_CASE("induced map: restriction from the pseudocircle to the closed antichain {a,b}") {
    GroupComplex c = pseudocircle_cochain();
    FgAbGroup v2 = FgAbGroup::free_group(2);
    GroupComplex antichain(0, {v2}, {});
    // Project sections onto the a and b coordinates; no edges survive.
    std::map<int, IntMatrix> maps{{0, IntMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}}}};
    ChainMap rest(c, antichain, maps);
    GroupHom h = induced_map_on_homology(rest, 0);
    CHECK(hom_kernel(h).group.is_trivial());
    CHECK(hom_cokernel(h).group.invariants() == GroupInvariants{1, {}});
    // The generator goes to a diagonal element (x, x).
    REQUIRE(h.matrix().cols() == 1);
    CHECK(h.matrix().at(0, 0) == h.matrix().at(1, 0));
    CHECK(abs(h.matrix().at(0, 0)) == 1);
}

TEST_CASE("non-commuting squares are rejected") {
    GroupComplex a = two_term(2), b = two_term(3);
    std::map<int, IntMatrix> maps{{0, IntMatrix{{1}}}, {1, IntMatrix{{1}}}};
    CHECK_THROWS_AS(ChainMap(a, b, maps), std::invalid_argument);
}

TEST_CASE("dual of Z in degree 0") {
    GroupComplex c = GroupComplex::single(FgAbGroup::free_group(1), 0);
    GroupComplex d = dual_group_complex(c);
    CHECK(complex_homology(d, 0).invariants() == GroupInvariants{1, {}});
    CHECK(complex_homology(d, 1).is_trivial());
}

TEST_CASE("dual of Z/2 in degree 0 is Z/2 in degree 1") {
    GroupComplex c = GroupComplex::single(FgAbGroup::cyclic(2), 0);
    GroupComplex d = dual_group_complex(c);
    CHECK(complex_homology(d, 0).is_trivial());
    CHECK(complex_homology(d, 1).invariants() == FgAbGroup::cyclic(2).invariants());
}

TEST_CASE("double dual of complexes with free homology") {
    GroupComplex c = pseudocircle_cochain();
    GroupComplex dd = dual_group_complex(dual_group_complex(c));
    for (int i = -2; i <= 2; ++i)
        CHECK(complex_homology(dd, i).invariants() == complex_homology(c, i).invariants());
}

TEST_CASE("universal coefficients for duals of random free complexes") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> kdist(-6, 6), deg(-2, 2);
    for (int trial = 0; trial < 40; ++trial) {
        GroupComplex c;
        int pieces = 1 + int(rng() % 3);
        for (int p = 0; p < pieces; ++p) {
            int d0 = deg(rng);
            Int k = kdist(rng);
            FgAbGroup z = FgAbGroup::free_group(1);
            IntMatrix m(1, 1);
            m.at(0, 0) = k;
            c = direct_sum(c, GroupComplex(d0, {z, z}, {GroupHom(z, z, m)}));
        }
        GroupComplex d = dual_group_complex(c);
        for (int i = -4; i <= 4; ++i) {
            GroupInvariants di = complex_homology(d, i).invariants();
            CHECK(di.free_rank == complex_homology(c, -i).invariants().free_rank);
            CHECK(di.torsion == complex_homology(c, 1 - i).invariants().torsion);
        }
    }
}

TEST_CASE("cone of the identity is acyclic") {
    GroupComplex c = pseudocircle_cochain();
    CHECK(complex_is_exact(cone(ChainMap::identity(c))));
}

TEST_CASE("shift round trip") {
    GroupComplex c = pseudocircle_cochain();
    GroupComplex s = shift_complex(shift_complex(c, 2), -2);
    CHECK(s.lo() == c.lo());
    for (int i = c.lo(); i <= c.hi(); ++i) CHECK(s.diff(i).equals(c.diff(i)));
}

TEST_CASE("long exact sequence of a cone") {
    // f: multiplication by 2 between two-term complexes with some torsion.
    GroupComplex a = two_term(4), b = two_term(6);
    std::map<int, IntMatrix> maps{{0, IntMatrix{{2}}}, {1, IntMatrix{{3}}}};
    ChainMap f(a, b, maps);
    GroupComplex cn = cone(f);
    ChainMap incl = cone_inclusion(f, cn), proj = cone_projection(f, cn);

    // H^n(A) -> H^n(B) -> H^n(cone) -> H^{n+1}(A) -> ..., degrees -1..3.
    std::vector<FgAbGroup> groups;
    std::vector<GroupHom> seq;
    GroupHom first = induced_map_on_homology(f, -1);
    groups.push_back(first.source());
    for (int n = -1; n <= 3; ++n) {
        GroupHom fb = induced_map_on_homology(f, n);
        seq.push_back(GroupHom(groups.back(), fb.target(), fb.matrix()));
        groups.push_back(fb.target());
        GroupHom ic = induced_map_on_homology(incl, n);
        seq.push_back(GroupHom(groups.back(), ic.target(), ic.matrix()));
        groups.push_back(ic.target());
        GroupHom pj = induced_map_on_homology(proj, n);  // H^n(cone) -> H^{n+1}(A)
        seq.push_back(GroupHom(groups.back(), pj.target(), pj.matrix()));
        groups.push_back(pj.target());
    }
    check_exact_sequence(groups, seq);
}

TEST_CASE("rhom and derived tensor of torsion groups") {
    GroupComplex z2 = GroupComplex::single(FgAbGroup::cyclic(2), 0);
    GroupComplex r = rhom_groups(z2, GroupComplex::single(FgAbGroup::free_group(1), 0));
    CHECK(complex_homology(r, 0).is_trivial());
    CHECK(complex_homology(r, 1).invariants() == FgAbGroup::cyclic(2).invariants());

    GroupComplex t = derived_tensor_groups(z2, z2);
    CHECK(complex_homology(t, 0).invariants() == FgAbGroup::cyclic(2).invariants());
    CHECK(complex_homology(t, -1).invariants() == FgAbGroup::cyclic(2).invariants());
}
