#include <doctest.h>

#include <map>
#include <set>
#include <vector>

#include "fsh/group.hpp"

using namespace fsh;

namespace {

// Brute-force oracle: for a presentation Z^2 / lattice of full rank, list the
// quotient elements by reduction modulo the lattice and read off element
// orders. Enough to pin the invariant factors of small groups.
struct BruteQuotient {
    IntMatrix rels;  // 2 x k, full-rank lattice
    std::set<std::pair<long long, long long>> elements;

    explicit BruteQuotient(const IntMatrix& r) : rels(r) {
        // Reduce representatives (x, y) in a box by testing lattice membership
        // of differences.
        for (long long x = 0; x < 16; ++x)
            for (long long y = 0; y < 16; ++y) {
                bool fresh = true;
                for (auto& [ex, ey] : elements)
                    if (in_lattice(x - ex, y - ey)) { fresh = false; break; }
                if (fresh) elements.insert({x, y});
            }
    }

    bool in_lattice(long long x, long long y) const {
        std::vector<Int> v{Int(x), Int(y)};
        return solve(rels, v).has_value();
    }

    int order(std::pair<long long, long long> g) const {
        for (int n = 1; n <= 64; ++n)
            if (in_lattice(n * g.first, n * g.second)) return n;
        return -1;
    }
};

}  // namespace

TEST_CASE("invariants: Z/2 presentation") {
    FgAbGroup g = FgAbGroup::cyclic(2);
    CHECK(g.invariants().free_rank == 0);
    REQUIRE(g.invariants().torsion.size() == 1);
    CHECK(g.invariants().torsion[0] == 2);
    CHECK(g.to_string() == "Z/2");
}

TEST_CASE("invariants: free of rank 2") {
    FgAbGroup g(2);
    CHECK(g.invariants().free_rank == 2);
    CHECK(g.invariants().torsion.empty());
}

TEST_CASE("invariants: Z^2 / <(2,0),(0,4)> against brute-force enumeration") {
    IntMatrix rels{{2, 0}, {0, 4}};
    BruteQuotient bq(rels);
    CHECK(bq.elements.size() == 8);
    int exponent = 0, two_torsion = 0;
    for (auto& g : bq.elements) {
        exponent = std::max(exponent, bq.order(g));
        if (bq.in_lattice(2 * g.first, 2 * g.second)) ++two_torsion;
    }
    // Order 8, exponent 4, four elements killed by 2: that is Z/2 + Z/4.
    CHECK(exponent == 4);
    CHECK(two_torsion == 4);

    FgAbGroup g(2, rels);
    CHECK(g.invariants().free_rank == 0);
    REQUIRE(g.invariants().torsion.size() == 2);
    CHECK(g.invariants().torsion[0] == 2);
    CHECK(g.invariants().torsion[1] == 4);
}

TEST_CASE("invariants are idempotent and order-insensitive") {
    IntMatrix rels{{0, 2}, {4, 0}};
    FgAbGroup g(2, rels);
    CHECK(g.invariants() == FgAbGroup(2, IntMatrix{{2, 0}, {0, 4}}).invariants());
}

TEST_CASE("hom rejection of ill-defined maps") {
    FgAbGroup z = FgAbGroup::free_group(1), z2 = FgAbGroup::cyclic(2);
    // Z/2 -> Z by 1 is not well-defined.
    CHECK_THROWS_AS(GroupHom(z2, z, IntMatrix{{1}}), std::invalid_argument);
    // Z -> Z/2 by anything is fine.
    CHECK_NOTHROW(GroupHom(z, z2, IntMatrix{{1}}));
}

TEST_CASE("kernel and cokernel of multiplication by 2 on Z") {
    FgAbGroup z = FgAbGroup::free_group(1);
    GroupHom two(z, z, IntMatrix{{2}});
    CHECK(hom_kernel(two).group.is_trivial());
    CHECK(hom_cokernel(two).group.invariants() == FgAbGroup::cyclic(2).invariants());
    CHECK(hom_image(two).group.invariants() == z.invariants());
}

TEST_CASE("zero map Z -> Z") {
    FgAbGroup z = FgAbGroup::free_group(1);
    GroupHom zero = GroupHom::zero(z, z);
    CHECK(hom_kernel(zero).group.invariants().free_rank == 1);
    CHECK(hom_image(zero).group.is_trivial());
    CHECK(hom_cokernel(zero).group.invariants().free_rank == 1);
}

TEST_CASE("projection Z^2 -> Z, (x,y) -> x+y") {
    FgAbGroup z2 = FgAbGroup::free_group(2), z = FgAbGroup::free_group(1);
    GroupHom pr(z2, z, IntMatrix{{1, 1}});
    // Rank-nullity over Z, cross-checked through the SNF route.
    auto ker = hom_kernel(pr);
    CHECK(ker.group.invariants().free_rank == 1);
    CHECK(ker.group.invariants().torsion.empty());
    CHECK(hom_cokernel(pr).group.is_trivial());
    // Kernel really includes into the source and composes to zero.
    CHECK(pr.compose(ker.to_ambient).is_zero());
}

TEST_CASE("kernel -> source -> target composes to zero with torsion around") {
    FgAbGroup a(2, IntMatrix{{4, 0}, {0, 2}});  // Z/4 + Z/2
    FgAbGroup b = FgAbGroup::cyclic(4);
    GroupHom h(a, b, IntMatrix{{1, 2}});
    auto ker = hom_kernel(h);
    CHECK(h.compose(ker.to_ambient).is_zero());
    // Image and cokernel invariants are consistent with the target.
    auto im = hom_image(h);
    auto ck = hom_cokernel(h);
    CHECK(im.group.invariants() == FgAbGroup::cyclic(4).invariants());
    CHECK(ck.group.is_trivial());
}

TEST_CASE("isomorphism detection and inverse") {
    FgAbGroup z2 = FgAbGroup::free_group(2);
    GroupHom u(z2, z2, IntMatrix{{2, 1}, {1, 1}});
    CHECK(u.is_isomorphism());
    GroupHom v = u.inverse();
    CHECK(v.compose(u).equals(GroupHom::identity(z2)));
    CHECK(u.compose(v).equals(GroupHom::identity(z2)));

    GroupHom w(z2, z2, IntMatrix{{2, 0}, {0, 1}});
    CHECK(!w.is_isomorphism());
    CHECK_THROWS(w.inverse());

    // x -> 3x is an automorphism of Z/8.
    FgAbGroup z8 = FgAbGroup::cyclic(8);
    GroupHom three(z8, z8, IntMatrix{{3}});
    CHECK(three.is_isomorphism());
    CHECK(three.inverse().compose(three).equals(GroupHom::identity(z8)));
}

TEST_CASE("tensor products") {
    FgAbGroup z2 = FgAbGroup::cyclic(2), z3 = FgAbGroup::cyclic(3), z4 = FgAbGroup::cyclic(4);
    CHECK(tensor_group(z2, z3).is_trivial());
    CHECK(tensor_group(z2, z4).invariants() == z2.invariants());
    FgAbGroup z = FgAbGroup::free_group(1);
    CHECK(tensor_group(z, z2).invariants() == z2.invariants());
}

TEST_CASE("hom groups") {
    FgAbGroup z = FgAbGroup::free_group(1), z2 = FgAbGroup::cyclic(2), z4 = FgAbGroup::cyclic(4);
    CHECK(hom_group_of_groups(z, z).group.invariants().free_rank == 1);
    CHECK(hom_group_of_groups(z2, z).group.is_trivial());
    CHECK(hom_group_of_groups(z2, z4).group.invariants() == z2.invariants());
    CHECK(hom_group_of_groups(z4, z2).group.invariants() == z2.invariants());

    // Extracting an actual matrix from a Hom-group element.
    HomGroup h = hom_group_of_groups(z2, z4);
    REQUIRE(h.group.gens() >= 1);
    IntMatrix m = h.element_matrix([&] {
        std::vector<Int> c(h.group.gens());
        c[0] = 1;
        return c;
    }());
    CHECK_NOTHROW(GroupHom(z2, z4, m));
}

TEST_CASE("product group with structure maps") {
    std::vector<FgAbGroup> fs{FgAbGroup::free_group(1), FgAbGroup::cyclic(2)};
    ProductGroup p = product_group(fs);
    CHECK(p.group.invariants().free_rank == 1);
    CHECK(p.group.invariants().torsion.size() == 1);
    GroupHom pr0 = p.projection(fs, 0), in1 = p.inclusion(fs, 1);
    CHECK(pr0.compose(in1).is_zero());
    CHECK(p.projection(fs, 1).compose(in1).equals(GroupHom::identity(fs[1])));
}
