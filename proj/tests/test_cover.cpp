#include <catch2/catch_amalgamated.hpp>

#include "ellhodge/cover.hpp"

using namespace ellhodge;

namespace {

Poly from_roots(const std::vector<int>& roots) {
    Poly f = Poly::constant(Rat(1));
    for (int r : roots) f = f * Poly::linear_root(Rat(r));
    return f;
}

VirtualModule vm(const TablePtr& t, std::vector<std::int64_t> m) {
    return VirtualModule(t, std::move(m));
}

}  // namespace

TEST_CASE("superelliptic construction and genus") {
    SECTION("m=2, f=t(t-1): split double cover, genus 0") {
        const auto cov = GaloisCover::superelliptic(2, from_roots({0, 1}));
        CHECK(cov.genus_upstairs() == 0);
        CHECK(cov.branch_point_count() == 2);
        REQUIRE(cov.branches().size() == 1);  // gcd(2,2)=2, no ramification at infinity
        CHECK(cov.branches()[0].e == 2);
        CHECK(cov.branches()[0].multiplicity == 2);
    }
    SECTION("m=2, quartic: genus 1") {
        const auto cov = GaloisCover::superelliptic(2, from_roots({0, 1, 2, 3}));
        CHECK(cov.genus_upstairs() == 1);
        CHECK(cov.branch_point_count() == 4);
    }
    SECTION("m=2, cubic ramifies over infinity") {
        const auto cov = GaloisCover::superelliptic(2, from_roots({0, 1, 2}));
        CHECK(cov.genus_upstairs() == 1);
        REQUIRE(cov.branches().size() == 2);
        CHECK(cov.branch_point_count() == 4);
        CHECK(is_infinite(std::get<InfinitePlace>(cov.branches()[1].location)));
        CHECK(cov.branches()[1].e == 2);
        CHECK(cov.branches()[1].inertia_gen == 1);
    }
    SECTION("inertia generator over infinity") {
        // m=4, deg f=5: gcd=1, k = (-5 mod 4) = 3, generator g^3
        const auto c45 = GaloisCover::superelliptic(4, from_roots({0, 1, 2, 3, 4}));
        REQUIRE(c45.branches().size() == 2);
        CHECK(c45.branches()[1].e == 4);
        CHECK(c45.branches()[1].inertia_gen == 3);
        // m=4, deg f=6: gcd=2, e=2, k=1, generator g^2
        const auto c46 = GaloisCover::superelliptic(4, from_roots({0, 1, 2, 3, 4, 5}));
        REQUIRE(c46.branches().size() == 2);
        CHECK(c46.branches()[1].e == 2);
        CHECK(c46.branches()[1].inertia_gen == 2);
        // m=3, deg f=2: k = (-2 mod 3) = 1, generator g
        const auto c32 = GaloisCover::superelliptic(3, from_roots({0, 1}));
        REQUIRE(c32.branches().size() == 2);
        CHECK(c32.branches()[1].e == 3);
        CHECK(c32.branches()[1].inertia_gen == 1);
        CHECK(c32.genus_upstairs() == 1);
    }
    SECTION("rejects bad input") {
        CHECK_THROWS_AS(GaloisCover::superelliptic(1, from_roots({0, 1})), config_error);
        CHECK_THROWS_AS(GaloisCover::superelliptic(2, Poly::x() * Poly::x()), config_error);
        CHECK_THROWS_AS(GaloisCover::superelliptic(2, Poly::constant(Rat(3))), config_error);
    }
}

TEST_CASE("abstract cover validation") {
    auto z2 = std::make_shared<const CharacterTable>(CharacterTable::cyclic(2));
    auto z3 = std::make_shared<const CharacterTable>(CharacterTable::cyclic(3));

    SECTION("three order-3 branch points give genus 1") {
        const auto cov = GaloisCover::abstract_cover(
            z3, 0, {{1, std::string("a"), 0, 1}, {1, std::string("b"), 0, 1}, {1, std::string("c"), 0, 2}});
        CHECK(cov.genus_upstairs() == 1);
        CHECK(cov.branches()[0].e == 3);  // e recomputed from the element order
    }
    SECTION("identity inertia rejected") {
        CHECK_THROWS_AS(GaloisCover::abstract_cover(z2, 0, {{1, Rat(0), 0, 0}}), config_error);
    }
    SECTION("duplicate branch points rejected") {
        CHECK_THROWS_AS(
            GaloisCover::abstract_cover(z2, 0, {{1, Rat(1), 0, 1}, {1, Rat(1), 0, 1}}),
            config_error);
        CHECK_THROWS_AS(GaloisCover::abstract_cover(
                            z2, 0, {{1, Rat(1), 0, 1}, {1, from_roots({1, 2}), 0, 1}}),
                        config_error);
        CHECK_THROWS_AS(GaloisCover::abstract_cover(
                            z2, 0, {{1, InfinitePlace{}, 0, 1}, {1, InfinitePlace{}, 0, 1}}),
                        config_error);
    }
    SECTION("non-integral genus rejected") {
        // single order-2 branch point: 2g'-2 = -4 + 1 is odd
        CHECK_THROWS_AS(GaloisCover::abstract_cover(z2, 0, {{1, Rat(0), 0, 1}}), config_error);
    }
    SECTION("negative genus rejected") {
        CHECK_THROWS_AS(GaloisCover::abstract_cover(z3, 0, {{1, Rat(0), 0, 1}}), config_error);
    }
}

TEST_CASE("sections over the branch locus") {
    SECTION("Z/2 with 2 and 4 branch points") {
        const auto two = GaloisCover::superelliptic(2, from_roots({0, 1}));
        CHECK(two.h0_branch_fibers() == vm(two.table_ptr(), {2, 0}));
        const auto four = GaloisCover::superelliptic(2, from_roots({0, 1, 2, 3}));
        CHECK(four.h0_branch_fibers() == vm(four.table_ptr(), {4, 0}));
    }
    SECTION("Z/4 with mixed inertia") {
        auto z4 = std::make_shared<const CharacterTable>(CharacterTable::cyclic(4));
        const auto cov = GaloisCover::abstract_cover(
            z4, 0, {{1, std::string("a"), 0, 2}, {1, std::string("b"), 0, 1}, {1, std::string("c"), 0, 1}});
        CHECK(cov.h0_branch_fibers() == vm(z4, {3, 0, 1, 0}));
        CHECK(cov.genus_upstairs() == 1);
        // the order-4 points force H^0(K) into the character of index 1
        CHECK(cov.h0_canonical() == vm(z4, {0, 1, 0, 0}));
    }
}

TEST_CASE("canonical sections") {
    SECTION("genus 0: zero module") {
        const auto cov = GaloisCover::superelliptic(2, from_roots({0, 1}));
        CHECK(cov.h0_canonical() == VirtualModule::zero(cov.table_ptr()));
        CHECK(cov.chi_structure_sheaf() == VirtualModule::trivial_class(cov.table_ptr()));
    }
    SECTION("Z/2 quartic: sign character") {
        const auto cov = GaloisCover::superelliptic(2, from_roots({0, 1, 2, 3}));
        CHECK(cov.h0_canonical() == vm(cov.table_ptr(), {0, 1}));
        CHECK(cov.chi_structure_sheaf() == vm(cov.table_ptr(), {1, -1}));
    }
    SECTION("Z/3 on the hexagonal elliptic curve: a non-self-dual module") {
        const auto cov = GaloisCover::superelliptic(3, from_roots({0, 1}));
        const auto h0k = cov.h0_canonical();
        CHECK(h0k == vm(cov.table_ptr(), {0, 1, 0}));
        CHECK_FALSE(h0k.is_self_dual());
    }
    SECTION("m=4 cubic (genus 3)") {
        const auto cov = GaloisCover::superelliptic(4, from_roots({0, 1, 2}));
        CHECK(cov.genus_upstairs() == 3);
        CHECK(cov.h0_canonical() == vm(cov.table_ptr(), {0, 2, 1, 0}));
    }
    SECTION("unramified covers reproduce the closed form") {
        for (int m : {1, 2, 3, 5}) {
            for (int g : {1, 2, 3}) {
                auto t = std::make_shared<const CharacterTable>(CharacterTable::cyclic(m));
                const auto cov = GaloisCover::abstract_cover(t, g, {});
                const auto expect = VirtualModule::trivial_class(t) +
                                    VirtualModule::regular_class(t) * (g - 1);
                CHECK(cov.h0_canonical() == expect);
                CHECK(cov.genus_upstairs() == m * (g - 1) + 1);
            }
        }
    }
    SECTION("trivial group, any base genus") {
        const auto cov = GaloisCover::trivial_cover(2);
        CHECK(cov.h0_canonical().dimension() == 2);
        CHECK(cov.chi_structure_sheaf() ==
              VirtualModule::trivial_class(cov.table_ptr()) * (1 - 2));
    }
    SECTION("dihedral cover branched at four reflection points") {
        auto d3 = std::make_shared<const CharacterTable>(CharacterTable::dihedral(3));
        const auto cov = GaloisCover::abstract_cover(d3, 0,
                                                     {{1, std::string("p1"), 0, 3},
                                                      {1, std::string("p2"), 0, 4},
                                                      {1, std::string("p3"), 0, 5},
                                                      {1, std::string("p4"), 0, 3}});
        CHECK(cov.genus_upstairs() == 1);
        // H^0(K) is the determinant character of the reflection action
        CHECK(cov.h0_canonical() == vm(d3, {0, 1, 0}));
    }
}

TEST_CASE("cover report invariants") {
    for (int m : {2, 3, 4, 5, 6}) {
        for (std::vector<int> roots :
             {std::vector<int>{0, 1}, {1, 2}, {0, 1, 2}, {0, 1, 2, 3}, {-1, 1, 2, 5}, {0, 1, 2, 3, 4, 5}}) {
            const auto cov = GaloisCover::superelliptic(m, from_roots(roots));
            const auto rep = cover_report(cov);
            INFO("m=" << m << " deg f=" << roots.size());
            CHECK(rep.s == static_cast<int>(roots.size()) + (cov.branches().size() == 2 ? 1 : 0));
            CHECK(rep.h0_K.dimension() == rep.genus_up);
            CHECK(rep.h0_K.non_negative());
            CHECK(rep.chi_O.dimension() == 1 - rep.genus_up);
            CHECK(rep.chi_O == VirtualModule::trivial_class(cov.table_ptr()) - rep.h0_K);
            int fiber_points = 0;
            for (const auto& b : cov.branches()) fiber_points += b.multiplicity * (m / b.e);
            CHECK(rep.h0_OZ.dimension() == fiber_points);
            // ramification identity behind the canonical-module computation
            CHECK(rep.h0_K + rep.h0_K.dual() + rep.h0_OZ ==
                  VirtualModule::trivial_class(cov.table_ptr()) * 2 +
                      VirtualModule::regular_class(cov.table_ptr()) * (rep.s - 2));
        }
    }
}
