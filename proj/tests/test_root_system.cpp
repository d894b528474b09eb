#include "flagflow/root_system.hpp"

#include "test_util.hpp"

#include <doctest.h>

using namespace flagflow;
namespace tu = flagflow::testutil;

namespace {

std::vector<SimpleType> supported_types() {
    std::vector<SimpleType> out;
    for (int n = 1; n <= 8; ++n) out.emplace_back(Family::A, n);
    for (int n = 2; n <= 4; ++n) out.emplace_back(Family::B, n);
    for (int n = 3; n <= 4; ++n) out.emplace_back(Family::C, n);
    out.emplace_back(Family::D, 4);
    out.emplace_back(Family::G, 2);
    out.emplace_back(Family::F, 4);
    out.emplace_back(Family::E, 6);
    out.emplace_back(Family::E, 7);
    out.emplace_back(Family::E, 8);
    return out;
}

}  // namespace

TEST_CASE("simple type table rejects invalid pairs") {
    CHECK_THROWS_AS(SimpleType(Family::B, 1), std::invalid_argument);
    CHECK_THROWS_AS(SimpleType(Family::C, 2), std::invalid_argument);
    CHECK_THROWS_AS(SimpleType(Family::D, 3), std::invalid_argument);
    CHECK_THROWS_AS(SimpleType(Family::E, 5), std::invalid_argument);
    CHECK_THROWS_AS(SimpleType(Family::E, 9), std::invalid_argument);
    CHECK_THROWS_AS(SimpleType(Family::F, 3), std::invalid_argument);
    CHECK_THROWS_AS(SimpleType(Family::G, 3), std::invalid_argument);
    CHECK_THROWS_AS(SimpleType(Family::A, 0), std::invalid_argument);
    CHECK_NOTHROW(SimpleType(Family::A, 1));
    CHECK_NOTHROW(SimpleType(Family::G, 2));
}

TEST_CASE("A2 positive roots and Cartan matrix") {
    const RootSystem rs = build_root_system(SimpleType(Family::A, 2));
    CHECK(rs.cartan_matrix() == std::vector<std::vector<int>>{{2, -1}, {-1, 2}});
    CHECK(rs.positive_roots() == std::vector<Root>{{{0, 1}}, {{1, 0}}, {{1, 1}}});
}

TEST_CASE("A1 has a single positive root") {
    const RootSystem rs = build_root_system(SimpleType(Family::A, 1));
    CHECK(rs.cartan_matrix() == std::vector<std::vector<int>>{{2}});
    CHECK(rs.positive_roots() == std::vector<Root>{{{1}}});
}

TEST_CASE("B2: roots, symmetrizers, Gram symmetry") {
    // hand-run closure with alpha_2 short: alpha_1, alpha_2, alpha_1+alpha_2,
    // alpha_1+2alpha_2
    const RootSystem rs = build_root_system(SimpleType(Family::B, 2));
    CHECK(rs.positive_roots() == std::vector<Root>{{{0, 1}}, {{1, 0}}, {{1, 1}}, {{1, 2}}});
    CHECK(rs.symmetrizers() == std::vector<int>{2, 1});
    // G_ij = d_j C_ij must be the symmetric Gram matrix
    const auto& c = rs.cartan_matrix();
    const auto& d = rs.symmetrizers();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(d[j] * c[i][j] == d[i] * c[j][i]);
    CHECK(c[0][0] == 2);
    CHECK(c[1][1] == 2);
    CHECK(c[0][1] * c[1][0] == 2);
}

TEST_CASE("positive-root counts match the closed forms") {
    for (const SimpleType& t : supported_types()) {
        const RootSystem rs = build_root_system(t);
        CAPTURE(t.name());
        CHECK(static_cast<int>(rs.positive_roots().size()) == positive_root_count(t));
        for (const Root& r : rs.positive_roots()) {
            bool nonzero = false;
            for (int m : r.coords) {
                CHECK(m >= 0);
                if (m != 0) nonzero = true;
            }
            CHECK(nonzero);
        }
    }
}

TEST_CASE("Gram symmetry and Cartan diagonal for every type") {
    for (const SimpleType& t : supported_types()) {
        const RootSystem rs = build_root_system(t);
        const auto& c = rs.cartan_matrix();
        const auto& d = rs.symmetrizers();
        for (int i = 0; i < t.rank; ++i) {
            CHECK(c[i][i] == 2);
            CHECK(d[i] > 0);
            for (int j = 0; j < t.rank; ++j) {
                if (i != j) CHECK(c[i][j] <= 0);
                CHECK(d[j] * c[i][j] == d[i] * c[j][i]);
            }
        }
    }
}

TEST_CASE("pairing of fundamental weights against simple coroots is Kronecker delta") {
    for (const SimpleType& t : supported_types()) {
        const RootSystem rs = build_root_system(t);
        for (int i = 0; i < t.rank; ++i)
            for (int j = 0; j < t.rank; ++j)
                CHECK(rs.pairing(Weight::fundamental(t.rank, i), rs.simple_root(j)) ==
                      (i == j ? 1 : 0));
    }
}

TEST_CASE("simple roots expand to Cartan rows") {
    for (const SimpleType& t : {SimpleType(Family::A, 3), SimpleType(Family::B, 3),
                                 SimpleType(Family::G, 2), SimpleType(Family::F, 4)}) {
        const RootSystem rs = build_root_system(t);
        for (int i = 0; i < t.rank; ++i) {
            const Weight w = rs.simple_root_as_weight(i);
            for (int j = 0; j < t.rank; ++j) {
                CHECK(w.coords[j] == rs.cartan_matrix()[i][j]);
                CHECK(rs.pairing(w, rs.simple_root(j)) == rs.cartan_matrix()[i][j]);
            }
        }
    }
}

TEST_CASE("A2 example pairings") {
    const RootSystem rs = build_root_system(SimpleType(Family::A, 2));
    const Root a3{{1, 1}};
    CHECK(rs.pairing(Weight::fundamental(2, 0), rs.simple_root(0)) == 1);
    CHECK(rs.pairing(Weight::fundamental(2, 0), rs.simple_root(1)) == 0);
    for (int rep = 0; rep < 20; ++rep) {
        const Rat a = tu::random_rational(-9, 9);
        const Rat b = tu::random_rational(-9, 9);
        CHECK(rs.pairing(Weight(RatVec{a, b}), a3) == a + b);
    }
}

TEST_CASE("pairing is linear in the weight argument") {
    for (const SimpleType& t : {SimpleType(Family::B, 3), SimpleType(Family::G, 2)}) {
        const RootSystem rs = build_root_system(t);
        for (int rep = 0; rep < 25; ++rep) {
            RatVec u(t.rank), v(t.rank);
            for (int i = 0; i < t.rank; ++i) {
                u[i] = tu::random_rational(-6, 6);
                v[i] = tu::random_rational(-6, 6);
            }
            Weight sum(u);
            sum += Weight(v);
            for (const Root& alpha : rs.positive_roots())
                CHECK(rs.pairing(sum, alpha) ==
                      rs.pairing(Weight(u), alpha) + rs.pairing(Weight(v), alpha));
        }
    }
}

TEST_CASE("reflections send positive roots to +- positive roots") {
    for (const SimpleType& t : supported_types()) {
        const RootSystem rs = build_root_system(t);
        for (const Root& beta : rs.positive_roots())
            for (int i = 0; i < t.rank; ++i) CHECK(rs.is_root(rs.reflect(beta, i)));
    }
}

TEST_CASE("pairing rejects non-roots") {
    const RootSystem rs = build_root_system(SimpleType(Family::A, 2));
    CHECK_THROWS_AS(rs.pairing(Weight::fundamental(2, 0), Root{{2, 0}}), std::domain_error);
    CHECK_THROWS_AS(rs.pairing(Weight::fundamental(2, 0), Root{{0, 0}}), std::domain_error);
    CHECK_NOTHROW(rs.pairing(Weight::fundamental(2, 0), Root{{-1, -1}}));  // negative root
}
