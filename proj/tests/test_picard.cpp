#include "flagflow/picard.hpp"

#include "test_util.hpp"

#include <doctest.h>

using namespace flagflow;
namespace tu = flagflow::testutil;

namespace {

FlagManifold a2_full() { return FlagManifold(build_root_system(SimpleType(Family::A, 2)), {}); }

// independent oracle: all degree-zero integer vectors in the box [-side, side]^rho
std::vector<IntVec> degree_zero_box(const DegreeFunctional& f, int side) {
    const int rho = static_cast<int>(f.coeffs.size());
    std::vector<IntVec> out;
    std::vector<int> v(rho, -side);
    while (true) {
        Rat deg = 0;
        for (int i = 0; i < rho; ++i) deg += f.coeffs[i] * v[i];
        if (deg == 0) out.push_back(IntVec(v.begin(), v.end()));
        int i = 0;
        while (i < rho && v[i] == side) v[i++] = -side;
        if (i == rho) break;
        ++v[i];
    }
    return out;
}

}  // namespace

TEST_CASE("tensor product and dual") {
    const FlagManifold X = a2_full();
    CHECK(tensor(X, LineBundle(IntVec{-1, 1}), LineBundle(IntVec{1, 1})).weight ==
          IntVec{0, 2});
    // F_l = O_{a1}(-l) (x) O_{a2}(l)
    const LineBundle o1(IntVec{-3, 0}), o2(IntVec{0, 3});
    CHECK(tensor(X, o1, o2).weight == IntVec{-3, 3});
    const LineBundle a(IntVec{4, -7});
    CHECK(tensor(X, a, dual(a)) == LineBundle::trivial(X));
    CHECK(dual(dual(a)) == a);
    CHECK_THROWS_AS(tensor(X, LineBundle(IntVec{1}), a), std::domain_error);
    // commutative + associative
    const LineBundle b(IntVec{-2, 5}), c(IntVec{1, 1});
    CHECK(tensor(X, a, b) == tensor(X, b, a));
    CHECK(tensor(X, tensor(X, a, b), c) == tensor(X, a, tensor(X, b, c)));
}

TEST_CASE("anticanonical roots O_X(k)") {
    const FlagManifold X = a2_full();
    CHECK(anticanonical_root(X, 1).weight == IntVec{1, 1});
    CHECK(anticanonical_root(X, 5).weight == IntVec{5, 5});
    const FlagManifold p2(build_root_system(SimpleType(Family::A, 2)), {1});
    CHECK(anticanonical_root(p2, 1).weight == IntVec{1});
    const FlagManifold point(build_root_system(SimpleType(Family::A, 2)), {0, 1});
    CHECK_THROWS_AS(anticanonical_root(point, 1), std::domain_error);
}

TEST_CASE("degree functional of the KE metric on P(T_P2)") {
    const FlagManifold X = a2_full();
    const DegreeFunctional f = degree_functional(X, ke_metric(X, 1).metric);
    CHECK(f.coeffs == RatVec{Rat(3, 4), Rat(3, 4)});
    // scaling the metric by c scales the functional by 1/c
    for (int rep = 0; rep < 10; ++rep) {
        const Rat c = tu::random_positive_rational();
        const InvariantMetric scaled(X, c * ke_metric(X, 1).metric.coords);
        CHECK(degree_functional(X, scaled).coeffs == RatVec{Rat(3, 4) / c, Rat(3, 4) / c});
    }
    CHECK(f.apply(LineBundle::trivial(X)) == 0);
}

TEST_CASE("pic0 basis on P(T_P2) and P^2") {
    const FlagManifold X = a2_full();
    const auto basis = pic0_basis(X, ke_metric(X, 1).metric);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0].weight == IntVec{-1, 1});

    const FlagManifold p2(build_root_system(SimpleType(Family::A, 2)), {1});
    CHECK(pic0_basis(p2, ke_metric(p2, 1).metric).empty());
}

TEST_CASE("pic0 basis is invariant under metric scaling") {
    const FlagManifold X(build_root_system(SimpleType(Family::A, 3)), {});
    const KEData ke = ke_metric(X, 1);
    const auto base = pic0_basis(X, ke.metric);
    for (const Rat& c : {Rat(2), Rat(1, 3), Rat(7, 5)}) {
        const InvariantMetric scaled(X, c * ke.metric.coords);
        CHECK(pic0_basis(X, scaled) == base);
    }
}

TEST_CASE("pic0 basis: degree zero and saturation by brute force") {
    for (const SimpleType t : {SimpleType(Family::A, 2), SimpleType(Family::A, 3)}) {
        const FlagManifold X(build_root_system(t), {});
        const KEData ke = ke_metric(X, 1);
        const DegreeFunctional f = degree_functional(X, ke.metric);
        const auto basis = pic0_basis(X, ke.metric);
        CHECK(static_cast<int>(basis.size()) == X.picard_rank() - 1);
        std::vector<IntVec> lattice;
        for (const auto& b : basis) {
            CHECK(f.apply(b) == 0);
            lattice.push_back(b.weight);
        }
        // every degree-zero vector in the box lies in the basis lattice
        for (const IntVec& v : degree_zero_box(f, 6)) CHECK(in_lattice(lattice, v));
        // and the functional kills nothing outside it: a vector of nonzero
        // degree is never in the lattice
        for (int rep = 0; rep < 50; ++rep) {
            IntVec v(X.picard_rank());
            for (auto& x : v) x = tu::random_int(-6, 6);
            Rat deg = 0;
            for (std::size_t i = 0; i < v.size(); ++i) deg += f.coeffs[i] * v[i];
            if (deg != 0) CHECK(!in_lattice(lattice, v));
        }
    }
}

TEST_CASE("kernel basis normalization is deterministic") {
    // primitive vectors, positive leading entry, lex order
    const auto basis = integer_kernel_basis({IntVec{Int(2), Int(2), Int(2)}}, 3);
    REQUIRE(basis.size() == 2);
    for (const auto& v : basis) {
        Int g = 0;
        for (const Int& x : v) g = gcd(g, x);
        CHECK(g == 1);
        for (auto it = v.rbegin(); it != v.rend(); ++it) {
            if (*it != 0) {
                CHECK(*it > 0);
                break;
            }
        }
    }
    CHECK(basis[0] < basis[1]);
}
