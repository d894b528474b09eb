#include "flagflow/flag_manifold.hpp"

#include <doctest.h>

using namespace flagflow;

namespace {

FlagManifold full_flag(Family f, int n) {
    return FlagManifold(build_root_system(SimpleType(f, n)), {});
}

}  // namespace

TEST_CASE("A2 full flag is the Fano threefold P(T_P2)") {
    const FlagManifold X = full_flag(Family::A, 2);
    CHECK(X.dim_complex() == 3);
    CHECK(X.picard_rank() == 2);
    CHECK(X.delta_p().coords == RatVec{Rat(2), Rat(2)});
    CHECK(X.fano_index() == 2);
}

TEST_CASE("A2 with Pi_P = {alpha_2} is P^2") {
    const FlagManifold X(build_root_system(SimpleType(Family::A, 2)), {1});
    CHECK(X.complement_positive_roots() == std::vector<Root>{{{1, 0}}, {{1, 1}}});
    CHECK(X.dim_complex() == 2);
    CHECK(X.picard_rank() == 1);
    // delta_P = alpha_1 + (alpha_1 + alpha_2) = 2 alpha_1 + alpha_2 = 3 w_1
    CHECK(X.delta_p().coords == RatVec{Rat(3), Rat(0)});
    CHECK(X.fano_index() == 3);
}

TEST_CASE("full parabolic gives the degenerate point") {
    const FlagManifold X(build_root_system(SimpleType(Family::A, 2)), {0, 1});
    CHECK(X.dim_complex() == 0);
    CHECK(X.picard_rank() == 0);
    CHECK(X.delta_p() == Weight::zero(2));
    CHECK_THROWS_AS(X.fano_index(), std::domain_error);
}

TEST_CASE("full flag dimension equals the positive-root count") {
    for (const SimpleType t :
         {SimpleType(Family::A, 4), SimpleType(Family::B, 3), SimpleType(Family::D, 4),
          SimpleType(Family::G, 2), SimpleType(Family::F, 4)}) {
        const FlagManifold X(build_root_system(t), {});
        CHECK(X.dim_complex() == static_cast<int>(X.root_system().positive_roots().size()));
        CHECK(X.picard_rank() == t.rank);
        // delta_P of the full flag is 2 sum of fundamental weights
        for (int i = 0; i < t.rank; ++i) CHECK(X.delta_p().coords[i] == 2);
    }
}

TEST_CASE("delta_P pairs positively with complement simples, vanishes on Pi_P") {
    for (int mask = 0; mask < 8; ++mask) {
        std::set<int> par;
        for (int i = 0; i < 3; ++i)
            if (mask & (1 << i)) par.insert(i);
        const FlagManifold X(build_root_system(SimpleType(Family::A, 3)), par);
        CHECK(X.picard_rank() + static_cast<int>(par.size()) == 3);
        for (int i : X.complement_simples())
            CHECK(X.root_system().pairing(X.delta_p(), X.root_system().simple_root(i)) > 0);
        for (int i : par) CHECK(X.delta_p().coords[i] == 0);
        if (X.picard_rank() > 0) {
            const Int idx = X.fano_index();
            for (int i : X.complement_simples()) {
                const Rat p = X.root_system().pairing(X.delta_p(), X.root_system().simple_root(i));
                CHECK(denominator(Rat(p / idx)) == 1);  // I(X) divides every pairing
            }
        }
    }
}

TEST_CASE("A3 full flag has Fano index 2") {
    CHECK(full_flag(Family::A, 3).fano_index() == 2);
}

TEST_CASE("parabolic indices out of range are rejected") {
    CHECK_THROWS_AS(FlagManifold(build_root_system(SimpleType(Family::A, 2)), {5}),
                    std::out_of_range);
}
