#pragma once

#include "flagflow/scenario.hpp"

#include <functional>
#include <iostream>
#include <string>

namespace flagflow {

/// Golden suite over the P(T_P2) = SU(3)/T^2 worked example: exact fixture
/// values, flat-parameter formulas, flow residuals, balanced certificates
/// and Gromov-Hausdorff limits. Prints one PASS/FAIL line per check.
inline bool run_selftest(std::ostream& out) {
    bool all_ok = true;
    auto check = [&](const std::string& name, const std::function<bool()>& body) {
        bool ok = false;
        std::string note;
        try {
            ok = body();
        } catch (const std::exception& e) {
            note = std::string(" (") + e.what() + ")";
        }
        out << (ok ? "PASS " : "FAIL ") << name << note << "\n";
        all_ok = all_ok && ok;
    };

    const FlagManifold X(build_root_system(SimpleType(Family::A, 2)), {});
    const Rat lam = 1;
    const Int k = 2;
    const LineBundle f1(IntVec{-1, 1});                          // F_1
    const auto cfgA = TorusBundleConfig::theorem_a(X, lam, k, {f1});
    const LineBundle fa(IntVec{-1, 1}), fb(IntVec{-2, 2});       // E_{a,b}, a=1, b=2
    const auto cfgB = TorusBundleConfig::theorem_b(X, lam, {fa, fb});

    check("cartan matrix A2", [&] {
        return X.root_system().cartan_matrix() ==
               std::vector<std::vector<int>>{{2, -1}, {-1, 2}};
    });
    check("positive roots A2", [&] {
        return X.root_system().positive_roots() ==
               std::vector<Root>{{{0, 1}}, {{1, 0}}, {{1, 1}}};
    });
    check("pairing <a w1 + b w2, a3^v> = a + b", [&] {
        const Weight w(RatVec{Rat(5), Rat(7)});
        return X.root_system().pairing(w, Root{{1, 1}}) == 12;
    });
    check("delta_B = (2,2)", [&] { return X.delta_p().coords == RatVec{Rat(2), Rat(2)}; });
    check("Fano index 2", [&] { return X.fano_index() == 2; });
    check("KE weight (2,2)", [&] {
        return ke_metric(X, 1).metric.coords == RatVec{Rat(2), Rat(2)};
    });
    check("degree functional (3/4, 3/4)", [&] {
        return degree_functional(X, ke_metric(X, 1).metric).coeffs ==
               RatVec{Rat(3, 4), Rat(3, 4)};
    });
    check("Pic0 basis {(-1,1)}", [&] {
        const auto basis = pic0_basis(X, ke_metric(X, 1).metric);
        return basis.size() == 1 && basis[0].weight == IntVec{-1, 1};
    });
    check("t-flat parameter t = 1 - (8/3)(lambda - s)/k^2", [&] {
        for (const Rat& s : {Rat(0), Rat(1, 2), Rat(-3)}) {
            if (t_flat_parameter(cfgA, s) != 1 - Rat(8, 3) * (lam - s) / (k * k)) return false;
        }
        return t_flat_parameter(cfgA, 0) == Rat(1, 3);
    });
    check("Bismut flat time s = lambda - (3/4)k^2", [&] {
        return flat_time(cfgA, -1) == lam - Rat(3, 4) * k * k;
    });
    check("Lichnerowicz flat time s = lambda - (3/8)k^2", [&] {
        return flat_time(cfgA, 0) == lam - Rat(3, 8) * k * k;
    });
    check("flow residual zero (Theorem B, all t)", [&] {
        for (const Rat& t : {Rat(-2), Rat(-1), Rat(0), Rat(1, 2), Rat(1), Rat(3)})
            if (!is_zero(verify_flow_ode(cfgB, t, Rat(1, 3), Rat(1, 7)))) return false;
        return true;
    });
    check("flow residual zero (Theorem A, t = 1)", [&] {
        return is_zero(verify_flow_ode(cfgA, 1, Rat(-2), Rat(1, 5)));
    });
    check("balanced for Theorem B, unbalanced for Theorem A", [&] {
        return is_balanced(cfgB, Rat(1, 2)).balanced &&
               !is_balanced(cfgA, Rat(1, 2)).balanced;
    });
    check("E_{a,b} collapses to S^1", [&] {
        const auto r = gh_limit(cfgB);
        return r.rank == 1 && r.closed && r.gh_limit_dim == 1 && r.limit_label == "S^1";
    });
    check("E_{k,l} collapses to a point", [&] {
        const auto r = gh_limit(cfgA);
        return r.rank == 2 && r.gh_limit_dim == 0 && r.limit_label == "point";
    });
    return all_ok;
}

}  // namespace flagflow
