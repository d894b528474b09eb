#pragma once

#include "flagflow/invariant_geometry.hpp"
#include "flagflow/linalg.hpp"

#include <stdexcept>
#include <vector>

namespace flagflow {

/// A line bundle on X, identified with its class lambda(E) = sum s_alpha
/// w_alpha, integer coordinates over Pi \ Pi_P.
struct LineBundle {
    IntVec weight;

    LineBundle() = default;
    explicit LineBundle(IntVec w) : weight(std::move(w)) {}
    static LineBundle trivial(const FlagManifold& X) {
        return LineBundle(IntVec(X.picard_rank(), 0));
    }

    InvariantForm curvature_form() const {
        RatVec c(weight.size());
        for (std::size_t i = 0; i < weight.size(); ++i) c[i] = Rat(weight[i]);
        return InvariantForm(std::move(c));
    }
    friend bool operator==(const LineBundle&, const LineBundle&) = default;
};

inline LineBundle tensor(const FlagManifold& X, const LineBundle& a, const LineBundle& b) {
    const auto rho = static_cast<std::size_t>(X.picard_rank());
    if (a.weight.size() != rho || b.weight.size() != rho)
        throw std::domain_error("tensor: bundles do not live on the same base");
    IntVec w(rho);
    for (std::size_t i = 0; i < rho; ++i) w[i] = a.weight[i] + b.weight[i];
    return LineBundle(std::move(w));
}

inline LineBundle dual(const LineBundle& a) {
    IntVec w(a.weight.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = -a.weight[i];
    return LineBundle(std::move(w));
}

/// O_X(k): the k-th root power of the anticanonical bundle, weight
/// k * delta_P / I(X). Integral by the definition of the Fano index.
inline LineBundle anticanonical_root(const FlagManifold& X, const Int& k) {
    const Int index = X.fano_index();
    const RatVec dp = restrict_form(X, X.delta_p());
    IntVec w(dp.size());
    for (std::size_t i = 0; i < dp.size(); ++i) {
        const Rat s = k * dp[i] / index;
        if (denominator(s) != 1)
            throw std::logic_error("k delta_P / I(X) is not integral");
        w[i] = numerator(s);
    }
    return LineBundle(std::move(w));
}

/// The degree functional of a positive invariant metric: deg(E) vanishes iff
/// coeffs . weight(E) = 0, with coeffs_alpha = Lambda_omega(Omega_alpha).
struct DegreeFunctional {
    RatVec coeffs;

    Rat apply(const LineBundle& e) const {
        if (e.weight.size() != coeffs.size())
            throw std::domain_error("degree: bundle does not live on the functional's base");
        Rat acc = 0;
        for (std::size_t i = 0; i < coeffs.size(); ++i) acc += coeffs[i] * e.weight[i];
        return acc;
    }
};

inline DegreeFunctional degree_functional(const FlagManifold& X, const InvariantMetric& omega) {
    RatVec coeffs;
    coeffs.reserve(X.picard_rank());
    for (int k = 0; k < X.picard_rank(); ++k) {
        RatVec unit(X.picard_rank(), Rat(0));
        unit[k] = 1;
        coeffs.push_back(lambda_trace(X, omega, InvariantForm(std::move(unit))));
    }
    return DegreeFunctional{std::move(coeffs)};
}

/// Basis of Pic0_omega(X), the degree-zero sublattice. Denominators are
/// cleared and the saturated integer kernel is taken, so the basis generates
/// the full degree-zero lattice.
inline std::vector<LineBundle> pic0_basis(const FlagManifold& X, const InvariantMetric& omega) {
    const DegreeFunctional f = degree_functional(X, omega);
    const std::size_t rho = f.coeffs.size();
    if (rho == 0) return {};
    Int lcm_den = 1;
    for (const Rat& c : f.coeffs) lcm_den = lcm(lcm_den, denominator(c));
    IntVec row(rho);
    for (std::size_t i = 0; i < rho; ++i)
        row[i] = numerator(f.coeffs[i]) * (lcm_den / denominator(f.coeffs[i]));
    std::vector<LineBundle> basis;
    for (auto& v : integer_kernel_basis({std::move(row)}, rho))
        basis.push_back(LineBundle(std::move(v)));
    return basis;
}

}  // namespace flagflow
