#pragma once

#include "flagflow/flag_manifold.hpp"

#include <stdexcept>
#include <vector>

namespace flagflow {

/// Class of an invariant (1,1)-form, as rational coordinates in the basis
/// {Omega_alpha : alpha in Pi \ Pi_P}. Forms need not be positive.
struct InvariantForm {
    RatVec coords;

    InvariantForm() = default;
    explicit InvariantForm(RatVec c) : coords(std::move(c)) {}
    friend bool operator==(const InvariantForm&, const InvariantForm&) = default;
};

/// Embed complement coordinates into a full weight (zero on Pi_P).
inline Weight embed_form(const FlagManifold& X, const RatVec& coords) {
    if (coords.size() != X.complement_simples().size())
        throw std::invalid_argument("form coordinate count does not match Picard rank");
    Weight w = Weight::zero(X.root_system().rank());
    for (std::size_t k = 0; k < coords.size(); ++k)
        w.coords[X.complement_simples()[k]] = coords[k];
    return w;
}

/// Restrict a weight supported on Pi \ Pi_P to complement coordinates.
inline RatVec restrict_form(const FlagManifold& X, const Weight& w) {
    for (int i : X.parabolic())
        if (w.coords[i] != 0)
            throw std::invalid_argument("weight has a nonzero coordinate on Pi_P");
    RatVec out;
    out.reserve(X.complement_simples().size());
    for (int i : X.complement_simples()) out.push_back(w.coords[i]);
    return out;
}

inline bool is_positive_metric(const FlagManifold& X, const RatVec& coords) {
    const Weight w = embed_form(X, coords);
    for (const Root& alpha : X.complement_positive_roots())
        if (X.root_system().pairing(w, alpha) <= 0) return false;
    return true;
}

/// An invariant Kaehler metric: a weight vector pairing positively with every
/// complement positive root.
struct InvariantMetric {
    RatVec coords;

    InvariantMetric(const FlagManifold& X, RatVec c) : coords(std::move(c)) {
        if (!is_positive_metric(X, coords))
            throw std::domain_error("metric weight is not positive on the complement roots");
    }
    friend bool operator==(const InvariantMetric&, const InvariantMetric&) = default;
};

/// Kaehler-Einstein data: omega_0 = lambda * delta_P.
struct KEData {
    Rat lambda;
    InvariantMetric metric;
};

/// The anticanonical class delta_P as an invariant form; this is the weight
/// of the Kaehler-Ricci form of every invariant Kaehler metric.
inline InvariantForm ricci_weight(const FlagManifold& X) {
    return InvariantForm(restrict_form(X, X.delta_p()));
}

inline KEData ke_metric(const FlagManifold& X, const Rat& lambda) {
    if (X.picard_rank() < 1) throw std::domain_error("KE metric needs Picard rank >= 1");
    if (lambda <= 0) throw std::domain_error("Einstein constant must be positive");
    return KEData{lambda, InvariantMetric(X, lambda * ricci_weight(X).coords)};
}

/// Lefschetz trace on invariant forms:
///   Lambda_omega(psi) = sum over alpha in R+ \ R_P of
///                       <psi, alpha^v> / <omega, alpha^v>.
inline Rat lambda_trace(const FlagManifold& X, const InvariantMetric& omega,
                        const InvariantForm& psi) {
    const Weight wo = embed_form(X, omega.coords);
    const Weight wp = embed_form(X, psi.coords);
    Rat acc = 0;
    for (const Root& alpha : X.complement_positive_roots()) {
        const Rat den = X.root_system().pairing(wo, alpha);
        if (den <= 0) throw std::domain_error("metric is not positive on a complement root");
        acc += X.root_system().pairing(wp, alpha) / den;
    }
    return acc;
}

/// Lambda_{omega_0}(psi_1) for psi_1 = (k/I(X)) delta_P against omega_0 =
/// lambda delta_P. Closed form k dim_C(X) / (lambda I(X)), cross-checked
/// against the trace route.
inline Rat lambda_of_anticanonical_curvature(const FlagManifold& X, const KEData& ke,
                                             const Int& k) {
    const Int index = X.fano_index();
    const Rat closed_form = Rat(k * X.dim_complex()) / (ke.lambda * index);
    const InvariantForm psi1(Rat(k, index) * ricci_weight(X).coords);
    const Rat traced = lambda_trace(X, ke.metric, psi1);
    if (traced != closed_form)
        throw std::logic_error("anticanonical curvature trace disagrees with closed form");
    return closed_form;
}

}  // namespace flagflow
