#pragma once

#include "flagflow/bundle_flow.hpp"
#include "flagflow/linalg.hpp"

#include <string>
#include <vector>

namespace flagflow {

/// Pairing matrix of the connection curvature: row j lists
/// <lambda(psi_j), alpha^v> over the complement positive roots. Its row
/// space is the holonomy Lie algebra of the principal connection.
inline std::vector<RatVec> holonomy_matrix(const TorusBundleConfig& cfg) {
    const FlagManifold& X = cfg.base();
    std::vector<RatVec> m;
    m.reserve(cfg.curvature_weights().size());
    for (const InvariantForm& psi : cfg.curvature_weights()) {
        const Weight w = embed_form(X, psi.coords);
        RatVec row;
        row.reserve(X.complement_positive_roots().size());
        for (const Root& alpha : X.complement_positive_roots())
            row.push_back(X.root_system().pairing(w, alpha));
        m.push_back(std::move(row));
    }
    return m;
}

inline int holonomy_rank(const TorusBundleConfig& cfg) {
    return rational_rank(holonomy_matrix(cfg));
}

/// Identification of the Gromov-Hausdorff limit of the collapsing flow: the
/// fiber torus T^{2n} collapses along the holonomy directions, leaving
/// T^{2n - l} with the normal metric (the metric itself is not computed).
struct HolonomyReport {
    std::vector<RatVec> matrix;
    int rank = 0;
    bool closed = false;
    int gh_limit_dim = 0;
    std::string limit_label;
};

inline HolonomyReport gh_limit(const TorusBundleConfig& cfg) {
    HolonomyReport report;
    report.matrix = holonomy_matrix(cfg);
    report.rank = rational_rank(report.matrix);
    // integral curvature weights span a rational row space, hence a closed
    // subtorus; verified rather than assumed
    report.closed = true;
    for (const InvariantForm& psi : cfg.curvature_weights())
        for (const Rat& c : psi.coords)
            if (denominator(c) != 1) report.closed = false;
    report.gh_limit_dim = cfg.fiber_torus_dim() - report.rank;
    if (report.gh_limit_dim == 0)
        report.limit_label = "point";
    else if (report.gh_limit_dim == 1)
        report.limit_label = "S^1";
    else
        report.limit_label = "T^" + std::to_string(report.gh_limit_dim);
    return report;
}

}  // namespace flagflow
