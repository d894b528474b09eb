#pragma once

#include "flagflow/picard.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace flagflow {

enum class BundleShape { TheoremA, TheoremB };

/// A principal T^{2n}-bundle U(E) over a flag manifold, built from a sum of
/// line bundles. Shape TheoremA is O_X(k) + F_1 + ... + F_{2n-1} with the
/// F_j of degree zero; shape TheoremB is F_1 + ... + F_{2n}, all of degree
/// zero. Validated exhaustively at construction; immutable afterwards.
class TorusBundleConfig {
  public:
    static TorusBundleConfig theorem_a(FlagManifold X, const Rat& lambda, const Int& k,
                                       std::vector<LineBundle> fibers) {
        if (k == 0) throw std::domain_error("Theorem A shape requires k != 0");
        if (fibers.empty() || fibers.size() % 2 == 0)
            throw std::domain_error("Theorem A shape requires an odd number (2n-1 >= 1) of degree-zero fibers");
        return TorusBundleConfig(std::move(X), lambda, BundleShape::TheoremA, k, std::move(fibers));
    }

    static TorusBundleConfig theorem_b(FlagManifold X, const Rat& lambda,
                                       std::vector<LineBundle> fibers) {
        if (fibers.size() < 2 || fibers.size() % 2 != 0)
            throw std::domain_error("Theorem B shape requires an even number (2n >= 2) of degree-zero fibers");
        return TorusBundleConfig(std::move(X), lambda, BundleShape::TheoremB, 0, std::move(fibers));
    }

    const FlagManifold& base() const { return base_; }
    const KEData& ke() const { return *ke_; }
    BundleShape shape() const { return shape_; }
    const Int& k() const { return k_; }
    const std::vector<LineBundle>& fibers() const { return fibers_; }
    const std::vector<InvariantForm>& curvature_weights() const { return psi_; }
    int fiber_torus_dim() const { return static_cast<int>(psi_.size()); }

    void check_time(const Rat& s) const {
        if (s >= ke_->lambda)
            throw std::domain_error("flow exited maximal interval (-inf, lambda)");
    }

    InvariantMetric base_metric_at(const Rat& s) const {
        check_time(s);
        return InvariantMetric(base_, (ke_->lambda - s) * restrict_form(base_, base_.delta_p()));
    }

  private:
    TorusBundleConfig(FlagManifold X, const Rat& lambda, BundleShape shape, Int k,
                      std::vector<LineBundle> fibers)
        : base_(std::move(X)), shape_(shape), k_(std::move(k)), fibers_(std::move(fibers)) {
        if (base_.picard_rank() <= 1)
            throw std::domain_error("Picard number hypothesis violated: rho(X) > 1 required");
        ke_.emplace(ke_metric(base_, lambda));
        const DegreeFunctional deg = degree_functional(base_, ke_->metric);
        for (std::size_t j = 0; j < fibers_.size(); ++j) {
            if (deg.apply(fibers_[j]) != 0)
                throw std::domain_error("fiber not in Pic0: F_" + std::to_string(j + 1));
        }
        if (shape_ == BundleShape::TheoremA)
            psi_.push_back(anticanonical_root(base_, k_).curvature_form());
        for (const LineBundle& f : fibers_) psi_.push_back(f.curvature_form());
    }

    FlagManifold base_;
    BundleShape shape_;
    Int k_;
    std::vector<LineBundle> fibers_;
    std::optional<KEData> ke_;
    std::vector<InvariantForm> psi_;
};

/// Flow snapshot Omega_s = pi*((lambda - s) p) + fiber part; the fiber part
/// is constant along the flow and never materialized.
struct FlowState {
    Rat s;
    InvariantMetric base_metric;
};

inline FlowState flow_state(const TorusBundleConfig& cfg, const Rat& s) {
    return FlowState{s, cfg.base_metric_at(s)};
}

/// Weight of the t-Gauduchon Ricci form p(Omega_s, t): coefficient * delta_P
/// pulled back from the base.
struct GauduchonRicciWeight {
    Rat coefficient;
    InvariantForm form_class;
};

inline GauduchonRicciWeight gauduchon_ricci(const TorusBundleConfig& cfg, const Rat& s,
                                            const Rat& t) {
    const FlagManifold& X = cfg.base();
    const InvariantMetric omega_s = cfg.base_metric_at(s);
    const RatVec dp = restrict_form(X, X.delta_p());

    // p(Omega_s, t) = pi*( p(omega_s, 1) + (t-1)/2 sum_j Lambda_{omega_s}(psi_j) psi_j )
    RatVec cls = dp;
    for (const InvariantForm& psi : cfg.curvature_weights()) {
        const Rat lam = lambda_trace(X, omega_s, psi);
        if (lam == 0) continue;
        cls = cls + ((t - 1) / 2 * lam) * psi.coords;
    }

    // For both shapes every contributing psi_j is proportional to delta_P,
    // so the class stays on the delta_P ray.
    Rat coeff = 0;
    for (std::size_t i = 0; i < dp.size(); ++i) {
        if (dp[i] != 0) {
            coeff = cls[i] / dp[i];
            break;
        }
    }
    if (cls != coeff * dp)
        throw std::logic_error("Gauduchon Ricci class is not proportional to delta_P");

    if (cfg.shape() == BundleShape::TheoremA) {
        // closed form 1 + (t-1) k^2 dim / (2 (lambda-s) I^2)
        const Int index = X.fano_index();
        const Rat expected = 1 + (t - 1) * cfg.k() * cfg.k() * X.dim_complex() /
                                     (2 * (cfg.ke().lambda - s) * index * index);
        if (coeff != expected)
            throw std::logic_error("Gauduchon Ricci coefficient disagrees with closed form");
    }
    return GauduchonRicciWeight{coeff, InvariantForm(std::move(cls))};
}

/// The unique Gauduchon parameter making Omega_s t-Ricci-flat:
/// t = 1 - 2 (lambda - s) I(X)^2 / (k^2 dim_C(X)).
inline Rat t_flat_parameter(const TorusBundleConfig& cfg, const Rat& s) {
    if (cfg.shape() != BundleShape::TheoremA)
        throw std::domain_error(
            "flatness parameter undefined: Ricci weight is t-independent and nonzero");
    cfg.check_time(s);
    const Int index = cfg.base().fano_index();
    return 1 - 2 * (cfg.ke().lambda - s) * index * index /
                   Rat(cfg.k() * cfg.k() * cfg.base().dim_complex());
}

/// The flow time at which Omega_s becomes t-Gauduchon Ricci-flat; exists in
/// the maximal interval only for t < 1.
inline Rat flat_time(const TorusBundleConfig& cfg, const Rat& t) {
    if (cfg.shape() != BundleShape::TheoremA)
        throw std::domain_error(
            "flatness parameter undefined: Ricci weight is t-independent and nonzero");
    if (t >= 1) throw std::domain_error("no flat time in the maximal interval");
    const Int index = cfg.base().fano_index();
    return cfg.ke().lambda -
           (1 - t) * cfg.k() * cfg.k() * cfg.base().dim_complex() / Rat(2 * index * index);
}

/// Balanced iff Lambda_{omega_s}(psi_j) = 0 for every j; the certificate
/// lists the 2n trace values.
struct BalancedCertificate {
    bool balanced;
    RatVec lambda_values;
};

inline BalancedCertificate is_balanced(const TorusBundleConfig& cfg, const Rat& s) {
    const InvariantMetric omega_s = cfg.base_metric_at(s);
    RatVec values;
    values.reserve(cfg.curvature_weights().size());
    bool ok = true;
    for (const InvariantForm& psi : cfg.curvature_weights()) {
        values.push_back(lambda_trace(cfg.base(), omega_s, psi));
        if (values.back() != 0) ok = false;
    }
    return BalancedCertificate{ok, std::move(values)};
}

/// c_1(T U(E)) always vanishes in real cohomology; it vanishes integrally
/// for Theorem A shapes iff I(X) lambda is an integer multiple of k.
struct CalabiYauReport {
    bool real_class_vanishes;          // always true for these bundles
    std::optional<bool> integral;      // absent for Theorem B shapes
};

inline CalabiYauReport calabi_yau_integrality(const TorusBundleConfig& cfg) {
    if (cfg.shape() != BundleShape::TheoremA) return CalabiYauReport{true, std::nullopt};
    const Rat ratio = cfg.base().fano_index() * cfg.ke().lambda / Rat(cfg.k());
    return CalabiYauReport{true, denominator(ratio) == 1};
}

/// Exact finite-difference residual of the flow equation at (s, t):
///   (w(s+h) - w(s)) / h + p(Omega_s, t)
/// in complement coordinates. Zero exactly when Omega_s solves the
/// t-Gauduchon flow.
inline RatVec verify_flow_ode(const TorusBundleConfig& cfg, const Rat& t, const Rat& s,
                              const Rat& h) {
    if (h == 0) throw std::domain_error("finite-difference step must be nonzero");
    const RatVec w0 = flow_state(cfg, s).base_metric.coords;
    const RatVec w1 = flow_state(cfg, s + h).base_metric.coords;
    const RatVec ricci = gauduchon_ricci(cfg, s, t).form_class.coords;
    RatVec residual(w0.size());
    for (std::size_t i = 0; i < w0.size(); ++i)
        residual[i] = (w1[i] - w0[i]) / h + ricci[i];
    return residual;
}

/// Report for the pluriclosed-flow solutions of Theorem B: the Bismut Ricci
/// weight, balanced certificates at the sample times, and the literature
/// metadata on (non-)Kaehlerness. Only Theorem B shapes qualify.
struct PluriclosedFlowReport {
    InvariantForm bismut_ricci_class;  // the t = -1 Gauduchon Ricci weight
    std::vector<Rat> samples;
    std::vector<BalancedCertificate> certificates;
    bool non_kahler = true;        // cited, not computed
    bool non_pluriclosed = true;   // cited, not computed
};

inline PluriclosedFlowReport pluriclosed_flow_report(const TorusBundleConfig& cfg,
                                                     const std::vector<Rat>& samples) {
    if (cfg.shape() != BundleShape::TheoremB)
        throw std::domain_error("pluriclosed flow report is defined for Theorem B shapes only");
    PluriclosedFlowReport report;
    report.bismut_ricci_class =
        gauduchon_ricci(cfg, samples.empty() ? Rat(0) : samples.front(), Rat(-1)).form_class;
    for (const Rat& s : samples) {
        report.samples.push_back(s);
        report.certificates.push_back(is_balanced(cfg, s));
    }
    return report;
}

}  // namespace flagflow
