#pragma once

#include "flagflow/root_system.hpp"

#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

namespace flagflow {

/// Flag manifold X = G/P given by a root system and a parabolic subset of
/// simple-root indices. Everything derived from the parabolic choice is
/// cached at construction.
class FlagManifold {
  public:
    FlagManifold(RootSystem rs, std::set<int> parabolic)
        : rs_(std::move(rs)), parabolic_(std::move(parabolic)) {
        for (int i : parabolic_)
            if (i < 0 || i >= rs_.rank())
                throw std::out_of_range("parabolic index " + std::to_string(i) + " out of range");
        for (int i = 0; i < rs_.rank(); ++i)
            if (!parabolic_.contains(i)) complement_simples_.push_back(i);
        // alpha lies in R_P iff its simple-root support is inside Pi_P
        for (const Root& r : rs_.positive_roots()) {
            bool in_levi = true;
            for (int i = 0; i < rs_.rank(); ++i)
                if (r.coords[i] != 0 && !parabolic_.contains(i)) in_levi = false;
            if (!in_levi) complement_roots_.push_back(r);
        }
        delta_p_ = Weight::zero(rs_.rank());
        for (const Root& r : complement_roots_) delta_p_ += rs_.root_as_weight(r);
    }

    const RootSystem& root_system() const { return rs_; }
    const std::set<int>& parabolic() const { return parabolic_; }
    const std::vector<int>& complement_simples() const { return complement_simples_; }
    const std::vector<Root>& complement_positive_roots() const { return complement_roots_; }

    int dim_complex() const { return static_cast<int>(complement_roots_.size()); }
    int picard_rank() const { return static_cast<int>(complement_simples_.size()); }

    /// Sum of the positive roots outside R_P, in the fundamental-weight basis;
    /// the anticanonical class of X.
    const Weight& delta_p() const { return delta_p_; }

    /// gcd of <delta_P, alpha^v> over the complement simple roots.
    Int fano_index() const {
        if (picard_rank() == 0) throw std::domain_error("Fano index undefined for a point");
        Int g = 0;
        for (int i : complement_simples_) {
            Rat p = rs_.pairing(delta_p_, rs_.simple_root(i));
            if (denominator(p) != 1 || p <= 0)
                throw std::logic_error("delta_P pairing against a complement coroot is not a positive integer");
            g = gcd(g, numerator(p));
        }
        return g;
    }

  private:
    RootSystem rs_;
    std::set<int> parabolic_;
    std::vector<int> complement_simples_;
    std::vector<Root> complement_roots_;
    Weight delta_p_;
};

inline FlagManifold build_flag(RootSystem rs, std::set<int> parabolic) {
    return FlagManifold(std::move(rs), std::move(parabolic));
}

}  // namespace flagflow
