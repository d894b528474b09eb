#pragma once

#include "flagflow/rational.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace flagflow {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

inline char family_letter(Family f) { return static_cast<char>(f); }

inline Family family_from_letter(char c) {
    switch (c) {
        case 'A': return Family::A;
        case 'B': return Family::B;
        case 'C': return Family::C;
        case 'D': return Family::D;
        case 'E': return Family::E;
        case 'F': return Family::F;
        case 'G': return Family::G;
        default: throw std::invalid_argument(std::string("unknown family '") + c + "'");
    }
}

/// A simple Lie type, e.g. A3 or E8. Construction rejects pairs outside the
/// finite classification table.
struct SimpleType {
    Family family;
    int rank;

    SimpleType(Family f, int n) : family(f), rank(n) {
        const bool ok = [&] {
            switch (f) {
                case Family::A: return n >= 1;
                case Family::B: return n >= 2;
                case Family::C: return n >= 3;
                case Family::D: return n >= 4;
                case Family::E: return n == 6 || n == 7 || n == 8;
                case Family::F: return n == 4;
                case Family::G: return n == 2;
            }
            return false;
        }();
        if (!ok)
            throw std::invalid_argument("invalid simple type " +
                                        std::string(1, family_letter(f)) + std::to_string(n));
    }

    std::string name() const { return std::string(1, family_letter(family)) + std::to_string(rank); }
    friend bool operator==(const SimpleType&, const SimpleType&) = default;
};

/// A root written in the simple-root basis, alpha = sum m_i alpha_i.
struct Root {
    std::vector<int> coords;
    friend auto operator<=>(const Root&, const Root&) = default;
};

/// A weight written in the fundamental-weight basis; exact rationals.
struct Weight {
    RatVec coords;

    Weight() = default;
    explicit Weight(RatVec c) : coords(std::move(c)) {}
    static Weight zero(int rank) { return Weight(RatVec(rank)); }
    static Weight fundamental(int rank, int i) {
        Weight w = zero(rank);
        w.coords[i] = 1;
        return w;
    }

    Weight& operator+=(const Weight& o) {
        for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
        return *this;
    }
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator*(const Rat& c, const Weight& w) { return Weight(c * w.coords); }
    friend bool operator==(const Weight&, const Weight&) = default;
};

namespace detail {

// Cartan matrix C_ij = <alpha_i, alpha_j^v>, Bourbaki node numbering.
// Orientation of the non-simply-laced families is fixed here and nowhere else:
//   B_n: alpha_n short          C_{n-1,n} = -2
//   C_n: alpha_n long           C_{n-1,n} = -1, C_{n,n-1} = -2
//   F_4: alpha_1, alpha_2 long  C_{23} = -2
//   G_2: alpha_1 short          C_{21} = -3
inline std::vector<std::vector<int>> cartan_table(const SimpleType& t) {
    const int n = t.rank;
    std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) c[i][i] = 2;
    auto edge = [&](int i, int j) { c[i][j] = -1; c[j][i] = -1; };
    switch (t.family) {
        case Family::A:
            for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
            break;
        case Family::B:
            for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
            c[n - 2][n - 1] = -2;
            break;
        case Family::C:
            for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
            c[n - 1][n - 2] = -2;
            break;
        case Family::D:
            for (int i = 0; i + 1 < n - 1; ++i) edge(i, i + 1);
            edge(n - 3, n - 1);
            break;
        case Family::E:
            // chain 1-3-4-5-...-n with node 2 hanging off node 4
            edge(0, 2);
            for (int i = 2; i + 1 < n; ++i) edge(i, i + 1);
            edge(1, 3);
            break;
        case Family::F:
            edge(0, 1);
            edge(1, 2);
            edge(2, 3);
            c[1][2] = -2;
            break;
        case Family::G:
            edge(0, 1);
            c[1][0] = -3;
            break;
    }
    return c;
}

// Minimal positive integer symmetrizers: d_j * C_ij = <alpha_i, alpha_j> is
// the symmetric Gram matrix, normalized so <alpha_i, alpha_i> = 2 d_i.
inline std::vector<int> symmetrizer_table(const SimpleType& t) {
    const int n = t.rank;
    std::vector<int> d(n, 1);
    switch (t.family) {
        case Family::B:
            for (int i = 0; i + 1 < n; ++i) d[i] = 2;
            break;
        case Family::C:
            d[n - 1] = 2;
            break;
        case Family::F:
            d[0] = d[1] = 2;
            break;
        case Family::G:
            d[1] = 3;
            break;
        default:
            break;
    }
    return d;
}

}  // namespace detail

/// A finite simple root system: Cartan matrix, symmetrizers, and the full
/// list of positive roots, all exact.
class RootSystem {
  public:
    explicit RootSystem(SimpleType t)
        : type_(t), cartan_(detail::cartan_table(t)), d_(detail::symmetrizer_table(t)) {
        enumerate_positive_roots();
    }

    const SimpleType& simple_type() const { return type_; }
    int rank() const { return type_.rank; }
    const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
    const std::vector<int>& symmetrizers() const { return d_; }
    const std::vector<Root>& positive_roots() const { return roots_; }

    Root simple_root(int i) const {
        check_index(i);
        Root r{std::vector<int>(rank(), 0)};
        r.coords[i] = 1;
        return r;
    }

    /// Row i of the Cartan matrix: alpha_i = sum_j C_ij w_j.
    Weight simple_root_as_weight(int i) const {
        check_index(i);
        RatVec c(rank());
        for (int j = 0; j < rank(); ++j) c[j] = cartan_[i][j];
        return Weight(std::move(c));
    }

    Weight root_as_weight(const Root& r) const {
        Weight w = Weight::zero(rank());
        for (int i = 0; i < rank(); ++i)
            if (r.coords[i] != 0) w += Rat(r.coords[i]) * simple_root_as_weight(i);
        return w;
    }

    bool is_root(const Root& r) const {
        if (static_cast<int>(r.coords.size()) != rank()) return false;
        Root neg = r;
        for (auto& m : neg.coords) m = -m;
        return std::binary_search(roots_.begin(), roots_.end(), r) ||
               std::binary_search(roots_.begin(), roots_.end(), neg);
    }

    /// <lambda, alpha^v> = 2 (lambda, alpha) / (alpha, alpha), exact.
    Rat pairing(const Weight& lambda, const Root& alpha) const {
        if (!is_root(alpha))
            throw std::domain_error("pairing: argument is not a root of " + type_.name());
        Rat scaled = 0;  // (lambda, alpha)
        for (int i = 0; i < rank(); ++i)
            scaled += lambda.coords[i] * alpha.coords[i] * d_[i];
        Int den = 0;  // (alpha, alpha) = m^T G m with G_ij = d_j C_ij
        for (int i = 0; i < rank(); ++i)
            for (int j = 0; j < rank(); ++j)
                den += Int(alpha.coords[i]) * alpha.coords[j] * d_[j] * cartan_[i][j];
        if (den == 0) throw std::logic_error("pairing: zero root norm");
        return 2 * scaled / den;
    }

    /// s_i(beta) = beta - <beta, alpha_i^v> alpha_i in root coordinates.
    Root reflect(const Root& beta, int i) const {
        check_index(i);
        long long p = 0;  // <beta, alpha_i^v> = sum_j m_j C_ji
        for (int j = 0; j < rank(); ++j) p += static_cast<long long>(beta.coords[j]) * cartan_[j][i];
        Root out = beta;
        out.coords[i] -= static_cast<int>(p);
        return out;
    }

  private:
    void check_index(int i) const {
        if (i < 0 || i >= rank())
            throw std::out_of_range("simple-root index " + std::to_string(i) + " out of range for " +
                                    type_.name());
    }

    // Reflection closure from the simple roots, keeping the dominant-coordinate
    // (all nonnegative) representatives.
    void enumerate_positive_roots() {
        std::set<Root> closed;
        std::vector<Root> frontier;
        for (int i = 0; i < rank(); ++i) {
            Root s = simple_root(i);
            closed.insert(s);
            frontier.push_back(s);
        }
        while (!frontier.empty()) {
            std::vector<Root> next;
            for (const Root& beta : frontier) {
                for (int i = 0; i < rank(); ++i) {
                    Root r = reflect(beta, i);
                    const bool nonneg =
                        std::all_of(r.coords.begin(), r.coords.end(), [](int m) { return m >= 0; });
                    if (nonneg && closed.insert(r).second) next.push_back(r);
                }
            }
            frontier = std::move(next);
        }
        roots_.assign(closed.begin(), closed.end());
    }

    SimpleType type_;
    std::vector<std::vector<int>> cartan_;
    std::vector<int> d_;
    std::vector<Root> roots_;  // sorted (lex)
};

inline RootSystem build_root_system(const SimpleType& t) { return RootSystem(t); }

/// Closed-form |R+| for each simple type.
inline int positive_root_count(const SimpleType& t) {
    const int n = t.rank;
    switch (t.family) {
        case Family::A: return n * (n + 1) / 2;
        case Family::B:
        case Family::C: return n * n;
        case Family::D: return n * (n - 1);
        case Family::G: return 6;
        case Family::F: return 24;
        case Family::E: return n == 6 ? 36 : (n == 7 ? 63 : 120);
    }
    return 0;
}

}  // namespace flagflow
