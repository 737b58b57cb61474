#pragma once

// The universal dual classes Q_j, q_j, P_j and p_j for a fixed k.
//
//   Q_j = sum_{i=1..k} w_i Q_{j-i}          (W1, Q_0 = 1)
//   q_j = sum_{l=2..k} w_l q_{j-l}          (W2, q_0 = 1, q_1 = 0)
//   p_j = Q_{j-1} + sum_{l=2..k} w_l p_{j-l} (W1, p_0 = 0, p_1 = 1)
//   P_j = Q_j + q_j = w_1 p_j
//
// All families vanish at negative index.

#include <mutex>
#include <span>
#include <vector>

#include "ogr/polynomial.hpp"

namespace ogr {

enum class ClassKind { Q, q, P, p };

const char* to_string(ClassKind kind);

/// Memoized recursion for one (k, kind). Thread safe: entries are appended
/// under a lock and never modified afterwards.
class ClassFamily {
public:
    ClassFamily(int k, ClassKind kind);

    int k() const { return k_; }
    ClassKind kind() const { return kind_; }
    f2::Polynomial get(int j) const;

private:
    void extend_to(int j) const;

    int k_;
    ClassKind kind_;
    mutable std::mutex mu_;
    mutable std::vector<f2::Polynomial> cache_;
};

/// Process-wide families, created on first use.
const ClassFamily& family(int k, ClassKind kind);

f2::Polynomial Q_class(int k, int j);
f2::Polynomial q_class(int k, int j);
/// q_j relabelled into W1.
f2::Polynomial q_tilde(int k, int j);
f2::Polynomial P_class(int k, int j);
f2::Polynomial p_class(int k, int j);

/// Multinomial binom(|a|; a_1, ..., a_k) mod 2: 1 iff the binary expansions of
/// the a_i are pairwise disjoint.
bool lucas_coefficient(std::span<const f2::Monomial::Exponent> a);
bool lucas_coefficient(const f2::Monomial& m);

/// Closed forms: the Lucas-admissible monomials of degree j, restricted to
/// a_1 = 0 (q), a_1 >= 1 (P) or unrestricted (Q). p_j is P_{j} with one w_1
/// removed from every term.
f2::Polynomial Q_lucas(int k, int j);
f2::Polynomial q_lucas(int k, int j);
f2::Polynomial P_lucas(int k, int j);
f2::Polynomial p_lucas(int k, int j);

/// Total Stiefel-Whitney class 1 + w_1 + ... + w_k truncated to degree d.
f2::Polynomial w_component(int k, int d);

}  // namespace ogr
