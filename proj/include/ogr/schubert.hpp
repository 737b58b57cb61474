#pragma once

// Partition combinatorics: hooks, rim hooks, 2-power cores, parity of the
// number of standard Young tableaux, and the Schubert support of w_1^p.

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "ogr/polynomial.hpp"

namespace ogr {

class Partition {
public:
    Partition() = default;
    /// Parts must be weakly decreasing; trailing zeros are dropped.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// (a, 1^(b-1)): arm a, leg b - 1.
    static Partition hook(int first_row, int rows);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const { return size_; }
    bool empty() const { return parts_.empty(); }
    /// lambda_i, 1-based, zero past the end.
    int part(int i) const { return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0; }

    Partition conjugate() const;
    /// At most `rows` parts, each at most `cols`.
    bool in_box(int rows, int cols) const;
    /// h(i, j) = lambda_i - j + lambda'_j - i + 1 for each cell, row by row.
    std::vector<std::vector<int>> hook_lengths() const;
    /// Number of cells with hook length exactly p.
    int count_hooks(int p) const;

    /// Beta numbers lambda_i + (L - i) for L = length(), decreasing.
    std::vector<int> beta_numbers() const;
    static Partition from_beta_numbers(std::vector<int> beta);

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

    /// "(4,2,1)", "()" for the empty partition.
    std::string to_string() const;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Partitions of d with at most `rows` parts of size at most `cols`, in
/// decreasing lexicographic order.
std::vector<Partition> partitions_in_box(int rows, int cols, int d);
/// All partitions of d.
std::vector<Partition> partitions_of(int d);

/// 2-adic valuation of n! (Legendre).
int nu2_factorial(int n);
/// Number of standard Young tableaux of shape lambda mod 2, via the hook
/// length formula and 2-adic valuations.
bool syt_parity(const Partition& lambda);
/// The same parity via unique 2^t-hooks and 2^t-cores.
bool syt_parity_via_cores(const Partition& lambda);

/// Every partition obtained by removing one rim hook of length p.
std::vector<Partition> rim_hook_removal(const Partition& lambda, int p);
/// The p-core: remove p-rim hooks until none remain.
Partition core(const Partition& lambda, int p);

/// {lambda in the k x (n-k) box : |lambda| = p, SYT count odd}: the Schubert
/// support of w_1^p in H*(Gr_k(n); F2).
std::vector<Partition> w1_power_support(int k, int n, int p);
/// Largest p with w1_power_support(k, n, p) nonempty.
int height_w1_oracle(int k, int n);

/// s_lambda as a polynomial in w_1..w_k: det(w_{lambda'_i - i + j}).
f2::Polynomial schubert_to_monomials(const Partition& lambda, int k);

}  // namespace ogr
