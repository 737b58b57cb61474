#pragma once

// Polynomials over F2 in the graded variables w_1, ..., w_k (deg w_i = i).
//
// Two ambient rings share one representation: W1 = F2[w_1..w_k] and
// W2 = F2[w_2..w_k]. A W2 polynomial never contains w_1. Terms are a set, so
// addition is symmetric difference and coefficients are implicitly 1.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <unordered_map>
#include <vector>

#include "ogr/bit_matrix.hpp"

namespace ogr::f2 {

inline constexpr int kDefaultDegreeCap = 128;

enum class Flavor { W1, W2 };

class Monomial {
public:
    using Exponent = std::uint16_t;

    Monomial() = default;
    /// Exponents (a_1, ..., a_k).
    explicit Monomial(std::vector<Exponent> exponents);
    Monomial(std::initializer_list<int> exponents);

    static Monomial one(int k) { return Monomial(std::vector<Exponent>(static_cast<std::size_t>(k), 0)); }
    /// w_i^power, 1 <= i <= k.
    static Monomial generator(int k, int i, int power = 1);

    int k() const { return static_cast<int>(exps_.size()); }
    /// Exponent of w_i, 1-based.
    int exponent(int i) const { return exps_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<Exponent>& exponents() const { return exps_; }
    int degree() const;
    /// |a| = a_1 + ... + a_k.
    int total() const;
    bool is_one() const;

    bool divides(const Monomial& other) const;
    /// other / this; requires divides(other).
    Monomial quotient_of(const Monomial& other) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
    friend bool operator==(const Monomial&, const Monomial&) = default;

    /// "w1^2*w3", or "1".
    std::string to_string() const;

private:
    std::vector<Exponent> exps_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
};

class Polynomial {
public:
    Polynomial() = default;
    /// Zero polynomial in the given ambient ring.
    Polynomial(int k, Flavor flavor) : k_(k), flavor_(flavor) {}
    Polynomial(int k, Flavor flavor, std::vector<Monomial> terms);

    static Polynomial one(int k, Flavor flavor = Flavor::W1);
    static Polynomial monomial(const Monomial& m, Flavor flavor = Flavor::W1);
    /// The variable w_i (w_0 = 1, w_i = 0 for i < 0 or i > k).
    static Polynomial w(int k, int i, Flavor flavor = Flavor::W1);

    int k() const { return k_; }
    Flavor flavor() const { return flavor_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    /// Terms in decreasing lexicographic order of (a_1, ..., a_k).
    const std::vector<Monomial>& terms() const { return terms_; }
    bool contains(const Monomial& m) const;

    bool is_homogeneous() const;
    /// Degree of a nonzero homogeneous polynomial; throws otherwise.
    int degree() const;

    Polynomial& operator+=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial pow(int e) const;
    /// Multiply every term by a monomial.
    Polynomial times(const Monomial& m) const;
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// The inclusion W2 -> W1 (relabelling only).
    Polynomial as_w1() const;
    /// The reduction W1 -> W2 setting w_1 = 0.
    Polynomial reduce_w1() const;

    std::string to_string() const;

private:
    void check_compatible(const Polynomial& o) const;

    int k_ = 0;
    Flavor flavor_ = Flavor::W1;
    std::vector<Monomial> terms_;
};

/// Sort a multiset of monomials and cancel pairs: the F2 sum.
std::vector<Monomial> cancel_pairs(std::vector<Monomial> terms);

/// All monomials of one weighted degree, in a fixed order.
struct DegreeSlice {
    int degree = 0;
    int k = 0;
    Flavor flavor = Flavor::W1;
    std::vector<Monomial> monomials;  ///< decreasing lexicographic order
    std::unordered_map<Monomial, std::size_t, MonomialHash> index;

    std::size_t size() const { return monomials.size(); }
    std::size_t position(const Monomial& m) const;
};

DegreeSlice enumerate_slice(int k, Flavor flavor, int degree);
/// Number of monomials of the slice without building it.
std::size_t slice_size(int k, Flavor flavor, int degree);

BitVector to_coordinates(const Polynomial& p, const DegreeSlice& slice);
Polynomial from_coordinates(const BitVector& v, const DegreeSlice& slice);

}  // namespace ogr::f2
