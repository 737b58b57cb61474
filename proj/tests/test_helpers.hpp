#pragma once

// Small independent oracles and random generators shared by the tests.

#include <random>
#include <vector>

#include "ogr/bit_matrix.hpp"
#include "ogr/polynomial.hpp"

namespace testing_util {

using ogr::f2::BitMatrix;
using ogr::f2::Flavor;
using ogr::f2::Monomial;
using ogr::f2::Polynomial;

inline std::mt19937_64& rng()
{
    static std::mt19937_64 gen(20240607);
    return gen;
}

inline BitMatrix random_matrix(std::size_t rows, std::size_t cols, double density = 0.5)
{
    std::bernoulli_distribution bit(density);
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (bit(rng()))
                m.set(r, c);
    return m;
}

/// Plain elimination over vector<vector<int>>, sharing no code with the library.
inline std::size_t naive_rank(const BitMatrix& m)
{
    std::vector<std::vector<int>> a(m.rows(), std::vector<int>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            a[r][c] = m.get(r, c);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < a.size(); ++c) {
        std::size_t p = rank;
        while (p < a.size() && !a[p][c])
            ++p;
        if (p == a.size())
            continue;
        std::swap(a[p], a[rank]);
        for (std::size_t r = 0; r < a.size(); ++r)
            if (r != rank && a[r][c])
                for (std::size_t j = 0; j < m.cols(); ++j)
                    a[r][j] ^= a[rank][j];
        ++rank;
    }
    return rank;
}

/// Random sparse polynomial: up to `terms` monomials of total exponent <= max_exp.
inline Polynomial random_polynomial(int k, int terms, int max_exp, Flavor flavor = Flavor::W1)
{
    std::uniform_int_distribution<int> e(0, max_exp);
    std::uniform_int_distribution<int> count(0, terms);
    std::vector<Monomial> out;
    int c = count(rng());
    for (int t = 0; t < c; ++t) {
        std::vector<Monomial::Exponent> a(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i)
            a[static_cast<std::size_t>(i)] = static_cast<Monomial::Exponent>(e(rng()));
        if (flavor == Flavor::W2)
            a[0] = 0;
        out.emplace_back(a);
    }
    return Polynomial(k, flavor, out);
}

/// Random homogeneous polynomial of degree d.
inline Polynomial random_homogeneous(int k, int d, Flavor flavor = Flavor::W1)
{
    auto slice = ogr::f2::enumerate_slice(k, flavor, d);
    std::bernoulli_distribution bit(0.5);
    std::vector<Monomial> out;
    for (const auto& m : slice.monomials)
        if (bit(rng()))
            out.push_back(m);
    return Polynomial(k, flavor, out);
}

}  // namespace testing_util
