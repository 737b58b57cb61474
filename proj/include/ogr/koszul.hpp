#pragma once

// W2-relations among q_{n-k+1}, ..., q_n, their boundaries into ker(w_1),
// the descent/ascent operators, deficiency, and separating-basis certificates.

#include <optional>
#include <string>
#include <vector>

#include "ogr/bit_matrix.hpp"
#include "ogr/polynomial.hpp"

namespace ogr {

/// (c_0, ..., c_{k-1}) over W2 with c_j multiplying q_{n-j}; degree d means
/// deg c_j = d - (n - j).
struct RelationTuple {
    int k = 0;
    int n = 0;
    int degree = 0;
    std::vector<f2::Polynomial> c;

    static RelationTuple zero(int k, int n, int degree);
    bool is_zero() const;
    friend bool operator==(const RelationTuple&, const RelationTuple&) = default;
    std::string to_string() const;
};

/// sum_j c_j q_{n-j}, in W2.
f2::Polynomial relation_sum(const RelationTuple& r);
/// Homogeneity and the vanishing of relation_sum().
bool is_relation(const RelationTuple& r);

/// A basis of all relations of degree d.
std::vector<RelationTuple> relations_in_degree(int k, int n, int d);

/// sum_j c_j p_{n-j}, of degree d - 1 in W1.
f2::Polynomial koszul_boundary(const RelationTuple& r);

/// D(c) = (c_1, c_0 w_2 + c_2, ..., c_0 w_{k-1} + c_{k-1}, c_0 w_k): n -> n - 1,
/// same degree.
RelationTuple descend(const RelationTuple& r);
/// A(c) = (c_{k-1}, c_0 w_k, c_1 w_k + c_{k-1} w_2, ..., c_{k-2} w_k + c_{k-1} w_{k-1}):
/// n -> n + 1, degree + k.
RelationTuple ascend(const RelationTuple& r);

struct DeficiencyResult {
    int value = 1;
    /// A q_j that lies in the W2-span of the lower q_i, when value == 0.
    std::optional<int> redundant_index;
};

DeficiencyResult deficiency(int k, int n);

/// w^b q_j with b a W2 exponent vector.
struct CertificateGenerator {
    f2::Monomial multiplier;
    int q_index = 0;

    int degree() const { return multiplier.degree() + q_index; }
    std::string to_string() const;
    friend bool operator==(const CertificateGenerator&, const CertificateGenerator&) = default;
};

/// matrix(i, j) = coefficient of monomials[i] in generators[j]; lower
/// triangular with unit diagonal when valid.
struct SeparatingCertificate {
    int k = 0;
    int n = 0;
    int degree = 0;
    std::vector<CertificateGenerator> generators;
    std::vector<f2::Monomial> monomials;
    f2::BitMatrix matrix;

    friend bool operator==(const SeparatingCertificate&, const SeparatingCertificate&) = default;
};

/// Coefficient of w^a in w^b q_j: [b | a] times the Lucas coefficient of a - b.
bool generator_coefficient(const CertificateGenerator& g, const f2::Monomial& a);

/// All products w^b q_j of degree d, n - k < j <= n, in a fixed order.
std::vector<CertificateGenerator> generators_in_degree(int k, int n, int d);

/// Greedy peeling: repeatedly take a generator owning a monomial absent from
/// every other remaining generator. Returns nothing when stuck.
std::optional<SeparatingCertificate> find_certificate(int k, int n, int d);

/// Recompute every entry and check triangularity with unit diagonal. Throws
/// InvalidArgument on dimension mismatches.
bool verify_certificate(const SeparatingCertificate& cert);
/// Whether the certificate lists every generator of its degree exactly once.
bool covers_all_generators(const SeparatingCertificate& cert);

/// The parametric tables for k = 5, n = 2^t - 1 in degrees 2^t - 3, 2^t - 2
/// and 2^t - 1 (figure = 1, 2, 3), arranged lower triangular.
SeparatingCertificate appendix_certificate(int figure, int t);

std::string certificate_to_json(const SeparatingCertificate& cert);
SeparatingCertificate certificate_from_json(const std::string& text);

}  // namespace ogr
