#pragma once

// Sq^1 and the twisted Sq^1_L = Sq^1 + w_1 on W1 and on H*(Gr_k(n); F2).
//
// On generators Sq^1 w_{2i} = w_1 w_{2i} + w_{2i+1} and Sq^1 w_{2i+1} =
// w_1 w_{2i+1}, with w_{k+1} = 0 since the ambient ring is H*(BO(k)). In the
// polynomial ring on k + 1 variables the formula for Sq^1 w_k differs.

#include <vector>

#include "ogr/bit_matrix.hpp"
#include "ogr/grassmann_ring.hpp"
#include "ogr/polynomial.hpp"

namespace ogr {

f2::Polynomial sq1_poly(int k, const f2::Polynomial& p);
f2::Polynomial sq1L_poly(int k, const f2::Polynomial& p);

enum class OpKind { Sq1, Sq1L, MultW1 };

const char* to_string(OpKind kind);

/// The three degree-raising maps H^d -> H^{d+1}; row i is the image of the
/// i-th basis vector of H^d.
struct OperationTriple {
    int degree = 0;
    f2::BitMatrix sq1;
    f2::BitMatrix sq1L;
    f2::BitMatrix w1;

    const f2::BitMatrix& get(OpKind kind) const;
};

/// Lift each basis monomial, apply the polynomial operation, reduce.
OperationTriple operation_matrices(const QuotientRing& ring, int d);
OperationTriple operation_matrices(const SchubertRing& ring, int d);

/// All operation matrices of a ring, degrees 0 .. top.
struct OperatorTower {
    int k = 0;
    int n = 0;
    int top = 0;
    std::vector<std::size_t> dims;     ///< dims[d] = dim H^d, d = 0 .. top + 1
    std::vector<OperationTriple> ops;  ///< ops[d]: H^d -> H^{d+1}, d = 0 .. top

    std::size_t dim(int d) const;
    /// The map H^d -> H^{d+1}; an empty map for d < 0 or d > top.
    f2::BitMatrix map(OpKind kind, int d) const;
};

/// Requires the ring to be built through its top degree.
OperatorTower build_tower(const QuotientRing& ring, int threads = 1);
OperatorTower build_tower(const SchubertRing& ring, int threads = 1);

/// Kernel of kind: H^d -> H^{d+1} and image of kind: H^{d-1} -> H^d, both as
/// subspaces of H^d. The image basis is in reduced echelon form.
struct KerIm {
    std::vector<f2::BitVector> kernel;
    std::vector<f2::BitVector> image;
};

KerIm ker_im(const OperatorTower& tower, OpKind kind, int d);

/// Whether x lies in the row space of the listed vectors.
bool in_span(const std::vector<f2::BitVector>& space, const f2::BitVector& x, std::size_t width);

}  // namespace ogr
