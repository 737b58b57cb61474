#pragma once

// The mod-2 criterion for 4-torsion in H*(G~r_k(n); Z).
//
// In each degree d of H*(Gr_k(n); F2):
//   A2 = w_1 ker(Sq^1)_{d-1},    B2 = Im(w_1)_d  cap Im(Sq^1_L)_d,
//   A3 = w_1 ker(Sq^1_L)_{d-1},  B3 = Im(w_1)_d  cap Im(Sq^1)_d,
// with A ⊆ B always. A strict inclusion in degree d gives 4-torsion in
// H^d(G~r_k(n); Z); dim B - dim A is reported as its multiplicity.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ogr/grassmann_ring.hpp"
#include "ogr/steenrod_ops.hpp"

namespace ogr {

struct TorsionDegree {
    int degree = 0;
    std::size_t dim = 0;
    std::size_t a2 = 0, b2 = 0, a3 = 0, b3 = 0;

    std::size_t multiplicity2() const { return b2 - a2; }
    std::size_t multiplicity3() const { return b3 - a3; }
};

struct TorsionReport {
    int k = 0;
    int n = 0;
    int top = 0;
    int max_degree = 0;  ///< degrees above this were not scanned
    std::vector<TorsionDegree> per_degree;
    std::vector<int> degrees2;  ///< each degree repeated by its multiplicity
    std::vector<int> degrees3;

    bool complete() const { return max_degree >= top; }
    bool has_4_torsion() const { return !degrees2.empty() || !degrees3.empty(); }
    /// Conditions (2) and (3) give different multiplicities somewhere.
    bool degreewise_discrepancy() const { return degrees2 != degrees3; }
    /// One condition finds 4-torsion and the other does not.
    bool verdict_discrepancy() const { return degrees2.empty() != degrees3.empty(); }
};

/// Scan degrees 0 .. min(max_degree, top). Throws InvariantViolation when an
/// inclusion A ⊆ B fails.
TorsionReport torsion4_scan(const OperatorTower& tower, int max_degree = -1);

/// A ring together with its operation matrices and a way to reduce
/// polynomials, whatever the basis.
struct RingView {
    int k = 0;
    int n = 0;
    std::string basis;
    OperatorTower tower;
    std::function<CohomologyClass(const f2::Polynomial&, int)> reduce;
};

RingView make_view(const SchubertRing& ring, int threads = 1);
RingView make_view(const QuotientRing& ring, int threads = 1);

/// 2^{t-1} < n <= 2^t.
int two_power_exponent(int n);
/// d_n = w_1^{2^t - 1}.
f2::Polynomial d_n(int k, int n);
/// a_n = w_1^{2^{t-1} - 1} w_k^{n - 2^{t-1}}.
f2::Polynomial a_n(int k, int n);

struct Witness {
    int condition = 2;
    int degree = 0;
    CohomologyClass z;
    std::string name;       ///< "d_n", "a_n" or empty
    CohomologyClass z_prime;  ///< z = w_1 z'
    CohomologyClass a;        ///< z = Sq^1_L(a) (condition 2) or Sq^1(a) (condition 3)
};

/// A class z in B \ A. Prefers d_n or a_n when either qualifies. Throws
/// InvalidArgument when the multiplicity in degree d is zero.
Witness witness_class(const RingView& view, int d, int condition = 2);

/// Per-degree dim ker(w_1); the first nonzero entry is at crk + 1.
std::vector<std::size_t> anomalous_degrees(const OperatorTower& tower, int max_degree = -1);

struct UpperBoundCheck {
    int t = 0;
    int degree_d = 0;
    int degree_a = 0;
    bool d_nonzero = false;
    bool d_in_kernel = false;
    bool a_nonzero = false;
    bool a_in_kernel = false;
    bool ok() const { return d_nonzero && d_in_kernel && a_nonzero && a_in_kernel; }
};

/// Checks that reduce(d_n) and reduce(a_n) are nonzero elements of ker(w_1).
/// Requires 5 <= k <= 2^{t-1} < n <= 2^t.
UpperBoundCheck upper_bound_check(const RingView& view);

}  // namespace ogr
