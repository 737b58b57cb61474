#pragma once

// H*(Gr_k(n); F2) = F2[w_1..w_k] / (Q_{n-k+1}, ..., Q_n), degree by degree.
//
// QuotientRing keeps the monomial presentation: each degree holds the W1 slice
// and an echelon basis of the ideal slice; the canonical form of a class is its
// residue, supported on the non-pivot monomials. SchubertRing presents the same
// ring in the basis of Schubert classes s_lambda, lambda in the k x (n-k) box,
// which stays small in every degree.

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ogr/bit_matrix.hpp"
#include "ogr/polynomial.hpp"
#include "ogr/schubert.hpp"

namespace ogr {

/// An element of H^d in the canonical coordinates of some ring.
struct CohomologyClass {
    int degree = 0;
    f2::BitVector coords;

    bool is_zero() const { return coords.none(); }
    friend bool operator==(const CohomologyClass&, const CohomologyClass&) = default;
};

/// Coefficients of the Gaussian binomial [n choose k]_q: entry d counts the
/// partitions of d in a k x (n-k) box.
std::vector<long long> gaussian_binomial(int n, int k);
long long binomial(int n, int k);

struct RingOptions {
    int degree_cap = f2::kDefaultDegreeCap;
    /// Echelonized ideal slices are read from and written to this directory.
    std::optional<std::filesystem::path> cache_dir;
};

class QuotientRing {
public:
    /// max_degree < 0 means the top degree k(n-k); larger values are clamped.
    QuotientRing(int k, int n, int max_degree = -1, RingOptions options = {});
    ~QuotientRing();
    QuotientRing(const QuotientRing&) = delete;
    QuotientRing& operator=(const QuotientRing&) = delete;

    int k() const { return k_; }
    int n() const { return n_; }
    int top_degree() const { return k_ * (n_ - k_); }
    int max_degree() const { return max_degree_; }

    /// dim H^d; zero outside [0, top].
    std::size_t dim(int d) const;
    std::vector<std::size_t> hilbert() const;
    std::size_t total_dim() const;
    std::size_t ideal_rank(int d) const;

    const f2::DegreeSlice& slice(int d) const;
    /// The non-pivot monomials of degree d: the canonical basis of H^d.
    const std::vector<f2::Monomial>& basis(int d) const;

    CohomologyClass zero(int d) const;
    CohomologyClass reduce(const f2::Polynomial& p) const;
    /// reduce() of a nonzero or zero polynomial known to have degree d.
    CohomologyClass reduce(const f2::Polynomial& p, int d) const;
    /// The canonical representative: a sum of basis monomials.
    f2::Polynomial lift(const CohomologyClass& x) const;
    CohomologyClass multiply(const CohomologyClass& x, const CohomologyClass& y) const;

    /// Multiplication by m (homogeneous of degree e) as a map H^d -> H^{d+e};
    /// row i is the image of basis(d)[i].
    f2::BitMatrix mult_map(const f2::Polynomial& m, int d) const;

    /// Build every degree up to max_degree now, with up to `threads` workers.
    void build_all(int threads = 1) const;

    /// Whether degree d was read from the on-disk cache.
    bool loaded_from_cache(int d) const;

private:
    struct Degree;
    const Degree& degree(int d) const;
    void build(int d) const;
    void check_degree(int d) const;
    f2::BitVector ideal_residue(const Degree& deg, f2::BitVector v) const;

    int k_;
    int n_;
    int max_degree_;
    RingOptions options_;
    std::vector<std::unique_ptr<Degree>> degrees_;
};

/// Restriction along Gr_k(m) -> Gr_k(n), m < n: re-reduce a representative.
CohomologyClass pullback(const QuotientRing& source, const QuotientRing& target, const CohomologyClass& x);
/// Gysin map along Gr_k(n) -> Gr_k(n + j): multiply by w_k^j and reduce.
CohomologyClass pushforward(const QuotientRing& source, const QuotientRing& target, const CohomologyClass& x);

class SchubertRing {
public:
    SchubertRing(int k, int n, RingOptions options = {});

    int k() const { return k_; }
    int n() const { return n_; }
    int top_degree() const { return k_ * (n_ - k_); }

    std::size_t dim(int d) const;
    std::vector<std::size_t> hilbert() const;
    std::size_t total_dim() const;
    /// Partitions of d in the box, decreasing lexicographic order.
    const std::vector<Partition>& basis(int d) const;
    std::size_t position(const Partition& lambda) const;

    CohomologyClass zero(int d) const;
    CohomologyClass schubert_class(const Partition& lambda) const;
    /// Expand a homogeneous polynomial in the Schubert basis.
    CohomologyClass reduce(const f2::Polynomial& p) const;
    CohomologyClass reduce(const f2::Polynomial& p, int d) const;
    /// Giambelli representative of a class.
    f2::Polynomial to_polynomial(const CohomologyClass& x) const;

    /// Multiplication by w_i = s_(1^i), H^d -> H^{d+i}; vertical strips of size i.
    const f2::BitMatrix& w_map(int i, int d) const;
    /// Sq^1 adds one box of odd content (column minus row).
    const f2::BitMatrix& sq1_map(int d) const;
    /// Sq^1_L = Sq^1 + w_1 adds one box of even content.
    const f2::BitMatrix& sq1L_map(int d) const;
    f2::BitMatrix mult_map(const f2::Polynomial& m, int d) const;

    CohomologyClass multiply_monomial(const CohomologyClass& x, const f2::Monomial& m) const;

private:
    enum class MapKind { W, Sq1, Sq1L };
    const f2::BitMatrix& cached_map(MapKind kind, int i, int d) const;
    f2::BitMatrix build_map(MapKind kind, int i, int d) const;
    void check_degree(int d) const;

    int k_;
    int n_;
    RingOptions options_;
    std::vector<std::vector<Partition>> basis_;
    std::vector<std::map<Partition, std::size_t>> index_;

    mutable std::mutex mu_;
    mutable std::map<std::tuple<int, int, int>, std::unique_ptr<f2::BitMatrix>> maps_;
    mutable std::unordered_map<f2::Monomial, f2::BitVector, f2::MonomialHash> monomial_memo_;
};

/// Multiplication by w_1 degree by degree, with the oriented Betti numbers
/// b~_d = dim coker(w_1)_d + dim ker(w_1: H^d -> H^{d+1}).
struct W1Data {
    int last_degree = -1;  ///< kernels are known for d <= last_degree
    std::vector<std::size_t> dims;
    std::vector<std::size_t> rank_out;  ///< rank of w_1: H^d -> H^{d+1}
    std::vector<std::size_t> ker_dim;
    std::vector<std::size_t> coker_dim;  ///< dim H^d / w_1 H^{d-1}
    std::vector<std::vector<f2::BitVector>> kernel;
    std::vector<std::size_t> oriented_betti;
};

W1Data ker_coker_w1(const QuotientRing& ring);
W1Data ker_coker_w1(const SchubertRing& ring);

/// crk = (first degree with ker w_1 != 0) - 1. When the kernel vanishes in
/// every degree checked, `exact` is false and `value` is only a lower bound.
struct CharRank {
    int value = 0;
    bool exact = true;
};

CharRank char_rank(const W1Data& data);

}  // namespace ogr
