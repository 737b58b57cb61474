#include "ogr/steenrod_ops.hpp"

#include <atomic>
#include <mutex>
#include <thread>

#include "ogr/error.hpp"

namespace ogr {

using f2::BitMatrix;
using f2::BitVector;
using f2::Flavor;
using f2::Monomial;
using f2::Polynomial;

namespace {

// Sq^1 of the single generator w_i.
Polynomial sq1_generator(int k, int i)
{
    Polynomial wi = Polynomial::w(k, i);
    Polynomial out = Polynomial::w(k, 1) * wi;
    if (i % 2 == 0)
        out += Polynomial::w(k, i + 1);
    return out;
}

}  // namespace

Polynomial sq1_poly(int k, const Polynomial& p)
{
    if (p.k() != k)
        throw InvalidArgument("sq1: polynomial variable count differs from k");
    std::vector<Polynomial> gen;
    gen.reserve(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i)
        gen.push_back(sq1_generator(k, i));
    Polynomial out(k, Flavor::W1);
    for (const auto& m : p.terms()) {
        // Derivation: a_i odd contributes w^{a - e_i} Sq^1(w_i).
        for (int i = 1; i <= k; ++i) {
            if (m.exponent(i) % 2 == 0)
                continue;
            auto exps = m.exponents();
            --exps[static_cast<std::size_t>(i - 1)];
            out += gen[static_cast<std::size_t>(i - 1)].times(Monomial(exps));
        }
    }
    return out;
}

Polynomial sq1L_poly(int k, const Polynomial& p)
{
    return sq1_poly(k, p) + (Polynomial::w(k, 1) * p.as_w1());
}

const char* to_string(OpKind kind)
{
    switch (kind) {
    case OpKind::Sq1: return "Sq1";
    case OpKind::Sq1L: return "Sq1L";
    case OpKind::MultW1: return "w1";
    }
    return "?";
}

const BitMatrix& OperationTriple::get(OpKind kind) const
{
    switch (kind) {
    case OpKind::Sq1: return sq1;
    case OpKind::Sq1L: return sq1L;
    case OpKind::MultW1: return w1;
    }
    throw InvalidArgument("unknown operation");
}

OperationTriple operation_matrices(const QuotientRing& ring, int d)
{
    int k = ring.k();
    const auto& basis = ring.basis(d);
    std::size_t target = ring.dim(d + 1);
    OperationTriple t{d, BitMatrix(basis.size(), target), BitMatrix(basis.size(), target),
                      BitMatrix(basis.size(), target)};
    Monomial w1 = Monomial::generator(k, 1);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Polynomial b = Polynomial::monomial(basis[i]);
        t.sq1.set_row(i, ring.reduce(sq1_poly(k, b), d + 1).coords);
        t.w1.set_row(i, ring.reduce(b.times(w1), d + 1).coords);
        t.sq1L.set_row(i, ring.reduce(sq1L_poly(k, b), d + 1).coords);
    }
    return t;
}

OperationTriple operation_matrices(const SchubertRing& ring, int d)
{
    return {d, ring.sq1_map(d), ring.sq1L_map(d), ring.w_map(1, d)};
}

std::size_t OperatorTower::dim(int d) const
{
    if (d < 0 || d >= static_cast<int>(dims.size()))
        return 0;
    return dims[static_cast<std::size_t>(d)];
}

BitMatrix OperatorTower::map(OpKind kind, int d) const
{
    if (d < 0 || d > top)
        return BitMatrix(dim(d), dim(d + 1));
    return ops[static_cast<std::size_t>(d)].get(kind);
}

namespace {

template <class Ring>
OperatorTower build_tower_impl(const Ring& ring, int threads)
{
    OperatorTower tower;
    tower.k = ring.k();
    tower.n = ring.n();
    tower.top = ring.top_degree();
    for (int d = 0; d <= tower.top + 1; ++d)
        tower.dims.push_back(ring.dim(d));
    tower.ops.resize(static_cast<std::size_t>(tower.top) + 1);
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto work = [&] {
        try {
            for (int d = next++; d <= tower.top; d = next++)
                tower.ops[static_cast<std::size_t>(d)] = operation_matrices(ring, d);
        } catch (...) {
            std::lock_guard lock(failure_mu);
            if (!failure)
                failure = std::current_exception();
        }
    };
    if (threads <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(work);
    }
    if (failure)
        std::rethrow_exception(failure);
    return tower;
}

}  // namespace

OperatorTower build_tower(const QuotientRing& ring, int threads)
{
    if (ring.max_degree() < ring.top_degree())
        throw InvalidArgument("build_tower needs the ring through its top degree");
    ring.build_all(threads);
    return build_tower_impl(ring, threads);
}

OperatorTower build_tower(const SchubertRing& ring, int threads) { return build_tower_impl(ring, threads); }

KerIm ker_im(const OperatorTower& tower, OpKind kind, int d)
{
    KerIm out;
    BitMatrix out_map = tower.map(kind, d);
    out.kernel = f2::left_kernel(out_map);
    BitMatrix in_map = tower.map(kind, d - 1);
    auto e = f2::rref(in_map);
    for (std::size_t r = 0; r < e.rank(); ++r)
        out.image.push_back(e.matrix.row(r));
    return out;
}

bool in_span(const std::vector<BitVector>& space, const BitVector& x, std::size_t width)
{
    f2::RowReducer red(width);
    for (const auto& v : space)
        red.insert(v);
    return red.contains(x);
}

}  // namespace ogr
