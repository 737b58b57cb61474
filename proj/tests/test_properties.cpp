#include <doctest.h>

#include <functional>
#include <map>
#include <memory>

#include "ogr/char_classes.hpp"
#include "ogr/grassmann_ring.hpp"
#include "ogr/koszul.hpp"
#include "ogr/schubert.hpp"
#include "ogr/steenrod_ops.hpp"
#include "test_helpers.hpp"

using namespace ogr;
using namespace ogr::f2;
using testing_util::random_homogeneous;
using testing_util::random_polynomial;
using testing_util::rng;

namespace {

constexpr int kCases = 10000;

int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

BitVector random_vector(std::size_t size)
{
    BitVector v(size);
    for (std::size_t i = 0; i < size; ++i)
        if (rng()() & 1)
            v.set(i);
    return v;
}

}  // namespace

TEST_CASE("char-2 ring axioms on random polynomials")
{
    for (int i = 0; i < kCases; ++i) {
        int k = uniform(1, 6);
        auto a = random_polynomial(k, 5, 3);
        auto b = random_polynomial(k, 5, 3);
        auto c = random_polynomial(k, 5, 3);
        Polynomial zero(k, Flavor::W1);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + a == zero);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * Polynomial::one(k) == a);
        CHECK((a + b).pow(2) == a.pow(2) + b.pow(2));
    }
}

TEST_CASE("Sq^1 is a derivation")
{
    for (int i = 0; i < kCases; ++i) {
        int k = uniform(1, 7);
        auto a = random_polynomial(k, 4, 3);
        auto b = random_polynomial(k, 4, 3);
        CHECK(sq1_poly(k, a * b) == sq1_poly(k, a) * b + a * sq1_poly(k, b));
        CHECK(sq1_poly(k, a + b) == sq1_poly(k, a) + sq1_poly(k, b));
    }
}

TEST_CASE("commutation relations on Gr_5(15) and Gr_6(16), random vectors in every degree")
{
    for (auto [k, n] : {std::pair{5, 15}, std::pair{6, 16}}) {
        auto tw = build_tower(SchubertRing(k, n), 2);
        for (int i = 0; i < kCases; ++i) {
            int d = uniform(0, tw.top - 1);
            auto x = random_vector(tw.dim(d));
            auto S = [&](const BitVector& v, int e) { return row_combination(v, tw.map(OpKind::Sq1, e)); };
            auto L = [&](const BitVector& v, int e) { return row_combination(v, tw.map(OpKind::Sq1L, e)); };
            auto W = [&](const BitVector& v, int e) { return row_combination(v, tw.map(OpKind::MultW1, e)); };
            auto sw = S(W(x, d), d + 1);
            CHECK(sw == W(L(x, d), d + 1));
            CHECK(sw == S(L(x, d), d + 1));
            auto ls = L(S(x, d), d + 1);
            CHECK(ls == L(W(x, d), d + 1));
            CHECK(ls == W(S(x, d), d + 1));
            CHECK(S(S(x, d), d + 1).none());
            CHECK(L(L(x, d), d + 1).none());
        }
    }
}

TEST_CASE("Sq^1 maps the defining ideal into itself")
{
    std::map<std::pair<int, int>, std::unique_ptr<QuotientRing>> rings;
    for (int i = 0; i < kCases; ++i) {
        int k = uniform(2, 5);
        int n = uniform(k + 1, k + 6);
        auto& slot = rings[{k, n}];
        if (!slot)
            slot = std::make_unique<QuotientRing>(k, n);
        const auto& ring = *slot;
        int j = uniform(n - k + 1, n);
        if (j + 1 > ring.top_degree())
            continue;
        int e = uniform(0, ring.top_degree() - j - 1);
        auto gen = Q_class(k, j) * random_homogeneous(k, e);
        CHECK(ring.reduce(sq1_poly(k, gen), j + e + 1).is_zero());
    }
}

TEST_CASE("Hilbert function equals the Gaussian binomial for random rings")
{
    for (int i = 0; i < kCases; ++i) {
        int n = uniform(1, 30);
        int k = uniform(1, n);
        auto g = gaussian_binomial(n, k);
        // Pieri-free count of lattice paths in the box.
        int rows = k, cols = n - k;
        // prod_{i=1}^{k} (1 - q^{cols+i}) / (1 - q^i), expanded as integer series.
        int top = rows * cols;
        std::vector<long long> series(static_cast<std::size_t>(top) + 1, 0);
        series[0] = 1;
        for (int r = 1; r <= rows; ++r) {
            for (int d = top; d >= cols + r; --d)
                series[static_cast<std::size_t>(d)] -= series[static_cast<std::size_t>(d - cols - r)];
            for (int d = r; d <= top; ++d)
                series[static_cast<std::size_t>(d)] += series[static_cast<std::size_t>(d - r)];
        }
        CHECK(g == series);
        if (n <= 14 && i % 50 == 0) {
            SchubertRing s(k, n);
            for (int d = 0; d <= top; ++d)
                CHECK(static_cast<long long>(s.dim(d)) == g[static_cast<std::size_t>(d)]);
        }
        if (n <= 9 && i % 200 == 0) {
            QuotientRing q(k, n);
            for (int d = 0; d <= top; ++d)
                CHECK(static_cast<long long>(q.dim(d)) == g[static_cast<std::size_t>(d)]);
        }
    }
}

TEST_CASE("ascend/descend squares commute on random combinations of relations")
{
    struct Bucket {
        int k, n, d;
        std::vector<RelationTuple> rels;
    };
    std::vector<Bucket> buckets;
    for (int k = 2; k <= 6; ++k)
        for (int n = k + 2; n <= 17; ++n)
            for (int d = n - k + 1; d <= 17; ++d) {
                auto rels = relations_in_degree(k, n, d);
                if (!rels.empty())
                    buckets.push_back({k, n, d, std::move(rels)});
            }
    REQUIRE_FALSE(buckets.empty());
    std::map<std::pair<int, int>, std::unique_ptr<QuotientRing>> rings;
    auto ring = [&](int k, int n, int deg) -> const QuotientRing& {
        auto& slot = rings[{k, n}];
        if (!slot)
            slot = std::make_unique<QuotientRing>(k, n, std::min(deg, k * (n - k)));
        return *slot;
    };
    for (int i = 0; i < kCases; ++i) {
        const auto& b = buckets[static_cast<std::size_t>(uniform(0, static_cast<int>(buckets.size()) - 1))];
        auto r = RelationTuple::zero(b.k, b.n, b.d);
        for (const auto& rel : b.rels)
            if (rng()() & 1)
                for (int j = 0; j < b.k; ++j)
                    r.c[static_cast<std::size_t>(j)] += rel.c[static_cast<std::size_t>(j)];
        if (r.is_zero())
            continue;
        const auto& here = ring(b.k, b.n, 24);
        const auto& below = ring(b.k, b.n - 1, 24);
        const auto& above = ring(b.k, b.n + 1, 24);
        auto x = here.reduce(koszul_boundary(r), b.d - 1);
        CHECK(here.multiply(x, here.reduce(Polynomial::w(b.k, 1))).is_zero());
        auto down = descend(r);
        auto up = ascend(r);
        CHECK(is_relation(down));
        CHECK(is_relation(up));
        CHECK(below.reduce(koszul_boundary(down), b.d - 1) == pullback(here, below, x));
        CHECK(above.reduce(koszul_boundary(up), b.d + b.k - 1) == pushforward(here, above, x));
    }
}

TEST_CASE("SYT parity: hook lengths, cores and exact counts agree for |lambda| <= 12")
{
    std::map<std::vector<int>, std::uint64_t> memo;
    std::function<std::uint64_t(const std::vector<int>&)> count = [&](const std::vector<int>& shape) -> std::uint64_t {
        if (shape.empty())
            return 1;
        if (auto it = memo.find(shape); it != memo.end())
            return it->second;
        std::uint64_t total = 0;
        for (std::size_t i = 0; i < shape.size(); ++i)
            if (i + 1 == shape.size() || shape[i + 1] < shape[i]) {
                auto s = shape;
                if (--s[i] == 0)
                    s.pop_back();
                total += count(s);
            }
        return memo[shape] = total;
    };
    std::size_t seen = 0;
    for (int d = 0; d <= 12; ++d)
        for (const auto& p : partitions_of(d)) {
            bool exact = count(p.parts()) % 2 == 1;
            CHECK(syt_parity(p) == exact);
            CHECK(syt_parity_via_cores(p) == exact);
            ++seen;
        }
    CHECK(seen == 1 + 1 + 2 + 3 + 5 + 7 + 11 + 15 + 22 + 30 + 42 + 56 + 77);
}
