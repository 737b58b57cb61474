#include "ogr/grassmann_ring.hpp"

#include <algorithm>
#include <atomic>
#include <cstring>
#include <fstream>
#include <functional>
#include <thread>

#include <json.hpp>

#include "ogr/base64.hpp"
#include "ogr/char_classes.hpp"
#include "ogr/error.hpp"

namespace ogr {

using f2::BitMatrix;
using f2::BitVector;
using f2::Flavor;
using f2::Monomial;
using f2::Polynomial;

std::vector<long long> gaussian_binomial(int n, int k)
{
    if (k < 0 || k > n)
        return {};
    // [m choose j]_q = [m-1 choose j-1]_q + q^j [m-1 choose j]_q, row by row.
    std::vector<std::vector<std::vector<long long>>> row(static_cast<std::size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) {
        row[static_cast<std::size_t>(m)].resize(static_cast<std::size_t>(m) + 1);
        for (int j = 0; j <= m; ++j) {
            auto& c = row[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)];
            c.assign(static_cast<std::size_t>(j * (m - j)) + 1, 0);
            if (j == 0 || j == m) {
                c[0] = 1;
                continue;
            }
            const auto& a = row[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(j - 1)];
            const auto& b = row[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(j)];
            for (std::size_t e = 0; e < a.size(); ++e)
                c[e] += a[e];
            for (std::size_t e = 0; e < b.size(); ++e)
                c[e + static_cast<std::size_t>(j)] += b[e];
        }
    }
    return row[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

long long binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

namespace {

void check_kn(int k, int n)
{
    if (k < 1 || n < 1)
        throw InvalidArgument("k and n must be positive");
    if (k > n)
        throw InvalidArgument("k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
}

constexpr int kCacheFormatVersion = 1;

std::filesystem::path cache_path(const std::filesystem::path& dir, int k, int n, int d)
{
    return dir / ("gr-k" + std::to_string(k) + "-n" + std::to_string(n) + "-d" + std::to_string(d) + ".json");
}

std::string encode_row(const BitVector& v)
{
    std::vector<std::uint8_t> bytes;
    for (f2::Word w : v.words())
        for (int b = 0; b < 8; ++b)
            bytes.push_back(static_cast<std::uint8_t>(w >> (8 * b)));
    return base64::encode(bytes);
}

BitVector decode_row(const std::string& text, std::size_t width)
{
    auto bytes = base64::decode(text);
    BitVector v(width);
    if (bytes.size() != v.words().size() * 8)
        throw InvalidArgument("cached row has the wrong length");
    for (std::size_t i = 0; i < bytes.size(); ++i)
        v.words()[i / 8] |= static_cast<f2::Word>(bytes[i]) << (8 * (i % 8));
    if (width % f2::kWordBits && !v.words().empty() &&
        (v.words().back() >> (width % f2::kWordBits)) != 0)
        throw InvalidArgument("cached row has bits past its width");
    return v;
}

}  // namespace

struct QuotientRing::Degree {
    std::once_flag once;
    f2::DegreeSlice slice;
    std::optional<f2::RowReducer> ideal;
    std::vector<Monomial> basis;
    std::vector<std::size_t> basis_columns;
    bool from_cache = false;
};

QuotientRing::QuotientRing(int k, int n, int max_degree, RingOptions options)
    : k_(k), n_(n), options_(std::move(options))
{
    check_kn(k, n);
    int top = k * (n - k);
    max_degree_ = max_degree < 0 ? top : std::min(max_degree, top);
    if (max_degree_ > options_.degree_cap)
        throw InvalidArgument("degree " + std::to_string(max_degree_) + " exceeds the degree cap " +
                              std::to_string(options_.degree_cap));
    degrees_.resize(static_cast<std::size_t>(max_degree_) + 1);
    for (auto& d : degrees_)
        d = std::make_unique<Degree>();
}

QuotientRing::~QuotientRing() = default;

void QuotientRing::check_degree(int d) const
{
    if (d < 0)
        throw InvalidArgument("negative degree");
    if (d > max_degree_ && d <= top_degree())
        throw InvalidArgument("degree " + std::to_string(d) + " beyond the ring's max degree " +
                              std::to_string(max_degree_));
}

const QuotientRing::Degree& QuotientRing::degree(int d) const
{
    auto& deg = *degrees_[static_cast<std::size_t>(d)];
    std::call_once(deg.once, [this, d] { build(d); });
    return deg;
}

void QuotientRing::build(int d) const
{
    auto& deg = *degrees_[static_cast<std::size_t>(d)];
    deg.slice = f2::enumerate_slice(k_, Flavor::W1, d);
    std::size_t width = deg.slice.size();
    deg.ideal.emplace(width);

    bool loaded = false;
    if (options_.cache_dir) {
        auto path = cache_path(*options_.cache_dir, k_, n_, d);
        std::ifstream in(path);
        if (in) {
            try {
                auto j = nlohmann::json::parse(in);
                if (j.at("format_version") == kCacheFormatVersion && j.at("k") == k_ && j.at("n") == n_ &&
                    j.at("d") == d && j.at("monomial_order") == "lex-v1" && j.at("width") == width) {
                    f2::RowReducer red(width);
                    for (const auto& row : j.at("rows"))
                        red.insert(decode_row(row.get<std::string>(), width));
                    if (red.rank() == j.at("rank").get<std::size_t>()) {
                        deg.ideal.emplace(std::move(red));
                        loaded = true;
                    }
                }
            } catch (const std::exception&) {
                loaded = false;
            }
        }
    }

    if (!loaded) {
        deg.ideal.emplace(width);
        // I_d = sum_i w_i I_{d-i} + span{Q_d}: every w^b Q_j with b != 0 is w_i
        // times an element of a lower ideal slice.
        int lowest = n_ - k_ + 1;
        for (int i = 1; i <= k_; ++i) {
            int lower = d - i;
            if (lower < lowest)
                continue;
            const Degree& src = degree(lower);
            std::vector<std::size_t> shift(src.slice.size());
            Monomial wi = Monomial::generator(k_, i);
            for (std::size_t c = 0; c < src.slice.size(); ++c)
                shift[c] = deg.slice.position(src.slice.monomials[c] * wi);
            for (const auto& row : src.ideal->rows()) {
                BitVector v(width);
                for (std::size_t c : row.ones())
                    v.flip(shift[c]);
                deg.ideal->insert(v);
            }
        }
        if (d >= lowest && d <= n_)
            deg.ideal->insert(f2::to_coordinates(Q_class(k_, d), deg.slice));

        if (options_.cache_dir) {
            try {
                std::filesystem::create_directories(*options_.cache_dir);
                auto e = deg.ideal->echelon();
                nlohmann::json j;
                j["format_version"] = kCacheFormatVersion;
                j["k"] = k_;
                j["n"] = n_;
                j["d"] = d;
                j["monomial_order"] = "lex-v1";
                j["width"] = width;
                j["rank"] = e.rank();
                auto rows = nlohmann::json::array();
                for (std::size_t r = 0; r < e.rank(); ++r)
                    rows.push_back(encode_row(e.matrix.row(r)));
                j["rows"] = rows;
                auto path = cache_path(*options_.cache_dir, k_, n_, d);
                auto tmp = path;
                tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
                {
                    std::ofstream out(tmp);
                    out << j.dump() << '\n';
                }
                std::filesystem::rename(tmp, path);
            } catch (const std::exception&) {
                // The cache is advisory; a failed write only costs a rebuild.
            }
        }
    }
    deg.from_cache = loaded;

    for (std::size_t c = 0; c < width; ++c) {
        if (!deg.ideal->is_pivot(c)) {
            deg.basis.push_back(deg.slice.monomials[c]);
            deg.basis_columns.push_back(c);
        }
    }
    auto expected = gaussian_binomial(n_, k_);
    long long want = static_cast<std::size_t>(d) < expected.size() ? expected[static_cast<std::size_t>(d)] : 0;
    if (static_cast<long long>(deg.basis.size()) != want)
        throw InvariantViolation("dim H^" + std::to_string(d) + "(Gr_" + std::to_string(k_) + "(" +
                                 std::to_string(n_) + ")) = " + std::to_string(deg.basis.size()) +
                                 " but the box holds " + std::to_string(want) + " partitions");
}

std::size_t QuotientRing::dim(int d) const
{
    if (d < 0 || d > top_degree())
        return 0;
    check_degree(d);
    return degree(d).basis.size();
}

std::vector<std::size_t> QuotientRing::hilbert() const
{
    std::vector<std::size_t> h;
    for (int d = 0; d <= max_degree_; ++d)
        h.push_back(dim(d));
    return h;
}

std::size_t QuotientRing::total_dim() const
{
    std::size_t t = 0;
    for (auto x : hilbert())
        t += x;
    return t;
}

std::size_t QuotientRing::ideal_rank(int d) const
{
    check_degree(d);
    if (d > top_degree())
        return f2::slice_size(k_, Flavor::W1, d);
    return degree(d).ideal->rank();
}

const f2::DegreeSlice& QuotientRing::slice(int d) const
{
    check_degree(d);
    if (d > top_degree())
        throw InvalidArgument("no slice stored above the top degree");
    return degree(d).slice;
}

const std::vector<Monomial>& QuotientRing::basis(int d) const
{
    static const std::vector<Monomial> empty;
    if (d < 0 || d > top_degree())
        return empty;
    check_degree(d);
    return degree(d).basis;
}

bool QuotientRing::loaded_from_cache(int d) const
{
    check_degree(d);
    return d <= top_degree() && degree(d).from_cache;
}

CohomologyClass QuotientRing::zero(int d) const { return {d, BitVector(dim(d))}; }

CohomologyClass QuotientRing::reduce(const Polynomial& p) const
{
    if (p.is_zero())
        throw InvalidArgument("reduce: the degree of 0 is ambiguous; pass it explicitly");
    return reduce(p, p.degree());
}

CohomologyClass QuotientRing::reduce(const Polynomial& p, int d) const
{
    if (p.k() != k_)
        throw InvalidArgument("reduce: polynomial over k = " + std::to_string(p.k()) + " in a ring with k = " +
                              std::to_string(k_));
    check_degree(d);
    if (!p.is_zero() && p.degree() != d)
        throw InvalidArgument("reduce: polynomial is not of degree " + std::to_string(d));
    if (d > top_degree())
        return zero(d);
    const Degree& deg = degree(d);
    BitVector residue = deg.ideal->reduce(f2::to_coordinates(p.as_w1(), deg.slice));
    BitVector coords(deg.basis.size());
    for (std::size_t i = 0; i < deg.basis_columns.size(); ++i)
        if (residue.get(deg.basis_columns[i]))
            coords.set(i);
    return {d, std::move(coords)};
}

Polynomial QuotientRing::lift(const CohomologyClass& x) const
{
    const auto& b = basis(x.degree);
    if (x.coords.size() != b.size())
        throw InvalidArgument("class coordinates do not match the ring");
    std::vector<Monomial> terms;
    for (std::size_t i : x.coords.ones())
        terms.push_back(b[i]);
    return Polynomial(k_, Flavor::W1, std::move(terms));
}

CohomologyClass QuotientRing::multiply(const CohomologyClass& x, const CohomologyClass& y) const
{
    return reduce(lift(x) * lift(y), x.degree + y.degree);
}

BitMatrix QuotientRing::mult_map(const Polynomial& m, int d) const
{
    if (m.is_zero() || !m.is_homogeneous())
        throw InvalidArgument("mult_map needs a nonzero homogeneous multiplier");
    int e = m.degree();
    check_degree(d);
    check_degree(d + e);
    const auto& src = basis(d);
    BitMatrix out(src.size(), dim(d + e));
    for (std::size_t i = 0; i < src.size(); ++i)
        out.set_row(i, reduce(m.as_w1().times(src[i]), d + e).coords);
    return out;
}

void QuotientRing::build_all(int threads) const
{
    int top = std::min(max_degree_, top_degree());
    if (threads <= 1) {
        for (int d = 0; d <= top; ++d)
            degree(d);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::jthread> pool;
    std::exception_ptr failure;
    std::mutex failure_mu;
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            try {
                for (int d = next++; d <= top; d = next++)
                    degree(d);
            } catch (...) {
                std::lock_guard lock(failure_mu);
                if (!failure)
                    failure = std::current_exception();
            }
        });
    }
    pool.clear();
    if (failure)
        std::rethrow_exception(failure);
}

CohomologyClass pullback(const QuotientRing& source, const QuotientRing& target, const CohomologyClass& x)
{
    if (source.k() != target.k())
        throw InvalidArgument("pullback needs rings with the same k");
    if (target.n() >= source.n())
        throw InvalidArgument("pullback goes from Gr_k(n) to Gr_k(m) with m < n");
    return target.reduce(source.lift(x), x.degree);
}

CohomologyClass pushforward(const QuotientRing& source, const QuotientRing& target, const CohomologyClass& x)
{
    if (source.k() != target.k())
        throw InvalidArgument("pushforward needs rings with the same k");
    int j = target.n() - source.n();
    if (j < 0)
        throw InvalidArgument("pushforward goes from Gr_k(n) to Gr_k(n + j) with j >= 0");
    int k = source.k();
    Polynomial lifted = source.lift(x).times(Monomial::generator(k, k, j));
    return target.reduce(lifted, x.degree + j * k);
}

// ---------------------------------------------------------------------------

SchubertRing::SchubertRing(int k, int n, RingOptions options) : k_(k), n_(n), options_(std::move(options))
{
    check_kn(k, n);
    if (top_degree() > options_.degree_cap)
        throw InvalidArgument("top degree " + std::to_string(top_degree()) + " exceeds the degree cap " +
                              std::to_string(options_.degree_cap));
    basis_.resize(static_cast<std::size_t>(top_degree()) + 1);
    index_.resize(basis_.size());
    for (int d = 0; d <= top_degree(); ++d) {
        basis_[static_cast<std::size_t>(d)] = partitions_in_box(k, n - k, d);
        auto& idx = index_[static_cast<std::size_t>(d)];
        const auto& b = basis_[static_cast<std::size_t>(d)];
        for (std::size_t i = 0; i < b.size(); ++i)
            idx.emplace(b[i], i);
    }
    auto expected = gaussian_binomial(n, k);
    for (int d = 0; d <= top_degree(); ++d)
        if (static_cast<long long>(dim(d)) != expected[static_cast<std::size_t>(d)])
            throw InvariantViolation("Schubert basis size disagrees with the Gaussian binomial in degree " +
                                     std::to_string(d));
}

void SchubertRing::check_degree(int d) const
{
    if (d < 0)
        throw InvalidArgument("negative degree");
    if (d > options_.degree_cap)
        throw InvalidArgument("degree " + std::to_string(d) + " exceeds the degree cap");
}

std::size_t SchubertRing::dim(int d) const
{
    if (d < 0 || d > top_degree())
        return 0;
    return basis_[static_cast<std::size_t>(d)].size();
}

std::vector<std::size_t> SchubertRing::hilbert() const
{
    std::vector<std::size_t> h;
    for (int d = 0; d <= top_degree(); ++d)
        h.push_back(dim(d));
    return h;
}

std::size_t SchubertRing::total_dim() const
{
    std::size_t t = 0;
    for (auto x : hilbert())
        t += x;
    return t;
}

const std::vector<Partition>& SchubertRing::basis(int d) const
{
    static const std::vector<Partition> empty;
    if (d < 0 || d > top_degree())
        return empty;
    return basis_[static_cast<std::size_t>(d)];
}

std::size_t SchubertRing::position(const Partition& lambda) const
{
    int d = lambda.size();
    if (d > top_degree() || !lambda.in_box(k_, n_ - k_))
        throw InvalidArgument("partition " + lambda.to_string() + " is outside the box");
    return index_[static_cast<std::size_t>(d)].at(lambda);
}

CohomologyClass SchubertRing::zero(int d) const
{
    check_degree(d);
    return {d, BitVector(dim(d))};
}

CohomologyClass SchubertRing::schubert_class(const Partition& lambda) const
{
    CohomologyClass x = zero(lambda.size());
    if (lambda.in_box(k_, n_ - k_))
        x.coords.set(position(lambda));
    return x;
}

namespace {

// Partitions mu containing lambda, inside the rows x cols box, with mu/lambda
// a vertical strip of `size` boxes (at most one new box per row).
void vertical_strips(const std::vector<int>& lambda, int rows, int cols, int size, int row,
                     std::vector<int>& mu, std::vector<Partition>& out)
{
    if (size == 0) {
        out.emplace_back(mu);
        return;
    }
    if (row >= rows || rows - row < size)
        return;
    int cur = row < static_cast<int>(lambda.size()) ? lambda[static_cast<std::size_t>(row)] : 0;
    int above = row == 0 ? cols : mu[static_cast<std::size_t>(row - 1)];
    if (cur + 1 <= above && cur + 1 <= cols) {
        mu[static_cast<std::size_t>(row)] = cur + 1;
        vertical_strips(lambda, rows, cols, size - 1, row + 1, mu, out);
        mu[static_cast<std::size_t>(row)] = cur;
    }
    vertical_strips(lambda, rows, cols, size, row + 1, mu, out);
}

}  // namespace

BitMatrix SchubertRing::build_map(MapKind kind, int i, int d) const
{
    const auto& src = basis(d);
    int target = d + (kind == MapKind::W ? i : 1);
    BitMatrix out(src.size(), dim(target));
    if (dim(target) == 0)
        return out;
    int cols = n_ - k_;
    for (std::size_t r = 0; r < src.size(); ++r) {
        std::vector<int> lambda = src[r].parts();
        if (kind == MapKind::W) {
            std::vector<int> mu = lambda;
            mu.resize(static_cast<std::size_t>(k_), 0);
            std::vector<Partition> strips;
            vertical_strips(lambda, k_, cols, i, 0, mu, strips);
            for (const auto& p : strips)
                out.set(r, index_[static_cast<std::size_t>(target)].at(p));
            continue;
        }
        // Single added boxes; the box at (row, col) has content col - row.
        for (int row = 1; row <= k_; ++row) {
            int cur = src[r].part(row);
            int above = row == 1 ? cols : src[r].part(row - 1);
            if (cur >= above || cur >= cols)
                continue;
            bool odd = ((cur + 1 - row) & 1) != 0;
            if (odd != (kind == MapKind::Sq1))
                continue;
            std::vector<int> mu = lambda;
            if (row > static_cast<int>(mu.size()))
                mu.push_back(1);
            else
                ++mu[static_cast<std::size_t>(row - 1)];
            out.set(r, index_[static_cast<std::size_t>(target)].at(Partition(std::move(mu))));
        }
    }
    return out;
}

const BitMatrix& SchubertRing::cached_map(MapKind kind, int i, int d) const
{
    check_degree(d);
    auto key = std::make_tuple(static_cast<int>(kind), i, d);
    {
        std::lock_guard lock(mu_);
        if (auto it = maps_.find(key); it != maps_.end())
            return *it->second;
    }
    auto built = std::make_unique<BitMatrix>(build_map(kind, i, d));
    std::lock_guard lock(mu_);
    auto [it, inserted] = maps_.emplace(key, std::move(built));
    return *it->second;
}

const BitMatrix& SchubertRing::w_map(int i, int d) const
{
    if (i < 1 || i > k_)
        throw InvalidArgument("w_" + std::to_string(i) + " is not a generator for k = " + std::to_string(k_));
    return cached_map(MapKind::W, i, d);
}

const BitMatrix& SchubertRing::sq1_map(int d) const { return cached_map(MapKind::Sq1, 1, d); }
const BitMatrix& SchubertRing::sq1L_map(int d) const { return cached_map(MapKind::Sq1L, 1, d); }

CohomologyClass SchubertRing::multiply_monomial(const CohomologyClass& x, const Monomial& m) const
{
    if (m.k() != k_)
        throw InvalidArgument("monomial variable count differs from the ring's k");
    CohomologyClass cur = x;
    for (int i = k_; i >= 1; --i) {
        for (int e = 0; e < m.exponent(i); ++e) {
            if (cur.degree > top_degree())
                break;
            cur.coords = f2::row_combination(cur.coords, w_map(i, cur.degree));
            cur.degree += i;
        }
    }
    cur.degree = x.degree + m.degree();
    if (cur.coords.size() != dim(cur.degree))
        cur.coords = BitVector(dim(cur.degree));
    return cur;
}

CohomologyClass SchubertRing::reduce(const Polynomial& p) const
{
    if (p.is_zero())
        throw InvalidArgument("reduce: the degree of 0 is ambiguous; pass it explicitly");
    return reduce(p, p.degree());
}

CohomologyClass SchubertRing::reduce(const Polynomial& p, int d) const
{
    if (p.k() != k_)
        throw InvalidArgument("reduce: polynomial variable count differs from the ring's k");
    if (!p.is_zero() && p.degree() != d)
        throw InvalidArgument("reduce: polynomial is not of degree " + std::to_string(d));
    CohomologyClass out = zero(d);
    if (d > top_degree())
        return out;
    // Memoized expansion of a monomial: peel one w_i off the largest index.
    std::function<BitVector(const Monomial&)> expand = [&](const Monomial& m) -> BitVector {
        int deg = m.degree();
        if (deg > top_degree())
            return BitVector(0);
        if (m.is_one())
            return schubert_class(Partition()).coords;
        {
            std::lock_guard lock(mu_);
            if (auto it = monomial_memo_.find(m); it != monomial_memo_.end())
                return it->second;
        }
        int i = k_;
        while (m.exponent(i) == 0)
            --i;
        auto exps = m.exponents();
        --exps[static_cast<std::size_t>(i - 1)];
        BitVector v = f2::row_combination(expand(Monomial(exps)), w_map(i, deg - i));
        std::lock_guard lock(mu_);
        monomial_memo_.emplace(m, v);
        return v;
    };
    for (const auto& t : p.terms())
        out.coords ^= expand(t);
    return out;
}

Polynomial SchubertRing::to_polynomial(const CohomologyClass& x) const
{
    Polynomial p(k_, Flavor::W1);
    const auto& b = basis(x.degree);
    for (std::size_t i : x.coords.ones())
        p += schubert_to_monomials(b[i], k_);
    return p;
}

BitMatrix SchubertRing::mult_map(const Polynomial& m, int d) const
{
    if (m.is_zero() || !m.is_homogeneous())
        throw InvalidArgument("mult_map needs a nonzero homogeneous multiplier");
    int e = m.degree();
    BitMatrix out(dim(d), dim(d + e));
    for (std::size_t r = 0; r < dim(d); ++r) {
        CohomologyClass acc = zero(d + e);
        CohomologyClass unit = zero(d);
        unit.coords.set(r);
        for (const auto& t : m.terms())
            acc.coords ^= multiply_monomial(unit, t).coords;
        out.set_row(r, acc.coords);
    }
    return out;
}

}  // namespace ogr

namespace ogr {

namespace {

template <class Ring, class MapFn>
W1Data ker_coker_w1_impl(const Ring& ring, int max_degree, MapFn w1_map)
{
    W1Data out;
    int top = ring.top_degree();
    out.last_degree = max_degree >= top ? top : max_degree - 1;
    std::size_t prev_rank = 0;
    for (int d = 0; d <= out.last_degree; ++d) {
        f2::BitMatrix m = w1_map(d);
        std::size_t dim = ring.dim(d);
        auto kernel = f2::left_kernel(m);
        std::size_t rank = dim - kernel.size();
        out.dims.push_back(dim);
        out.rank_out.push_back(rank);
        out.ker_dim.push_back(kernel.size());
        out.coker_dim.push_back(dim - prev_rank);
        out.oriented_betti.push_back(dim - prev_rank + kernel.size());
        out.kernel.push_back(std::move(kernel));
        prev_rank = rank;
    }
    return out;
}

}  // namespace

W1Data ker_coker_w1(const QuotientRing& ring)
{
    Polynomial w1 = Polynomial::w(ring.k(), 1);
    return ker_coker_w1_impl(ring, ring.max_degree(), [&](int d) {
        if (d + 1 > ring.top_degree())
            return BitMatrix(ring.dim(d), 0);
        return ring.mult_map(w1, d);
    });
}

W1Data ker_coker_w1(const SchubertRing& ring)
{
    return ker_coker_w1_impl(ring, ring.top_degree(), [&](int d) { return ring.w_map(1, d); });
}

CharRank char_rank(const W1Data& data)
{
    for (std::size_t d = 0; d < data.ker_dim.size(); ++d)
        if (data.ker_dim[d] > 0)
            return {static_cast<int>(d) - 1, true};
    return {data.last_degree, false};
}

}  // namespace ogr
