#include "ogr/polynomial.hpp"

#include <algorithm>
#include <functional>

#include "ogr/error.hpp"

namespace ogr::f2 {

Monomial::Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {}

Monomial::Monomial(std::initializer_list<int> exponents)
{
    exps_.reserve(exponents.size());
    for (int e : exponents) {
        if (e < 0)
            throw InvalidArgument("negative exponent");
        exps_.push_back(static_cast<Exponent>(e));
    }
}

Monomial Monomial::generator(int k, int i, int power)
{
    if (i < 1 || i > k)
        throw InvalidArgument("generator index out of range");
    Monomial m = one(k);
    m.exps_[static_cast<std::size_t>(i - 1)] = static_cast<Exponent>(power);
    return m;
}

int Monomial::degree() const
{
    int d = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        d += static_cast<int>(i + 1) * exps_[i];
    return d;
}

int Monomial::total() const
{
    int t = 0;
    for (Exponent e : exps_)
        t += e;
    return t;
}

bool Monomial::is_one() const
{
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const
{
    if (other.exps_.size() != exps_.size())
        return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i])
            return false;
    return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const
{
    if (!divides(other))
        throw InvalidArgument("monomial does not divide");
    Monomial q = other;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        q.exps_[i] = static_cast<Exponent>(q.exps_[i] - exps_[i]);
    return q;
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    if (a.exps_.size() != b.exps_.size())
        throw InvalidArgument("monomials over different variable counts");
    Monomial p = a;
    for (std::size_t i = 0; i < p.exps_.size(); ++i)
        p.exps_[i] = static_cast<Monomial::Exponent>(p.exps_[i] + b.exps_[i]);
    return p;
}

std::string Monomial::to_string() const
{
    std::string s;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0)
            continue;
        if (!s.empty())
            s += '*';
        s += 'w' + std::to_string(i + 1);
        if (exps_[i] > 1)
            s += '^' + std::to_string(exps_[i]);
    }
    return s.empty() ? "1" : s;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept
{
    std::size_t h = 1469598103934665603ULL;
    for (auto e : m.exponents()) {
        h ^= e;
        h *= 1099511628211ULL;
    }
    return h;
}

std::vector<Monomial> cancel_pairs(std::vector<Monomial> terms)
{
    std::sort(terms.begin(), terms.end(), std::greater<>());
    std::vector<Monomial> out;
    out.reserve(terms.size());
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i;
        while (j < terms.size() && terms[j] == terms[i])
            ++j;
        if ((j - i) % 2 == 1)
            out.push_back(std::move(terms[i]));
        i = j;
    }
    return out;
}

Polynomial::Polynomial(int k, Flavor flavor, std::vector<Monomial> terms) : k_(k), flavor_(flavor)
{
    for (const auto& m : terms) {
        if (m.k() != k)
            throw InvalidArgument("monomial variable count differs from ambient k");
        if (flavor == Flavor::W2 && k >= 1 && m.exponent(1) != 0)
            throw InvalidArgument("W2 polynomial may not contain w1");
    }
    terms_ = cancel_pairs(std::move(terms));
}

Polynomial Polynomial::one(int k, Flavor flavor) { return Polynomial(k, flavor, {Monomial::one(k)}); }

Polynomial Polynomial::monomial(const Monomial& m, Flavor flavor) { return Polynomial(m.k(), flavor, {m}); }

Polynomial Polynomial::w(int k, int i, Flavor flavor)
{
    if (i == 0)
        return one(k, flavor);
    if (i < 0 || i > k)
        return Polynomial(k, flavor);
    if (i == 1 && flavor == Flavor::W2)
        throw InvalidArgument("w1 is not an element of W2");
    return Polynomial(k, flavor, {Monomial::generator(k, i)});
}

bool Polynomial::contains(const Monomial& m) const
{
    return std::binary_search(terms_.begin(), terms_.end(), m, std::greater<>());
}

bool Polynomial::is_homogeneous() const
{
    if (terms_.empty())
        return true;
    int d = terms_.front().degree();
    return std::all_of(terms_.begin(), terms_.end(), [d](const Monomial& m) { return m.degree() == d; });
}

int Polynomial::degree() const
{
    if (terms_.empty())
        throw InvalidArgument("degree of the zero polynomial");
    if (!is_homogeneous())
        throw InvalidArgument("polynomial is not homogeneous: " + to_string());
    return terms_.front().degree();
}

void Polynomial::check_compatible(const Polynomial& o) const
{
    if (k_ != o.k_)
        throw InvalidArgument("polynomials over different variable counts (k=" + std::to_string(k_) + " vs k=" +
                              std::to_string(o.k_) + ")");
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    check_compatible(o);
    std::vector<Monomial> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    std::set_symmetric_difference(terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
                                  std::back_inserter(merged), std::greater<>());
    terms_ = std::move(merged);
    if (o.flavor_ == Flavor::W1)
        flavor_ = Flavor::W1;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    a.check_compatible(b);
    Flavor f = (a.flavor_ == Flavor::W2 && b.flavor_ == Flavor::W2) ? Flavor::W2 : Flavor::W1;
    std::vector<Monomial> prods;
    prods.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_)
            prods.push_back(x * y);
    Polynomial p(a.k_, f);
    p.terms_ = cancel_pairs(std::move(prods));
    return p;
}

Polynomial Polynomial::pow(int e) const
{
    if (e < 0)
        throw InvalidArgument("negative power");
    Polynomial result = one(k_, flavor_);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1)
            result *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return result;
}

Polynomial Polynomial::times(const Monomial& m) const
{
    if (m.k() != k_)
        throw InvalidArgument("monomial variable count differs from ambient k");
    Polynomial p(k_, flavor_);
    if (flavor_ == Flavor::W2 && k_ >= 1 && m.exponent(1) != 0)
        p.flavor_ = Flavor::W1;
    p.terms_.reserve(terms_.size());
    // Multiplying by a fixed monomial preserves the lexicographic order.
    for (const auto& t : terms_)
        p.terms_.push_back(t * m);
    return p;
}

Polynomial Polynomial::as_w1() const
{
    Polynomial p = *this;
    p.flavor_ = Flavor::W1;
    return p;
}

Polynomial Polynomial::reduce_w1() const
{
    Polynomial p(k_, Flavor::W2);
    for (const auto& t : terms_)
        if (k_ < 1 || t.exponent(1) == 0)
            p.terms_.push_back(t);
    return p;
}

std::string Polynomial::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    for (const auto& t : terms_) {
        if (!s.empty())
            s += " + ";
        s += t.to_string();
    }
    return s;
}

namespace {

// Exponent vectors of weighted degree `remaining` using variables first..k,
// emitted in decreasing lexicographic order.
void enumerate_rec(int k, int var, int remaining, std::vector<Monomial::Exponent>& exps,
                   std::vector<Monomial>& out)
{
    if (var > k) {
        if (remaining == 0)
            out.emplace_back(exps);
        return;
    }
    if (var == k) {
        if (remaining % var == 0) {
            exps[static_cast<std::size_t>(var - 1)] = static_cast<Monomial::Exponent>(remaining / var);
            out.emplace_back(exps);
            exps[static_cast<std::size_t>(var - 1)] = 0;
        }
        return;
    }
    for (int a = remaining / var; a >= 0; --a) {
        exps[static_cast<std::size_t>(var - 1)] = static_cast<Monomial::Exponent>(a);
        enumerate_rec(k, var + 1, remaining - a * var, exps, out);
    }
    exps[static_cast<std::size_t>(var - 1)] = 0;
}

}  // namespace

std::size_t DegreeSlice::position(const Monomial& m) const
{
    auto it = index.find(m);
    if (it == index.end())
        throw InvariantViolation("monomial " + m.to_string() + " missing from degree " + std::to_string(degree) +
                                 " slice");
    return it->second;
}

DegreeSlice enumerate_slice(int k, Flavor flavor, int degree)
{
    if (k < 1)
        throw InvalidArgument("enumerate_slice: k must be >= 1");
    if (degree < 0)
        throw InvalidArgument("enumerate_slice: negative degree");
    DegreeSlice s;
    s.degree = degree;
    s.k = k;
    s.flavor = flavor;
    std::vector<Monomial::Exponent> exps(static_cast<std::size_t>(k), 0);
    int first = flavor == Flavor::W1 ? 1 : 2;
    if (first > k) {
        if (degree == 0)
            s.monomials.emplace_back(exps);
    } else {
        enumerate_rec(k, first, degree, exps, s.monomials);
    }
    s.index.reserve(s.monomials.size());
    for (std::size_t i = 0; i < s.monomials.size(); ++i)
        s.index.emplace(s.monomials[i], i);
    return s;
}

std::size_t slice_size(int k, Flavor flavor, int degree)
{
    if (degree < 0)
        return 0;
    int first = flavor == Flavor::W1 ? 1 : 2;
    std::vector<std::size_t> ways(static_cast<std::size_t>(degree) + 1, 0);
    ways[0] = 1;
    for (int part = first; part <= k; ++part)
        for (int d = part; d <= degree; ++d)
            ways[static_cast<std::size_t>(d)] += ways[static_cast<std::size_t>(d - part)];
    return ways[static_cast<std::size_t>(degree)];
}

BitVector to_coordinates(const Polynomial& p, const DegreeSlice& slice)
{
    if (p.k() != slice.k)
        throw InvalidArgument("to_coordinates: variable count mismatch");
    if (slice.flavor == Flavor::W2 && p.flavor() == Flavor::W1)
        for (const auto& t : p.terms())
            if (t.exponent(1) != 0)
                throw InvalidArgument("to_coordinates: W1 polynomial in a W2 slice");
    BitVector v(slice.size());
    for (const auto& t : p.terms()) {
        if (t.degree() != slice.degree)
            throw InvalidArgument("to_coordinates: polynomial is not homogeneous of degree " +
                                  std::to_string(slice.degree));
        v.flip(slice.position(t));
    }
    return v;
}

Polynomial from_coordinates(const BitVector& v, const DegreeSlice& slice)
{
    std::vector<Monomial> terms;
    for (std::size_t i : v.ones())
        terms.push_back(slice.monomials[i]);
    return Polynomial(slice.k, slice.flavor, std::move(terms));
}

}  // namespace ogr::f2
