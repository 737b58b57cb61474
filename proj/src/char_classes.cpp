#include "ogr/char_classes.hpp"

#include <map>
#include <memory>

#include "ogr/error.hpp"

namespace ogr {

using f2::Flavor;
using f2::Monomial;
using f2::Polynomial;

const char* to_string(ClassKind kind)
{
    switch (kind) {
    case ClassKind::Q: return "Q";
    case ClassKind::q: return "q";
    case ClassKind::P: return "P";
    case ClassKind::p: return "p";
    }
    return "?";
}

namespace {

Flavor flavor_of(ClassKind kind) { return kind == ClassKind::q ? Flavor::W2 : Flavor::W1; }

void check_k(int k, ClassKind kind)
{
    int min_k = kind == ClassKind::Q ? 1 : 2;
    if (k < min_k)
        throw InvalidArgument(std::string(to_string(kind)) + " classes need k >= " + std::to_string(min_k));
    if (k > 64)
        throw InvalidArgument("k too large");
}

}  // namespace

ClassFamily::ClassFamily(int k, ClassKind kind) : k_(k), kind_(kind) { check_k(k, kind); }

f2::Polynomial ClassFamily::get(int j) const
{
    if (j < 0)
        return Polynomial(k_, flavor_of(kind_));
    if (j > 4 * f2::kDefaultDegreeCap)
        throw InvalidArgument("class index " + std::to_string(j) + " beyond the supported range");
    std::lock_guard lock(mu_);
    extend_to(j);
    return cache_[static_cast<std::size_t>(j)];
}

void ClassFamily::extend_to(int j) const
{
    auto at = [this](int i) -> Polynomial {
        if (i < 0)
            return Polynomial(k_, flavor_of(kind_));
        return cache_[static_cast<std::size_t>(i)];
    };
    while (static_cast<int>(cache_.size()) <= j) {
        int n = static_cast<int>(cache_.size());
        Polynomial next(k_, flavor_of(kind_));
        switch (kind_) {
        case ClassKind::Q:
            if (n == 0)
                next = Polynomial::one(k_);
            for (int i = 1; i <= k_ && i <= n; ++i)
                next += at(n - i).times(Monomial::generator(k_, i));
            break;
        case ClassKind::q:
            if (n == 0)
                next = Polynomial::one(k_, Flavor::W2);
            for (int l = 2; l <= k_ && l <= n; ++l)
                next += at(n - l).times(Monomial::generator(k_, l));
            break;
        case ClassKind::p:
            if (n >= 1)
                next = family(k_, ClassKind::Q).get(n - 1);
            for (int l = 2; l <= k_ && l <= n; ++l)
                next += at(n - l).times(Monomial::generator(k_, l));
            break;
        case ClassKind::P:
            next = family(k_, ClassKind::Q).get(n) + q_tilde(k_, n);
            break;
        }
        cache_.push_back(std::move(next));
    }
}

const ClassFamily& family(int k, ClassKind kind)
{
    static std::mutex mu;
    static std::map<std::pair<int, ClassKind>, std::unique_ptr<ClassFamily>> families;
    std::lock_guard lock(mu);
    auto& slot = families[{k, kind}];
    if (!slot)
        slot = std::make_unique<ClassFamily>(k, kind);
    return *slot;
}

Polynomial Q_class(int k, int j) { return family(k, ClassKind::Q).get(j); }
Polynomial q_class(int k, int j) { return family(k, ClassKind::q).get(j); }
Polynomial q_tilde(int k, int j) { return q_class(k, j).as_w1(); }
Polynomial P_class(int k, int j) { return family(k, ClassKind::P).get(j); }
Polynomial p_class(int k, int j) { return family(k, ClassKind::p).get(j); }

bool lucas_coefficient(std::span<const Monomial::Exponent> a)
{
    unsigned seen = 0;
    for (auto e : a) {
        if (seen & e)
            return false;
        seen |= e;
    }
    return true;
}

bool lucas_coefficient(const Monomial& m) { return lucas_coefficient(m.exponents()); }

namespace {

Polynomial lucas_filtered(int k, int j, Flavor flavor, bool need_w1)
{
    if (j < 0)
        return Polynomial(k, flavor);
    auto slice = f2::enumerate_slice(k, flavor, j);
    std::vector<Monomial> terms;
    for (const auto& m : slice.monomials) {
        if (need_w1 && m.exponent(1) == 0)
            continue;
        if (lucas_coefficient(m))
            terms.push_back(m);
    }
    return Polynomial(k, flavor, std::move(terms));
}

}  // namespace

Polynomial Q_lucas(int k, int j)
{
    check_k(k, ClassKind::Q);
    return lucas_filtered(k, j, Flavor::W1, false);
}

Polynomial q_lucas(int k, int j)
{
    check_k(k, ClassKind::q);
    return lucas_filtered(k, j, Flavor::W2, false);
}

Polynomial P_lucas(int k, int j)
{
    check_k(k, ClassKind::P);
    return lucas_filtered(k, j, Flavor::W1, true);
}

Polynomial p_lucas(int k, int j)
{
    check_k(k, ClassKind::p);
    Monomial w1 = Monomial::generator(k, 1);
    std::vector<Monomial> terms;
    Polynomial big = P_lucas(k, j);
    for (const auto& m : big.terms())
        terms.push_back(w1.quotient_of(m));
    return Polynomial(k, Flavor::W1, std::move(terms));
}

Polynomial w_component(int k, int d) { return Polynomial::w(k, d); }

}  // namespace ogr
