#include "ogr/koszul.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <json.hpp>

#include "ogr/char_classes.hpp"
#include "ogr/error.hpp"

namespace ogr {

using f2::BitMatrix;
using f2::BitVector;
using f2::Flavor;
using f2::Monomial;
using f2::Polynomial;

namespace {

void check_tuple(const RelationTuple& r)
{
    if (r.k < 2)
        throw InvalidArgument("relation tuples need k >= 2");
    if (static_cast<int>(r.c.size()) != r.k)
        throw InvalidArgument("relation tuple must have k coefficients");
    for (int j = 0; j < r.k; ++j) {
        const auto& cj = r.c[static_cast<std::size_t>(j)];
        if (cj.k() != r.k)
            throw InvalidArgument("coefficient over the wrong variable count");
        if (!cj.is_zero() && cj.degree() != r.degree - (r.n - j))
            throw InvalidArgument("coefficient c_" + std::to_string(j) + " has the wrong degree");
        for (const auto& t : cj.terms())
            if (t.exponent(1) != 0)
                throw InvalidArgument("relation coefficients must lie in W2");
    }
}

Polynomial wk(int k, int i) { return Polynomial::w(k, i, Flavor::W2); }

}  // namespace

RelationTuple RelationTuple::zero(int k, int n, int degree)
{
    return {k, n, degree, std::vector<Polynomial>(static_cast<std::size_t>(k), Polynomial(k, Flavor::W2))};
}

bool RelationTuple::is_zero() const
{
    return std::all_of(c.begin(), c.end(), [](const Polynomial& p) { return p.is_zero(); });
}

std::string RelationTuple::to_string() const
{
    std::string s = "(";
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (j)
            s += ", ";
        s += c[j].to_string();
    }
    return s + ")";
}

Polynomial relation_sum(const RelationTuple& r)
{
    check_tuple(r);
    Polynomial s(r.k, Flavor::W2);
    for (int j = 0; j < r.k; ++j) {
        const auto& cj = r.c[static_cast<std::size_t>(j)];
        if (!cj.is_zero())
            s += cj * q_class(r.k, r.n - j);
    }
    return s;
}

bool is_relation(const RelationTuple& r)
{
    try {
        return relation_sum(r).is_zero();
    } catch (const InvalidArgument&) {
        return false;
    }
}

std::vector<RelationTuple> relations_in_degree(int k, int n, int d)
{
    if (k < 2 || k > n)
        throw InvalidArgument("relations need 2 <= k <= n");
    // Domain: the W2 slice of degree d - (n - j) for each j, concatenated.
    struct Block {
        int j;
        f2::DegreeSlice slice;
    };
    std::vector<Block> blocks;
    for (int j = 0; j < k; ++j) {
        int e = d - (n - j);
        if (e < 0)
            continue;
        blocks.push_back({j, f2::enumerate_slice(k, Flavor::W2, e)});
    }
    f2::DegreeSlice target = f2::enumerate_slice(k, Flavor::W2, d);
    std::size_t rows = 0;
    for (const auto& b : blocks)
        rows += b.slice.size();
    BitMatrix m(rows, target.size());
    std::size_t r = 0;
    for (const auto& b : blocks) {
        Polynomial q = q_class(k, n - b.j);
        for (const auto& mono : b.slice.monomials)
            m.set_row(r++, f2::to_coordinates(q.times(mono), target));
    }
    std::vector<RelationTuple> out;
    for (const auto& combo : f2::left_kernel(m)) {
        RelationTuple t = RelationTuple::zero(k, n, d);
        std::size_t offset = 0;
        for (const auto& b : blocks) {
            std::vector<Monomial> terms;
            for (std::size_t i = 0; i < b.slice.size(); ++i)
                if (combo.get(offset + i))
                    terms.push_back(b.slice.monomials[i]);
            t.c[static_cast<std::size_t>(b.j)] = Polynomial(k, Flavor::W2, std::move(terms));
            offset += b.slice.size();
        }
        if (!is_relation(t))
            throw InvariantViolation("kernel vector is not a relation: " + t.to_string());
        out.push_back(std::move(t));
    }
    return out;
}

Polynomial koszul_boundary(const RelationTuple& r)
{
    if (!is_relation(r))
        throw InvalidArgument("koszul_boundary needs a valid relation");
    Polynomial s(r.k, Flavor::W1);
    for (int j = 0; j < r.k; ++j) {
        const auto& cj = r.c[static_cast<std::size_t>(j)];
        if (!cj.is_zero())
            s += cj.as_w1() * p_class(r.k, r.n - j);
    }
    return s;
}

RelationTuple descend(const RelationTuple& r)
{
    if (!is_relation(r))
        throw InvalidArgument("descend needs a valid relation");
    int k = r.k;
    RelationTuple out = RelationTuple::zero(k, r.n - 1, r.degree);
    const auto& c = r.c;
    out.c[0] = c[1];
    for (int j = 1; j <= k - 2; ++j)
        out.c[static_cast<std::size_t>(j)] = c[0] * wk(k, j + 1) + c[static_cast<std::size_t>(j + 1)];
    out.c[static_cast<std::size_t>(k - 1)] = c[0] * wk(k, k);
    if (!is_relation(out))
        throw InvariantViolation("descend produced a non-relation from " + r.to_string());
    return out;
}

RelationTuple ascend(const RelationTuple& r)
{
    if (!is_relation(r))
        throw InvalidArgument("ascend needs a valid relation");
    int k = r.k;
    RelationTuple out = RelationTuple::zero(k, r.n + 1, r.degree + k);
    const auto& c = r.c;
    const auto& last = c[static_cast<std::size_t>(k - 1)];
    out.c[0] = last;
    out.c[1] = c[0] * wk(k, k);
    for (int j = 2; j <= k - 1; ++j)
        out.c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] * wk(k, k) + last * wk(k, j);
    if (!is_relation(out))
        throw InvariantViolation("ascend produced a non-relation from " + r.to_string());
    return out;
}

DeficiencyResult deficiency(int k, int n)
{
    if (k < 2 || k > n)
        throw InvalidArgument("deficiency needs 2 <= k <= n");
    for (int j = n - k + 1; j <= n; ++j) {
        f2::DegreeSlice target = f2::enumerate_slice(k, Flavor::W2, j);
        f2::RowReducer span(target.size());
        for (int i = n - k + 1; i < j; ++i) {
            Polynomial q = q_class(k, i);
            for (const auto& g : f2::enumerate_slice(k, Flavor::W2, j - i).monomials)
                span.insert(f2::to_coordinates(q.times(g), target));
        }
        if (span.contains(f2::to_coordinates(q_class(k, j), target)))
            return {0, j};
    }
    return {1, std::nullopt};
}

std::string CertificateGenerator::to_string() const
{
    std::string m = multiplier.is_one() ? "" : multiplier.to_string() + "*";
    return m + "q" + std::to_string(q_index);
}

bool generator_coefficient(const CertificateGenerator& g, const Monomial& a)
{
    if (!g.multiplier.divides(a))
        return false;
    Monomial c = g.multiplier.quotient_of(a);
    if (c.exponent(1) != 0)
        return false;
    if (c.degree() != g.q_index)
        return false;
    return lucas_coefficient(c);
}

std::vector<CertificateGenerator> generators_in_degree(int k, int n, int d)
{
    std::vector<CertificateGenerator> out;
    for (int j = n - k + 1; j <= n; ++j) {
        if (j > d)
            break;
        for (const auto& b : f2::enumerate_slice(k, Flavor::W2, d - j).monomials)
            out.push_back({b, j});
    }
    return out;
}

std::optional<SeparatingCertificate> find_certificate(int k, int n, int d)
{
    if (k < 2 || k > n)
        throw InvalidArgument("certificates need 2 <= k <= n");
    auto gens = generators_in_degree(k, n, d);
    std::vector<std::set<Monomial>> support;
    for (const auto& g : gens) {
        std::set<Monomial> s;
        Polynomial q = q_class(k, g.q_index);
        for (const auto& t : q.terms())
            s.insert(t * g.multiplier);
        support.push_back(std::move(s));
    }
    // How many remaining generators contain each monomial.
    std::map<Monomial, int> owners;
    for (const auto& s : support)
        for (const auto& m : s)
            ++owners[m];

    std::vector<bool> used(gens.size(), false);
    std::vector<std::size_t> order;
    std::vector<Monomial> chosen;
    for (std::size_t step = 0; step < gens.size(); ++step) {
        std::optional<std::size_t> best;
        Monomial best_mono;
        for (std::size_t g = 0; g < gens.size(); ++g) {
            if (used[g])
                continue;
            // Fewest terms first; ties keep the generator order.
            if (best && support[g].size() >= support[*best].size())
                continue;
            for (auto it = support[g].rbegin(); it != support[g].rend(); ++it) {
                if (owners[*it] == 1) {
                    best = g;
                    best_mono = *it;
                    break;
                }
            }
        }
        if (!best)
            return std::nullopt;
        used[*best] = true;
        order.push_back(*best);
        chosen.push_back(best_mono);
        for (const auto& m : support[*best])
            --owners[m];
    }
    SeparatingCertificate cert;
    cert.k = k;
    cert.n = n;
    cert.degree = d;
    for (std::size_t g : order)
        cert.generators.push_back(gens[g]);
    cert.monomials = chosen;
    cert.matrix = BitMatrix(chosen.size(), order.size());
    for (std::size_t i = 0; i < chosen.size(); ++i)
        for (std::size_t j = 0; j < order.size(); ++j)
            cert.matrix.set(i, j, generator_coefficient(cert.generators[j], chosen[i]));
    if (!verify_certificate(cert))
        throw InvariantViolation("peeling produced an invalid certificate");
    return cert;
}

bool verify_certificate(const SeparatingCertificate& cert)
{
    std::size_t r = cert.generators.size();
    if (cert.monomials.size() != r || cert.matrix.rows() != r || cert.matrix.cols() != r)
        throw InvalidArgument("certificate is not square");
    for (const auto& g : cert.generators) {
        if (g.multiplier.k() != cert.k)
            throw InvalidArgument("certificate generator over the wrong variable count");
        if (g.degree() != cert.degree || g.q_index <= cert.n - cert.k || g.q_index > cert.n ||
            g.multiplier.exponent(1) != 0)
            return false;
    }
    for (const auto& m : cert.monomials) {
        if (m.k() != cert.k)
            throw InvalidArgument("certificate monomial over the wrong variable count");
        if (m.degree() != cert.degree)
            return false;
    }
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            bool entry = generator_coefficient(cert.generators[j], cert.monomials[i]);
            if (entry != cert.matrix.get(i, j))
                return false;
            if (j > i && entry)
                return false;
            if (j == i && !entry)
                return false;
        }
    }
    return true;
}

bool covers_all_generators(const SeparatingCertificate& cert)
{
    auto all = generators_in_degree(cert.k, cert.n, cert.degree);
    if (all.size() != cert.generators.size())
        return false;
    for (const auto& g : all)
        if (std::count(cert.generators.begin(), cert.generators.end(), g) != 1)
            return false;
    return true;
}

SeparatingCertificate appendix_certificate(int figure, int t)
{
    if (t < 4 || t > 12)
        throw InvalidArgument("the parametric tables need 4 <= t <= 12");
    const int k = 5;
    const int top = (1 << t) - 1;
    const int h = 1 << (t - 1);  // 2^{t-1}
    const int qq = 1 << (t - 2); // 2^{t-2}
    auto mono = [](int a2, int a3, int a4, int a5) { return Monomial{0, a2, a3, a4, a5}; };
    SeparatingCertificate cert;
    cert.k = k;
    cert.n = top;
    switch (figure) {
    case 1:
        cert.degree = top - 2;
        cert.generators = {{mono(0, 0, 0, 0), top - 2}, {mono(1, 0, 0, 0), top - 4}};
        cert.monomials = {mono(0, 0, qq - 2, 1), mono(1, 1, qq - 2, 0)};
        break;
    case 2:
        cert.degree = top - 1;
        cert.generators = {{mono(0, 1, 0, 0), top - 4}, {mono(1, 0, 0, 0), top - 3}, {mono(0, 0, 0, 0), top - 1}};
        cert.monomials = {mono(0, 2, qq - 2, 0), mono(h - 3, 0, 1, 0), mono(0, 0, qq - 3, 2)};
        break;
    case 3:
        cert.degree = top;
        cert.generators = {{mono(1, 0, 0, 0), top - 2},
                           {mono(0, 1, 0, 0), top - 3},
                           {mono(0, 0, 1, 0), top - 4},
                           {mono(2, 0, 0, 0), top - 4},
                           {mono(0, 0, 0, 0), top}};
        cert.monomials = {mono(h - 3, 0, 0, 1), mono(h - 7, 1, 0, 2), mono(0, 1, qq - 1, 0),
                          mono(2, 1, qq - 2, 0), mono(h - 2, 1, 0, 0)};
        break;
    default:
        throw InvalidArgument("parametric tables are numbered 1 to 3");
    }
    std::size_t r = cert.generators.size();
    cert.matrix = BitMatrix(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            cert.matrix.set(i, j, generator_coefficient(cert.generators[j], cert.monomials[i]));
    return cert;
}

std::string certificate_to_json(const SeparatingCertificate& cert)
{
    nlohmann::json j;
    j["k"] = cert.k;
    j["n"] = cert.n;
    j["degree"] = cert.degree;
    auto gens = nlohmann::json::array();
    for (const auto& g : cert.generators)
        gens.push_back({{"multiplier_exponents", g.multiplier.exponents()}, {"q_index", g.q_index}});
    j["generators"] = gens;
    auto monos = nlohmann::json::array();
    for (const auto& m : cert.monomials)
        monos.push_back(m.exponents());
    j["monomials"] = monos;
    auto rows = nlohmann::json::array();
    for (std::size_t r = 0; r < cert.matrix.rows(); ++r)
        rows.push_back(cert.matrix.row(r).to_string());
    j["matrix"] = rows;
    return j.dump();
}

SeparatingCertificate certificate_from_json(const std::string& text)
{
    try {
        auto j = nlohmann::json::parse(text);
        SeparatingCertificate cert;
        cert.k = j.at("k").get<int>();
        cert.n = j.at("n").get<int>();
        cert.degree = j.at("degree").get<int>();
        for (const auto& g : j.at("generators"))
            cert.generators.push_back(
                {Monomial(g.at("multiplier_exponents").get<std::vector<Monomial::Exponent>>()),
                 g.at("q_index").get<int>()});
        for (const auto& m : j.at("monomials"))
            cert.monomials.emplace_back(m.get<std::vector<Monomial::Exponent>>());
        auto rows = j.at("matrix").get<std::vector<std::string>>();
        cert.matrix = BitMatrix::from_strings(rows);
        if (rows.empty())
            cert.matrix = BitMatrix(0, 0);
        return cert;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("malformed certificate JSON: ") + e.what());
    }
}

}  // namespace ogr
