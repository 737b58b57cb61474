// ogr: command-line front end for the Grassmannian cohomology engine.
//
// Exit codes: 0 computed, 2 invalid input, 3 invariant violation,
// 4 oracle disagreement.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ogr/char_classes.hpp"
#include "ogr/error.hpp"
#include "ogr/grassmann_ring.hpp"
#include "ogr/koszul.hpp"
#include "ogr/schubert.hpp"
#include "ogr/steenrod_ops.hpp"
#include "ogr/torsion.hpp"

using json = nlohmann::ordered_json;
using namespace ogr;
using f2::Polynomial;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitInvariant = 3;
constexpr int kExitDisagree = 4;

struct Config {
    std::string command;
    int k = 0;
    int n = 0;
    std::string n_range;
    int d = -1;
    int t = 0;
    int figure = 0;
    int max_degree = -1;
    std::string method = "both";
    std::string oracle = "schubert";
    std::string format = "table";
    std::string cache_dir;
    int threads = 1;
    bool oriented = false;
};

// What a command hands back: summary fields plus a flat table.
struct Output {
    json result = json::object();
    std::vector<std::string> columns;
    std::vector<std::vector<json>> rows;
    int exit_code = kExitOk;
};

json config_json(const Config& c)
{
    json j;
    j["command"] = c.command;
    if (c.k)
        j["k"] = c.k;
    if (c.n)
        j["n"] = c.n;
    if (!c.n_range.empty())
        j["n_range"] = c.n_range;
    if (c.d >= 0)
        j["d"] = c.d;
    if (c.t)
        j["t"] = c.t;
    if (c.figure)
        j["figure"] = c.figure;
    j["max_degree"] = c.max_degree;
    j["method"] = c.method;
    j["oracle"] = c.oracle;
    j["format"] = c.format;
    j["oriented"] = c.oriented;
    return j;
}

RingOptions ring_options(const Config& c)
{
    RingOptions o;
    if (!c.cache_dir.empty())
        o.cache_dir = c.cache_dir;
    return o;
}

std::string cell_text(const json& v)
{
    if (v.is_string())
        return v.get<std::string>();
    return v.dump();
}

std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + "\"";
}

void render(const Config& cfg, const Output& out, std::ostream& os)
{
    json cfgj = config_json(cfg);
    if (cfg.format == "json") {
        json j;
        j["command"] = cfg.command;
        j["config"] = cfgj;
        j["result"] = out.result;
        j["columns"] = out.columns;
        json rows = json::array();
        for (const auto& r : out.rows) {
            json row = json::object();
            for (std::size_t i = 0; i < out.columns.size(); ++i)
                row[out.columns[i]] = r[i];
            rows.push_back(row);
        }
        j["rows"] = rows;
        os << j.dump(2) << '\n';
        return;
    }
    if (cfg.format == "csv") {
        for (const auto& [key, val] : cfgj.items())
            os << "# config." << key << '=' << cell_text(val) << '\n';
        for (const auto& [key, val] : out.result.items())
            os << "# result." << key << '=' << val.dump() << '\n';
        for (std::size_t i = 0; i < out.columns.size(); ++i)
            os << (i ? "," : "") << out.columns[i];
        os << '\n';
        for (const auto& r : out.rows) {
            for (std::size_t i = 0; i < r.size(); ++i)
                os << (i ? "," : "") << csv_escape(cell_text(r[i]));
            os << '\n';
        }
        return;
    }
    os << "# ogr " << cfg.command << '\n';
    for (const auto& [key, val] : cfgj.items())
        if (key != "command")
            os << "#   " << key << " = " << cell_text(val) << '\n';
    for (const auto& [key, val] : out.result.items())
        os << key << ": " << (val.is_string() ? val.get<std::string>() : val.dump()) << '\n';
    if (out.columns.empty())
        return;
    std::vector<std::size_t> width(out.columns.size());
    for (std::size_t i = 0; i < out.columns.size(); ++i)
        width[i] = out.columns[i].size();
    for (const auto& r : out.rows)
        for (std::size_t i = 0; i < r.size(); ++i)
            width[i] = std::max(width[i], cell_text(r[i]).size());
    auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            std::string c = cells[i];
            c.resize(width[i], ' ');
            s += (i ? "  " : "") + c;
        }
        while (!s.empty() && s.back() == ' ')
            s.pop_back();
        os << s << '\n';
    };
    os << '\n';
    line(out.columns);
    for (const auto& r : out.rows) {
        std::vector<std::string> cells;
        for (const auto& v : r)
            cells.push_back(cell_text(v));
        line(cells);
    }
}

std::vector<int> sizes_to_ints(const std::vector<std::size_t>& v)
{
    return {v.begin(), v.end()};
}

// Drop degrees above max_degree - 1 when the scan was capped.
void truncate(W1Data& data, int max_degree)
{
    if (max_degree < 0 || max_degree > data.last_degree)
        return;
    data.last_degree = max_degree - 1;
    auto n = static_cast<std::size_t>(std::max(0, max_degree));
    data.dims.resize(n);
    data.rank_out.resize(n);
    data.ker_dim.resize(n);
    data.coker_dim.resize(n);
    data.kernel.resize(n);
    data.oriented_betti.resize(n);
}

W1Data w1_data(const Config& cfg, bool quotient)
{
    if (quotient) {
        QuotientRing q(cfg.k, cfg.n, cfg.max_degree, ring_options(cfg));
        q.build_all(cfg.threads);
        return ker_coker_w1(q);
    }
    SchubertRing s(cfg.k, cfg.n, ring_options(cfg));
    auto data = ker_coker_w1(s);
    truncate(data, cfg.max_degree);
    return data;
}

std::vector<std::string> oracles(const Config& cfg)
{
    if (cfg.oracle == "both")
        return {"quotient", "schubert"};
    return {cfg.oracle};
}

Output cmd_betti(const Config& cfg)
{
    Output out;
    std::optional<W1Data> first;
    std::optional<std::vector<std::size_t>> hilbert;
    for (const auto& which : oracles(cfg)) {
        W1Data data;
        std::vector<std::size_t> h;
        if (which == "quotient") {
            QuotientRing q(cfg.k, cfg.n, cfg.max_degree, ring_options(cfg));
            q.build_all(cfg.threads);
            h = q.hilbert();
            h.resize(static_cast<std::size_t>(q.max_degree()) + 1);
            if (cfg.oriented)
                data = ker_coker_w1(q);
        } else {
            SchubertRing s(cfg.k, cfg.n, ring_options(cfg));
            h = s.hilbert();
            if (cfg.max_degree >= 0 && cfg.max_degree < s.top_degree())
                h.resize(static_cast<std::size_t>(cfg.max_degree) + 1);
            if (cfg.oriented) {
                data = ker_coker_w1(s);
                truncate(data, cfg.max_degree);
            }
        }
        if (hilbert && *hilbert != h)
            throw OracleDisagreement("quotient and Schubert Hilbert functions differ");
        if (first && cfg.oriented && first->oriented_betti != data.oriented_betti)
            throw OracleDisagreement("quotient and Schubert oriented Betti numbers differ");
        hilbert = h;
        first = data;
    }
    const auto& h = *hilbert;
    std::size_t total = 0;
    for (auto x : h)
        total += x;
    out.result["total"] = total;
    out.result["complete"] = static_cast<int>(h.size()) == cfg.k * (cfg.n - cfg.k) + 1;
    out.result["betti"] = sizes_to_ints(h);
    out.columns = {"degree", "dim"};
    if (cfg.oriented) {
        out.columns.insert(out.columns.end(), {"coker_w1", "ker_w1", "oriented"});
        out.result["oriented_betti"] = sizes_to_ints(first->oriented_betti);
        std::size_t ototal = 0;
        for (auto x : first->oriented_betti)
            ototal += x;
        out.result["oriented_total"] = ototal;
    }
    for (std::size_t d = 0; d < h.size(); ++d) {
        std::vector<json> row{static_cast<int>(d), h[d]};
        if (cfg.oriented) {
            if (d < first->oriented_betti.size())
                row.insert(row.end(), {first->coker_dim[d], first->ker_dim[d], first->oriented_betti[d]});
            else
                row.insert(row.end(), {nullptr, nullptr, nullptr});
        }
        out.rows.push_back(std::move(row));
    }
    return out;
}

TorsionReport scan_one(const Config& cfg, int k, int n, const std::string& which)
{
    if (which == "quotient") {
        QuotientRing q(k, n, -1, ring_options(cfg));
        q.build_all(cfg.threads);
        return torsion4_scan(build_tower(q, cfg.threads), cfg.max_degree);
    }
    SchubertRing s(k, n, ring_options(cfg));
    return torsion4_scan(build_tower(s, cfg.threads), cfg.max_degree);
}

TorsionReport scan(const Config& cfg, int k, int n)
{
    std::optional<TorsionReport> first;
    for (const auto& which : oracles(cfg)) {
        auto r = scan_one(cfg, k, n, which);
        if (first && (first->degrees2 != r.degrees2 || first->degrees3 != r.degrees3))
            throw OracleDisagreement("quotient and Schubert torsion scans differ for (" + std::to_string(k) +
                                     "," + std::to_string(n) + ")");
        first = std::move(r);
    }
    return *first;
}

std::vector<int> selected_degrees(const Config& cfg, const TorsionReport& r)
{
    return cfg.method == "3" ? r.degrees3 : r.degrees2;
}

Output cmd_torsion4(const Config& cfg)
{
    Output out;
    if (!cfg.n_range.empty()) {
        auto colon = cfg.n_range.find(':');
        if (colon == std::string::npos)
            throw InvalidArgument("--n-range expects LO:HI");
        int lo = std::stoi(cfg.n_range.substr(0, colon));
        int hi = std::stoi(cfg.n_range.substr(colon + 1));
        if (lo > hi || lo <= cfg.k)
            throw InvalidArgument("--n-range needs k < LO <= HI");
        out.columns = {"n", "degrees", "has_4_torsion", "complete"};
        json reports = json::array();
        for (int n = lo; n <= hi; ++n) {
            auto r = scan(cfg, cfg.k, n);
            if (cfg.method == "both" && r.verdict_discrepancy())
                out.exit_code = kExitDisagree;
            auto degs = selected_degrees(cfg, r);
            std::string joined;
            for (int d : degs)
                joined += (joined.empty() ? "" : " ") + std::to_string(d);
            out.rows.push_back({n, joined, !degs.empty(), r.complete()});
            reports.push_back({{"n", n}, {"degrees", degs}});
        }
        out.result["k"] = cfg.k;
        out.result["reports"] = reports;
        return out;
    }
    auto r = scan(cfg, cfg.k, cfg.n);
    out.result["degrees"] = selected_degrees(cfg, r);
    if (cfg.method == "both") {
        out.result["degrees3"] = r.degrees3;
        out.result["degreewise_discrepancy"] = r.degreewise_discrepancy();
        out.result["verdict_discrepancy"] = r.verdict_discrepancy();
        if (r.verdict_discrepancy())
            out.exit_code = kExitDisagree;
    }
    out.result["has_4_torsion"] = !selected_degrees(cfg, r).empty();
    out.result["complete"] = r.complete();
    out.result["scanned_through"] = r.max_degree;
    out.columns = {"degree", "dim", "a2", "b2", "a3", "b3", "mult2", "mult3"};
    for (const auto& td : r.per_degree)
        out.rows.push_back({td.degree, td.dim, td.a2, td.b2, td.a3, td.b3, td.multiplicity2(), td.multiplicity3()});
    return out;
}

Output cmd_charrank(const Config& cfg)
{
    Output out;
    std::optional<W1Data> first;
    for (const auto& which : oracles(cfg)) {
        auto data = w1_data(cfg, which == "quotient");
        if (first && first->ker_dim != data.ker_dim) {
            // Compare on the common range only.
            std::size_t m = std::min(first->ker_dim.size(), data.ker_dim.size());
            for (std::size_t d = 0; d < m; ++d)
                if (first->ker_dim[d] != data.ker_dim[d])
                    throw OracleDisagreement("ker(w_1) dimensions differ in degree " + std::to_string(d));
            if (data.ker_dim.size() < first->ker_dim.size())
                data = *first;
        }
        first = std::move(data);
    }
    auto crk = char_rank(*first);
    out.result["crk"] = crk.value;
    out.result["exact"] = crk.exact;
    out.result["first_anomalous_degree"] = crk.exact ? json(crk.value + 1) : json(nullptr);
    out.result["scanned_through"] = first->last_degree;
    out.columns = {"degree", "dim", "ker_w1"};
    for (std::size_t d = 0; d < first->ker_dim.size(); ++d)
        out.rows.push_back({static_cast<int>(d), first->dims[d], first->ker_dim[d]});
    return out;
}

Output cmd_deficiency(const Config& cfg)
{
    Output out;
    auto r = deficiency(cfg.k, cfg.n);
    out.result["deficiency"] = r.value;
    out.result["redundant_q"] = r.redundant_index ? json(*r.redundant_index) : json(nullptr);
    return out;
}

int height_by_ring(const Config& cfg)
{
    // Gr_k(n) and Gr_{n-k}(n) share w_1; iterate on the smaller one.
    int kk = std::min(cfg.k, cfg.n - cfg.k);
    if (kk == 0)
        return 0;
    int cap = cfg.max_degree >= 0 ? cfg.max_degree : kk * (cfg.n - kk);
    QuotientRing ring(kk, cfg.n, cap, ring_options(cfg));
    Polynomial w1 = Polynomial::w(kk, 1);
    int p = 0;
    CohomologyClass x = ring.reduce(Polynomial::one(kk));
    while (p < ring.top_degree()) {
        if (p + 1 > ring.max_degree())
            throw Inconclusive("w_1^" + std::to_string(p) + " is nonzero and the ring stops at degree " +
                               std::to_string(ring.max_degree()));
        CohomologyClass next{p + 1, f2::row_combination(x.coords, ring.mult_map(w1, p))};
        if (next.is_zero())
            break;
        x = std::move(next);
        ++p;
    }
    return p;
}

Output cmd_height(const Config& cfg)
{
    Output out;
    if (cfg.k < 1 || cfg.k > cfg.n)
        throw InvalidArgument("need 1 <= k <= n");
    std::optional<int> ring_h, parity_h;
    if (cfg.oracle != "schubert")
        ring_h = height_by_ring(cfg);
    if (cfg.oracle != "quotient")
        parity_h = height_w1_oracle(cfg.k, cfg.n);
    int h = ring_h ? *ring_h : *parity_h;
    out.result["height"] = h;
    out.result["quotient_iteration"] = ring_h ? json(*ring_h) : json(nullptr);
    out.result["partition_parity"] = parity_h ? json(*parity_h) : json(nullptr);
    if (ring_h && parity_h) {
        out.result["agree"] = *ring_h == *parity_h;
        if (*ring_h != *parity_h)
            out.exit_code = kExitDisagree;
    }
    if (cfg.n >= 2) {
        int t = two_power_exponent(cfg.n);
        out.result["two_power_bound"] = (1 << t) - 1;
    }
    return out;
}

Output cmd_koszul(const Config& cfg)
{
    Output out;
    auto rels = relations_in_degree(cfg.k, cfg.n, cfg.d);
    out.result["relations"] = rels.size();
    out.columns = {"index", "tuple", "boundary", "boundary_nonzero", "in_ker_w1"};
    std::optional<QuotientRing> ring;
    int top = cfg.k * (cfg.n - cfg.k);
    if (!rels.empty() && cfg.d - 1 <= top)
        ring.emplace(cfg.k, cfg.n, std::min(cfg.d, top), ring_options(cfg));
    for (std::size_t i = 0; i < rels.size(); ++i) {
        auto x = koszul_boundary(rels[i]);
        bool nonzero = false, in_ker = true;
        if (ring) {
            nonzero = !ring->reduce(x, cfg.d - 1).is_zero();
            if (cfg.d <= top)
                in_ker = ring->reduce(Polynomial::w(cfg.k, 1) * x, cfg.d).is_zero();
        }
        if (!in_ker)
            throw InvariantViolation("Koszul boundary outside ker(w_1)");
        out.rows.push_back({static_cast<int>(i), rels[i].to_string(), x.to_string(), nonzero, in_ker});
    }
    return out;
}

Output cmd_certificate(const Config& cfg)
{
    Output out;
    std::optional<SeparatingCertificate> cert;
    if (cfg.figure) {
        if (!cfg.t)
            throw InvalidArgument("--figure needs --t");
        cert = appendix_certificate(cfg.figure, cfg.t);
    } else {
        if (!cfg.k || !cfg.n || cfg.d < 0)
            throw InvalidArgument("certificate needs K N D, or --figure F --t T");
        cert = find_certificate(cfg.k, cfg.n, cfg.d);
    }
    out.result["found"] = cert.has_value();
    if (!cert) {
        out.result["verified"] = false;
        return out;
    }
    bool ok = verify_certificate(*cert);
    out.result["verified"] = ok;
    out.result["covers_all_generators"] = covers_all_generators(*cert);
    out.result["certificate"] = json::parse(certificate_to_json(*cert));
    out.columns = {"index", "generator", "monomial", "row"};
    for (std::size_t i = 0; i < cert->generators.size(); ++i)
        out.rows.push_back({static_cast<int>(i), cert->generators[i].to_string(), cert->monomials[i].to_string(),
                            cert->matrix.row(i).to_string()});
    if (!ok)
        out.exit_code = kExitInvariant;
    return out;
}

Output cmd_verify_identities(const Config&)
{
    Output out;
    out.columns = {"identity", "k", "index", "holds"};
    bool all = true;
    auto record = [&](const std::string& name, int k, int index, bool holds) {
        all = all && holds;
        out.rows.push_back({name, k, index, holds});
    };
    auto w = [](int k, int i) { return Polynomial::w(k, i); };
    for (int k : {4, 5, 6})
        for (int t : {3, 4}) {
            int m = 1 << t;
            Polynomial even(k, f2::Flavor::W1), odd(k, f2::Flavor::W1);
            for (int i = 0; i <= k; i += 2)
                even += w(k, i) * p_class(k, m - i);
            for (int i = 1; i <= k; i += 2)
                odd += w(k, i) * Q_class(k, m - i);
            record("sum_even w_i p_{2^t-i} = w_1^{2^t-1}", k, t, even == w(k, 1).pow(m - 1));
            record("sum_odd w_i Q_{2^t-i} = w_1^{2^t}", k, t, odd == w(k, 1).pow(m));
        }
    for (int k = 2; k <= 7; ++k)
        for (int t = 2; t <= 5; ++t) {
            int m = 1 << t;
            Polynomial even(k, f2::Flavor::W2), odd(k, f2::Flavor::W2);
            for (int i = 0; i <= k && i <= m; i += 2)
                even += Polynomial::w(k, i, f2::Flavor::W2) * q_class(k, m - i);
            for (int i = 3; i <= k && i <= m; i += 2)
                odd += Polynomial::w(k, i, f2::Flavor::W2) * q_class(k, m - i);
            record("sum_even w_i q_{2^t-i} = 0", k, t, even.is_zero());
            record("sum_{odd>1} w_i q_{2^t-i} = 0", k, t, odd.is_zero());
        }
    for (int k = 2; k <= 7; ++k)
        for (int j = 1; j <= 40; ++j)
            record("w_1 p_j = Q_j + q~_j", k, j, w(k, 1) * p_class(k, j) == Q_class(k, j) + q_tilde(k, j));
    for (int k : {3, 4})
        for (int t = 2; t <= 5; ++t) {
            int m = 1 << t;
            record("Q_{2^t-1} = w_1^{2^t-1} + w_3 p_{2^t-3}", k, t,
                   Q_class(k, m - 1) == w(k, 1).pow(m - 1) + w(k, 3) * p_class(k, m - 3));
        }
    out.result["identities"] = out.rows.size();
    out.result["all_hold"] = all;
    if (!all)
        out.exit_code = kExitInvariant;
    return out;
}

int run(const Config& cfg)
{
    Output out;
    if (cfg.command == "betti")
        out = cmd_betti(cfg);
    else if (cfg.command == "torsion4")
        out = cmd_torsion4(cfg);
    else if (cfg.command == "charrank")
        out = cmd_charrank(cfg);
    else if (cfg.command == "deficiency")
        out = cmd_deficiency(cfg);
    else if (cfg.command == "height")
        out = cmd_height(cfg);
    else if (cfg.command == "koszul")
        out = cmd_koszul(cfg);
    else if (cfg.command == "certificate")
        out = cmd_certificate(cfg);
    else if (cfg.command == "verify-identities")
        out = cmd_verify_identities(cfg);
    else
        throw InvalidArgument("unknown command " + cfg.command);
    render(cfg, out, std::cout);
    return out.exit_code;
}

}  // namespace

int main(int argc, char** argv)
{
    Config cfg;
    CLI::App app{"Mod-2 cohomology of real and oriented Grassmannians"};
    app.require_subcommand(1);
    app.fallthrough();

    auto* threads_opt = app.add_option("--threads", cfg.threads, "worker threads (env OGR_THREADS)")
                            ->check(CLI::PositiveNumber);
    auto* cache_opt = app.add_option("--cache-dir", cfg.cache_dir, "slice cache directory (env OGR_CACHE_DIR)");
    app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"table", "json", "csv"}));
    app.add_option("--max-degree", cfg.max_degree, "highest degree to build or scan")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--method", cfg.method, "4-torsion condition")->check(CLI::IsMember({"2", "3", "both"}));
    app.add_option("--oracle,--basis", cfg.oracle, "ring presentation")
        ->check(CLI::IsMember({"quotient", "schubert", "both"}));

    auto kn = [&](CLI::App* sub) {
        sub->add_option("k", cfg.k, "rank of the tautological bundle")->required();
        sub->add_option("n", cfg.n, "ambient dimension")->required();
    };

    auto* betti = app.add_subcommand("betti", "mod-2 Betti numbers of Gr_k(n), or of G~r_k(n) with --oriented");
    kn(betti);
    betti->add_flag("--oriented", cfg.oriented, "oriented Grassmannian");

    auto* torsion = app.add_subcommand("torsion4", "degrees of 4-torsion in H*(G~r_k(n); Z)");
    torsion->add_option("k", cfg.k)->required();
    torsion->add_option("n", cfg.n);
    torsion->add_option("--n-range", cfg.n_range, "scan n = LO..HI");

    kn(app.add_subcommand("charrank", "characteristic rank of the tautological bundle over G~r_k(n)"));
    kn(app.add_subcommand("deficiency", "deficiency of G~r_k(n) (0 or 1)"));
    kn(app.add_subcommand("height", "height of w_1 in H*(Gr_k(n))"));

    auto* koszul = app.add_subcommand("koszul", "W2-relations among q_{n-k+1..n} in degree d and their boundaries");
    kn(koszul);
    koszul->add_option("d", cfg.d)->required();

    auto* cert = app.add_subcommand("certificate", "separating-monomial certificate in degree d");
    cert->add_option("k", cfg.k);
    cert->add_option("n", cfg.n);
    cert->add_option("d", cfg.d);
    cert->add_option("--figure", cfg.figure, "parametric certificate table 1..3")->check(CLI::Range(1, 3));
    cert->add_option("--t", cfg.t, "2-power exponent for --figure");

    app.add_subcommand("verify-identities", "check the characteristic-class identities in the free rings");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }
    cfg.command = app.get_subcommands().front()->get_name();

    try {
        if (threads_opt->count() == 0)
            if (const char* env = std::getenv("OGR_THREADS"))
                cfg.threads = std::stoi(env);
        if (cache_opt->count() == 0)
            if (const char* env = std::getenv("OGR_CACHE_DIR"))
                cfg.cache_dir = env;
    } catch (const std::exception&) {
        std::cerr << "error: OGR_THREADS is not an integer\n";
        return kExitInvalid;
    }
    if (cfg.threads < 1) {
        std::cerr << "error: thread count must be positive\n";
        return kExitInvalid;
    }
    if (cfg.command == "torsion4" && cfg.n == 0 && cfg.n_range.empty()) {
        std::cerr << "error: torsion4 needs N or --n-range\n";
        return kExitInvalid;
    }
    // Execution settings never change results, so they stay off stdout.
    std::cerr << "# threads = " << cfg.threads << ", cache_dir = " << (cfg.cache_dir.empty() ? "-" : cfg.cache_dir)
              << '\n';

    try {
        return run(cfg);
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const Inconclusive& e) {
        std::cerr << "inconclusive: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << '\n';
        return kExitInvariant;
    } catch (const OracleDisagreement& e) {
        std::cerr << "oracle disagreement: " << e.what() << '\n';
        return kExitDisagree;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
}
