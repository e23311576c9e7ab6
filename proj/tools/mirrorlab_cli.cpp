// mirrorlab command-line front end: exact hypergeometric mirror maps, their
// p-integrality checks, the N-integral classification, and the modular-type
// series derived from them. Machine-readable output (JSON by default) so
// sweeps can be scripted and archived.

#include "CLI11.hpp"
#include "json.hpp"

#include "mirrorlab/classify.hpp"
#include "mirrorlab/dwork.hpp"
#include "mirrorlab/errors.hpp"
#include "mirrorlab/hypergeom.hpp"
#include "mirrorlab/modular_type.hpp"

#include <omp.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace mirrorlab;
using nlohmann::json;

namespace {

enum class Format { json, csv, plain };

Format parse_format(const std::string& f)
{
    if (f == "json") return Format::json;
    if (f == "csv") return Format::csv;
    if (f == "plain") return Format::plain;
    throw mirrorlab::ParseError("unknown format '" + f + "'");
}

std::string csv_quote(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep = ",")
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

json rationals_json(const std::vector<Rational>& xs)
{
    json arr = json::array();
    for (const auto& x : xs) arr.push_back(rational_str(x));
    return arr;
}

// ---------------------------------------------------------------------------
// optional on-disk memo for F and G keyed by (kind, params, order); pointed
// at by MIRRORLAB_CACHE

class SeriesCache {
public:
    SeriesCache()
    {
        if (const char* dir = std::getenv("MIRRORLAB_CACHE"); dir && *dir) dir_ = dir;
    }

    bool enabled() const { return !dir_.empty(); }

    std::optional<Series> load(const std::string& kind, const HGParams& a, std::size_t order) const
    {
        if (!enabled()) return std::nullopt;
        std::error_code ec;
        for (const auto& entry : std::filesystem::directory_iterator(dir_, ec)) {
            if (!entry.is_regular_file()) continue;
            std::ifstream in(entry.path());
            json j;
            try {
                in >> j;
            } catch (...) {
                continue;
            }
            if (!j.is_object() || j.value("kind", "") != kind || j.value("params", "") != a.str())
                continue;
            if (j.value("order", std::size_t{0}) < order) continue;
            std::vector<Rational> coeffs;
            for (const auto& s : j.at("coefficients")) {
                coeffs.push_back(parse_rational(s.get<std::string>()));
            }
            return truncate(Series(std::move(coeffs)), order);
        }
        return std::nullopt;
    }

    void store(const std::string& kind, const HGParams& a, const Series& f) const
    {
        if (!enabled()) return;
        json j;
        j["kind"] = kind;
        j["params"] = a.str();
        j["order"] = f.order();
        j["coefficients"] = f.coeff_strings();
        std::string name = kind + "_" + sanitize(a.str()) + "_" + std::to_string(f.order()) + ".json";
        std::ofstream out(std::filesystem::path(dir_) / name);
        if (out) out << j.dump() << "\n";
        if (!out) std::cerr << "warning: could not write cache entry " << name << "\n";
    }

private:
    static std::string sanitize(const std::string& s)
    {
        std::string out;
        for (char c : s) {
            if (c == '/') out += 'd';
            else if (c == ',') out += '-';
            else out += c;
        }
        return out;
    }

    std::string dir_;
};

Series cached_F(const SeriesCache& cache, const HGParams& a, std::size_t order)
{
    if (auto hit = cache.load("F", a, order)) return *hit;
    Series f = series_F(a, order);
    cache.store("F", a, f);
    return f;
}

Series cached_G(const SeriesCache& cache, const HGParams& a, std::size_t order)
{
    if (auto hit = cache.load("G", a, order)) return *hit;
    Series g = series_G(a, order);
    cache.store("G", a, g);
    return g;
}

// ---------------------------------------------------------------------------

struct CommonOpts {
    std::string format = "json";
    unsigned jobs = 0;
};

void add_common(CLI::App* cmd, CommonOpts& o)
{
    cmd->add_option("--format", o.format, "Output format: json, csv or plain")
        ->check(CLI::IsMember({"json", "csv", "plain"}));
    cmd->add_option("--jobs", o.jobs, "Worker threads (0 = library default)");
}

void apply_jobs(const CommonOpts& o)
{
    if (o.jobs > 0) omp_set_num_threads(static_cast<int>(o.jobs));
}

int emit_series(const std::string& kind, const HGParams& a, std::size_t order, Format fmt)
{
    SeriesCache cache;
    Series out = [&]() {
        if (kind == "F") return cached_F(cache, a, order);
        if (kind == "G") return cached_G(cache, a, order);
        Series ratio = cached_G(cache, a, order) / cached_F(cache, a, order);
        if (kind == "ratio") return ratio;
        Series q = shift_up(exp(ratio)); // mirror map, coefficients z^1..z^order
        if (kind == "q") return q;
        return revert(q); // zq
    }();
    auto strs = out.coeff_strings();
    switch (fmt) {
    case Format::json: {
        json j;
        j["kind"] = kind;
        j["params"] = a.str();
        j["order"] = out.order();
        j["coefficients"] = strs;
        std::cout << j.dump() << "\n";
        break;
    }
    case Format::csv:
        std::cout << "k,coefficient\n";
        for (std::size_t k = 0; k < strs.size(); ++k) std::cout << k << "," << strs[k] << "\n";
        break;
    case Format::plain:
        std::cout << join(strs) << "\n";
        break;
    }
    return 0;
}

int emit_dwork_check(const HGParams& a, unsigned long p, Format fmt)
{
    bool cond = condition_check(a, p);
    HGParams image = dwork_apply(a, p);
    switch (fmt) {
    case Format::json: {
        json j;
        j["params"] = a.str();
        j["prime"] = p;
        j["condition"] = cond;
        j["image"] = rationals_json(image.values());
        std::cout << j.dump() << "\n";
        break;
    }
    case Format::csv:
        std::cout << "params,prime,condition,image\n";
        std::cout << csv_quote(a.str()) << "," << p << "," << (cond ? "true" : "false") << ","
                  << csv_quote(image.str()) << "\n";
        break;
    case Format::plain:
        std::cout << "a = " << a.str() << "  p = " << p << "  image = " << image.str()
                  << "  condition " << (cond ? "holds" : "fails") << "\n";
        break;
    }
    return cond ? 0 : 1;
}

int emit_congruence(const HGParams& a, unsigned long p, std::size_t order, const std::string& kind,
                    Format fmt)
{
    std::optional<std::size_t> fast_failure, theorem_failure;
    bool fast_eq = false;
    bool ran_fast = kind != "theorem";
    bool ran_theorem = kind != "fast";
    if (ran_fast) {
        auto fc = fast_congruence(a, p, order);
        fast_failure = fc.first_failure;
        fast_eq = fc.is_equality;
    }
    if (ran_theorem) theorem_failure = dwork_theorem_check(a, p, order);

    auto opt_str = [](const std::optional<std::size_t>& v) {
        return v ? std::to_string(*v) : "none";
    };
    switch (fmt) {
    case Format::json: {
        json j;
        j["params"] = a.str();
        j["prime"] = p;
        j["order"] = order;
        if (ran_fast) {
            j["fast_failure"] = fast_failure ? json(*fast_failure) : json(nullptr);
            j["fast_is_equality"] = fast_eq;
        }
        if (ran_theorem) {
            j["theorem_failure"] = theorem_failure ? json(*theorem_failure) : json(nullptr);
        }
        std::cout << j.dump() << "\n";
        break;
    }
    case Format::csv:
        std::cout << "params,prime,order,fast_failure,fast_is_equality,theorem_failure\n";
        std::cout << csv_quote(a.str()) << "," << p << "," << order << ","
                  << (ran_fast ? opt_str(fast_failure) : "") << ","
                  << (ran_fast ? (fast_eq ? "true" : "false") : "") << ","
                  << (ran_theorem ? opt_str(theorem_failure) : "") << "\n";
        break;
    case Format::plain:
        std::cout << "a = " << a.str() << "  p = " << p << "  order = " << order;
        if (ran_fast) {
            std::cout << "  fast: " << (fast_failure ? "fails at " + std::to_string(*fast_failure)
                                                     : std::string("holds"));
            if (!fast_failure) std::cout << (fast_eq ? " (equality)" : " (congruence only)");
        }
        if (ran_theorem) {
            std::cout << "  theorem: "
                      << (theorem_failure ? "FAILS at " + std::to_string(*theorem_failure)
                                          : std::string("holds"));
        }
        std::cout << "\n";
        break;
    }
    if (theorem_failure) {
        std::cerr << "error: the unconditional congruence failed; this indicates a bug\n";
        return 1;
    }
    return fast_failure ? 1 : 0;
}

json report_json(const HGParams& a, const IntegralityReport& rep, const CellChecks& checks)
{
    json j;
    j["params"] = a.str();
    j["prime"] = rep.p;
    j["order"] = rep.checked_order;
    if (checks.condition) j["condition"] = rep.condition_holds;
    if (checks.q_integrality) {
        j["q_integral_to"] =
            rep.q_first_failure ? *rep.q_first_failure - 1 : rep.checked_order;
        j["q_first_failure"] = rep.q_first_failure ? json(*rep.q_first_failure) : json(nullptr);
    }
    if (checks.fast_congruence) {
        j["fast_congruence_failure"] =
            rep.fast_congruence_failure ? json(*rep.fast_congruence_failure) : json(nullptr);
        if (!rep.fast_congruence_failure) j["fast_congruence_is_equality"] = rep.fast_is_equality;
    }
    if (checks.dieudonne && rep.dieudonne_ran) {
        j["dieudonne_failure"] = rep.dieudonne_failure ? json(*rep.dieudonne_failure) : json(nullptr);
    }
    return j;
}

void emit_cell(const HGParams& a, const IntegralityReport& rep, const CellChecks& checks,
               Format fmt)
{
    auto opt_str = [](const std::optional<std::size_t>& v) {
        return v ? std::to_string(*v) : "none";
    };
    switch (fmt) {
    case Format::json:
        std::cout << report_json(a, rep, checks).dump() << "\n";
        break;
    case Format::csv:
        std::cout << csv_quote(a.str()) << "," << rep.p << "," << rep.checked_order << ","
                  << (checks.condition ? (rep.condition_holds ? "true" : "false") : "") << ","
                  << (checks.q_integrality
                          ? std::to_string(rep.q_first_failure ? *rep.q_first_failure - 1
                                                               : rep.checked_order)
                          : "")
                  << "," << (checks.q_integrality ? opt_str(rep.q_first_failure) : "") << ","
                  << (checks.fast_congruence ? opt_str(rep.fast_congruence_failure) : "") << ","
                  << (rep.dieudonne_ran ? opt_str(rep.dieudonne_failure) : "") << "\n";
        break;
    case Format::plain:
        std::cout << "a = " << a.str() << "  p = " << rep.p;
        if (checks.condition)
            std::cout << "  condition " << (rep.condition_holds ? "holds" : "fails");
        if (checks.q_integrality)
            std::cout << "  q integral to "
                      << (rep.q_first_failure ? *rep.q_first_failure - 1 : rep.checked_order);
        if (checks.fast_congruence)
            std::cout << "  fast congruence "
                      << (rep.fast_congruence_failure
                              ? "fails at " + std::to_string(*rep.fast_congruence_failure)
                              : std::string("holds"));
        if (rep.dieudonne_ran)
            std::cout << "  unit criterion "
                      << (rep.dieudonne_failure ? "fails at " + std::to_string(*rep.dieudonne_failure)
                                                : std::string("holds"));
        std::cout << "\n";
        break;
    }
}

int emit_sweep(const std::vector<std::string>& param_strings, unsigned long pmax,
               std::size_t order, const std::vector<std::string>& check_names, Format fmt)
{
    CellChecks checks;
    if (!check_names.empty()) {
        checks = CellChecks{false, false, false, false};
        for (const auto& name : check_names) {
            if (name == "condition") checks.condition = true;
            else if (name == "q-integrality") checks.q_integrality = true;
            else if (name == "fast-congruence") checks.fast_congruence = true;
            else if (name == "dieudonne") checks.dieudonne = true;
            else throw mirrorlab::ParseError("unknown check '" + name + "'");
        }
    }
    bool any_failure = false;
    if (fmt == Format::csv) {
        std::cout << "params,prime,order,condition,q_integral_to,q_first_failure,fast_congruence_"
                     "failure,dieudonne_failure\n";
    }
    for (const auto& ps : param_strings) {
        HGParams a = HGParams::parse(ps);
        Series q = (checks.q_integrality || checks.dieudonne) ? mirror_q(a, order)
                                                              : Series::zero(order + 1);
        std::vector<unsigned long> primes;
        for (unsigned long p : primes_up_to(pmax)) {
            if (a.is_good_prime(p)) primes.push_back(p);
        }
        // cells are computed in parallel a chunk at a time and emitted in
        // prime order immediately, so interrupted sweeps keep their prefix
        const std::size_t chunk = std::max(4, omp_get_max_threads());
        std::vector<IntegralityReport> reports;
        for (std::size_t base = 0; base < primes.size(); base += chunk) {
            std::size_t count = std::min(chunk, primes.size() - base);
            reports.assign(count, IntegralityReport{});
#pragma omp parallel for schedule(dynamic)
            for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(count); ++i) {
                reports[i] = integrality_report(a, q, primes[base + i], order, checks);
            }
            for (const auto& rep : reports) {
                if (rep.q_first_failure || rep.fast_congruence_failure || rep.dieudonne_failure) {
                    any_failure = true;
                }
                emit_cell(a, rep, checks, fmt);
            }
            std::cout.flush();
        }
    }
    return any_failure ? 1 : 0;
}

int emit_classify(unsigned n, unsigned long bound, Format fmt)
{
    if (n == 2) {
        auto pairs = enumerate_n2(bound ? bound : 60);
        switch (fmt) {
        case Format::json:
            for (const auto& [x, y] : pairs) {
                json j;
                j["n"] = 2;
                j["params"] = json::array({rational_str(x), rational_str(y)});
                std::cout << j.dump() << "\n";
            }
            break;
        case Format::csv:
            std::cout << "n,params\n";
            for (const auto& [x, y] : pairs) {
                std::cout << "2," << csv_quote(rational_str(x) + "," + rational_str(y)) << "\n";
            }
            break;
        case Format::plain:
            for (const auto& [x, y] : pairs) {
                std::cout << "(" << rational_str(x) << ", " << rational_str(y) << ")\n";
            }
            break;
        }
        return 0;
    }
    auto entries = enumerate_candidates(n);
    switch (fmt) {
    case Format::json:
        for (const auto& e : entries) {
            json j;
            j["n"] = e.n;
            j["moduli"] = e.moduli;
            j["params"] = rationals_json(e.params);
            j["representatives"] = rationals_json(e.representatives);
            std::cout << j.dump() << "\n";
        }
        break;
    case Format::csv:
        std::cout << "n,moduli,params,representatives\n";
        for (const auto& e : entries) {
            std::vector<std::string> ms;
            for (auto m : e.moduli) ms.push_back(std::to_string(m));
            std::vector<std::string> ps, rs;
            for (const auto& x : e.params) ps.push_back(rational_str(x));
            for (const auto& x : e.representatives) rs.push_back(rational_str(x));
            std::cout << e.n << "," << csv_quote(join(ms)) << "," << csv_quote(join(ps)) << ","
                      << csv_quote(join(rs)) << "\n";
        }
        break;
    case Format::plain:
        for (const auto& e : entries) {
            std::vector<std::string> rs;
            for (const auto& x : e.representatives) rs.push_back(rational_str(x));
            std::cout << "(" << join(rs, ", ") << ")\n";
        }
        break;
    }
    return 0;
}

int emit_genfun(unsigned terms, Format fmt)
{
    auto coeffs = genfun_coeffs(terms);
    std::vector<std::string> strs;
    for (const auto& c : coeffs) strs.push_back(c.get_str());
    switch (fmt) {
    case Format::json: {
        json j;
        j["terms"] = terms;
        json arr = json::array();
        for (const auto& s : strs) arr.push_back(json::parse(s));
        j["coefficients"] = arr;
        std::cout << j.dump() << "\n";
        break;
    }
    case Format::csv:
        std::cout << "n,count\n";
        for (std::size_t i = 0; i < strs.size(); ++i) {
            std::cout << i + 1 << "," << strs[i] << "\n";
        }
        break;
    case Format::plain:
        std::cout << join(strs) << "\n";
        break;
    }
    return 0;
}

int emit_table1(unsigned n, unsigned long bound, Format fmt)
{
    std::vector<std::vector<Rational>> produced;
    std::vector<std::vector<Rational>> rows; // representative rows for display
    if (n == 2) {
        for (const auto& [x, y] : enumerate_n2(bound ? bound : 60)) {
            produced.push_back({y, x});
            rows.push_back({x, y});
        }
    } else {
        for (const auto& e : enumerate_candidates(n)) {
            produced.push_back(e.params);
            rows.push_back(e.representatives);
        }
    }
    TableDiff diff = table1_compare(n, produced);

    auto rows_json = [](const std::vector<std::vector<Rational>>& rws) {
        json arr = json::array();
        for (const auto& r : rws) arr.push_back(rationals_json(r));
        return arr;
    };
    switch (fmt) {
    case Format::json: {
        json j;
        j["n"] = n;
        j["entries"] = rows_json(rows);
        j["diff"]["missing"] = rows_json(diff.missing);
        j["diff"]["extra"] = rows_json(diff.extra);
        j["match"] = diff.empty();
        std::cout << j.dump() << "\n";
        break;
    }
    case Format::csv: {
        std::cout << "n,entry\n";
        for (const auto& r : rows) {
            std::vector<std::string> ss;
            for (const auto& x : r) ss.push_back(rational_str(x));
            std::cout << n << "," << csv_quote(join(ss)) << "\n";
        }
        break;
    }
    case Format::plain:
        for (const auto& r : rows) {
            std::vector<std::string> ss;
            for (const auto& x : r) ss.push_back(rational_str(x));
            std::cout << "(" << join(ss, ", ") << ")\n";
        }
        break;
    }
    if (!diff.empty() && fmt != Format::json) {
        std::cerr << "diff: " << diff.missing.size() << " missing, " << diff.extra.size()
                  << " extra\n";
    }
    return diff.empty() ? 0 : 1;
}

int emit_nconst(const HGParams& a, std::size_t order, Format fmt)
{
    Integer N = n_constant(a);
    auto probe = n_minimality_probe(a, N, order);
    switch (fmt) {
    case Format::json: {
        json j;
        j["params"] = a.str();
        j["N"] = N.get_str();
        j["f_rescaled_integer"] = probe.f_rescaled_integer;
        j["checked_order"] = probe.checked_order;
        json min = json::array();
        for (const auto& [p, failure] : probe.divided_failures) {
            json e;
            e["prime"] = p;
            e["insufficient"] = failure.has_value();
            e["first_failure"] = failure ? json(*failure) : json(nullptr);
            min.push_back(e);
        }
        j["minimality_probe"] = min;
        std::cout << j.dump() << "\n";
        break;
    }
    case Format::csv:
        std::cout << "params,N,f_rescaled_integer,checked_order\n";
        std::cout << csv_quote(a.str()) << "," << N.get_str() << ","
                  << (probe.f_rescaled_integer ? "true" : "false") << "," << probe.checked_order
                  << "\n";
        break;
    case Format::plain:
        std::cout << "a = " << a.str() << "  N = " << N.get_str() << "  F(Nz) integer to order "
                  << probe.checked_order << ": " << (probe.f_rescaled_integer ? "yes" : "NO")
                  << "\n";
        for (const auto& [p, failure] : probe.divided_failures) {
            std::cout << "  N/" << p << " "
                      << (failure ? "fails at index " + std::to_string(*failure) : "still works")
                      << "\n";
        }
        break;
    }
    return probe.f_rescaled_integer ? 0 : 1;
}

int emit_yukawa(const HGParams& a, const Integer& N, const Integer& n0, std::size_t order,
                std::size_t dmax, Format fmt)
{
    CYCase c(a, N, n0);
    Series Y = yukawa(c, order);
    auto nd = instanton_numbers(Y, dmax);
    std::size_t mq = std::min<std::size_t>(order, 8);
    auto suite = integrality_suite(c, 2 * mq + 2, mq);

    bool nd_integral = true;
    for (const auto& v : nd) {
        if (v.get_den() != 1) nd_integral = false;
    }
    std::vector<std::string> nd_strs;
    for (const auto& v : nd) nd_strs.push_back(rational_str(v));

    switch (fmt) {
    case Format::json: {
        json j;
        j["case"] = a.str();
        j["N"] = c.N().get_str();
        j["n0"] = c.n0().get_str();
        j["yukawa_q"] = Y.coeff_strings();
        json inst = json::array();
        for (const auto& s : nd_strs) inst.push_back(s);
        j["instantons"] = inst;
        j["integrality"]["u_all_integral"] = suite.all_integral;
        j["integrality"]["order_q"] = suite.order_q;
        j["integrality"]["instantons_integral"] = nd_integral;
        std::cout << j.dump() << "\n";
        break;
    }
    case Format::csv:
        std::cout << "d,n_d\n";
        for (std::size_t d = 0; d < nd_strs.size(); ++d) {
            std::cout << d + 1 << "," << nd_strs[d] << "\n";
        }
        break;
    case Format::plain:
        std::cout << "case " << a.str() << "  N = " << c.N().get_str()
                  << "  n0 = " << c.n0().get_str() << "\n";
        std::cout << "n_d: " << join(nd_strs, ", ") << "\n";
        std::cout << "u-series integral to q^" << suite.order_q << ": "
                  << (suite.all_integral ? "yes" : "NO") << "\n";
        break;
    }
    return (suite.all_integral && nd_integral) ? 0 : 1;
}

int emit_euler(const HGParams& a, std::size_t order, Format fmt)
{
    if (a.size() != 2) throw mirrorlab::ParseError("euler needs exactly two parameters");
    bool holds = euler_identity_check(a.values()[0], a.values()[1], order);
    switch (fmt) {
    case Format::json: {
        json j;
        j["params"] = a.str();
        j["order"] = order;
        j["holds"] = holds;
        std::cout << j.dump() << "\n";
        break;
    }
    case Format::csv:
        std::cout << "params,order,holds\n";
        std::cout << csv_quote(a.str()) << "," << order << "," << (holds ? "true" : "false")
                  << "\n";
        break;
    case Format::plain:
        std::cout << "a = " << a.str() << "  order = " << order << "  identity "
                  << (holds ? "holds" : "FAILS") << "\n";
        break;
    }
    return holds ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact hypergeometric mirror maps and their integrality"};
    app.require_subcommand(1);

    // series
    std::string se_a, se_kind = "q";
    std::size_t se_order = 10;
    CommonOpts se_common;
    auto* se = app.add_subcommand("series", "Emit F, G, G/F, q or z(q) coefficients");
    se->add_option("--a", se_a, "Parameters, e.g. 1/5,2/5,3/5,4/5")->required();
    se->add_option("--order", se_order, "Truncation order");
    se->add_option("--kind", se_kind, "F, G, ratio, q or zq")
        ->check(CLI::IsMember({"F", "G", "ratio", "q", "zq"}));
    add_common(se, se_common);

    // dwork-check
    std::string dc_a;
    unsigned long dc_p = 0;
    CommonOpts dc_common;
    auto* dc = app.add_subcommand("dwork-check", "Check the Dwork-image condition at one prime");
    dc->add_option("--a", dc_a)->required();
    dc->add_option("--p", dc_p, "Prime")->required();
    add_common(dc, dc_common);

    // congruence
    std::string cg_a, cg_kind = "both";
    unsigned long cg_p = 0;
    std::size_t cg_order = 20;
    CommonOpts cg_common;
    auto* cg = app.add_subcommand("congruence", "Ratio congruences at one prime");
    cg->add_option("--a", cg_a)->required();
    cg->add_option("--p", cg_p, "Prime")->required();
    cg->add_option("--order", cg_order, "Check indices 1..order");
    cg->add_option("--kind", cg_kind, "fast, theorem or both")
        ->check(CLI::IsMember({"fast", "theorem", "both"}));
    add_common(cg, cg_common);

    // sweep
    std::vector<std::string> sw_a;
    unsigned long sw_pmax = 50;
    std::size_t sw_order = 60;
    std::vector<std::string> sw_checks;
    CommonOpts sw_common;
    auto* sw = app.add_subcommand("sweep", "Run integrality checks over all good primes <= pmax");
    sw->add_option("--a", sw_a, "Parameters (repeatable)")->required();
    sw->add_option("--pmax", sw_pmax, "Largest prime");
    sw->add_option("--order", sw_order, "Truncation order");
    sw->add_option("--checks", sw_checks,
                   "Subset of condition,q-integrality,fast-congruence,dieudonne")
        ->delimiter(',');
    add_common(sw, sw_common);

    // classify
    unsigned cl_n = 4;
    unsigned long cl_bound = 0;
    CommonOpts cl_common;
    auto* cl = app.add_subcommand("classify", "Enumerate conjecturally N-integral tuples");
    cl->add_option("--n", cl_n, "Number of parameters")->required();
    cl->add_option("--bound", cl_bound, "Denominator bound (n = 2 search only)");
    add_common(cl, cl_common);

    // genfun
    unsigned gf_terms = 7;
    CommonOpts gf_common;
    auto* gf = app.add_subcommand("genfun", "Counting series of N-integral mirror maps");
    gf->add_option("--terms", gf_terms, "Number of coefficients");
    add_common(gf, gf_common);

    // table1
    unsigned tb_n = 4;
    unsigned long tb_bound = 0;
    CommonOpts tb_common;
    auto* tb = app.add_subcommand("table1", "Reproduce a block of the reference table and diff it");
    tb->add_option("n", tb_n, "Block: 2, 4 or 6")->required();
    tb->add_option("--bound", tb_bound, "Denominator bound (n = 2 search only)");
    add_common(tb, tb_common);

    // nconst
    std::string nc_a;
    std::size_t nc_order = 30;
    CommonOpts nc_common;
    auto* nc = app.add_subcommand("nconst", "Rescaling constant N and its validation");
    nc->add_option("--a", nc_a)->required();
    nc->add_option("--order", nc_order, "Validation order");
    add_common(nc, nc_common);

    // yukawa
    std::string yk_a, yk_config, yk_N = "auto", yk_n0;
    std::size_t yk_order = 10, yk_dmax = 0;
    CommonOpts yk_common;
    auto* yk = app.add_subcommand("yukawa", "Yukawa coupling and instanton numbers");
    yk->add_option("--a", yk_a, "Parameters (one of the classified n = 4 cases)");
    yk->add_option("--config", yk_config, "JSON case file {params, n0, N}");
    yk->add_option("--n0", yk_n0, "Normalization constant");
    yk->add_option("--N", yk_N, "Rescaling constant or 'auto'");
    yk->add_option("--order", yk_order, "q-expansion order");
    yk->add_option("--dmax", yk_dmax, "Extract n_1..n_dmax (default order)");
    add_common(yk, yk_common);

    // euler
    std::string eu_a;
    std::size_t eu_order = 20;
    CommonOpts eu_common;
    auto* eu = app.add_subcommand("euler", "Check the degree-2 parameter reflection identity");
    eu->add_option("--a", eu_a, "Two parameters a,b")->required();
    eu->add_option("--order", eu_order);
    add_common(eu, eu_common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (se->parsed()) {
            apply_jobs(se_common);
            return emit_series(se_kind, HGParams::parse(se_a), se_order, parse_format(se_common.format));
        }
        if (dc->parsed()) {
            apply_jobs(dc_common);
            return emit_dwork_check(HGParams::parse(dc_a), dc_p, parse_format(dc_common.format));
        }
        if (cg->parsed()) {
            apply_jobs(cg_common);
            return emit_congruence(HGParams::parse(cg_a), cg_p, cg_order, cg_kind,
                                   parse_format(cg_common.format));
        }
        if (sw->parsed()) {
            apply_jobs(sw_common);
            return emit_sweep(sw_a, sw_pmax, sw_order, sw_checks, parse_format(sw_common.format));
        }
        if (cl->parsed()) {
            apply_jobs(cl_common);
            return emit_classify(cl_n, cl_bound, parse_format(cl_common.format));
        }
        if (gf->parsed()) {
            apply_jobs(gf_common);
            return emit_genfun(gf_terms, parse_format(gf_common.format));
        }
        if (tb->parsed()) {
            apply_jobs(tb_common);
            return emit_table1(tb_n, tb_bound, parse_format(tb_common.format));
        }
        if (nc->parsed()) {
            apply_jobs(nc_common);
            return emit_nconst(HGParams::parse(nc_a), nc_order, parse_format(nc_common.format));
        }
        if (yk->parsed()) {
            apply_jobs(yk_common);
            std::string params = yk_a, n0s = yk_n0, Ns = yk_N;
            if (!yk_config.empty()) {
                std::ifstream in(yk_config);
                if (!in) throw mirrorlab::ParseError("cannot open config " + yk_config);
                json j;
                in >> j;
                params = j.at("params").get<std::string>();
                if (j.contains("n0")) {
                    n0s = j["n0"].is_string() ? j["n0"].get<std::string>()
                                              : std::to_string(j["n0"].get<long>());
                }
                if (j.contains("N")) {
                    Ns = j["N"].is_string() ? j["N"].get<std::string>()
                                            : std::to_string(j["N"].get<long>());
                }
            }
            if (params.empty()) throw mirrorlab::ParseError("yukawa needs --a or --config");
            Integer N = (Ns == "auto" || Ns.empty()) ? Integer(0) : Integer(Ns);
            Integer n0 = n0s.empty() ? Integer(0) : Integer(n0s);
            std::size_t dmax = yk_dmax ? yk_dmax : yk_order;
            return emit_yukawa(HGParams::parse(params), N, n0, yk_order, dmax,
                               parse_format(yk_common.format));
        }
        if (eu->parsed()) {
            apply_jobs(eu_common);
            return emit_euler(HGParams::parse(eu_a), eu_order, parse_format(eu_common.format));
        }
    } catch (const mirrorlab::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
