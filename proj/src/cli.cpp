#include "hypu/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hypu/coeffs.hpp"
#include "hypu/compensated.hpp"
#include "hypu/continuation.hpp"
#include "hypu/errors.hpp"
#include "hypu/gamma.hpp"
#include "hypu/partial_sums.hpp"
#include "hypu/rng.hpp"
#include "hypu/series.hpp"

namespace hypu {

namespace {

using ordered_json = nlohmann::ordered_json;

// shortest round-trip decimal form
std::string dstr(double v) { return ordered_json(v).dump(); }

std::string trimmed(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::vector<double> parse_reals(const std::string& csv, const char* flag) {
    std::vector<double> out;
    std::size_t start = 0;
    int idx = 1;
    while (true) {
        std::size_t comma = csv.find(',', start);
        std::string tok = trimmed(
            comma == std::string::npos ? csv.substr(start)
                                       : csv.substr(start, comma - start));
        if (tok.empty())
            throw ParseError(std::string(flag) + ": empty entry", idx);
        char* end = nullptr;
        double v = std::strtod(tok.c_str(), &end);
        if (end != tok.c_str() + tok.size() || !std::isfinite(v))
            throw ParseError(std::string(flag) + ": '" + tok +
                                 "' is not a finite real",
                             idx);
        out.push_back(v);
        if (comma == std::string::npos) break;
        start = comma + 1;
        ++idx;
    }
    return out;
}

struct Sweep {
    double start, stop;
    long count;
};

Sweep parse_sweep(const std::string& spec, const char* flag) {
    std::vector<std::string> seg;
    std::size_t pos = 0;
    while (true) {
        std::size_t colon = spec.find(':', pos);
        seg.push_back(colon == std::string::npos
                          ? spec.substr(pos)
                          : spec.substr(pos, colon - pos));
        if (colon == std::string::npos) break;
        pos = colon + 1;
    }
    if (seg.size() != 3)
        throw ParseError(std::string(flag) + ": expected start:stop:count", 1);
    double vals[2];
    for (int i = 0; i < 2; ++i) {
        char* end = nullptr;
        vals[i] = std::strtod(seg[i].c_str(), &end);
        if (seg[i].empty() || end != seg[i].c_str() + seg[i].size() ||
            !std::isfinite(vals[i]))
            throw ParseError(std::string(flag) + ": '" + seg[i] +
                                 "' is not a finite real",
                             i + 1);
    }
    char* end = nullptr;
    long count = std::strtol(seg[2].c_str(), &end, 10);
    if (seg[2].empty() || end != seg[2].c_str() + seg[2].size() || count < 1)
        throw ParseError(std::string(flag) + ": count must be a positive "
                                             "integer",
                         3);
    return {vals[0], vals[1], count};
}

MethodChoice method_from_string(const std::string& m) {
    if (m == "auto") return MethodChoice::automatic;
    if (m == "direct") return MethodChoice::direct;
    if (m == "continuation") return MethodChoice::continuation;
    if (m == "zero-balanced") return MethodChoice::zero_balanced;
    throw ParseError("--method: unknown value '" + m + "'", 1);
}

double reported_s(const ParameterSet& ps) {
    BalanceInfo bal = balance(ps);
    return bal.is_integer ? double(bal.integer_value) : bal.s;
}

struct Opts {
    std::string a, b;
    std::string method = "auto";
    std::string rep = "all";
    std::string output = "json";
    std::string suite = "all";
    std::string zsweep, msweep;
    double z = std::nan("");
    double tol = 1e-12;
    long m = 0;
    long nmax = 12;
    long maxterms = 10000;
    std::uint64_t seed = 42;
};

void write_error(std::ostream& out, const std::string& fmt, const Error& e) {
    const auto* pe = dynamic_cast<const ParseError*>(&e);
    if (fmt == "json") {
        ordered_json j;
        j["error"] = e.name();
        j["message"] = e.what();
        if (pe) j["position"] = pe->position();
        out << j.dump(2) << "\n";
    } else {
        out << "error: " << e.name() << ": " << e.what();
        if (pe) out << " (token " << pe->position() << ")";
        out << "\n";
    }
}

// ---- eval ---------------------------------------------------------------

int cmd_eval(const Opts& o, std::ostream& out) {
    ParameterSet ps = parse_parameters(o.a, o.b);
    MethodChoice mc = method_from_string(o.method);
    bool sweep = !o.zsweep.empty();
    bool single = std::isfinite(o.z);
    if (sweep == single)
        throw ParseError("eval needs exactly one of --z or --z-sweep", 1);

    std::vector<double> zs;
    if (sweep) {
        Sweep sw = parse_sweep(o.zsweep, "--z-sweep");
        for (long i = 0; i < sw.count; ++i)
            zs.push_back(sw.count == 1
                             ? sw.start
                             : sw.start + (sw.stop - sw.start) * double(i) /
                                              double(sw.count - 1));
    } else {
        zs.push_back(o.z);
    }

    struct Row {
        double z;
        EvalResult r;
        std::vector<std::string> warn;
    };
    std::vector<Row> rows;
    for (double z : zs) {
        std::vector<std::string> warn;
        EvalResult r = evaluate(ps, z, o.tol, o.maxterms, mc, &warn);
        rows.push_back({z, r, std::move(warn)});
    }
    double s = reported_s(ps);

    auto row_json = [&](const Row& row) {
        ordered_json j;
        j["value"] = row.r.value;
        j["abs_err_estimate"] = row.r.abs_err_estimate;
        j["terms_used"] = row.r.terms_used;
        j["method"] = method_name(row.r.method);
        j["s"] = s;
        j["warnings"] = row.warn;
        return j;
    };

    if (o.output == "json") {
        if (!sweep) {
            out << row_json(rows[0]).dump(2) << "\n";
        } else {
            ordered_json arr = ordered_json::array();
            for (const Row& row : rows) {
                ordered_json withz;
                withz["z"] = row.z;
                ordered_json j = row_json(row);
                for (auto it = j.begin(); it != j.end(); ++it)
                    withz[it.key()] = it.value();
                arr.push_back(withz);
            }
            out << arr.dump(2) << "\n";
        }
    } else if (o.output == "csv") {
        out << "z,value,abs_err_estimate,terms_used,method\n";
        for (const Row& row : rows)
            out << dstr(row.z) << ',' << dstr(row.r.value) << ','
                << dstr(row.r.abs_err_estimate) << ',' << row.r.terms_used
                << ',' << method_name(row.r.method) << "\n";
    } else {
        for (const Row& row : rows) {
            out << "z                = " << dstr(row.z) << "\n"
                << "value            = " << dstr(row.r.value) << "\n"
                << "abs_err_estimate = " << dstr(row.r.abs_err_estimate)
                << "\n"
                << "terms_used       = " << row.r.terms_used << "\n"
                << "method           = " << method_name(row.r.method) << "\n"
                << "s                = " << dstr(s) << "\n";
            for (const std::string& w : row.warn)
                out << "warning: " << w << "\n";
            if (rows.size() > 1) out << "\n";
        }
    }
    return 0;
}

// ---- expansion ------------------------------------------------------------

int cmd_expansion(const Opts& o, std::ostream& out) {
    ParameterSet ps = parse_parameters(o.a, o.b);
    BalanceInfo bal = balance(ps);
    if (bal.is_integer && bal.integer_value != 0)
        throw NotImplementedIntegerS(
            "the expansion about z = 1 at nonzero integer balance is not "
            "implemented");

    ordered_json j;
    j["a"] = ps.a;
    j["b"] = ps.b;
    j["s"] = reported_s(ps);
    if (bal.is_integer) {
        ZeroBalancedExpansion ex = build_zero_balanced(ps, o.nmax, o.tol);
        j["N"] = ex.N;
        j["analytic"] = ex.analytic;
        j["logpart"] = ex.logpart;
        if (o.output == "csv") {
            out << "n,analytic,logpart\n";
            for (long n = 0; n <= ex.N; ++n)
                out << n << ',' << dstr(ex.analytic[n]) << ','
                    << dstr(ex.logpart[n]) << "\n";
            return 0;
        }
        if (o.output == "text") {
            out << "zero-balanced expansion, N = " << ex.N << "\n";
            for (long n = 0; n <= ex.N; ++n)
                out << "  n=" << n << "  analytic=" << dstr(ex.analytic[n])
                    << "  logpart=" << dstr(ex.logpart[n]) << "\n";
            return 0;
        }
    } else {
        ContinuationExpansion ex = build_expansion(ps, o.nmax, o.tol);
        j["N"] = ex.N;
        j["g0"] = ex.g0;
        j["gs"] = ex.gs;
        if (o.output == "csv") {
            out << "n,g0,gs\n";
            for (long n = 0; n <= ex.N; ++n)
                out << n << ',' << dstr(ex.g0[n]) << ',' << dstr(ex.gs[n])
                    << "\n";
            return 0;
        }
        if (o.output == "text") {
            out << "two-exponent expansion, s = " << dstr(ex.s)
                << ", N = " << ex.N << "\n";
            for (long n = 0; n <= ex.N; ++n)
                out << "  n=" << n << "  g0=" << dstr(ex.g0[n])
                    << "  gs=" << dstr(ex.gs[n]) << "\n";
            return 0;
        }
    }
    out << j.dump(2) << "\n";
    return 0;
}

// ---- constant ---------------------------------------------------------

int cmd_constant(const Opts& o, std::ostream& out) {
    ParameterSet ps = parse_parameters(o.a, o.b);
    std::vector<BRep> reps;
    if (o.rep == "all")
        reps = applicable_reps(ps);
    else
        reps = {rep_from_name(o.rep)};

    double psi_part = 2.0 * digamma(1.0) - digamma(ps.a[0]) - digamma(ps.a[1]);
    struct Entry {
        BRep rep;
        BValue b;
    };
    std::vector<Entry> es;
    for (BRep r : reps) es.push_back({r, constant_B(ps, r)});
    double dev = 0.0;
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t k = i + 1; k < es.size(); ++k)
            dev = std::max(dev, std::abs(es[i].b.value - es[k].b.value));

    if (o.output == "csv") {
        out << "rep,B,abs_err,L\n";
        for (const Entry& e : es)
            out << rep_name(e.rep) << ',' << dstr(e.b.value) << ','
                << dstr(e.b.abs_err) << ',' << dstr(psi_part + e.b.value)
                << "\n";
    } else if (o.output == "text") {
        for (const Entry& e : es)
            out << std::left << std::setw(14) << rep_name(e.rep)
                << "  B = " << dstr(e.b.value)
                << "  (est err " << dstr(e.b.abs_err) << ")"
                << "  L = " << dstr(psi_part + e.b.value) << "\n";
        out << "max pairwise deviation = " << dstr(dev) << "\n";
    } else {
        ordered_json j;
        j["a"] = ps.a;
        j["b"] = ps.b;
        j["s"] = reported_s(ps);
        ordered_json jr;
        for (const Entry& e : es) {
            ordered_json one;
            one["B"] = e.b.value;
            one["abs_err"] = e.b.abs_err;
            one["L"] = psi_part + e.b.value;
            jr[rep_name(e.rep)] = one;
        }
        j["reps"] = jr;
        j["max_pairwise_deviation"] = dev;
        out << j.dump(2) << "\n";
    }
    return 0;
}

// ---- partial-sum ----------------------------------------------------------

int cmd_partial_sum(const Opts& o, std::ostream& out) {
    ParameterSet ps = parse_parameters(o.a, o.b);
    bool sweep = !o.msweep.empty();
    if (sweep == (o.m > 0))
        throw ParseError("partial-sum needs exactly one of --m or --m-sweep",
                         1);
    std::vector<long> ms;
    if (sweep) {
        Sweep sw = parse_sweep(o.msweep, "--m-sweep");
        if (sw.start < 1 || sw.stop < 1)
            throw ParseError("--m-sweep: bounds must be >= 1", 1);
        for (long i = 0; i < sw.count; ++i) {
            double f = sw.count == 1 ? 0.0 : double(i) / double(sw.count - 1);
            long m = std::lround(sw.start *
                                 std::pow(sw.stop / sw.start, f));
            if (ms.empty() || ms.back() != m) ms.push_back(m);
        }
    } else {
        ms.push_back(o.m);
    }

    double L = constant_L(ps);
    double base = L - digamma(1.0);
    std::vector<PartialSumReport> rows;
    for (long m : ms) {
        double sum = partial_sum(ps, m);
        double asym = base + std::log(double(m));
        rows.push_back({m, sum, asym, sum - asym});
    }

    if (o.output == "csv") {
        out << "m,sum,asymptotic,defect\n";
        for (const auto& r : rows)
            out << r.m << ',' << dstr(r.sum) << ',' << dstr(r.asymptotic)
                << ',' << dstr(r.defect) << "\n";
    } else if (o.output == "text") {
        for (const auto& r : rows)
            out << "m=" << r.m << "  sum=" << dstr(r.sum)
                << "  asymptotic=" << dstr(r.asymptotic)
                << "  defect=" << dstr(r.defect) << "\n";
    } else {
        auto jrow = [](const PartialSumReport& r) {
            ordered_json j;
            j["m"] = r.m;
            j["sum"] = r.sum;
            j["asymptotic"] = r.asymptotic;
            j["defect"] = r.defect;
            return j;
        };
        if (!sweep) {
            out << jrow(rows[0]).dump(2) << "\n";
        } else {
            ordered_json arr = ordered_json::array();
            for (const auto& r : rows) arr.push_back(jrow(r));
            out << arr.dump(2) << "\n";
        }
    }
    return 0;
}

// ---- verify -----------------------------------------------------------

struct CheckResult {
    bool pass;
    double worst;
    double tol;
};

struct Check {
    std::string name;
    std::string suite;
    std::function<CheckResult()> fn;
};

ParameterSet fixed_set(int which) {
    switch (which) {
    case 20: return {{0.52, 0.83, 0.31}, {0.95, 1.37}};
    case 30: return {{0.52, 0.83, 0.61, 1.05}, {0.95, 1.37, 0.78}};
    case 40: return {{0.52, 0.83, 0.61, 1.05, 0.97}, {0.95, 1.37, 0.78, 1.21}};
    case 2: return {{0.3, 0.5, 0.7}, {0.6, 0.9}};
    case 3: return {{0.5, 0.7, 0.75, 0.7}, {0.9, 0.9, 0.85}};
    default: return {{0.88, 1.1, 0.35, 0.55, 0.8}, {0.85, 0.7, 1.03, 1.1}};
    }
}

// generic parameter draw; s kept away from integers and from |s| >= 2
ParameterSet draw_noninteger(Lcg& rng, int p) {
    for (int tries = 0; tries < 1000; ++tries) {
        std::vector<double> a, b;
        for (int j = 0; j <= p; ++j) a.push_back(rng.uniform(0.2, 1.3));
        for (int j = 0; j < p; ++j) b.push_back(rng.uniform(0.2, 1.3));
        ParameterSet ps{a, b};
        BalanceInfo bal = balance(ps);
        if (std::abs(bal.s - std::round(bal.s)) <= 0.1) continue;
        if (std::abs(bal.s) >= 2.0) continue;
        return ps;
    }
    throw NoConvergence("parameter draw failed to satisfy the rejection rule");
}

// draw with the balance pinned to a target by solving for the last b
ParameterSet draw_with_balance(Lcg& rng, int p, double s_target) {
    for (int tries = 0; tries < 1000; ++tries) {
        std::vector<double> a, b;
        double sum = s_target;
        for (int j = 0; j <= p; ++j) {
            a.push_back(rng.uniform(0.2, 1.3));
            sum += a.back();
        }
        for (int j = 0; j + 1 < p; ++j) {
            b.push_back(rng.uniform(0.2, 1.3));
            sum -= b.back();
        }
        if (sum < 0.25 || sum > 3.0) continue;
        b.push_back(sum);
        return ParameterSet{a, b};
    }
    throw NoConvergence("parameter draw failed to satisfy the rejection rule");
}

double rel(double x, double ref) {
    return std::abs(x - ref) / std::max(1.0, std::abs(ref));
}

std::vector<Check> make_checks(std::uint64_t seed) {
    std::vector<Check> checks;

    checks.push_back({"a_coeff_cross", "identities", [] {
        double worst = 0.0;
        for (int which : {30, 40}) {
            ParameterSet ps = fixed_set(which);
            std::vector<dd> tab = a_table(ps, 12);
            for (long k = 0; k <= 12; ++k) {
                double c = a_coeff(ps, k);
                double alt = a_coeff_alt(ps, k);
                double t = double(tab[k]);
                worst = std::max(worst, rel(alt, c));
                worst = std::max(worst, rel(t, c));
            }
        }
        return CheckResult{worst <= 1e-10, worst, 1e-10};
    }});

    checks.push_back({"g0_gamma", "identities", [seed] {
        Lcg rng(seed);
        double worst = 0.0;
        for (int p = 2; p <= 6; ++p)
            for (int d = 0; d < 10; ++d) {
                ParameterSet ps = draw_noninteger(rng, p);
                std::vector<dd> tab = a_table(ps, 0);
                double g0 = g_n_s(ps, tab, 0);
                double ref = gamma(-balance(ps).s);
                worst = std::max(worst, std::abs(g0 - ref) / std::abs(ref));
            }
        return CheckResult{worst <= 1e-12, worst, 1e-12};
    }});

    checks.push_back({"transforms", "identities", [seed] {
        Lcg rng(seed + 1);
        double worst = 0.0;
        for (int p = 2; p <= 4; ++p)
            for (int d = 0; d < 5; ++d) {
                ParameterSet ps = draw_noninteger(rng, p);
                for (long m : {0L, 1L, 2L, 5L, 9L, 14L}) {
                    double lhs = transform_lhs(ps, m);
                    double rhs = transform_rhs(ps, m);
                    worst = std::max(worst,
                                     std::abs(lhs - rhs) / std::abs(lhs));
                }
            }
        return CheckResult{worst <= 1e-10, worst, 1e-10};
    }});

    checks.push_back({"unit_sum", "identities", [seed] {
        Lcg rng(seed + 2);
        double worst = 0.0;
        for (int p = 2; p <= 3; ++p)
            for (int d = 0; d < 3; ++d) {
                ParameterSet ps =
                    draw_with_balance(rng, p, rng.uniform(0.3, 1.5));
                std::vector<dd> tab = a_table(ps, 600);
                Valued v = unit_sum_coeff_route(ps, tab);
                EvalResult r = eval_direct(ps, 1.0, 1e-13, 60000);
                double pf = gamma_prefactor(ps);
                worst = std::max(worst, std::abs(v.value / pf - r.value) /
                                            std::abs(r.value));
            }
        return CheckResult{worst <= 1e-8, worst, 1e-8};
    }});

    checks.push_back({"b_consensus", "constants", [] {
        double worst = 0.0;
        for (int which : {2, 3, 4}) {
            ParameterSet ps = fixed_set(which);
            std::vector<BValue> vals;
            for (BRep r : applicable_reps(ps))
                vals.push_back(constant_B(ps, r));
            for (std::size_t i = 0; i < vals.size(); ++i)
                for (std::size_t k = i + 1; k < vals.size(); ++k)
                    worst = std::max(worst, std::abs(vals[i].value -
                                                     vals[k].value));
        }
        return CheckResult{worst <= 1e-9, worst, 1e-9};
    }});

    checks.push_back({"zb_leading", "expansion", [] {
        double worst = 0.0;
        for (int which : {2, 3}) {
            ParameterSet ps = fixed_set(which);
            ZeroBalancedExpansion ex = build_zero_balanced(ps, 2, 1e-12);
            double L = constant_L(ps);
            worst = std::max(worst, std::abs(ex.logpart[0] - 1.0));
            worst = std::max(worst, std::abs(ex.analytic[0] - L));
        }
        return CheckResult{worst <= 1e-10, worst, 1e-10};
    }});

    checks.push_back({"overlap", "expansion", [seed] {
        Lcg rng(seed + 3);
        double worst = 0.0;
        for (int p = 2; p <= 4; ++p)
            for (int d = 0; d < 3; ++d) {
                ParameterSet ps = draw_noninteger(rng, p);
                ContinuationExpansion ex = build_expansion(ps, 40, 1e-12);
                for (double z : {0.55, 0.75, 0.9}) {
                    EvalResult c = eval_continued(ex, z);
                    EvalResult dr = eval_direct(ps, z, 1e-13, 60000);
                    worst = std::max(worst, std::abs(c.value - dr.value) /
                                                std::abs(dr.value));
                }
            }
        return CheckResult{worst <= 1e-9, worst, 1e-9};
    }});

    checks.push_back({"limit_route", "expansion", [] {
        double worst = 0.0;
        for (int which : {20, 30, 40}) {
            ParameterSet ps = fixed_set(which);
            std::vector<dd> tab = a_table(ps, 600);
            for (long n = 0; n <= 2; ++n) {
                Valued g = g_n_zero(ps, tab, n);
                double lim = g_n_limit(ps, n);
                worst = std::max(worst,
                                 std::abs(lim - g.value) / std::abs(g.value));
            }
        }
        return CheckResult{worst <= 1e-5, worst, 1e-5};
    }});

    checks.push_back({"sum_recurrence", "partial-sums", [] {
        double worst = 0.0;
        for (int which : {2, 3}) {
            ParameterSet ps = fixed_set(which);
            double rec = partial_sum(ps, 10000);
            double brute = partial_sum_brute(ps, 10000);
            worst = std::max(worst, std::abs(rec - brute) / std::abs(brute));
        }
        return CheckResult{worst <= 1e-11, worst, 1e-11};
    }});

    checks.push_back({"harmonic_law", "partial-sums", [] {
        // the p = 0 degenerate case of the logarithmic law, known exactly
        const long hm = 10000;
        CompensatedSum h;
        for (long k = 0; k < hm; ++k) h.add(1.0 / double(k + 1));
        double diff = h.value() - (-digamma(1.0) + std::log(double(hm)) +
                                   0.5 / double(hm));
        return CheckResult{std::abs(diff) <= 1e-8, std::abs(diff), 1e-8};
    }});

    checks.push_back({"script_l_limit", "partial-sums", [seed] {
        Lcg rng(seed + 4);
        double worst = 0.0;
        for (int p = 2; p <= 3; ++p) {
            ParameterSet ps = draw_with_balance(rng, p, 0.0);
            double sl = script_L(ps, 1000000);
            double L = constant_L(ps);
            worst = std::max(worst, rel(sl, L));
        }
        return CheckResult{worst <= 1e-5, worst, 1e-5};
    }});

    return checks;
}

int cmd_verify(const Opts& o, std::ostream& out) {
    std::vector<Check> checks = make_checks(o.seed);
    bool known = o.suite == "all";
    for (const Check& c : checks) known = known || c.suite == o.suite;
    if (!known)
        throw ParseError("--suite: unknown value '" + o.suite + "'", 1);

    struct Ran {
        std::string name;
        CheckResult r;
        double ms;
    };
    std::vector<Ran> ran;
    bool all_pass = true;
    for (const Check& c : checks) {
        if (o.suite != "all" && c.suite != o.suite) continue;
        auto t0 = std::chrono::steady_clock::now();
        CheckResult r = c.fn();
        double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
        ran.push_back({c.name, r, ms});
        all_pass = all_pass && r.pass;
    }

    if (o.output == "json") {
        ordered_json j;
        j["suite"] = o.suite;
        j["seed"] = o.seed;
        ordered_json arr = ordered_json::array();
        for (const Ran& r : ran) {
            ordered_json one;
            one["name"] = r.name;
            one["pass"] = r.r.pass;
            one["worst"] = r.r.worst;
            one["tol"] = r.r.tol;
            arr.push_back(one);
        }
        j["checks"] = arr;
        j["pass"] = all_pass;
        out << j.dump(2) << "\n";
    } else if (o.output == "csv") {
        out << "name,pass,worst,tol\n";
        for (const Ran& r : ran)
            out << r.name << ',' << (r.r.pass ? "true" : "false") << ','
                << dstr(r.r.worst) << ',' << dstr(r.r.tol) << "\n";
    } else {
        int npass = 0;
        for (const Ran& r : ran) {
            out << (r.r.pass ? "PASS  " : "FAIL  ") << std::left
                << std::setw(16) << r.name << " worst " << std::setw(12)
                << dstr(r.r.worst) << " tol " << std::setw(8) << dstr(r.r.tol)
                << "  (" << std::lround(r.ms) << " ms)\n";
            npass += r.r.pass ? 1 : 0;
        }
        out << "suite " << o.suite << ": " << npass << "/" << ran.size()
            << " passed\n";
    }
    return all_pass ? 0 : 3;
}

} // namespace

ParameterSet parse_parameters(const std::string& a_csv,
                              const std::string& b_csv) {
    std::vector<double> a = parse_reals(a_csv, "--a");
    std::vector<double> b = parse_reals(b_csv, "--b");
    if (a.size() != b.size() + 1)
        throw ParseError("--a needs exactly one more entry than --b (got " +
                             std::to_string(a.size()) + " and " +
                             std::to_string(b.size()) + ")",
                         1);
    if (b.empty() || b.size() > 6)
        throw ParseError("supported p range is 1..6, got p=" +
                             std::to_string(b.size()),
                         1);
    for (std::size_t j = 0; j < b.size(); ++j) {
        double r = std::round(b[j]);
        if (r <= 0.0 && std::abs(b[j] - r) < 1e-12)
            throw ParseError("--b entry " + dstr(b[j]) +
                                 " is a nonpositive integer",
                             int(j + 1));
    }
    return ParameterSet{a, b};
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"evaluation of generalized hypergeometric series near unit "
                 "argument"};
    app.require_subcommand(1);
    Opts o;

    auto add_common = [&](CLI::App* c, bool needs_params) {
        auto* oa = c->add_option("--a", o.a,
                                 "numerator parameters, comma-separated");
        auto* ob = c->add_option("--b", o.b,
                                 "denominator parameters, comma-separated");
        if (needs_params) {
            oa->required();
            ob->required();
        }
        c->add_option("--tol", o.tol, "target tolerance")
            ->capture_default_str();
        c->add_option("--output", o.output, "json|csv|text")
            ->check(CLI::IsMember({"json", "csv", "text"}));
    };

    CLI::App* eval = app.add_subcommand("eval", "evaluate the series at z");
    add_common(eval, true);
    eval->add_option("--z", o.z, "evaluation point");
    eval->add_option("--z-sweep", o.zsweep, "start:stop:count, evenly spaced");
    eval->add_option("--method", o.method,
                     "auto|direct|continuation|zero-balanced")
        ->check(CLI::IsMember(
            {"auto", "direct", "continuation", "zero-balanced"}));
    eval->add_option("--max-terms", o.maxterms, "direct-series term budget")
        ->capture_default_str();

    CLI::App* expansion =
        app.add_subcommand("expansion", "coefficients of the expansion about "
                                        "z = 1");
    add_common(expansion, true);
    expansion->add_option("--n-max", o.nmax, "truncation order")
        ->capture_default_str();

    CLI::App* constant = app.add_subcommand(
        "constant", "the zero-balanced constants B and L");
    add_common(constant, true);
    constant->add_option(
        "--rep", o.rep,
        "a_series|a_series_alt|closed_form|descent|split|all");

    CLI::App* psum = app.add_subcommand(
        "partial-sum", "partial sums and their logarithmic law");
    add_common(psum, true);
    psum->add_option("--m", o.m, "number of terms");
    psum->add_option("--m-sweep", o.msweep,
                     "start:stop:count, geometrically spaced");

    CLI::App* verify =
        app.add_subcommand("verify", "run the self-check suite");
    add_common(verify, false);
    verify->add_option(
        "--suite", o.suite,
        "all|identities|constants|expansion|partial-sums");
    verify->add_option("--seed", o.seed, "draw seed")->capture_default_str();
    o.output = "json";

    std::vector<std::string> full;
    full.emplace_back("pfq");
    full.insert(full.end(), args.begin(), args.end());
    std::vector<char*> argv;
    argv.reserve(full.size());
    for (std::string& s : full) argv.push_back(s.data());

    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream os;
        int rc = app.exit(e, os, os);
        (rc == 0 ? out : err) << os.str();
        return rc == 0 ? 0 : 2;
    }
    if (*verify && !verify->count("--output")) o.output = "text";

    std::ostringstream buf;
    int code = 0;
    try {
        if (*eval)
            code = cmd_eval(o, buf);
        else if (*expansion)
            code = cmd_expansion(o, buf);
        else if (*constant)
            code = cmd_constant(o, buf);
        else if (*psum)
            code = cmd_partial_sum(o, buf);
        else
            code = cmd_verify(o, buf);
    } catch (const ParseError& e) {
        buf.str("");
        write_error(buf, o.output, e);
        code = 2;
    } catch (const Error& e) {
        buf.str("");
        write_error(buf, o.output, e);
        code = 1;
    }
    out << buf.str();
    return code;
}

} // namespace hypu
