#include "hypu/continuation.hpp"

#include <algorithm>
#include <cmath>

#include "hypu/coeffs.hpp"
#include "hypu/compensated.hpp"
#include "hypu/dd.hpp"
#include "hypu/errors.hpp"
#include "hypu/gamma.hpp"
#include "hypu/tail.hpp"

namespace hypu {

namespace {

constexpr long kTableK = 600;

// T_j = b_j + ... + b_p - (a_{j+1} + ... + a_{p+1}), j 1-based
double tsum(const ParameterSet& ps, int j) {
    double t = 0.0;
    for (std::size_t i = j - 1; i < ps.b.size(); ++i) t += ps.b[i];
    for (std::size_t i = j; i < ps.a.size(); ++i) t -= ps.a[i];
    return t;
}

void guard_div(double f) {
    if (std::abs(f) < 1e-12)
        throw SingularDenominator(
            "parameter combination places a zero factor in a denominator");
}

dd poch_dd(double x, long n) {
    dd r(1.0);
    for (long i = 0; i < n; ++i) r *= dd(x + i);
    return r;
}

TailPreset window(long K, long n0, int ncorr) {
    return TailPreset{K, n0, 1, ncorr, 6.0, 1e-6};
}

struct UnitSeries {
    dd value;
    double abs_err;
};

// Unit-argument series with one algebraic decay family j^-family: exact dd
// term recurrence plus fitted tail. Families steeper than j^-10 truncate so
// hard at the window end that the zeta columns would underflow; plain
// truncation is already below noise there.
UnitSeries hyp_at_1(const std::vector<double>& nums,
                    const std::vector<double>& dens, double family,
                    const TailPreset& preset) {
    std::vector<dd> terms(preset.K + 1);
    dd t(1.0);
    for (long j = 0; j <= preset.K; ++j) {
        terms[j] = t;
        dd r(1.0);
        for (double x : nums) r *= dd(x + j);
        for (double y : dens) {
            guard_div(y + j);
            r /= dd(y + j);
        }
        t *= r / dd(double(1 + j));
    }
    if (family > 10.0) {
        dd tot(0.0);
        for (const dd& v : terms) tot += v;
        double cut =
            std::abs(double(terms.back())) * double(preset.K) / (family - 1.0);
        return {tot, 2.0 * cut};
    }
    TailSum ts = sum_with_tail(terms, {family}, preset);
    return {ts.value, ts.abs_err};
}

std::vector<double> b_families(const ParameterSet& ps, double shift) {
    std::vector<double> f;
    for (std::size_t j = 2; j < ps.a.size(); ++j) f.push_back(shift + ps.a[j]);
    return f;
}

BValue b_via_a_series(const ParameterSet& ps) {
    if (ps.p() == 1) return {0.0, 0.0};
    const auto& a = ps.a;
    std::vector<dd> tab = a_table(ps, kTableK);
    std::vector<dd> terms(tab.size(), dd(0.0));
    guard_div(a[0]);
    guard_div(a[1]);
    dd u = dd(1.0) / (dd(a[0]) * dd(a[1]));
    for (long k = 1; k < long(tab.size()); ++k) {
        terms[k] = u * tab[k];
        guard_div(a[0] + k);
        guard_div(a[1] + k);
        u *= dd(double(k)) / (dd(a[0] + k) * dd(a[1] + k));
    }
    TailSum ts = sum_with_tail(terms, b_families(ps, 1.0), tail_preset_dd());
    return {double(ts.value), ts.abs_err};
}

BValue b_via_closed_form(const ParameterSet& ps) {
    const auto& a = ps.a;
    const auto& b = ps.b;
    double v1 = b[0] - a[2], v2 = b[1] - a[2];
    std::vector<dd> terms(kTableK + 1, dd(0.0));
    guard_div(a[0]);
    guard_div(a[1]);
    dd w = dd(v1) * dd(v2) / (dd(a[0]) * dd(a[1]));
    for (long k = 1; k <= kTableK; ++k) {
        terms[k] = w / dd(double(k));
        guard_div(a[0] + k);
        guard_div(a[1] + k);
        w *= dd(v1 + k) * dd(v2 + k) / (dd(a[0] + k) * dd(a[1] + k));
    }
    TailSum ts = sum_with_tail(terms, {1.0 + a[2]}, tail_preset_dd());
    return {double(ts.value), ts.abs_err};
}

BValue b_via_alt(const ParameterSet& ps) {
    int p = ps.p();
    double c1, c2;
    alt_prefactor(ps, c1, c2);
    const auto& a = ps.a;
    long K = p == 3 ? 1800 : 900;
    std::vector<double> E = alt_moments(ps, K);
    std::vector<dd> terms(K + 1, dd(0.0));
    guard_div(a[0]);
    guard_div(a[1]);
    dd t = dd(c1) * dd(c2) / (dd(a[0]) * dd(a[1]));
    for (long k = 1; k <= K; ++k) {
        terms[k] = t / dd(double(k)) * dd(E[k]);
        guard_div(a[0] + k);
        guard_div(a[1] + k);
        t *= dd(c1 + k) * dd(c2 + k) / (dd(a[0] + k) * dd(a[1] + k));
    }
    // quadrature term data carries binary64 noise: lean basis, wide log-span
    TailPreset pre = p == 3 ? TailPreset{1800, 720, 2, 4, 3.5, 0.02}
                            : TailPreset{900, 72, 2, 4, 3.5, 0.02};
    TailSum ts = sum_with_tail(terms, b_families(ps, 1.0), pre);
    return {double(ts.value), ts.abs_err};
}

BValue b_via_descent(const ParameterSet& ps) {
    int p = ps.p();
    const auto& a = ps.a;
    const auto& b = ps.b;
    double s2 = tsum(ps, 2);
    guard_div(a[0]);
    guard_div(a[1]);
    UnitSeries lead =
        hyp_at_1({b[0] - a[2] + 1.0, s2 + 1.0, 1.0, 1.0},
                 {a[0] + 1.0, a[1] + 1.0, 2.0}, 1.0 + a[2], window(3000, 1200, 6));
    double c0 = (b[0] - a[2]) * s2 / (a[0] * a[1]);
    CompensatedSum tot;
    tot.add(c0 * double(lead.value));
    double err = std::abs(c0) * lead.abs_err;

    for (int k = 3; k <= p; ++k) {
        double tk = tsum(ps, k);
        double uk = tk + b[k - 2];
        SignedLog pl;
        for (int j = 0; j < k; ++j) pl.mul_gamma(a[j]);
        for (int j = 0; j < k - 2; ++j) pl.div_gamma(b[j]);
        pl.div_gamma(uk + 1.0);
        double pref = (b[k - 2] - a[k]) * tk * pl.value();

        std::vector<double> nums(a.begin(), a.begin() + k);
        std::vector<double> dens(b.begin(), b.begin() + (k - 2));
        dens.push_back(0.0);
        const long L0 = 340;
        std::vector<dd> outer(L0 + 1);
        dd lt(1.0);
        double in_err = 0.0;
        for (long l = 0; l <= L0; ++l) {
            dens.back() = uk + 1.0 + l;
            UnitSeries inner =
                hyp_at_1(nums, dens, 2.0 + l, window(420, 168, 6));
            outer[l] = lt * inner.value;
            in_err += std::abs(double(lt)) * inner.abs_err;
            guard_div(uk + 1.0 + l);
            lt *= dd(b[k - 2] - a[k] + 1.0 + l) * dd(tk + 1.0 + l) /
                  (dd(double(l + 2)) * dd(uk + 1.0 + l));
        }
        TailSum ts = sum_with_tail(outer, {1.0 + a[k]}, window(L0, 136, 5));
        tot.add(pref * double(ts.value));
        err += std::abs(pref) * (ts.abs_err + in_err);
    }
    return {tot.value(), err};
}

BValue b_via_split(const ParameterSet& ps) {
    const auto& a = ps.a;
    const auto& b = ps.b;
    double c = b[1] + b[2] - a[2] - a[3];
    guard_div(a[0]);
    guard_div(a[1]);

    const long K1 = 3000;
    std::vector<dd> t1(K1 + 1, dd(0.0));
    dd u = dd(b[0] - a[2]) * dd(c) / (dd(a[0]) * dd(a[1]));
    for (long k = 1; k <= K1; ++k) {
        t1[k] = u / dd(double(k));
        u *= dd(b[0] - a[2] + k) * dd(c + k) / (dd(a[0] + k) * dd(a[1] + k));
    }
    TailSum s1 = sum_with_tail(t1, {1.0 + a[2]}, window(K1, 1200, 6));

    // second series: each term needs its own lower-order unit-argument sum
    // whose asymptotic regime only starts past j ~ k, hence the k-scaled
    // windows
    const long K2 = 260;
    std::vector<dd> t2(K2 + 1, dd(0.0));
    u = dd(b[1] - a[3]) * dd(b[2] - a[3]) / (dd(a[0]) * dd(a[1]));
    double in_err = 0.0;
    for (long k = 1; k <= K2; ++k) {
        long jk = std::max<long>(1200, 10 * k);
        UnitSeries inner = hyp_at_1({b[0] - a[2], c + k, double(k)},
                                    {a[0] + k, a[1] + k}, 1.0 + a[2],
                                    window(jk, std::max<long>(600, 8 * k), 6));
        t2[k] = u / dd(double(k)) * inner.value;
        in_err += std::abs(double(u)) / double(k) * inner.abs_err;
        u *= dd(b[1] - a[3] + k) * dd(b[2] - a[3] + k) /
             (dd(a[0] + k) * dd(a[1] + k));
    }
    TailSum s2 = sum_with_tail(t2, {1.0 + a[3]}, window(K2, 104, 5));
    return {double(s1.value + s2.value), s1.abs_err + s2.abs_err + in_err};
}

long pick_order(double x, double tol) {
    double target = std::max(tol, 1e-15) / 64.0;
    long N = std::lround(std::ceil(std::log(target) / std::log(x)));
    return std::clamp<long>(N, 12, 72);
}

bool is_terminating(const ParameterSet& ps) {
    for (double x : ps.a)
        if (x <= 0.0 && std::abs(x - std::round(x)) < 1e-12) return true;
    return false;
}

EvalResult eval_via_expansion(const ParameterSet& ps, double z, double tol) {
    if (!(z > 0.0 && z < 1.0))
        throw DomainError("continuation evaluation needs z in (0, 1)");
    ContinuationExpansion ex = build_expansion(ps, pick_order(1.0 - z, tol), tol);
    return eval_continued(ex, z);
}

EvalResult eval_via_zb(const ParameterSet& ps, double z, double tol) {
    if (!(z > 0.0 && z < 1.0))
        throw DomainError("zero-balanced evaluation needs z in (0, 1)");
    ZeroBalancedExpansion ex =
        build_zero_balanced(ps, pick_order(1.0 - z, tol), tol);
    return eval_zero_balanced(ex, z);
}

} // namespace

double gamma_prefactor(const ParameterSet& ps) {
    SignedLog g;
    for (double x : ps.a) g.mul_gamma(x);
    for (double y : ps.b) g.div_gamma(y);
    return g.value();
}

std::string rep_name(BRep rep) {
    switch (rep) {
    case BRep::a_series: return "a_series";
    case BRep::a_series_alt: return "a_series_alt";
    case BRep::closed_form: return "closed_form";
    case BRep::descent: return "descent";
    case BRep::split: return "split";
    }
    return "?";
}

BRep rep_from_name(const std::string& name) {
    if (name == "a_series") return BRep::a_series;
    if (name == "a_series_alt") return BRep::a_series_alt;
    if (name == "closed_form") return BRep::closed_form;
    if (name == "descent") return BRep::descent;
    if (name == "split") return BRep::split;
    throw DomainError("unknown representation '" + name +
                      "' (expected a_series, a_series_alt, closed_form, "
                      "descent or split)");
}

std::vector<BRep> applicable_reps(const ParameterSet& ps) {
    switch (ps.p()) {
    case 1: return {BRep::a_series};
    case 2: return {BRep::a_series, BRep::closed_form, BRep::descent};
    case 3:
        return {BRep::a_series, BRep::a_series_alt, BRep::descent, BRep::split};
    case 4: return {BRep::a_series, BRep::a_series_alt, BRep::descent};
    default: return {BRep::a_series, BRep::descent};
    }
}

BValue constant_B(const ParameterSet& ps, BRep rep) {
    BalanceInfo bal = balance(ps);
    if (!(bal.is_integer && bal.integer_value == 0))
        throw DomainError("the constant is defined for zero balance only");
    for (std::size_t j = 2; j < ps.a.size(); ++j)
        if (!(ps.a[j] > 0.0))
            throw ConvergenceCondition(
                "the constant's series need every a_j > 0 from the third "
                "numerator parameter on");
    switch (rep) {
    case BRep::a_series: return b_via_a_series(ps);
    case BRep::closed_form:
        if (ps.p() != 2)
            throw RepresentationInapplicable(
                "the single-sum closed form exists for p = 2 only");
        return b_via_closed_form(ps);
    case BRep::a_series_alt:
        return b_via_alt(ps);
    case BRep::descent:
        if (ps.p() < 2)
            throw RepresentationInapplicable("the descent route needs p >= 2");
        return b_via_descent(ps);
    case BRep::split:
        if (ps.p() != 3)
            throw RepresentationInapplicable(
                "the two-series split exists for p = 3 only");
        return b_via_split(ps);
    }
    throw DomainError("unknown representation");
}

double constant_L(const ParameterSet& ps, BRep rep) {
    return 2.0 * digamma(1.0) - digamma(ps.a[0]) - digamma(ps.a[1]) +
           constant_B(ps, rep).value;
}

ContinuationExpansion build_expansion(const ParameterSet& ps, long N,
                                      double tol) {
    BalanceInfo bal = balance(ps);
    if (bal.is_integer)
        throw IntegerExponent(
            "the two-exponent expansion requires non-integer balance");
    if (ps.p() < 2)
        throw DomainError(
            "the expansion machinery covers p in [2,6]; p = 1 has its own "
            "connection formula");
    if (N < 0 || N > 240)
        throw DomainError("truncation order out of range [0, 240]");
    for (std::size_t j = 2; j < ps.a.size(); ++j)
        if (!(ps.a[j] > 0.0))
            throw ConvergenceCondition(
                "expansion coefficients converge only when every a_j > 0 from "
                "the third numerator parameter on");

    ContinuationExpansion ex{ps, bal.s, N, tol, {}, {}, {}};
    ex.g0.resize(N + 1);
    ex.gs.resize(N + 1);
    ex.g0_err.resize(N + 1);
    std::vector<dd> tab = a_table(ps, kTableK);
    for (long n = 0; n <= N; ++n) {
        Valued v = g_n_zero(ps, tab, n);
        ex.g0[n] = v.value;
        ex.g0_err[n] = v.abs_err;
        ex.gs[n] = g_n_s(ps, tab, n);
    }
    return ex;
}

EvalResult eval_continued(const ContinuationExpansion& ex, double z) {
    if (!(z > 0.0 && z < 1.0))
        throw DomainError("continuation evaluation needs z in (0, 1)");
    double x = 1.0 - z;
    long N = ex.N;
    double p0 = 0.0, p1 = 0.0;
    for (long n = N; n >= 0; --n) p0 = p0 * x + ex.g0[n];
    for (long n = N; n >= 0; --n) p1 = p1 * x + ex.gs[n];
    double xs = std::pow(x, ex.s);
    double val = p0 + xs * p1;

    double xN = std::pow(x, double(N));
    double last = (std::abs(ex.g0[N]) + xs * std::abs(ex.gs[N])) * xN;
    if (last > ex.tol * std::max(1.0, std::abs(val)))
        throw TruncationInsufficient(
            "kept orders cannot reach the requested tolerance at this z");
    double trunc = last * x / std::max(1.0 - x, 0.25);
    double cerr = 0.0, xn = 1.0;
    for (long n = 0; n <= N; ++n) {
        cerr += ex.g0_err[n] * xn;
        xn *= x;
    }
    double pf = gamma_prefactor(ex.params);
    return {val / pf, (trunc + cerr) / std::abs(pf), N + 1,
            Method::continuation};
}

ZeroBalancedExpansion build_zero_balanced(const ParameterSet& ps, long N,
                                          double tol) {
    BalanceInfo bal = balance(ps);
    if (!(bal.is_integer && bal.integer_value == 0))
        throw DomainError("the logarithmic expansion requires balance exactly "
                          "zero");
    if (N < 0 || N > 240)
        throw DomainError("truncation order out of range [0, 240]");
    const auto& a = ps.a;
    for (std::size_t j = 2; j < a.size(); ++j)
        if (!(a[j] > 0.0))
            throw ConvergenceCondition(
                "expansion coefficients converge only when every a_j > 0 from "
                "the third numerator parameter on");

    ZeroBalancedExpansion ex{ps, N, tol, {}, {}, {}};
    ex.analytic.resize(N + 1);
    ex.logpart.resize(N + 1);
    ex.analytic_err.resize(N + 1);
    std::vector<dd> tab = a_table(ps, kTableK);
    long tabK = long(tab.size()) - 1;

    for (long n = 0; n <= N; ++n) {
        // W_n = (a1)_n (a2)_n / n!^2 in log space; all factors positive
        double lw = ln_gamma(a[0] + n) - ln_gamma(a[0]) + ln_gamma(a[1] + n) -
                    ln_gamma(a[1]) - 2.0 * ln_gamma(double(n + 1));
        double W = gamma_sign(a[0] + n) * gamma_sign(a[0]) *
                   gamma_sign(a[1] + n) * gamma_sign(a[1]) * std::exp(lw);
        double psi_n = digamma(double(1 + n)) - digamma(a[0] + n) -
                       digamma(a[1] + n);
        dd lp(0.0), fin(0.0), t(1.0);
        for (long k = 0; k <= n; ++k) {
            lp += t * tab[k];
            fin += t * tab[k] * dd(digamma(double(1 + n - k)) + psi_n);
            guard_div(a[0] + k);
            guard_div(a[1] + k);
            t *= dd(double(-n + k)) / (dd(a[0] + k) * dd(a[1] + k));
        }

        // remainder of the coefficient series, k >= n+1
        std::vector<dd> terms(tabK + 1, dd(0.0));
        dd u = dd(1.0) / (poch_dd(a[0], n + 1) * poch_dd(a[1], n + 1));
        for (long k = n + 1; k <= tabK; ++k) {
            terms[k] = u * tab[k];
            u *= dd(double(k - n)) / (dd(a[0] + k) * dd(a[1] + k));
        }
        dd inf(0.0);
        double ierr = 0.0;
        if (ps.p() >= 2 && n <= 5) {
            TailSum ts =
                sum_with_tail(terms, b_families(ps, 1.0 + double(n)),
                              tail_preset_dd());
            inf = ts.value;
            ierr = ts.abs_err;
        } else if (ps.p() >= 2) {
            // decay k^-(1+n+min a_j): plain truncation of the table suffices
            for (const dd& v : terms) inf += v;
            double cut = std::abs(double(terms[tabK])) * double(tabK) /
                         std::max(1.0, double(n));
            ierr = 2.0 * cut;
        }
        double nfac = std::exp(ln_gamma(double(n + 1)));
        double sgn = (n % 2) ? -1.0 : 1.0;
        ex.analytic[n] = W * (double(fin) + sgn * nfac * double(inf));
        ex.analytic_err[n] = std::abs(W) * nfac * ierr;
        ex.logpart[n] = W * double(lp);
    }
    return ex;
}

EvalResult eval_zero_balanced(const ZeroBalancedExpansion& ex, double z) {
    if (!(z > 0.0 && z < 1.0))
        throw DomainError("zero-balanced evaluation needs z in (0, 1)");
    double x = 1.0 - z;
    double lx = std::log(x);
    long N = ex.N;
    double val = 0.0;
    for (long n = N; n >= 0; --n)
        val = val * x + (ex.analytic[n] - lx * ex.logpart[n]);

    double xN = std::pow(x, double(N));
    double last =
        (std::abs(ex.analytic[N]) + std::abs(lx * ex.logpart[N])) * xN;
    if (last > ex.tol * std::max(1.0, std::abs(val)))
        throw TruncationInsufficient(
            "kept orders cannot reach the requested tolerance at this z");
    double trunc = last * x / std::max(1.0 - x, 0.25);
    double cerr = 0.0, xn = 1.0;
    for (long n = 0; n <= N; ++n) {
        cerr += ex.analytic_err[n] * xn;
        xn *= x;
    }
    double pf = gamma_prefactor(ex.params);
    return {val / pf, (trunc + cerr) / std::abs(pf), N + 1,
            Method::zero_balanced};
}

EvalResult evaluate(const ParameterSet& ps, double z, double tol,
                    long max_terms, MethodChoice how,
                    std::vector<std::string>* warnings) {
    BalanceInfo bal = balance(ps);
    switch (how) {
    case MethodChoice::direct:
        return eval_direct(ps, z, tol, max_terms);
    case MethodChoice::continuation:
        if (bal.is_integer) {
            if (bal.integer_value == 0)
                throw IntegerExponent(
                    "zero balance has a logarithmic expansion; use the "
                    "zero-balanced method");
            throw NotImplementedIntegerS(
                "analytic continuation at nonzero integer balance is not "
                "implemented; the direct series remains available for |z| < 1");
        }
        if (ps.p() == 1) return continue_2f1(ps.a[0], ps.a[1], ps.b[0], z, tol);
        return eval_via_expansion(ps, z, tol);
    case MethodChoice::zero_balanced:
        if (!(bal.is_integer && bal.integer_value == 0))
            throw DomainError(
                "the zero-balanced expansion requires balance exactly zero");
        return eval_via_zb(ps, z, tol);
    case MethodChoice::automatic:
        break;
    }

    if (is_terminating(ps) || std::abs(z) <= 0.5 || z <= -0.5 || z >= 1.0)
        return eval_direct(ps, z, tol, max_terms);
    // z in (0.5, 1)
    if (bal.is_integer && bal.integer_value != 0) {
        if (warnings)
            warnings->push_back(
                "nonzero integer balance: analytic continuation unavailable, "
                "using the direct series");
        return eval_direct(ps, z, tol, max_terms);
    }
    try {
        if (!bal.is_integer) {
            if (ps.p() == 1)
                return continue_2f1(ps.a[0], ps.a[1], ps.b[0], z, tol);
            return eval_via_expansion(ps, z, tol);
        }
        return eval_via_zb(ps, z, tol);
    } catch (const ConvergenceCondition&) {
        if (warnings)
            warnings->push_back(
                "expansion coefficients do not converge for these parameters: "
                "falling back to the direct series");
        return eval_direct(ps, z, tol, max_terms);
    }
}

} // namespace hypu
