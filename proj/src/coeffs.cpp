#include "hypu/coeffs.hpp"

#include <algorithm>
#include <cmath>

#include "hypu/compensated.hpp"
#include "hypu/errors.hpp"
#include "hypu/gamma.hpp"
#include "hypu/quad.hpp"

namespace hypu {

namespace {

// T_j = b_j + ... + b_p - (a_{j+1} + ... + a_{p+1}), j 1-based in 2..p+1.
// These are the ladder bases of the coefficient asymptotics.
double tval(const ParameterSet& ps, int j) {
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

// terminating 3F2(n1, n2, -m; d1, d2; 1)
dd f32_term(double n1, double n2, long m, double d1, double d2) {
    dd tot(0.0), t(1.0);
    for (long j = 0; j <= m; ++j) {
        tot += t;
        guard_div(d1 + j);
        guard_div(d2 + j);
        t *= dd(n1 + j) * dd(n2 + j) * dd(double(-m + j)) /
             (dd(d1 + j) * dd(d2 + j) * dd(double(1 + j)));
    }
    return tot;
}

// terminating qFp(nums, -m; dens; 1) with the -m folded into nums by caller
dd fterm(const std::vector<double>& nums, const std::vector<double>& dens,
         long m) {
    dd tot(0.0), t(1.0);
    for (long j = 0; j <= m; ++j) {
        tot += t;
        dd r(1.0);
        for (double x : nums) r *= dd(x + j);
        for (double y : dens) {
            guard_div(y + j);
            r /= dd(y + j);
        }
        t *= r / dd(double(1 + j));
    }
    return tot;
}

dd poch_dd(double x, long n) {
    dd r(1.0);
    for (long i = 0; i < n; ++i) r *= dd(x + i);
    return r;
}

dd fact_dd(long n) {
    dd r(1.0);
    for (long i = 2; i <= n; ++i) r *= dd(double(i));
    return r;
}

// nested-sum closed form, innermost levels; i walks 1..p-2
dd a_general_inner(const ParameterSet& ps, int i, long ki) {
    int p = ps.p();
    if (i > p - 2) return dd(1.0);
    const auto& a = ps.a;
    const auto& b = ps.b;
    double ti1 = tval(ps, i + 1);
    double ti2 = tval(ps, i + 2);
    double u = b[i] - a[i + 2];
    double w = 1.0 + a[i + 1] - b[i - 1];
    dd tot(0.0), t(1.0);
    for (long kn = 0; kn <= ki; ++kn) {
        tot += t * a_general_inner(ps, i + 1, kn);
        guard_div(ti1 + kn);
        guard_div(w - ki + kn);
        t *= dd(double(-ki + kn)) * dd(ti2 + kn) * dd(u + kn) /
             (dd(ti1 + kn) * dd(w - ki + kn) * dd(double(1 + kn)));
    }
    return tot;
}

} // namespace

std::vector<dd> a_table(const ParameterSet& ps, long K) {
    int p = ps.p();
    std::vector<dd> out(K + 1, dd(0.0));
    out[0] = dd(1.0);
    if (p == 1) return out;

    const auto& a = ps.a;
    const auto& b = ps.b;
    std::vector<dd> N(K + 1, dd(1.0));
    for (int i = p - 2; i >= 1; --i) {
        double ti1 = tval(ps, i + 1);
        double ti2 = tval(ps, i + 2);
        double u = b[i] - a[i + 2];
        double w = 1.0 + a[i + 1] - b[i - 1];
        std::vector<dd> nn(K + 1);
        for (long ki = 0; ki <= K; ++ki) {
            dd tot(0.0), t(1.0);
            for (long kn = 0; kn <= ki; ++kn) {
                tot += t * N[kn];
                guard_div(ti1 + kn);
                guard_div(w - ki + kn);
                t *= dd(double(-ki + kn)) * dd(ti2 + kn) * dd(u + kn) /
                     (dd(ti1 + kn) * dd(w - ki + kn) * dd(double(1 + kn)));
            }
            nn[ki] = tot;
        }
        N.swap(nn);
    }
    double t2 = tval(ps, 2);
    double v = b[0] - a[2];
    dd t(1.0);
    for (long k = 0; k <= K; ++k) {
        out[k] = t * N[k];
        t *= dd(t2 + k) * dd(v + k) / dd(double(1 + k));
    }
    return out;
}

double a_coeff(const ParameterSet& ps, long k) {
    int p = ps.p();
    const auto& a = ps.a;
    const auto& b = ps.b;
    if (p == 1) return k == 0 ? 1.0 : 0.0;
    if (p == 2)
        return double(poch_dd(b[1] - a[2], k) * poch_dd(b[0] - a[2], k) /
                      fact_dd(k));
    if (p == 3) {
        dd pre = poch_dd(b[2] + b[1] - a[3] - a[2], k) *
                 poch_dd(b[0] - a[2], k) / fact_dd(k);
        return double(pre * f32_term(b[2] - a[3], b[1] - a[3], k,
                                     b[2] + b[1] - a[3] - a[2],
                                     1.0 + a[2] - b[0] - k));
    }
    if (p == 4) {
        double big = b[3] + b[2] + b[1] - a[4] - a[3] - a[2];
        dd tot(0.0), t(1.0);
        for (long l = 0; l <= k; ++l) {
            tot += t * f32_term(b[3] - a[4], b[2] - a[4], l,
                                b[3] + b[2] - a[4] - a[3],
                                1.0 + a[3] - b[1] - l);
            guard_div(big + l);
            guard_div(1.0 + a[2] - b[0] - k + l);
            t *= dd(b[3] + b[2] - a[4] - a[3] + l) * dd(b[1] - a[3] + l) *
                 dd(double(-k + l)) /
                 (dd(big + l) * dd(1.0 + a[2] - b[0] - k + l) *
                  dd(double(1 + l)));
        }
        dd pre = poch_dd(big, k) * poch_dd(b[0] - a[2], k) / fact_dd(k);
        return double(pre * tot);
    }
    dd pre = poch_dd(tval(ps, 2), k) * poch_dd(b[0] - a[2], k) / fact_dd(k);
    return double(pre * a_general_inner(ps, 1, k));
}

double a_coeff_alt(const ParameterSet& ps, long k) {
    int p = ps.p();
    const auto& a = ps.a;
    const auto& b = ps.b;
    if (p == 3) {
        double c1 = b[0] + b[2] - a[2] - a[3];
        double c2 = b[1] + b[2] - a[2] - a[3];
        dd pre = poch_dd(c1, k) * poch_dd(c2, k) / fact_dd(k);
        return double(pre * f32_term(b[2] - a[2], b[2] - a[3], k, c1, c2));
    }
    if (p == 4) {
        double c1 = b[0] + b[2] + b[3] - a[2] - a[3] - a[4];
        double c2 = b[1] + b[2] + b[3] - a[2] - a[3] - a[4];
        double d1 = b[2] + b[3] - a[2] - a[4];
        double d2 = b[2] + b[3] - a[3] - a[4];
        dd tot(0.0), t(1.0);
        for (long l = 0; l <= k; ++l) {
            tot += t * f32_term(b[2] - a[4], b[3] - a[4], l, d1, d2);
            guard_div(c1 + l);
            guard_div(c2 + l);
            t *= dd(d1 + l) * dd(d2 + l) * dd(double(-k + l)) /
                 (dd(c1 + l) * dd(c2 + l) * dd(double(1 + l)));
        }
        dd pre = poch_dd(c1, k) * poch_dd(c2, k) / fact_dd(k);
        return double(pre * tot);
    }
    throw RepresentationInapplicable(
        "the rearranged coefficient form exists for p = 3 and p = 4 only");
}

void alt_prefactor(const ParameterSet& ps, double& c1, double& c2) {
    const auto& a = ps.a;
    const auto& b = ps.b;
    if (ps.p() == 3) {
        c1 = b[0] + b[2] - a[2] - a[3];
        c2 = b[1] + b[2] - a[2] - a[3];
        return;
    }
    if (ps.p() == 4) {
        c1 = b[0] + b[2] + b[3] - a[2] - a[3] - a[4];
        c2 = b[1] + b[2] + b[3] - a[2] - a[3] - a[4];
        return;
    }
    throw RepresentationInapplicable(
        "the rearranged coefficient form exists for p = 3 and p = 4 only");
}

namespace {

void require_positive(double v, const char* what) {
    if (!(v > 0.0))
        throw RepresentationInapplicable(
            std::string("integral form needs ") + what + " > 0");
}

// E_k = sum w q^k over a product grid, 8 compensated lanes for speed
std::vector<double> moment_walk(std::vector<double>& q,
                                const std::vector<double>& base, long K) {
    std::size_t n = q.size();
    std::vector<double> E(K + 1);
    for (long k = 0; k <= K; ++k) {
        double s[8] = {0}, c[8] = {0};
        std::size_t i = 0;
        for (; i + 8 <= n; i += 8) {
            for (int l = 0; l < 8; ++l) {
                double x = q[i + l];
                double t = s[l] + x;
                c[l] += std::abs(s[l]) >= std::abs(x) ? (s[l] - t) + x
                                                      : (x - t) + s[l];
                s[l] = t;
            }
        }
        for (; i < n; ++i) {
            double x = q[i];
            double t = s[0] + x;
            c[0] += std::abs(s[0]) >= std::abs(x) ? (s[0] - t) + x
                                                  : (x - t) + s[0];
            s[0] = t;
        }
        CompensatedSum tot;
        for (int l = 0; l < 8; ++l) {
            tot.add(s[l]);
            tot.add(c[l]);
        }
        E[k] = tot.value();
        if (k < K)
            for (std::size_t j = 0; j < n; ++j) q[j] *= base[j];
    }
    return E;
}

} // namespace

std::vector<double> alt_moments(const ParameterSet& ps, long K, int n_axis) {
    const auto& a = ps.a;
    const auto& b = ps.b;
    if (ps.p() == 3) {
        double u1 = b[2] - a[2], u2 = b[2] - a[3];
        double c1, c2;
        alt_prefactor(ps, c1, c2);
        require_positive(u1, "b3-a3");
        require_positive(u2, "b3-a4");
        require_positive(c1 - u1, "b1-a4");
        require_positive(c2 - u2, "b2-a4");
        int n = n_axis > 0 ? n_axis : int(std::max<long>(48, (K + 2) / 2 + 8));
        QuadRule rx = beta_rule(u1, c1 - u1, n);
        QuadRule ry = beta_rule(u2, c2 - u2, n);
        std::vector<double> base(std::size_t(n) * n), q(std::size_t(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                base[std::size_t(i) * n + j] = 1.0 - rx.nodes[i] * ry.nodes[j];
                q[std::size_t(i) * n + j] = rx.weights[i] * ry.weights[j];
            }
        return moment_walk(q, base, K);
    }
    if (ps.p() == 4) {
        double C1, C2;
        alt_prefactor(ps, C1, C2);
        double e1 = b[2] + b[3] - a[2] - a[4], e2 = b[2] + b[3] - a[3] - a[4];
        double u1 = b[2] - a[4], u2 = b[3] - a[4];
        require_positive(u1, "b3-a5");
        require_positive(u2, "b4-a5");
        require_positive(e1 - u1, "b4-a3");
        require_positive(e2 - u2, "b3-a4");
        require_positive(C1 - e1, "b1-a4");
        require_positive(C2 - e2, "b2-a3");
        // three axes make per-axis exactness unaffordable, but convergence is
        // superalgebraic: n = 96 already sits at the binary64 noise floor for
        // k <= 900 (vs n = 192), so 128 carries real margin
        int n = n_axis > 0 ? n_axis : 128;

        // inner pair: 1-D rule for xi = 1 - u*v by discrete Stieltjes on the
        // exact 2-D grid; its inner products are polynomial in (u, v) so the
        // grid integrates them exactly up to xi-degree 2n-3
        QuadRule ru = beta_rule(u1, e1 - u1, n);
        QuadRule rv = beta_rule(u2, e2 - u2, n);
        std::size_t m = std::size_t(n) * n;
        std::vector<double> xi(m), w(m);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                xi[std::size_t(i) * n + j] = 1.0 - ru.nodes[i] * rv.nodes[j];
                w[std::size_t(i) * n + j] = ru.weights[i] * rv.weights[j];
            }
        int nxi = n - 1;
        std::vector<double> diag(nxi), off(nxi > 1 ? nxi - 1 : 0);
        std::vector<double> pprev(m, 0.0), pcur(m, 1.0);
        double bprev = 0.0;
        for (int j = 0; j < nxi; ++j) {
            CompensatedSum al;
            for (std::size_t i = 0; i < m; ++i)
                al.add(w[i] * xi[i] * pcur[i] * pcur[i]);
            diag[j] = al.value();
            if (j == nxi - 1) break;
            double rb = std::sqrt(bprev);
            CompensatedSum nrm;
            for (std::size_t i = 0; i < m; ++i) {
                double pn = (xi[i] - diag[j]) * pcur[i] - rb * pprev[i];
                pprev[i] = pcur[i];
                pcur[i] = pn;
                nrm.add(pn * pn * w[i]);
            }
            double b2 = nrm.value();
            if (!(b2 > 0.0))
                throw NoConvergence("discrete Stieltjes lost positivity");
            off[j] = std::sqrt(b2);
            bprev = b2;
            double inv = 1.0 / off[j];
            for (std::size_t i = 0; i < m; ++i) pcur[i] *= inv;
        }
        QuadRule rxi = rule_from_recurrence(diag, off, 1.0);

        QuadRule rx = beta_rule(e1, C1 - e1, n);
        QuadRule ry = beta_rule(e2, C2 - e2, n);
        std::size_t total = std::size_t(n) * n * nxi;
        std::vector<double> base(total), q(total);
        std::size_t idx = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double xy = rx.nodes[i] * ry.nodes[j];
                double wxy = rx.weights[i] * ry.weights[j];
                for (int l = 0; l < nxi; ++l, ++idx) {
                    base[idx] = 1.0 - xy * rxi.nodes[l];
                    q[idx] = wxy * rxi.weights[l];
                }
            }
        return moment_walk(q, base, K);
    }
    throw RepresentationInapplicable(
        "the rearranged coefficient form exists for p = 3 and p = 4 only");
}

Valued g_n_zero(const ParameterSet& ps, const std::vector<dd>& tab, long n) {
    BalanceInfo bal = balance(ps);
    if (bal.is_integer)
        throw IntegerExponent("g_n(0) requires non-integer balance");
    double s = bal.s;
    const auto& a = ps.a;

    SignedLog pref;
    pref.mul_gamma(a[0] + n);
    pref.mul_gamma(a[1] + n);
    pref.mul_gamma(s - n);
    pref.div_gamma(a[0] + s);
    pref.div_gamma(a[1] + s);
    pref.ln -= ln_gamma(double(n + 1));
    if (n % 2) pref.sign = -pref.sign;
    double pf = pref.value();

    long tabK = long(tab.size()) - 1;
    std::vector<dd> terms(tab.size());
    dd u(1.0);
    for (long k = 0; k <= tabK; ++k) {
        terms[k] = u * tab[k];
        guard_div(a[0] + s + k);
        guard_div(a[1] + s + k);
        u *= dd(s - n + k) / (dd(a[0] + s + k) * dd(a[1] + s + k));
    }

    if (ps.p() >= 2 && n <= 5) {
        std::vector<double> fams;
        for (std::size_t j = 2; j < a.size(); ++j) fams.push_back(1.0 + n + a[j]);
        TailPreset pre = tail_preset_dd();
        pre.K = std::min<long>(pre.K, tabK);
        pre.n0 = (2 * pre.K) / 5;
        TailSum ts = sum_with_tail(terms, fams, pre);
        return {pf * double(ts.value), std::abs(pf) * ts.abs_err};
    }
    // decay k^-(1+n+min a_j) makes plain truncation of the table enough
    dd tot(0.0);
    for (long k = 0; k <= tabK; ++k) tot += terms[k];
    double cut = std::abs(double(terms[tabK])) * double(tabK) /
                 std::max(1.0, double(n));
    return {pf * double(tot), std::abs(pf) * 2.0 * cut};
}

double g_n_s(const ParameterSet& ps, const std::vector<dd>& tab, long n) {
    BalanceInfo bal = balance(ps);
    if (bal.is_integer)
        throw IntegerExponent("g_n(s) requires non-integer balance");
    double s = bal.s;
    const auto& a = ps.a;
    if (long(tab.size()) <= n)
        throw DomainError("coefficient table shorter than n");

    SignedLog pref;
    pref.mul_gamma(a[0] + s + n);
    pref.mul_gamma(a[1] + s + n);
    pref.mul_gamma(-s - n);
    pref.div_gamma(a[0] + s);
    pref.div_gamma(a[1] + s);
    pref.ln -= ln_gamma(double(n + 1));
    if (n % 2) pref.sign = -pref.sign;

    dd tot(0.0), t(1.0);
    for (long k = 0; k <= n; ++k) {
        tot += t * tab[k];
        guard_div(a[0] + s + k);
        guard_div(a[1] + s + k);
        t *= dd(double(-n + k)) / (dd(a[0] + s + k) * dd(a[1] + s + k));
    }
    return pref.value() * double(tot);
}

double g_n_limit(const ParameterSet& ps, long n) {
    BalanceInfo bal = balance(ps);
    if (bal.is_integer)
        throw IntegerExponent("the limit route requires non-integer balance");
    double s = bal.s;
    const auto& a = ps.a;
    const auto& b = ps.b;

    const long schedule[4] = {64, 128, 256, 512};
    double F[4];
    for (int i = 0; i < 4; ++i) {
        long m = schedule[i];
        CompensatedSum tot;
        double t = 1.0;
        for (long j = 0; j <= m; ++j) {
            tot.add(t);
            double r = double(-m + j);
            for (double x : a) r *= x + n + j;
            for (double y : b) {
                guard_div(y + n + j);
                r /= y + n + j;
            }
            guard_div(1.0 - s + n - m + j);
            t *= r / ((1.0 - s + n - m + j) * (1.0 + j));
        }
        F[i] = tot.value();
    }
    // Richardson in 1/m over the doubling schedule
    for (int j = 1; j < 4; ++j)
        for (int i = 3; i >= j; --i)
            F[i] = F[i] + (F[i] - F[i - 1]) / (std::pow(2.0, j) - 1.0);

    SignedLog pref;
    for (double x : a) pref.mul_gamma(x + n);
    for (double y : b) pref.div_gamma(y + n);
    pref.ln -= ln_gamma(double(n + 1));
    if (n % 2) pref.sign = -pref.sign;
    return pref.value() * F[3];
}

Valued unit_sum_coeff_route(const ParameterSet& ps,
                            const std::vector<dd>& tab) {
    BalanceInfo bal = balance(ps);
    double s = bal.s;
    if (!(s > 0.0))
        throw DomainError("unit-argument sum requires positive balance");
    const auto& a = ps.a;

    SignedLog pref;
    pref.mul_gamma(a[0]);
    pref.mul_gamma(a[1]);
    pref.mul_gamma(s);
    pref.div_gamma(a[0] + s);
    pref.div_gamma(a[1] + s);
    double pf = pref.value();

    long tabK = long(tab.size()) - 1;
    std::vector<dd> terms(tab.size());
    dd t(1.0);
    for (long k = 0; k <= tabK; ++k) {
        terms[k] = t * tab[k];
        guard_div(a[0] + s + k);
        guard_div(a[1] + s + k);
        t *= dd(s + k) / (dd(a[0] + s + k) * dd(a[1] + s + k));
    }
    if (ps.p() == 1) return {pf, 0.0};

    std::vector<double> fams;
    for (std::size_t j = 2; j < a.size(); ++j) fams.push_back(1.0 + a[j]);
    TailPreset pre = tail_preset_dd();
    pre.K = std::min<long>(pre.K, tabK);
    pre.n0 = (2 * pre.K) / 5;
    TailSum ts = sum_with_tail(terms, fams, pre);
    return {pf * double(ts.value), std::abs(pf) * ts.abs_err};
}

double transform_lhs(const ParameterSet& ps, long m) {
    double s = balance(ps).s;
    const auto& a = ps.a;
    const auto& b = ps.b;
    dd tot(0.0), t(1.0);
    for (long j = 0; j <= m; ++j) {
        tot += t;
        dd r(double(-m + j));
        for (double x : a) r *= dd(x + j);
        for (double y : b) {
            guard_div(y + j);
            r /= dd(y + j);
        }
        guard_div(1.0 - s - m + j);
        t *= r / (dd(1.0 - s - m + j) * dd(double(1 + j)));
    }
    double gprod = 0.0;
    for (double y : b) gprod += ln_gamma(y);
    return double(tot) * std::exp(-gprod);
}

double transform_rhs(const ParameterSet& ps, long m) {
    double s = balance(ps).s;
    const auto& a = ps.a;
    const auto& b = ps.b;
    int p = ps.p();
    if (p == 2) {
        double pre = pochhammer(a[0] + s, m) * pochhammer(a[1] + s, m) *
                     pochhammer(a[2], m) /
                     (pochhammer(s, m) * gamma(b[0] + m) * gamma(b[1] + m));
        dd f = fterm({b[0] - a[2], b[1] - a[2], s, double(-m)},
                     {a[0] + s, a[1] + s, 1.0 - a[2] - m}, m);
        return pre * double(f);
    }
    if (p == 3) {
        double c1 = b[0] + b[2] - a[2] - a[3];
        double c2 = b[1] + b[2] - a[2] - a[3];
        double pre = pochhammer(a[0] + s, m) * pochhammer(a[1] + s, m) *
                     pochhammer(a[2], m) * pochhammer(a[3], m) /
                     (pochhammer(s, m) * gamma(b[0] + m) * gamma(b[1] + m) *
                      gamma(b[2] + m));
        dd tot(0.0), t(1.0);
        for (long k = 0; k <= m; ++k) {
            dd inner = fterm({b[2] - a[2], b[2] - a[3],
                              a[0] + a[1] + s + m - 1.0, double(-k)},
                             {c1, c2, b[2] + m - k}, k);
            tot += t * inner;
            guard_div(c1 + k);
            guard_div(c2 + k);
            guard_div(1.0 - a[2] - m + k);
            guard_div(1.0 - a[3] - m + k);
            t *= dd(c1 + k) * dd(c2 + k) * dd(1.0 - b[2] - m + k) *
                 dd(s + k) * dd(double(-m + k)) /
                 (dd(a[0] + s + k) * dd(a[1] + s + k) *
                  dd(1.0 - a[2] - m + k) * dd(1.0 - a[3] - m + k) *
                  dd(double(1 + k)));
        }
        return pre * double(tot);
    }
    if (p == 4) {
        double c1 = b[0] + b[2] + b[3] - a[2] - a[3] - a[4];
        double c2 = b[1] + b[2] + b[3] - a[2] - a[3] - a[4];
        double d1 = b[2] + b[3] - a[2] - a[4];
        double d2 = b[2] + b[3] - a[3] - a[4];
        double pre = pochhammer(a[0] + s, m) * pochhammer(a[1] + s, m) *
                     pochhammer(a[2], m) * pochhammer(a[3], m) *
                     pochhammer(a[4], m) /
                     (pochhammer(s, m) * gamma(b[0] + m) * gamma(b[1] + m) *
                      gamma(b[2] + m) * gamma(b[3] + m));
        dd tot(0.0), t(1.0);
        for (long k = 0; k <= m; ++k) {
            dd inner(0.0), u(1.0);
            for (long l = 0; l <= k; ++l) {
                dd f43 = fterm({b[2] - a[4], b[3] - a[4],
                                b[2] + b[3] - a[2] - a[3] - a[4] - m + k,
                                double(-l)},
                               {d1, d2, 1.0 - a[4] - m + k - l}, l);
                inner += u * f43;
                guard_div(c1 + l);
                guard_div(c2 + l);
                guard_div(b[2] + m - k + l);
                guard_div(b[3] + m - k + l);
                u *= dd(d1 + l) * dd(d2 + l) * dd(a[4] + m - k + l) *
                     dd(a[0] + a[1] + s + m - 1.0 + l) * dd(double(-k + l)) /
                     (dd(c1 + l) * dd(c2 + l) * dd(b[2] + m - k + l) *
                      dd(b[3] + m - k + l) * dd(double(1 + l)));
            }
            tot += t * inner;
            guard_div(1.0 - a[2] - m + k);
            guard_div(1.0 - a[3] - m + k);
            guard_div(1.0 - a[4] - m + k);
            t *= dd(c1 + k) * dd(c2 + k) * dd(1.0 - b[2] - m + k) *
                 dd(1.0 - b[3] - m + k) * dd(s + k) * dd(double(-m + k)) /
                 (dd(a[0] + s + k) * dd(a[1] + s + k) *
                  dd(1.0 - a[2] - m + k) * dd(1.0 - a[3] - m + k) *
                  dd(1.0 - a[4] - m + k) * dd(double(1 + k)));
        }
        return pre * double(tot);
    }
    throw RepresentationInapplicable(
        "the rearranged terminating identity is implemented for p = 2, 3, 4");
}

} // namespace hypu
