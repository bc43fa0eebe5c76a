#include "hypu/tail.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hypu/errors.hpp"
#include "hypu/zeta.hpp"

namespace hypu {

namespace {

// Least squares via modified Gram-Schmidt QR in compensated arithmetic.
// Columns of M are consumed in place. Returns x minimizing ||Mx - b||.
std::vector<dd> lsq_mgs(std::vector<std::vector<dd>>& cols, std::vector<dd>& b) {
    int nc = int(cols.size());
    std::vector<std::vector<dd>> r(nc, std::vector<dd>(nc, dd(0.0)));
    for (int j = 0; j < nc; ++j) {
        for (int i = 0; i < j; ++i) {
            dd dot(0.0);
            for (std::size_t t = 0; t < cols[j].size(); ++t)
                dot += cols[i][t] * cols[j][t];
            r[i][j] = dot;
            for (std::size_t t = 0; t < cols[j].size(); ++t)
                cols[j][t] -= dot * cols[i][t];
        }
        dd nrm2(0.0);
        for (dd v : cols[j]) nrm2 += v * v;
        dd nrm = dd_sqrt(nrm2);
        if (nrm.hi <= 0.0)
            throw SingularDenominator("tail fit basis is numerically degenerate");
        r[j][j] = nrm;
        for (dd& v : cols[j]) v /= nrm;
    }
    // x = R^{-1} Q^T b
    std::vector<dd> x(nc, dd(0.0));
    for (int j = 0; j < nc; ++j) {
        dd dot(0.0);
        for (std::size_t t = 0; t < b.size(); ++t) dot += cols[j][t] * b[t];
        x[j] = dot;
    }
    for (int j = nc - 1; j >= 0; --j) {
        dd acc = x[j];
        for (int i = j + 1; i < nc; ++i) acc -= r[j][i] * x[i];
        x[j] = acc / r[j][j];
    }
    return x;
}

std::vector<double> ladder_exponents(const std::vector<double>& families,
                                     int ncorr, double cap, double merge) {
    double fmin = *std::min_element(families.begin(), families.end());
    std::vector<double> es;
    for (double f : families)
        for (int i = 0; i < ncorr; ++i)
            if (f + i <= fmin + cap + 1e-9) es.push_back(f + i);
    std::sort(es.begin(), es.end());
    std::vector<double> kept;
    for (double e : es)
        if (kept.empty() || e - kept.back() > merge) kept.push_back(e);
    return kept;
}

// One window fit; returns head + fitted-tail completion from n0 onward.
dd fit_window(const std::vector<dd>& terms, const std::vector<double>& es,
              long K, long n0, int step) {
    dd head(0.0);
    for (long k = 0; k < n0; ++k) head += terms[k];

    std::vector<long> rows;
    for (long k = n0; k <= K; k += step) rows.push_back(k);
    if (long(rows.size()) < long(es.size()) * 2)
        throw DomainError("tail window too short for basis of " +
                          std::to_string(es.size()) + " exponents");

    dd lmid = dd_log(dd(double((n0 + K) / 2)));
    std::vector<std::vector<dd>> cols(es.size(), std::vector<dd>(rows.size()));
    std::vector<dd> rhs(rows.size());
    std::vector<dd> lk(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        lk[r] = dd_log(dd(double(rows[r])));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        dd t = terms[rows[r]];
        if (t.hi == 0.0)
            throw SingularDenominator("zero term inside tail fit window");
        dd w = dd(1.0) / dd_abs(t);
        for (std::size_t c = 0; c < es.size(); ++c)
            cols[c][r] = dd_exp(dd(es[c]) * (lmid - lk[r])) * w;
        rhs[r] = t * w;   // +-1 by construction
    }
    std::vector<dd> sol = lsq_mgs(cols, rhs);

    dd out = head;
    for (std::size_t c = 0; c < es.size(); ++c)
        out += sol[c] * dd_exp(dd(es[c]) * lmid) * hurwitz_zeta(dd(es[c]), n0);
    return out;
}

} // namespace

TailPreset tail_preset_dd() { return {600, 240, 1, 8, 6.0, 1e-6}; }
TailPreset tail_preset_f64() { return {1800, 720, 1, 4, 3.5, 0.02}; }

TailSum sum_with_tail(const std::vector<dd>& terms,
                      const std::vector<double>& families,
                      const TailPreset& preset) {
    if (long(terms.size()) <= preset.K)
        throw DomainError("tail completion needs terms through k=K");
    for (double f : families)
        if (f <= 1.0 + 1e-9)
            throw ConvergenceCondition(
                "tail exponent family " + std::to_string(f) +
                " does not give a convergent series");

    long K = preset.K, n0 = preset.n0;

    // When the window terms are already negligible against the head, the
    // remaining tail is far below target accuracy: sum everything literally.
    dd head(0.0);
    for (long k = 0; k < n0; ++k) head += terms[k];
    double wmax = 0.0;
    for (long k = n0; k <= K; ++k)
        wmax = std::max(wmax, std::abs(double(terms[k])));
    if (wmax < 4e-17 * std::abs(double(head))) {
        dd all = head;
        for (long k = n0; k <= K; ++k) all += terms[k];
        double bound = std::abs(double(terms[K])) * double(K) * 5.0;
        return {all, bound, K + 1};
    }

    std::vector<double> es =
        ladder_exponents(families, preset.ncorr, preset.cap, preset.merge);
    dd v1 = fit_window(terms, es, K, n0, preset.row_step);

    // Error estimate: refit on a shifted window with a shallower basis; the
    // difference tracks both model error and noise amplification.
    long n0b = std::lround(0.55 * double(K));
    std::vector<double> es2 = ladder_exponents(
        families, std::max(2, preset.ncorr - 1), preset.cap - 1.0, preset.merge);
    dd v2 = fit_window(terms, es2, K, n0b, preset.row_step);

    double err = 2.0 * std::abs(double(v1 - v2)) +
                 4e-16 * std::abs(double(v1));
    return {v1, err, K + 1};
}

} // namespace hypu
