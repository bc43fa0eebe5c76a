#include "hypu/zeta.hpp"

#include <cmath>
#include <string>

#include "hypu/errors.hpp"

namespace hypu {

namespace {

// B_2, B_4, ..., B_16; binary64 constants suffice even in the compensated
// path because the Bernoulli correction is <= ~1e-4 of the total there.
const double BERN2[8] = {
    1.0 / 6.0,   -1.0 / 30.0,       1.0 / 42.0, -1.0 / 30.0,
    5.0 / 66.0,  -691.0 / 2730.0,   7.0 / 6.0,  -3617.0 / 510.0,
};

template <class T>
T pow_neg(T base, T e);   // base^(-e)

template <>
double pow_neg(double base, double e) { return std::pow(base, -e); }

template <>
dd pow_neg(dd base, dd e) { return dd_exp(-e * dd_log(base)); }

template <class T>
T zeta_impl(T e, long N, long lift) {
    if (double(e) <= 1.0)
        throw DomainError("hurwitz_zeta needs exponent > 1, got " +
                          std::to_string(double(e)));
    long Np = N < lift ? lift : N;
    T head(0.0);
    for (long k = N; k < Np; ++k) head += pow_neg(T(double(k)), e);

    T np{double(Np)};
    T x = pow_neg(np, e);                       // Np^(-e)
    T total = head + x * np / (e - T(1.0)) + x * T(0.5);

    T fac = e;                                  // (e)_{2j-1}
    T dfac(2.0);                                // (2j)!
    T pw = x / np;                              // Np^(-e-2j+1)
    T np2 = np * np;
    for (int j = 0; j < 8; ++j) {
        T term = T(BERN2[j]) * fac * pw / dfac;
        total += term;
        if (std::abs(double(term)) < 1e-33 * std::abs(double(total))) break;
        double tj = 2.0 * (j + 1);
        fac *= (e + T(tj - 1.0)) * (e + T(tj));
        dfac *= T((tj + 1.0) * (tj + 2.0));
        pw /= np2;
    }
    return total;
}

} // namespace

double hurwitz_zeta(double e, long N) { return zeta_impl<double>(e, N, 64); }
dd hurwitz_zeta(dd e, long N) { return zeta_impl<dd>(e, N, 256); }

} // namespace hypu
