#pragma once
#include "hypu/dd.hpp"

namespace hypu {

// Hurwitz zeta sum_{k>=N} k^(-e) for e > 1, N >= 1, via Euler-Maclaurin.
// The compensated overload holds ~1e-30 relative error for e in (1, 12];
// the binary64 one ~1e-15.
double hurwitz_zeta(double e, long N);
dd hurwitz_zeta(dd e, long N);

} // namespace hypu
