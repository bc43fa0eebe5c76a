#pragma once
#include <vector>

#include "hypu/dd.hpp"

namespace hypu {

// Window configuration for algebraic-tail completion. A series whose terms
// behave like sums of k^(-e) ladders is summed as: explicit head below n0,
// then a weighted least-squares fit of the terms on k in [n0, K] against the
// ladder exponents, then the fitted amplitudes times Hurwitz zeta values for
// everything at and beyond n0.
struct TailPreset {
    long K;          // last explicit term index (window end)
    long n0;         // head length / window start
    int row_step;    // fit every row_step-th term in the window
    int ncorr;       // correction rungs kept per exponent family
    double cap;      // keep exponents e <= min(families) + cap
    double merge;    // drop a column closer than this to its neighbor
};

// Preset for compensated-accuracy term data (recurrence-built tables).
TailPreset tail_preset_dd();

// Preset for binary64-accuracy term data (quadrature-built tables). The
// deep-correction basis above amplifies data noise by many orders of
// magnitude, so binary64 data gets a lean basis on a wide-log-span window.
TailPreset tail_preset_f64();

struct TailSum {
    dd value;
    double abs_err;     // refit-difference estimate (two half-independent fits)
    long terms_used;
};

// terms[k], k = 0..K inclusive (terms.size() > preset.K required).
// families: exponent ladder bases, all > 1.
TailSum sum_with_tail(const std::vector<dd>& terms,
                      const std::vector<double>& families,
                      const TailPreset& preset);

} // namespace hypu
