#pragma once
#include <string>
#include <vector>

#include "hypu/params.hpp"
#include "hypu/series.hpp"

namespace hypu {

// Two-exponent expansion of P*F about z = 1 for non-integer balance s,
// P = prod Gamma(a)/prod Gamma(b), x = 1-z:
//   P*F = sum_{n<=N} g0[n] x^n  +  x^s sum_{n<=N} gs[n] x^n.
// Arrays hold N+1 entries (orders 0..N).
struct ContinuationExpansion {
    ParameterSet params;
    double s;
    long N;
    double tol;
    std::vector<double> g0, gs;
    std::vector<double> g0_err;   // absolute error estimates of g0 entries
};

// p in [2,6], s non-integer (IntegerExponent otherwise); requires a_j > 0
// for j >= 3 (1-based) so the coefficient series converge
// (ConvergenceCondition otherwise).
ContinuationExpansion build_expansion(const ParameterSet& params, long N = 12,
                                      double tol = 1e-12);

// Assemble the expansion at z in (0,1) and divide out the prefactor, so the
// value is the bare F. Throws TruncationInsufficient when the last retained
// order contributes more than the built tolerance.
EvalResult eval_continued(const ContinuationExpansion& ex, double z);

// Zero-balanced expansion about z = 1 (s = 0), x = 1-z:
//   P*F = sum_{n<=N} (analytic[n] - logpart[n] log x) x^n,
// normalized so logpart[0] = 1 and analytic[0] = L(p).
struct ZeroBalancedExpansion {
    ParameterSet params;
    long N;
    double tol;
    std::vector<double> analytic, logpart;
    std::vector<double> analytic_err;
};

ZeroBalancedExpansion build_zero_balanced(const ParameterSet& params,
                                          long N = 12, double tol = 1e-12);

EvalResult eval_zero_balanced(const ZeroBalancedExpansion& ex, double z);

// Routes to the constant B(p) (the series part of L(p)). Named by how they
// compute, not what they cite:
//   a_series      coefficient series over the recurrence-built A table
//   a_series_alt  same series with A_k in the rearranged form, evaluated
//                 through its Beta-integral moments (p = 3, 4)
//   closed_form   the p = 2 single-sum form
//   descent       leading unit-argument series of one lower order plus one
//                 correction series per extra parameter (p >= 2)
//   split         the two-series rearrangement (p = 3)
enum class BRep { a_series, a_series_alt, closed_form, descent, split };

std::string rep_name(BRep rep);
BRep rep_from_name(const std::string& name);
std::vector<BRep> applicable_reps(const ParameterSet& params);

struct BValue {
    double value;
    double abs_err;
};

// B(p) by the chosen route; s must be zero (balance classification).
BValue constant_B(const ParameterSet& params, BRep rep);

// L(p) = 2 psi(1) - psi(a1) - psi(a2) + B(p).
double constant_L(const ParameterSet& params, BRep rep = BRep::a_series);

// prod Gamma(a) / prod Gamma(b)
double gamma_prefactor(const ParameterSet& params);

enum class MethodChoice { automatic, direct, continuation, zero_balanced };

// Top-level evaluation with the method policy: |z| <= 0.5 (and terminating
// series, and |z| = 1) go direct; z in (0.5, 1) goes to the continuation for
// non-integer s, the zero-balanced expansion for s = 0, and direct with a
// warning for nonzero integer s. Explicit choices bypass the policy; an
// explicit continuation request with nonzero integer s throws
// NotImplementedIntegerS. The truncation order is chosen from tol and 1-z.
EvalResult evaluate(const ParameterSet& params, double z, double tol = 1e-12,
                    long max_terms = 10000,
                    MethodChoice how = MethodChoice::automatic,
                    std::vector<std::string>* warnings = nullptr);

} // namespace hypu
