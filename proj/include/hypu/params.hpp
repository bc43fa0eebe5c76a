#pragma once
#include <cmath>
#include <string>
#include <vector>

#include "hypu/errors.hpp"

namespace hypu {

// Numerator/denominator parameters of a (p+1)Fp series: a has p+1 entries,
// b has p. Immutable after construction; construction validates.
struct ParameterSet {
    std::vector<double> a;
    std::vector<double> b;

    ParameterSet(std::vector<double> a_, std::vector<double> b_)
        : a(std::move(a_)), b(std::move(b_)) {
        if (a.size() != b.size() + 1)
            throw DomainError("need one more numerator parameter than denominator "
                              "(got " + std::to_string(a.size()) + " and " +
                              std::to_string(b.size()) + ")");
        int pp = int(b.size());
        if (pp < 1 || pp > 6)
            throw DomainError("supported p range is 1..6, got p=" + std::to_string(pp));
        for (std::size_t j = 0; j < b.size(); ++j) {
            double r = std::round(b[j]);
            if (r <= 0.0 && std::abs(b[j] - r) < 1e-12)
                throw DomainError("denominator parameter b" + std::to_string(j + 1) +
                                  "=" + std::to_string(b[j]) + " is a nonpositive integer");
        }
    }

    int p() const { return int(b.size()); }
};

struct BalanceInfo {
    double s;
    bool is_integer;
    long integer_value;   // meaningful only when is_integer
};

inline BalanceInfo balance(const ParameterSet& params) {
    double sb = 0.0, sa = 0.0;
    for (double x : params.b) sb += x;
    for (double x : params.a) sa += x;
    double s = sb - sa;
    double r = std::round(s);
    bool isint = std::abs(s - r) < 1e-8;
    return {s, isint, long(r)};
}

} // namespace hypu
