#pragma once
#include <iosfwd>
#include <string>
#include <vector>

#include "hypu/params.hpp"

namespace hypu {

// Comma-separated reals for --a and --b, validated; parse failures carry the
// 1-based position of the offending token.
ParameterSet parse_parameters(const std::string& a_csv,
                              const std::string& b_csv);

// Full command dispatch; args excludes the program name. All report output is
// buffered and written to `out` once, at the end. Returns the process exit
// code: 0 success, 1 numeric/domain error, 2 usage error, 3 verification
// failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace hypu
