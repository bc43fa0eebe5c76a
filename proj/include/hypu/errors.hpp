#pragma once
#include <stdexcept>
#include <string>

namespace hypu {

// Base for all library errors. `name()` is the stable machine-readable
// identifier surfaced verbatim in CLI "error" fields; what() carries detail.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& msg)
        : std::runtime_error(msg), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }
private:
    std::string name_;
};

#define HYPU_DEFINE_ERROR(Type)                                   \
    class Type : public Error {                                   \
    public:                                                       \
        explicit Type(const std::string& msg)                     \
            : Error(#Type, msg) {}                                \
    }

HYPU_DEFINE_ERROR(PoleError);
HYPU_DEFINE_ERROR(DomainError);
HYPU_DEFINE_ERROR(NoConvergence);
HYPU_DEFINE_ERROR(IntegerExponent);
HYPU_DEFINE_ERROR(SingularDenominator);
HYPU_DEFINE_ERROR(ConvergenceCondition);
HYPU_DEFINE_ERROR(ExtrapolationUnstable);
HYPU_DEFINE_ERROR(TruncationInsufficient);
HYPU_DEFINE_ERROR(RepresentationInapplicable);
HYPU_DEFINE_ERROR(NotImplementedIntegerS);

#undef HYPU_DEFINE_ERROR

// ParseError additionally reports the 1-based position of the offending
// token inside the flag value it came from.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int position)
        : Error("ParseError", msg), position_(position) {}
    int position() const noexcept { return position_; }
private:
    int position_;
};

} // namespace hypu
