#pragma once

#include <stdexcept>
#include <string>

namespace rigidcalc {

// Every failure mode the library reports is one of these named conditions.
// The CLI surfaces them as structured JSON diagnostics keyed by name().

class calc_error : public std::runtime_error {
public:
    calc_error(std::string kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
    const std::string& name() const { return kind_; }
private:
    std::string kind_;
};

#define RIGIDCALC_ERROR(Name)                                        \
    class Name : public calc_error {                                 \
    public:                                                          \
        explicit Name(const std::string& msg) : calc_error(#Name, msg) {} \
    }

RIGIDCALC_ERROR(RingMismatch);
RIGIDCALC_ERROR(DegreeBoundExceeded);
RIGIDCALC_ERROR(InconsistentRing);
RIGIDCALC_ERROR(NotFinite);
RIGIDCALC_ERROR(WindowTooSmall);
RIGIDCALC_ERROR(NotKoszulRegular);
RIGIDCALC_ERROR(CodimMismatch);
RIGIDCALC_ERROR(NotEtale);
RIGIDCALC_ERROR(NoSolution);
RIGIDCALC_ERROR(NotFreeBasis);
RIGIDCALC_ERROR(NotConcentrated);
RIGIDCALC_ERROR(SolveFailed);
RIGIDCALC_ERROR(CupNotIso);
RIGIDCALC_ERROR(NoCoordinates);
RIGIDCALC_ERROR(NotMorita);
RIGIDCALC_ERROR(NotUnit);
RIGIDCALC_ERROR(UnsupportedBase);
RIGIDCALC_ERROR(ParseError);

#undef RIGIDCALC_ERROR

// internal invariant violations (bugs, not user errors)
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& msg) : std::logic_error("internal: " + msg) {}
};

} // namespace rigidcalc
