#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace mfeh {

/// Vacuum permeability [H/m].
inline constexpr double mu0 = 4.0e-7 * 3.14159265358979323846;

inline constexpr double pi = 3.14159265358979323846;

/// Raised on malformed or inconsistent input (config files, tables,
/// out-of-span bounds). Distinct from std::domain_error, which is reserved
/// for arguments outside a model's mathematical domain.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Serialize a double with 9 significant digits, '.' decimal separator.
/// All CSV and report output goes through this so runs are byte-identical.
inline std::string format_g9(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", value);
    return buf;
}

} // namespace mfeh
