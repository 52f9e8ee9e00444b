#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace charsum {

using Complex = std::complex<double>;

inline constexpr double kTwoPi = 6.28318530717958647692528676655900577;

// Thrown when a request exceeds the configured memory/size budget
// (sieve limits, discrete-log table sizes, race sweep caps).
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace charsum
