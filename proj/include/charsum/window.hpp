#pragma once

#include <cstdint>
#include <vector>

#include "charsum/sums.hpp"

namespace charsum {

// Indicator of the arc (2*pi*M/q, 2*pi*N/q) on [0, 2*pi): 1 strictly inside,
// 1/2 at the two jump points, 0 outside.
struct WindowSpec {
    int64_t M = 0;
    int64_t N = 1;
    int64_t q = 1;

    static WindowSpec make(int64_t M, int64_t N, int64_t q);  // validates 0 <= M < N <= q
};

struct FourierCoeffs {
    double a0 = 0;
    std::vector<double> a;  // a[m-1] for 1 <= m <= K
    std::vector<double> b;
    std::size_t terms() const { return a.size(); }
};

double window_value(const WindowSpec& spec, double x);

// a0 = (N-M)/q, a_m = (sin(2piNm/q) - sin(2piMm/q))/(pi m),
// b_m = -(cos(2piNm/q) - cos(2piMm/q))/(pi m)
FourierCoeffs fourier_coeffs(const WindowSpec& spec, std::size_t K);

double partial_window_sum(const FourierCoeffs& coeffs, double x);
double partial_window_sum(const WindowSpec& spec, double x, std::size_t K);

// total = sum over 1 <= n <= q of |sum over K < m <= m_cap of sin(2pi m n/q)/m|;
// ratio = total / ((q/(K+1)) log K)
struct TailSineSum {
    double total = 0;
    double ratio = 0;
};
TailSineSum tail_sine_sum(int64_t q, int64_t K, int64_t m_cap);

// Rebuilds T(x, chi) from the truncated Fourier expansion of the [0, x]
// window: approx = boundary term + sum over primes 1 < p < q of
// chi(p) * S_K(2 pi p / q); residual = T(x, chi) - approx.
struct Reconstruction {
    Complex approx{0, 0};
    Complex residual{0, 0};
};
Reconstruction windowed_prime_reconstruction(const DirichletCharacter& chi, double x,
                                             std::size_t K, const PrimeTable& primes);

// The truncated main term of the windowed expansion, three ways: the honest
// (p, m) double sum, its cosine-only part, and the factored form
// rho(chi) * sum a_m conj(chi)(m). The routes are reported side by side (see
// the verify sweeps); they are not asserted equal.
struct PkRoutes {
    Complex direct{0, 0};       // full a_m cos + b_m sin double sum
    Complex cosine_only{0, 0};  // a_m cos terms only
    Complex factored{0, 0};     // rho(chi) * sum_{m<=K} a_m conj(chi)(m)
};
PkRoutes pk_routes(const DirichletCharacter& chi, double x, std::size_t K,
                   const PrimeTable& primes);

}  // namespace charsum
