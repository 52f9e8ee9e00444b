#include "charsum/window.hpp"

#include <cmath>
#include <stdexcept>

namespace charsum {

WindowSpec WindowSpec::make(int64_t M, int64_t N, int64_t q) {
    if (q < 1) throw std::domain_error("WindowSpec: modulus must be >= 1");
    if (!(0 <= M && M < N && N <= q))
        throw std::domain_error("WindowSpec: need 0 <= M < N <= q");
    return {M, N, q};
}

double window_value(const WindowSpec& spec, double x) {
    double y = std::fmod(x, kTwoPi);
    if (y < 0) y += kTwoPi;
    // compare in units of 2*pi/q so the jump test is scale-independent
    double pos = y * static_cast<double>(spec.q) / kTwoPi;
    const double eps = 1e-9 * (1.0 + std::abs(pos));
    double m = static_cast<double>(spec.M);
    double n = static_cast<double>(spec.N);
    if (std::abs(pos - m) < eps || std::abs(pos - n) < eps) return 0.5;
    return (m < pos && pos < n) ? 1.0 : 0.0;
}

FourierCoeffs fourier_coeffs(const WindowSpec& spec, std::size_t K) {
    FourierCoeffs c;
    double q = static_cast<double>(spec.q);
    c.a0 = static_cast<double>(spec.N - spec.M) / q;
    c.a.resize(K);
    c.b.resize(K);
    for (std::size_t m = 1; m <= K; ++m) {
        double dm = static_cast<double>(m);
        double tn = kTwoPi * static_cast<double>(spec.N) * dm / q;
        double tm = kTwoPi * static_cast<double>(spec.M) * dm / q;
        double pim = 0.5 * kTwoPi * dm;  // pi * m
        c.a[m - 1] = (std::sin(tn) - std::sin(tm)) / pim;
        c.b[m - 1] = -(std::cos(tn) - std::cos(tm)) / pim;
    }
    return c;
}

double partial_window_sum(const FourierCoeffs& coeffs, double x) {
    double sum = coeffs.a0;
    for (std::size_t m = 1; m <= coeffs.terms(); ++m) {
        double mx = static_cast<double>(m) * x;
        sum += coeffs.a[m - 1] * std::cos(mx) + coeffs.b[m - 1] * std::sin(mx);
    }
    return sum;
}

double partial_window_sum(const WindowSpec& spec, double x, std::size_t K) {
    return partial_window_sum(fourier_coeffs(spec, K), x);
}

TailSineSum tail_sine_sum(int64_t q, int64_t K, int64_t m_cap) {
    if (q < 1) throw std::domain_error("tail_sine_sum: modulus must be >= 1");
    if (K < 2) throw std::domain_error("tail_sine_sum: K must be >= 2");
    if (K >= m_cap) throw std::domain_error("tail_sine_sum: need K < m_cap");

    // sin(2*pi*r/q) lookup; the inner phase steps by n per unit of m
    std::vector<double> sin_table(static_cast<std::size_t>(q));
    for (int64_t r = 0; r < q; ++r)
        sin_table[static_cast<std::size_t>(r)] =
            std::sin(kTwoPi * static_cast<double>(r) / static_cast<double>(q));

    double total = 0;
    for (int64_t n = 1; n <= q; ++n) {
        double inner = 0;
        int64_t phase = (K + 1) % q * (n % q) % q;
        int64_t step = n % q;
        for (int64_t m = K + 1; m <= m_cap; ++m) {
            inner += sin_table[static_cast<std::size_t>(phase)] / static_cast<double>(m);
            phase += step;
            if (phase >= q) phase -= q;
        }
        total += std::abs(inner);
    }

    TailSineSum out;
    out.total = total;
    double shape = static_cast<double>(q) / static_cast<double>(K + 1) *
                   std::log(static_cast<double>(K));
    out.ratio = total / shape;
    return out;
}

Reconstruction windowed_prime_reconstruction(const DirichletCharacter& chi, double x,
                                             std::size_t K, const PrimeTable& primes) {
    int64_t q = chi.modulus();
    if (!(x >= 2.0)) throw std::domain_error("windowed_prime_reconstruction: requires x >= 2");
    if (!(x < static_cast<double>(q)))
        throw std::domain_error("windowed_prime_reconstruction: requires x < q");
    if (primes.limit() < q - 1)
        throw std::domain_error("windowed_prime_reconstruction: sieve does not cover q");

    int64_t n_edge = static_cast<int64_t>(std::floor(x));
    WindowSpec spec = WindowSpec::make(0, n_edge, q);
    FourierCoeffs coeffs = fourier_coeffs(spec, K);

    KahanSum approx;
    // Half-weight boundary correction: the window carries weight 1/2 at the
    // right jump, so a prime sitting exactly at floor(x) needs the other half.
    if (n_edge >= 2 && primes.contains(n_edge)) approx.add(0.5 * chi.value(n_edge));
    for (int64_t p : primes.primes()) {
        if (p >= q) break;
        if (p < 2) continue;
        UnityExponent v = chi(p);
        if (v.is_zero()) continue;
        double w = partial_window_sum(coeffs, kTwoPi * static_cast<double>(p) /
                                                  static_cast<double>(q));
        approx.add(v.to_complex() * w);
    }

    Reconstruction out;
    out.approx = approx.value();
    out.residual = char_sum_primes(chi, x, primes) - out.approx;
    return out;
}

PkRoutes pk_routes(const DirichletCharacter& chi, double x, std::size_t K,
                   const PrimeTable& primes) {
    int64_t q = chi.modulus();
    if (!(x >= 2.0) || !(x < static_cast<double>(q)))
        throw std::domain_error("pk_routes: requires 2 <= x < q");
    if (primes.limit() < q - 1) throw std::domain_error("pk_routes: sieve does not cover q");

    WindowSpec spec = WindowSpec::make(0, static_cast<int64_t>(std::floor(x)), q);
    FourierCoeffs coeffs = fourier_coeffs(spec, K);

    KahanSum direct, cosine;
    for (int64_t p : primes.primes()) {
        if (p >= q) break;
        UnityExponent v = chi(p);
        if (v.is_zero()) continue;
        Complex cv = v.to_complex();
        double theta = kTwoPi * static_cast<double>(p) / static_cast<double>(q);
        double full = 0, cos_part = 0;
        for (std::size_t m = 1; m <= K; ++m) {
            double mt = static_cast<double>(m) * theta;
            double cm = std::cos(mt);
            cos_part += coeffs.a[m - 1] * cm;
            full += coeffs.a[m - 1] * cm + coeffs.b[m - 1] * std::sin(mt);
        }
        direct.add(cv * full);
        cosine.add(cv * cos_part);
    }

    DirichletCharacter conj = chi.conjugate();
    KahanSum twisted;
    for (std::size_t m = 1; m <= K; ++m)
        twisted.add(coeffs.a[m - 1] * conj.value(static_cast<int64_t>(m)));

    PkRoutes out;
    out.direct = direct.value();
    out.cosine_only = cosine.value();
    out.factored = prime_exp_sum(chi, 1, primes) * twisted.value();
    return out;
}

}  // namespace charsum
