#pragma once

#include <span>
#include <vector>

#include "charsum/arith.hpp"
#include "charsum/characters.hpp"

namespace charsum {

// Kahan-compensated complex accumulator. Summation order is part of every
// sum's contract here, so results are identical run to run.
class KahanSum {
public:
    void add(Complex v) {
        add_part(v.real(), re_, re_c_);
        add_part(v.imag(), im_, im_c_);
    }
    Complex value() const { return {re_, im_}; }

private:
    static void add_part(double v, double& sum, double& comp) {
        double y = v - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    double re_ = 0, re_c_ = 0, im_ = 0, im_c_ = 0;
};

// S(x, chi) = sum over 1 <= n <= x of chi(n)
Complex char_sum_integers(const DirichletCharacter& chi, double x);

// T(x, chi) = sum over primes p <= x of chi(p)
Complex char_sum_primes(const DirichletCharacter& chi, double x, const PrimeTable& primes);

// rho_t(chi) = sum over primes p < q of chi(p) e^{2*pi*i*p*t/q}
Complex prime_exp_sum(const DirichletCharacter& chi, int64_t t, const PrimeTable& primes);

// tau_a(chi) = sum over n = 1..q of chi(n) e^{2*pi*i*a*n/q}
Complex gauss_sum(const DirichletCharacter& chi, int64_t a);

// Classical quadratic Gauss sum: sum over n = 1..q of e^{2*pi*i*a*n^2/q}.
// For a = 1 this takes the four textbook values (1+i)sqrt(q), sqrt(q), 0,
// i*sqrt(q) according to q mod 4, and coincides with tau(chi) for the
// quadratic character when q is an odd prime.
Complex quadratic_gauss_sum(int64_t q, int64_t a = 1);

// Gauss-sum interpolation of a primitive character: the full exponential
// form and the parity-reduced cosine/sine form, which must agree.
struct InterpolatedValue {
    Complex full;
    Complex parity;
};
InterpolatedValue interpolate_char(const DirichletCharacter& chi, int64_t n);

// sum over 2 <= n <= x of chi(n) Lambda(n)/log n (equals the prime-power sum
// of chi(p^k)/k)
Complex decoupled_prime_sum(const DirichletCharacter& chi, double x, const PrimeTable& primes);

enum class SumKind { Integers, Primes };

struct SumSeries {
    int64_t q = 0;
    int64_t chi_index = 0;
    SumKind kind = SumKind::Integers;
    std::vector<double> grid;
    std::vector<Complex> partial;  // partial[i] = sum at grid[i]
};

// Incremental partial sums along a strictly increasing grid; the value at
// each grid point equals the pointwise operation exactly.
SumSeries sum_series(const DirichletCharacter& chi, std::span<const double> x_grid,
                     SumKind kind, const PrimeTable* primes = nullptr);

}  // namespace charsum
