#include "charsum/sums.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace charsum {

Complex char_sum_integers(const DirichletCharacter& chi, double x) {
    if (x < 0) throw std::domain_error("char_sum_integers: x must be >= 0");
    int64_t n_max = static_cast<int64_t>(std::floor(x));
    if (n_max < 1) return {0.0, 0.0};
    int64_t q = chi.modulus();
    KahanSum sum;
    if (n_max < q) {
        for (int64_t n = 1; n <= n_max; ++n) sum.add(chi.value(n));
    } else {
        std::vector<Complex> values = character_values(chi);
        for (int64_t n = 1; n <= n_max; ++n) sum.add(values[static_cast<std::size_t>(n % q)]);
    }
    return sum.value();
}

Complex char_sum_primes(const DirichletCharacter& chi, double x, const PrimeTable& primes) {
    if (x > static_cast<double>(primes.limit()))
        throw std::domain_error("char_sum_primes: sieve does not cover x");
    KahanSum sum;
    for (int64_t p : primes.primes()) {
        if (static_cast<double>(p) > x) break;
        sum.add(chi.value(p));
    }
    return sum.value();
}

Complex prime_exp_sum(const DirichletCharacter& chi, int64_t t, const PrimeTable& primes) {
    int64_t q = chi.modulus();
    if (primes.limit() < q - 1)
        throw std::domain_error("prime_exp_sum: sieve does not cover q");
    int64_t tr = t % q;
    if (tr < 0) tr += q;
    KahanSum sum;
    for (int64_t p : primes.primes()) {
        if (p >= q) break;  // strictly p < q
        UnityExponent v = chi(p);
        if (v.is_zero()) continue;
        sum.add(v.to_complex() * root_of_unity(p % q * tr, q));
    }
    return sum.value();
}

Complex gauss_sum(const DirichletCharacter& chi, int64_t a) {
    int64_t q = chi.modulus();
    int64_t ar = a % q;
    if (ar < 0) ar += q;
    std::vector<Complex> values = character_values(chi);
    KahanSum sum;
    int64_t phase = 0;
    for (int64_t n = 1; n <= q; ++n) {
        phase += ar;
        if (phase >= q) phase -= q;
        Complex v = values[static_cast<std::size_t>(n % q)];
        if (v.real() == 0.0 && v.imag() == 0.0) continue;
        sum.add(v * root_of_unity(phase, q));
    }
    return sum.value();
}

Complex quadratic_gauss_sum(int64_t q, int64_t a) {
    if (q < 1) throw std::domain_error("quadratic_gauss_sum: modulus must be >= 1");
    int64_t ar = a % q;
    if (ar < 0) ar += q;
    KahanSum sum;
    for (int64_t n = 1; n <= q; ++n) {
        int64_t k = n % q * (n % q) % q * ar % q;
        sum.add(root_of_unity(k, q));
    }
    return sum.value();
}

InterpolatedValue interpolate_char(const DirichletCharacter& chi, int64_t n) {
    int64_t q = chi.modulus();
    if (q % 4 == 2)
        throw std::domain_error("interpolate_char: undefined for q = 2 (mod 4)");
    if (!chi.is_primitive() || chi.is_principal())
        throw std::domain_error("interpolate_char: requires a nonprincipal primitive character");

    DirichletCharacter conj = chi.conjugate();
    Complex tau_conj = gauss_sum(conj, 1);

    int64_t nr = n % q;
    if (nr < 0) nr += q;
    std::vector<Complex> conj_values = character_values(conj);
    KahanSum full, reduced;
    for (int64_t t = 1; t < q; ++t) {
        Complex v = conj_values[static_cast<std::size_t>(t)];
        if (v.real() == 0.0 && v.imag() == 0.0) continue;
        Complex e = root_of_unity(nr * t % q, q);
        full.add(v * e);
        if (chi.is_even())
            reduced.add(v * Complex{e.real(), 0.0});  // cosine part
        else
            reduced.add(v * Complex{e.imag(), 0.0});  // sine part
    }

    InterpolatedValue out;
    out.full = full.value() / tau_conj;
    Complex parity_sum = reduced.value();
    // For odd chi the sine form carries an extra factor -i, so multiply by i
    // to land back on chi(n).
    if (chi.is_odd()) parity_sum = Complex{0.0, 1.0} * parity_sum;
    out.parity = parity_sum / tau_conj;
    return out;
}

Complex decoupled_prime_sum(const DirichletCharacter& chi, double x, const PrimeTable& primes) {
    if (x > static_cast<double>(primes.limit()))
        throw std::domain_error("decoupled_prime_sum: sieve does not cover x");
    int64_t n_max = static_cast<int64_t>(std::floor(x));
    KahanSum sum;
    for (int64_t n = 2; n <= n_max; ++n) {
        double lambda = von_mangoldt(n);
        if (lambda == 0.0) continue;
        sum.add(chi.value(n) * (lambda / std::log(static_cast<double>(n))));
    }
    return sum.value();
}

SumSeries sum_series(const DirichletCharacter& chi, std::span<const double> x_grid,
                     SumKind kind, const PrimeTable* primes) {
    if (x_grid.empty()) throw std::domain_error("sum_series: empty grid");
    for (std::size_t i = 1; i < x_grid.size(); ++i)
        if (!(x_grid[i] > x_grid[i - 1]))
            throw std::domain_error("sum_series: grid must be strictly increasing");
    if (kind == SumKind::Primes && primes == nullptr)
        throw std::domain_error("sum_series: prime sums need a sieve");
    if (kind == SumKind::Primes &&
        x_grid.back() > static_cast<double>(primes->limit()))
        throw std::domain_error("sum_series: sieve does not cover the grid");

    SumSeries series;
    series.q = chi.modulus();
    series.chi_index = chi.index();
    series.kind = kind;
    series.grid.assign(x_grid.begin(), x_grid.end());
    series.partial.reserve(x_grid.size());

    KahanSum sum;
    if (kind == SumKind::Integers) {
        int64_t q = chi.modulus();
        std::vector<Complex> values = character_values(chi);
        int64_t n = 1;
        for (double x : x_grid) {
            for (; static_cast<double>(n) <= x; ++n)
                sum.add(values[static_cast<std::size_t>(n % q)]);
            series.partial.push_back(sum.value());
        }
    } else {
        auto ps = primes->primes();
        std::size_t i = 0;
        for (double x : x_grid) {
            for (; i < ps.size() && static_cast<double>(ps[i]) <= x; ++i)
                sum.add(chi.value(ps[i]));
            series.partial.push_back(sum.value());
        }
    }
    return series;
}

}  // namespace charsum
