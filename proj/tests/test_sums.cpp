#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numeric>
#include <random>

#include "charsum/sums.hpp"
#include "oracles.hpp"

using namespace charsum;

namespace {

const PrimeTable& table_1e5() {
    static PrimeTable table = sieve_primes(100000);
    return table;
}

DirichletCharacter nontrivial(int64_t q, int64_t index = 1) {
    return CharacterGroup::build(q).character(index);
}

}  // namespace

TEST_CASE("char_sum_integers") {
    CharacterGroup g5 = CharacterGroup::build(5);
    CHECK(char_sum_integers(g5.principal(), 5.0) == Complex{4.0, 0.0});  // phi(5)
    CHECK(std::abs(char_sum_integers(g5.character(2), 4.0)) == 0.0);     // 1-1-1+1
    CHECK(char_sum_integers(g5.character(1), 0.5) == Complex{0.0, 0.0});

    // principal sums over a full period are exactly phi(q)
    for (int64_t q : {7, 12, 36}) {
        CharacterGroup g = CharacterGroup::build(q);
        Complex s = char_sum_integers(g.principal(), static_cast<double>(q));
        CHECK(s.real() == static_cast<double>(euler_phi(q)));
        CHECK(s.imag() == 0.0);
    }
}

TEST_CASE("char_sum_primes point values") {
    DirichletCharacter chi3 = nontrivial(3);
    DirichletCharacter chi4 = nontrivial(4);
    CHECK(char_sum_primes(chi3, 100.0, table_1e5()) == Complex{-2.0, 0.0});
    CHECK(char_sum_primes(chi4, 100.0, table_1e5()) == Complex{-2.0, 0.0});
    CHECK(char_sum_primes(chi3, 1.9, table_1e5()) == Complex{0.0, 0.0});
    CHECK_THROWS_AS(char_sum_primes(chi3, 1e7, table_1e5()), std::domain_error);
}

TEST_CASE("triangle bound |T(x,chi)| <= pi(x)") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int64_t> pick_q(3, 100);
    std::uniform_real_distribution<double> pick_x(2.0, 50000.0);
    for (int trial = 0; trial < 40; ++trial) {
        int64_t q = pick_q(rng);
        CharacterGroup g = CharacterGroup::build(q);
        std::uniform_int_distribution<int64_t> pick_chi(0, g.phi() - 1);
        DirichletCharacter chi = g.character(pick_chi(rng));
        double x = pick_x(rng);
        double t = std::abs(char_sum_primes(chi, x, table_1e5()));
        CHECK(t <= static_cast<double>(prime_pi(table_1e5(), x)) + 1e-9);
    }
}

TEST_CASE("prime_exp_sum") {
    CharacterGroup g5 = CharacterGroup::build(5);
    DirichletCharacter quad = g5.character(2);

    // two-term sum: -e^{4 pi i/5} - e^{6 pi i/5} = (1 + sqrt 5)/2
    Complex rho = prime_exp_sum(quad, 1, table_1e5());
    CHECK(std::abs(rho - Complex{(1.0 + std::sqrt(5.0)) / 2.0, 0.0}) < 1e-12);

    // t = q makes the exponential factor 1
    for (int64_t q : {5, 7, 12}) {
        CharacterGroup g = CharacterGroup::build(q);
        for (int64_t i = 0; i < g.phi(); ++i) {
            DirichletCharacter chi = g.character(i);
            Complex lhs = prime_exp_sum(chi, q, table_1e5());
            Complex rhs = char_sum_primes(chi, static_cast<double>(q - 1), table_1e5());
            CHECK(std::abs(lhs - rhs) < 1e-12);
        }
    }

    // Parseval: (1/q) sum_t |rho_t|^2 = #{p < q : p does not divide q}
    for (int64_t q : {5, 7, 9, 12, 30}) {
        CharacterGroup g = CharacterGroup::build(q);
        int64_t expected = 0;
        for (int64_t p : table_1e5().primes()) {
            if (p >= q) break;
            if (q % p != 0) ++expected;
        }
        for (int64_t i = 0; i < g.phi(); ++i) {
            DirichletCharacter chi = g.character(i);
            double mean = 0;
            for (int64_t t = 1; t <= q; ++t)
                mean += std::norm(prime_exp_sum(chi, t, table_1e5()));
            mean /= static_cast<double>(q);
            if (expected > 0)
                CHECK(std::abs(mean - static_cast<double>(expected)) <
                      1e-9 * static_cast<double>(expected));
            else
                CHECK(std::abs(mean) < 1e-12);
        }
    }
}

TEST_CASE("gauss_sum point values") {
    CharacterGroup g5 = CharacterGroup::build(5);
    DirichletCharacter quad5 = g5.character(2);
    CHECK(std::abs(gauss_sum(quad5, 1) - Complex{std::sqrt(5.0), 0.0}) < 1e-12);
    CHECK(std::abs(gauss_sum(quad5, 2) - Complex{-std::sqrt(5.0), 0.0}) < 1e-12);

    DirichletCharacter chi3 = nontrivial(3);
    CHECK(std::abs(gauss_sum(chi3, 1) - Complex{0.0, std::sqrt(3.0)}) < 1e-12);
}

TEST_CASE("gauss twist identity for primitive characters") {
    std::mt19937_64 rng(37);
    for (int64_t q = 3; q <= 100; ++q) {
        if (q % 4 == 2) continue;
        CharacterGroup g = CharacterGroup::build(q);
        for (int64_t i = 1; i < g.phi(); ++i) {
            DirichletCharacter chi = g.character(i);
            if (!chi.is_primitive()) continue;
            Complex tau1 = gauss_sum(chi, 1);
            CHECK(std::abs(std::norm(tau1) - static_cast<double>(q)) <
                  1e-6 * static_cast<double>(q));
            std::uniform_int_distribution<int64_t> pick_a(1, q - 1);
            for (int trial = 0; trial < 3; ++trial) {
                int64_t a = pick_a(rng);
                if (std::gcd(a, q) != 1) continue;
                Complex lhs = gauss_sum(chi, a);
                Complex rhs = chi.conjugate().value(a) * tau1;
                CHECK(std::abs(lhs - rhs) < 1e-9);
            }
        }
    }
}

TEST_CASE("classical quadratic Gauss sum hits the four mod-4 values") {
    for (int64_t q = 3; q <= 102; ++q) {
        Complex s = quadratic_gauss_sum(q, 1);
        double r = std::sqrt(static_cast<double>(q));
        Complex expected;
        switch (q % 4) {
            case 0: expected = {r, r}; break;
            case 1: expected = {r, 0}; break;
            case 2: expected = {0, 0}; break;
            default: expected = {0, r}; break;
        }
        CHECK(std::abs(s - expected) < 1e-8);
    }

    // for odd prime q the character Gauss sum of the quadratic character
    // agrees with the classical sum
    for (int64_t q : {3, 5, 7, 11, 13, 97, 101}) {
        CharacterGroup g = CharacterGroup::build(q);
        DirichletCharacter quad = g.character((q - 1) / 2);
        REQUIRE(quad.order() == 2);
        CHECK(std::abs(gauss_sum(quad, 1) - quadratic_gauss_sum(q, 1)) < 1e-9);
    }
}

TEST_CASE("interpolation reconstructs the character") {
    CharacterGroup g5 = CharacterGroup::build(5);
    DirichletCharacter quartic = g5.character(1);

    InterpolatedValue at2 = interpolate_char(quartic, 2);
    CHECK(std::abs(at2.full - Complex{0.0, 1.0}) < 1e-10);
    CHECK(std::abs(at2.parity - Complex{0.0, 1.0}) < 1e-10);

    InterpolatedValue at5 = interpolate_char(quartic, 5);
    CHECK(std::abs(at5.full) < 1e-10);  // gcd(n, q) > 1 interpolates to 0

    for (int64_t q = 3; q <= 40; ++q) {
        if (q % 4 == 2) continue;
        CharacterGroup g = CharacterGroup::build(q);
        for (int64_t i = 1; i < g.phi(); ++i) {
            DirichletCharacter chi = g.character(i);
            if (!chi.is_primitive()) continue;
            for (int64_t n = 0; n < q; ++n) {
                InterpolatedValue v = interpolate_char(chi, n);
                CHECK(std::abs(v.full - chi.value(n)) < 1e-8);
                CHECK(std::abs(v.full - v.parity) < 1e-9);
            }
        }
    }
}

TEST_CASE("interpolation domain errors") {
    CharacterGroup g6 = CharacterGroup::build(6);
    CHECK_THROWS_AS(interpolate_char(g6.character(1), 1), std::domain_error);  // q = 2 mod 4

    CharacterGroup g9 = CharacterGroup::build(9);
    for (int64_t i = 0; i < g9.phi(); ++i) {
        DirichletCharacter chi = g9.character(i);
        if (!chi.is_primitive() || chi.is_principal())
            CHECK_THROWS_AS(interpolate_char(chi, 1), std::domain_error);
    }
}

TEST_CASE("decoupled prime sum") {
    DirichletCharacter chi3 = nontrivial(3);

    Complex direct = decoupled_prime_sum(chi3, 100.0, table_1e5());
    Complex oracle = oracles::prime_power_sum(chi3, 100.0, table_1e5());
    CHECK(std::abs(direct - oracle) < 1e-10);
    CHECK(direct.real() == doctest::Approx(-0.6167).epsilon(1e-3));

    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int64_t> pick_q(3, 60);
    std::uniform_real_distribution<double> pick_x(2.0, 3000.0);
    for (int trial = 0; trial < 25; ++trial) {
        int64_t q = pick_q(rng);
        CharacterGroup g = CharacterGroup::build(q);
        std::uniform_int_distribution<int64_t> pick_chi(0, g.phi() - 1);
        DirichletCharacter chi = g.character(pick_chi(rng));
        double x = pick_x(rng);
        Complex a = decoupled_prime_sum(chi, x, table_1e5());
        Complex b = oracles::prime_power_sum(chi, x, table_1e5());
        CHECK(std::abs(a - b) < 1e-9);
        // prime powers above the first differ from T(x) by at most 2 sqrt x
        Complex t = char_sum_primes(chi, x, table_1e5());
        CHECK(std::abs(a - t) <= 2.0 * std::sqrt(x));
    }
}

TEST_CASE("sum_series") {
    CharacterGroup g7 = CharacterGroup::build(7);
    DirichletCharacter chi = g7.character(1);

    double single[] = {15.5};
    SumSeries one = sum_series(chi, single, SumKind::Integers);
    REQUIRE(one.partial.size() == 1);
    CHECK(one.partial[0] == char_sum_integers(chi, 15.5));

    std::vector<double> full;
    for (int64_t n = 1; n <= 7; ++n) full.push_back(static_cast<double>(n));
    SumSeries period = sum_series(chi, full, SumKind::Integers);
    CHECK(std::abs(period.partial.back()) < 1e-8);  // orthogonality

    // refinement consistency: union grid agrees with the pointwise op
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> pick_x(1.0, 5000.0);
    std::vector<double> grid;
    for (int i = 0; i < 20; ++i) grid.push_back(pick_x(rng));
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    SumSeries ints = sum_series(chi, grid, SumKind::Integers);
    SumSeries prms = sum_series(chi, grid, SumKind::Primes, &table_1e5());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(ints.partial[i] == char_sum_integers(chi, grid[i]));
        CHECK(prms.partial[i] == char_sum_primes(chi, grid[i], table_1e5()));
    }

    double bad[] = {3.0, 2.0};
    CHECK_THROWS_AS(sum_series(chi, bad, SumKind::Integers), std::domain_error);
    double empty_grid[] = {1.0};
    CHECK_THROWS_AS(sum_series(chi, std::span<const double>(empty_grid, 0),
                               SumKind::Integers),
                    std::domain_error);
}
