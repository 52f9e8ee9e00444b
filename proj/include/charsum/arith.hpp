#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "charsum/common.hpp"

namespace charsum {

struct SieveOptions {
    int64_t max_limit = 1'000'000'000;      // resource guard
    int64_t plain_threshold = 100'000'000;  // segmented sieving above this
    std::size_t segment_size = 1u << 20;
};

// Ordered primes <= limit with O(log) counting lookups. Immutable after
// construction; safe for concurrent reads.
class PrimeTable {
public:
    PrimeTable() = default;

    int64_t limit() const { return limit_; }
    std::span<const int64_t> primes() const { return primes_; }
    std::size_t size() const { return primes_.size(); }

    // pi(x); requires x <= limit
    int64_t count_leq(double x) const;
    // pi(x, a, q) = #{p <= x : p = a (mod q)}; requires gcd(a, q) = 1
    int64_t count_in_class(double x, int64_t a, int64_t q) const;
    // binary search; n must be <= limit
    bool contains(int64_t n) const;

private:
    friend PrimeTable sieve_primes(int64_t, const SieveOptions&);
    int64_t limit_ = -1;
    std::vector<int64_t> primes_;
};

PrimeTable sieve_primes(int64_t limit, const SieveOptions& options = {});

struct Factorization {
    int64_t n = 1;
    std::vector<std::pair<int64_t, int>> factors;  // (prime, exponent), primes increasing

    int omega() const { return static_cast<int>(factors.size()); }
    int big_omega() const;
    std::vector<int64_t> divisors() const;  // all divisors, sorted
};

Factorization factorize(int64_t n);

int mobius(int64_t n);            // (-1)^omega(n) if squarefree, else 0
double von_mangoldt(int64_t n);   // log p if n = p^k, else 0
int64_t euler_phi(int64_t n);

int64_t prime_pi(const PrimeTable& table, double x);
int64_t prime_pi(const PrimeTable& table, double x, int64_t a, int64_t q);

// Li(x) = integral of dt/log t over [2, x], adaptive Gauss-Kronrod.
double log_integral(double x, double abs_tol = 1e-10);

int64_t mod_pow(int64_t base, int64_t exp, int64_t mod);
// order of a in (Z/mod)^*; requires gcd(a, mod) = 1
int64_t multiplicative_order(int64_t a, int64_t mod);
// a generator of (Z/q)^* when the group is cyclic (q in {1, 2, 4, p^k, 2p^k})
std::optional<int64_t> primitive_root(int64_t q);

}  // namespace charsum
