#include "charsum/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace charsum {

namespace {

// Plain sieve of Eratosthenes, odd-only marking.
std::vector<int64_t> plain_sieve(int64_t limit) {
    std::vector<int64_t> primes;
    if (limit < 2) return primes;
    primes.reserve(static_cast<std::size_t>(
        limit < 16 ? 8 : 1.2 * static_cast<double>(limit) / std::log(static_cast<double>(limit))));
    std::vector<uint8_t> composite(static_cast<std::size_t>(limit) + 1, 0);
    for (int64_t i = 2; i * i <= limit; ++i) {
        if (composite[static_cast<std::size_t>(i)]) continue;
        for (int64_t j = i * i; j <= limit; j += i) composite[static_cast<std::size_t>(j)] = 1;
    }
    for (int64_t n = 2; n <= limit; ++n)
        if (!composite[static_cast<std::size_t>(n)]) primes.push_back(n);
    return primes;
}

// Segmented sieve for large limits: base primes up to sqrt(limit), then
// fixed-size windows so memory stays bounded by segment_size.
std::vector<int64_t> segmented_sieve(int64_t limit, std::size_t segment_size) {
    int64_t root = static_cast<int64_t>(std::sqrt(static_cast<double>(limit)));
    while ((root + 1) * (root + 1) <= limit) ++root;
    while (root * root > limit) --root;

    std::vector<int64_t> base = plain_sieve(root);
    std::vector<int64_t> primes;
    primes.reserve(static_cast<std::size_t>(
        1.2 * static_cast<double>(limit) / std::log(static_cast<double>(limit))));

    const int64_t seg = static_cast<int64_t>(std::max<std::size_t>(segment_size, 64));
    std::vector<uint8_t> mark(static_cast<std::size_t>(seg));
    for (int64_t low = 2; low <= limit; low += seg) {
        int64_t high = std::min(low + seg - 1, limit);
        std::fill(mark.begin(), mark.end(), 0);
        for (int64_t p : base) {
            if (p * p > high) break;
            int64_t start = std::max(p * p, (low + p - 1) / p * p);
            for (int64_t j = start; j <= high; j += p) mark[static_cast<std::size_t>(j - low)] = 1;
        }
        for (int64_t n = low; n <= high; ++n)
            if (!mark[static_cast<std::size_t>(n - low)]) primes.push_back(n);
    }
    return primes;
}

}  // namespace

PrimeTable sieve_primes(int64_t limit, const SieveOptions& options) {
    if (limit < 0) throw std::domain_error("sieve_primes: limit must be >= 0");
    if (limit > options.max_limit)
        throw ResourceError("sieve_primes: limit " + std::to_string(limit) +
                            " exceeds configured cap " + std::to_string(options.max_limit));
    PrimeTable table;
    table.limit_ = limit;
    if (limit < 2) return table;
    table.primes_ = (limit <= options.plain_threshold)
                        ? plain_sieve(limit)
                        : segmented_sieve(limit, options.segment_size);
    return table;
}

int64_t PrimeTable::count_leq(double x) const {
    if (limit_ < 0) throw std::domain_error("PrimeTable: table not built");
    if (static_cast<double>(limit_) < x)
        throw std::domain_error("PrimeTable: query above sieve limit");
    if (x < 2.0) return 0;
    int64_t n = static_cast<int64_t>(std::floor(x));
    auto it = std::upper_bound(primes_.begin(), primes_.end(), n);
    return static_cast<int64_t>(it - primes_.begin());
}

int64_t PrimeTable::count_in_class(double x, int64_t a, int64_t q) const {
    if (q < 1) throw std::domain_error("count_in_class: modulus must be >= 1");
    a %= q;
    if (a < 0) a += q;
    if (std::gcd(a, q) != 1)
        throw std::domain_error("count_in_class: residue class not coprime to modulus");
    int64_t upto = count_leq(x);
    int64_t count = 0;
    for (int64_t i = 0; i < upto; ++i)
        if (primes_[static_cast<std::size_t>(i)] % q == a) ++count;
    return count;
}

bool PrimeTable::contains(int64_t n) const {
    if (n > limit_) throw std::domain_error("PrimeTable: query above sieve limit");
    return std::binary_search(primes_.begin(), primes_.end(), n);
}

int64_t prime_pi(const PrimeTable& table, double x) { return table.count_leq(x); }

int64_t prime_pi(const PrimeTable& table, double x, int64_t a, int64_t q) {
    return table.count_in_class(x, a, q);
}

int Factorization::big_omega() const {
    int total = 0;
    for (const auto& [p, e] : factors) {
        (void)p;
        total += e;
    }
    return total;
}

std::vector<int64_t> Factorization::divisors() const {
    std::vector<int64_t> result{1};
    for (const auto& [p, e] : factors) {
        std::size_t base = result.size();
        int64_t pe = 1;
        for (int i = 1; i <= e; ++i) {
            pe *= p;
            for (std::size_t j = 0; j < base; ++j) result.push_back(result[j] * pe);
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

Factorization factorize(int64_t n) {
    if (n < 1) throw std::domain_error("factorize: argument must be >= 1");
    Factorization f;
    f.n = n;
    int64_t m = n;
    auto strip = [&](int64_t p) {
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e > 0) f.factors.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    for (int64_t d = 5; d * d <= m; d += 6) {
        strip(d);
        strip(d + 2);
    }
    if (m > 1) f.factors.emplace_back(m, 1);
    return f;
}

int mobius(int64_t n) {
    Factorization f = factorize(n);
    for (const auto& [p, e] : f.factors) {
        (void)p;
        if (e > 1) return 0;
    }
    return (f.omega() % 2 == 0) ? 1 : -1;
}

double von_mangoldt(int64_t n) {
    if (n < 1) throw std::domain_error("von_mangoldt: argument must be >= 1");
    if (n == 1) return 0.0;
    Factorization f = factorize(n);
    if (f.omega() != 1) return 0.0;
    return std::log(static_cast<double>(f.factors.front().first));
}

int64_t euler_phi(int64_t n) {
    Factorization f = factorize(n);
    int64_t phi = 1;
    for (const auto& [p, e] : f.factors) {
        int64_t pe = 1;
        for (int i = 1; i < e; ++i) pe *= p;
        phi *= pe * (p - 1);
    }
    return phi;
}

namespace {

// 7-point Gauss / 15-point Kronrod pair on [-1, 1] (QUADPACK dqk15 nodes).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

double li_integrand(double t) { return 1.0 / std::log(t); }

struct QuadEstimate {
    double kronrod;
    double error;
};

QuadEstimate gk15(double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double fc = li_integrand(center);
    double gauss = fc * kWg[3];
    double kronrod = fc * kWgk[7];
    for (int j = 0; j < 7; ++j) {
        double off = half * kXgk[j];
        double fsum = li_integrand(center - off) + li_integrand(center + off);
        kronrod += kWgk[j] * fsum;
        if (j % 2 == 1) gauss += kWg[j / 2] * fsum;
    }
    kronrod *= half;
    gauss *= half;
    return {kronrod, std::abs(kronrod - gauss)};
}

double adaptive_li(double a, double b, double tol, int depth) {
    QuadEstimate est = gk15(a, b);
    if (est.error <= tol || depth >= 52) return est.kronrod;
    double mid = 0.5 * (a + b);
    return adaptive_li(a, mid, 0.5 * tol, depth + 1) +
           adaptive_li(mid, b, 0.5 * tol, depth + 1);
}

}  // namespace

double log_integral(double x, double abs_tol) {
    if (!(x >= 2.0)) throw std::domain_error("log_integral: requires x >= 2");
    if (x == 2.0) return 0.0;
    return adaptive_li(2.0, x, abs_tol, 0);
}

int64_t mod_pow(int64_t base, int64_t exp, int64_t mod) {
    if (mod < 1) throw std::domain_error("mod_pow: modulus must be >= 1");
    if (exp < 0) throw std::domain_error("mod_pow: negative exponent");
    base %= mod;
    if (base < 0) base += mod;
    int64_t result = 1 % mod;
    while (exp > 0) {
        if (exp & 1) result = result * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return result;
}

int64_t multiplicative_order(int64_t a, int64_t mod) {
    a %= mod;
    if (a < 0) a += mod;
    if (std::gcd(a, mod) != 1)
        throw std::domain_error("multiplicative_order: argument not a unit");
    int64_t order = euler_phi(mod);
    for (const auto& [r, e] : factorize(order).factors) {
        (void)e;
        while (order % r == 0 && mod_pow(a, order / r, mod) == 1) order /= r;
    }
    return order;
}

std::optional<int64_t> primitive_root(int64_t q) {
    if (q < 1) return std::nullopt;
    if (q == 1) return 0;  // trivial group
    if (q == 2) return 1;
    if (q == 4) return 3;

    Factorization f = factorize(q);
    bool cyclic = false;
    if (f.omega() == 1 && f.factors[0].first != 2) cyclic = true;                       // p^k
    if (f.omega() == 2 && f.factors[0].first == 2 && f.factors[0].second == 1) cyclic = true;  // 2 p^k
    if (!cyclic) return std::nullopt;

    int64_t phi = euler_phi(q);
    std::vector<int64_t> prime_divs;
    for (const auto& [r, e] : factorize(phi).factors) {
        (void)e;
        prime_divs.push_back(r);
    }
    for (int64_t g = 2; g < q; ++g) {
        if (std::gcd(g, q) != 1) continue;
        bool ok = true;
        for (int64_t r : prime_divs)
            if (mod_pow(g, phi / r, q) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    return std::nullopt;
}

}  // namespace charsum
