#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "charsum/sums.hpp"
#include "charsum/window.hpp"

namespace charsum {

// Bound sweeps. "pv" and "paley" scan max |S(x, chi)| over x <= q; "tmax"
// scans max |T(x, chi)| over x <= q^(1-eps); "rho" measures |rho(chi)|.
// Only the Polya-Vinogradov constant is ever asserted; the other kinds are
// measurement reports whose violation flags are first-class output.
enum class BoundKind { PolyaVinogradov, PrimeSumMax, RhoNorm, Paley };

const char* bound_kind_name(BoundKind kind);

struct BoundRecord {
    int64_t q = 0;
    int64_t chi_index = 0;
    double observed = 0;  // max |sum|
    double arg_x = 0;     // x attaining the max (0 where not applicable)
    double bound = 0;
    double ratio = 0;     // observed / bound
    bool violation = false;
};

struct BoundReport {
    BoundKind kind = BoundKind::PolyaVinogradov;
    double eps = 0;  // tmax only
    std::vector<BoundRecord> records;  // canonical (q, chi_index) order
    std::vector<std::string> notes;    // skipped moduli etc.

    std::size_t violation_count() const;
    double max_ratio() const;
};

struct SweepOptions {
    double eps = 0.1;        // tmax exponent parameter
    std::size_t threads = 0; // 0 = default_thread_count()
};

BoundReport bound_sweep(std::span<const int64_t> q_set, BoundKind kind,
                        const PrimeTable& primes, const SweepOptions& options = {});

// Scans | |tau_a(chi)|^2 - q | over every primitive chi mod q and every
// coprime a (conjugate symmetry halves the a range without losing coverage).
struct GaussNormScan {
    int64_t q = 0;
    int64_t primitive_count = 0;
    double max_abs_dev = 0;
    int64_t worst_chi = -1;
    int64_t worst_a = 0;
};
GaussNormScan gauss_norm_scan(int64_t q);

struct HeathBrownParams {
    int64_t Q = 0;
    double alpha = 1.0;
};

struct HeathBrownStats {
    int64_t Q = 0;
    double alpha = 0;
    double beta = 0;   // max(1 + alpha/2, 1/2 + alpha)
    double lhs = 0;    // sum over primitive chi of conductor <= Q of |T(Q^alpha, chi)|
    double scale = 0;  // Q^beta
    double ratio = 0;
    int64_t character_count = 0;
};

// Mean-square statistics of the prime exponential sums rho_t(chi). The exact
// value of both averages is #{p < q : p does not divide q}; the pi(q)+a
// prediction is reported alongside for comparison, never asserted.
struct MeanValueStats {
    int64_t q = 0;
    double oracle = 0;     // #{p < q : p does not divide q}
    double pi_plus_a = 0;  // pi(q) + omega(q) - [q prime]
    std::vector<double> e_t;    // per character index: (1/q) sum_t |rho_t|^2
    std::vector<double> e_chi;  // per t = 1..q: (1/phi) sum_chi |rho_t|^2
    double max_rel_dev_e_t = 0;    // nonprincipal characters vs oracle
    double max_rel_dev_e_chi = 0;  // all t vs oracle
    std::optional<HeathBrownStats> heath_brown;
};
MeanValueStats mean_value_stats(int64_t q, const PrimeTable& primes,
                                std::optional<HeathBrownParams> hb = std::nullopt);

enum class GridStrategy { AllPrimes, Geometric };

struct RaceSeries {
    int64_t q = 0;
    std::vector<int64_t> classes;  // units mod q, ascending
    std::vector<double> grid;
    std::vector<std::vector<int64_t>> counts;       // counts[i][j] = pi(grid[i], classes[j], q)
    std::vector<std::vector<double>> error_terms;   // counts - Li(x)/phi(q)
};
RaceSeries race_series(int64_t q, double x_max, GridStrategy strategy,
                       const PrimeTable& primes, double geometric_factor = 1.25,
                       int64_t x_cap = 10'000'000);

struct SignChangeRecord {
    int64_t q = 0, a = 0, b = 0;
    double x_max = 0;
    std::optional<int64_t> first_crossing;  // first prime where sign(D) flips vs initial
    int64_t crossing_count = 0;
    int64_t samples = 0;  // primes examined
    double lead_fraction_a = 0, lead_fraction_b = 0, tie_fraction = 0;
};
SignChangeRecord sign_changes(int64_t q, int64_t a, int64_t b, double x_max,
                              const PrimeTable& primes);

// Exact finite identities: T(x, chi) rewritten through progression counts.
struct IdentityCheck {
    Complex lhs{0, 0};
    Complex rhs{0, 0};
    Complex error_form{0, 0};  // same sum built from E(x, a, q) terms
    double difference = 0;     // |lhs - rhs|
    double tolerance = 0;      // 1e-9 * (1 + pi(x))
    bool pass = true;
};
// rhs = sum over units a of chi(a) pi(x, a, q)
IdentityCheck collapse_check(const DirichletCharacter& chi, double x, const PrimeTable& primes);
// rhs = sum over 0 <= v < phi/2 of chi(g^v) (pi(x, g^v, q) - pi(x, g^(v+phi/2), q));
// requires odd chi and a modulus with a primitive root
IdentityCheck pairing_check(const DirichletCharacter& chi, double x, const PrimeTable& primes);

// ratio = |T(x, chi)| log x / (sqrt(x) log log log x); report only
struct OmegaPoint {
    double x = 0;
    Complex t_value{0, 0};
    double normalizer = 0;
    double ratio = 0;
};
std::vector<OmegaPoint> omega_track(const DirichletCharacter& chi,
                                    std::span<const double> x_grid,
                                    const PrimeTable& primes);

}  // namespace charsum
