#include "charsum/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "charsum/parallel.hpp"

namespace charsum {

const char* bound_kind_name(BoundKind kind) {
    switch (kind) {
        case BoundKind::PolyaVinogradov: return "pv";
        case BoundKind::PrimeSumMax: return "tmax";
        case BoundKind::RhoNorm: return "rho";
        case BoundKind::Paley: return "paley";
    }
    return "?";
}

std::size_t BoundReport::violation_count() const {
    std::size_t n = 0;
    for (const auto& r : records) n += r.violation ? 1 : 0;
    return n;
}

double BoundReport::max_ratio() const {
    double m = 0;
    for (const auto& r : records) m = std::max(m, r.ratio);
    return m;
}

namespace {

std::vector<Complex> unit_roots(int64_t q) {
    std::vector<Complex> roots(static_cast<std::size_t>(q));
    for (int64_t k = 0; k < q; ++k) roots[static_cast<std::size_t>(k)] = root_of_unity(k, q);
    return roots;
}

// max over integer prefixes 1..q of |S(x, chi)|
BoundRecord scan_integer_prefix_max(int64_t q, const DirichletCharacter& chi) {
    std::vector<Complex> values = character_values(chi);
    KahanSum sum;
    double best = 0;
    int64_t best_x = 0;
    for (int64_t n = 1; n <= q; ++n) {
        sum.add(values[static_cast<std::size_t>(n % q)]);
        double s = std::abs(sum.value());
        if (s > best) {
            best = s;
            best_x = n;
        }
    }
    BoundRecord rec;
    rec.q = q;
    rec.chi_index = chi.index();
    rec.observed = best;
    rec.arg_x = static_cast<double>(best_x);
    return rec;
}

// max over primes p <= limit of |T(p, chi)|
BoundRecord scan_prime_prefix_max(int64_t q, const DirichletCharacter& chi, double limit,
                                  const PrimeTable& primes) {
    KahanSum sum;
    double best = 0;
    int64_t best_x = 0;
    for (int64_t p : primes.primes()) {
        if (static_cast<double>(p) > limit) break;
        sum.add(chi.value(p));
        double s = std::abs(sum.value());
        if (s > best) {
            best = s;
            best_x = p;
        }
    }
    BoundRecord rec;
    rec.q = q;
    rec.chi_index = chi.index();
    rec.observed = best;
    rec.arg_x = static_cast<double>(best_x);
    return rec;
}

}  // namespace

BoundReport bound_sweep(std::span<const int64_t> q_set, BoundKind kind,
                        const PrimeTable& primes, const SweepOptions& options) {
    BoundReport report;
    report.kind = kind;
    if (kind == BoundKind::PrimeSumMax) {
        if (!(options.eps > 0.0 && options.eps < 1.0))
            throw std::domain_error("bound_sweep: eps must lie in (0, 1)");
        report.eps = options.eps;
    }

    std::vector<int64_t> moduli(q_set.begin(), q_set.end());
    std::sort(moduli.begin(), moduli.end());
    moduli.erase(std::unique(moduli.begin(), moduli.end()), moduli.end());
    if (moduli.empty()) return report;

    if (kind == BoundKind::RhoNorm && primes.limit() < moduli.back() - 1)
        throw std::domain_error("bound_sweep: sieve does not cover the modulus range");
    if (kind == BoundKind::PrimeSumMax &&
        static_cast<double>(primes.limit()) <
            std::pow(static_cast<double>(moduli.back()), 1.0 - options.eps))
        throw std::domain_error("bound_sweep: sieve does not cover q^(1-eps)");

    std::vector<std::vector<BoundRecord>> per_q(moduli.size());
    std::vector<std::string> per_q_note(moduli.size());

    parallel_for(moduli.size(), options.threads, [&](std::size_t qi) {
        int64_t q = moduli[qi];
        if (q < 3) {
            per_q_note[qi] = "q=" + std::to_string(q) + " skipped: no nonprincipal characters";
            return;
        }
        CharacterGroup group = CharacterGroup::build(q);
        double lnq = std::log(static_cast<double>(q));
        std::vector<BoundRecord>& out = per_q[qi];
        out.reserve(static_cast<std::size_t>(group.phi() - 1));

        std::vector<Complex> roots;
        if (kind == BoundKind::RhoNorm) roots = unit_roots(q);

        for (int64_t i = 1; i < group.phi(); ++i) {
            DirichletCharacter chi = group.character(i);
            BoundRecord rec;
            switch (kind) {
                case BoundKind::PolyaVinogradov:
                    rec = scan_integer_prefix_max(q, chi);
                    rec.bound = 2.0 * std::sqrt(static_cast<double>(q)) * lnq;
                    break;
                case BoundKind::Paley:
                    rec = scan_integer_prefix_max(q, chi);
                    rec.bound = std::sqrt(static_cast<double>(q)) * std::log(lnq);
                    break;
                case BoundKind::PrimeSumMax: {
                    double limit = std::pow(static_cast<double>(q), 1.0 - options.eps);
                    rec = scan_prime_prefix_max(q, chi, limit, primes);
                    rec.bound = std::pow(static_cast<double>(q), 0.5 + options.eps);
                    break;
                }
                case BoundKind::RhoNorm: {
                    std::vector<Complex> values = character_values(chi);
                    KahanSum sum;
                    for (int64_t p : primes.primes()) {
                        if (p >= q) break;
                        Complex v = values[static_cast<std::size_t>(p)];
                        if (v.real() == 0.0 && v.imag() == 0.0) continue;
                        sum.add(v * roots[static_cast<std::size_t>(p % q)]);
                    }
                    rec.q = q;
                    rec.chi_index = i;
                    rec.observed = std::abs(sum.value());
                    rec.arg_x = 0;
                    rec.bound = std::sqrt(static_cast<double>(q));
                    break;
                }
            }
            rec.ratio = rec.observed / rec.bound;
            rec.violation = rec.ratio > 1.0;
            out.push_back(rec);
        }
    });

    for (std::size_t qi = 0; qi < moduli.size(); ++qi) {
        if (!per_q_note[qi].empty()) report.notes.push_back(per_q_note[qi]);
        report.records.insert(report.records.end(), per_q[qi].begin(), per_q[qi].end());
    }
    return report;
}

GaussNormScan gauss_norm_scan(int64_t q) {
    GaussNormScan scan;
    scan.q = q;
    if (q < 3 || q % 4 == 2) return scan;  // no primitive characters to check
    CharacterGroup group = CharacterGroup::build(q);
    std::vector<Complex> roots = unit_roots(q);

    for (int64_t i = 0; i < group.phi(); ++i) {
        DirichletCharacter chi = group.character(i);
        if (!chi.is_primitive() || chi.is_principal()) continue;
        ++scan.primitive_count;
        std::vector<Complex> values = character_values(chi);
        // tau_{q-a}(chi) = conj(tau_a(conj chi)), so a <= q/2 covers every
        // (chi, a) pair once conj(chi) is scanned too.
        for (int64_t a = 1; 2 * a < q; ++a) {
            if (std::gcd(a, q) != 1) continue;
            KahanSum sum;
            int64_t phase = 0;
            for (int64_t n = 1; n <= q; ++n) {
                phase += a;
                if (phase >= q) phase -= q;
                Complex v = values[static_cast<std::size_t>(n % q)];
                if (v.real() == 0.0 && v.imag() == 0.0) continue;
                sum.add(v * roots[static_cast<std::size_t>(phase)]);
            }
            double dev = std::abs(std::norm(sum.value()) - static_cast<double>(q));
            if (dev > scan.max_abs_dev) {
                scan.max_abs_dev = dev;
                scan.worst_chi = i;
                scan.worst_a = a;
            }
        }
    }
    return scan;
}

MeanValueStats mean_value_stats(int64_t q, const PrimeTable& primes,
                                std::optional<HeathBrownParams> hb) {
    if (q < 3) throw std::domain_error("mean_value_stats: requires q >= 3");
    if (primes.limit() < q - 1)
        throw std::domain_error("mean_value_stats: sieve does not cover q");

    MeanValueStats stats;
    stats.q = q;

    Factorization fq = factorize(q);
    bool q_prime = fq.omega() == 1 && fq.factors[0].second == 1;
    int64_t coprime_primes = 0;
    for (int64_t p : primes.primes()) {
        if (p >= q) break;
        if (q % p != 0) ++coprime_primes;
    }
    stats.oracle = static_cast<double>(coprime_primes);
    stats.pi_plus_a = static_cast<double>(primes.count_leq(static_cast<double>(q)) +
                                          fq.omega() - (q_prime ? 1 : 0));

    CharacterGroup group = CharacterGroup::build(q);
    int64_t phi = group.phi();
    std::vector<Complex> roots = unit_roots(q);

    std::vector<int64_t> small_primes;
    for (int64_t p : primes.primes()) {
        if (p >= q) break;
        small_primes.push_back(p);
    }

    stats.e_t.assign(static_cast<std::size_t>(phi), 0.0);
    stats.e_chi.assign(static_cast<std::size_t>(q), 0.0);

    for (int64_t i = 0; i < phi; ++i) {
        std::vector<Complex> values = character_values(group.character(i));
        double row_sum = 0;
        for (int64_t t = 1; t <= q; ++t) {
            KahanSum sum;
            for (int64_t p : small_primes) {
                Complex v = values[static_cast<std::size_t>(p)];
                if (v.real() == 0.0 && v.imag() == 0.0) continue;
                sum.add(v * roots[static_cast<std::size_t>(p % q * (t % q) % q)]);
            }
            double norm2 = std::norm(sum.value());
            row_sum += norm2;
            stats.e_chi[static_cast<std::size_t>(t - 1)] += norm2;
        }
        stats.e_t[static_cast<std::size_t>(i)] = row_sum / static_cast<double>(q);
    }
    for (double& v : stats.e_chi) v /= static_cast<double>(phi);

    for (int64_t i = 1; i < phi; ++i) {
        double rel = std::abs(stats.e_t[static_cast<std::size_t>(i)] - stats.oracle) /
                     stats.oracle;
        stats.max_rel_dev_e_t = std::max(stats.max_rel_dev_e_t, rel);
    }
    for (double v : stats.e_chi) {
        double rel = std::abs(v - stats.oracle) / stats.oracle;
        stats.max_rel_dev_e_chi = std::max(stats.max_rel_dev_e_chi, rel);
    }

    if (hb) {
        if (!(hb->alpha > 0.0 && hb->alpha <= 1.0))
            throw std::domain_error("mean_value_stats: alpha must lie in (0, 1]");
        HeathBrownStats out;
        out.Q = hb->Q;
        out.alpha = hb->alpha;
        out.beta = std::max(1.0 + hb->alpha / 2.0, 0.5 + hb->alpha);
        double x = std::pow(static_cast<double>(hb->Q), hb->alpha);
        if (x > static_cast<double>(primes.limit()))
            throw std::domain_error("mean_value_stats: sieve does not cover Q^alpha");
        double lhs = 0;
        for (int64_t f = 3; f <= hb->Q; ++f) {
            if (f % 4 == 2) continue;  // no primitive characters
            CharacterGroup g = CharacterGroup::build(f);
            for (int64_t i = 1; i < g.phi(); ++i) {
                DirichletCharacter chi = g.character(i);
                if (!chi.is_primitive()) continue;
                lhs += std::abs(char_sum_primes(chi, x, primes));
                ++out.character_count;
            }
        }
        out.lhs = lhs;
        out.scale = std::pow(static_cast<double>(hb->Q), out.beta);
        out.ratio = out.lhs / out.scale;
        stats.heath_brown = out;
    }
    return stats;
}

namespace {

std::vector<int64_t> unit_classes(int64_t q) {
    std::vector<int64_t> classes;
    for (int64_t a = 1; a <= q; ++a)
        if (std::gcd(a % q, q) == 1) classes.push_back(a % q);
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    return classes;
}

// one pass over the sieve: counts[j] = pi(x, classes[j], q)
std::vector<int64_t> class_counts(int64_t q, double x, const PrimeTable& primes,
                                  const std::vector<int64_t>& classes) {
    std::vector<int64_t> class_slot(static_cast<std::size_t>(q), -1);
    for (std::size_t j = 0; j < classes.size(); ++j)
        class_slot[static_cast<std::size_t>(classes[j])] = static_cast<int64_t>(j);
    std::vector<int64_t> counts(classes.size(), 0);
    for (int64_t p : primes.primes()) {
        if (static_cast<double>(p) > x) break;
        int64_t slot = class_slot[static_cast<std::size_t>(p % q)];
        if (slot >= 0) ++counts[static_cast<std::size_t>(slot)];
    }
    return counts;
}

}  // namespace

RaceSeries race_series(int64_t q, double x_max, GridStrategy strategy,
                       const PrimeTable& primes, double geometric_factor, int64_t x_cap) {
    if (q < 3) throw std::domain_error("race_series: requires q >= 3");
    if (x_max > static_cast<double>(x_cap))
        throw ResourceError("race_series: x_max exceeds the configured cap");
    if (x_max > static_cast<double>(primes.limit()))
        throw std::domain_error("race_series: sieve does not cover x_max");

    RaceSeries series;
    series.q = q;
    series.classes = unit_classes(q);

    if (strategy == GridStrategy::AllPrimes) {
        for (int64_t p : primes.primes()) {
            if (static_cast<double>(p) > x_max) break;
            series.grid.push_back(static_cast<double>(p));
        }
    } else {
        if (!(geometric_factor > 1.0))
            throw std::domain_error("race_series: geometric factor must exceed 1");
        double x = 10.0;
        while (x < x_max) {
            double checkpoint = std::floor(x);
            if (series.grid.empty() || checkpoint > series.grid.back())
                series.grid.push_back(checkpoint);
            x *= geometric_factor;
        }
        if (series.grid.empty() || x_max > series.grid.back())
            series.grid.push_back(x_max);
    }

    double phi = static_cast<double>(euler_phi(q));
    std::vector<int64_t> class_slot(static_cast<std::size_t>(q), -1);
    for (std::size_t j = 0; j < series.classes.size(); ++j)
        class_slot[static_cast<std::size_t>(series.classes[j])] = static_cast<int64_t>(j);

    std::vector<int64_t> counts(series.classes.size(), 0);
    auto ps = primes.primes();
    std::size_t pi = 0;
    for (double x : series.grid) {
        for (; pi < ps.size() && static_cast<double>(ps[pi]) <= x; ++pi) {
            int64_t slot = class_slot[static_cast<std::size_t>(ps[pi] % q)];
            if (slot >= 0) ++counts[static_cast<std::size_t>(slot)];
        }
        series.counts.push_back(counts);
        double li = x >= 2.0 ? log_integral(x) : 0.0;
        std::vector<double> errs(series.classes.size());
        for (std::size_t j = 0; j < series.classes.size(); ++j)
            errs[j] = static_cast<double>(counts[j]) - li / phi;
        series.error_terms.push_back(std::move(errs));
    }
    return series;
}

SignChangeRecord sign_changes(int64_t q, int64_t a, int64_t b, double x_max,
                              const PrimeTable& primes) {
    if (q < 1) throw std::domain_error("sign_changes: modulus must be >= 1");
    a %= q;
    if (a < 0) a += q;
    b %= q;
    if (b < 0) b += q;
    if (a == b) throw std::domain_error("sign_changes: classes must differ");
    if (std::gcd(a, q) != 1 || std::gcd(b, q) != 1)
        throw std::domain_error("sign_changes: classes must be coprime to the modulus");

    SignChangeRecord rec;
    rec.q = q;
    rec.a = a;
    rec.b = b;
    rec.x_max = x_max;
    if (x_max < 2.0) return rec;
    if (x_max > static_cast<double>(primes.limit()))
        throw std::domain_error("sign_changes: sieve does not cover x_max");

    int64_t diff = 0;
    int initial_sign = 0, last_sign = 0;
    int64_t a_leads = 0, b_leads = 0, ties = 0;
    for (int64_t p : primes.primes()) {
        if (static_cast<double>(p) > x_max) break;
        int64_t r = p % q;
        if (r == a) ++diff;
        else if (r == b) --diff;
        ++rec.samples;
        if (diff > 0) ++a_leads;
        else if (diff < 0) ++b_leads;
        else ++ties;

        int sign = diff > 0 ? 1 : (diff < 0 ? -1 : 0);
        if (sign != 0) {
            if (initial_sign == 0) initial_sign = sign;
            if (last_sign != 0 && sign != last_sign) {
                ++rec.crossing_count;
                if (!rec.first_crossing && sign == -initial_sign) rec.first_crossing = p;
            }
            last_sign = sign;
        }
    }
    if (rec.samples > 0) {
        double n = static_cast<double>(rec.samples);
        rec.lead_fraction_a = static_cast<double>(a_leads) / n;
        rec.lead_fraction_b = static_cast<double>(b_leads) / n;
        rec.tie_fraction = static_cast<double>(ties) / n;
    }
    return rec;
}

IdentityCheck collapse_check(const DirichletCharacter& chi, double x,
                             const PrimeTable& primes) {
    int64_t q = chi.modulus();
    IdentityCheck check;
    check.lhs = char_sum_primes(chi, x, primes);

    std::vector<int64_t> classes = unit_classes(q);
    std::vector<int64_t> counts = class_counts(q, x, primes, classes);
    double li = x >= 2.0 ? log_integral(x) : 0.0;
    double phi = static_cast<double>(euler_phi(q));

    KahanSum rhs, err_form;
    for (std::size_t j = 0; j < classes.size(); ++j) {
        Complex cv = chi.value(classes[j]);
        rhs.add(cv * static_cast<double>(counts[j]));
        err_form.add(cv * (static_cast<double>(counts[j]) - li / phi));
    }
    check.rhs = rhs.value();
    check.error_form = err_form.value();
    check.difference = std::abs(check.lhs - check.rhs);
    check.tolerance = 1e-9 * (1.0 + static_cast<double>(primes.count_leq(std::max(x, 0.0))));
    check.pass = check.difference < check.tolerance;
    return check;
}

IdentityCheck pairing_check(const DirichletCharacter& chi, double x,
                            const PrimeTable& primes) {
    if (!chi.is_odd())
        throw std::domain_error("pairing_check: requires an odd character");
    int64_t q = chi.modulus();
    auto g = primitive_root(q);
    if (!g) throw std::domain_error("pairing_check: modulus has no primitive root");

    int64_t phi = euler_phi(q);
    std::vector<int64_t> classes = unit_classes(q);
    std::vector<int64_t> counts = class_counts(q, x, primes, classes);
    std::vector<int64_t> slot(static_cast<std::size_t>(q), -1);
    for (std::size_t j = 0; j < classes.size(); ++j)
        slot[static_cast<std::size_t>(classes[j])] = static_cast<int64_t>(j);
    double li = x >= 2.0 ? log_integral(x) : 0.0;

    IdentityCheck check;
    check.lhs = char_sum_primes(chi, x, primes);

    KahanSum rhs, err_form;
    int64_t power = 1;  // g^v mod q
    int64_t half_shift = mod_pow(*g, phi / 2, q);
    for (int64_t v = 0; v < phi / 2; ++v) {
        int64_t lo = power;
        int64_t hi = lo * half_shift % q;  // g^(v + phi/2)
        Complex cv = chi.value(lo);
        int64_t diff = counts[static_cast<std::size_t>(slot[static_cast<std::size_t>(lo)])] -
                       counts[static_cast<std::size_t>(slot[static_cast<std::size_t>(hi)])];
        rhs.add(cv * static_cast<double>(diff));
        double e_lo = static_cast<double>(
                          counts[static_cast<std::size_t>(slot[static_cast<std::size_t>(lo)])]) -
                      li / static_cast<double>(phi);
        double e_hi = static_cast<double>(
                          counts[static_cast<std::size_t>(slot[static_cast<std::size_t>(hi)])]) -
                      li / static_cast<double>(phi);
        err_form.add(cv * (e_lo - e_hi));
        power = power * *g % q;
    }
    check.rhs = rhs.value();
    check.error_form = err_form.value();
    check.difference = std::abs(check.lhs - check.rhs);
    check.tolerance = 1e-9 * (1.0 + static_cast<double>(primes.count_leq(std::max(x, 0.0))));
    check.pass = check.difference < check.tolerance;
    return check;
}

std::vector<OmegaPoint> omega_track(const DirichletCharacter& chi,
                                    std::span<const double> x_grid,
                                    const PrimeTable& primes) {
    std::vector<OmegaPoint> points;
    points.reserve(x_grid.size());
    for (double x : x_grid) {
        if (x < 100.0)
            throw std::domain_error("omega_track: grid points must be >= 100");
        OmegaPoint pt;
        pt.x = x;
        pt.t_value = char_sum_primes(chi, x, primes);
        pt.normalizer = std::sqrt(x) * std::log(std::log(std::log(x))) / std::log(x);
        pt.ratio = std::abs(pt.t_value) / pt.normalizer;
        points.push_back(pt);
    }
    return points;
}

}  // namespace charsum
