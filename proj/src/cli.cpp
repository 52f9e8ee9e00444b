#include "charsum/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "charsum/parallel.hpp"

namespace charsum {

namespace {

std::vector<double> parse_grid(const std::string& spec) {
    std::vector<double> grid;
    if (spec.find(':') != std::string::npos) {
        // start:stop:count, linear spacing
        double start = 0, stop = 0;
        long count = 0;
        char c1 = 0, c2 = 0;
        std::istringstream in(spec);
        in >> start >> c1 >> stop >> c2 >> count;
        if (!in || c1 != ':' || c2 != ':' || count < 1 || !(stop >= start))
            throw std::domain_error("bad grid spec, expected start:stop:count");
        if (count == 1) {
            grid.push_back(start);
        } else {
            double step = (stop - start) / static_cast<double>(count - 1);
            for (long i = 0; i < count; ++i)
                grid.push_back(start + step * static_cast<double>(i));
        }
    } else {
        std::istringstream in(spec);
        std::string item;
        while (std::getline(in, item, ',')) grid.push_back(std::stod(item));
    }
    if (grid.empty()) throw std::domain_error("empty grid spec");
    return grid;
}

std::vector<DirichletCharacter> select_characters(const CharacterGroup& group,
                                                  const RunConfig& config) {
    std::vector<DirichletCharacter> selected;
    if (config.chi_index >= 0) {
        selected.push_back(group.character(config.chi_index));
        return selected;
    }
    std::string mode = config.chi_select.empty() ? "all" : config.chi_select;
    for (int64_t i = 0; i < group.phi(); ++i) {
        DirichletCharacter chi = group.character(i);
        if (mode == "all") {
            selected.push_back(chi);
        } else if (mode == "odd") {
            if (chi.is_odd()) selected.push_back(chi);
        } else if (mode == "primitive") {
            if (chi.is_primitive() && !chi.is_principal()) selected.push_back(chi);
        } else {
            throw std::domain_error("unknown character selector: " + mode);
        }
    }
    return selected;
}

int with_output(const RunConfig& config, std::ostream& out, std::ostream& err,
                const std::function<void(std::ostream&)>& body) {
    if (config.out_path.empty()) {
        body(out);
        return out.good() ? 0 : 1;
    }
    std::ofstream file(config.out_path);
    if (!file) {
        err << "error: cannot open output path: " << config.out_path << "\n";
        return 1;
    }
    body(file);
    file.flush();
    if (!file.good()) {
        err << "error: write failed: " << config.out_path << "\n";
        return 1;
    }
    return 0;
}

int cmd_primes(const RunConfig& config, std::ostream& out, std::ostream& err) {
    PrimeTable table = sieve_primes(config.limit);
    return with_output(config, out, err, [&](std::ostream& os) {
        if (config.pi_x >= 0) {
            if (config.cls >= 0) {
                os << "x,class,mod,count\n";
                os << format_real(config.pi_x) << ',' << config.cls << ',' << config.cls_mod
                   << ',' << prime_pi(table, config.pi_x, config.cls, config.cls_mod) << '\n';
            } else {
                os << "x,count\n";
                os << format_real(config.pi_x) << ',' << prime_pi(table, config.pi_x) << '\n';
            }
            return;
        }
        os << "index,prime\n";
        auto ps = table.primes();
        for (std::size_t i = 0; i < ps.size(); ++i) os << i << ',' << ps[i] << '\n';
    });
}

int cmd_chars(const RunConfig& config, std::ostream& out, std::ostream& err) {
    CharacterGroup group = CharacterGroup::build(config.q);
    return with_output(config, out, err, [&](std::ostream& os) {
        if (config.format == ReportFormat::Csv) {
            write_character_table_csv(os, group);
            return;
        }
        nlohmann::ordered_json j;
        j["q"] = group.modulus();
        j["phi"] = group.phi();
        j["characters"] = nlohmann::ordered_json::array();
        for (int64_t i = 0; i < group.phi(); ++i) {
            DirichletCharacter chi = group.character(i);
            nlohmann::ordered_json cj;
            cj["index"] = i;
            cj["order"] = chi.order();
            cj["odd"] = chi.is_odd();
            cj["conductor"] = chi.conductor();
            cj["primitive"] = chi.is_primitive();
            nlohmann::ordered_json values = nlohmann::ordered_json::array();
            for (int64_t n = 1; n <= group.modulus(); ++n) {
                UnityExponent v = chi(n);
                values.push_back({{"n", n},
                                  {"num", v.is_zero() ? 0 : v.num()},
                                  {"den", v.is_zero() ? 0 : v.den()}});
            }
            cj["values"] = values;
            j["characters"].push_back(cj);
        }
        os << j.dump(2) << '\n';
    });
}

int cmd_sum(const RunConfig& config, std::ostream& out, std::ostream& err) {
    CharacterGroup group = CharacterGroup::build(config.q);
    std::vector<DirichletCharacter> chis = select_characters(group, config);

    if (config.kind == "S" || config.kind == "T" || config.kind == "decoupled") {
        std::vector<double> grid =
            config.x_grid.empty() ? std::vector<double>{config.x} : parse_grid(config.x_grid);
        std::sort(grid.begin(), grid.end());
        grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
        PrimeTable table;
        if (config.kind != "S") {
            table = sieve_primes(static_cast<int64_t>(std::ceil(grid.back())));
        }
        std::vector<SumSeries> all_series;
        for (const auto& chi : chis) {
            SumSeries series;
            if (config.kind == "S") {
                series = sum_series(chi, grid, SumKind::Integers);
            } else if (config.kind == "T") {
                series = sum_series(chi, grid, SumKind::Primes, &table);
            } else {
                series.q = config.q;
                series.chi_index = chi.index();
                series.kind = SumKind::Primes;
                series.grid = grid;
                for (double x : grid)
                    series.partial.push_back(decoupled_prime_sum(chi, x, table));
            }
            all_series.push_back(std::move(series));
        }
        return with_output(config, out, err, [&](std::ostream& os) {
            if (config.format == ReportFormat::Json) {
                nlohmann::ordered_json arr = nlohmann::ordered_json::array();
                for (const auto& series : all_series) {
                    std::ostringstream tmp;
                    write_sum_series(tmp, series, ReportFormat::Json);
                    arr.push_back(nlohmann::ordered_json::parse(tmp.str()));
                }
                os << arr.dump(2) << '\n';
                return;
            }
            bool first = true;
            for (const auto& series : all_series) {
                if (!first) {
                    // single header block: re-emit rows without the header
                    std::ostringstream tmp;
                    write_sum_series(tmp, series, ReportFormat::Csv);
                    std::string text = tmp.str();
                    os << text.substr(text.find('\n') + 1);
                } else {
                    write_sum_series(os, series, ReportFormat::Csv);
                }
                first = false;
            }
        });
    }

    if (config.kind == "rho" || config.kind == "tau") {
        PrimeTable table;
        if (config.kind == "rho") table = sieve_primes(config.q);
        const bool is_rho = config.kind == "rho";
        const int64_t param = is_rho ? config.t : config.a;
        std::vector<std::pair<int64_t, Complex>> rows;
        for (const auto& chi : chis)
            rows.emplace_back(chi.index(), is_rho ? prime_exp_sum(chi, config.t, table)
                                                  : gauss_sum(chi, config.a));
        return with_output(config, out, err, [&](std::ostream& os) {
            if (config.format == ReportFormat::Json) {
                nlohmann::ordered_json arr = nlohmann::ordered_json::array();
                for (const auto& [index, v] : rows)
                    arr.push_back({{"q", config.q},
                                   {"chi_index", index},
                                   {is_rho ? "t" : "a", param},
                                   {"re", v.real()},
                                   {"im", v.imag()},
                                   {"abs", std::abs(v)}});
                os << arr.dump(2) << '\n';
                return;
            }
            os << "q,chi_index," << (is_rho ? 't' : 'a') << ",re,im,abs\n";
            for (const auto& [index, v] : rows)
                os << config.q << ',' << index << ',' << param << ','
                   << format_real(v.real()) << ',' << format_real(v.imag()) << ','
                   << format_real(std::abs(v)) << '\n';
        });
    }
    throw std::domain_error("sum: unknown kind (expected S|T|rho|tau|decoupled)");
}

int cmd_window(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (config.do_coeffs) {
        WindowSpec spec = WindowSpec::make(config.window_M, config.window_N, config.q);
        FourierCoeffs coeffs = fourier_coeffs(spec, static_cast<std::size_t>(config.K));
        return with_output(config, out, err,
                           [&](std::ostream& os) { write_fourier_coeffs(os, coeffs, config.format); });
    }
    if (config.do_tail) {
        int64_t m_cap = config.m_cap > 0 ? config.m_cap : 8 * std::max(config.q, config.K);
        TailSineSum tail = tail_sine_sum(config.q, config.K, m_cap);
        return with_output(config, out, err, [&](std::ostream& os) {
            os << "q,K,m_cap,total,ratio\n";
            os << config.q << ',' << config.K << ',' << m_cap << ','
               << format_real(tail.total) << ',' << format_real(tail.ratio) << '\n';
        });
    }
    if (config.do_recon) {
        CharacterGroup group = CharacterGroup::build(config.q);
        if (config.chi_index < 0)
            throw std::domain_error("window --recon needs --chi");
        if (config.k_min < 1 || config.k_max < config.k_min)
            throw std::domain_error("window --recon needs 1 <= k-min <= k-max");
        DirichletCharacter chi = group.character(config.chi_index);
        PrimeTable table = sieve_primes(config.q);
        std::vector<WindowDecayRow> rows;
        for (int64_t K = config.k_min; K <= config.k_max; K *= 2) {
            Reconstruction rec = windowed_prime_reconstruction(
                chi, config.x, static_cast<std::size_t>(K), table);
            WindowDecayRow row;
            row.q = config.q;
            row.chi_index = chi.index();
            row.x = config.x;
            row.K = K;
            row.residual_abs = std::abs(rec.residual);
            double shape = static_cast<double>(config.q) / static_cast<double>(K + 1) *
                           std::log(static_cast<double>(K));
            row.tail_bound_ratio = row.residual_abs / shape;
            rows.push_back(row);
        }
        return with_output(config, out, err,
                           [&](std::ostream& os) { write_window_decay(os, rows, config.format); });
    }
    throw std::domain_error("window: choose one of --coeffs, --tail, --recon");
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (config.kind == "pv" || config.kind == "tmax" || config.kind == "rho" ||
        config.kind == "paley") {
        int64_t q_max = config.q_max > 0 ? config.q_max : config.q;
        if (q_max < 1) throw std::domain_error("verify: need --q-max (or --q)");
        std::vector<int64_t> q_set;
        for (int64_t q = std::max<int64_t>(1, config.q_min); q <= q_max; ++q)
            q_set.push_back(q);
        PrimeTable table = sieve_primes(q_max);
        BoundKind kind = config.kind == "pv"     ? BoundKind::PolyaVinogradov
                         : config.kind == "tmax" ? BoundKind::PrimeSumMax
                         : config.kind == "rho"  ? BoundKind::RhoNorm
                                                 : BoundKind::Paley;
        SweepOptions opts;
        opts.eps = config.eps;
        opts.threads = config.threads;
        BoundReport report = bound_sweep(q_set, kind, table, opts);
        return with_output(config, out, err, [&](std::ostream& os) {
            write_bound_report(os, report, config.format);
        });
    }

    if (config.kind == "means") {
        if (config.q < 3) throw std::domain_error("verify --kind means needs --q >= 3");
        int64_t cover = config.q;
        std::optional<HeathBrownParams> hb;
        if (config.hb_Q > 0) {
            hb = HeathBrownParams{config.hb_Q, config.alpha};
            cover = std::max(cover, config.hb_Q);
        }
        PrimeTable table = sieve_primes(cover);
        MeanValueStats stats = mean_value_stats(config.q, table, hb);
        return with_output(config, out, err, [&](std::ostream& os) {
            write_mean_stats(os, stats, config.format);
        });
    }

    if (config.kind == "identities") {
        int64_t q_max = config.q_max > 0 ? config.q_max : 200;
        double x_max = config.x_max > 0 ? config.x_max : 1e5;
        PrimeTable table = sieve_primes(static_cast<int64_t>(x_max));
        std::mt19937_64 rng(config.seed);
        std::uniform_int_distribution<int64_t> pick_q(3, q_max);
        std::uniform_real_distribution<double> pick_x(2.0, x_max);

        std::vector<IdentityCheck> checks;
        std::vector<std::string> labels;
        for (int64_t i = 0; i < config.instances; ++i) {
            int64_t q = pick_q(rng);
            CharacterGroup group = CharacterGroup::build(q);
            std::uniform_int_distribution<int64_t> pick_chi(0, group.phi() - 1);
            DirichletCharacter chi = group.character(pick_chi(rng));
            double x = pick_x(rng);
            checks.push_back(collapse_check(chi, x, table));
            labels.push_back("collapse:q=" + std::to_string(q) +
                             ":chi=" + std::to_string(chi.index()));
        }
        // moduli with a primitive root and at least one odd character
        auto pick_odd_character = [&]() -> DirichletCharacter {
            for (;;) {
                int64_t q = pick_q(rng);
                if (!primitive_root(q)) continue;
                CharacterGroup group = CharacterGroup::build(q);
                if (group.phi() < 2) continue;
                std::uniform_int_distribution<int64_t> pick_chi(1, group.phi() - 1);
                for (int tries = 0; tries < 64; ++tries) {
                    DirichletCharacter cand = group.character(pick_chi(rng));
                    if (cand.is_odd()) return cand;
                }
            }
        };
        for (int64_t i = 0; i < config.instances; ++i) {
            DirichletCharacter chi = pick_odd_character();
            double x = pick_x(rng);
            checks.push_back(pairing_check(chi, x, table));
            labels.push_back("pairing:q=" + std::to_string(chi.modulus()) +
                             ":chi=" + std::to_string(chi.index()));
        }

        if (config.tol_scale != 1.0) {
            if (!(config.tol_scale > 0))
                throw std::domain_error("verify: --tol-scale must be positive");
            for (auto& c : checks) {
                c.tolerance *= config.tol_scale;
                c.pass = c.difference < c.tolerance;
            }
        }
        bool all_pass = true;
        for (const auto& c : checks) all_pass = all_pass && c.pass;
        int io = with_output(config, out, err, [&](std::ostream& os) {
            write_identity_checks(os, checks, labels, config.format);
        });
        if (io != 0) return io;
        if (!all_pass) {
            err << "error: identity checks failed\n";
            return 1;
        }
        return 0;
    }
    throw std::domain_error(
        "verify: unknown kind (expected pv|tmax|rho|paley|identities|means)");
}

int cmd_race(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (config.q < 3) throw std::domain_error("race: need --q >= 3");
    if (!(config.x_max >= 2)) throw std::domain_error("race: need --x-max >= 2");
    PrimeTable table = sieve_primes(static_cast<int64_t>(config.x_max));

    if (!config.sign_classes.empty()) {
        auto comma = config.sign_classes.find(',');
        if (comma == std::string::npos)
            throw std::domain_error("race: --sign-changes expects a,b");
        int64_t a = std::stoll(config.sign_classes.substr(0, comma));
        int64_t b = std::stoll(config.sign_classes.substr(comma + 1));
        SignChangeRecord rec = sign_changes(config.q, a, b, config.x_max, table);
        return with_output(config, out, err, [&](std::ostream& os) {
            write_sign_changes(os, rec, config.format);
        });
    }

    GridStrategy strategy =
        config.grid == "geometric" ? GridStrategy::Geometric : GridStrategy::AllPrimes;
    RaceSeries series = race_series(config.q, config.x_max, strategy, table,
                                    config.geometric_factor);
    return with_output(config, out, err, [&](std::ostream& os) {
        write_race_series(os, series, config.format);
    });
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig config;
    std::string format_name = "csv";

    CLI::App app{"Dirichlet character sums over primes: exact character groups, "
                 "Gauss sums, bound sweeps, and prime races"};
    app.require_subcommand(1);
    app.fallthrough();

    app.add_option("--threads", config.threads,
                   "worker threads (default: CHARSUM_THREADS env or hardware)");
    app.add_option("--format", format_name, "output format: csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", config.out_path, "output path (default: stdout)");

    auto* primes = app.add_subcommand("primes", "sieve primes and count them");
    primes->add_option("--limit", config.limit, "sieve limit")->required();
    primes->add_option("--pi", config.pi_x, "report pi(x) instead of the prime list");
    primes->add_option("--class", config.cls, "count only p = class (mod --mod)");
    primes->add_option("--mod", config.cls_mod, "modulus for --class");

    auto* chars = app.add_subcommand("chars", "export a character table");
    chars->add_option("--q", config.q, "modulus")->required();

    auto* sum = app.add_subcommand("sum", "character and exponential sums");
    sum->add_option("--kind", config.kind, "S|T|rho|tau|decoupled")->required();
    sum->add_option("--q", config.q, "modulus")->required();
    sum->add_option("--chi", config.chi_index, "character index");
    sum->add_option("--chi-select", config.chi_select, "all|odd|primitive");
    sum->add_option("--x", config.x, "upper limit for S/T/decoupled");
    sum->add_option("--x-grid", config.x_grid, "grid: comma list or start:stop:count");
    sum->add_option("--t", config.t, "frequency for rho");
    sum->add_option("--a", config.a, "twist for tau");

    auto* window = app.add_subcommand("window", "window function machinery");
    window->add_option("--q", config.q, "modulus")->required();
    window->add_flag("--coeffs", config.do_coeffs, "emit Fourier coefficients");
    window->add_flag("--tail", config.do_tail, "truncated sine tail sums");
    window->add_flag("--recon", config.do_recon, "prime-sum reconstruction decay");
    window->add_option("--M", config.window_M, "left edge (coeffs)");
    window->add_option("--N", config.window_N, "right edge (coeffs)");
    window->add_option("--K", config.K, "truncation (coeffs/tail)");
    window->add_option("--m-cap", config.m_cap, "tail truncation (default 8*max(q,K))");
    window->add_option("--chi", config.chi_index, "character index (recon)");
    window->add_option("--x", config.x, "prime-sum limit (recon)");
    window->add_option("--k-min", config.k_min, "dyadic ladder start (recon)");
    window->add_option("--k-max", config.k_max, "dyadic ladder end (recon)");

    auto* verify = app.add_subcommand("verify", "sweeps, bounds and exact identities");
    verify->add_option("--kind", config.kind, "pv|tmax|rho|paley|identities|means")
        ->required();
    verify->add_option("--q", config.q, "single modulus (means)");
    verify->add_option("--q-min", config.q_min, "sweep start (default 3)");
    verify->add_option("--q-max", config.q_max, "sweep end");
    verify->add_option("--eps", config.eps, "exponent for tmax (default 0.1)");
    verify->add_option("--alpha", config.alpha, "mean-square exponent in (0,1]");
    verify->add_option("--hb-q", config.hb_Q, "conductor cap for the primitive-sum stat");
    verify->add_option("--instances", config.instances, "randomized identity instances");
    verify->add_option("--x-max", config.x_max, "identity x cap (default 1e5)");
    verify->add_option("--seed", config.seed, "randomized suite seed");
    verify->add_option("--tol-scale", config.tol_scale,
                       "multiplier on the identity-check tolerance (default 1)");

    auto* race = app.add_subcommand("race", "progression prime counts and races");
    race->add_option("--q", config.q, "modulus")->required();
    race->add_option("--x-max", config.x_max, "sweep limit")->required();
    race->add_option("--grid", config.grid, "primes|geometric");
    race->add_option("--factor", config.geometric_factor, "geometric grid factor");
    race->add_option("--sign-changes", config.sign_classes,
                     "track sign changes of pi(x,a,q)-pi(x,b,q); value a,b");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    config.format = format_name == "json" ? ReportFormat::Json : ReportFormat::Csv;
    if (config.threads == 0) config.threads = default_thread_count();

    try {
        if (primes->parsed()) {
            config.subcommand = "primes";
            return cmd_primes(config, out, err);
        }
        if (chars->parsed()) {
            config.subcommand = "chars";
            return cmd_chars(config, out, err);
        }
        if (sum->parsed()) {
            config.subcommand = "sum";
            return cmd_sum(config, out, err);
        }
        if (window->parsed()) {
            config.subcommand = "window";
            return cmd_window(config, out, err);
        }
        if (verify->parsed()) {
            config.subcommand = "verify";
            return cmd_verify(config, out, err);
        }
        if (race->parsed()) {
            config.subcommand = "race";
            return cmd_race(config, out, err);
        }
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace charsum
