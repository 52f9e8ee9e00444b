#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "charsum/report.hpp"

namespace charsum {

// Parsed command line. Values are validated against each operation's
// preconditions before any computation starts.
struct RunConfig {
    std::string subcommand;

    int64_t q = 0;
    int64_t q_min = 3;
    int64_t q_max = 0;
    int64_t chi_index = -1;
    std::string chi_select;  // "", "all", "odd", "primitive"

    std::string kind;
    double x = 0;
    std::string x_grid;
    int64_t t = 1;
    int64_t a = 1;
    double eps = 0.1;
    double alpha = 1.0;
    int64_t hb_Q = 0;

    int64_t limit = 0;
    double pi_x = -1;
    int64_t cls = -1;
    int64_t cls_mod = 0;

    int64_t window_M = 0;
    int64_t window_N = 0;
    int64_t K = 64;
    int64_t k_min = 16;
    int64_t k_max = 4096;
    int64_t m_cap = 0;
    bool do_coeffs = false;
    bool do_tail = false;
    bool do_recon = false;

    double x_max = 0;
    std::string grid = "primes";
    double geometric_factor = 1.25;
    std::string sign_classes;  // "a,b"

    int64_t instances = 200;
    uint64_t seed = 12345;
    double tol_scale = 1.0;

    std::size_t threads = 0;  // 0 = CHARSUM_THREADS env or hardware
    ReportFormat format = ReportFormat::Csv;
    std::string out_path;  // empty = stdout
};

// Exit status: 0 success, 1 identity-suite failure or I/O error, 2 usage.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace charsum
