#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "charsum/cli.hpp"

using namespace charsum;

namespace {

struct CliResult {
    int status;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::vector<const char*> argv;
    argv.push_back("charsum");
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int status = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("no arguments prints usage and exits 2") {
    CliResult r = run({});
    CHECK(r.status == 2);
    CHECK(r.err.find("Usage") != std::string::npos);
}

TEST_CASE("--help exits 0 and lists every subcommand") {
    CliResult r = run({"--help"});
    CHECK(r.status == 0);
    for (const char* name : {"primes", "chars", "sum", "window", "verify", "race"})
        CHECK(r.out.find(name) != std::string::npos);
}

TEST_CASE("unknown flags are usage errors") {
    CHECK(run({"verify", "--kind", "pv", "--bogus"}).status == 2);
    CHECK(run({"nonsense"}).status == 2);
    CHECK(run({"verify", "--kind", "unheard-of", "--q-max", "10"}).status == 2);
}

TEST_CASE("primes subcommand") {
    CliResult r = run({"primes", "--limit", "10"});
    CHECK(r.status == 0);
    CHECK(r.out == "index,prime\n0,2\n1,3\n2,5\n3,7\n");

    CliResult pi = run({"primes", "--limit", "100", "--pi", "100"});
    CHECK(pi.status == 0);
    CHECK(pi.out.find("100,25") != std::string::npos);

    CliResult cls = run({"primes", "--limit", "100", "--pi", "100", "--class", "1",
                         "--mod", "4"});
    CHECK(cls.status == 0);
    CHECK(cls.out.find("100,1,4,11") != std::string::npos);

    CHECK(run({"primes", "--limit", "100", "--pi", "100", "--class", "2", "--mod", "4"})
              .status == 2);
}

TEST_CASE("chars table export") {
    CliResult r = run({"chars", "--q", "4"});
    CHECK(r.status == 0);
    CHECK(r.out.find("index,n,num,den\n") == 0);
    CHECK(r.out.find("1,3,1,2") != std::string::npos);

    CliResult j = run({"--format", "json", "chars", "--q", "4"});
    CHECK(j.status == 0);
    CHECK(j.out.find("\"phi\": 2") != std::string::npos);
}

TEST_CASE("sum subcommand point values") {
    CliResult t = run({"sum", "--kind", "T", "--q", "3", "--chi", "1", "--x", "100"});
    CHECK(t.status == 0);
    CHECK(t.out.find("3,1,100,-2,") != std::string::npos);

    CliResult rho = run({"sum", "--kind", "rho", "--q", "5", "--chi", "2", "--t", "1"});
    CHECK(rho.status == 0);
    CHECK(rho.out.find("5,2,1,1.6180339887") != std::string::npos);

    CliResult tau = run({"sum", "--kind", "tau", "--q", "5", "--chi", "2", "--a", "1"});
    CHECK(tau.status == 0);
    CHECK(tau.out.find("5,2,1,2.2360679") != std::string::npos);
}

TEST_CASE("verify pv sweep exits clean with no violations") {
    CliResult r = run({"verify", "--kind", "pv", "--q-max", "100"});
    CHECK(r.status == 0);
    CHECK(r.out.find("q,chi_index,kind,observed,arg_x,bound,ratio,violation\n") == 0);
    // every row ends with ,0 (no violations)
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);  // header
    while (std::getline(lines, line)) {
        REQUIRE(!line.empty());
        CHECK(line.substr(line.size() - 2) == ",0");
    }
}

TEST_CASE("verify identities randomized suite") {
    CliResult r = run({"verify", "--kind", "identities", "--instances", "10", "--q-max",
                       "50", "--x-max", "5000"});
    CHECK(r.status == 0);
    CHECK(r.out.find("label,") == 0);
}

TEST_CASE("race sign changes finds 26861") {
    CliResult r = run({"race", "--q", "4", "--x-max", "30000", "--sign-changes", "1,3"});
    CHECK(r.status == 0);
    CHECK(r.out.find("4,1,3,30000,26861,") != std::string::npos);
}

TEST_CASE("output file and determinism across thread counts") {
    std::string path = "cli_test_output.csv";
    CliResult a = run({"--out", path, "--threads", "1", "verify", "--kind", "pv",
                       "--q-max", "40"});
    CHECK(a.status == 0);
    std::ifstream in1(path);
    std::stringstream buf1;
    buf1 << in1.rdbuf();

    CliResult b = run({"--out", path, "--threads", "4", "verify", "--kind", "pv",
                       "--q-max", "40"});
    CHECK(b.status == 0);
    std::ifstream in2(path);
    std::stringstream buf2;
    buf2 << in2.rdbuf();

    CHECK(buf1.str() == buf2.str());
    CHECK(!buf1.str().empty());
    std::remove(path.c_str());

    CHECK(run({"--out", "/nonexistent-dir/x.csv", "primes", "--limit", "10"}).status == 1);
}

TEST_CASE("sum series over a grid") {
    CliResult r = run({"sum", "--kind", "S", "--q", "7", "--chi", "1", "--x-grid",
                       "1,7,14"});
    CHECK(r.status == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "q,chi_index,x,re,im,abs");
    int rows = 0;
    while (std::getline(lines, line)) ++rows;
    CHECK(rows == 3);

    // every character of the modulus, one header
    CliResult all = run({"sum", "--kind", "S", "--q", "5", "--chi-select", "all",
                         "--x", "5"});
    CHECK(all.status == 0);
    std::istringstream all_lines(all.out);
    int headers = 0, data_rows = 0;
    while (std::getline(all_lines, line)) {
        if (line.rfind("q,", 0) == 0) ++headers;
        else ++data_rows;
    }
    CHECK(headers == 1);
    CHECK(data_rows == 4);

    // JSON mode aggregates every character into one valid document
    CliResult j = run({"--format", "json", "sum", "--kind", "S", "--q", "5",
                       "--chi-select", "all", "--x", "5"});
    CHECK(j.status == 0);
    CHECK(j.out.front() == '[');

    CliResult jr = run({"--format", "json", "sum", "--kind", "rho", "--q", "5",
                        "--chi-select", "odd", "--t", "1"});
    CHECK(jr.status == 0);
    CHECK(jr.out.front() == '[');
}

TEST_CASE("window subcommand") {
    CliResult c = run({"window", "--q", "100", "--coeffs", "--M", "0", "--N", "30",
                       "--K", "4"});
    CHECK(c.status == 0);
    CHECK(c.out.find("m,a,b\n0,0.3,0\n") == 0);

    CliResult t = run({"window", "--q", "11", "--tail", "--K", "4", "--m-cap", "5"});
    CHECK(t.status == 0);
    CHECK(t.out.find("q,K,m_cap,total,ratio\n") == 0);

    CliResult rec = run({"window", "--q", "101", "--recon", "--chi", "50", "--x", "50",
                         "--k-min", "16", "--k-max", "64"});
    CHECK(rec.status == 0);
    CHECK(rec.out.find("q,chi_index,x,K,residual_abs,tail_bound_ratio\n") == 0);
}
