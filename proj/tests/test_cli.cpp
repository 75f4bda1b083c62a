#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "json.hpp"

#include "wavemorse/errors.hpp"
#include "wavemorse/potential_spec.hpp"

namespace fs = std::filesystem;
using namespace wavemorse;
constexpr double pi = std::numbers::pi;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("wavemorse_cli_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

int run(const std::string& args, const std::string& stdout_file = "/dev/null") {
    const std::string cmd =
        std::string(WAVEMORSE_BIN) + " " + args + " > " + stdout_file + " 2> /dev/null";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_cos_csv(const std::string& path, std::size_t n, bool skew_one_node = false) {
    std::ofstream out(path);
    out.precision(17);
    out << "t,u\n";
    for (std::size_t j = 0; j < n; ++j) {
        double t = -pi + 2.0 * pi * static_cast<double>(j) / static_cast<double>(n);
        if (skew_one_node && j == n / 2) t += 0.01;
        out << t << "," << std::cos(t) << "\n";
    }
}

std::vector<double> csv_values(const std::string& path) {
    std::ifstream in(path);
    std::vector<double> vals;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const char c = line[0];
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+')) continue;
        vals.push_back(std::stod(line.substr(line.find(',') + 1)));
    }
    return vals;
}

}  // namespace

TEST_CASE("potential grammar") {
    CHECK(parse_potential("const:2.5").function().max_value() == doctest::Approx(2.5));
    const auto trig = parse_potential("trig: 1 + 0.5 cos 2t", 64);
    CHECK(trig.function().coeff(2).real() == doctest::Approx(0.25).epsilon(1e-13));
    CHECK(trig.function().mean() == doctest::Approx(1.0).epsilon(1e-13));

    const auto f = parse_trig("-0.5 + cos t - 0.25 sin 3 t");
    CHECK(f.mean() == doctest::Approx(-0.5).epsilon(1e-13));
    CHECK(2.0 * f.coeff(1).real() == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(-2.0 * f.coeff(3).imag() == doctest::Approx(-0.25).epsilon(1e-13));

    CHECK_THROWS_AS(parse_potential("const:-1"), config_error);
    CHECK_THROWS_AS(parse_potential("trig: cos q"), config_error);
    CHECK_THROWS_AS(parse_potential("nonsense"), config_error);
    CHECK_THROWS_AS(parse_potential("file:/no/such/file.csv"), config_error);
    CHECK_THROWS_AS(parse_trig("1 + + cos t"), config_error);
}

TEST_CASE("hilbert command round trips cos to sin and back") {
    TempDir tmp;
    write_cos_csv(tmp.file("cos.csv"), 64);
    REQUIRE(run("hilbert --in " + tmp.file("cos.csv") + " --out " + tmp.file("cu.csv"),
                tmp.file("norms.json")) == 0);
    const auto vals = csv_values(tmp.file("cu.csv"));
    REQUIRE(vals.size() == 64);
    for (std::size_t j = 0; j < 64; ++j) {
        const double t = -pi + 2.0 * pi * static_cast<double>(j) / 64.0;
        CHECK(vals[j] == doctest::Approx(std::sin(t)).epsilon(1e-12));
    }
    const auto norms = nlohmann::json::parse(slurp(tmp.file("norms.json")));
    CHECK(norms.contains("config_hash"));
    CHECK(norms["norms"]["l2"].get<double>() == doctest::Approx(std::sqrt(pi)).epsilon(1e-12));

    // C(C(u)) = -u + mean(u): apply the command twice
    REQUIRE(run("hilbert --in " + tmp.file("cu.csv") + " --out " + tmp.file("ccu.csv")) == 0);
    const auto cc = csv_values(tmp.file("ccu.csv"));
    for (std::size_t j = 0; j < 64; ++j) {
        const double t = -pi + 2.0 * pi * static_cast<double>(j) / 64.0;
        CHECK(cc[j] == doctest::Approx(-std::cos(t)).epsilon(1e-12));
    }
}

TEST_CASE("commands do not mutate their inputs") {
    TempDir tmp;
    write_cos_csv(tmp.file("in.csv"), 32);
    const std::string before = slurp(tmp.file("in.csv"));
    REQUIRE(run("hilbert --in " + tmp.file("in.csv") + " --out " + tmp.file("o.csv")) == 0);
    CHECK(slurp(tmp.file("in.csv")) == before);
}

TEST_CASE("hilbert command rejects a nonuniform grid") {
    TempDir tmp;
    write_cos_csv(tmp.file("bad.csv"), 64, true);
    CHECK(run("hilbert --in " + tmp.file("bad.csv") + " --out " + tmp.file("x.csv")) == 2);
}

TEST_CASE("count command matches the closed-form diagonal spectrum") {
    TempDir tmp;
    REQUIRE(run("count --potential const:2.5 --m 16 --out " + tmp.file("r.json")) == 0);
    const auto r = nlohmann::json::parse(slurp(tmp.file("r.json")));
    CHECK(r["count"].get<int>() == 5);
    CHECK(r.contains("config_hash"));
    CHECK(r.contains("seed"));

    REQUIRE(run("count --potential const:0 --m 8 --out " + tmp.file("z.json")) == 0);
    CHECK(nlohmann::json::parse(slurp(tmp.file("z.json")))["count"].get<int>() == 0);
}

TEST_CASE("count command is stable across a truncation doubling") {
    TempDir tmp;
    REQUIRE(run("count --potential \"trig:1+cos t\" --m 64 --out " + tmp.file("a.json")) == 0);
    REQUIRE(run("count --potential \"trig:1+cos t\" --m 128 --out " + tmp.file("b.json")) == 0);
    const auto a = nlohmann::json::parse(slurp(tmp.file("a.json")));
    const auto b = nlohmann::json::parse(slurp(tmp.file("b.json")));
    CHECK(a["count"].get<int>() == b["count"].get<int>());
}

TEST_CASE("weyl command: usage and output shape") {
    TempDir tmp;
    CHECK(run("weyl --potential const:1") == 2);  // missing required --alphas
    REQUIRE(run("weyl --potential const:1 --alphas 10.5,20.5 --out " + tmp.file("w.csv")) == 0);
    const auto text = slurp(tmp.file("w.csv"));
    CHECK(text.find("alpha,m,count,ratio,target,deviation") != std::string::npos);
    CHECK(text.find("config_hash=") != std::string::npos);
    const auto counts = csv_values(tmp.file("w.csv"));  // second column = m, not used
    CHECK(text.find("\n10.5,") != std::string::npos);
}

TEST_CASE("branch command: empty grid gives a header-only file") {
    TempDir tmp;
    REQUIRE(run("branch --out " + tmp.file("b.jsonl")) == 0);
    std::istringstream lines(slurp(tmp.file("b.jsonl")));
    std::string line, first;
    int n = 0;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        if (n == 0) first = line;
        ++n;
    }
    CHECK(n == 1);
    const auto header = nlohmann::json::parse(first);
    CHECK(header["type"] == "header");
}

TEST_CASE("branch command is deterministic") {
    TempDir tmp;
    const std::string args = "branch --amplitudes 0.02,0.05 --m 32 ";
    REQUIRE(run(args + "--out " + tmp.file("one.jsonl")) == 0);
    REQUIRE(run(args + "--out " + tmp.file("two.jsonl")) == 0);
    CHECK(slurp(tmp.file("one.jsonl")) == slurp(tmp.file("two.jsonl")));
    CHECK(slurp(tmp.file("one.jsonl.csv")) == slurp(tmp.file("two.jsonl.csv")));
    CHECK(slurp(tmp.file("one.jsonl")).find("\"a\":0.02") != std::string::npos);
}

TEST_CASE("branch resume replays the recorded walk and continues identically") {
    TempDir tmp;
    const std::string m = " --m 32 ";
    REQUIRE(run("branch --amplitudes 0.02,0.05" + m + "--out " + tmp.file("full.jsonl")) == 0);
    REQUIRE(run("branch --amplitudes 0.02" + m + "--out " + tmp.file("part.jsonl")) == 0);
    REQUIRE(run("branch --resume " + tmp.file("part.jsonl") + " --amplitudes 0.05" + m +
                "--out " + tmp.file("res.jsonl")) == 0);
    auto records = [](const std::string& text) {
        std::istringstream is(text);
        std::string line, acc;
        bool first = true;
        while (std::getline(is, line)) {
            if (first) { first = false; continue; }  // headers differ by config hash
            acc += line + "\n";
        }
        return acc;
    };
    CHECK(records(slurp(tmp.file("full.jsonl"))) == records(slurp(tmp.file("res.jsonl"))));
}

TEST_CASE("branch accepts a fixed polynomial profile config") {
    TempDir tmp;
    {
        std::ofstream cfgf(tmp.file("poly.json"));
        cfgf << "{\"lambda_poly\": [1.2, -0.9, -0.1], \"rho\": 1.0}";
    }
    REQUIRE(run("branch --problem " + tmp.file("poly.json") + " --out " +
                tmp.file("p.jsonl")) == 0);
    std::istringstream lines(slurp(tmp.file("p.jsonl")));
    std::string header, record;
    std::getline(lines, header);
    std::getline(lines, record);
    const auto rec = nlohmann::json::parse(record);
    // base solution v = c with lambda(c) = 1: V = |lambda'(c)|/(2 lambda(c))
    CHECK(rec["nu"].get<double>() == doctest::Approx(0.9433981132).epsilon(1e-8));
    CHECK(rec["morse"].get<int>() == rec["n_minus_plotnikov"].get<int>());
}

TEST_CASE("config validation happens before any computation") {
    CHECK(run("count --potential const:1 --tol -1") == 2);
    CHECK(run("count --potential const:1 --grid 100") == 2);  // not a power of two
    CHECK(run("nonsense-subcommand") == 2);
    CHECK(run("--help") == 0);
}
