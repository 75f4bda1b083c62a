// wavemorse CLI: spectral transforms, negative-eigenvalue counts, Weyl
// sweeps, wave-branch continuation, and the self-check battery.
#include <bit>
#include <cmath>
#include <fstream>
#include <future>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "wavemorse/errors.hpp"
#include "wavemorse/galerkin.hpp"
#include "wavemorse/orlicz.hpp"
#include "wavemorse/potential_spec.hpp"
#include "wavemorse/report_io.hpp"
#include "wavemorse/waves.hpp"

namespace {

using namespace wavemorse;
constexpr double pi = std::numbers::pi;

struct CsvData {
    std::vector<double> t, u;
};

CsvData read_csv_samples(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open input file '" + path + "'");
    CsvData data;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (std::isalpha(static_cast<unsigned char>(line[0]))) continue;  // header
        const std::size_t comma = line.find(',');
        if (comma == std::string::npos)
            throw config_error("input row is not 't,value': '" + line + "'");
        try {
            data.t.push_back(std::stod(line.substr(0, comma)));
            data.u.push_back(std::stod(line.substr(comma + 1)));
        } catch (const std::exception&) {
            throw config_error("bad numeric row '" + line + "'");
        }
    }
    return data;
}

PeriodicFunction samples_from_csv(const CsvData& data) {
    const std::size_t n = data.t.size();
    if (n < 8) throw config_error("need at least 8 samples");
    const double h = 2.0 * pi / static_cast<double>(n);
    for (std::size_t j = 0; j + 1 < n; ++j) {
        const double spacing = data.t[j + 1] - data.t[j];
        if (std::abs(spacing - h) > 1e-9)
            throw config_error("nonuniform grid: spacing " + std::to_string(spacing) +
                               " at row " + std::to_string(j + 1) + ", expected " +
                               std::to_string(h));
    }
    if (std::abs(data.t.front() + pi) > 1e-9)
        throw config_error("grid must start at -pi (got " + std::to_string(data.t.front()) +
                           ")");
    try {
        return PeriodicFunction::from_samples(data.u);
    } catch (const resolution_error& e) {
        throw config_error(e.what());
    }
}

std::string function_to_csv(const PeriodicFunction& f, const std::string& stamp) {
    std::ostringstream os;
    os.precision(17);
    os << "# " << stamp << "\n";
    os << "t,value\n";
    for (std::size_t j = 0; j < f.size(); ++j) os << f.node(j) << "," << f.samples()[j] << "\n";
    return os.str();
}

std::string stamp_comment(const ExperimentConfig& cfg) {
    std::ostringstream os;
    os << "config_hash=" << std::hex << cfg.hash() << std::dec << " seed=" << cfg.seed;
    return os.str();
}

int cmd_hilbert(const ExperimentConfig& cfg) {
    const auto data = read_csv_samples(cfg.input);
    const auto u = samples_from_csv(data);
    const auto cu = u.hilbert();
    if (!cfg.out.empty()) {
        if (ensure_parent_directory(cfg.out))
            std::cerr << "note: created output directory for " << cfg.out << "\n";
        write_text_file(cfg.out, function_to_csv(cu, stamp_comment(cfg)));
    }
    nlohmann::json j = cfg.stamp();
    j["norms"] = {{"l2", u.l2_norm()},
                  {"l1", u.l1_norm()},
                  {"sup", u.sup_norm()},
                  {"h_half", u.h_half_norm()},
                  {"mean", u.mean()}};
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_count(const ExperimentConfig& cfg) {
    const int m_hint = cfg.m;
    const std::size_t grid =
        cfg.grid ? cfg.grid
                 : std::bit_ceil(std::max<std::size_t>(
                       256, 4 * static_cast<std::size_t>(std::max(m_hint, 1))));
    Potential v = parse_potential(cfg.potential, grid);
    int m = m_hint;
    if (m == 0) m = choose_truncation(v);
    const std::size_t need = std::bit_ceil(4 * static_cast<std::size_t>(m));
    if (v.function().size() < need) v = Potential(v.function().resampled(need));
    const CountReport rep = n_minus(v, m);
    nlohmann::json j = rep.to_json();
    j.update(cfg.stamp());
    if (!cfg.out.empty()) {
        if (ensure_parent_directory(cfg.out))
            std::cerr << "note: created output directory for " << cfg.out << "\n";
        write_text_file(cfg.out, j.dump(2) + "\n");
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_weyl(const ExperimentConfig& cfg) {
    if (cfg.alphas.empty()) throw config_error("weyl needs a nonempty --alphas list");
    const Potential v = parse_potential(cfg.potential, cfg.grid ? cfg.grid : 256);
    // independent parameter points run as concurrent tasks; the collector
    // below writes them in order
    std::vector<std::future<WeylReport>> tasks;
    for (double alpha : cfg.alphas)
        tasks.push_back(std::async(std::launch::async, [&v, alpha] {
            return weyl_slope(v, {alpha});
        }));
    WeylReport rep;
    for (auto& task : tasks) {
        WeylReport one = task.get();
        rep.rows.push_back(one.rows.front());
    }
    rep.final_deviation = rep.rows.back().deviation;
    const std::string csv = "# " + stamp_comment(cfg) + "\n" + rep.to_csv();
    if (!cfg.out.empty()) {
        if (ensure_parent_directory(cfg.out))
            std::cerr << "note: created output directory for " << cfg.out << "\n";
        write_text_file(cfg.out, csv);
    } else {
        std::cout << csv;
    }
    std::cerr << "final deviation: " << rep.final_deviation << "\n";
    return 0;
}

// A problem spec is either the built-in μ-family ("stokes") or a JSON
// config: {"family": "stokes"} for the family, or a fixed profile
// {"lambda_poly": [c0, c1, ...], "rho": r, "m1": ..., "m2": ...} whose
// base solution is solved and diagnosed as a single branch record.
struct ProblemSpec {
    std::optional<WaveFamily> family;
    std::optional<BernoulliProblem> fixed;
};

ProblemSpec problem_from_config(const ExperimentConfig& cfg) {
    if (cfg.problem == "stokes") return {stokes_family(), std::nullopt};
    std::ifstream in(cfg.problem);
    if (!in) throw config_error("unknown problem '" + cfg.problem +
                                "' (expected 'stokes' or a config file path)");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw config_error(std::string("bad problem config: ") + e.what());
    }
    if (j.value("family", "") == "stokes") {
        WaveFamily fam = stokes_family();
        if (j.contains("mu")) fam.initial_parameter = j["mu"].get<double>();
        return {fam, std::nullopt};
    }
    if (j.contains("lambda_poly")) {
        std::optional<double> m1, m2;
        if (j.contains("m1")) m1 = j["m1"].get<double>();
        if (j.contains("m2")) m2 = j["m2"].get<double>();
        BernoulliProblem p;
        try {
            p = polynomial_problem(j["lambda_poly"].get<std::vector<double>>(),
                                   j.value("rho", 1.0), m1, m2);
        } catch (const std::exception& e) {
            throw config_error(std::string("bad polynomial profile: ") + e.what());
        }
        return {std::nullopt, p};
    }
    throw config_error("problem config needs 'family' or 'lambda_poly'");
}

// Base solution of a fixed profile: v ≡ c with λ(c) = 1, refined by the
// fixed-problem Newton solve, then the standard diagnostics.
BranchPoint solve_fixed_profile(const BernoulliProblem& p, const ExperimentConfig& cfg) {
    // pick a level-1 crossing where the profile is admissible (λ' ≤ 0)
    double root = 0.0;
    bool found = false;
    double prev_t = -20.0, prev_v = p.lambda(prev_t) - 1.0;
    for (int i = 1; i <= 4000 && !found; ++i) {
        const double t = -20.0 + 40.0 * i / 4000.0;
        const double val = p.lambda(t) - 1.0;
        if (prev_v * val <= 0) {
            double a = prev_t, b = t, fa = prev_v;
            for (int it = 0; it < 200; ++it) {
                root = 0.5 * (a + b);
                const double fr = p.lambda(root) - 1.0;
                if (fa * fr > 0) {
                    a = root;
                    fa = fr;
                } else {
                    b = root;
                }
            }
            if (p.lambda_prime(root) <= 1e-12) found = true;
        }
        prev_t = t;
        prev_v = val;
    }
    if (!found)
        throw config_error("profile has no admissible level-1 crossing in [-20, 20]");
    NewtonOptions nopts;
    nopts.max_modes = cfg.m ? cfg.m : 32;
    BranchPoint point;
    point.solution = newton_solve_fixed(
        p, PeriodicFunction::constant(root, cfg.grid ? cfg.grid : 256), nopts);
    point.nu = nu_diagnostics(point.solution);
    point.morse = morse_index(point.solution, 24);
    point.checks = plotnikov_potential(point.solution);
    const int mq = choose_truncation(point.checks.potential);
    point.plotnikov = n_minus(point.checks.potential, mq);
    point.bounds = check_main_bounds(point.solution, point.nu, point.morse.index,
                                     point.plotnikov.v_l1, point.plotnikov.v_orlicz_b);
    return point;
}

int cmd_branch(const ExperimentConfig& cfg) {
    const ProblemSpec spec = problem_from_config(cfg);
    BranchOptions opts;
    if (cfg.m) opts.newton.max_modes = cfg.m;
    if (cfg.grid) opts.newton.grid = cfg.grid;
    opts.newton.tolerance = std::min(cfg.tol, 1e-10);
    if (!cfg.amplitudes.empty() && !cfg.steepness.empty())
        throw config_error("give either --amplitudes or --steepness, not both");

    // A resume re-walks the recorded targets deterministically (same seeds
    // and tolerances), then continues onto the new grid: the continuation
    // records come out bit-identical to a single longer run.
    bool steep_mode = !cfg.steepness.empty();
    std::vector<double> targets = steep_mode ? cfg.steepness : cfg.amplitudes;
    if (!cfg.resume.empty()) {
        std::ifstream in(cfg.resume);
        if (!in) throw config_error("cannot open resume file '" + cfg.resume + "'");
        std::string line;
        std::vector<double> prior;
        bool prior_steep = false;
        bool first = true;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(line);
            } catch (const std::exception& e) {
                throw config_error(std::string("bad resume record: ") + e.what());
            }
            if (first) {
                first = false;
                if (j.value("type", "") == "header") {
                    prior_steep = j.value("constraint", "amplitude") == "steepness";
                    continue;
                }
            }
            prior.push_back(prior_steep ? j.at("steepness").get<double>()
                                        : j.at("a").get<double>());
        }
        if (!targets.empty() && steep_mode != prior_steep)
            throw config_error("resume constraint kind differs from the requested grid");
        steep_mode = prior_steep;
        prior.insert(prior.end(), targets.begin(), targets.end());
        targets = std::move(prior);
    }

    Branch branch;
    WaveFamily family;
    if (spec.family) {
        family = *spec.family;
        branch = steep_mode ? branch_continuation_steepness(family, targets, opts)
                            : branch_continuation(family, targets, opts);
    } else {
        family.name = spec.fixed->name;
        branch.stop_reason = "fixed profile: base solution only";
        branch.points.push_back(solve_fixed_profile(*spec.fixed, cfg));
    }
    const bool steep_mode_final = steep_mode;

    std::ostringstream jsonl;
    nlohmann::json header = cfg.stamp();
    header["type"] = "header";
    header["family"] = family.name;
    header["constraint"] = steep_mode_final ? "steepness" : "amplitude";
    jsonl << header.dump() << "\n";
    for (const auto& pt : branch.points) jsonl << pt.to_json().dump() << "\n";

    std::ostringstream csv;
    csv.precision(17);
    csv << "# " << stamp_comment(cfg) << "\n";
    csv << "a,mu,residual,nu,nu0,morse,n_minus_plotnikov,m1_ratio,m2_ratio,m3_ratio,m4_ratio\n";
    for (const auto& pt : branch.points)
        csv << pt.solution.amplitude << "," << pt.solution.mu << ","
            << pt.solution.residual_norm << "," << pt.nu.nu << "," << pt.nu.nu0 << ","
            << pt.morse.index << "," << pt.plotnikov.count << "," << pt.bounds.m1_ratio
            << "," << pt.bounds.m2_ratio << "," << pt.bounds.m3_ratio << ","
            << pt.bounds.m4_ratio << "\n";

    if (!cfg.out.empty()) {
        if (ensure_parent_directory(cfg.out))
            std::cerr << "note: created output directory for " << cfg.out << "\n";
        write_text_file(cfg.out, jsonl.str());
        write_text_file(cfg.out + ".csv", csv.str());
    } else {
        std::cout << jsonl.str();
    }

    nlohmann::json summary = cfg.stamp();
    summary["points"] = branch.points.size();
    summary["stop_reason"] = branch.stop_reason;
    summary["nu_monotone"] = branch.nu_monotone;
    if (!branch.points.empty()) {
        double m1 = std::numeric_limits<double>::infinity(), m2 = 0;
        for (const auto& pt : branch.points) {
            m1 = std::min(m1, pt.bounds.m1_ratio);
            m2 = std::max(m2, pt.bounds.m2_ratio);
        }
        summary["fitted_m1"] = m1;
        summary["fitted_m2"] = m2;
    }
    std::cout << summary.dump(2) << "\n";
    return 0;
}

struct CheckCollector {
    nlohmann::json checks = nlohmann::json::array();
    bool all_passed = true;
    void add(const std::string& name, bool pass, const std::string& detail = "") {
        checks.push_back({{"name", name}, {"pass", pass}, {"detail", detail}});
        all_passed = all_passed && pass;
        std::cout << (pass ? "PASS " : "FAIL ") << name
                  << (detail.empty() ? "" : " (" + detail + ")") << "\n";
    }
};

int cmd_verify(const ExperimentConfig& cfg) {
    CheckCollector col;
    std::mt19937_64 rng(cfg.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    {  // spectral identities
        double worst = 0;
        for (int rep = 0; rep < 20; ++rep) {
            PeriodicFunction u = PeriodicFunction::constant(gauss(rng), 128);
            for (int k = 1; k <= 20; ++k)
                u += PeriodicFunction::harmonic(k, gauss(rng), gauss(rng), 128);
            const auto cc = u.hilbert().hilbert();
            for (std::size_t j = 0; j < u.size(); ++j)
                worst = std::max(worst,
                                 std::abs(cc.samples()[j] + u.samples()[j] - u.mean()));
            const auto cd = u.conjugate_derivative();
            for (int k = 0; k <= 21; ++k)
                worst = std::max(worst, std::abs(cd.coeff(k) -
                                                 static_cast<double>(k) * u.coeff(k)));
        }
        col.add("spectral identities", worst <= 1e-12, "max error " + std::to_string(worst));
    }

    {  // Orlicz machinery
        bool sandwich = true;
        for (int rep = 0; rep < 20; ++rep) {
            PeriodicFunction f = PeriodicFunction::constant(gauss(rng), 64);
            for (int k = 1; k <= 5; ++k)
                f += PeriodicFunction::harmonic(k, gauss(rng), gauss(rng), 64);
            const auto d = SampledDensity::from_periodic(f);
            for (const NFunction* psi : {&NFunction::A(), &NFunction::B()}) {
                const double lux = luxemburg_norm(d, *psi);
                const double orl = orlicz_norm(d, *psi);
                sandwich = sandwich && orl >= lux * (1.0 - 1e-8) &&
                           orl <= 2.0 * lux * (1.0 + 1e-8);
            }
        }
        col.add("luxemburg/orlicz sandwich", sandwich);

        double lo = 0.0, hi = 2.0;  // root of e^s - 1 - s = 1/(2π)
        for (int i = 0; i < 100; ++i) {
            const double mid = 0.5 * (lo + hi);
            (std::expm1(mid) - mid < 1.0 / (2.0 * pi) ? lo : hi) = mid;
        }
        const double expected = 2.0 * pi * hi;
        const double got =
            orlicz_norm(SampledDensity::constant(1.0, -pi, pi), NFunction::B());
        col.add("unit density B norm", std::abs(got - expected) <= 2e-6,
                "value " + std::to_string(got));

        bool elem = true;
        for (double e = -6.0; e <= 3.0; e += 0.1) {
            const auto r = check_elem_bounds(std::pow(10.0, e));
            elem = elem && r.lhs <= r.mid + 1e-15 && r.mid <= r.rhs + 1e-15;
        }
        col.add("elementary B bounds", elem);

        bool zyg = true;
        for (int rep = 0; rep < 10; ++rep) {
            PeriodicFunction p = PeriodicFunction::constant(gauss(rng), 128);
            for (int k = 1; k <= 5; ++k)
                p += PeriodicFunction::harmonic(k, gauss(rng), gauss(rng), 128);
            const auto r = zygmund_check(product(p, p));
            zyg = zyg && r.positive_bound_holds;
        }
        col.add("zygmund positive bound", zyg);
    }

    {  // exact counts and the N >= 1 observation
        bool exact = true;
        for (double alpha : {0.5, 2.5}) {
            const auto rep = n_minus(
                Potential(PeriodicFunction::constant(alpha, 256)), 32);
            exact = exact && rep.count == 2 * static_cast<int>(std::floor(alpha)) + 1;
        }
        col.add("exact constant counts", exact);

        bool at_least_one = true;
        for (const auto& v : random_potential_ensemble(5, rng(), 3, 0.4, 4.0))
            at_least_one = at_least_one && n_minus(v, 32).count >= 1;
        col.add("N >= 1 for nonzero potentials", at_least_one);
    }

    {  // Weyl slope at desk scale
        const auto rep =
            weyl_slope(Potential(PeriodicFunction::constant(1.0, 512)), {25.0});
        col.add("weyl desk scale", rep.final_deviation <= 0.05,
                "deviation " + std::to_string(rep.final_deviation));
    }

    {  // covering
        bool ok = true;
        for (int rep = 0; rep < 5; ++rep) {
            PeriodicFunction p = PeriodicFunction::constant(gauss(rng), 64);
            for (int k = 1; k <= 4; ++k)
                p += PeriodicFunction::harmonic(k, gauss(rng), gauss(rng), 64);
            const auto v = SampledDensity::from_periodic(product(p, p));
            for (int n : {2, 4, 8}) {
                const auto part = solomyak_partition(v, n);
                ok = ok && static_cast<int>(part.intervals.size()) <= n;
                for (const auto& iv : part.intervals)
                    ok = ok && iv.averaged_b_norm <= part.target + 1e-8;
            }
        }
        col.add("solomyak covering", ok);
    }

    {  // wave solver battery
        const auto p = stokes_problem(0.7);
        PeriodicFunction v = PeriodicFunction::constant(0.01 * gauss(rng), 128);
        for (int k = 1; k <= 5; ++k)
            v += PeriodicFunction::harmonic(k, 0.03 * gauss(rng) / (k * k), 0.0, 128);
        PeriodicFunction u = PeriodicFunction::constant(gauss(rng), 128);
        for (int k = 1; k <= 5; ++k)
            u += PeriodicFunction::harmonic(k, gauss(rng), gauss(rng), 128);
        const double pairing = product(euler_lagrange_residual(v, p), u).integral();
        const double h = 1e-6;
        PeriodicFunction vp = v, vm = v;
        vp += h * u;
        vm += (-h) * u;
        const double fd = (functional_value(vp, p) - functional_value(vm, p)) / (2.0 * h);
        col.add("gradient finite differences",
                std::abs(fd - pairing) <= 1e-5 * (1.0 + std::abs(pairing)));

        bool morse_ok = true;
        for (double mu : {0.8, 1.5, 2.3}) {
            WaveSolution triv;
            triv.problem = stokes_problem(mu);
            triv.mu = mu;
            triv.v = PeriodicFunction::zero(64);
            morse_ok = morse_ok &&
                       morse_index(triv, 8).index == 2 * static_cast<int>(mu) + 1;
        }
        col.add("trivial branch morse index", morse_ok);

        NewtonOptions nopts;
        nopts.max_modes = 32;
        const auto sol = newton_solve_amplitude(stokes_family(), 1.0,
                                                PeriodicFunction::zero(128), 0.01, nopts);
        const bool small_ok =
            sol.residual_norm <= 1e-10 * (1.0 + sol.v.l2_norm()) &&
            std::abs((sol.mu - 1.0) / (0.01 * 0.01) + 1.0) <= 0.1;
        col.add("small amplitude wave", small_ok,
                "mu - 1 = " + std::to_string(sol.mu - 1.0));
    }

    {  // a short branch with the transformation consistency
        BranchOptions bopts;
        bopts.newton.max_modes = 48;
        bopts.hessian_modes = 16;
        const auto branch =
            branch_continuation(stokes_family(), {0.03, 0.06, 0.09}, bopts);
        bool ok = branch.points.size() == 3;
        for (const auto& pt : branch.points)
            ok = ok && pt.morse.index == pt.plotnikov.count && pt.checks.positive &&
                 pt.checks.l1_bound_holds && pt.checks.sup_bound_holds;
        col.add("branch transformation consistency", ok);
    }

    nlohmann::json summary = cfg.stamp();
    summary["checks"] = col.checks;
    summary["passed"] = col.all_passed;
    const std::string path = cfg.out.empty() ? "verify_summary.json" : cfg.out;
    if (ensure_parent_directory(path))
        std::cerr << "note: created output directory for " << path << "\n";
    write_text_file(path, summary.dump(2) + "\n");
    std::cout << (col.all_passed ? "verify: PASS" : "verify: FAIL") << "\n";
    return col.all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"wavemorse: steady water waves, Morse indices, and eigenvalue counts"};
    app.require_subcommand(1);

    ExperimentConfig cfg;
    std::string alphas_text, amplitudes_text, steepness_text;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--m", cfg.m, "Galerkin truncation (0 = automatic)");
        sub->add_option("--grid", cfg.grid, "grid size (power of two, 0 = automatic)");
        sub->add_option("--tol", cfg.tol, "tolerance");
        sub->add_option("--seed", cfg.seed, "64-bit seed recorded in every output");
        sub->add_option("--out", cfg.out, "output path");
    };

    CLI::App* hilbert = app.add_subcommand("hilbert", "conjugate function of a sampled profile");
    hilbert->add_option("--in", cfg.input, "CSV of t,u on the uniform grid")->required();
    add_common(hilbert);

    CLI::App* count = app.add_subcommand("count", "negative eigenvalue count of the reduced form");
    count->add_option("--potential", cfg.potential, "potential spec (const:c | trig:... | file:path)")
        ->required();
    add_common(count);

    CLI::App* weyl = app.add_subcommand("weyl", "scaling sweep of the counting function");
    weyl->add_option("--potential", cfg.potential, "potential spec")->required();
    weyl->add_option("--alphas", alphas_text, "comma list or start:stop:step")->required();
    add_common(weyl);

    CLI::App* branch = app.add_subcommand("branch", "continuation of the wave branch");
    branch->add_option("--problem", cfg.problem, "'stokes' or a problem config file");
    branch->add_option("--resume", cfg.resume,
                       "prior branch JSONL; its walk is replayed deterministically");
    branch->add_option("--amplitudes", amplitudes_text,
                       "first-cosine-coefficient grid, comma list or start:stop:step");
    branch->add_option("--steepness", steepness_text,
                       "crest-to-trough half-height grid (fold-robust alternative)");
    add_common(branch);

    CLI::App* verify = app.add_subcommand("verify", "run the invariant battery at desk scale");
    add_common(verify);

    try {
        app.parse(argc, argv);
        cfg.alphas = parse_value_list(alphas_text);
        cfg.amplitudes = parse_value_list(amplitudes_text);
        cfg.steepness = parse_value_list(steepness_text);
        if (hilbert->parsed()) cfg.command = "hilbert";
        if (count->parsed()) cfg.command = "count";
        if (weyl->parsed()) cfg.command = "weyl";
        if (branch->parsed()) cfg.command = "branch";
        if (verify->parsed()) cfg.command = "verify";
        cfg.validate();
        if (hilbert->parsed()) return cmd_hilbert(cfg);
        if (count->parsed()) return cmd_count(cfg);
        if (weyl->parsed()) return cmd_weyl(cfg);
        if (branch->parsed()) return cmd_branch(cfg);
        if (verify->parsed()) return cmd_verify(cfg);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
