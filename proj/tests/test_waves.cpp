#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "wavemorse/bernoulli.hpp"
#include "wavemorse/errors.hpp"
#include "wavemorse/waves.hpp"

#include "oracles.hpp"

using namespace wavemorse;
constexpr double pi = std::numbers::pi;

namespace {

WaveSolution fake_solution(const BernoulliProblem& p, const PeriodicFunction& v,
                           double mu = std::numeric_limits<double>::quiet_NaN()) {
    WaveSolution sol;
    sol.problem = p;
    sol.mu = mu;
    sol.v = v;
    sol.amplitude = 2.0 * v.coeff(1).real();
    return sol;
}

// Stokes residual in its expanded form, an independent route:
//   2Cv' - 2μv - 2μ·vCv' - 2μ·C(vv')
PeriodicFunction stokes_residual_expanded(const PeriodicFunction& v, double mu) {
    const auto cv = v.conjugate_derivative();
    const auto vcv = product(v, cv);
    const auto vvp = product(v, v.derivative());
    PeriodicFunction r = 2.0 * cv;
    r -= 2.0 * mu * v;
    r -= 2.0 * mu * vcv;
    r -= 2.0 * mu * vvp.hilbert();
    return r;
}

}  // namespace

TEST_CASE("problem validation") {
    const auto stokes = stokes_problem(0.8);
    const auto check = validate_problem(stokes, -0.3, 0.3);
    CHECK(check.passed());
    CHECK(stokes.p_exponent() == doctest::Approx(3.0));

    // λ(y) = e^{y²} is log-convex with λ' > 0 somewhere
    BernoulliProblem bad;
    bad.lambda = [](double y) { return std::exp(y * y); };
    bad.lambda_prime = [](double y) { return 2.0 * y * std::exp(y * y); };
    bad.Lambda = [](double y) { return y; };  // wrong primitive on purpose
    const auto bc = validate_problem(bad, -1.0, 1.0);
    CHECK_FALSE(bc.passed());
    CHECK_FALSE(bc.log_lambda_concave);
    CHECK(bc.primitive_defect > 1e-3);
}

TEST_CASE("functional: zero wave, monomial closed form, term-by-term oracle") {
    const auto p = stokes_problem(0.7);
    CHECK(functional_value(PeriodicFunction::zero(64), p) == doctest::Approx(0.0));

    for (double a : {0.05, 0.2, 0.5}) {
        const auto v = PeriodicFunction::harmonic(1, a, 0.0, 64);
        // term-by-term quadrature: ∫vCv' = πa², ∫v² = πa², ∫v²Cv' = 0
        const double t1 = product(v, v.conjugate_derivative()).integral();
        const double t2 = product(v, v).integral();
        const double t3 = product(product(v, v), v.conjugate_derivative()).integral();
        CHECK(t1 == doctest::Approx(pi * a * a).epsilon(1e-12));
        CHECK(t3 == doctest::Approx(0.0));
        const double expected = t1 - 0.7 * (t2 + t3);
        CHECK(functional_value(v, p) == doctest::Approx(expected).epsilon(1e-12));
        CHECK(functional_value(v, p) ==
              doctest::Approx(pi * a * a * (1.0 - 0.7)).epsilon(1e-12));
    }

    // J → 0 continuously as the wave shrinks
    double prev = std::abs(functional_value(PeriodicFunction::harmonic(1, 0.1, 0.0, 64), p));
    for (double a : {0.05, 0.02, 0.01}) {
        const double cur =
            std::abs(functional_value(PeriodicFunction::harmonic(1, a, 0.0, 64), p));
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("Stokes and Bernoulli functionals coincide for lambda = 1 - 2 mu y") {
    std::mt19937_64 rng(3);
    const double mu = 0.6;
    const auto stokes = stokes_problem(mu);
    const auto poly = polynomial_problem({1.0, -2.0 * mu}, 1.0, 2.0 * mu, 2.0 * mu);
    for (int rep = 0; rep < 5; ++rep) {
        const auto v = oracles::random_even(rng, 6, 64, 0.05);
        CHECK(functional_value(v, stokes) ==
              doctest::Approx(functional_value(v, poly)).epsilon(1e-13));
    }
}

TEST_CASE("residual: zero wave and the a cos t expansion") {
    const auto p = stokes_problem(0.9);
    CHECK(euler_lagrange_residual(PeriodicFunction::zero(64), p).sup_norm() <= 1e-14);

    const double a = 0.1, mu = 0.9;
    const auto r = euler_lagrange_residual(PeriodicFunction::harmonic(1, a, 0.0, 64), p);
    // closed form: 2a(1-μ)cos t - μa² - 2μa² cos 2t
    CHECK(r.coeff(0).real() == doctest::Approx(-mu * a * a).epsilon(1e-12));
    CHECK(2.0 * r.coeff(1).real() == doctest::Approx(2.0 * a * (1.0 - mu)).epsilon(1e-12));
    CHECK(2.0 * r.coeff(2).real() == doctest::Approx(-2.0 * mu * a * a).epsilon(1e-12));
    for (int k = 3; k <= 6; ++k) CHECK(std::abs(r.coeff(k)) <= 1e-13);
}

TEST_CASE("general residual agrees with the expanded Stokes route") {
    std::mt19937_64 rng(5);
    const double mu = 0.55;
    const auto stokes = stokes_problem(mu);
    const auto poly = polynomial_problem({1.0, -2.0 * mu}, 1.0);
    for (int rep = 0; rep < 8; ++rep) {
        const auto v = oracles::random_even(rng, 8, 128, 0.04);
        const auto r_general = euler_lagrange_residual(v, stokes);
        const auto r_poly = euler_lagrange_residual(v, poly);
        const auto r_expanded = stokes_residual_expanded(v, mu);
        double d1 = 0, d2 = 0;
        for (std::size_t j = 0; j < v.size(); ++j) {
            d1 = std::max(d1, std::abs(r_general.samples()[j] - r_poly.samples()[j]));
            d2 = std::max(d2, std::abs(r_general.samples()[j] - r_expanded.samples()[j]));
        }
        CHECK(d1 <= 1e-12);
        CHECK(d2 <= 1e-12);
    }
}

TEST_CASE("gradient consistency against finite differences") {
    std::mt19937_64 rng(7);
    const auto p = stokes_problem(0.7);
    for (int rep = 0; rep < 5; ++rep) {
        const auto v = oracles::random_even(rng, 6, 128, 0.05);
        const auto u = oracles::random_band_limited(rng, 6, 128);
        const auto r = euler_lagrange_residual(v, p);
        const double pairing = product(r, u).integral();
        const double h = 1e-6;
        const double fd = oracles::directional_fd(
            [&](double s) {
                PeriodicFunction w = v;
                w += s * u;
                return functional_value(w, p);
            },
            h);
        CHECK(fd == doctest::Approx(pairing).epsilon(1e-5));
    }
}

TEST_CASE("newton: the trivial branch is a fixed point") {
    const auto p = stokes_problem(0.5);
    NewtonOptions opts;
    opts.max_modes = 16;
    const auto sol = newton_solve_fixed(p, PeriodicFunction::zero(64), opts);
    CHECK(sol.v.sup_norm() <= 1e-13);
    CHECK(sol.residual_norm <= 1e-12);
    CHECK(std::isnan(sol.mu));
}

TEST_CASE("newton: small-amplitude wave against the perturbation expansion") {
    // second-order expansion of the branch through μ = 1:
    //   v = a cos t + a²(cos 2t - ½) + O(a³),  μ = 1 - a² + O(a⁴)
    const double a = 0.01;
    NewtonOptions opts;
    opts.max_modes = 32;
    const auto sol = newton_solve_amplitude(stokes_family(), 1.0,
                                            PeriodicFunction::zero(128), a, opts);
    CHECK(sol.residual_norm <= 1e-10 * (1.0 + sol.v.l2_norm()));
    CHECK(sol.amplitude == doctest::Approx(a).epsilon(1e-14));
    const double mu2 = (sol.mu - 1.0) / (a * a);
    CHECK(mu2 == doctest::Approx(-1.0).epsilon(0.1));
    // second-order shape
    CHECK(2.0 * sol.v.coeff(2).real() == doctest::Approx(a * a).epsilon(0.1));
    CHECK(sol.v.coeff(0).real() == doctest::Approx(-0.5 * a * a).epsilon(0.1));
}

TEST_CASE("newton: negative amplitude gives the half-period translate") {
    NewtonOptions opts;
    opts.max_modes = 32;
    const double a = 0.05;
    const auto plus = newton_solve_amplitude(stokes_family(), 1.0,
                                             PeriodicFunction::zero(128), a, opts);
    const auto minus = newton_solve_amplitude(stokes_family(), 1.0,
                                              PeriodicFunction::zero(128), -a, opts);
    CHECK(minus.mu == doctest::Approx(plus.mu).epsilon(1e-10));
    const std::size_t n = plus.v.size();
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t shifted = (j + n / 2) % n;
        CHECK(minus.v.samples()[j] ==
              doctest::Approx(plus.v.samples()[shifted]).epsilon(1e-9));
    }
}

TEST_CASE("hessian at the trivial solution is diagonal 2(|n| - mu)") {
    for (double mu : {0.8, 1.5}) {
        const auto sol = fake_solution(stokes_problem(mu), PeriodicFunction::zero(64), mu);
        const auto form = hessian_form(sol, 6);
        for (Eigen::Index i = 0; i < form.matrix.rows(); ++i) {
            for (Eigen::Index j = 0; j < form.matrix.cols(); ++j) {
                const double expected =
                    i == j ? 2.0 * (GalerkinForm::mode_of(i) - mu) : 0.0;
                CHECK(form.matrix(i, j) == doctest::Approx(expected).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("hessian consistency against second finite differences") {
    std::mt19937_64 rng(11);
    const double mu = 0.7;
    const auto p = stokes_problem(mu);
    const auto v = oracles::random_even(rng, 5, 128, 0.04);
    const auto sol = fake_solution(p, v, mu);
    const int m = 8;
    const auto form = hessian_form(sol, m);
    std::normal_distribution<double> g(0.0, 1.0);
    for (int rep = 0; rep < 5; ++rep) {
        // random direction with modes ≤ m, assembled in basis coordinates
        Eigen::VectorXd x(2 * m + 1);
        PeriodicFunction u = PeriodicFunction::zero(128);
        const double a0 = g(rng);
        x[0] = a0 * std::sqrt(2.0 * pi);
        u += PeriodicFunction::constant(a0, 128);
        for (int k = 1; k <= m; ++k) {
            const double ak = g(rng), bk = g(rng);
            x[2 * k - 1] = ak * std::sqrt(pi);
            x[2 * k] = bk * std::sqrt(pi);
            u += PeriodicFunction::harmonic(k, ak, bk, 128);
        }
        const double quad = x.dot(form.matrix * x);
        const double h = 1e-4;
        const double j0 = functional_value(v, p);
        PeriodicFunction vp = v, vm = v;
        vp += h * u;
        vm += (-h) * u;
        const double fd =
            (functional_value(vp, p) - 2.0 * j0 + functional_value(vm, p)) / (h * h);
        CHECK(fd == doctest::Approx(quad).epsilon(1e-4));
    }
}

TEST_CASE("morse index on the trivial branch is 2 floor(mu) + 1") {
    for (double mu : {0.8, 1.5, 2.3}) {
        const auto sol = fake_solution(stokes_problem(mu), PeriodicFunction::zero(64), mu);
        const auto rep = morse_index(sol, 8);
        CHECK(rep.index == 2 * static_cast<int>(std::floor(mu)) + 1);
        CHECK(rep.stable);
    }
}

TEST_CASE("small wave index by eigenvalue continuity through the bifurcation") {
    NewtonOptions opts;
    opts.max_modes = 32;
    const auto sol = newton_solve_amplitude(stokes_family(), 1.0,
                                            PeriodicFunction::zero(128), 0.01, opts);
    CHECK(sol.mu < 1.0);
    // Continuity from the trivial branch at μ = 1: the spectrum there is
    // {-2, 0, 0, 2, 2, ...}. Along the wave branch (which bends to μ < 1,
    // a subcritical pitchfork) the double zero splits into the exact
    // translation zero and the amplitude eigenvalue ≈ -4a² < 0, so the
    // index is 2: the n = 0 mode plus the amplitude mode.
    const auto rep = morse_index(sol, 16);
    CHECK(rep.index == 2);
    CHECK(rep.stable);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(hessian_form(sol, 32).matrix,
                                                      Eigen::EigenvaluesOnly);
    CHECK(es.eigenvalues()[1] == doctest::Approx(-4.0 * 0.01 * 0.01).epsilon(0.05));
    CHECK(std::abs(es.eigenvalues()[2]) <= 1e-10);  // translation mode
}

TEST_CASE("nu diagnostics: trivial values and the Stokes identity") {
    const auto trivial = fake_solution(stokes_problem(0.8), PeriodicFunction::zero(64), 0.8);
    const auto d = nu_diagnostics(trivial);
    CHECK(d.nu == doctest::Approx(1.6).epsilon(1e-12));
    CHECK(d.nu0 == doctest::Approx(1.0).epsilon(1e-12));

    NewtonOptions opts;
    opts.max_modes = 48;
    const auto sol = newton_solve_amplitude(stokes_family(), 1.0,
                                            PeriodicFunction::zero(256), 0.15, opts);
    const auto dw = nu_diagnostics(sol);
    // ν = 2μ·ν₀ for the Stokes profile
    CHECK(dw.nu == doctest::Approx(2.0 * sol.mu * dw.nu0).epsilon(1e-10));
    // the polished extremum can only beat the grid extremum
    double grid_nu = 0;
    for (double s : sol.v.samples())
        grid_nu = std::max(grid_nu, 2.0 * sol.mu / (1.0 - 2.0 * sol.mu * s));
    CHECK(dw.nu >= grid_nu - 1e-12);
}

TEST_CASE("plotnikov potential: trivial wave gives V = mu and matching counts") {
    const auto p = stokes_problem(0.8);
    NewtonOptions opts;
    opts.max_modes = 16;
    const auto sol = newton_solve_fixed(p, PeriodicFunction::zero(64), opts);
    WaveSolution with_mu = sol;
    with_mu.mu = 0.8;
    const auto rep = plotnikov_potential(with_mu);
    CHECK(rep.positive);
    for (double s : rep.potential.function().samples())
        CHECK(s == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(rep.l1_bound_holds);
    CHECK(rep.sup_bound_holds);

    const auto count = n_minus(rep.potential, 8);
    const auto morse = morse_index(with_mu, 8);
    CHECK(count.count == 1);
    CHECK(morse.index == 1);
}

TEST_CASE("main bound report on the trivial branch") {
    const auto sol = fake_solution(stokes_problem(0.8), PeriodicFunction::zero(64), 0.8);
    const auto d = nu_diagnostics(sol);
    const auto rep = check_main_bounds(sol, d, 1, 0.8 * 2 * pi, 1.0);
    CHECK(rep.upper_expr == doctest::Approx(1.6 * std::log(3.0)).epsilon(1e-12));
    CHECK(rep.lower_expr ==
          doctest::Approx(std::pow(std::log(2.6), 1.0 / 3.0)).epsilon(1e-12));
    CHECK(rep.m2_ratio == doctest::Approx(0.0));  // (M-1)₊ = 0
    CHECK(rep.upper_expr >= rep.morse - 1);
}

TEST_CASE("a short branch: records, monotone nu, matching counts") {
    BranchOptions opts;
    opts.newton.max_modes = 48;
    opts.hessian_modes = 16;
    const auto branch = branch_continuation(stokes_family(), {0.02, 0.05, 0.08, 0.11}, opts);
    REQUIRE(branch.points.size() == 4);
    CHECK(branch.nu_monotone);
    double prev_nu = 0;
    for (const auto& pt : branch.points) {
        CHECK(pt.solution.residual_norm <= 1e-10 * (1.0 + pt.solution.v.l2_norm()));
        CHECK(pt.nu.nu >= prev_nu);
        prev_nu = pt.nu.nu;
        CHECK(pt.morse.index == 2);
        CHECK(pt.plotnikov.count == pt.morse.index);
        CHECK(pt.checks.positive);
        CHECK(pt.checks.l1_bound_holds);
        CHECK(pt.checks.sup_bound_holds);
        CHECK(pt.bounds.m1_ratio > 0);
    }
    // records are JSON-serializable with the documented fields
    const auto j = branch.points[0].to_json();
    CHECK(j.contains("a"));
    CHECK(j.contains("mu"));
    CHECK(j.contains("nu"));
    CHECK(j.contains("morse"));
    CHECK(j.contains("n_minus_plotnikov"));
}

TEST_CASE("empty amplitude grid gives an empty branch") {
    const auto branch = branch_continuation(stokes_family(), {});
    CHECK(branch.points.empty());
}

TEST_CASE("steepness-constrained solve pins the crest-to-trough height") {
    NewtonOptions opts;
    opts.max_modes = 48;
    const double s = 0.12;
    const auto sol = newton_solve_steepness(stokes_family(), 1.0,
                                            PeriodicFunction::zero(256), s, opts);
    CHECK(sol.residual_norm <= 1e-10 * (1.0 + sol.v.l2_norm()));
    const double height = (sol.v.evaluate(0.0) - sol.v.evaluate(pi)) / 2.0;
    CHECK(height == doctest::Approx(s).epsilon(1e-12));
    // same wave as the amplitude-constrained solve at its amplitude
    const auto again = newton_solve_amplitude(stokes_family(), sol.mu, sol.v,
                                              sol.amplitude, opts);
    CHECK(again.mu == doctest::Approx(sol.mu).epsilon(1e-12));
}

TEST_CASE("steepness continuation passes the amplitude fold") {
    BranchOptions opts;
    opts.newton.max_modes = 64;
    opts.nu0_cap = 8.0;
    std::vector<double> grid;
    for (double s = 0.05; s <= 0.41; s += 0.05) grid.push_back(s);
    grid.push_back(0.42);  // ν₀ exceeds the cap here, ending the walk
    const auto br = branch_continuation_steepness(stokes_family(), grid, opts);
    REQUIRE(br.points.size() >= 8);
    CHECK(br.stop_reason == "nu0 cap reached");
    CHECK(br.points.back().nu.nu0 > 8.0);  // well past the amplitude fold
    for (const auto& pt : br.points) {
        CHECK(pt.morse.index == pt.plotnikov.count);
        CHECK(pt.checks.min_one_plus_cv > 0);
    }
}

TEST_CASE("transformed potential mass against the direct quadrature route") {
    // ∫C(g) dt = 0, so 2∫V = -∫ (λ'(v)/λ(v))(1 + Cv') dt; for the water-wave
    // profile λ' < 0 this is ∫ |λ'(v)|/λ(v) (1 + Cv') dt > 0
    NewtonOptions opts;
    opts.max_modes = 64;
    const auto sol = newton_solve_steepness(stokes_family(), 1.0,
                                            PeriodicFunction::zero(256), 0.25, opts);
    const auto rep = plotnikov_potential(sol);
    const auto vb = sol.v.resampled(512);
    const auto one_cv = vb.conjugate_derivative() + 1.0;
    double direct = 0;
    for (std::size_t j = 0; j < vb.size(); ++j) {
        const double lam = 1.0 - 2.0 * sol.mu * vb.samples()[j];
        direct += (2.0 * sol.mu / lam) * one_cv.samples()[j];
    }
    direct *= 2.0 * pi / static_cast<double>(vb.size()) / 2.0;
    CHECK(rep.v_l1 == doctest::Approx(direct).epsilon(1e-10));
}

TEST_CASE("json rejects inconsistent sample counts") {
    nlohmann::json j{{"n", 16}, {"samples", std::vector<double>(8, 0.0)}};
    CHECK_THROWS_AS(PeriodicFunction::from_json(j), std::invalid_argument);
}
