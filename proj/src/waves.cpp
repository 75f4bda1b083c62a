#include "wavemorse/waves.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <numbers>

#include "wavemorse/errors.hpp"

namespace wavemorse {

namespace {

constexpr double pi = std::numbers::pi;

std::size_t working_grid(const NewtonOptions& opts) {
    if (opts.grid) return opts.grid;
    return std::bit_ceil(std::max<std::size_t>(32, 4 * static_cast<std::size_t>(opts.max_modes)));
}

PeriodicFunction from_cosine_coeffs(const std::vector<double>& a, std::size_t grid) {
    const int m = static_cast<int>(a.size()) - 1;
    std::vector<std::complex<double>> c(static_cast<std::size_t>(2 * m + 1),
                                        std::complex<double>(0, 0));
    c[static_cast<std::size_t>(m)] = a[0];
    for (int k = 1; k <= m; ++k) {
        c[static_cast<std::size_t>(m + k)] = a[static_cast<std::size_t>(k)] / 2.0;
        c[static_cast<std::size_t>(m - k)] = a[static_cast<std::size_t>(k)] / 2.0;
    }
    return PeriodicFunction::from_coeffs(c, grid);
}

std::vector<double> cosine_coeffs(const PeriodicFunction& f, int m) {
    std::vector<double> a(static_cast<std::size_t>(m) + 1);
    a[0] = f.coeff(0).real();
    for (int k = 1; k <= m; ++k) a[static_cast<std::size_t>(k)] = 2.0 * f.coeff(k).real();
    return a;
}

// Pointwise data of v on the dealiasing grid, shared by the residual and
// the Jacobian assembly of one Newton iteration.
struct EvalContext {
    PeriodicFunction vp;        // v on the padded grid
    PeriodicFunction one_cv;    // 1 + Cv'
    PeriodicFunction vprime;    // v'
    std::vector<double> lam;    // λ(v)
    std::vector<double> lamp;   // λ'(v)
    double min_lambda = 0;
};

EvalContext make_context(const PeriodicFunction& v, const BernoulliProblem& p) {
    EvalContext ctx{v.resampled(2 * v.size()), PeriodicFunction(), PeriodicFunction(), {}, {}, 0};
    ctx.one_cv = ctx.vp.conjugate_derivative() + 1.0;
    ctx.vprime = ctx.vp.derivative();
    const auto& s = ctx.vp.samples();
    ctx.lam.resize(s.size());
    ctx.lamp.resize(s.size());
    double mn = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < s.size(); ++j) {
        ctx.lam[j] = p.lambda(s[j]);
        ctx.lamp[j] = p.lambda_prime(s[j]);
        mn = std::min(mn, ctx.lam[j]);
    }
    ctx.min_lambda = mn;
    return ctx;
}

PeriodicFunction residual_from_context(const EvalContext& ctx) {
    const std::size_t n = ctx.vp.size();
    std::vector<double> g(n), r(n);
    for (std::size_t j = 0; j < n; ++j) g[j] = ctx.lam[j] * ctx.vprime.samples()[j];
    const PeriodicFunction cg = PeriodicFunction::from_samples(std::move(g)).hilbert();
    for (std::size_t j = 0; j < n; ++j)
        r[j] = ctx.lam[j] * ctx.one_cv.samples()[j] + cg.samples()[j] - 1.0;
    return PeriodicFunction::from_samples(std::move(r));
}

// Linear constraint Σ w_k a_k = target on the cosine coefficients.
// Amplitude pins a_1; steepness pins Σ_{k odd} a_k = (v(0) - v(π))/2.
struct Constraint {
    enum Kind { Amplitude, Steepness } kind;
    double target;
    double weight(int k) const {
        if (kind == Amplitude) return k == 1 ? 1.0 : 0.0;
        return k % 2 == 1 ? 1.0 : 0.0;
    }
};

struct SolveSetup {
    const BernoulliProblem* problem;
    const WaveFamily* family;  // non-null for constrained solves with μ free
    Constraint constraint{Constraint::Amplitude, 0.0};
};

// The Jacobian in coefficient space. For u = cos kt,
//   δF[u] = P·u + λ(v)·k cos kt + C((λ(v)u)'),  P := λ'(v)(1 + Cv'),
// and with even weights P, L = λ(v) the cosine-coefficient entries are
// convolutions: row r, column k reads
//   J(0,k) = p_k + k·l_k
//   J(r,k) = p_{|r-k|} + p_{r+k} + (r + k)(l_{|r-k|} + l_{r+k}),  r ≥ 1,
// where p_m, l_m are the Fourier coefficients of P and L. This needs two
// transforms per iteration instead of one per column.
void fill_jacobian(const EvalContext& ctx, int m, Eigen::MatrixXd& jac) {
    const std::size_t n = ctx.vp.size();
    std::vector<double> pw(n), lw(n);
    for (std::size_t j = 0; j < n; ++j) {
        pw[j] = ctx.lamp[j] * ctx.one_cv.samples()[j];
        lw[j] = ctx.lam[j];
    }
    const PeriodicFunction pf = PeriodicFunction::from_samples(std::move(pw));
    const PeriodicFunction lf = PeriodicFunction::from_samples(std::move(lw));
    std::vector<double> p(static_cast<std::size_t>(2 * m + 1)), l(p.size());
    for (int k = 0; k <= 2 * m; ++k) {
        p[static_cast<std::size_t>(k)] = pf.coeff(k).real();
        l[static_cast<std::size_t>(k)] = lf.coeff(k).real();
    }
    for (int k = 0; k <= m; ++k) {
        jac(0, k) = p[static_cast<std::size_t>(k)] + k * l[static_cast<std::size_t>(k)];
        for (int r = 1; r <= m; ++r)
            jac(r, k) = p[static_cast<std::size_t>(std::abs(r - k))] +
                        p[static_cast<std::size_t>(r + k)] +
                        (r + k) * (l[static_cast<std::size_t>(std::abs(r - k))] +
                                   l[static_cast<std::size_t>(r + k)]);
    }
}

WaveSolution newton_core(const SolveSetup& setup, double mu_seed,
                         const PeriodicFunction& seed, const NewtonOptions& opts) {
    const int m = opts.max_modes;
    const std::size_t grid = working_grid(opts);
    const bool with_mu = setup.family != nullptr;
    const Eigen::Index dim = m + 1 + (with_mu ? 1 : 0);

    std::vector<double> a = cosine_coeffs(seed.resampled(grid), m);
    double mu = mu_seed;
    if (with_mu) {
        // project the seed onto the constraint plane (minimum-norm shift)
        double current = 0, wnorm = 0;
        for (int k = 0; k <= m; ++k) {
            const double w = setup.constraint.weight(k);
            current += w * a[static_cast<std::size_t>(k)];
            wnorm += w * w;
        }
        const double shift = (setup.constraint.target - current) / wnorm;
        for (int k = 0; k <= m; ++k)
            a[static_cast<std::size_t>(k)] += shift * setup.constraint.weight(k);
    }

    BernoulliProblem problem = with_mu ? setup.family->problem_at(mu) : *setup.problem;
    double last_residual = std::numeric_limits<double>::infinity();
    double best_residual = last_residual;
    int floor_hits = 0;

    for (int iter = 0; iter < opts.max_iterations; ++iter) {
        const PeriodicFunction v = from_cosine_coeffs(a, grid);
        const EvalContext ctx = make_context(v, problem);
        if (!(ctx.min_lambda > 0))
            throw singular_wave_error("min λ(v) reached " + std::to_string(ctx.min_lambda));
        const PeriodicFunction res = residual_from_context(ctx);
        last_residual = res.l2_norm();
        const double scale = 1.0 + v.l2_norm();
        if (last_residual <= opts.tolerance * scale) {
            WaveSolution sol;
            sol.problem = problem;
            sol.mu = with_mu ? mu : std::numeric_limits<double>::quiet_NaN();
            sol.v = v;
            sol.residual_norm = last_residual;
            sol.amplitude = a[1];
            return sol;
        }
        // deep in the quadratic regime Newton should keep contracting;
        // a stall there is the truncation floor, not divergence
        if (last_residual > 0.25 * best_residual && best_residual < 1e-6 * scale) {
            if (++floor_hits >= 2)
                throw resolution_error("Newton stalled at residual " +
                                       std::to_string(last_residual) +
                                       " with " + std::to_string(m) + " modes");
        } else {
            floor_hits = 0;
        }
        best_residual = std::min(best_residual, last_residual);

        Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(dim, dim);
        Eigen::VectorXd rhs(dim);
        const auto rc = cosine_coeffs(res, m);
        for (int k = 0; k <= m; ++k) rhs[k] = -rc[static_cast<std::size_t>(k)];
        fill_jacobian(ctx, m, jac);
        if (with_mu) {
            // ∂F/∂μ = (∂λ/∂μ)(v)(1 + Cv') + C((∂λ/∂μ)(v) v')
            const std::size_t n = ctx.vp.size();
            std::vector<double> dl(n), g(n);
            for (std::size_t j = 0; j < n; ++j)
                dl[j] = setup.family->dlambda_dparam(ctx.vp.samples()[j], mu);
            for (std::size_t j = 0; j < n; ++j) g[j] = dl[j] * ctx.vprime.samples()[j];
            const PeriodicFunction cg = PeriodicFunction::from_samples(std::move(g)).hilbert();
            std::vector<double> col(n);
            for (std::size_t j = 0; j < n; ++j)
                col[j] = dl[j] * ctx.one_cv.samples()[j] + cg.samples()[j];
            const auto cc = cosine_coeffs(PeriodicFunction::from_samples(std::move(col)), m);
            for (int r = 0; r <= m; ++r) jac(r, m + 1) = cc[static_cast<std::size_t>(r)];
            jac.row(m + 1).setZero();
            double current = 0;
            for (int k = 0; k <= m; ++k) {
                jac(m + 1, k) = setup.constraint.weight(k);
                current += setup.constraint.weight(k) * a[static_cast<std::size_t>(k)];
            }
            rhs[m + 1] = setup.constraint.target - current;
        }

        const Eigen::VectorXd delta = jac.partialPivLu().solve(rhs);
        for (int k = 0; k <= m; ++k) a[static_cast<std::size_t>(k)] += delta[k];
        if (with_mu) {
            mu += delta[m + 1];
            problem = setup.family->problem_at(mu);
        }
    }
    if (best_residual < 1e-6)
        throw resolution_error("Newton stalled at residual " +
                               std::to_string(last_residual) + " with " +
                               std::to_string(m) + " modes");
    throw divergence_error("Newton failed to converge in " +
                               std::to_string(opts.max_iterations) + " iterations",
                           last_residual);
}

}  // namespace

double functional_value(const PeriodicFunction& v, const BernoulliProblem& p) {
    const PeriodicFunction vp = v.resampled(2 * v.size());
    const PeriodicFunction one_cv = vp.conjugate_derivative() + 1.0;
    const auto& s = vp.samples();
    double acc = 0;
    for (std::size_t j = 0; j < s.size(); ++j)
        acc += p.Lambda(s[j]) * one_cv.samples()[j] - s[j];
    return acc * 2.0 * pi / static_cast<double>(s.size());
}

PeriodicFunction euler_lagrange_residual(const PeriodicFunction& v,
                                         const BernoulliProblem& p) {
    return residual_from_context(make_context(v, p)).resampled(v.size());
}

WaveSolution newton_solve_fixed(const BernoulliProblem& p, const PeriodicFunction& seed,
                                const NewtonOptions& opts) {
    SolveSetup setup{&p, nullptr, {Constraint::Amplitude, 0.0}};
    return newton_core(setup, 0.0, seed, opts);
}

WaveSolution newton_solve_amplitude(const WaveFamily& family, double mu_seed,
                                    const PeriodicFunction& seed, double amplitude,
                                    const NewtonOptions& opts) {
    SolveSetup setup{nullptr, &family, {Constraint::Amplitude, amplitude}};
    return newton_core(setup, mu_seed, seed, opts);
}

WaveSolution newton_solve_steepness(const WaveFamily& family, double mu_seed,
                                    const PeriodicFunction& seed, double steepness,
                                    const NewtonOptions& opts) {
    SolveSetup setup{nullptr, &family, {Constraint::Steepness, steepness}};
    return newton_core(setup, mu_seed, seed, opts);
}

GalerkinForm hessian_form(const WaveSolution& sol, int m) {
    if (m < 1) throw std::invalid_argument("hessian_form wants m >= 1");
    const std::size_t need =
        std::max(std::bit_ceil(4 * static_cast<std::size_t>(m)), 2 * sol.v.size());
    const PeriodicFunction vb = sol.v.resampled(need);
    const PeriodicFunction one_cv = vb.conjugate_derivative() + 1.0;
    std::vector<double> w(need), z(need);
    for (std::size_t j = 0; j < need; ++j) {
        const double y = vb.samples()[j];
        w[j] = 2.0 * sol.problem.lambda(y);
        z[j] = sol.problem.lambda_prime(y) * one_cv.samples()[j];
    }
    const Eigen::MatrixXd gw = trig_gram(PeriodicFunction::from_samples(std::move(w)), m);
    const Eigen::MatrixXd gz = trig_gram(PeriodicFunction::from_samples(std::move(z)), m);
    GalerkinForm form;
    form.order = m;
    form.matrix = gz;
    // polarized nonlocal term: (A + Aᵀ)/2 with A_ij = ∫ w φ_i Cφ_j' and
    // Cφ_j' = |n_j| φ_j in this basis
    for (Eigen::Index i = 0; i < form.matrix.rows(); ++i)
        for (Eigen::Index j = 0; j < form.matrix.cols(); ++j)
            form.matrix(i, j) +=
                0.5 * (GalerkinForm::mode_of(i) + GalerkinForm::mode_of(j)) * gw(i, j);
    form.matrix = 0.5 * (form.matrix + form.matrix.transpose()).eval();
    return form;
}

MorseReport morse_index(const WaveSolution& sol, int m) {
    const CountReport coarse = count_negative(hessian_form(sol, m));
    const CountReport fine = count_negative(hessian_form(sol, 2 * m));
    MorseReport rep;
    rep.index = fine.count;
    rep.index_coarse = coarse.count;
    rep.stable = coarse.count == fine.count;
    rep.indeterminate = fine.indeterminate;
    rep.order = 2 * m;
    return rep;
}

namespace {

// Local refinement of extrema of a smooth scalar profile g(t) via golden
// section around the best grid node.
template <typename G>
double polish_max(const G& g, const PeriodicFunction& v) {
    double best = -std::numeric_limits<double>::infinity();
    std::size_t arg = 0;
    for (std::size_t j = 0; j < v.size(); ++j) {
        const double val = g(v.node(j));
        if (val > best) {
            best = val;
            arg = j;
        }
    }
    const double h = 2.0 * pi / static_cast<double>(v.size());
    double lo = v.node(arg) - h, hi = v.node(arg) + h;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = g(x1), f2 = g(x2);
    for (int i = 0; i < 60; ++i) {
        if (f1 >= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = g(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = g(x2);
        }
    }
    return std::max({best, f1, f2});
}

}  // namespace

NuDiagnostics nu_diagnostics(const WaveSolution& sol) {
    const auto& p = sol.problem;
    const auto lam_at = [&](double t) { return p.lambda(sol.v.evaluate(t)); };
    const double min_lam = -polish_max([&](double t) { return -lam_at(t); }, sol.v);
    if (!(min_lam > 0)) throw singular_wave_error("min λ(v) is not positive");
    NuDiagnostics d;
    d.nu0 = 1.0 / min_lam;
    d.nu = polish_max(
        [&](double t) {
            const double y = sol.v.evaluate(t);
            return std::abs(p.lambda_prime(y)) / p.lambda(y);
        },
        sol.v);
    return d;
}

PlotnikovReport plotnikov_potential(const WaveSolution& sol) {
    const std::size_t n = 2 * sol.v.size();
    const PeriodicFunction vb = sol.v.resampled(n);
    const PeriodicFunction one_cv = vb.conjugate_derivative() + 1.0;
    const PeriodicFunction vprime = vb.derivative();
    std::vector<double> ratio(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double lam = sol.problem.lambda(vb.samples()[j]);
        if (!(lam > 0)) throw singular_wave_error("min λ(v) is not positive");
        ratio[j] = sol.problem.lambda_prime(vb.samples()[j]) / lam;
    }
    std::vector<double> g(n), two_v(n);
    for (std::size_t j = 0; j < n; ++j) g[j] = ratio[j] * vprime.samples()[j];
    const PeriodicFunction cg = PeriodicFunction::from_samples(std::move(g)).hilbert();
    for (std::size_t j = 0; j < n; ++j)
        two_v[j] = cg.samples()[j] - ratio[j] * one_cv.samples()[j];
    PeriodicFunction v_half = PeriodicFunction::from_samples(std::move(two_v));
    v_half *= 0.5;
    const double mn = v_half.min_value();
    if (mn < -1e-10)
        throw resolution_error("transformed potential lost positivity (min " +
                               std::to_string(mn) + "): under-resolved wave");

    const NuDiagnostics d = nu_diagnostics(sol);
    PlotnikovReport rep;
    rep.potential = Potential(v_half);
    rep.min_value = mn;
    rep.positive = mn > 0;
    rep.v_l1 = rep.potential.l1_norm();
    rep.pi_nu = pi * d.nu;
    rep.sup_one_plus_cv = one_cv.sup_norm();
    rep.min_one_plus_cv = one_cv.min_value();
    rep.sqrt_nu0 = std::sqrt(d.nu0);
    rep.l1_bound_holds = rep.v_l1 <= rep.pi_nu * (1.0 + 1e-9);
    rep.sup_bound_holds = rep.sup_one_plus_cv <= rep.sqrt_nu0 * (1.0 + 1e-9);
    return rep;
}

MainBoundReport check_main_bounds(const WaveSolution& sol, const NuDiagnostics& nu,
                                  int morse, double v_l1, double v_orlicz_b) {
    MainBoundReport rep;
    rep.nu = nu.nu;
    rep.nu0 = nu.nu0;
    rep.morse = morse;
    const double exponent = sol.problem.rho / (sol.problem.rho + 2.0);
    const double m_ratio = (sol.problem.m1 && sol.problem.m2 && *sol.problem.m2 > 0)
                               ? *sol.problem.m1 / *sol.problem.m2
                               : 1.0;
    rep.lower_expr = m_ratio * std::pow(std::log1p(nu.nu), exponent);
    rep.upper_expr = nu.nu * std::log(2.0 + nu.nu0);
    rep.v_l1 = v_l1;
    rep.v_orlicz_b = v_orlicz_b;
    rep.m1_ratio = rep.lower_expr > 0 ? morse / rep.lower_expr : 0.0;
    rep.m2_ratio = rep.upper_expr > 0 ? std::max(morse - 1, 0) / rep.upper_expr : 0.0;
    rep.m3_ratio = rep.lower_expr > 0 ? v_l1 / rep.lower_expr : 0.0;
    rep.m4_ratio = rep.upper_expr > 0 ? v_orlicz_b / rep.upper_expr : 0.0;
    return rep;
}

namespace {

Branch walk_branch(const WaveFamily& family, const std::vector<double>& targets,
                   Constraint::Kind kind, const BranchOptions& opts) {
    Branch branch;
    branch.stop_reason = "parameter grid exhausted";
    double mu = family.initial_parameter;
    int modes = opts.newton.max_modes;
    PeriodicFunction seed = PeriodicFunction::zero(64);
    double prev_target = 0.0;
    double prev_nu = 0.0;

    for (double target : targets) {
        // walk toward the target, doubling the truncation when Newton
        // stalls on its floor and halving the step when it diverges
        double reached = prev_target;
        int bisections = 0;
        WaveSolution sol;
        bool have = false;
        bool stopped = false;
        double attempt = target;
        while (true) {
            NewtonOptions nopts = opts.newton;
            nopts.max_modes = modes;
            nopts.grid = 0;  // track the truncation
            try {
                SolveSetup setup{nullptr, &family, {kind, attempt}};
                sol = newton_core(setup, mu, seed, nopts);
                have = true;
            } catch (const resolution_error&) {
                if (2 * modes > opts.max_modes_cap) {
                    branch.stop_reason = "resolution ceiling at " +
                                         std::to_string(modes) + " modes";
                    stopped = true;
                    break;
                }
                modes *= 2;
                continue;
            } catch (const divergence_error&) {
                if (++bisections > opts.max_step_bisections) {
                    branch.stop_reason = "step failed after " +
                                         std::to_string(opts.max_step_bisections) +
                                         " bisections (parameter fold)";
                    stopped = true;
                    break;
                }
                attempt = 0.5 * (reached + attempt);
                continue;
            } catch (const singular_wave_error& e) {
                // a transient inadmissible iterate is a step failure; the
                // branch has genuinely ended only if tiny steps still hit it
                if (++bisections > opts.max_step_bisections) {
                    branch.stop_reason = std::string("singular wave: ") + e.what();
                    stopped = true;
                    break;
                }
                attempt = 0.5 * (reached + attempt);
                continue;
            }
            seed = sol.v;
            mu = sol.mu;
            reached = attempt;
            if (attempt == target) break;
            attempt = target;
        }
        if (stopped || !have || reached != target) break;
        prev_target = target;

        BranchPoint point;
        point.solution = sol;
        try {
            point.nu = nu_diagnostics(sol);
            int mh = opts.hessian_modes;
            point.morse = morse_index(sol, mh);
            while (!point.morse.stable && 2 * mh <= opts.hessian_modes_cap) {
                mh *= 2;
                point.morse = morse_index(sol, mh);
            }
            if (!point.morse.stable)
                throw resolution_error("Morse index unstable at the truncation ceiling");
            point.checks = plotnikov_potential(sol);
            const int mq = choose_truncation(point.checks.potential);
            const std::size_t need = std::bit_ceil(4 * static_cast<std::size_t>(mq));
            const Potential vq(point.checks.potential.function().size() >= need
                                   ? point.checks.potential.function()
                                   : point.checks.potential.function().resampled(need));
            point.plotnikov = n_minus(vq, mq);
            point.bounds = check_main_bounds(sol, point.nu, point.morse.index,
                                             point.plotnikov.v_l1, point.plotnikov.v_orlicz_b);
        } catch (const singular_wave_error& e) {
            branch.stop_reason = std::string("singular wave: ") + e.what();
            break;
        } catch (const resolution_error& e) {
            branch.stop_reason = std::string("resolution: ") + e.what();
            break;
        }
        if (point.nu.nu < prev_nu) branch.nu_monotone = false;
        prev_nu = point.nu.nu;
        branch.points.push_back(std::move(point));
        if (branch.points.back().nu.nu0 > opts.nu0_cap) {
            branch.stop_reason = "nu0 cap reached";
            break;
        }
    }
    return branch;
}

}  // namespace

Branch branch_continuation(const WaveFamily& family,
                           const std::vector<double>& amplitudes,
                           const BranchOptions& opts) {
    return walk_branch(family, amplitudes, Constraint::Amplitude, opts);
}

Branch branch_continuation_steepness(const WaveFamily& family,
                                     const std::vector<double>& steepness_grid,
                                     const BranchOptions& opts) {
    return walk_branch(family, steepness_grid, Constraint::Steepness, opts);
}

nlohmann::json MainBoundReport::to_json() const {
    return nlohmann::json{{"nu", nu},
                          {"nu0", nu0},
                          {"morse", morse},
                          {"lower_expr", lower_expr},
                          {"upper_expr", upper_expr},
                          {"m1_ratio", m1_ratio},
                          {"m2_ratio", m2_ratio},
                          {"m3_ratio", m3_ratio},
                          {"m4_ratio", m4_ratio},
                          {"v_l1", v_l1},
                          {"v_orlicz_b", v_orlicz_b}};
}

nlohmann::json BranchPoint::to_json() const {
    const double steep =
        (solution.v.evaluate(0.0) - solution.v.evaluate(pi)) / 2.0;
    return nlohmann::json{
        {"a", solution.amplitude},
        {"steepness", steep},
        {"mu", solution.mu},
        {"residual", solution.residual_norm},
        {"nu", nu.nu},
        {"nu0", nu.nu0},
        {"morse", morse.index},
        {"morse_stable", morse.stable},
        {"n_minus_plotnikov", plotnikov.count},
        {"plotnikov_indeterminate", plotnikov.indeterminate},
        {"min_V", checks.min_value},
        {"v_l1", checks.v_l1},
        {"pi_nu", checks.pi_nu},
        {"sup_one_plus_cv", checks.sup_one_plus_cv},
        {"sqrt_nu0", checks.sqrt_nu0},
        {"bound_ratios",
         {{"m1", bounds.m1_ratio},
          {"m2", bounds.m2_ratio},
          {"m3", bounds.m3_ratio},
          {"m4", bounds.m4_ratio}}}};
}

}  // namespace wavemorse
