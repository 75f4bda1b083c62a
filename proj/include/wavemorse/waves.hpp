#ifndef WAVEMORSE_WAVES_HPP
#define WAVEMORSE_WAVES_HPP

#include <vector>

#include "json.hpp"

#include "wavemorse/bernoulli.hpp"
#include "wavemorse/galerkin.hpp"
#include "wavemorse/periodic_function.hpp"

namespace wavemorse {

// Critical points of
//
//     J(v) = ∫ Λ(v)(1 + Cv') - v dt
//
// computed by Newton iteration in the even (cosine) subspace, which
// factors out the translation symmetry. The Hessian, the Morse index and
// the steepness diagnostics ν, ν₀ live on the full trigonometric space.

struct WaveSolution {
    BernoulliProblem problem;
    double mu = std::numeric_limits<double>::quiet_NaN();  // family parameter, if any
    PeriodicFunction v;
    double residual_norm = 0;
    double amplitude = 0;  // first cosine coefficient of v
};

/// J(v) for the given profile, by dealiased quadrature.
double functional_value(const PeriodicFunction& v, const BernoulliProblem& p);

/// Gradient density F(v) = λ(v)(1 + Cv') + C(λ(v)v') - 1; vanishes
/// exactly at critical points.
PeriodicFunction euler_lagrange_residual(const PeriodicFunction& v,
                                         const BernoulliProblem& p);

struct NewtonOptions {
    int max_modes = 64;       // cosine truncation M
    std::size_t grid = 0;     // 0: derived from max_modes
    int max_iterations = 50;
    double tolerance = 1e-12;  // residual_norm ≤ tol·(1 + ‖v‖)
};

/// Solve F(v) = 0 in the cosine subspace with μ fixed.
WaveSolution newton_solve_fixed(const BernoulliProblem& p, const PeriodicFunction& seed,
                                const NewtonOptions& opts = {});

/// Solve with the first cosine coefficient pinned to `amplitude` and the
/// family parameter left free (one scalar constraint closes the system).
WaveSolution newton_solve_amplitude(const WaveFamily& family, double mu_seed,
                                    const PeriodicFunction& seed, double amplitude,
                                    const NewtonOptions& opts = {});

/// Same with the crest-to-trough half-height (v(0) - v(π))/2 pinned. The
/// first cosine coefficient is not monotone along the branch (it folds
/// well before the steep regime), while this functional keeps growing, so
/// it is the constraint of choice for pushing toward large ν₀.
WaveSolution newton_solve_steepness(const WaveFamily& family, double mu_seed,
                                    const PeriodicFunction& seed, double steepness,
                                    const NewtonOptions& opts = {});

struct MorseReport {
    int index = 0;          // count at the doubled truncation
    int index_coarse = 0;   // count at the requested truncation
    bool stable = false;    // the two agree
    bool indeterminate = false;
    int order = 0;          // doubled truncation
};

/// Galerkin matrix of the Hessian form Q_v on the full trig basis.
GalerkinForm hessian_form(const WaveSolution& sol, int m);

/// Morse index with one truncation doubling as a stabilization check.
MorseReport morse_index(const WaveSolution& sol, int m);

struct NuDiagnostics {
    double nu = 0;   // max |λ'(v)|/λ(v)
    double nu0 = 0;  // 1 / min λ(v)
};

/// Steepness diagnostics, grid extrema polished by a Newton step on the
/// trigonometric interpolant.
NuDiagnostics nu_diagnostics(const WaveSolution& sol);

struct PlotnikovReport {
    Potential potential;       // V of the reduced form q_V
    double min_value = 0;      // grid minimum of V, for the positivity audit
    bool positive = false;
    double v_l1 = 0;
    double pi_nu = 0;              // ‖V‖₁ ≤ πν
    double sup_one_plus_cv = 0;    // ‖1 + Cv'‖_∞ ≤ √ν₀
    double min_one_plus_cv = 0;    // 1 + Cv' > 0 at solutions
    double sqrt_nu0 = 0;
    bool l1_bound_holds = false;
    bool sup_bound_holds = false;
};

/// Potential of the reduced form: 2V = C((λ'(v)/λ(v)) v') - (λ'(v)/λ(v))(1 + Cv').
PlotnikovReport plotnikov_potential(const WaveSolution& sol);

struct MainBoundReport {
    double nu = 0, nu0 = 0;
    int morse = 0;
    double lower_expr = 0;  // (m₁/m₂) ln^{ϱ/(ϱ+2)}(1 + ν)
    double upper_expr = 0;  // ν ln(2 + ν₀)
    double m1_ratio = 0;    // M / lower_expr
    double m2_ratio = 0;    // (M-1)₊ / upper_expr
    double m3_ratio = 0;    // ‖V‖₁ / lower_expr
    double m4_ratio = 0;    // ‖V‖_B / upper_expr
    double v_l1 = 0, v_orlicz_b = 0;
    nlohmann::json to_json() const;
};

/// Evaluate both sides of the two-sided index estimate, plus the two
/// intermediate potential-norm inequalities, at constant 1.
MainBoundReport check_main_bounds(const WaveSolution& sol, const NuDiagnostics& nu,
                                  int morse, double v_l1, double v_orlicz_b);

struct BranchPoint {
    WaveSolution solution;
    NuDiagnostics nu;
    MorseReport morse;
    CountReport plotnikov;  // N_-(q_V) for the transformed potential
    PlotnikovReport checks;
    MainBoundReport bounds;
    nlohmann::json to_json() const;
};

struct BranchOptions {
    NewtonOptions newton;
    int max_modes_cap = 2048;  // resolution adaptivity ceiling
    int hessian_modes = 48;    // starting point; doubled until stable
    int hessian_modes_cap = 1024;
    double nu0_cap = 50.0;
    int max_step_bisections = 8;
};

struct Branch {
    std::vector<BranchPoint> points;
    std::string stop_reason;
    bool nu_monotone = true;  // soft diagnostic, logged not enforced
};

/// Continuation in the amplitude with the family parameter free. The
/// truncation doubles automatically when Newton stalls on its truncation
/// floor; a genuinely diverging step is re-tried with up to
/// max_step_bisections halvings. Stops cleanly at the ν₀ cap, on loss of
/// min λ(v) > 0, at the resolution ceiling, or at an amplitude fold.
Branch branch_continuation(const WaveFamily& family,
                           const std::vector<double>& amplitudes,
                           const BranchOptions& opts = {});

/// The same walk driven by the crest-to-trough half-height, which is
/// monotone into the steep regime.
Branch branch_continuation_steepness(const WaveFamily& family,
                                     const std::vector<double>& steepness_grid,
                                     const BranchOptions& opts = {});

}  // namespace wavemorse

#endif
