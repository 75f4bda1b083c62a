#ifndef WAVEMORSE_GALERKIN_HPP
#define WAVEMORSE_GALERKIN_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <vector>

#include "json.hpp"

#include "wavemorse/orlicz.hpp"
#include "wavemorse/periodic_function.hpp"

namespace wavemorse {

// Galerkin machinery for the reduced quadratic form
//
//     q_V[u] = ∫ (Cu')u - V u² dt
//
// on the orthonormal trigonometric basis {1/√(2π), cos(nt)/√π,
// sin(nt)/√π : 1 ≤ n ≤ m}. The nonlocal part is exactly diag(|n|) there;
// the potential enters through a Gram matrix assembled from the Fourier
// coefficients of V, which is spectrally exact when V's grid resolves
// frequency 2m (grid ≥ 4m).

/// A nonnegative periodic potential. Samples may dip to -1e-12 (rounding).
class Potential {
public:
    Potential() : v_(PeriodicFunction::zero(8)), strictly_positive_(false) {}
    explicit Potential(PeriodicFunction v);

    const PeriodicFunction& function() const { return v_; }
    bool strictly_positive() const { return strictly_positive_; }
    double max_value() const { return v_.max_value(); }
    double l1_norm() const { return v_.integral(); }
    double orlicz_b_norm() const;

private:
    PeriodicFunction v_;
    bool strictly_positive_;
};

struct GalerkinForm {
    Eigen::MatrixXd matrix;  // dimension 2m+1, symmetric
    int order = 0;           // m

    std::size_t dimension() const { return static_cast<std::size_t>(matrix.rows()); }
    /// |n| of basis vector i: 0, 1, 1, 2, 2, ..., m, m.
    static int mode_of(Eigen::Index i) { return static_cast<int>((i + 1) / 2); }
};

struct CountReport {
    int count = 0;        // certain count: eigenvalues < -ε
    int count_upper = 0;  // eigenvalues < +ε
    bool indeterminate = false;
    double epsilon = 0;
    double margin = 0;  // min |λ|; exact only when the eigensolve ran
    bool margin_exact = false;
    int order = 0;
    std::size_t dimension = 0;
    double v_l1 = 0;
    double v_orlicz_b = 0;
    double lower_ratio = 0;  // count / ‖V‖₁         (C₁ candidate)
    double upper_ratio = 0;  // (count-1)₊ / ‖V‖_B   (C₂ candidate)

    nlohmann::json to_json() const;
};

struct Inertia {
    int negative = 0, zero = 0, positive = 0;
};

/// Gram matrix ∫ w φ_i φ_j dt of multiplication by a periodic weight on
/// the orthonormal trig basis, assembled from the Fourier coefficients of
/// w (exact when w's grid resolves frequency 2m).
Eigen::MatrixXd trig_gram(const PeriodicFunction& w, int m);

/// Signs of the eigenvalues of a symmetric matrix via a Bunch-Kaufman
/// factorization (LAPACK dsytrf), by Sylvester's law of inertia.
Inertia symmetric_inertia(Eigen::MatrixXd a);

/// Galerkin matrix diag(|n|) - (∫ V φ_i φ_j). Needs grid ≥ 4m.
GalerkinForm assemble_qv(const Potential& v, int m);

/// Negative-eigenvalue count with an ε-band around zero,
/// ε = 1e-9·(1 + ‖matrix‖_∞). Dimensions ≤ 512 are cross-checked against
/// a full symmetric eigensolve, which also supplies the exact margin.
CountReport count_negative(const GalerkinForm& form);

/// assemble + count + the two norms of V and the per-potential ratios.
CountReport n_minus(const Potential& v, int m);

/// Truncation policy: start at 4(1 + max V), double until the certain
/// count is unchanged across two successive doublings.
int choose_truncation(const Potential& v, int m_cap = 4096);

struct WeylRow {
    double alpha;
    int order;
    int count;
    double ratio;      // N_-(q_{αV})/α
    double target;     // (1/π)∫V
    double deviation;  // |ratio - target| / target
};

struct WeylReport {
    std::vector<WeylRow> rows;
    double final_deviation = 0;
    std::string to_csv() const;
};

/// Scaling sweep N_-(q_{αV})/α against (1/π)∫V. Truncation per α is
/// 4·α·maxV; each count is re-checked at 1.5× the truncation and a
/// disagreement raises resolution_error.
WeylReport weyl_slope(const Potential& v, const std::vector<double>& alphas);

struct TwoSidedFit {
    double c_lower = 0;  // min N_-/‖V‖₁
    double c_upper = 0;  // max (N_- - 1)₊/‖V‖_B
    std::vector<CountReport> members;
    int excluded = 0;
    bool sandwich_holds = false;
    nlohmann::json to_json() const;
};

/// Fit the empirical two-sided constants over an ensemble of potentials
/// with converged counts. Members whose truncation fails to converge are
/// excluded with a warning; an empty surviving ensemble is an error.
TwoSidedFit fit_two_sided_constants(const std::vector<Potential>& ensemble, int m_cap = 4096);

/// Ensemble generator: squares of random trigonometric polynomials,
/// rescaled to the requested sup-norm range. Deterministic in the seed.
std::vector<Potential> random_potential_ensemble(std::size_t count, std::uint64_t seed,
                                                 int max_degree = 4,
                                                 double min_sup = 0.5,
                                                 double max_sup = 12.0);

}  // namespace wavemorse

#endif
