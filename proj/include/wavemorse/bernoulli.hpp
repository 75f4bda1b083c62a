#ifndef WAVEMORSE_BERNOULLI_HPP
#define WAVEMORSE_BERNOULLI_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace wavemorse {

// A Bernoulli free-boundary profile: the boundary speed-squared law λ(y),
// its derivative, and the primitive Λ with Λ(0) = 0 (the functional is
// defined up to that normalization). The Stokes specialization is
// λ(y) = 1 - 2μy with ϱ = 1, m₁ = m₂ = 2μ.
struct BernoulliProblem {
    std::string name;
    std::function<double(double)> lambda;
    std::function<double(double)> lambda_prime;
    std::function<double(double)> Lambda;
    double rho = 1.0;
    std::optional<double> m1, m2;

    double p_exponent() const { return (rho + 2.0) / rho; }
};

BernoulliProblem stokes_problem(double mu);
/// λ(y) = Σ c_k y^k with Λ integrated termwise.
BernoulliProblem polynomial_problem(std::vector<double> lambda_coeffs, double rho,
                                    std::optional<double> m1 = std::nullopt,
                                    std::optional<double> m2 = std::nullopt);

struct ProblemCheck {
    double primitive_defect = 0;   // max rel. error of Λ' = λ (finite differences)
    bool lambda_prime_nonpositive = true;
    bool log_lambda_concave = true;        // second differences of ln|λ| where λ ≠ 0
    bool strength_bounds_hold = true;      // m₁/λ^{1/ϱ} ≤ |λ'|/λ ≤ m₂/λ^{1/ϱ}
    bool passed(double tol = 1e-6) const {
        return primitive_defect <= tol && lambda_prime_nonpositive && log_lambda_concave &&
               strength_bounds_hold;
    }
};

/// Spot-check the structural conditions on a sample range of y.
ProblemCheck validate_problem(const BernoulliProblem& p, double ymin, double ymax,
                              int samples = 400);

// A one-parameter family of problems for branch continuation. The Stokes
// family is parameterized by μ.
struct WaveFamily {
    std::string name;
    std::function<BernoulliProblem(double)> problem_at;
    std::function<double(double, double)> dlambda_dparam;  // ∂λ/∂μ (y, μ)
    double initial_parameter = 1.0;
};

WaveFamily stokes_family();

}  // namespace wavemorse

#endif
