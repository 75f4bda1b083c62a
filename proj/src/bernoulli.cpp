#include "wavemorse/bernoulli.hpp"

#include <cmath>
#include <stdexcept>

namespace wavemorse {

BernoulliProblem stokes_problem(double mu) {
    if (!(mu > 0)) throw std::invalid_argument("stokes problem wants mu > 0");
    BernoulliProblem p;
    p.name = "stokes(mu=" + std::to_string(mu) + ")";
    p.lambda = [mu](double y) { return 1.0 - 2.0 * mu * y; };
    p.lambda_prime = [mu](double) { return -2.0 * mu; };
    p.Lambda = [mu](double y) { return y - mu * y * y; };
    p.rho = 1.0;
    p.m1 = 2.0 * mu;
    p.m2 = 2.0 * mu;
    return p;
}

BernoulliProblem polynomial_problem(std::vector<double> coeffs, double rho,
                                    std::optional<double> m1, std::optional<double> m2) {
    if (coeffs.empty()) throw std::invalid_argument("polynomial lambda needs coefficients");
    if (!(rho > 0)) throw std::invalid_argument("rho must be positive");
    BernoulliProblem p;
    p.name = "poly";
    p.lambda = [coeffs](double y) {
        double acc = 0;
        for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * y + coeffs[k];
        return acc;
    };
    p.lambda_prime = [coeffs](double y) {
        double acc = 0;
        for (std::size_t k = coeffs.size(); k-- > 1;)
            acc = acc * y + static_cast<double>(k) * coeffs[k];
        return acc;
    };
    p.Lambda = [coeffs](double y) {
        double acc = 0;
        for (std::size_t k = coeffs.size(); k-- > 0;)
            acc = acc * y + coeffs[k] / static_cast<double>(k + 1);
        return acc * y;  // Λ(0) = 0
    };
    p.rho = rho;
    p.m1 = m1;
    p.m2 = m2;
    return p;
}

ProblemCheck validate_problem(const BernoulliProblem& p, double ymin, double ymax,
                              int samples) {
    if (!(ymax > ymin) || samples < 8)
        throw std::invalid_argument("bad validation range");
    ProblemCheck check;
    const double h = (ymax - ymin) / static_cast<double>(samples);
    const double fd = h * 1e-3;
    for (int i = 0; i <= samples; ++i) {
        const double y = ymin + h * i;
        const double lam = p.lambda(y);
        const double fd_lambda = (p.Lambda(y + fd) - p.Lambda(y - fd)) / (2.0 * fd);
        check.primitive_defect = std::max(
            check.primitive_defect, std::abs(fd_lambda - lam) / (1.0 + std::abs(lam)));
        if (lam != 0.0) {
            if (p.lambda_prime(y) > 1e-12) check.lambda_prime_nonpositive = false;
            if (p.m1 && p.m2 && lam > 0) {
                const double ratio = std::abs(p.lambda_prime(y)) / lam;
                const double scale = std::pow(lam, 1.0 / p.rho);
                if (ratio * scale < *p.m1 * (1.0 - 1e-9) ||
                    ratio * scale > *p.m2 * (1.0 + 1e-9))
                    check.strength_bounds_hold = false;
            }
        }
    }
    // concavity of ln|λ| by second differences where λ stays clear of 0
    for (int i = 1; i < samples; ++i) {
        const double y = ymin + h * i;
        const double l0 = p.lambda(y - h), l1 = p.lambda(y), l2 = p.lambda(y + h);
        if (std::min({std::abs(l0), std::abs(l1), std::abs(l2)}) < 1e-8) continue;
        if (l0 * l1 <= 0 || l1 * l2 <= 0) continue;
        const double second =
            std::log(std::abs(l0)) - 2.0 * std::log(std::abs(l1)) + std::log(std::abs(l2));
        if (second > 1e-9) check.log_lambda_concave = false;
    }
    return check;
}

WaveFamily stokes_family() {
    WaveFamily fam;
    fam.name = "stokes";
    fam.problem_at = [](double mu) { return stokes_problem(mu); };
    fam.dlambda_dparam = [](double y, double) { return -2.0 * y; };
    fam.initial_parameter = 1.0;
    return fam;
}

}  // namespace wavemorse
