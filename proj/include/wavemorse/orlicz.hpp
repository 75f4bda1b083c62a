#ifndef WAVEMORSE_ORLICZ_HPP
#define WAVEMORSE_ORLICZ_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

#include "wavemorse/nfunction.hpp"
#include "wavemorse/periodic_function.hpp"

namespace wavemorse {

// A scalar density on a finite interval, sampled on a uniform grid of
// nodes including both endpoints and read back as its piecewise-linear
// interpolant. All integrals in this module are taken of that interpolant
// with per-segment Gauss-Legendre nodes, so they are exact for the data
// model and exactly additive across subintervals (the covering
// construction leans on that additivity).
class SampledDensity {
public:
    SampledDensity(double a, double b, std::vector<double> values);

    static SampledDensity constant(double c, double a, double b, std::size_t n = 64);
    /// Restriction of a periodic function to [-π, π] (wrap sample appended).
    static SampledDensity from_periodic(const PeriodicFunction& u);

    double a() const { return a_; }
    double b() const { return b_; }
    double length() const { return b_ - a_; }
    std::size_t size() const { return values_.size(); }
    const std::vector<double>& values() const { return values_; }

    double value(double t) const;  // piecewise-linear interpolant
    double l1_norm() const;
    double linf_norm() const;
    bool is_zero() const;
    bool nonnegative() const;

    SampledDensity scaled(double c) const;

    nlohmann::json to_json() const;
    std::string to_csv() const;

private:
    double a_, b_;
    std::vector<double> values_;
};

/// ∫_α^β ψ(f/κ) dt of the interpolant; κ > 0. May be +inf (A saturates).
double modular(const SampledDensity& f, const NFunction& psi, double kappa,
               double alpha, double beta);
double modular(const SampledDensity& f, const NFunction& psi, double kappa);

/// Luxemburg gauge norm inf{κ > 0 : ∫ψ(f/κ) ≤ 1}, by bracketing +
/// bisection to relative tolerance 1e-10. Zero density → 0.
double luxemburg_norm(const SampledDensity& f, const NFunction& psi);

/// Orlicz (duality) norm via the Amemiya formula inf_{k>0}(1 + ∫ψ(kf))/k,
/// minimised by golden section on ln k. Sits in [lux, 2·lux].
double orlicz_norm(const SampledDensity& f, const NFunction& psi);

/// Solomyak's averaged norm: duality norm with constraint level |I|,
/// computed as inf_{k>0}(|I| + ∫ψ(kf))/k on the subinterval [α, β].
double averaged_norm(const SampledDensity& f, const NFunction& psi,
                     double alpha, double beta);
double averaged_norm(const SampledDensity& f, const NFunction& psi);

struct PartitionInterval {
    double a, b;
    double averaged_b_norm;
};

struct Partition {
    std::vector<PartitionInterval> intervals;
    double target;       // per-interval averaged-norm budget
    double whole_norm;   // ‖V‖^{(av)}_{B,I}
};

/// Greedy left-to-right cover of the density's interval by at most n
/// closed intervals, each with averaged B-norm equal to the budget
/// ‖V‖^{(av)}_{B,I}/n up to 1e-8 (the last may undershoot). Intervals are
/// disjoint up to shared endpoints. V ≡ 0 yields the single interval I.
Partition solomyak_partition(const SampledDensity& v, int n);

struct NormReport {
    std::string norm_kind;  // "luxemburg:B", "orlicz:A", "averaged:B", ...
    double value;
    double tolerance;
    nlohmann::json to_json() const {
        return nlohmann::json{
            {"norm_kind", norm_kind}, {"value", value}, {"tolerance", tolerance}};
    }
};

struct OneInftyBound {
    double lhs;  // ‖g‖_{B,[-π,π]}
    double rhs;  // 8‖g‖₁ ln(2 + 2π‖g‖∞/‖g‖₁)
};

/// The L¹-L∞ Orlicz bound for bounded g on [-π, π].
OneInftyBound bound_1infty(const SampledDensity& g);

struct ZygmundReport {
    double cf_l1;          // ‖Cf‖_{L¹}
    double f_llogl;        // ∫ |f| ln₊|f|
    double f_luxemburg_b;  // ‖f‖_{(B,[-π,π])}
    double f_orlicz_b;     // ‖f‖_{B,[-π,π]}
    double a0;             // π/2 + (2π+1)ln(1 + 1/(2π))
    bool nonnegative;
    bool positive_bound_holds;  // f ≥ 0: ‖f‖_B ≤ 2·A₀·max{‖Cf‖₁, ‖f‖₁}
    nlohmann::json to_json() const;
};

/// Conjugate-function L¹ / L log L diagnostics for a periodic density.
ZygmundReport zygmund_check(const PeriodicFunction& f);

}  // namespace wavemorse

#endif
