#ifndef WAVEMORSE_PERIODIC_FUNCTION_HPP
#define WAVEMORSE_PERIODIC_FUNCTION_HPP

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include "json.hpp"

namespace wavemorse {

// Fourier-grid core on the circle.
//
// A real 2π-periodic function is held jointly as samples on the uniform
// grid t_j = -π + 2πj/N (N a power of two, N ≥ 8) and as Fourier
// coefficients in the convention
//
//     û(n) = (1/2π) ∫_{-π}^{π} u(t) e^{-int} dt,  |n| ≤ N/2.
//
// Both representations are kept consistent at all times; every operation
// returns a new value (no internal mutability).
//
// The Nyquist mode n = ±N/2 is stored as a single real bin interpreted as
// the symmetric combination c·cos(Nt/2), i.e. û(±N/2) = c/2. Under this
// interpretation the multiplier operations below are exact on the grid:
// sin(Nt/2) vanishes at every node, so the Hilbert transform and the
// derivative annihilate the Nyquist bin, while u ↦ Cu' scales it by N/2.
class PeriodicFunction {
public:
    using complex = std::complex<double>;

    PeriodicFunction() : PeriodicFunction(zero(8)) {}

    /// Build from grid samples. Size must be a power of two, ≥ 8.
    static PeriodicFunction from_samples(std::vector<double> samples);

    /// Build from two-sided coefficients û(-M..M), centred at n = 0 (odd
    /// length). Rejects non-Hermitian input. Grid size: explicit `grid`,
    /// or the smallest admissible power of two ≥ 4M.
    static PeriodicFunction from_coeffs(const std::vector<complex>& two_sided,
                                        std::size_t grid = 0);

    static PeriodicFunction zero(std::size_t n);
    static PeriodicFunction constant(double c, std::size_t n = 8);
    /// a·cos(kt) + b·sin(kt) on a grid of size n (0 = auto).
    static PeriodicFunction harmonic(int k, double a, double b, std::size_t n = 0);

    std::size_t size() const { return samples_.size(); }
    int max_mode() const { return static_cast<int>(size() / 2); }
    const std::vector<double>& samples() const { return samples_; }
    double node(std::size_t j) const;

    /// û(n); returns 0 for |n| > N/2. The Nyquist coefficient is reported
    /// as the symmetric half of the stored bin.
    complex coeff(int n) const;

    /// Trigonometric interpolant evaluated anywhere.
    double evaluate(double t) const;

    // --- Fourier multiplier operations (exact on the grid) ---
    PeriodicFunction hilbert() const;               // Cu: multiplier -i·sign(n)
    PeriodicFunction derivative() const;            // u'
    PeriodicFunction conjugate_derivative() const;  // Cu': multiplier |n|

    /// Spectral resample onto a grid of size n (pad or project).
    PeriodicFunction resampled(std::size_t n) const;

    /// New function f(u(t_j)) sampled pointwise on this grid. The caller is
    /// responsible for choosing a grid fine enough for the composition.
    PeriodicFunction map(const std::function<double(double)>& f) const;

    // --- quadrature and norms ---
    double integral() const;     // ∫_{-π}^{π} u dt = 2π û(0)
    double mean() const;         // û(0)
    double l2_norm() const;      // (∫ u²)^{1/2} via Parseval
    double l1_norm() const;      // trapezoid of |u| on the grid
    double sup_norm() const;
    double min_value() const;
    double max_value() const;
    double h_half_norm() const;  // (Σ (1+|n|)|û(n)|²)^{1/2}

    PeriodicFunction& operator+=(const PeriodicFunction& other);
    PeriodicFunction& operator-=(const PeriodicFunction& other);
    PeriodicFunction& operator*=(double c);
    PeriodicFunction& operator+=(double c);

    friend PeriodicFunction operator+(PeriodicFunction a, const PeriodicFunction& b) { return a += b; }
    friend PeriodicFunction operator-(PeriodicFunction a, const PeriodicFunction& b) { return a -= b; }
    friend PeriodicFunction operator*(double c, PeriodicFunction a) { return a *= c; }
    friend PeriodicFunction operator+(PeriodicFunction a, double c) { return a += c; }
    friend PeriodicFunction operator-(PeriodicFunction a, double c) { return a += -c; }

    nlohmann::json to_json() const;
    static PeriodicFunction from_json(const nlohmann::json& j);

private:
    explicit PeriodicFunction(std::vector<double> samples, std::vector<complex> bins)
        : samples_(std::move(samples)), bins_(std::move(bins)) {}

    // Stored spectrum: bin k carries û(n_k) for n_k = k (k ≤ N/2) or k-N
    // (k > N/2); the -π grid offset phase is already folded in.
    std::vector<double> samples_;
    std::vector<complex> bins_;

    std::vector<complex> mapped_bins(const std::function<complex(int, complex)>& mult,
                                     complex nyquist_factor) const;
    static std::vector<double> bins_to_samples(const std::vector<complex>& bins);
    static std::vector<complex> samples_to_bins(const std::vector<double>& samples);
};

/// Pointwise product with zero-padded dealiasing: both factors are padded
/// to twice the working grid, multiplied there and projected back, so a
/// product that fits the band is exact and nothing aliases. Mismatched
/// sizes are resampled to the larger grid.
PeriodicFunction product(const PeriodicFunction& u, const PeriodicFunction& w);

/// E₀[u] = ∫ (Cu')u dt = 2π Σ |n| |û(n)|² ≥ 0.
double e0_form(const PeriodicFunction& u);

}  // namespace wavemorse

#endif
