#include "wavemorse/periodic_function.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "wavemorse/errors.hpp"

namespace wavemorse {

namespace {

constexpr double pi = std::numbers::pi;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

// In-place iterative radix-2 FFT, X_k = Σ_j x_j e^{-2πijk/N} (forward).
void fft(std::vector<std::complex<double>>& x, bool inverse) {
    const std::size_t n = x.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(x[i], x[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = (inverse ? 2.0 : -2.0) * pi / static_cast<double>(len);
        const std::complex<double> wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const auto u = x[i + k];
                const auto v = x[i + k + len / 2] * w;
                x[i + k] = u + v;
                x[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
    if (inverse) {
        for (auto& c : x) c /= static_cast<double>(n);
    }
}

void check_grid(std::size_t n) {
    if (n < 8 || !is_pow2(n))
        throw resolution_error("grid size must be a power of two, >= 8 (got " +
                               std::to_string(n) + ")");
}

}  // namespace

std::vector<PeriodicFunction::complex> PeriodicFunction::samples_to_bins(
    const std::vector<double>& samples) {
    const std::size_t n = samples.size();
    std::vector<complex> bins(n);
    for (std::size_t j = 0; j < n; ++j) bins[j] = samples[j];
    fft(bins, false);
    // û(n_k) = (-1)^k · DFT_k / N  (phase from t_0 = -π)
    for (std::size_t k = 0; k < n; ++k) {
        bins[k] /= static_cast<double>(n);
        if (k & 1) bins[k] = -bins[k];
    }
    return bins;
}

std::vector<double> PeriodicFunction::bins_to_samples(const std::vector<complex>& bins) {
    const std::size_t n = bins.size();
    std::vector<complex> work(n);
    for (std::size_t k = 0; k < n; ++k) work[k] = (k & 1) ? -bins[k] : bins[k];
    fft(work, true);  // divides by n internally; bins carry the 1/N already
    std::vector<double> samples(n);
    for (std::size_t j = 0; j < n; ++j) samples[j] = work[j].real() * static_cast<double>(n);
    return samples;
}

PeriodicFunction PeriodicFunction::from_samples(std::vector<double> samples) {
    check_grid(samples.size());
    for (double s : samples)
        if (!std::isfinite(s)) throw std::invalid_argument("non-finite sample");
    auto bins = samples_to_bins(samples);
    return PeriodicFunction(std::move(samples), std::move(bins));
}

PeriodicFunction PeriodicFunction::from_coeffs(const std::vector<complex>& two_sided,
                                               std::size_t grid) {
    if (two_sided.empty() || two_sided.size() % 2 == 0)
        throw std::invalid_argument("coefficient list must have odd length 2M+1");
    const int mmax = static_cast<int>(two_sided.size() / 2);
    auto at = [&](int n) { return two_sided[static_cast<std::size_t>(n + mmax)]; };
    const double scale = [&] {
        double s = 0;
        for (const auto& c : two_sided) s = std::max(s, std::abs(c));
        return s > 0 ? s : 1.0;
    }();
    for (int n = 0; n <= mmax; ++n) {
        if (std::abs(at(n) - std::conj(at(-n))) > 1e-12 * scale)
            throw std::invalid_argument("coefficients violate Hermitian symmetry at n = " +
                                        std::to_string(n));
    }
    std::size_t n_grid = grid ? grid : std::max<std::size_t>(8, next_pow2(4 * static_cast<std::size_t>(std::max(mmax, 1))));
    check_grid(n_grid);
    if (static_cast<int>(n_grid) / 2 < mmax)
        throw resolution_error("grid too small for mode " + std::to_string(mmax));
    std::vector<complex> bins(n_grid, complex(0, 0));
    for (int n = -mmax; n <= mmax; ++n) {
        const std::size_t k = static_cast<std::size_t>(n >= 0 ? n : n + static_cast<int>(n_grid));
        if (std::abs(n) == static_cast<int>(n_grid) / 2)
            bins[n_grid / 2] += at(n);  // both halves land in the shared bin
        else
            bins[k] += at(n);
    }
    auto samples = bins_to_samples(bins);
    return PeriodicFunction(std::move(samples), std::move(bins));
}

PeriodicFunction PeriodicFunction::zero(std::size_t n) {
    check_grid(n);
    return PeriodicFunction(std::vector<double>(n, 0.0), std::vector<complex>(n, complex(0, 0)));
}

PeriodicFunction PeriodicFunction::constant(double c, std::size_t n) {
    auto f = zero(n);
    f.bins_[0] = c;
    f.samples_.assign(n, c);
    return f;
}

PeriodicFunction PeriodicFunction::harmonic(int k, double a, double b, std::size_t n) {
    if (k < 0) throw std::invalid_argument("harmonic index must be >= 0");
    if (n == 0) n = std::max<std::size_t>(8, next_pow2(4 * static_cast<std::size_t>(std::max(k, 1))));
    std::vector<complex> c(2 * static_cast<std::size_t>(k) + 1, complex(0, 0));
    // a cos kt + b sin kt = (a/2 - ib/2) e^{ikt} + (a/2 + ib/2) e^{-ikt}
    if (k == 0) {
        c[0] = a;
    } else {
        c[static_cast<std::size_t>(2 * k)] = complex(a / 2, -b / 2);
        c[0] = complex(a / 2, b / 2);
    }
    return from_coeffs(c, n);
}

double PeriodicFunction::node(std::size_t j) const {
    return -pi + 2.0 * pi * static_cast<double>(j) / static_cast<double>(size());
}

PeriodicFunction::complex PeriodicFunction::coeff(int n) const {
    const int half = max_mode();
    if (std::abs(n) > half) return complex(0, 0);
    if (std::abs(n) == half) return bins_[static_cast<std::size_t>(half)] / 2.0;
    return bins_[static_cast<std::size_t>(n >= 0 ? n : n + static_cast<int>(size()))];
}

double PeriodicFunction::evaluate(double t) const {
    const int half = max_mode();
    double acc = bins_[0].real();
    for (int n = 1; n < half; ++n) {
        const auto c = bins_[static_cast<std::size_t>(n)];
        acc += 2.0 * (c.real() * std::cos(n * t) - c.imag() * std::sin(n * t));
    }
    acc += bins_[static_cast<std::size_t>(half)].real() * std::cos(half * t);
    return acc;
}

std::vector<PeriodicFunction::complex> PeriodicFunction::mapped_bins(
    const std::function<complex(int, complex)>& mult, complex nyquist_factor) const {
    const std::size_t n = size();
    std::vector<complex> out(n);
    out[0] = mult(0, bins_[0]);
    for (std::size_t k = 1; k < n; ++k) {
        const int mode = k <= n / 2 ? static_cast<int>(k) : static_cast<int>(k) - static_cast<int>(n);
        out[k] = mult(mode, bins_[k]);
    }
    out[n / 2] = nyquist_factor * bins_[n / 2];
    return out;
}

PeriodicFunction PeriodicFunction::hilbert() const {
    auto bins = mapped_bins(
        [](int n, complex c) {
            if (n == 0) return complex(0, 0);
            return complex(0, n > 0 ? -1.0 : 1.0) * c;
        },
        complex(0, 0));
    auto samples = bins_to_samples(bins);
    return PeriodicFunction(std::move(samples), std::move(bins));
}

PeriodicFunction PeriodicFunction::derivative() const {
    auto bins = mapped_bins([](int n, complex c) { return complex(0, n) * c; }, complex(0, 0));
    auto samples = bins_to_samples(bins);
    return PeriodicFunction(std::move(samples), std::move(bins));
}

PeriodicFunction PeriodicFunction::conjugate_derivative() const {
    auto bins = mapped_bins([](int n, complex c) { return static_cast<double>(std::abs(n)) * c; },
                            complex(static_cast<double>(size()) / 2.0, 0));
    auto samples = bins_to_samples(bins);
    return PeriodicFunction(std::move(samples), std::move(bins));
}

PeriodicFunction PeriodicFunction::resampled(std::size_t n) const {
    check_grid(n);
    if (n == size()) return *this;
    std::vector<complex> bins(n, complex(0, 0));
    const int old_half = max_mode();
    const int new_half = static_cast<int>(n) / 2;
    if (n > size()) {
        for (int m = -old_half + 1; m < old_half; ++m) {
            const std::size_t src = static_cast<std::size_t>(m >= 0 ? m : m + static_cast<int>(size()));
            const std::size_t dst = static_cast<std::size_t>(m >= 0 ? m : m + static_cast<int>(n));
            bins[dst] = bins_[src];
        }
        // old Nyquist splits symmetrically into ±N/2, both representable now
        const complex c = bins_[static_cast<std::size_t>(old_half)] / 2.0;
        bins[static_cast<std::size_t>(old_half)] += c;
        bins[n - static_cast<std::size_t>(old_half)] += std::conj(c);
    } else {
        for (int m = -new_half + 1; m < new_half; ++m) {
            const std::size_t src = static_cast<std::size_t>(m >= 0 ? m : m + static_cast<int>(size()));
            const std::size_t dst = static_cast<std::size_t>(m >= 0 ? m : m + static_cast<int>(n));
            bins[dst] = bins_[src];
        }
        bins[static_cast<std::size_t>(new_half)] =
            2.0 * bins_[static_cast<std::size_t>(new_half)].real();
    }
    auto samples = bins_to_samples(bins);
    return PeriodicFunction(std::move(samples), std::move(bins));
}

PeriodicFunction PeriodicFunction::map(const std::function<double(double)>& f) const {
    std::vector<double> out(size());
    for (std::size_t j = 0; j < size(); ++j) out[j] = f(samples_[j]);
    return from_samples(std::move(out));
}

double PeriodicFunction::integral() const { return 2.0 * pi * bins_[0].real(); }
double PeriodicFunction::mean() const { return bins_[0].real(); }

double PeriodicFunction::l2_norm() const {
    const int half = max_mode();
    double acc = std::norm(bins_[0]);
    for (int n = 1; n < half; ++n) acc += 2.0 * std::norm(bins_[static_cast<std::size_t>(n)]);
    acc += std::norm(bins_[static_cast<std::size_t>(half)]) / 2.0;
    return std::sqrt(2.0 * pi * acc);
}

double PeriodicFunction::l1_norm() const {
    double acc = 0;
    for (double s : samples_) acc += std::abs(s);
    return acc * 2.0 * pi / static_cast<double>(size());
}

double PeriodicFunction::sup_norm() const {
    double m = 0;
    for (double s : samples_) m = std::max(m, std::abs(s));
    return m;
}

double PeriodicFunction::min_value() const {
    return *std::min_element(samples_.begin(), samples_.end());
}

double PeriodicFunction::max_value() const {
    return *std::max_element(samples_.begin(), samples_.end());
}

double PeriodicFunction::h_half_norm() const {
    const int half = max_mode();
    double acc = std::norm(bins_[0]);
    for (int n = 1; n < half; ++n)
        acc += 2.0 * (1.0 + n) * std::norm(bins_[static_cast<std::size_t>(n)]);
    acc += (1.0 + half) * std::norm(bins_[static_cast<std::size_t>(half)]) / 2.0;
    return std::sqrt(acc);
}

PeriodicFunction& PeriodicFunction::operator+=(const PeriodicFunction& other) {
    if (other.size() != size()) {
        if (other.size() > size()) {
            *this = resampled(other.size());
        } else {
            return *this += other.resampled(size());
        }
    }
    for (std::size_t j = 0; j < size(); ++j) samples_[j] += other.samples_[j];
    for (std::size_t k = 0; k < size(); ++k) bins_[k] += other.bins_[k];
    return *this;
}

PeriodicFunction& PeriodicFunction::operator-=(const PeriodicFunction& other) {
    PeriodicFunction neg = other;
    neg *= -1.0;
    return *this += neg;
}

PeriodicFunction& PeriodicFunction::operator*=(double c) {
    for (auto& s : samples_) s *= c;
    for (auto& b : bins_) b *= c;
    return *this;
}

PeriodicFunction& PeriodicFunction::operator+=(double c) {
    for (auto& s : samples_) s += c;
    bins_[0] += c;
    return *this;
}

PeriodicFunction product(const PeriodicFunction& u, const PeriodicFunction& w) {
    const std::size_t n = std::max(u.size(), w.size());
    const PeriodicFunction& ur = u.size() == n ? u : u.resampled(n);
    PeriodicFunction uw = (w.size() == n ? w : w.resampled(n));
    const std::size_t fine = 2 * n;
    auto up = ur.resampled(fine);
    auto wp = uw.resampled(fine);
    std::vector<double> prod(fine);
    for (std::size_t j = 0; j < fine; ++j) prod[j] = up.samples()[j] * wp.samples()[j];
    return PeriodicFunction::from_samples(std::move(prod)).resampled(n);
}

double e0_form(const PeriodicFunction& u) {
    const int half = u.max_mode();
    double acc = 0;
    for (int n = 1; n < half; ++n) acc += 2.0 * n * std::norm(u.coeff(n));
    acc += 2.0 * half * std::norm(u.coeff(half));  // û(±N/2) both carry |n| = N/2
    return 2.0 * std::numbers::pi * acc;
}

nlohmann::json PeriodicFunction::to_json() const {
    return nlohmann::json{{"n", size()}, {"samples", samples_}};
}

PeriodicFunction PeriodicFunction::from_json(const nlohmann::json& j) {
    std::vector<double> samples = j.at("samples").get<std::vector<double>>();
    if (j.at("n").get<std::size_t>() != samples.size())
        throw std::invalid_argument("sample count does not match declared n");
    return from_samples(std::move(samples));
}

}  // namespace wavemorse
