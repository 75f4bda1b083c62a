#include "wavemorse/orlicz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "wavemorse/errors.hpp"

namespace wavemorse {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double inf = std::numeric_limits<double>::infinity();

// 12-point Gauss-Legendre on [-1, 1]; machine-exact for the analytic
// per-segment integrands ψ(linear) this module produces, and additive
// across subintervals, which the covering construction relies on.
constexpr int kGauss = 12;
constexpr double kGaussX[kGauss] = {
    -0.9815606342467192, -0.9041172563704749, -0.7699026741943047,
    -0.5873179542866175, -0.3678314989981802, -0.1252334085114689,
    0.1252334085114689,  0.3678314989981802,  0.5873179542866175,
    0.7699026741943047,  0.9041172563704749,  0.9815606342467192};
constexpr double kGaussW[kGauss] = {
    0.0471753363865118, 0.1069393259953184, 0.1600783285433462,
    0.2031674267230659, 0.2334925365383548, 0.2491470458134028,
    0.2491470458134028, 0.2334925365383548, 0.2031674267230659,
    0.1600783285433462, 0.1069393259953184, 0.0471753363865118};

// Minimise a unimodal h over lnk, starting near `center`. +inf values can
// only occur on the large-k side, so golden section still contracts.
template <typename F>
double golden_min_log(const F& h, double center) {
    const double step = std::log(2.0);
    double lo = center, hi = center;
    while (h(lo - step) < h(lo)) {
        lo -= step;
        if (center - lo > 300) break;
    }
    while (h(hi + step) < h(hi)) {
        hi += step;
        if (hi - center > 300) break;
    }
    lo -= step;
    hi += step;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = h(x1), f2 = h(x2);
    while (hi - lo > 1e-6) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = h(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = h(x2);
        }
    }
    return std::min(f1, f2);
}

}  // namespace

SampledDensity::SampledDensity(double a, double b, std::vector<double> values)
    : a_(a), b_(b), values_(std::move(values)) {
    if (!(b_ > a_)) throw std::invalid_argument("density interval must have b > a");
    if (values_.size() < 8) throw std::invalid_argument("density grid size must be >= 8");
    for (double v : values_)
        if (!std::isfinite(v)) throw std::invalid_argument("density sample is not finite");
}

SampledDensity SampledDensity::constant(double c, double a, double b, std::size_t n) {
    return SampledDensity(a, b, std::vector<double>(n, c));
}

SampledDensity SampledDensity::from_periodic(const PeriodicFunction& u) {
    std::vector<double> v = u.samples();
    v.push_back(v.front());
    return SampledDensity(-pi, pi, std::move(v));
}

double SampledDensity::value(double t) const {
    if (t <= a_) return values_.front();
    if (t >= b_) return values_.back();
    const double h = (b_ - a_) / static_cast<double>(values_.size() - 1);
    const double x = (t - a_) / h;
    const auto i = std::min<std::size_t>(static_cast<std::size_t>(x), values_.size() - 2);
    const double w = x - static_cast<double>(i);
    return (1.0 - w) * values_[i] + w * values_[i + 1];
}

double SampledDensity::l1_norm() const {
    // exact integral of |interpolant|: split each segment at a sign change
    const double h = (b_ - a_) / static_cast<double>(values_.size() - 1);
    double acc = 0;
    for (std::size_t i = 0; i + 1 < values_.size(); ++i) {
        const double u = values_[i], v = values_[i + 1];
        if (u * v >= 0) {
            acc += 0.5 * (std::abs(u) + std::abs(v)) * h;
        } else {
            const double z = u / (u - v);  // crossing position in [0,1]
            acc += 0.5 * (std::abs(u) * z + std::abs(v) * (1.0 - z)) * h;
        }
    }
    return acc;
}

double SampledDensity::linf_norm() const {
    double m = 0;
    for (double v : values_) m = std::max(m, std::abs(v));
    return m;
}

bool SampledDensity::is_zero() const {
    for (double v : values_)
        if (v != 0.0) return false;
    return true;
}

bool SampledDensity::nonnegative() const {
    for (double v : values_)
        if (v < 0.0) return false;
    return true;
}

SampledDensity SampledDensity::scaled(double c) const {
    std::vector<double> v = values_;
    for (double& x : v) x *= c;
    return SampledDensity(a_, b_, std::move(v));
}

nlohmann::json SampledDensity::to_json() const {
    return nlohmann::json{{"a", a_}, {"b", b_}, {"values", values_}};
}

std::string SampledDensity::to_csv() const {
    std::ostringstream os;
    os.precision(17);
    os << "t,value\n";
    const double h = (b_ - a_) / static_cast<double>(values_.size() - 1);
    for (std::size_t i = 0; i < values_.size(); ++i)
        os << a_ + h * static_cast<double>(i) << "," << values_[i] << "\n";
    return os.str();
}

namespace {

// True iff the interpolant vanishes identically on [alpha, beta]: every
// node whose segment meets the window must be zero.
bool zero_on(const SampledDensity& f, double alpha, double beta) {
    const std::size_t m = f.size() - 1;
    const double h = f.length() / static_cast<double>(m);
    const auto lo = static_cast<std::size_t>(
        std::clamp(std::floor((alpha - f.a()) / h), 0.0, static_cast<double>(m)));
    const auto hi = static_cast<std::size_t>(
        std::clamp(std::ceil((beta - f.a()) / h), 0.0, static_cast<double>(m)));
    for (std::size_t i = lo; i <= hi; ++i)
        if (f.values()[i] != 0.0) return false;
    return true;
}

}  // namespace

double modular(const SampledDensity& f, const NFunction& psi, double kappa,
               double alpha, double beta) {
    if (!(kappa > 0)) throw std::domain_error("modular wants kappa > 0");
    alpha = std::max(alpha, f.a());
    beta = std::min(beta, f.b());
    if (!(beta > alpha)) return 0.0;
    const std::size_t m = f.size() - 1;
    const double h = f.length() / static_cast<double>(m);
    const auto seg_lo = static_cast<std::size_t>(
        std::clamp((alpha - f.a()) / h, 0.0, static_cast<double>(m - 1)));
    const auto seg_hi = static_cast<std::size_t>(
        std::clamp((beta - f.a()) / h, 0.0, static_cast<double>(m - 1)));
    double acc = 0;
    for (std::size_t s = seg_lo; s <= seg_hi; ++s) {
        const double lo = std::max(alpha, f.a() + h * static_cast<double>(s));
        const double hi = std::min(beta, f.a() + h * static_cast<double>(s + 1));
        if (!(hi > lo)) continue;
        const double mid = 0.5 * (lo + hi), rad = 0.5 * (hi - lo);
        for (int g = 0; g < kGauss; ++g) {
            const double val = psi(f.value(mid + rad * kGaussX[g]) / kappa);
            if (std::isinf(val)) return inf;
            acc += kGaussW[g] * rad * val;
        }
    }
    return acc;
}

double modular(const SampledDensity& f, const NFunction& psi, double kappa) {
    return modular(f, psi, kappa, f.a(), f.b());
}

double luxemburg_norm(const SampledDensity& f, const NFunction& psi) {
    if (f.is_zero()) return 0.0;
    // modular(κ) decreases strictly in κ where finite; bracket the root
    // of modular(κ) = 1, then bisect
    double hi = std::max(f.linf_norm(), 1e-300);
    while (modular(f, psi, hi) > 1.0) hi *= 2.0;
    while (hi > 1e-300 && modular(f, psi, hi / 2.0) <= 1.0) hi /= 2.0;
    double lo = hi / 2.0;
    for (int i = 0; i < 200 && hi - lo > 1e-10 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (modular(f, psi, mid) > 1.0)
            lo = mid;
        else
            hi = mid;
    }
    return hi;
}

double orlicz_norm(const SampledDensity& f, const NFunction& psi) {
    if (f.is_zero()) return 0.0;
    const auto h = [&](double lnk) {
        const double k = std::exp(lnk);
        const double m = modular(f, psi, 1.0 / k);
        return std::isinf(m) ? inf : (1.0 + m) / k;
    };
    // near k = 1/‖f‖_(ψ) the modular is ≈ 1 and h ≈ 2·lux: a good seed
    const double lux = luxemburg_norm(f, psi);
    return golden_min_log(h, -std::log(std::max(lux, 1e-300)));
}

double averaged_norm(const SampledDensity& f, const NFunction& psi,
                     double alpha, double beta) {
    alpha = std::max(alpha, f.a());
    beta = std::min(beta, f.b());
    if (!(beta > alpha)) return 0.0;
    if (zero_on(f, alpha, beta)) return 0.0;
    const double level = beta - alpha;
    const auto h = [&](double lnk) {
        const double k = std::exp(lnk);
        const double m = modular(f, psi, 1.0 / k, alpha, beta);
        return std::isinf(m) ? inf : (level + m) / k;
    };
    return golden_min_log(h, -std::log(std::max(f.linf_norm(), 1e-300)));
}

double averaged_norm(const SampledDensity& f, const NFunction& psi) {
    return averaged_norm(f, psi, f.a(), f.b());
}

Partition solomyak_partition(const SampledDensity& v, int n) {
    if (n < 1) throw std::invalid_argument("partition wants n >= 1");
    if (!v.nonnegative()) throw std::invalid_argument("partition wants V >= 0");
    if (n > 32 * static_cast<int>(v.size()))
        throw resolution_error("interval budget " + std::to_string(n) +
                               " is finer than the sampling resolution");
    const NFunction& B = NFunction::B();
    Partition part;
    part.whole_norm = averaged_norm(v, B);
    if (part.whole_norm == 0.0 || v.is_zero()) {
        part.target = 0.0;
        part.intervals.push_back({v.a(), v.b(), 0.0});
        return part;
    }
    // Budget per interval. The slight slack keeps exact-divisibility cases
    // (constant V) at n pieces instead of n+1: the averaged norm is
    // superadditive over disjoint pieces, so pieces at the full budget
    // cannot number more than n.
    part.target = part.whole_norm / static_cast<double>(n) * (1.0 + 1e-9);
    const double min_len = v.length() * 1e-13;
    double left = v.a();
    while (left < v.b()) {
        const double full = averaged_norm(v, B, left, v.b());
        if (full <= part.target) {
            part.intervals.push_back({left, v.b(), full});
            break;
        }
        // grow the piece by bisection on its right endpoint; the averaged
        // norm increases continuously in it
        double lo = left, hi = v.b();
        double norm_lo = 0.0;
        for (int i = 0; i < 90; ++i) {
            const double mid = 0.5 * (lo + hi);
            const double val = averaged_norm(v, B, left, mid);
            if (val <= part.target) {
                lo = mid;
                norm_lo = val;
                if (part.target - val <= 1e-9 * part.target) break;
            } else {
                hi = mid;
            }
            if (hi - lo <= std::max(min_len, 1e-14 * v.length())) break;
        }
        if (lo <= left + min_len)
            throw resolution_error("partition budget below sampling resolution");
        part.intervals.push_back({left, lo, norm_lo});
        left = lo;
        if (static_cast<int>(part.intervals.size()) > n)
            throw resolution_error("partition exceeded the interval budget");
    }
    return part;
}

OneInftyBound bound_1infty(const SampledDensity& g) {
    if (g.is_zero()) throw std::invalid_argument("bound_1infty wants g not identically 0");
    if (std::abs(g.a() + pi) > 1e-9 || std::abs(g.b() - pi) > 1e-9)
        throw std::invalid_argument("bound_1infty is stated on [-pi, pi]");
    const double l1 = g.l1_norm();
    const double linf = g.linf_norm();
    OneInftyBound out;
    out.lhs = orlicz_norm(g, NFunction::B());
    out.rhs = 8.0 * l1 * std::log(2.0 + 2.0 * pi * linf / l1);
    return out;
}

ZygmundReport zygmund_check(const PeriodicFunction& f) {
    ZygmundReport rep{};
    const PeriodicFunction cf = f.hilbert();
    rep.cf_l1 = cf.l1_norm();
    // ∫|f| ln₊|f| on the sample grid; the integrand is only piecewise
    // smooth, so plain trapezoid is the right tool
    double acc = 0;
    for (double s : f.samples()) {
        const double a = std::abs(s);
        if (a > 1.0) acc += a * std::log(a);
    }
    rep.f_llogl = acc * 2.0 * pi / static_cast<double>(f.size());
    const SampledDensity d = SampledDensity::from_periodic(f);
    rep.f_luxemburg_b = luxemburg_norm(d, NFunction::B());
    rep.f_orlicz_b = orlicz_norm(d, NFunction::B());
    rep.a0 = pi / 2.0 + (2.0 * pi + 1.0) * std::log1p(1.0 / (2.0 * pi));
    rep.nonnegative = f.min_value() >= -1e-12;
    if (rep.nonnegative) {
        const double bound = 2.0 * rep.a0 * std::max(rep.cf_l1, f.l1_norm());
        rep.positive_bound_holds = rep.f_orlicz_b <= bound * (1.0 + 1e-9);
    } else {
        rep.positive_bound_holds = false;
    }
    return rep;
}

nlohmann::json ZygmundReport::to_json() const {
    return nlohmann::json{{"cf_l1", cf_l1},
                          {"f_llogl", f_llogl},
                          {"f_luxemburg_b", f_luxemburg_b},
                          {"f_orlicz_b", f_orlicz_b},
                          {"a0", a0},
                          {"nonnegative", nonnegative},
                          {"positive_bound_holds", positive_bound_holds}};
}

}  // namespace wavemorse
