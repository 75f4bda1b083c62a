#include "wavemorse/nfunction.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace wavemorse {

namespace {

constexpr double kExpOverflow = 709.0;

double young_a(double s) {
    const double a = std::abs(s);
    if (a > kExpOverflow) return std::numeric_limits<double>::infinity();
    return std::expm1(a) - a;
}

double young_a_derivative(double s) {
    const double a = std::abs(s);
    if (a > kExpOverflow) return std::numeric_limits<double>::infinity();
    return std::expm1(a);
}

// Solve e^s - 1 - s = y for s ≥ 0. Bisection: A is convex increasing and
// saturates to +inf past the overflow edge, so the bracket always closes.
double young_a_inverse(double y) {
    if (y < 0) throw std::domain_error("A^{-1} of negative value");
    if (y == 0) return 0.0;
    double hi = 1.0;
    while (young_a(hi) < y) hi *= 2.0;
    double lo = 0.0;
    for (int i = 0; i < 200 && hi - lo > 1e-17 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (young_a(mid) < y)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double young_b(double s) {
    const double a = std::abs(s);
    return (1.0 + a) * std::log1p(a) - a;
}

double young_b_derivative(double s) { return std::log1p(std::abs(s)); }

double young_b_inverse(double y) {
    if (y < 0) throw std::domain_error("B^{-1} of negative value");
    if (y == 0) return 0.0;
    // bracket then Newton; B is convex increasing on [0, ∞)
    double hi = std::max(1.0, std::sqrt(2.0 * y));
    while (young_b(hi) < y) hi *= 2.0;
    double s = hi;
    for (int i = 0; i < 100; ++i) {
        const double g = young_b(s) - y;
        const double d = young_b_derivative(s);
        double next = d > 0 ? s - g / d : s / 2;
        if (next <= 0) next = s / 2;
        if (std::abs(next - s) <= 1e-16 * (1.0 + next)) return next;
        s = next;
    }
    return s;
}

}  // namespace

NFunction::NFunction(std::string name,
                     std::function<double(double)> phi,
                     std::function<double(double)> phi_derivative,
                     std::function<double(double)> phi_inverse,
                     std::function<double(double)> derivative_inverse)
    : name_(std::move(name)),
      phi_(std::move(phi)),
      dphi_(std::move(phi_derivative)),
      inv_(std::move(phi_inverse)),
      dinv_(std::move(derivative_inverse)) {}

void wire_builtin_pair(NFunction& a, NFunction& b) {
    a.conjugate_ = &b;
    b.conjugate_ = &a;
}

const NFunction& NFunction::A() {
    static NFunction* a = nullptr;
    static NFunction* b = nullptr;
    if (!a) {
        // (A')^{-1}(y) = ln(1+y), (B')^{-1}(y) = e^y - 1
        a = new NFunction("A", young_a, young_a_derivative, young_a_inverse,
                          [](double y) { return std::log1p(y); });
        b = new NFunction("B", young_b, young_b_derivative, young_b_inverse,
                          [](double y) { return std::expm1(y); });
        wire_builtin_pair(*a, *b);
    }
    return *a;
}

const NFunction& NFunction::B() {
    A();
    return NFunction::A().conjugate();
}

ElemBounds check_elem_bounds(double s) {
    if (s < 0) throw std::domain_error("check_elem_bounds wants s >= 0");
    const double lnp = s > 1.0 ? std::log(s) : 0.0;
    return ElemBounds{0.5 * s * lnp, young_b(s), s + 2.0 * s * lnp};
}

}  // namespace wavemorse
