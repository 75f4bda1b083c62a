#ifndef WAVEMORSE_NFUNCTION_HPP
#define WAVEMORSE_NFUNCTION_HPP

#include <functional>
#include <string>

namespace wavemorse {

// An N-function: even, convex, φ(0) = 0, superlinear at infinity, paired
// with its Young conjugate. The built-in mutually complementary pair is
//
//     A(s) = e^{|s|} - 1 - |s|,    B(s) = (1 + |s|) ln(1 + |s|) - |s|.
//
// A is evaluated in expm1 form; beyond |s| > 709 it saturates to +inf,
// which the norm searches treat as an infeasible modular.
class NFunction {
public:
    NFunction(std::string name,
              std::function<double(double)> phi,
              std::function<double(double)> phi_derivative,
              std::function<double(double)> phi_inverse,
              std::function<double(double)> derivative_inverse);

    const std::string& name() const { return name_; }
    double operator()(double s) const { return phi_(s); }
    double derivative(double s) const { return dphi_(s); }      // s ≥ 0
    double inverse(double y) const { return inv_(y); }          // y ≥ 0
    double derivative_inverse(double y) const { return dinv_(y); }
    const NFunction& conjugate() const { return *conjugate_; }

    static const NFunction& A();
    static const NFunction& B();

private:
    std::string name_;
    std::function<double(double)> phi_, dphi_, inv_, dinv_;
    const NFunction* conjugate_ = nullptr;

    friend void wire_builtin_pair(NFunction& a, NFunction& b);
};

/// (½ s ln₊s, B(s), s + 2 s ln₊s) with lhs ≤ mid ≤ rhs for s ≥ 0.
struct ElemBounds {
    double lhs, mid, rhs;
};
ElemBounds check_elem_bounds(double s);

}  // namespace wavemorse

#endif
