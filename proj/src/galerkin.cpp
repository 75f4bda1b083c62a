#include "wavemorse/galerkin.hpp"

#include <lapacke.h>

#include <bit>
#include <cmath>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

#include "wavemorse/errors.hpp"

namespace wavemorse {

namespace {

constexpr double pi = std::numbers::pi;

}  // namespace

Potential::Potential(PeriodicFunction v) : v_(std::move(v)) {
    const double mn = v_.min_value();
    if (mn < -1e-12)
        throw std::invalid_argument("potential must be nonnegative (min sample " +
                                    std::to_string(mn) + ")");
    strictly_positive_ = mn > 0.0;
}

double Potential::orlicz_b_norm() const {
    return orlicz_norm(SampledDensity::from_periodic(v_), NFunction::B());
}

Inertia symmetric_inertia(Eigen::MatrixXd a) {
    const auto n = static_cast<lapack_int>(a.rows());
    std::vector<lapack_int> ipiv(static_cast<std::size_t>(n));
    const lapack_int info = LAPACKE_dsytrf(LAPACK_COL_MAJOR, 'L', n, a.data(), n, ipiv.data());
    if (info < 0) throw std::runtime_error("dsytrf: illegal argument " + std::to_string(-info));
    Inertia res;
    for (lapack_int i = 0; i < n; ++i) {
        if (ipiv[static_cast<std::size_t>(i)] > 0) {
            const double d = a(i, i);
            if (d < 0)
                ++res.negative;
            else if (d > 0)
                ++res.positive;
            else
                ++res.zero;
        } else {
            // 2x2 block [[d11, d21], [d21, d22]]
            const double d11 = a(i, i), d21 = a(i + 1, i), d22 = a(i + 1, i + 1);
            const double det = d11 * d22 - d21 * d21;
            const double tr = d11 + d22;
            if (det < 0) {
                ++res.negative;
                ++res.positive;
            } else if (det > 0) {
                if (tr < 0)
                    res.negative += 2;
                else
                    res.positive += 2;
            } else {
                ++res.zero;
                if (tr < 0)
                    ++res.negative;
                else if (tr > 0)
                    ++res.positive;
                else
                    ++res.zero;
            }
            ++i;
        }
    }
    return res;
}

Eigen::MatrixXd trig_gram(const PeriodicFunction& w, int m) {
    if (m < 1) throw std::invalid_argument("trig_gram wants m >= 1");
    if (w.size() < 4 * static_cast<std::size_t>(m))
        throw resolution_error("weight grid " + std::to_string(w.size()) +
                               " cannot resolve truncation m = " + std::to_string(m) +
                               " (need >= 4m)");
    // Entries come from ∫w cos(kt) dt = 2π Re ŵ(k), ∫w sin(kt) dt = -2π Im ŵ(k).
    std::vector<std::complex<double>> c(static_cast<std::size_t>(2 * m + 1));
    for (int k = 0; k <= 2 * m; ++k) c[static_cast<std::size_t>(k)] = w.coeff(k);
    const auto re = [&](int k) { return c[static_cast<std::size_t>(std::abs(k))].real(); };
    const auto im = [&](int k) {
        const double v2 = c[static_cast<std::size_t>(std::abs(k))].imag();
        return k >= 0 ? v2 : -v2;
    };

    const Eigen::Index dim = 2 * m + 1;
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(dim, dim);
    g(0, 0) = re(0);
    for (int j = 1; j <= m; ++j) {
        const Eigen::Index cj = 2 * j - 1, sj = 2 * j;
        g(0, cj) = g(cj, 0) = std::numbers::sqrt2 * re(j);
        g(0, sj) = g(sj, 0) = -std::numbers::sqrt2 * im(j);
        for (int i = 1; i <= m; ++i) {
            const Eigen::Index ci = 2 * i - 1, si = 2 * i;
            g(ci, cj) = re(i - j) + re(i + j);
            g(si, sj) = re(i - j) - re(i + j);
            // ∫w cos(it) sin(jt) dt / π = Im ŵ(i-j) - Im ŵ(i+j)
            g(ci, sj) = im(i - j) - im(i + j);
            g(sj, ci) = g(ci, sj);
        }
    }
    return g;
}

GalerkinForm assemble_qv(const Potential& v, int m) {
    GalerkinForm form;
    form.order = m;
    form.matrix = -trig_gram(v.function(), m);
    for (Eigen::Index i = 0; i < form.matrix.rows(); ++i)
        form.matrix(i, i) += GalerkinForm::mode_of(i);
    form.matrix = 0.5 * (form.matrix + form.matrix.transpose()).eval();
    return form;
}

CountReport count_negative(const GalerkinForm& form) {
    CountReport rep;
    rep.order = form.order;
    rep.dimension = form.dimension();
    const Eigen::MatrixXd& a = form.matrix;
    const double scale = a.cwiseAbs().rowwise().sum().maxCoeff();
    rep.epsilon = 1e-9 * (1.0 + scale);
    const Eigen::Index n = a.rows();
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
    const Inertia lo = symmetric_inertia(a + rep.epsilon * id);  // λ < -ε
    const Inertia hi = symmetric_inertia(a - rep.epsilon * id);  // λ < +ε
    rep.count = lo.negative;
    rep.count_upper = hi.negative;
    rep.indeterminate = rep.count != rep.count_upper;
    rep.margin = rep.epsilon;  // lower bound unless the eigensolve runs
    rep.margin_exact = false;
    if (n <= 512) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
        const auto& ev = es.eigenvalues();
        int neg = 0;
        double margin = std::numeric_limits<double>::infinity();
        for (Eigen::Index i = 0; i < n; ++i) {
            if (ev[i] < -rep.epsilon) ++neg;
            margin = std::min(margin, std::abs(ev[i]));
        }
        if (neg != rep.count)
            throw std::logic_error("inertia/eigensolve count mismatch: " +
                                   std::to_string(rep.count) + " vs " + std::to_string(neg));
        rep.margin = margin;
        rep.margin_exact = true;
    }
    return rep;
}

CountReport n_minus(const Potential& v, int m) {
    CountReport rep = count_negative(assemble_qv(v, m));
    rep.v_l1 = v.l1_norm();
    rep.v_orlicz_b = v.orlicz_b_norm();
    rep.lower_ratio = rep.v_l1 > 0 ? rep.count / rep.v_l1 : 0.0;
    rep.upper_ratio =
        rep.v_orlicz_b > 0 ? std::max(rep.count - 1, 0) / rep.v_orlicz_b : 0.0;
    return rep;
}

int choose_truncation(const Potential& v, int m_cap) {
    int m = std::max(4, static_cast<int>(std::ceil(4.0 * (1.0 + v.max_value()))));
    auto count_at = [&](int mm) {
        const Potential resampled(
            v.function().size() < 4 * static_cast<std::size_t>(mm)
                ? v.function().resampled(std::bit_ceil(4 * static_cast<std::size_t>(mm)))
                : v.function());
        return count_negative(assemble_qv(resampled, mm)).count;
    };
    int c0 = count_at(m), c1 = count_at(2 * m);
    while (m <= m_cap) {
        const int c2 = count_at(4 * m);
        if (c0 == c1 && c1 == c2) return 4 * m;
        m *= 2;
        c0 = c1;
        c1 = c2;
    }
    throw resolution_error("negative count failed to stabilize below m = " +
                           std::to_string(m_cap));
}

WeylReport weyl_slope(const Potential& v, const std::vector<double>& alphas) {
    if (alphas.empty()) throw std::invalid_argument("weyl_slope wants a nonempty alpha list");
    if (!(v.max_value() > 0)) throw std::invalid_argument("weyl_slope wants V >= 0, V != 0");
    const double target = v.l1_norm() / pi;
    WeylReport rep;
    for (double alpha : alphas) {
        if (!(alpha > 0)) throw std::invalid_argument("weyl_slope wants alpha > 0");
        const int m = std::max(8, static_cast<int>(std::ceil(4.0 * alpha * v.max_value())));
        auto count_at = [&](int mm) {
            const std::size_t need = std::bit_ceil(4 * static_cast<std::size_t>(mm));
            const PeriodicFunction base =
                v.function().size() >= need ? v.function() : v.function().resampled(need);
            GalerkinForm form = assemble_qv(Potential(base), mm);
            // scale the potential part: q_{αV} = D - αG
            Eigen::MatrixXd d = Eigen::MatrixXd::Zero(form.matrix.rows(), form.matrix.cols());
            for (Eigen::Index i = 0; i < form.matrix.rows(); ++i)
                d(i, i) = GalerkinForm::mode_of(i);
            form.matrix = d + alpha * (form.matrix - d);
            return count_negative(form);
        };
        const CountReport at_m = count_at(m);
        const CountReport check = count_at(m + m / 2);
        if (at_m.count != check.count)
            throw resolution_error("Weyl count not converged at alpha = " +
                                   std::to_string(alpha));
        WeylRow row;
        row.alpha = alpha;
        row.order = m;
        row.count = at_m.count;
        row.ratio = at_m.count / alpha;
        row.target = target;
        row.deviation = std::abs(row.ratio - target) / target;
        rep.rows.push_back(row);
    }
    rep.final_deviation = rep.rows.back().deviation;
    return rep;
}

std::string WeylReport::to_csv() const {
    std::ostringstream os;
    os.precision(17);
    os << "alpha,m,count,ratio,target,deviation\n";
    for (const auto& r : rows)
        os << r.alpha << "," << r.order << "," << r.count << "," << r.ratio << ","
           << r.target << "," << r.deviation << "\n";
    return os.str();
}

TwoSidedFit fit_two_sided_constants(const std::vector<Potential>& ensemble, int m_cap) {
    TwoSidedFit fit;
    fit.c_lower = std::numeric_limits<double>::infinity();
    fit.c_upper = 0.0;
    for (const auto& v : ensemble) {
        if (v.l1_norm() <= 0) {
            ++fit.excluded;
            continue;
        }
        int m;
        try {
            m = choose_truncation(v, m_cap);
        } catch (const resolution_error& e) {
            std::cerr << "warning: ensemble member excluded: " << e.what() << "\n";
            ++fit.excluded;
            continue;
        }
        const std::size_t need = std::bit_ceil(4 * static_cast<std::size_t>(m));
        const Potential vv(v.function().size() >= need ? v.function()
                                                       : v.function().resampled(need));
        fit.members.push_back(n_minus(vv, m));
        const CountReport& r = fit.members.back();
        fit.c_lower = std::min(fit.c_lower, r.lower_ratio);
        fit.c_upper = std::max(fit.c_upper, r.upper_ratio);
    }
    if (fit.members.empty()) throw std::invalid_argument("empty ensemble");
    fit.sandwich_holds = true;
    for (const auto& r : fit.members) {
        const bool lower_ok = fit.c_lower * r.v_l1 <= r.count + 1e-12;
        const bool upper_ok = r.count <= fit.c_upper * r.v_orlicz_b + 1.0 + 1e-12;
        if (!lower_ok || !upper_ok) fit.sandwich_holds = false;
    }
    return fit;
}

std::vector<Potential> random_potential_ensemble(std::size_t count, std::uint64_t seed,
                                                 int max_degree, double min_sup,
                                                 double max_sup) {
    std::vector<Potential> out;
    out.reserve(count);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::uniform_real_distribution<double> sup_dist(min_sup, max_sup);
    std::uniform_int_distribution<int> deg_dist(1, max_degree);
    for (std::size_t i = 0; i < count; ++i) {
        const int deg = deg_dist(rng);
        const std::size_t grid = 256;
        PeriodicFunction p = PeriodicFunction::harmonic(0, normal(rng), 0.0, grid);
        for (int k = 1; k <= deg; ++k)
            p += PeriodicFunction::harmonic(k, normal(rng), normal(rng), grid);
        PeriodicFunction v = product(p, p);
        const double target_sup = sup_dist(rng);
        const double sup = v.max_value();
        if (sup > 0) v *= target_sup / sup;
        // clip rounding dust so the nonnegativity invariant holds exactly
        std::vector<double> s = v.samples();
        for (double& x : s) x = std::max(x, 0.0);
        out.emplace_back(PeriodicFunction::from_samples(std::move(s)));
    }
    return out;
}

nlohmann::json CountReport::to_json() const {
    return nlohmann::json{{"count", count},
                          {"count_upper", count_upper},
                          {"indeterminate", indeterminate},
                          {"epsilon", epsilon},
                          {"margin", margin},
                          {"margin_exact", margin_exact},
                          {"m", order},
                          {"dimension", dimension},
                          {"v_l1", v_l1},
                          {"v_orlicz_b", v_orlicz_b},
                          {"lower_ratio", lower_ratio},
                          {"upper_ratio", upper_ratio}};
}

nlohmann::json TwoSidedFit::to_json() const {
    nlohmann::json members_json = nlohmann::json::array();
    for (const auto& m : members) members_json.push_back(m.to_json());
    return nlohmann::json{{"c_lower", c_lower},
                          {"c_upper", c_upper},
                          {"excluded", excluded},
                          {"sandwich_holds", sandwich_holds},
                          {"members", members_json}};
}

}  // namespace wavemorse
