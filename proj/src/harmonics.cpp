// SPDX-FileCopyrightText: 2026 The povmkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "povmkit/harmonics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace povmkit {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxDegree = 64;

void check_degree(int l, int m_abs) {
    if (l < 0 || l > kMaxDegree || m_abs > l) {
        std::ostringstream msg;
        msg << "(l, m) = (" << l << ", " << m_abs << ") out of range, need 0 <= |m| <= l <= "
            << kMaxDegree;
        throw IndexOutOfRangeError(msg.str());
    }
}

// Normalized associated Legendre function
//   \bar P_l^m(x) = sqrt((2l+1)/(4 pi) (l-m)!/(l+m)!) P_l^m(x),
// Condon-Shortley phase included, via the stable normalized upward
// recurrence in l at fixed m. All intermediates stay O(1), so there is
// no factorial overflow.
double normalized_plm(int l, int m, double x) {
    const double omx2 = (1.0 - x) * (1.0 + x);
    double pmm = 1.0;
    double fact = 1.0;
    for (int k = 1; k <= m; ++k) {
        pmm *= omx2 * fact / (fact + 1.0);
        fact += 2.0;
    }
    pmm = std::sqrt((2.0 * m + 1.0) * pmm / (4.0 * kPi));
    if (m & 1) pmm = -pmm;
    if (l == m) return pmm;
    double pmmp1 = x * std::sqrt(2.0 * m + 3.0) * pmm;
    if (l == m + 1) return pmmp1;
    double oldfact = std::sqrt(2.0 * m + 3.0);
    double pll = 0.0;
    for (int ll = m + 2; ll <= l; ++ll) {
        const double f = std::sqrt((4.0 * ll * ll - 1.0) /
                                   (static_cast<double>(ll) * ll - static_cast<double>(m) * m));
        pll = (x * pmmp1 - pmm / oldfact) * f;
        oldfact = f;
        pmm = pmmp1;
        pmmp1 = pll;
    }
    return pll;
}

// Order-insensitive pairwise sum; keeps reported values independent of
// how the evaluation is scheduled.
Complex pairwise_sum(const std::vector<Complex>& terms, std::size_t begin, std::size_t end) {
    const std::size_t n = end - begin;
    if (n == 0) return Complex(0.0, 0.0);
    if (n == 1) return terms[begin];
    const std::size_t mid = begin + n / 2;
    return pairwise_sum(terms, begin, mid) + pairwise_sum(terms, mid, end);
}

std::vector<Vector3> fibonacci_sphere(int count) {
    std::vector<Vector3> points;
    points.reserve(count);
    const double golden_angle = kPi * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < count; ++i) {
        const double z = 1.0 - (2.0 * i + 1.0) / count;
        const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = golden_angle * i;
        points.emplace_back(rho * std::cos(phi), rho * std::sin(phi), z);
    }
    return points;
}

Vector3 from_angles(double theta, double phi) {
    return Vector3(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
                   std::cos(theta));
}

// Grid minimum plus one Newton step on (theta, phi) around the grid
// argmin. Returns the smaller of the two values.
double min_on_sphere(const FrameCoefficients& coeffs, const std::vector<Vector3>& grid) {
    double best = std::numeric_limits<double>::infinity();
    Vector3 arg = Vector3::UnitZ();
    for (const Vector3& p : grid) {
        const double v = evaluate_frame(coeffs, p);
        if (v < best) {
            best = v;
            arg = p;
        }
    }
    const double theta = std::acos(std::clamp(arg.z(), -1.0, 1.0));
    const double phi = std::atan2(arg.y(), arg.x());
    if (theta < 1e-3 || theta > kPi - 1e-3)
        return best; // poles: phi derivatives degenerate, keep the grid value
    const double h = 1e-4;
    auto g = [&](double t, double p) { return evaluate_frame(coeffs, from_angles(t, p)); };
    const double g0 = g(theta, phi);
    const double gt = (g(theta + h, phi) - g(theta - h, phi)) / (2 * h);
    const double gp = (g(theta, phi + h) - g(theta, phi - h)) / (2 * h);
    const double gtt = (g(theta + h, phi) - 2 * g0 + g(theta - h, phi)) / (h * h);
    const double gpp = (g(theta, phi + h) - 2 * g0 + g(theta, phi - h)) / (h * h);
    const double gtp = (g(theta + h, phi + h) - g(theta + h, phi - h) - g(theta - h, phi + h) +
                        g(theta - h, phi - h)) /
                       (4 * h * h);
    const double det = gtt * gpp - gtp * gtp;
    if (std::abs(det) < 1e-14)
        return best;
    const double dt = (-gt * gpp + gp * gtp) / det;
    const double dp = (-gp * gtt + gt * gtp) / det;
    if (std::hypot(dt, dp) > 0.2)
        return best; // refusal: step left the trust region of the grid cell
    return std::min(best, g(theta + dt, phi + dp));
}

} // namespace

double assoc_legendre(int l, int m, double x) {
    if (l < 0 || m < 0 || m > l || l > kMaxDegree) {
        std::ostringstream msg;
        msg << "(l, m) = (" << l << ", " << m << ") out of range, need 0 <= m <= l <= "
            << kMaxDegree;
        throw IndexOutOfRangeError(msg.str());
    }
    if (!(std::abs(x) <= 1.0))
        throw BadParameterError("assoc_legendre argument must lie in [-1, 1]");
    // Seed P_m^m = (-1)^m (2m-1)!! (1-x^2)^{m/2}, factors interleaved so
    // the double factorial never stands alone.
    const double somx2 = std::sqrt((1.0 - x) * (1.0 + x));
    double pmm = 1.0;
    for (int k = 1; k <= m; ++k) pmm *= -(2.0 * k - 1.0) * somx2;
    if (l == m) return pmm;
    double pmmp1 = x * (2.0 * m + 1.0) * pmm;
    if (l == m + 1) return pmmp1;
    double pll = 0.0;
    for (int ll = m + 2; ll <= l; ++ll) {
        pll = (x * (2.0 * ll - 1.0) * pmmp1 - (ll + m - 1.0) * pmm) / (ll - m);
        pmm = pmmp1;
        pmmp1 = pll;
    }
    return pll;
}

Complex ylm(int l, int m, const Vector3& n) {
    const int m_abs = std::abs(m);
    check_degree(l, m_abs);
    if (std::abs(n.norm() - 1.0) > 1e-10) {
        std::ostringstream msg;
        msg << "ylm argument has norm " << n.norm() << ", expected a unit vector";
        throw NotUnitVectorError(msg.str());
    }
    const double x = std::clamp(n.z(), -1.0, 1.0);
    const double phi = std::atan2(n.y(), n.x());
    Complex y = normalized_plm(l, m_abs, x) * std::polar(1.0, m_abs * phi);
    if (m < 0) {
        y = std::conj(y);
        if (m_abs & 1) y = -y;
    }
    return y;
}

SumConditionReport sum_condition(const UnitVectorSet& set, int l) {
    check_degree(l, 0);
    SumConditionReport report;
    report.l = l;
    report.values.resize(2 * l + 1);
    std::vector<Complex> terms(set.size());
    for (int r = -l; r <= l; ++r) {
        for (std::size_t j = 0; j < set.size(); ++j)
            terms[j] = ylm(l, r, set.vectors()[j]);
        const Complex s = pairwise_sum(terms, 0, terms.size());
        report.values[static_cast<std::size_t>(r + l)] = s;
        report.max_abs = std::max(report.max_abs, std::abs(s));
    }
    return report;
}

double default_tol_zero(std::size_t n_vectors) {
    return 1e-8 * std::sqrt(static_cast<double>(n_vectors));
}

AdmissibilitySet admissible_harmonics(const UnitVectorSet& set, int l_max, double tol_zero) {
    if (l_max < 1)
        throw BadParameterError("l_max must be >= 1");
    if (!(tol_zero > 0.0))
        throw BadParameterError("tol_zero must be positive");
    AdmissibilitySet out;
    out.l_max = l_max;
    out.allowed.insert(0); // normalization constraint, not a sum condition
    out.evidence[0] = 0.0;
    for (int l = 1; l <= l_max; ++l) {
        const SumConditionReport report = sum_condition(set, l);
        out.evidence[l] = report.max_abs;
        if (report.max_abs <= tol_zero)
            out.allowed.insert(l);
        if (report.max_abs > tol_zero / 100.0 && report.max_abs < tol_zero * 100.0)
            out.marginal.insert(l);
    }
    return out;
}

FrameCoefficients::FrameCoefficients(int l_max) : l_max_(l_max) {
    if (l_max < 0 || l_max > kMaxDegree)
        throw IndexOutOfRangeError("coefficient cutoff out of range");
    c_.resize(l_max + 1);
    for (int l = 0; l <= l_max; ++l)
        c_[l].assign(2 * l + 1, Complex(0.0, 0.0));
}

Complex FrameCoefficients::get(int l, int m) const {
    if (l < 0 || l > l_max_ || std::abs(m) > l)
        throw IndexOutOfRangeError("coefficient index out of range");
    return c_[l][static_cast<std::size_t>(m + l)];
}

void FrameCoefficients::set(int l, int m, Complex value) {
    if (l < 0 || l > l_max_ || std::abs(m) > l)
        throw IndexOutOfRangeError("coefficient index out of range");
    c_[l][static_cast<std::size_t>(m + l)] = value;
}

FrameCoefficients FrameCoefficients::with_l_max(int l_max) const {
    FrameCoefficients out(l_max);
    const int keep = std::min(l_max, l_max_);
    for (int l = 0; l <= keep; ++l)
        for (int m = -l; m <= l; ++m)
            out.set(l, m, get(l, m));
    return out;
}

double FrameCoefficients::reality_deviation() const {
    double dev = 0.0;
    for (int l = 0; l <= l_max_; ++l) {
        for (int m = 0; m <= l; ++m) {
            const Complex want = (m & 1) ? -std::conj(get(l, m)) : std::conj(get(l, m));
            dev = std::max(dev, std::abs(get(l, -m) - want));
        }
    }
    return dev;
}

FrameCoefficients born_coefficients(int n_outcomes, const Vector3& polarization) {
    if (n_outcomes < 2)
        throw BadParameterError("need at least 2 outcomes");
    if (polarization.norm() > 1.0 + 1e-12) {
        std::ostringstream msg;
        msg << "polarization vector has norm " << polarization.norm() << ", expected <= 1";
        throw InvalidBlochVectorError(msg.str());
    }
    const double n = static_cast<double>(n_outcomes);
    FrameCoefficients c(1);
    c.set(0, 0, std::sqrt(4.0 * kPi) / n);
    c.set(1, 0, std::sqrt(4.0 * kPi / 3.0) * polarization.z() / n);
    c.set(1, 1, std::sqrt(2.0 * kPi / 3.0) * Complex(-polarization.x(), polarization.y()) / n);
    c.set(1, -1, std::sqrt(2.0 * kPi / 3.0) * Complex(polarization.x(), polarization.y()) / n);
    return c;
}

double evaluate_frame(const FrameCoefficients& coeffs, const Vector3& n) {
    const double dev = coeffs.reality_deviation();
    if (dev > 1e-12) {
        std::ostringstream msg;
        msg << "coefficients violate the reality constraint (deviation " << dev << ")";
        throw RealityViolatedError(msg.str());
    }
    // With the reality constraint the -m and +m terms are conjugate
    // pairs, so the imaginary parts cancel identically.
    double f = 0.0;
    for (int l = 0; l <= coeffs.l_max(); ++l) {
        f += coeffs.get(l, 0).real() * ylm(l, 0, n).real();
        for (int m = 1; m <= l; ++m) {
            const Complex c = coeffs.get(l, m);
            if (c == Complex(0.0, 0.0)) continue;
            f += 2.0 * std::real(c * ylm(l, m, n));
        }
    }
    return f;
}

double check_povm_normalization(const FrameCoefficients& coeffs, const UnitVectorSet& set,
                                const std::vector<Rotation3>& rotations) {
    double worst = 0.0;
    for (const Rotation3& r : rotations) {
        double sum = 0.0;
        for (const Vector3& v : set.vectors())
            sum += evaluate_frame(coeffs, r.apply(v));
        worst = std::max(worst, std::abs(sum - 1.0));
    }
    return worst;
}

ShrinkResult shrink_to_nonnegative(const FrameCoefficients& coeffs, int grid_resolution) {
    if (grid_resolution < 16)
        throw BadParameterError("grid resolution must be >= 16");
    if (!(coeffs.get(0, 0).real() > 0.0))
        throw BadParameterError("shrink requires c_00 > 0");
    const std::vector<Vector3> grid = fibonacci_sphere(grid_resolution);
    auto scaled = [&coeffs](double gamma) {
        FrameCoefficients out = coeffs;
        for (int l = 1; l <= out.l_max(); ++l)
            for (int m = -l; m <= l; ++m)
                out.set(l, m, gamma * out.get(l, m));
        return out;
    };
    if (min_on_sphere(coeffs, grid) >= 0.0)
        return {coeffs, 1.0};
    double lo = 0.0;
    double hi = 1.0;
    for (int iter = 0; iter < 40; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (min_on_sphere(scaled(mid), grid) >= 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return {scaled(lo), lo};
}

} // namespace povmkit
