// SPDX-FileCopyrightText: 2026 The povmkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cmath>
#include <set>
#include <vector>

#include "povmkit/bloch.hpp"
#include "povmkit/operators.hpp"

namespace povmkit::test {

inline Matrix mat2(Complex a, Complex b, Complex c, Complex d) {
    Matrix m(2, 2);
    m << a, b, c, d;
    return m;
}

inline Matrix diag(const std::vector<double>& values) {
    const int d = static_cast<int>(values.size());
    Matrix m = Matrix::Zero(d, d);
    for (int i = 0; i < d; ++i) m(i, i) = values[i];
    return m;
}

// Independent 2x2 eigenvalue oracle: roots of the characteristic
// polynomial lambda^2 - tr lambda + det, ascending.
inline std::array<double, 2> char_poly_eigs_2x2(const Matrix& m) {
    const double tr = m.trace().real();
    const double det = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)).real();
    const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det));
    return {0.5 * (tr - disc), 0.5 * (tr + disc)};
}

// Random unit vectors summing to zero: repeated recentering plus
// renormalization until the residual collapses.
inline UnitVectorSet random_unit_vector_set(int count, Rng& rng) {
    std::vector<Vector3> v(count);
    for (;;) {
        for (auto& x : v) {
            do {
                x = Vector3(rng.normal(), rng.normal(), rng.normal());
            } while (x.norm() < 1e-6);
            x.normalize();
        }
        for (int iter = 0; iter < 200; ++iter) {
            Vector3 sum = Vector3::Zero();
            for (const auto& x : v) sum += x;
            if (sum.norm() < 1e-13)
                return UnitVectorSet(v);
            for (auto& x : v) {
                x -= sum / count;
                const double n = x.norm();
                if (n < 1e-6) { iter = 200; break; } // degenerate; resample
                x /= n;
            }
        }
    }
}

inline std::set<int> odds_up_to(int l_max) {
    std::set<int> out;
    for (int l = 1; l <= l_max; l += 2) out.insert(l);
    return out;
}

} // namespace povmkit::test
