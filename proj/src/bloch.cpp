// SPDX-FileCopyrightText: 2026 The povmkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "povmkit/bloch.hpp"

#include <cmath>
#include <sstream>

namespace povmkit {

namespace {
constexpr Complex kI{0.0, 1.0};
constexpr double kAxisTol = 1e-12;
} // namespace

Matrix pauli_x() {
    Matrix m(2, 2);
    m << 0.0, 1.0,
         1.0, 0.0;
    return m;
}

Matrix pauli_y() {
    Matrix m(2, 2);
    m << 0.0, -kI,
         kI, 0.0;
    return m;
}

Matrix pauli_z() {
    Matrix m(2, 2);
    m << 1.0, 0.0,
         0.0, -1.0;
    return m;
}

Matrix pauli_dot(const Vector3& n) {
    Matrix m(2, 2);
    m << n.z(), Complex(n.x(), -n.y()),
         Complex(n.x(), n.y()), -n.z();
    return m;
}

Effect effect_from_bloch(const BlochEffect& b) {
    if (std::abs(b.axis.norm() - 1.0) > kAxisTol)
        throw NotUnitVectorError("bloch axis must be a unit vector");
    const double slack = 1e-12;
    if (b.r < -slack || b.r > 1.0 + slack || b.s < -slack ||
        b.s > std::min(b.r, 1.0 - b.r) + slack) {
        std::ostringstream msg;
        msg << "(r, s) = (" << b.r << ", " << b.s
            << ") lies outside the double cone 0 <= s <= min(r, 1-r)";
        throw OutsideConeError(msg.str());
    }
    return Effect(b.r * Matrix::Identity(2, 2) + b.s * pauli_dot(b.axis));
}

BlochEffect bloch_from_effect(const Effect& e) {
    if (e.dim() != 2)
        throw DimensionMismatchError("bloch parameterization requires dimension 2");
    const Matrix& m = e.matrix();
    BlochEffect b;
    b.r = 0.5 * m.trace().real();
    const Vector3 s(0.5 * (m * pauli_x()).trace().real(),
                    0.5 * (m * pauli_y()).trace().real(),
                    0.5 * (m * pauli_z()).trace().real());
    b.s = s.norm();
    if (b.s < 1e-14) {
        b.axis = Vector3::UnitZ();
        b.axis_arbitrary = true;
    } else {
        b.axis = s / b.s;
    }
    return b;
}

UnitVectorSet::UnitVectorSet(std::vector<Vector3> vectors) : vectors_(std::move(vectors)) {
    if (vectors_.size() < 2)
        throw BadParameterError("a vector set needs at least 2 vectors");
    Vector3 sum = Vector3::Zero();
    for (std::size_t j = 0; j < vectors_.size(); ++j) {
        if (std::abs(vectors_[j].norm() - 1.0) > kAxisTol) {
            std::ostringstream msg;
            msg << "vectors[" << j << "] has norm " << vectors_[j].norm()
                << ", expected a unit vector";
            throw NotUnitVectorError(msg.str());
        }
        sum += vectors_[j];
    }
    if (sum.norm() > vector_sum_tolerance(vectors_.size())) {
        std::ostringstream msg;
        msg << "completeness violated: vectors sum to (" << sum.x() << ", " << sum.y()
            << ", " << sum.z() << "), expected zero";
        throw IncompleteVectorSetError(msg.str());
    }
}

UnitVectorSet UnitVectorSet::from_raw(std::vector<Vector3> vectors, double norm_tol) {
    for (std::size_t j = 0; j < vectors.size(); ++j) {
        const double n = vectors[j].norm();
        if (std::abs(n - 1.0) > norm_tol) {
            std::ostringstream msg;
            msg << "vectors[" << j << "] has norm " << n << ", more than " << norm_tol
                << " away from unit length";
            throw NotUnitVectorError(msg.str());
        }
        vectors[j] /= n;
    }
    return UnitVectorSet(std::move(vectors));
}

Rotation3::Rotation3(Matrix3 m) : m_(std::move(m)) {
    const double ortho_dev = (m_ * m_.transpose() - Matrix3::Identity()).cwiseAbs().maxCoeff();
    if (ortho_dev > 1e-12 || std::abs(m_.determinant() - 1.0) > 1e-12)
        throw BadParameterError("matrix is not a proper rotation");
}

Rotation3 Rotation3::identity() {
    return Rotation3(Matrix3::Identity());
}

Rotation3 Rotation3::axis_angle(const Vector3& axis, double angle) {
    const double n = axis.norm();
    if (n < 1e-14)
        throw NotUnitVectorError("rotation axis must be nonzero");
    const Vector3 k = axis / n;
    Matrix3 cross;
    cross << 0.0, -k.z(), k.y(),
             k.z(), 0.0, -k.x(),
             -k.y(), k.x(), 0.0;
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return Rotation3(c * Matrix3::Identity() + s * cross +
                     (1.0 - c) * (k * k.transpose()));
}

Rotation3 Rotation3::haar(Rng& rng) {
    double w, x, y, z, n2;
    do {
        w = rng.normal();
        x = rng.normal();
        y = rng.normal();
        z = rng.normal();
        n2 = w * w + x * x + y * y + z * z;
    } while (n2 < 1e-12);
    const double n = std::sqrt(n2);
    w /= n; x /= n; y /= n; z /= n;
    Matrix3 m;
    m << 1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y),
         2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
         2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y);
    return Rotation3(std::move(m));
}

Povm effects_from_vector_set(const UnitVectorSet& set) {
    const double n = static_cast<double>(set.size());
    std::vector<Effect> effects;
    effects.reserve(set.size());
    for (const Vector3& v : set.vectors())
        effects.emplace_back((Matrix::Identity(2, 2) + pauli_dot(v)) / n);
    return Povm(std::move(effects));
}

UnitVectorSet rotate_set(const UnitVectorSet& set, const Rotation3& r) {
    std::vector<Vector3> out;
    out.reserve(set.size());
    for (const Vector3& v : set.vectors()) out.push_back(r.apply(v));
    return UnitVectorSet(std::move(out));
}

SecondMoment second_moment(const UnitVectorSet& set) {
    Matrix3 m = Matrix3::Zero();
    for (const Vector3& v : set.vectors()) m += v * v.transpose();
    const double n = static_cast<double>(set.size());
    const double dev = (m - (n / 3.0) * Matrix3::Identity()).cwiseAbs().maxCoeff();
    return {m, dev <= isotropy_tolerance(set.size())};
}

} // namespace povmkit
