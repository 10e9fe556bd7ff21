// SPDX-FileCopyrightText: 2026 The povmkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include <Eigen/Dense>

#include "povmkit/operators.hpp"

namespace povmkit {

using Vector3 = Eigen::Vector3d;
using Matrix3 = Eigen::Matrix3d;

// Standard Pauli matrices, sigma_z = diag(1, -1).
Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();
Matrix pauli_dot(const Vector3& n); // n . sigma

// Parameterizes a two-dimensional effect as r*1 + s*(axis . sigma).
// Validity region is the double cone 0 <= r <= 1, 0 <= s <= min(r, 1-r);
// the eigenvalues are r +- s.
struct BlochEffect {
    double r = 0.0;
    double s = 0.0;
    Vector3 axis = Vector3::UnitZ();
    bool axis_arbitrary = false; // set when s ~ 0 and the axis carries no information
};

Effect effect_from_bloch(const BlochEffect& b);
BlochEffect bloch_from_effect(const Effect& e);

// Completeness tolerance for a set of n unit vectors; residues scale with n.
inline double vector_sum_tolerance(std::size_t n) { return 1e-9 * static_cast<double>(n); }
inline double isotropy_tolerance(std::size_t n) { return 1e-9 * static_cast<double>(n); }

// N >= 2 unit vectors summing to zero: a fiducial qubit POVM in Bloch
// form, effect j being (1/N)(1 + n_j . sigma).
class UnitVectorSet {
public:
    explicit UnitVectorSet(std::vector<Vector3> vectors);

    // File-reading path: accepts vectors within norm_tol of unit length
    // and normalizes them before validating.
    static UnitVectorSet from_raw(std::vector<Vector3> vectors, double norm_tol = 1e-6);

    std::size_t size() const { return vectors_.size(); }
    const std::vector<Vector3>& vectors() const { return vectors_; }

private:
    std::vector<Vector3> vectors_;
};

// Proper rotation: orthogonal with determinant +1. Active convention,
// right-hand rule.
class Rotation3 {
public:
    explicit Rotation3(Matrix3 m);

    static Rotation3 identity();
    static Rotation3 axis_angle(const Vector3& axis, double angle); // Rodrigues
    static Rotation3 haar(Rng& rng);                                // uniform via random quaternion

    const Matrix3& matrix() const { return m_; }
    Vector3 apply(const Vector3& v) const { return m_ * v; }

private:
    Matrix3 m_;
};

// The N-outcome POVM {(1/N)(1 + n_j . sigma)}.
Povm effects_from_vector_set(const UnitVectorSet& set);

UnitVectorSet rotate_set(const UnitVectorSet& set, const Rotation3& r);

struct SecondMoment {
    Matrix3 matrix;  // M_kl = sum_j (n_j)_k (n_j)_l
    bool isotropic;  // true iff M = (N/3) I within isotropy_tolerance(N)
};

SecondMoment second_moment(const UnitVectorSet& set);

} // namespace povmkit
