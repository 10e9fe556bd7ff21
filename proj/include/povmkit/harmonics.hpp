// SPDX-FileCopyrightText: 2026 The povmkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <set>
#include <vector>

#include "povmkit/bloch.hpp"

namespace povmkit {

// Associated Legendre function P_l^m(x) with the Condon-Shortley phase.
// Stable for l <= 64 (double-factorial growth stays in double range).
double assoc_legendre(int l, int m, double x);

// Orthonormal spherical harmonic Y_lm at a unit vector, normalization
// sqrt((2l+1)/(4 pi) (l-m)!/(l+m)!), Condon-Shortley phase included.
Complex ylm(int l, int m, const Vector3& n);

// S_lr = sum_j Y_lr(n_j) for r = -l..l. A vector set admits the lth
// harmonic in a frame function exactly when every S_lr vanishes.
struct SumConditionReport {
    int l = 0;
    std::vector<Complex> values; // S_lr, index r + l
    double max_abs = 0.0;

    const Complex& value(int r) const { return values.at(static_cast<std::size_t>(r + l)); }
};

SumConditionReport sum_condition(const UnitVectorSet& set, int l);

// Default zero threshold: roundoff in the sums grows like sqrt(N), and
// the genuine nonzero sums sit many orders above this.
double default_tol_zero(std::size_t n_vectors);

struct AdmissibilitySet {
    int l_max = 0;
    std::set<int> allowed;
    std::map<int, double> evidence; // l -> max_abs of the sum condition
    std::set<int> marginal;         // l whose max_abs landed near the threshold
};

// Classifies every l <= l_max by the sum condition. l = 0 is always
// allowed (it is the normalization constraint, not a sum condition), and
// l = 1 always passes because the vectors sum to zero.
AdmissibilitySet admissible_harmonics(const UnitVectorSet& set, int l_max, double tol_zero);

// Expansion coefficients c_lm of a candidate frame function
// F(n) = sum_lm c_lm Y_lm(n). Realness of F corresponds to the
// constraint c_{l,-m} = (-1)^m conj(c_lm).
class FrameCoefficients {
public:
    explicit FrameCoefficients(int l_max);

    int l_max() const { return l_max_; }
    Complex get(int l, int m) const;
    void set(int l, int m, Complex value);

    // Copy with a different cutoff; truncates or zero-extends.
    FrameCoefficients with_l_max(int l_max) const;

    // Largest violation of the reality constraint.
    double reality_deviation() const;

private:
    int l_max_;
    std::vector<std::vector<Complex>> c_; // c_[l][m + l]
};

// Coefficients of the rule F(n) = (1/N)(1 + n . P): only l = 0, 1 enter.
FrameCoefficients born_coefficients(int n_outcomes, const Vector3& polarization);

// Evaluates F(n); requires the reality constraint within 1e-12.
double evaluate_frame(const FrameCoefficients& coeffs, const Vector3& n);

// max over the supplied rotations of |sum_j F(R n_j) - 1|.
double check_povm_normalization(const FrameCoefficients& coeffs, const UnitVectorSet& set,
                                const std::vector<Rotation3>& rotations);

struct ShrinkResult {
    FrameCoefficients coeffs;
    double shrink_factor; // gamma in (0, 1]
};

// Scales the l >= 1 coefficients by the largest gamma in (0, 1] keeping
// F nonnegative on a Fibonacci-sphere grid (with one Newton refinement of
// the grid minimum); bisection, 40 iterations. c_00 is left untouched.
ShrinkResult shrink_to_nonnegative(const FrameCoefficients& coeffs, int grid_resolution = 4096);

} // namespace povmkit
