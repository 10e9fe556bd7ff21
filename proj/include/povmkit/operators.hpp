// SPDX-FileCopyrightText: 2026 The povmkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "povmkit/errors.hpp"
#include "povmkit/rng.hpp"

namespace povmkit {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

// Tolerances used by the validating constructors and checks. Double
// precision leaves several orders of headroom at the dimensions this
// library targets (d <= 8).
namespace tol {
inline constexpr double herm = 1e-10;     // Hermitian symmetry residue
inline constexpr double idem = 1e-10;     // projector idempotency
inline constexpr double conv = 1e-10;     // convex-decomposition reconstruction
inline constexpr double eig = 1e-9;       // slack on eigenvalue windows
inline constexpr double complete = 1e-9;  // POVM completeness residue
inline constexpr double trace = 1e-10;    // unit-trace residue
inline constexpr double frame = 1e-10;    // frame-law deviations
} // namespace tol

// Largest entrywise |a - b|.
double max_abs_diff(const Matrix& a, const Matrix& b);

// d x d complex Hermitian matrix. Construction checks the symmetry
// within tol::herm.
class HermitianOperator {
public:
    explicit HermitianOperator(Matrix entries);

    int dim() const { return static_cast<int>(entries_.rows()); }
    const Matrix& matrix() const { return entries_; }

    static HermitianOperator identity(int dim);
    static HermitianOperator zero(int dim);

private:
    Matrix entries_;
};

// Hermitian operator with all eigenvalues in [0, 1]; represents a single
// measurement outcome.
class Effect {
public:
    explicit Effect(HermitianOperator op);
    explicit Effect(Matrix entries) : Effect(HermitianOperator(std::move(entries))) {}

    int dim() const { return op_.dim(); }
    const HermitianOperator& op() const { return op_; }
    const Matrix& matrix() const { return op_.matrix(); }

private:
    HermitianOperator op_;
};

// Idempotent Hermitian operator of any rank, including 0 and 1.
class Projector {
public:
    explicit Projector(HermitianOperator op);

    int dim() const { return op_.dim(); }
    int rank() const { return rank_; }
    const HermitianOperator& op() const { return op_; }
    const Matrix& matrix() const { return op_.matrix(); }

private:
    HermitianOperator op_;
    int rank_;
};

// Nonempty sequence of effects of equal dimension that resolves the
// identity within tol::complete.
class Povm {
public:
    explicit Povm(std::vector<Effect> effects);

    int dim() const { return effects_.front().dim(); }
    std::size_t size() const { return effects_.size(); }
    const std::vector<Effect>& effects() const { return effects_; }

    // Largest entrywise deviation of the effect sum from the identity.
    double completeness_residual() const { return residual_; }

private:
    std::vector<Effect> effects_;
    double residual_;
};

// Positive unit-trace operator: the state generating Born probabilities.
class DensityOperator {
public:
    explicit DensityOperator(HermitianOperator op);
    explicit DensityOperator(Matrix entries) : DensityOperator(HermitianOperator(std::move(entries))) {}

    int dim() const { return op_.dim(); }
    const HermitianOperator& op() const { return op_; }
    const Matrix& matrix() const { return op_.matrix(); }

private:
    HermitianOperator op_;
};

struct WeightedProjector {
    double weight;
    Projector projector;
};

// Convex combination of projectors with weights summing to one.
class ConvexDecomposition {
public:
    explicit ConvexDecomposition(std::vector<WeightedProjector> terms);

    const std::vector<WeightedProjector>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    double weight_sum() const;
    Matrix reconstruct() const;

private:
    std::vector<WeightedProjector> terms_;
};

struct Spectrum {
    std::vector<double> eigenvalues;       // ascending, zeros included
    std::vector<Projector> eigenprojectors; // rank one, mutually orthogonal
};

// Full eigendecomposition with one rank-1 projector per eigenvalue.
Spectrum spectrum(const HermitianOperator& h);

// True iff the spectrum lies in [-tol::eig, 1 + tol::eig].
bool is_effect(const HermitianOperator& h);

// Expands an effect over the projector extreme points: the smallest
// eigenvalue weights the identity, each eigenvalue increment weights the
// projector onto the eigenspaces at or above it, and the remainder up to
// one weights the zero operator. Equal eigenvalues are merged and
// zero-weight terms dropped.
ConvexDecomposition convex_decompose(const Effect& e);

// True iff the effect is idempotent within tol::idem, i.e. an extreme
// point of the effect set.
bool is_extreme(const Effect& e);

// Hilbert-Schmidt inner product tr(A B); real for Hermitian arguments.
double hs_inner(const HermitianOperator& a, const HermitianOperator& b);

// Validates completeness and returns the POVM.
Povm validate_povm(std::vector<Effect> effects);

// tr(W E), clamped to [0, 1].
double born_probability(const DensityOperator& w, const Effect& e);

// Seeded samplers used by the stochastic checks and the test suites.
HermitianOperator random_hermitian(int dim, Rng& rng);
HermitianOperator random_positive(int dim, Rng& rng);
Effect random_effect(int dim, Rng& rng);   // spectrum rescaled onto [0, 1]
DensityOperator random_density(int dim, Rng& rng);
Povm random_povm(int dim, int outcomes, Rng& rng);

} // namespace povmkit
