// SPDX-FileCopyrightText: 2026 The povmkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "povmkit/operators.hpp"

namespace povmkit {

// A probability assignment on effects: deterministic, reentrant, valued
// in [0, 1], and summing to one over any POVM when it is a genuine frame
// function.
struct FrameOracle {
    int dim = 0;
    std::function<double(const Effect&)> eval;
};

// The Born oracle E -> tr(W E).
FrameOracle born_frame(const DensityOperator& w);

// Orthonormal Hermitian operator basis: d^2 elements with pairwise
// Hilbert-Schmidt inner products delta_jk.
class OperatorBasis {
public:
    explicit OperatorBasis(std::vector<HermitianOperator> elements);

    // Normalized identity plus the generalized Gell-Mann matrices scaled
    // to unit Hilbert-Schmidt norm.
    static OperatorBasis standard(int dim);

    // Random orthonormal basis (Gram-Schmidt over seeded Hermitian samples).
    static OperatorBasis random(int dim, Rng& rng);

    int dim() const { return dim_; }
    const std::vector<HermitianOperator>& elements() const { return elements_; }

private:
    std::vector<HermitianOperator> elements_;
    int dim_;
};

// Extends the oracle to an arbitrary Hermitian operator by splitting it
// into positive and negative parts, scaling each into an effect, and
// combining linearly. For additive oracles the value is independent of
// the unravelling.
double extend_to_hermitian(const FrameOracle& f, const HermitianOperator& h);

// W = sum_j f(tau_j) tau_j over an orthonormal basis. Throws
// NotDensityError when the result violates positivity or unit trace,
// which signals that f was not a valid frame function.
DensityOperator reconstruct_density(const FrameOracle& f, const OperatorBasis& basis);

struct FrameLawReport {
    double additivity_max_dev = 0.0;
    double homogeneity_max_dev = 0.0;
    int order_violations = 0;
    int trials = 0;
    std::uint64_t seed = 0;
};

// Measures additivity f(E1) + f(E2) = f(E1 + E2), rational homogeneity
// f((n/m) E) = (n/m) f(E) for n <= m <= 8, and order preservation over
// seeded pseudo-random effect instances.
FrameLawReport check_frame_laws(const FrameOracle& f, int trials, std::uint64_t seed);

struct FrameSample {
    Effect effect;
    double value;
};

// The d^2 effects an offline sample file must cover: the normalized
// identity, which is already an effect, and (tau_j + 1)/2 for every other
// standard-basis element. Order matches OperatorBasis::standard.
std::vector<Effect> required_sample_effects(int dim);

// Reconstruction from sampled values on exactly the required effects
// (any order). Values on the shifted effects determine f on the basis
// through f(tau_j) = 2 v_j - 1, using f(1) = 1.
DensityOperator reconstruct_from_samples(int dim, const std::vector<FrameSample>& samples);

} // namespace povmkit
