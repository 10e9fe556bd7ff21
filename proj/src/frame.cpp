// SPDX-FileCopyrightText: 2026 The povmkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "povmkit/frame.hpp"

#include <cmath>
#include <sstream>

namespace povmkit {

namespace {

// Splits h into positive and negative parts and scales each into an
// effect by alpha = max(largest eigenvalue of the part, 1).
struct EffectSplit {
    double alpha_pos;
    Effect pos;
    double alpha_neg;
    Effect neg;
};

EffectSplit split_hermitian(const HermitianOperator& h) {
    const int d = h.dim();
    const Spectrum spec = spectrum(h);
    Matrix gpos = Matrix::Zero(d, d);
    Matrix gneg = Matrix::Zero(d, d);
    double top_pos = 0.0;
    double top_neg = 0.0;
    for (std::size_t j = 0; j < spec.eigenvalues.size(); ++j) {
        const double lam = spec.eigenvalues[j];
        if (lam > 0.0) {
            gpos += lam * spec.eigenprojectors[j].matrix();
            top_pos = std::max(top_pos, lam);
        } else if (lam < 0.0) {
            gneg += (-lam) * spec.eigenprojectors[j].matrix();
            top_neg = std::max(top_neg, -lam);
        }
    }
    const double a1 = std::max(top_pos, 1.0);
    const double a2 = std::max(top_neg, 1.0);
    return {a1, Effect(gpos / a1), a2, Effect(gneg / a2)};
}

} // namespace

FrameOracle born_frame(const DensityOperator& w) {
    return FrameOracle{w.dim(), [w](const Effect& e) { return born_probability(w, e); }};
}

OperatorBasis::OperatorBasis(std::vector<HermitianOperator> elements)
    : elements_(std::move(elements)), dim_(0) {
    if (elements_.empty())
        throw BadParameterError("operator basis must be nonempty");
    dim_ = elements_.front().dim();
    const std::size_t expected = static_cast<std::size_t>(dim_) * dim_;
    if (elements_.size() != expected) {
        std::ostringstream msg;
        msg << "operator basis needs " << expected << " elements, got " << elements_.size();
        throw BadParameterError(msg.str());
    }
    for (std::size_t j = 0; j < elements_.size(); ++j) {
        for (std::size_t k = j; k < elements_.size(); ++k) {
            const double want = (j == k) ? 1.0 : 0.0;
            const double got = hs_inner(elements_[j], elements_[k]);
            if (std::abs(got - want) > 1e-10) {
                std::ostringstream msg;
                msg << "basis elements " << j << ", " << k
                    << " are not orthonormal (inner product " << got << ")";
                throw BadParameterError(msg.str());
            }
        }
    }
}

OperatorBasis OperatorBasis::standard(int dim) {
    if (dim < 1)
        throw BadParameterError("basis dimension must be >= 1");
    const double d = static_cast<double>(dim);
    std::vector<HermitianOperator> elems;
    elems.reserve(static_cast<std::size_t>(dim) * dim);
    elems.push_back(HermitianOperator(Matrix::Identity(dim, dim) / std::sqrt(d)));
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int j = 0; j < dim; ++j) {
        for (int k = j + 1; k < dim; ++k) {
            Matrix sym = Matrix::Zero(dim, dim);
            sym(j, k) = inv_sqrt2;
            sym(k, j) = inv_sqrt2;
            elems.push_back(HermitianOperator(std::move(sym)));
            Matrix asym = Matrix::Zero(dim, dim);
            asym(j, k) = Complex(0.0, -inv_sqrt2);
            asym(k, j) = Complex(0.0, inv_sqrt2);
            elems.push_back(HermitianOperator(std::move(asym)));
        }
    }
    for (int l = 1; l < dim; ++l) {
        Matrix diag = Matrix::Zero(dim, dim);
        const double scale = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
        for (int j = 0; j < l; ++j) diag(j, j) = scale;
        diag(l, l) = -static_cast<double>(l) * scale;
        elems.push_back(HermitianOperator(std::move(diag)));
    }
    return OperatorBasis(std::move(elems));
}

OperatorBasis OperatorBasis::random(int dim, Rng& rng) {
    const int count = dim * dim;
    std::vector<Matrix> basis;
    basis.reserve(count);
    while (static_cast<int>(basis.size()) < count) {
        Matrix cand = random_hermitian(dim, rng).matrix();
        // Two Gram-Schmidt passes for orthogonality at working precision.
        for (int pass = 0; pass < 2; ++pass)
            for (const Matrix& b : basis)
                cand -= (b.adjoint() * cand).trace().real() * b;
        const double norm = std::sqrt((cand.adjoint() * cand).trace().real());
        if (norm < 1e-8)
            continue; // linearly dependent sample; draw again
        basis.push_back(cand / norm);
    }
    std::vector<HermitianOperator> elems;
    elems.reserve(count);
    for (Matrix& b : basis) elems.emplace_back(std::move(b));
    return OperatorBasis(std::move(elems));
}

double extend_to_hermitian(const FrameOracle& f, const HermitianOperator& h) {
    if (f.dim != h.dim())
        throw DimensionMismatchError("oracle and operator dimensions differ");
    const EffectSplit s = split_hermitian(h);
    return s.alpha_pos * f.eval(s.pos) - s.alpha_neg * f.eval(s.neg);
}

DensityOperator reconstruct_density(const FrameOracle& f, const OperatorBasis& basis) {
    if (f.dim != basis.dim())
        throw DimensionMismatchError("oracle and basis dimensions differ");
    const int d = basis.dim();
    Matrix w = Matrix::Zero(d, d);
    for (const HermitianOperator& tau : basis.elements())
        w += extend_to_hermitian(f, tau) * tau.matrix();
    return DensityOperator(std::move(w));
}

FrameLawReport check_frame_laws(const FrameOracle& f, int trials, std::uint64_t seed) {
    if (trials < 1)
        throw BadParameterError("check_frame_laws needs at least one trial");
    Rng rng(seed);
    const int d = f.dim;
    FrameLawReport report;
    report.trials = trials;
    report.seed = seed;
    for (int t = 0; t < trials; ++t) {
        // Additivity and order preservation on a random pair of positive
        // operators jointly rescaled so that E1, E2 and E1 + E2 are effects.
        const Matrix g1 = random_positive(d, rng).matrix();
        const Matrix g2 = random_positive(d, rng).matrix();
        const Matrix sum = g1 + g2;
        Eigen::SelfAdjointEigenSolver<Matrix> solver(sum);
        const double scale = std::max(solver.eigenvalues().maxCoeff(), 1.0);
        const Effect e1(g1 / scale);
        const Effect e2(g2 / scale);
        const Effect e12(sum / scale);
        const double v1 = f.eval(e1);
        const double v2 = f.eval(e2);
        const double v12 = f.eval(e12);
        report.additivity_max_dev = std::max(report.additivity_max_dev, std::abs(v1 + v2 - v12));
        if (v1 > v12 + tol::frame)
            ++report.order_violations; // e12 - e1 = g2/scale >= 0
        // Rational homogeneity for n/m with m <= 8, which keeps (n/m)E an
        // effect without rescaling.
        const Effect e = random_effect(d, rng);
        const int m = rng.uniform_int(1, 8);
        const int n = rng.uniform_int(1, m);
        const double q = static_cast<double>(n) / m;
        const double dev = std::abs(f.eval(Effect(q * e.matrix())) - q * f.eval(e));
        report.homogeneity_max_dev = std::max(report.homogeneity_max_dev, dev);
    }
    return report;
}

std::vector<Effect> required_sample_effects(int dim) {
    const OperatorBasis basis = OperatorBasis::standard(dim);
    std::vector<Effect> out;
    out.reserve(basis.elements().size());
    out.emplace_back(basis.elements().front().matrix());
    const Matrix id = Matrix::Identity(dim, dim);
    for (std::size_t j = 1; j < basis.elements().size(); ++j)
        out.emplace_back(0.5 * (basis.elements()[j].matrix() + id));
    return out;
}

DensityOperator reconstruct_from_samples(int dim, const std::vector<FrameSample>& samples) {
    if (dim < 1)
        throw BadParameterError("dimension must be >= 1");
    const OperatorBasis basis = OperatorBasis::standard(dim);
    const std::vector<Effect> required = required_sample_effects(dim);
    constexpr double match_tol = 1e-8;

    std::vector<bool> covered(required.size(), false);
    std::vector<double> values(required.size(), 0.0);
    for (std::size_t s = 0; s < samples.size(); ++s) {
        if (samples[s].effect.dim() != dim) {
            std::ostringstream msg;
            msg << "samples[" << s << "] has dimension " << samples[s].effect.dim()
                << ", expected " << dim;
            throw DimensionMismatchError(msg.str());
        }
        bool matched = false;
        for (std::size_t j = 0; j < required.size(); ++j) {
            if (max_abs_diff(samples[s].effect.matrix(), required[j].matrix()) <= match_tol) {
                if (covered[j]) {
                    std::ostringstream msg;
                    msg << "samples[" << s << "] duplicates an already-covered basis effect";
                    throw InvalidInput(msg.str());
                }
                covered[j] = true;
                values[j] = samples[s].value;
                matched = true;
                break;
            }
        }
        if (!matched) {
            std::ostringstream msg;
            msg << "samples[" << s << "] does not match any required basis effect";
            throw InvalidInput(msg.str());
        }
    }
    std::size_t missing = 0;
    for (bool c : covered)
        if (!c) ++missing;
    if (missing > 0) {
        std::ostringstream msg;
        msg << "samples cover " << (covered.size() - missing) << " of " << covered.size()
            << " required basis effects";
        throw MissingSamplesError(msg.str());
    }

    Matrix w = values[0] * basis.elements()[0].matrix();
    for (std::size_t j = 1; j < basis.elements().size(); ++j)
        w += (2.0 * values[j] - 1.0) * basis.elements()[j].matrix();
    return DensityOperator(std::move(w));
}

} // namespace povmkit
