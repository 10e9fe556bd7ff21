// SPDX-FileCopyrightText: 2026 The povmkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "povmkit/operators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace povmkit {

namespace {

Eigen::SelfAdjointEigenSolver<Matrix> solve_hermitian(const Matrix& m) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
    if (solver.info() != Eigen::Success)
        throw Error("eigendecomposition failed to converge");
    return solver;
}

void require_same_dim(int a, int b, const char* where) {
    if (a != b) {
        std::ostringstream msg;
        msg << where << ": dimension mismatch (" << a << " vs " << b << ")";
        throw DimensionMismatchError(msg.str());
    }
}

} // namespace

double max_abs_diff(const Matrix& a, const Matrix& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

HermitianOperator::HermitianOperator(Matrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() < 1 || entries_.rows() != entries_.cols())
        throw NotHermitianError("operator must be a square matrix of dimension >= 1");
    const double dev = max_abs_diff(entries_, entries_.adjoint());
    if (dev > tol::herm) {
        std::ostringstream msg;
        msg << "matrix is not Hermitian (symmetry residue " << dev << ")";
        throw NotHermitianError(msg.str());
    }
}

HermitianOperator HermitianOperator::identity(int dim) {
    return HermitianOperator(Matrix::Identity(dim, dim));
}

HermitianOperator HermitianOperator::zero(int dim) {
    return HermitianOperator(Matrix::Zero(dim, dim));
}

Effect::Effect(HermitianOperator op) : op_(std::move(op)) {
    const auto solver = solve_hermitian(op_.matrix());
    const double lo = solver.eigenvalues().minCoeff();
    const double hi = solver.eigenvalues().maxCoeff();
    if (lo < -tol::eig || hi > 1.0 + tol::eig) {
        std::ostringstream msg;
        msg << "not an effect: eigenvalues span [" << lo << ", " << hi
            << "], outside [0, 1]";
        throw NotEffectError(msg.str());
    }
}

Projector::Projector(HermitianOperator op) : op_(std::move(op)), rank_(0) {
    const Matrix& m = op_.matrix();
    const double idem_dev = max_abs_diff(m * m, m);
    const double tr = m.trace().real();
    rank_ = static_cast<int>(std::llround(tr));
    if (idem_dev > tol::idem || std::abs(tr - rank_) > tol::idem || rank_ < 0 ||
        rank_ > dim()) {
        std::ostringstream msg;
        msg << "not a projector: idempotency residue " << idem_dev << ", trace " << tr;
        throw InvalidInput(msg.str());
    }
}

Povm::Povm(std::vector<Effect> effects) : effects_(std::move(effects)), residual_(0.0) {
    if (effects_.empty())
        throw BadParameterError("a POVM needs at least one effect");
    const int d = effects_.front().dim();
    Matrix sum = Matrix::Zero(d, d);
    for (const Effect& e : effects_) {
        require_same_dim(d, e.dim(), "povm");
        sum += e.matrix();
    }
    residual_ = max_abs_diff(sum, Matrix::Identity(d, d));
    if (residual_ > tol::complete) {
        std::ostringstream msg;
        msg << "effects do not resolve the identity (max residue " << residual_ << ")";
        throw IncompletePovmError(msg.str());
    }
}

DensityOperator::DensityOperator(HermitianOperator op) : op_(std::move(op)) {
    const auto solver = solve_hermitian(op_.matrix());
    const double lo = solver.eigenvalues().minCoeff();
    const double tr = op_.matrix().trace().real();
    if (lo < -tol::eig || std::abs(tr - 1.0) > tol::trace) {
        std::ostringstream msg;
        msg << "not a density operator: trace = " << tr << ", min eigenvalue = " << lo;
        throw NotDensityError(msg.str());
    }
}

ConvexDecomposition::ConvexDecomposition(std::vector<WeightedProjector> terms)
    : terms_(std::move(terms)) {
    double sum = 0.0;
    for (const auto& t : terms_) {
        if (t.weight < -tol::conv || t.weight > 1.0 + tol::conv)
            throw InvalidInput("decomposition weight outside [0, 1]");
        sum += t.weight;
    }
    if (std::abs(sum - 1.0) > tol::conv)
        throw InvalidInput("decomposition weights do not sum to one");
}

double ConvexDecomposition::weight_sum() const {
    double sum = 0.0;
    for (const auto& t : terms_) sum += t.weight;
    return sum;
}

Matrix ConvexDecomposition::reconstruct() const {
    if (terms_.empty())
        return Matrix::Zero(1, 1);
    const int d = terms_.front().projector.dim();
    Matrix acc = Matrix::Zero(d, d);
    for (const auto& t : terms_) acc += t.weight * t.projector.matrix();
    return acc;
}

Spectrum spectrum(const HermitianOperator& h) {
    const auto solver = solve_hermitian(h.matrix());
    Spectrum out;
    const int d = h.dim();
    out.eigenvalues.reserve(d);
    out.eigenprojectors.reserve(d);
    for (int j = 0; j < d; ++j) {
        out.eigenvalues.push_back(solver.eigenvalues()(j));
        const Eigen::VectorXcd v = solver.eigenvectors().col(j);
        out.eigenprojectors.emplace_back(HermitianOperator(v * v.adjoint()));
    }
    return out;
}

bool is_effect(const HermitianOperator& h) {
    const auto solver = solve_hermitian(h.matrix());
    return solver.eigenvalues().minCoeff() >= -tol::eig &&
           solver.eigenvalues().maxCoeff() <= 1.0 + tol::eig;
}

ConvexDecomposition convex_decompose(const Effect& e) {
    const int d = e.dim();
    const Spectrum spec = spectrum(e.op());

    // Snap eigenvalues within tol::eig of the endpoints so roundoff cannot
    // produce negative weights, then merge ties so the decomposition is
    // well defined for degenerate spectra.
    std::vector<double> lam = spec.eigenvalues;
    for (double& v : lam) {
        if (std::abs(v) <= tol::eig) v = 0.0;
        else if (std::abs(v - 1.0) <= tol::eig) v = 1.0;
    }

    constexpr double merge_tol = 1e-12;
    struct Group {
        double value;
        int first; // index of first eigenvalue in the group
        int count;
    };
    std::vector<Group> groups;
    for (int j = 0; j < d;) {
        int k = j + 1;
        while (k < d && lam[k] - lam[k - 1] <= merge_tol) ++k;
        double mean = 0.0;
        for (int i = j; i < k; ++i) mean += lam[i];
        groups.push_back({mean / (k - j), j, k - j});
        j = k;
    }

    // Tail projectors onto the eigenspaces at or above each group.
    const int n_groups = static_cast<int>(groups.size());
    std::vector<Matrix> tails(n_groups);
    Matrix acc = Matrix::Zero(d, d);
    for (int g = n_groups - 1; g >= 0; --g) {
        for (int i = groups[g].first; i < groups[g].first + groups[g].count; ++i)
            acc += spec.eigenprojectors[i].matrix();
        tails[g] = acc;
    }

    std::vector<WeightedProjector> terms;
    if (groups.front().value > 0.0)
        terms.push_back({groups.front().value, Projector(HermitianOperator::identity(d))});
    for (int g = 1; g < n_groups; ++g) {
        const double w = groups[g].value - groups[g - 1].value;
        if (w > 0.0)
            terms.push_back({w, Projector(HermitianOperator(tails[g]))});
    }
    const double remainder = 1.0 - groups.back().value;
    if (remainder > 0.0)
        terms.push_back({remainder, Projector(HermitianOperator::zero(d))});

    ConvexDecomposition decomposition(std::move(terms));
    const double recon_dev = max_abs_diff(decomposition.reconstruct(), e.matrix());
    if (recon_dev > tol::conv) {
        std::ostringstream msg;
        msg << "decomposition failed to reconstruct the effect (residue " << recon_dev << ")";
        throw Error(msg.str());
    }
    return decomposition;
}

bool is_extreme(const Effect& e) {
    const Matrix& m = e.matrix();
    return max_abs_diff(m * m, m) <= tol::idem;
}

double hs_inner(const HermitianOperator& a, const HermitianOperator& b) {
    require_same_dim(a.dim(), b.dim(), "hs_inner");
    return (a.matrix() * b.matrix()).trace().real();
}

Povm validate_povm(std::vector<Effect> effects) {
    return Povm(std::move(effects));
}

double born_probability(const DensityOperator& w, const Effect& e) {
    require_same_dim(w.dim(), e.dim(), "born_probability");
    const double p = (w.matrix() * e.matrix()).trace().real();
    return std::clamp(p, 0.0, 1.0);
}

HermitianOperator random_hermitian(int dim, Rng& rng) {
    Matrix a(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            a(i, j) = Complex(rng.normal(), rng.normal());
    return HermitianOperator(0.5 * (a + Matrix(a.adjoint())));
}

HermitianOperator random_positive(int dim, Rng& rng) {
    Matrix x(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            x(i, j) = Complex(rng.normal(), rng.normal());
    return HermitianOperator(x * x.adjoint());
}

Effect random_effect(int dim, Rng& rng) {
    const HermitianOperator h = random_hermitian(dim, rng);
    const auto solver = solve_hermitian(h.matrix());
    const double lo = solver.eigenvalues().minCoeff();
    const double hi = solver.eigenvalues().maxCoeff();
    if (hi - lo < 1e-12)
        return Effect(0.5 * Matrix::Identity(dim, dim));
    return Effect((h.matrix() - lo * Matrix::Identity(dim, dim)) / (hi - lo));
}

DensityOperator random_density(int dim, Rng& rng) {
    const HermitianOperator g = random_positive(dim, rng);
    return DensityOperator(g.matrix() / g.matrix().trace().real());
}

Povm random_povm(int dim, int outcomes, Rng& rng) {
    if (outcomes < 1)
        throw BadParameterError("random_povm needs at least one outcome");
    std::vector<Matrix> parts;
    parts.reserve(outcomes);
    Matrix sum = Matrix::Zero(dim, dim);
    for (int k = 0; k < outcomes; ++k) {
        parts.push_back(random_positive(dim, rng).matrix());
        sum += parts.back();
    }
    const auto solver = solve_hermitian(sum);
    const Matrix inv_sqrt = solver.operatorInverseSqrt();
    std::vector<Effect> effects;
    effects.reserve(outcomes);
    for (const Matrix& g : parts) {
        Matrix e = inv_sqrt * g * inv_sqrt;
        effects.emplace_back(0.5 * (e + Matrix(e.adjoint())));
    }
    return Povm(std::move(effects));
}

} // namespace povmkit
