#include "gdesign/spectral.hpp"

#include "gdesign/error.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <map>

namespace gdesign {

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b)
{
    if (a.cols != b.rows)
        throw Error(ErrorCode::DimensionMismatch, "rational matrix product shape mismatch");
    RationalMatrix c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const Rational& aik = a(i, k);
            if (aik == 0)
                continue;
            for (int j = 0; j < b.cols; ++j)
                c(i, j) += aik * b(k, j);
        }
    return c;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b)
{
    if (a.rows != b.rows || a.cols != b.cols)
        throw Error(ErrorCode::DimensionMismatch, "rational matrix sum shape mismatch");
    RationalMatrix c = a;
    for (std::size_t i = 0; i < c.data.size(); ++i)
        c.data[i] += b.data[i];
    return c;
}

Eigen::MatrixXd Eigenspace::projector() const
{
    return basis * basis.transpose();
}

Eigen::MatrixXd orthonormalize(const Eigen::MatrixXd& columns)
{
    Eigen::MatrixXd q = columns;
    for (Eigen::Index j = 0; j < q.cols(); ++j) {
        for (Eigen::Index i = 0; i < j; ++i)
            q.col(j) -= q.col(i).dot(q.col(j)) * q.col(i);
        double norm = q.col(j).norm();
        if (norm < 1e-10 * std::max(1.0, columns.col(j).norm()))
            throw Error(ErrorCode::NumericalFailure, "basis columns are linearly dependent");
        q.col(j) /= norm;
    }
    return q;
}

namespace {

bool key_greater(const Scalar& a, const Scalar& b)
{
    if (a.exact && b.exact)
        return *a.exact > *b.exact;
    return a.value > b.value;
}

}  // namespace

class DecompositionBuilder {
public:
    static SpectralDecomposition finish(const Graph& g, std::vector<Eigenspace> spaces, ArithmeticMode mode,
                                        const Tolerance& tol)
    {
        int total = 0;
        for (const auto& s : spaces)
            total += s.dimension;
        if (total != g.vertex_count())
            throw Error(ErrorCode::NumericalFailure, "eigenspace dimensions sum to " + std::to_string(total) +
                                                         ", expected " + std::to_string(g.vertex_count()));

        auto key = [](const Eigenspace& s) { return abs(s.walk_eigenvalue()); };
        std::stable_sort(spaces.begin(), spaces.end(),
                         [&](const Eigenspace& a, const Eigenspace& b) { return key_greater(key(a), key(b)); });
        int group = 0;
        for (std::size_t i = 0; i < spaces.size(); ++i) {
            if (i > 0 && !approx_equal(key(spaces[i]), key(spaces[i - 1]), tol.tie))
                ++group;
            spaces[i].tie_group = group;
        }
        std::stable_sort(spaces.begin(), spaces.end(), [](const Eigenspace& a, const Eigenspace& b) {
            if (a.tie_group != b.tie_group)
                return a.tie_group < b.tie_group;
            if (a.dimension != b.dimension)
                return a.dimension > b.dimension;
            return key_greater(a.eigenvalue, b.eigenvalue);
        });

        SpectralDecomposition d(g);
        d.mode_ = mode;
        d.tolerance_ = tol;
        d.regular_degree_ = g.regular_degree();
        d.trivial_index_ = -1;
        for (std::size_t i = 0; i < spaces.size(); ++i)
            if (approx_equal(spaces[i].eigenvalue, Scalar(Rational(0)), tol.eigen_group)) {
                d.trivial_index_ = static_cast<int>(i);
                // connected graphs have 0 exactly; drop the round-off
                if (!spaces[i].eigenvalue.is_exact())
                    spaces[i].eigenvalue.value = 0.0;
            }
        if (d.trivial_index_ < 0)
            throw Error(ErrorCode::NumericalFailure, "no eigenvalue-0 eigenspace found");
        d.eigenspaces_ = std::move(spaces);
        return d;
    }
};

int SpectralDecomposition::lowest_index() const
{
    int best = 0;
    for (int i = 1; i < size(); ++i)
        if (key_greater(eigenspaces_[best].eigenvalue, eigenspaces_[i].eigenvalue))
            best = i;
    return best;
}

int SpectralDecomposition::second_index() const
{
    int best = -1;
    for (int i = 0; i < size(); ++i) {
        if (i == trivial_index_)
            continue;
        if (best < 0 || key_greater(eigenspaces_[i].eigenvalue, eigenspaces_[best].eigenvalue))
            best = i;
    }
    if (best < 0)
        throw Error(ErrorCode::NumericalFailure, "graph has a single eigenspace");
    return best;
}

std::vector<std::vector<int>> SpectralDecomposition::frequency_order() const
{
    std::vector<std::vector<int>> groups;
    for (int i = 0; i < size(); ++i) {
        int g = eigenspaces_[i].tie_group;
        if (static_cast<int>(groups.size()) <= g)
            groups.resize(g + 1);
        groups[g].push_back(i);
    }
    return groups;
}

std::vector<std::vector<int>> frequency_order(const SpectralDecomposition& d)
{
    return d.frequency_order();
}

Eigen::MatrixXd SpectralDecomposition::spectral_projector(int i) const
{
    const auto& space = eigenspace(i);
    if (regular_degree_)
        return space.projector();
    // Eigenvectors of AD^-1 are D^1/2 u for orthonormal eigenvectors u of
    // the symmetric D^-1/2 A D^-1/2.
    const int n = vertex_count();
    Eigen::VectorXd sqrt_deg(n);
    for (int v = 0; v < n; ++v)
        sqrt_deg(v) = std::sqrt(static_cast<double>(graph_.degree(v)));
    Eigen::MatrixXd u = sqrt_deg.cwiseInverse().asDiagonal() * space.basis;
    u = orthonormalize(u);
    return sqrt_deg.asDiagonal() * (u * u.transpose()) * sqrt_deg.cwiseInverse().asDiagonal();
}

RationalMatrix SpectralDecomposition::exact_projector(int i) const
{
    const auto& space = eigenspace(i);
    if (!space.integer_basis)
        throw Error(ErrorCode::NumericalFailure, "exact projector requested on the floating path");
    const IntMatrix& b = *space.integer_basis;
    const int n = vertex_count();
    RationalMatrix p(n, n);
    for (Eigen::Index c = 0; c < b.cols(); ++c) {
        std::int64_t norm2 = b.col(c).squaredNorm();
        for (int r = 0; r < n; ++r) {
            if (b(r, c) == 0)
                continue;
            for (int s = 0; s < n; ++s)
                p(r, s) += Rational(b(r, c) * b(s, c), norm2);
        }
    }
    return p;
}

SpectralDecomposition spectral_decomposition(const Graph& g, const Tolerance& tol)
{
    const int n = g.vertex_count();
    if (n > 5000)
        throw Error(ErrorCode::TooLarge, "dense eigensolve limited to 5000 vertices");

    Eigen::VectorXd inv_sqrt_deg(n);
    for (int v = 0; v < n; ++v)
        inv_sqrt_deg(v) = 1.0 / std::sqrt(static_cast<double>(g.degree(v)));
    Eigen::MatrixXd sym = inv_sqrt_deg.asDiagonal() * g.adjacency_matrix() * inv_sqrt_deg.asDiagonal();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
    if (solver.info() != Eigen::Success)
        throw Error(ErrorCode::NumericalFailure, "symmetric eigensolve did not converge");
    const Eigen::VectorXd& mu = solver.eigenvalues();
    const Eigen::MatrixXd& vecs = solver.eigenvectors();

    // Group ascending eigenvalues; a gap that is neither clearly below nor
    // clearly above the grouping tolerance is reported as ambiguous.
    const double ambiguous = tol.eigen_group * 1e3;
    std::vector<Eigenspace> spaces;
    int start = 0;
    for (int i = 1; i <= n; ++i) {
        if (i < n) {
            double gap = mu(i) - mu(i - 1);
            if (gap < tol.eigen_group)
                continue;
            if (gap < ambiguous)
                throw Error(ErrorCode::NumericalFailure, "eigenvalue gap " + format_decimal(gap) +
                                                             " is ambiguous at the grouping tolerance");
        }
        Eigenspace s;
        s.dimension = i - start;
        double mean = mu.segment(start, s.dimension).mean();
        s.eigenvalue = Scalar(mean - 1.0);
        Eigen::MatrixXd cols = inv_sqrt_deg.cwiseInverse().asDiagonal() * vecs.middleCols(start, s.dimension);
        s.basis = orthonormalize(cols);
        spaces.push_back(std::move(s));
        start = i;
    }
    return DecompositionBuilder::finish(g, std::move(spaces), ArithmeticMode::Floating, tol);
}

namespace {

// Checks A D^-1 v = (lambda + 1) v exactly.
void check_exact_eigenvector(const Graph& g, const Rational& walk_value, const IntMatrix& basis, Eigen::Index col)
{
    const int n = g.vertex_count();
    if (auto d = g.regular_degree()) {
        // sum_{w ~ u} v_w = d (lambda + 1) v_u, integers after clearing the denominator
        const std::int64_t num = walk_value.numerator() * *d;
        const std::int64_t den = walk_value.denominator();
        for (int u = 0; u < n; ++u) {
            std::int64_t s = 0;
            for (int w : g.neighbours(u))
                s += basis(w, col);
            if (s * den != num * basis(u, col))
                throw Error(ErrorCode::NumericalFailure, "supplied vector is not an eigenvector at vertex " +
                                                             std::to_string(u));
        }
        return;
    }
    for (int u = 0; u < n; ++u) {
        Rational s(0);
        for (int w : g.neighbours(u))
            s += Rational(basis(w, col), g.degree(w));
        if (s != walk_value * basis(u, col))
            throw Error(ErrorCode::NumericalFailure, "supplied vector is not an eigenvector at vertex " +
                                                         std::to_string(u));
    }
}

}  // namespace

SpectralDecomposition exact_decomposition(const Graph& g, std::vector<ExactPart> parts)
{
    const int n = g.vertex_count();
    std::map<Rational, ExactPart> merged;
    for (auto& p : parts) {
        if (p.basis.rows() != n)
            throw Error(ErrorCode::DimensionMismatch, "basis has wrong row count");
        auto it = merged.find(p.eigenvalue);
        if (it == merged.end()) {
            merged.emplace(p.eigenvalue, std::move(p));
            continue;
        }
        IntMatrix joined(n, it->second.basis.cols() + p.basis.cols());
        joined << it->second.basis, p.basis;
        it->second.basis = std::move(joined);
        it->second.components.insert(it->second.components.end(), p.components.begin(), p.components.end());
    }

    std::vector<Eigenspace> spaces;
    for (auto& [value, part] : merged) {
        if (value < Rational(-2) || value > Rational(0))
            throw Error(ErrorCode::NumericalFailure, "eigenvalue " + to_string(value) + " outside [-2, 0]");
        const IntMatrix& b = part.basis;
        const Rational walk = value + Rational(1);
        for (Eigen::Index c = 0; c < b.cols(); ++c) {
            check_exact_eigenvector(g, walk, b, c);
            if (b.col(c).squaredNorm() == 0)
                throw Error(ErrorCode::NumericalFailure, "zero basis vector");
            for (Eigen::Index c2 = 0; c2 < c; ++c2)
                if (b.col(c).dot(b.col(c2)) != 0)
                    throw Error(ErrorCode::NumericalFailure, "integer basis is not mutually orthogonal");
        }
        Eigenspace s;
        s.eigenvalue = Scalar(value);
        s.dimension = static_cast<int>(b.cols());
        s.basis = b.cast<double>();
        for (Eigen::Index c = 0; c < b.cols(); ++c)
            s.basis.col(c).normalize();
        s.components = std::move(part.components);
        std::sort(s.components.begin(), s.components.end());
        s.integer_basis = std::move(part.basis);
        spaces.push_back(std::move(s));
    }
    return DecompositionBuilder::finish(g, std::move(spaces), ArithmeticMode::Exact, Tolerance{});
}

SpectralDecomposition assembled_decomposition(const Graph& g, std::vector<FloatingPart> parts, const Tolerance& tol)
{
    const int n = g.vertex_count();
    const Eigen::MatrixXd walk = g.walk_matrix();
    std::vector<Eigenspace> spaces;
    for (auto& p : parts) {
        if (p.basis.rows() != n)
            throw Error(ErrorCode::DimensionMismatch, "basis has wrong row count");
        auto same = std::find_if(spaces.begin(), spaces.end(), [&](const Eigenspace& s) {
            return approx_equal(s.eigenvalue, p.eigenvalue, tol.eigen_group);
        });
        if (same != spaces.end()) {
            Eigen::MatrixXd joined(n, same->basis.cols() + p.basis.cols());
            joined << same->basis, p.basis;
            same->basis = std::move(joined);
            same->components.insert(same->components.end(), p.components.begin(), p.components.end());
            continue;
        }
        Eigenspace s;
        s.eigenvalue = p.eigenvalue;
        s.basis = std::move(p.basis);
        s.components = std::move(p.components);
        spaces.push_back(std::move(s));
    }
    for (auto& s : spaces) {
        s.basis = orthonormalize(s.basis);
        s.dimension = static_cast<int>(s.basis.cols());
        std::sort(s.components.begin(), s.components.end());
        double residual = (walk * s.basis - s.walk_eigenvalue().value * s.basis).norm();
        if (residual > tol.residual * std::sqrt(static_cast<double>(s.dimension)))
            throw Error(ErrorCode::NumericalFailure, "supplied basis is not an eigenbasis (residual " +
                                                         format_decimal(residual) + ")");
    }
    return DecompositionBuilder::finish(g, std::move(spaces), ArithmeticMode::Floating, tol);
}

}  // namespace gdesign
