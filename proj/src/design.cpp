#include "gdesign/design.hpp"

#include "gdesign/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gdesign {

Design::Design(int vertex_count, std::vector<int> vertices)
    : vertex_count_(vertex_count), vertices_(std::move(vertices))
{
    if (vertices_.empty())
        throw Error(ErrorCode::InvalidDesign, "a design must be nonempty");
    std::sort(vertices_.begin(), vertices_.end());
    if (vertices_.front() < 0 || vertices_.back() >= vertex_count_)
        throw Error(ErrorCode::OutOfRange, "design vertex outside [0," + std::to_string(vertex_count_) + ")");
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
        throw Error(ErrorCode::InvalidDesign, "design repeats a vertex");
}

bool Design::contains(int v) const
{
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

Eigen::VectorXd Design::indicator() const
{
    Eigen::VectorXd x = Eigen::VectorXd::Zero(vertex_count_);
    for (int v : vertices_)
        x(v) = 1.0;
    return x;
}

SpectrumShape shape_of(const SpectralDecomposition& d)
{
    SpectrumShape s;
    for (const auto& e : d.eigenspaces()) {
        s.dimensions.push_back(e.dimension);
        s.tie_groups.push_back(e.tie_group);
    }
    s.vertex_count = d.vertex_count();
    s.regular = d.regular_degree().has_value();
    return s;
}

DesignReport assemble_report(const SpectrumShape& shape, const std::vector<bool>& verdicts, int design_size)
{
    const int count = static_cast<int>(shape.dimensions.size());
    DesignReport r;
    r.per_eigenspace = verdicts;
    r.design_size = design_size;

    // eigenspaces arrive sorted by tie-group
    bool prefix_open = true;
    for (int begin = 0; begin < count;) {
        int end = begin;
        while (end < count && shape.tie_groups[end] == shape.tie_groups[begin])
            ++end;
        std::vector<int> failed;
        for (int i = begin; i < end; ++i) {
            if (verdicts[i]) {
                r.chosen_order.push_back(i);
                if (prefix_open) {
                    ++r.k;
                    r.integrated_dimension += shape.dimensions[i];
                }
            } else {
                failed.push_back(i);
            }
        }
        if (!failed.empty())
            prefix_open = false;
        r.chosen_order.insert(r.chosen_order.end(), failed.begin(), failed.end());
        begin = end;
    }
    if (r.integrated_dimension > 0)
        r.efficacy = Rational(design_size, r.integrated_dimension);
    int failures = static_cast<int>(std::count(verdicts.begin(), verdicts.end(), false));
    r.extremal = shape.regular && design_size < shape.vertex_count && failures == 1;
    return r;
}

namespace {

void check_shape(const SpectralDecomposition& d, const Design& w)
{
    if (w.vertex_count() != d.vertex_count())
        throw Error(ErrorCode::DimensionMismatch, "design is over " + std::to_string(w.vertex_count()) +
                                                      " vertices, graph has " + std::to_string(d.vertex_count()));
}

}  // namespace

bool integrates_vector(const SpectralDecomposition& d, const Design& w, const Eigen::VectorXd& v)
{
    check_shape(d, w);
    if (v.size() != d.vertex_count())
        throw Error(ErrorCode::DimensionMismatch, "vector length differs from vertex count");
    double sum_w = 0.0;
    for (int x : w.vertices())
        sum_w += v(x);
    double defect = sum_w / w.size() - v.sum() / d.vertex_count();
    return std::fabs(defect) < d.tolerance().residual * std::max(1.0, v.norm());
}

bool integrates_vector(const SpectralDecomposition& d, const Design& w, std::span<const std::int64_t> v)
{
    check_shape(d, w);
    if (static_cast<int>(v.size()) != d.vertex_count())
        throw Error(ErrorCode::DimensionMismatch, "vector length differs from vertex count");
    std::int64_t sum_w = 0;
    for (int x : w.vertices())
        sum_w += v[x];
    std::int64_t sum_v = std::accumulate(v.begin(), v.end(), std::int64_t{0});
    return static_cast<std::int64_t>(d.vertex_count()) * sum_w == static_cast<std::int64_t>(w.size()) * sum_v;
}

IntegrationKernel::IntegrationKernel(const SpectralDecomposition& d)
    : vertex_count_(d.vertex_count()), residual_(d.tolerance().residual)
{
    for (const auto& e : d.eigenspaces()) {
        Space s;
        if (e.integer_basis) {
            s.exact = *e.integer_basis;
            for (Eigen::Index c = 0; c < s.exact->cols(); ++c)
                s.exact_totals.push_back(s.exact->col(c).sum());
        } else {
            s.real = e.basis;
            s.real_totals = e.basis.colwise().sum().transpose();
        }
        spaces_.push_back(std::move(s));
    }
}

bool IntegrationKernel::integrates(int idx, std::span<const int> vertices) const
{
    const Space& s = spaces_.at(idx);
    const auto size = static_cast<std::int64_t>(vertices.size());
    if (s.exact) {
        const IntMatrix& b = *s.exact;
        for (Eigen::Index c = 0; c < b.cols(); ++c) {
            std::int64_t sum_w = 0;
            for (int x : vertices)
                sum_w += b(x, c);
            if (vertex_count_ * sum_w != size * s.exact_totals[c])
                return false;
        }
        return true;
    }
    Eigen::VectorXd mean_w = Eigen::VectorXd::Zero(s.real.cols());
    for (int x : vertices)
        mean_w += s.real.row(x).transpose();
    mean_w /= static_cast<double>(size);
    double defect = (mean_w - s.real_totals / vertex_count_).norm();
    return defect < residual_ * std::sqrt(static_cast<double>(s.real.cols()));
}

std::vector<bool> IntegrationKernel::verdicts(std::span<const int> vertices) const
{
    std::vector<bool> out(spaces_.size());
    for (std::size_t i = 0; i < spaces_.size(); ++i)
        out[i] = integrates(static_cast<int>(i), vertices);
    return out;
}

bool integrates_eigenspace(const SpectralDecomposition& d, const Design& w, int idx)
{
    check_shape(d, w);
    if (idx < 0 || idx >= d.size())
        throw Error(ErrorCode::OutOfRange, "eigenspace index " + std::to_string(idx) + " out of range");
    return IntegrationKernel(d).integrates(idx, w.vertices());
}

DesignReport design_report(const SpectralDecomposition& d, const Design& w)
{
    check_shape(d, w);
    return assemble_report(shape_of(d), IntegrationKernel(d).verdicts(w.vertices()), w.size());
}

bool is_extremal(const SpectralDecomposition& d, const Design& w)
{
    check_shape(d, w);
    if (!d.regular_degree())
        throw Error(ErrorCode::NotRegular, "extremal designs are defined on regular graphs");
    if (w.is_full())
        return false;
    // On a regular graph the eigenspaces are orthogonal and the trivial one
    // absorbs (|W|/|V|) 1, so r has a nonzero component in eigenspace i
    // exactly when W fails to integrate it.
    auto verdicts = IntegrationKernel(d).verdicts(w.vertices());
    return std::count(verdicts.begin(), verdicts.end(), false) == 1;
}

namespace {

Eigen::VectorXd centered_weights(const Design& w)
{
    const int n = w.vertex_count();
    Eigen::VectorXd g = Eigen::VectorXd::Constant(n, 1.0 / n);
    for (int x : w.vertices())
        g(x) -= 1.0 / w.size();
    return g;
}

}  // namespace

Eigen::MatrixXd rebase(const Eigen::MatrixXd& basis, const Design& w, int target, double tolerance)
{
    if (basis.rows() != w.vertex_count())
        throw Error(ErrorCode::DimensionMismatch, "basis rows differ from the design's vertex count");
    const int dim = static_cast<int>(basis.cols());
    const Eigen::VectorXd g = centered_weights(w);

    Eigen::MatrixXd phi = basis;
    auto defect = [&](int i) { return phi.col(i).dot(g); };
    auto integrated = [&](int i) { return std::fabs(defect(i)) < tolerance; };

    int count = 0;
    for (int i = 0; i < dim; ++i)
        count += integrated(i);
    if (count == dim) {
        if (target == dim)
            return basis;
        throw Error(ErrorCode::FullyIntegrated, "the design integrates the whole eigenspace");
    }
    if (target < 0 || target >= dim)
        throw Error(ErrorCode::BadTarget, "target " + std::to_string(target) + " outside [0, " +
                                              std::to_string(dim - 1) + "]");

    auto find = [&](bool want, int skip) {
        for (int i = 0; i < dim; ++i)
            if (i != skip && integrated(i) == want)
                return i;
        return -1;
    };

    while (count > target) {
        int miss = find(false, -1);
        int hit = find(true, -1);
        Eigen::VectorXd plus = (phi.col(miss) + phi.col(hit)) / std::sqrt(2.0);
        Eigen::VectorXd minus = (phi.col(miss) - phi.col(hit)) / std::sqrt(2.0);
        phi.col(miss) = plus;
        phi.col(hit) = minus;
        --count;
    }
    while (count < target) {
        int first = find(false, -1);
        int second = find(false, first);
        const double a1 = defect(first);
        const double a2 = defect(second);
        Eigen::VectorXd keep = a1 * phi.col(first) + a2 * phi.col(second);
        Eigen::VectorXd killed = phi.col(first) / a1 - phi.col(second) / a2;
        phi.col(first) = keep.normalized();
        phi.col(second) = killed.normalized();
        ++count;
    }

    // integrated vectors lead; Gram-Schmidt then keeps their span and
    // leaves every later defect unchanged
    std::vector<int> order(dim);
    std::iota(order.begin(), order.end(), 0);
    std::stable_partition(order.begin(), order.end(), [&](int i) { return integrated(i); });
    Eigen::MatrixXd ordered(phi.rows(), dim);
    for (int i = 0; i < dim; ++i)
        ordered.col(i) = phi.col(order[i]);
    return orthonormalize(ordered);
}

}  // namespace gdesign
