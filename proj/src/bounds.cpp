#include "gdesign/bounds.hpp"

#include "gdesign/error.hpp"

#include <algorithm>
#include <cmath>

namespace gdesign {

namespace {

int require_regular(const SpectralDecomposition& d)
{
    if (!d.regular_degree())
        throw Error(ErrorCode::NotRegular, "bound is defined for regular graphs only");
    return *d.regular_degree();
}

const Scalar kOne{Rational(1)};

double scalar_tolerance(const SpectralDecomposition& d)
{
    return d.tolerance().eigen_group;
}

}  // namespace

Scalar hoffman_bound(const SpectralDecomposition& d)
{
    require_regular(d);
    const Scalar low = d.eigenspace(d.lowest_index()).walk_eigenvalue();
    return (Scalar(Rational(0)) - low) / (kOne - low);
}

Rational cheeger_ratio(const SpectralDecomposition& d, const Design& w)
{
    const int degree = require_regular(d);
    if (w.is_full())
        throw Error(ErrorCode::DegenerateSubset, "Cheeger ratio needs a proper subset");
    const Graph& g = d.graph();
    std::int64_t cut = 0;
    for (const auto& [u, v] : g.edges())
        if (w.contains(u) != w.contains(v))
            ++cut;
    const std::int64_t n = g.vertex_count();
    const std::int64_t s = w.size();
    return Rational(n * cut, static_cast<std::int64_t>(degree) * s * (n - s));
}

Scalar cheeger_bound(const SpectralDecomposition& d)
{
    require_regular(d);
    return kOne - d.eigenspace(d.second_index()).walk_eigenvalue();
}

bool cheeger_sharp(const SpectralDecomposition& d, const Design& w)
{
    return approx_equal(Scalar(cheeger_ratio(d, w)), cheeger_bound(d), scalar_tolerance(d));
}

bool residual_confined(const SpectralDecomposition& d, const Design& w, int idx)
{
    const int n = d.vertex_count();
    const Eigen::VectorXd r =
        w.indicator() - Eigen::VectorXd::Constant(n, static_cast<double>(w.size()) / n);
    if (r.norm() < d.tolerance().residual)
        return false;
    const Eigen::MatrixXd& b = d.eigenspace(idx).basis;
    const Eigen::VectorXd projected = b * (b.transpose() * r);
    return (projected - r).norm() < d.tolerance().residual * std::sqrt(static_cast<double>(n));
}

bool is_stable_set(const Graph& g, const Design& w)
{
    if (w.vertex_count() != g.vertex_count())
        throw Error(ErrorCode::DimensionMismatch, "design and graph have different vertex counts");
    const auto& vs = w.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (g.adjacent(vs[i], vs[j]))
                return false;
    return true;
}

namespace {

std::vector<int> bits_of(std::uint64_t m)
{
    std::vector<int> out;
    while (m) {
        out.push_back(__builtin_ctzll(m));
        m &= m - 1;
    }
    return out;
}

class StableSetSearch {
public:
    StableSetSearch(const Graph& g, std::size_t cap) : cap_(cap)
    {
        const int n = g.vertex_count();
        neighbours_.assign(n, 0);
        for (const auto& [u, v] : g.edges()) {
            neighbours_[u] |= std::uint64_t{1} << v;
            neighbours_[v] |= std::uint64_t{1} << u;
        }
    }

    StableSetResult run(int n)
    {
        const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        expand(0, 0, all);
        std::sort(found_.begin(), found_.end());
        StableSetResult out;
        out.alpha = best_;
        out.complete = complete_;
        for (std::uint64_t m : found_)
            out.witnesses.push_back(bits_of(m));
        std::sort(out.witnesses.begin(), out.witnesses.end());
        return out;
    }

private:
    // Greedy clique cover of the candidates; a stable set meets each clique at most once.
    int clique_cover(std::uint64_t candidates) const
    {
        int cliques = 0;
        while (candidates) {
            std::uint64_t pool = candidates;
            std::uint64_t clique = 0;
            while (pool) {
                const int v = __builtin_ctzll(pool);
                clique |= std::uint64_t{1} << v;
                pool &= neighbours_[v];
            }
            candidates &= ~clique;
            ++cliques;
        }
        return cliques;
    }

    void expand(std::uint64_t chosen, int size, std::uint64_t candidates)
    {
        if (candidates == 0) {
            record(chosen, size);
            return;
        }
        if (size + clique_cover(candidates) < best_)
            return;
        // branch on the candidate with the most candidate neighbours
        int pivot = -1;
        int pivot_degree = -1;
        for (std::uint64_t m = candidates; m; m &= m - 1) {
            const int v = __builtin_ctzll(m);
            const int deg = __builtin_popcountll(neighbours_[v] & candidates);
            if (deg > pivot_degree) {
                pivot = v;
                pivot_degree = deg;
            }
        }
        const std::uint64_t bit = std::uint64_t{1} << pivot;
        expand(chosen | bit, size + 1, candidates & ~neighbours_[pivot] & ~bit);
        if (pivot_degree > 0)
            expand(chosen, size, candidates & ~bit);
    }

    void record(std::uint64_t chosen, int size)
    {
        if (size > best_) {
            best_ = size;
            found_.clear();
            complete_ = true;
        }
        if (size == best_) {
            if (found_.size() < cap_)
                found_.push_back(chosen);
            else
                complete_ = false;
        }
    }

    std::vector<std::uint64_t> neighbours_;
    std::size_t cap_;
    int best_ = 0;
    std::vector<std::uint64_t> found_;
    bool complete_ = true;
};

}  // namespace

StableSetResult max_stable_set(const Graph& g, std::size_t witness_cap)
{
    if (g.vertex_count() > 64)
        throw Error(ErrorCode::TooLarge, "exact stable set search limited to 64 vertices");
    return StableSetSearch(g, witness_cap).run(g.vertex_count());
}

namespace {

std::int64_t binomial_capped(int n, int k, std::int64_t cap)
{
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    // exact while below the cap; C(n, i) * (n - i) stays far below 2^63 for n <= 63
    __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > cap)
            return cap + 1;
    }
    return static_cast<std::int64_t>(r);
}

}  // namespace

SearchResult exhaustive_design_search(const SpectralDecomposition& d, int max_size)
{
    const int n = d.vertex_count();
    if (n > 63)
        throw Error(ErrorCode::TooLarge, "exhaustive search limited to 63 vertices");
    if (max_size < 1)
        throw Error(ErrorCode::OutOfRange, "max size must be at least 1");
    max_size = std::min(max_size, n);
    std::int64_t total = 0;
    for (int s = 1; s <= max_size; ++s) {
        total += binomial_capped(n, s, kMaxSearchSubsets);
        if (total > kMaxSearchSubsets)
            throw Error(ErrorCode::TooLarge, "search would examine more than 1e8 subsets");
    }

    const IntegrationKernel kernel(d);
    const SpectrumShape shape = shape_of(d);
    const int trivial = d.trivial_index();

    SearchResult out;
    out.max_size = max_size;
    out.exhaustive = max_size == n;
    std::vector<int> vertices;
    for (int s = 1; s <= max_size; ++s) {
        const std::uint64_t limit = std::uint64_t{1} << n;
        for (std::uint64_t m = (std::uint64_t{1} << s) - 1; m < limit;) {
            vertices = bits_of(m);
            const auto verdicts = kernel.verdicts(vertices);
            ++out.subsets_examined;
            for (int i = 0; i < static_cast<int>(verdicts.size()); ++i)
                if (i != trivial && verdicts[i]) {
                    ++out.subsets_integrating_nontrivial;
                    break;
                }
            const DesignReport r = assemble_report(shape, verdicts, s);
            if (r.efficacy) {
                if (!out.best_efficacy || *r.efficacy < *out.best_efficacy) {
                    out.best_efficacy = r.efficacy;
                    out.witnesses.clear();
                }
                if (*r.efficacy == *out.best_efficacy)
                    out.witnesses.push_back(vertices);
            }
            // Gosper's hack: next mask with the same popcount
            const std::uint64_t low = m & (~m + 1);
            const std::uint64_t ripple = m + low;
            if (ripple == 0)
                break;
            m = (((ripple ^ m) >> 2) / low) | ripple;
        }
    }
    return out;
}

BoundCertificate hoffman_certificate(const SpectralDecomposition& d, const Design& w)
{
    require_regular(d);
    if (!is_stable_set(d.graph(), w))
        throw Error(ErrorCode::NotStable, "subset has an internal edge");
    BoundCertificate c;
    c.kind = BoundKind::Hoffman;
    c.bound = hoffman_bound(d);
    c.observed = Scalar(Rational(w.size(), d.vertex_count()));
    c.subset = w.vertices();
    c.attained = approx_equal(c.observed, c.bound, scalar_tolerance(d));
    c.implicated = d.lowest_index();
    c.implicated_integrated = integrates_eigenspace(d, w, c.implicated);
    return c;
}

BoundCertificate cheeger_certificate(const SpectralDecomposition& d, const Design& w)
{
    BoundCertificate c;
    c.kind = BoundKind::Cheeger;
    c.bound = cheeger_bound(d);
    c.observed = Scalar(cheeger_ratio(d, w));
    c.subset = w.vertices();
    c.attained = approx_equal(c.observed, c.bound, scalar_tolerance(d));
    c.implicated = d.second_index();
    c.implicated_integrated = integrates_eigenspace(d, w, c.implicated);
    return c;
}

TransferResult via_hoffman_optimality(const SpectralDecomposition& source, const SpectralDecomposition& target,
                                      const Design& w)
{
    if (source.vertex_count() != target.vertex_count())
        throw Error(ErrorCode::EigenspaceMismatch, "source and target have different vertex sets");
    TransferResult out;
    out.certificate = hoffman_certificate(source, w);
    const Eigen::MatrixXd p = source.eigenspace(out.certificate.implicated).projector();
    const double tol = 1e-6;
    out.target_index = -1;
    for (int i = 0; i < target.size(); ++i)
        if (target.eigenspace(i).dimension == source.eigenspace(out.certificate.implicated).dimension &&
            (target.eigenspace(i).projector() - p).norm() < tol) {
            out.target_index = i;
            break;
        }
    if (out.target_index < 0)
        throw Error(ErrorCode::EigenspaceMismatch, "implicated eigenspace is not an eigenspace of the target");
    out.report = design_report(target, w);
    const auto groups = target.frequency_order();
    const auto& last = groups.back();
    out.implicated_last = std::find(last.begin(), last.end(), out.target_index) != last.end();
    return out;
}

}  // namespace gdesign
