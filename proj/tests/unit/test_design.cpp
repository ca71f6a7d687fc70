#include "gdesign/cube.hpp"
#include "gdesign/design.hpp"
#include "gdesign/error.hpp"
#include "gdesign/graph.hpp"

#include "../support/oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace gdesign;

namespace {

void expect_code(ErrorCode code, const std::function<void()>& f)
{
    try {
        f();
        ADD_FAILURE() << "expected " << to_string(code);
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), code) << e.what();
    }
}

int space_with_weight(const SpectralDecomposition& d, int w)
{
    for (int i = 0; i < d.size(); ++i) {
        const auto& c = d.eigenspace(i).components;
        if (std::find(c.begin(), c.end(), w) != c.end())
            return i;
    }
    return -1;
}

// Per-vector mean test written from the definition.
bool averages(const Eigen::VectorXd& v, const std::vector<int>& w)
{
    double mw = 0.0;
    for (int x : w)
        mw += v(x);
    mw /= static_cast<double>(w.size());
    return std::abs(mw - v.mean()) < 1e-9;
}

Eigen::MatrixXd random_orthogonal(std::mt19937& rng, int dim)
{
    std::normal_distribution<double> g;
    Eigen::MatrixXd m(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            m(i, j) = g(rng);
    return Eigen::HouseholderQR<Eigen::MatrixXd>(m).householderQ();
}

oracle::EfficacyAnswer oracle_for(const SpectralDecomposition& d, const std::vector<bool>& verdicts)
{
    std::vector<oracle::SpaceInfo> spaces;
    for (int i = 0; i < d.size(); ++i) {
        const auto& s = d.eigenspace(i);
        // keys rounded onto a 1/720 grid: every spectrum used here is rational with small denominators
        const double key = std::abs(s.walk_eigenvalue().value);
        spaces.push_back({oracle::Q(static_cast<std::int64_t>(std::llround(key * 720.0)), 720), s.dimension,
                          verdicts[i]});
    }
    return oracle::efficacy_by_permutation(spaces);
}

}  // namespace

TEST(DesignType, Validation)
{
    expect_code(ErrorCode::InvalidDesign, [] { Design(5, {}); });
    expect_code(ErrorCode::InvalidDesign, [] { Design(5, {1, 1}); });
    expect_code(ErrorCode::OutOfRange, [] { Design(5, {5}); });
    expect_code(ErrorCode::OutOfRange, [] { Design(5, {-1}); });
    const Design w(5, {3, 0});
    EXPECT_EQ(w.vertices(), (std::vector<int>{0, 3}));
    EXPECT_TRUE(w.contains(3));
    EXPECT_FALSE(w.contains(1));
    EXPECT_FALSE(w.is_full());
}

TEST(IntegratesVector, CompleteGraphSingleton)
{
    const auto d = spectral_decomposition(complete_graph(5));
    const Design w(5, {0});
    Eigen::VectorXd v(5);
    v << 4, -1, -1, -1, -1;
    EXPECT_FALSE(integrates_vector(d, w, v));
    v << 0, 1, -1, 0, 0;
    EXPECT_TRUE(integrates_vector(d, w, v));
    expect_code(ErrorCode::DimensionMismatch, [&] { integrates_vector(d, w, Eigen::VectorXd::Ones(4)); });
}

TEST(IntegratesVector, FullSetAveragesEverything)
{
    const auto d = spectral_decomposition(truncated_tetrahedron());
    const Design all(12, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11});
    for (const auto& s : d.eigenspaces())
        for (int c = 0; c < s.dimension; ++c)
            EXPECT_TRUE(integrates_vector(d, all, Eigen::VectorXd(s.basis.col(c))));
    for (int i = 0; i < d.size(); ++i)
        EXPECT_TRUE(integrates_eigenspace(d, all, i));
}

TEST(IntegratesVector, CubeCharacterExact)
{
    const CubeGraph q3(3);
    const auto d = cube_decomposition(q3);
    const Design h2(8, {0, 7});
    for (int a : {1, 2, 4}) {
        std::vector<std::int64_t> chi(8);
        for (int x = 0; x < 8; ++x)
            chi[x] = oracle::chi(a, x, 3);
        EXPECT_TRUE(integrates_vector(d, h2, std::span<const std::int64_t>(chi)));
    }
    std::vector<std::int64_t> chi3(8);
    for (int x = 0; x < 8; ++x)
        chi3[x] = oracle::chi(3, x, 3);
    EXPECT_FALSE(integrates_vector(d, h2, std::span<const std::int64_t>(chi3)));
}

TEST(IntegratesEigenspace, HammingOnQ3)
{
    const auto d = cube_decomposition(CubeGraph(3));
    const Design h2(8, {0, 7});
    EXPECT_FALSE(integrates_eigenspace(d, h2, space_with_weight(d, 2)));
    EXPECT_TRUE(integrates_eigenspace(d, h2, space_with_weight(d, 1)));
    EXPECT_TRUE(integrates_eigenspace(d, h2, space_with_weight(d, 3)));
    EXPECT_TRUE(integrates_eigenspace(d, h2, space_with_weight(d, 0)));
}

TEST(DesignReport, HammingOnQ3BothPaths)
{
    const Design h2(8, {0, 7});
    const auto exact = design_report(cube_decomposition(CubeGraph(3)), h2);
    EXPECT_EQ(exact.k, 3);
    EXPECT_EQ(exact.integrated_dimension, 5);
    ASSERT_TRUE(exact.efficacy);
    EXPECT_EQ(*exact.efficacy, Rational(2, 5));
    EXPECT_TRUE(exact.extremal);

    const auto floating = design_report(spectral_decomposition(CubeGraph(3).to_graph()), h2);
    EXPECT_EQ(floating.k, 3);
    EXPECT_EQ(floating.integrated_dimension, 5);
    EXPECT_EQ(*floating.efficacy, Rational(2, 5));
    EXPECT_TRUE(floating.extremal);
}

TEST(DesignReport, TruncatedTetrahedronRedSubset)
{
    const auto d = spectral_decomposition(truncated_tetrahedron());
    const Design red(12, {2, 3, 7, 11});
    const auto r = design_report(d, red);
    EXPECT_EQ(r.k, 4);
    EXPECT_EQ(r.integrated_dimension, 10);
    EXPECT_EQ(*r.efficacy, Rational(4, 10));
    // only the eigenvalue -1 space fails
    for (int i = 0; i < d.size(); ++i)
        EXPECT_EQ(r.per_eigenspace[i], std::abs(d.eigenspace(i).eigenvalue.value + 1.0) > 1e-9);
}

TEST(DesignReport, MatchesPermutationOracle)
{
    std::mt19937 rng(7);
    for (const Graph& g : {truncated_tetrahedron(), petersen_graph(), complete_bipartite_graph(4, 4),
                           CubeGraph(3).to_graph(), CubeGraph(4, 2).to_graph()}) {
        const auto d = spectral_decomposition(g);
        const int n = g.vertex_count();
        for (int trial = 0; trial < 60; ++trial) {
            const int size = 1 + static_cast<int>(rng() % n);
            const Design w(n, oracle::random_subset(rng, n, size));
            const auto r = design_report(d, w);
            std::vector<bool> verdicts;
            for (int i = 0; i < d.size(); ++i) {
                const auto& s = d.eigenspace(i);
                bool all = true;
                for (int c = 0; c < s.dimension; ++c)
                    all = all && averages(s.basis.col(c), w.vertices());
                verdicts.push_back(all);
            }
            EXPECT_EQ(r.per_eigenspace, verdicts);
            const auto want = oracle_for(d, verdicts);
            EXPECT_EQ(r.k, want.k);
            EXPECT_EQ(r.integrated_dimension, want.dimension);
            if (want.dimension > 0)
                EXPECT_EQ(*r.efficacy, Rational(size, want.dimension));

            // chosen order: refines tie-groups, first k integrated
            ASSERT_EQ(static_cast<int>(r.chosen_order.size()), d.size());
            for (std::size_t i = 1; i < r.chosen_order.size(); ++i)
                EXPECT_LE(d.eigenspace(r.chosen_order[i - 1]).tie_group, d.eigenspace(r.chosen_order[i]).tie_group);
            int lead = 0;
            while (lead < d.size() && r.per_eigenspace[r.chosen_order[lead]])
                ++lead;
            EXPECT_EQ(lead, r.k);
            EXPECT_GE(r.k, 1);
        }
    }
}

TEST(DesignReport, SimpleDesignOnQ5)
{
    const auto d = cube_decomposition(CubeGraph(5));
    const auto r = design_report(d, Design(32, {0, 31}));
    EXPECT_EQ(r.k, 3);
    EXPECT_EQ(*r.efficacy, Rational(2, 7));
}

TEST(DesignReport, NonRegularMayHaveNoPrefix)
{
    // star K_{1,3}: a single leaf misses the trivial space (stationary measure is the degree vector)
    const auto d = spectral_decomposition(complete_bipartite_graph(1, 3));
    const auto r = design_report(d, Design(4, {1}));
    EXPECT_FALSE(r.per_eigenspace[d.trivial_index()]);
    expect_code(ErrorCode::NotRegular, [&] { is_extremal(d, Design(4, {1})); });
    EXPECT_FALSE(r.extremal);
}

TEST(Extremal, Examples)
{
    const auto q3 = cube_decomposition(CubeGraph(3));
    EXPECT_TRUE(is_extremal(q3, Design(8, {0, 7})));
    EXPECT_FALSE(is_extremal(q3, Design(8, {0, 1, 2, 3, 4, 5, 6, 7})));
    EXPECT_FALSE(is_extremal(q3, Design(8, {0})));
    const auto k44 = spectral_decomposition(complete_bipartite_graph(4, 4));
    EXPECT_TRUE(is_extremal(k44, Design(8, {4, 5, 6, 7})));
    EXPECT_TRUE(is_extremal(k44, Design(8, {3, 7})));
}

TEST(NoFullIntegration, ExhaustiveOnQ3AndK5)
{
    for (const Graph& g : {CubeGraph(3).to_graph(), complete_graph(5)}) {
        const auto d = spectral_decomposition(g);
        const int n = g.vertex_count();
        int proper = 0;
        for (int mask = 1; mask < (1 << n) - 1; ++mask) {
            std::vector<int> w;
            for (int v = 0; v < n; ++v)
                if ((mask >> v) & 1)
                    w.push_back(v);
            const auto r = design_report(d, Design(n, w));
            EXPECT_TRUE(std::find(r.per_eigenspace.begin(), r.per_eigenspace.end(), false) != r.per_eigenspace.end());
            ++proper;
        }
        EXPECT_EQ(proper, (1 << n) - 2);
    }
}

TEST(BasisIndependence, RandomRotations)
{
    std::mt19937 rng(11);
    for (const Graph& g : {truncated_tetrahedron(), petersen_graph(), CubeGraph(4).to_graph()}) {
        const auto d = spectral_decomposition(g);
        const int n = g.vertex_count();
        for (int trial = 0; trial < 40; ++trial) {
            const Design w(n, oracle::random_subset(rng, n, 1 + static_cast<int>(rng() % (n - 1))));
            for (int i = 0; i < d.size(); ++i) {
                const auto& s = d.eigenspace(i);
                const Eigen::MatrixXd rotated = s.basis * random_orthogonal(rng, s.dimension);
                bool all = true;
                for (int c = 0; c < s.dimension; ++c)
                    all = all && averages(rotated.col(c), w.vertices());
                EXPECT_EQ(all, integrates_eigenspace(d, w, i));
            }
        }
    }
}

namespace {

void check_rebase(const Eigen::MatrixXd& basis, const Design& w)
{
    const int dim = static_cast<int>(basis.cols());
    for (int j = 0; j < dim; ++j) {
        const Eigen::MatrixXd b = rebase(basis, w, j);
        ASSERT_EQ(b.cols(), dim);
        EXPECT_LT((b.transpose() * b - Eigen::MatrixXd::Identity(dim, dim)).norm(), 1e-9);
        EXPECT_LT((b * b.transpose() - basis * basis.transpose()).norm(), 1e-9);
        int count = 0;
        for (int c = 0; c < dim; ++c)
            count += averages(b.col(c), w.vertices()) ? 1 : 0;
        EXPECT_EQ(count, j);
        for (int c = 0; c < j; ++c)
            EXPECT_TRUE(averages(b.col(c), w.vertices()));
    }
    expect_code(ErrorCode::BadTarget, [&] { rebase(basis, w, dim); });
    expect_code(ErrorCode::BadTarget, [&] { rebase(basis, w, -1); });
}

}  // namespace

TEST(Rebase, CompleteGraphEveryTarget)
{
    const auto d = spectral_decomposition(complete_graph(5));
    const auto& s = d.eigenspace(1);
    ASSERT_EQ(s.dimension, 4);
    const Design w(5, {0});
    check_rebase(s.basis, w);
    // the integrated vectors are exactly those vanishing on vertex 0
    const Eigen::MatrixXd b2 = rebase(s.basis, w, 2);
    EXPECT_NEAR(b2(0, 0), 0.0, 1e-9);
    EXPECT_NEAR(b2(0, 1), 0.0, 1e-9);
    EXPECT_GT(std::abs(b2(0, 2)), 1e-6);
    EXPECT_GT(std::abs(b2(0, 3)), 1e-6);
    const Eigen::MatrixXd b0 = rebase(s.basis, w, 0);
    for (int c = 0; c < 4; ++c)
        EXPECT_GT(std::abs(b0(0, c)), 1e-6);
}

TEST(Rebase, CubeEigenspaces)
{
    const auto d = cube_decomposition(CubeGraph(3));
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const Design w(8, oracle::random_subset(rng, 8, 1 + static_cast<int>(rng() % 7)));
        for (int i = 0; i < d.size(); ++i) {
            const auto& s = d.eigenspace(i);
            if (integrates_eigenspace(d, w, i)) {
                EXPECT_EQ(rebase(s.basis, w, s.dimension), s.basis);
                if (s.dimension > 1)
                    expect_code(ErrorCode::FullyIntegrated, [&] { rebase(s.basis, w, 0); });
                continue;
            }
            check_rebase(s.basis, w);
        }
    }
}
