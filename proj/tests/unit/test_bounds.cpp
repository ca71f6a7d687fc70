#include "gdesign/bounds.hpp"
#include "gdesign/cube.hpp"
#include "gdesign/error.hpp"
#include "gdesign/schemes.hpp"

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

std::vector<std::vector<int>> adjacency_lists(const Graph& g)
{
    std::vector<std::vector<int>> adj(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        adj[v] = g.neighbours(v);
    return adj;
}

std::vector<int> pairs_through_one(const AssociationScheme& j)
{
    std::vector<int> y;
    for (int x = 0; x < j.point_count(); ++x)
        if (j.points()[x] & 1U)
            y.push_back(x);
    return y;
}

int space_with_weight(const SpectralDecomposition& d, int w)
{
    for (int i = 0; i < d.size(); ++i)
        if (d.eigenspace(i).components == std::vector<int>{w})
            return i;
    return -1;
}

Graph random_connected_graph(std::mt19937& rng, int n, double p)
{
    while (true) {
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (std::uniform_real_distribution<double>(0, 1)(rng) < p)
                    edges.emplace_back(i, j);
        try {
            return build_graph(n, edges);
        } catch (const Error&) {
        }
    }
}

}  // namespace

TEST(Hoffman, Bounds)
{
    EXPECT_EQ(hoffman_bound(cube_decomposition(CubeGraph(3, 2))).to_string(), "1/4");
    const auto j = johnson_scheme(5, 2);
    EXPECT_EQ(hoffman_bound(scheme_decomposition(j, {2})).to_string(), "2/5");
    EXPECT_NEAR(hoffman_bound(spectral_decomposition(complete_bipartite_graph(4, 4))).value, 0.5, 1e-12);
    EXPECT_EQ(hoffman_bound(cube_decomposition(CubeGraph(5))).to_string(), "1/2");
    expect_code(ErrorCode::NotRegular,
                [] { hoffman_bound(spectral_decomposition(complete_bipartite_graph(2, 3))); });
}

TEST(Cheeger, Ratios)
{
    const auto q4 = cube_decomposition(CubeGraph(4));
    std::vector<int> half;
    for (int x = 0; x < 16; ++x)
        if (x & 1)
            half.push_back(x);
    const Design w(16, half);
    EXPECT_EQ(cheeger_ratio(q4, w), Rational(1, 2));
    EXPECT_EQ(cheeger_bound(q4).to_string(), "1/2");
    EXPECT_TRUE(cheeger_sharp(q4, w));

    const auto k5 = spectral_decomposition(complete_graph(5));
    EXPECT_EQ(cheeger_ratio(k5, Design(5, {0})), Rational(5, 4));
    EXPECT_TRUE(cheeger_sharp(k5, Design(5, {0})));
    EXPECT_TRUE(cheeger_sharp(k5, Design(5, {1, 3})));

    expect_code(ErrorCode::DegenerateSubset, [&] { cheeger_ratio(k5, Design(5, {0, 1, 2, 3, 4})); });
    expect_code(ErrorCode::NotRegular,
                [] { cheeger_ratio(spectral_decomposition(complete_bipartite_graph(2, 3)), Design(5, {0})); });
    EXPECT_FALSE(cheeger_sharp(q4, Design(16, {0})));
}

TEST(Cheeger, RatioNeverBelowBound)
{
    std::mt19937 rng(41);
    for (const Graph& g : {petersen_graph(), truncated_tetrahedron(), CubeGraph(4).to_graph()}) {
        const auto d = spectral_decomposition(g);
        const double bound = cheeger_bound(d).value;
        for (int trial = 0; trial < 100; ++trial) {
            const int n = g.vertex_count();
            const Design w(n, oracle::random_subset(rng, n, 1 + static_cast<int>(rng() % (n - 1))));
            EXPECT_GE(to_double(cheeger_ratio(d, w)), bound - 1e-12);
        }
    }
}

TEST(StableSets, Examples)
{
    const Graph q32 = CubeGraph(3, 2).to_graph();
    EXPECT_TRUE(is_stable_set(q32, Design(8, {0, 7})));
    EXPECT_FALSE(is_stable_set(q32, Design(8, {0, 3})));
    const auto r = max_stable_set(q32);
    EXPECT_EQ(r.alpha, 2);

    const auto j = johnson_scheme(5, 2);
    const auto kg = max_stable_set(union_graph(j, {2}));
    EXPECT_EQ(kg.alpha, 4);
    EXPECT_TRUE(kg.complete);
    EXPECT_EQ(kg.witnesses.size(), 5u);
    EXPECT_NE(std::find(kg.witnesses.begin(), kg.witnesses.end(), pairs_through_one(j)), kg.witnesses.end());

    EXPECT_EQ(max_stable_set(petersen_graph()).alpha, 4);
    for (int n = 2; n <= 9; ++n)
        EXPECT_EQ(max_stable_set(complete_graph(n)).alpha, 1);
    EXPECT_EQ(max_stable_set(complete_bipartite_graph(4, 4)).witnesses.size(), 2u);

    const auto capped = max_stable_set(CubeGraph(4).to_graph(), 1);
    EXPECT_EQ(capped.alpha, 8);
    EXPECT_EQ(capped.witnesses.size(), 1u);
    EXPECT_FALSE(capped.complete);
}

TEST(StableSets, MatchBruteForce)
{
    std::mt19937 rng(43);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 12);
        const Graph g = random_connected_graph(rng, n, 0.3);
        const auto r = max_stable_set(g);
        EXPECT_EQ(r.alpha, oracle::alpha_brute(adjacency_lists(g)));
        for (const auto& w : r.witnesses) {
            EXPECT_EQ(static_cast<int>(w.size()), r.alpha);
            EXPECT_TRUE(is_stable_set(g, Design(n, w)));
        }
        EXPECT_TRUE(std::is_sorted(r.witnesses.begin(), r.witnesses.end()));
        EXPECT_EQ(std::adjacent_find(r.witnesses.begin(), r.witnesses.end()), r.witnesses.end());
    }
}

TEST(StableSets, NeverExceedHoffman)
{
    const auto j = johnson_scheme(5, 2);
    std::vector<SpectralDecomposition> ds;
    ds.push_back(cube_decomposition(CubeGraph(3)));
    ds.push_back(cube_decomposition(CubeGraph(3, 2)));
    ds.push_back(cube_decomposition(CubeGraph(4, 2)));
    ds.push_back(scheme_decomposition(j, {1}));
    ds.push_back(scheme_decomposition(j, {2}));
    ds.push_back(spectral_decomposition(truncated_tetrahedron()));
    ds.push_back(spectral_decomposition(complete_bipartite_graph(4, 4)));
    ds.push_back(spectral_decomposition(complete_graph(5)));
    for (const auto& d : ds) {
        const int alpha = max_stable_set(d.graph()).alpha;
        EXPECT_LE(alpha, static_cast<int>(std::floor(d.vertex_count() * hoffman_bound(d).value + 1e-9)));
    }
}

TEST(Search, Q3)
{
    const auto d = cube_decomposition(CubeGraph(3));
    const auto r = exhaustive_design_search(d, 8);
    EXPECT_TRUE(r.exhaustive);
    EXPECT_EQ(r.subsets_examined, 255);
    EXPECT_EQ(*r.best_efficacy, Rational(2, 5));
    EXPECT_NE(std::find(r.witnesses.begin(), r.witnesses.end(), std::vector<int>{0, 7}), r.witnesses.end());
    for (const auto& w : r.witnesses)
        EXPECT_EQ(*design_report(d, Design(8, w)).efficacy, Rational(2, 5));
}

TEST(Search, Q4SizeFour)
{
    const auto d = cube_decomposition(CubeGraph(4));
    const auto r = exhaustive_design_search(d, 4);
    EXPECT_FALSE(r.exhaustive);
    EXPECT_EQ(r.subsets_examined, 16 + 120 + 560 + 1820);
    EXPECT_EQ(*r.best_efficacy, Rational(4, 10));
    EXPECT_EQ(r.witnesses.size(), 16u);
    const Graph g = d.graph();
    for (const auto& w : r.witnesses) {
        EXPECT_FALSE(is_stable_set(g, Design(16, w)));
        EXPECT_EQ(*design_report(d, Design(16, w)).efficacy, Rational(4, 10));
    }
    const std::vector<int> lifted = {0, 7, 8, 15};
    EXPECT_NE(std::find(r.witnesses.begin(), r.witnesses.end(), lifted), r.witnesses.end());
}

TEST(Search, JohnsonComplementSmallSubsets)
{
    const auto j = johnson_scheme(5, 2);
    const auto d = scheme_decomposition(j, {1});
    const auto r = exhaustive_design_search(d, 3);
    EXPECT_EQ(r.subsets_examined, 10 + 45 + 120);
    EXPECT_EQ(r.subsets_integrating_nontrivial, 0);
    // only the trivial prefix: best ratio is 1/1
    EXPECT_EQ(*r.best_efficacy, Rational(1));
}

TEST(Search, CompleteGraphSingletons)
{
    const auto d = spectral_decomposition(complete_graph(5));
    const auto r = exhaustive_design_search(d, 1);
    EXPECT_EQ(*r.best_efficacy, Rational(1));
    EXPECT_EQ(r.witnesses.size(), 5u);
}

TEST(Search, TruncatedTetrahedron)
{
    const auto d = spectral_decomposition(truncated_tetrahedron());
    const auto r = exhaustive_design_search(d, 4);
    EXPECT_EQ(*r.best_efficacy, Rational(4, 10));
    EXPECT_NE(std::find(r.witnesses.begin(), r.witnesses.end(), std::vector<int>{2, 3, 7, 11}), r.witnesses.end());
    for (const auto& w : r.witnesses)
        EXPECT_EQ(design_report(d, Design(12, w)).k, 4);
}

TEST(Search, Limits)
{
    expect_code(ErrorCode::TooLarge, [] { exhaustive_design_search(cube_decomposition(CubeGraph(6)), 2); });
    expect_code(ErrorCode::TooLarge, [] { exhaustive_design_search(cube_decomposition(CubeGraph(5)), 16); });
    expect_code(ErrorCode::OutOfRange, [] { exhaustive_design_search(cube_decomposition(CubeGraph(3)), 0); });
}

TEST(Certificates, HoffmanOnDistanceCube)
{
    const auto src = cube_decomposition(CubeGraph(3, 2));
    const Design h2(8, {0, 7});
    const auto c = hoffman_certificate(src, h2);
    EXPECT_TRUE(c.attained);
    EXPECT_EQ(c.bound.to_string(), "1/4");
    EXPECT_EQ(src.eigenspace(c.implicated).components, std::vector<int>{2});
    EXPECT_FALSE(c.implicated_integrated);
    EXPECT_TRUE(residual_confined(src, h2, c.implicated));
    EXPECT_TRUE(is_extremal(src, h2));

    const auto miss = hoffman_certificate(src, Design(8, {0}));
    EXPECT_FALSE(miss.attained);
    expect_code(ErrorCode::NotStable, [&] { hoffman_certificate(src, Design(8, {0, 1})); });
}

TEST(Certificates, TransferToCube)
{
    const auto src = cube_decomposition(CubeGraph(3, 2));
    const auto tgt = cube_decomposition(CubeGraph(3));
    const auto t = via_hoffman_optimality(src, tgt, Design(8, {0, 7}));
    EXPECT_EQ(t.target_index, space_with_weight(tgt, 2));
    EXPECT_TRUE(t.implicated_last);
    EXPECT_EQ(*t.report.efficacy, Rational(2, 5));

    expect_code(ErrorCode::EigenspaceMismatch, [&] {
        via_hoffman_optimality(src, spectral_decomposition(complete_graph(8)), Design(8, {0, 7}));
    });
    expect_code(ErrorCode::EigenspaceMismatch, [&] {
        via_hoffman_optimality(src, spectral_decomposition(complete_graph(5)), Design(8, {0, 7}));
    });
}

TEST(Certificates, KneserTransfer)
{
    const auto j = johnson_scheme(5, 2);
    const auto kg = scheme_decomposition(j, {2});
    const auto g1 = scheme_decomposition(j, {1});
    const auto y = pairs_through_one(j);
    const Design w(10, y);
    const auto t = via_hoffman_optimality(kg, g1, w);
    EXPECT_TRUE(t.certificate.attained);
    EXPECT_EQ(kg.eigenspace(t.certificate.implicated).components, std::vector<int>{1});
    EXPECT_EQ(g1.eigenspace(t.target_index).components, std::vector<int>{1});
    EXPECT_TRUE(t.implicated_last);
    EXPECT_EQ(t.report.k, 2);
    EXPECT_EQ(t.report.integrated_dimension, 6);
    EXPECT_EQ(*t.report.efficacy, Rational(2, 3));
    EXPECT_TRUE(t.report.extremal);
    EXPECT_FALSE(is_stable_set(g1.graph(), w));
    EXPECT_TRUE(residual_confined(kg, w, t.certificate.implicated));
}

TEST(Certificates, CheegerSharpFixtures)
{
    // Q4 facet, K4,4 one vertex per side, K5 singleton, Q3 facet
    struct Case {
        SpectralDecomposition d;
        std::vector<int> w;
    };
    std::vector<int> facet4;
    for (int x = 0; x < 16; ++x)
        if (!(x & 8))
            facet4.push_back(x);
    std::vector<Case> cases;
    cases.push_back({cube_decomposition(CubeGraph(4)), facet4});
    cases.push_back({spectral_decomposition(complete_bipartite_graph(4, 4)), {3, 7}});
    cases.push_back({spectral_decomposition(complete_graph(5)), {0}});
    cases.push_back({cube_decomposition(CubeGraph(3)), {0, 1, 2, 3}});
    for (const auto& c : cases) {
        const Design w(c.d.vertex_count(), c.w);
        const auto cert = cheeger_certificate(c.d, w);
        EXPECT_TRUE(cert.attained);
        EXPECT_FALSE(cert.implicated_integrated);
        EXPECT_TRUE(residual_confined(c.d, w, cert.implicated));
        EXPECT_TRUE(is_extremal(c.d, w));
    }
    // the bipartition side is Hoffman-sharp but not Cheeger-sharp
    const auto k44 = spectral_decomposition(complete_bipartite_graph(4, 4));
    const Design side(8, {4, 5, 6, 7});
    EXPECT_FALSE(cheeger_certificate(k44, side).attained);
    const auto h = hoffman_certificate(k44, side);
    EXPECT_TRUE(h.attained);
    EXPECT_TRUE(residual_confined(k44, side, h.implicated));
}
