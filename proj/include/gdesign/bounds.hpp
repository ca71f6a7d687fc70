#ifndef GDESIGN_BOUNDS_HPP
#define GDESIGN_BOUNDS_HPP

#include "gdesign/design.hpp"
#include "gdesign/graph.hpp"
#include "gdesign/spectral.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace gdesign {

/// -lambda_n / (1 - lambda_n) for the least AD^-1 eigenvalue lambda_n.
/// Throws Error(NotRegular).
Scalar hoffman_bound(const SpectralDecomposition& d);

/// |V| |E(W, V\W)| / (deg |W| |V\W|). Throws Error(NotRegular),
/// Error(DegenerateSubset) for W = V.
Rational cheeger_ratio(const SpectralDecomposition& d, const Design& w);
/// 1 - lambda_2 for the second largest AD^-1 eigenvalue.
Scalar cheeger_bound(const SpectralDecomposition& d);
bool cheeger_sharp(const SpectralDecomposition& d, const Design& w);

/// r = 1_W - (|W|/|V|) 1 is nonzero and fixed by the projector of eigenspace idx.
bool residual_confined(const SpectralDecomposition& d, const Design& w, int idx);

bool is_stable_set(const Graph& g, const Design& w);

struct StableSetResult {
    int alpha = 0;
    /// Maximum stable sets, sorted; at most the requested cap.
    std::vector<std::vector<int>> witnesses;
    /// False when the witness cap cut the list short.
    bool complete = true;
};

/// Exact branch and bound, |V| <= 64. Throws Error(TooLarge).
StableSetResult max_stable_set(const Graph& g, std::size_t witness_cap = 10000);

struct SearchResult {
    std::optional<Rational> best_efficacy;
    /// Subsets attaining best_efficacy, by size then colexicographically.
    std::vector<std::vector<int>> witnesses;
    int min_size = 1;
    int max_size = 0;
    /// True when every subset of V was examined.
    bool exhaustive = false;
    std::int64_t subsets_examined = 0;
    /// Subsets that integrate at least one nontrivial eigenspace.
    std::int64_t subsets_integrating_nontrivial = 0;
};

inline constexpr std::int64_t kMaxSearchSubsets = 100'000'000;

/**
 * Minimizes efficacy over all nonempty subsets of size <= max_size, in
 * colexicographic order per size. Subsets with no integrated prefix are
 * skipped. Throws Error(TooLarge) when more than 1e8 subsets would be
 * examined or |V| > 63.
 */
SearchResult exhaustive_design_search(const SpectralDecomposition& d, int max_size);

enum class BoundKind { Hoffman, Cheeger };

struct BoundCertificate {
    BoundKind kind = BoundKind::Hoffman;
    Scalar bound;
    /// |W|/|V| for Hoffman, the expansion ratio for Cheeger.
    Scalar observed;
    std::vector<int> subset;
    bool attained = false;
    /// Least eigenvalue space (Hoffman) or second eigenvalue space (Cheeger).
    int implicated = 0;
    bool implicated_integrated = true;
};

/// Throws Error(NotStable) when W has an internal edge, Error(NotRegular).
BoundCertificate hoffman_certificate(const SpectralDecomposition& d, const Design& w);
BoundCertificate cheeger_certificate(const SpectralDecomposition& d, const Design& w);

struct TransferResult {
    BoundCertificate certificate;
    /// Index in the target decomposition of the implicated eigenspace.
    int target_index = 0;
    DesignReport report;
    /// The implicated eigenspace sits in the target's last tie-group.
    bool implicated_last = false;
};

/**
 * Certifies W against the Hoffman bound on the source graph and re-reports
 * it on a target graph with the same eigenspaces. Throws Error(NotStable)
 * and Error(EigenspaceMismatch) when the implicated eigenspace is not an
 * eigenspace of the target.
 */
TransferResult via_hoffman_optimality(const SpectralDecomposition& source, const SpectralDecomposition& target,
                                      const Design& w);

}  // namespace gdesign

#endif
