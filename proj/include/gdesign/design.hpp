#ifndef GDESIGN_DESIGN_HPP
#define GDESIGN_DESIGN_HPP

#include "gdesign/scalar.hpp"
#include "gdesign/spectral.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace gdesign {

/// A nonempty vertex subset W with equal quadrature weights 1/|W|.
class Design {
public:
    /// Sorts the vertices. Throws Error(InvalidDesign) when empty or
    /// repeated, Error(OutOfRange) for indices outside [0, vertex_count).
    Design(int vertex_count, std::vector<int> vertices);

    int vertex_count() const { return vertex_count_; }
    int size() const { return static_cast<int>(vertices_.size()); }
    const std::vector<int>& vertices() const { return vertices_; }
    bool contains(int v) const;
    bool is_full() const { return size() == vertex_count_; }
    Eigen::VectorXd indicator() const;

    bool operator==(const Design&) const = default;

private:
    int vertex_count_;
    std::vector<int> vertices_;
};

struct DesignReport {
    /// Integration verdict per eigenspace index.
    std::vector<bool> per_eigenspace;
    /// Length of the longest integrated prefix over orders refining the tie-groups.
    int k = 0;
    int integrated_dimension = 0;
    /// |W| / integrated_dimension; absent when integrated_dimension is 0.
    std::optional<Rational> efficacy;
    bool extremal = false;
    /// The order realizing k: tie-groups in frequency order, integrated
    /// eigenspaces first inside each group.
    std::vector<int> chosen_order;
    int design_size = 0;

    bool operator==(const DesignReport&) const = default;
};

/// Dimensions and tie-groups of a spectrum, which is all report assembly needs.
struct SpectrumShape {
    std::vector<int> dimensions;
    std::vector<int> tie_groups;
    int vertex_count = 0;
    bool regular = false;
};

SpectrumShape shape_of(const SpectralDecomposition& d);

/// Builds k, the chosen order, efficacy and extremality from verdicts.
DesignReport assemble_report(const SpectrumShape& shape, const std::vector<bool>& verdicts, int design_size);

/// Mean of v over W equals mean over V. Floating input uses an absolute
/// tolerance of residual * ||v||. Throws Error(DimensionMismatch).
bool integrates_vector(const SpectralDecomposition& d, const Design& w, const Eigen::VectorXd& v);
/// Exact integer variant: |V| * sum_W v == |W| * sum_V v.
bool integrates_vector(const SpectralDecomposition& d, const Design& w, std::span<const std::int64_t> v);

bool integrates_eigenspace(const SpectralDecomposition& d, const Design& w, int idx);

DesignReport design_report(const SpectralDecomposition& d, const Design& w);

/// r = 1_W - (|W|/|V|) 1 is nonzero and lies in exactly one eigenspace.
/// Throws Error(NotRegular).
bool is_extremal(const SpectralDecomposition& d, const Design& w);

/**
 * Re-bases one eigenspace so that W integrates exactly `target` of the
 * returned orthonormal basis vectors (the integrated ones come first).
 *
 * Uses the pairwise moves phi1 +- phi2 (one fewer integrated vector) and
 * a1 phi1 + a2 phi2, phi1/a1 - phi2/a2 (one more), where
 * a_i = phi_i^T (1/|V| - 1_W/|W|), then re-orthonormalizes with the
 * integrated vectors leading.
 *
 * Throws Error(FullyIntegrated) when W integrates the whole space and
 * target != dim, Error(BadTarget) when target is outside [0, dim - 1].
 */
Eigen::MatrixXd rebase(const Eigen::MatrixXd& basis, const Design& w, int target, double tolerance = 1e-9);

/**
 * Precomputed per-eigenspace sums for evaluating many designs on one
 * decomposition. Exact on the exact path.
 */
class IntegrationKernel {
public:
    explicit IntegrationKernel(const SpectralDecomposition& d);

    /// vertices need not be sorted but must be distinct and in range.
    std::vector<bool> verdicts(std::span<const int> vertices) const;
    bool integrates(int idx, std::span<const int> vertices) const;

private:
    struct Space {
        std::optional<IntMatrix> exact;
        std::vector<std::int64_t> exact_totals;
        Eigen::MatrixXd real;
        Eigen::VectorXd real_totals;
    };
    std::vector<Space> spaces_;
    int vertex_count_;
    double residual_;
};

}  // namespace gdesign

#endif
