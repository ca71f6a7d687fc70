#ifndef GDESIGN_SPECTRAL_HPP
#define GDESIGN_SPECTRAL_HPP

#include "gdesign/graph.hpp"
#include "gdesign/scalar.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <vector>

namespace gdesign {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Thresholds for the floating path. The exact path ignores them.
struct Tolerance {
    /// Eigenvalues closer than this belong to one eigenspace.
    double eigen_group = 1e-9;
    /// |lambda + 1| values closer than this share a tie-group.
    double tie = 1e-9;
    /// A projected residual is zero when its norm is below residual * sqrt(dim).
    double residual = 1e-8;
};

enum class ArithmeticMode { Exact, Floating };

/// Dense matrix of rationals, row-major. Only used for small exact checks.
struct RationalMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Rational> data;

    RationalMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, Rational(0)) {}
    Rational& operator()(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
    const Rational& operator()(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }
    bool operator==(const RationalMatrix&) const = default;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);

struct Eigenspace {
    /// Eigenvalue of L = AD^-1 - I, in [-2, 0].
    Scalar eigenvalue;
    int dimension = 0;
    /// Orthonormal columns spanning the eigenspace.
    Eigen::MatrixXd basis;
    /// Exact path only: mutually orthogonal integer columns with the same span.
    std::optional<IntMatrix> integer_basis;
    /// Rank of |lambda + 1| among the distinct values, 0 = lowest frequency.
    int tie_group = 0;
    /// Indices of constructor classes merged into this eigenspace: character
    /// weights on cubes, idempotent indices on schemes. Empty on the
    /// generic floating path.
    std::vector<int> components;

    /// Eigenvalue of AD^-1 on this space.
    Scalar walk_eigenvalue() const { return eigenvalue + Scalar(Rational(1)); }
    /// Orthogonal projector basis * basis^T.
    Eigen::MatrixXd projector() const;
};

/**
 * The full eigenspace list of L = AD^-1 - I for a connected graph.
 *
 * Eigenspaces are sorted by tie-group, then by descending dimension, then
 * by descending eigenvalue. Eigenspace::projector() is the orthogonal
 * projector onto the span; for non-regular graphs the eigenspaces are not
 * mutually orthogonal, and spectral_projector() gives the (oblique)
 * projectors that sum to the identity and reconstruct AD^-1.
 */
class SpectralDecomposition {
public:
    const Graph& graph() const { return graph_; }
    const std::vector<Eigenspace>& eigenspaces() const { return eigenspaces_; }
    const Eigenspace& eigenspace(int i) const { return eigenspaces_.at(i); }
    int size() const { return static_cast<int>(eigenspaces_.size()); }
    std::optional<int> regular_degree() const { return regular_degree_; }
    ArithmeticMode mode() const { return mode_; }
    const Tolerance& tolerance() const { return tolerance_; }
    int vertex_count() const { return graph_.vertex_count(); }

    /// Index of the eigenvalue-0 eigenspace.
    int trivial_index() const { return trivial_index_; }
    /// Index of the eigenspace with the least eigenvalue.
    int lowest_index() const;
    /// Index of the eigenspace with the second largest eigenvalue.
    int second_index() const;

    /// Tie-groups in frequency order, each listing eigenspace indices.
    std::vector<std::vector<int>> frequency_order() const;

    Eigen::MatrixXd spectral_projector(int i) const;
    /// Exact projector from the integer basis. Throws Error(NumericalFailure)
    /// on the floating path.
    RationalMatrix exact_projector(int i) const;

    friend class DecompositionBuilder;

private:
    explicit SpectralDecomposition(Graph g) : graph_(std::move(g)) {}

    Graph graph_;
    std::vector<Eigenspace> eigenspaces_;
    std::optional<int> regular_degree_;
    ArithmeticMode mode_ = ArithmeticMode::Floating;
    Tolerance tolerance_;
    int trivial_index_ = 0;
};

/// Floating path: dense symmetric eigensolve of D^-1/2 A D^-1/2, grouping
/// and re-orthonormalization. Throws Error(NumericalFailure, TooLarge).
SpectralDecomposition spectral_decomposition(const Graph& g, const Tolerance& tol = {});

/// One eigenspace handed over by an exact constructor.
struct ExactPart {
    Rational eigenvalue;
    IntMatrix basis;
    std::vector<int> components;
};

/// Exact path. Parts with equal eigenvalue are merged. Every basis column
/// is checked against L exactly and for mutual orthogonality; dimensions
/// must add up to the vertex count.
SpectralDecomposition exact_decomposition(const Graph& g, std::vector<ExactPart> parts);

/// An eigenspace with known (possibly exact) eigenvalue and floating basis.
struct FloatingPart {
    Scalar eigenvalue;
    Eigen::MatrixXd basis;
    std::vector<int> components;
};

/// Floating path from a caller-supplied eigenbasis (scheme idempotents).
/// Residuals of L v = lambda v are checked against the tolerance.
SpectralDecomposition assembled_decomposition(const Graph& g, std::vector<FloatingPart> parts,
                                              const Tolerance& tol = {});

std::vector<std::vector<int>> frequency_order(const SpectralDecomposition& d);

/// Modified Gram-Schmidt on the columns. Throws Error(NumericalFailure) if
/// the columns are (numerically) dependent.
Eigen::MatrixXd orthonormalize(const Eigen::MatrixXd& columns);

}  // namespace gdesign

#endif
