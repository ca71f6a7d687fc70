#ifndef GDESIGN_SCHEMES_HPP
#define GDESIGN_SCHEMES_HPP

#include "gdesign/gf2.hpp"
#include "gdesign/graph.hpp"
#include "gdesign/spectral.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gdesign {

enum class SchemeKind { Hamming, Johnson };

/**
 * A symmetric association scheme stored as a relation-index table, with
 * orthonormal bases for the column spaces of the primitive idempotents
 * J_0 .. J_n and the integer eigenmatrix p_k(i) (eigenvalue of D_k on
 * col(J_i)).
 *
 * Hamming scheme: points are the words of {0,1}^n in numeric order,
 * relation = Hamming distance, col(J_i) spanned by the weight-i characters.
 * Johnson scheme: points are the k-subsets of {1..n} in lexicographic
 * order (stored as bitmasks, bit e-1 for element e), relation i means
 * |A ∩ B| = k - i, and J_i is indexed so that rank J_i = C(n,i) - C(n,i-1).
 */
class AssociationScheme {
public:
    SchemeKind kind() const { return kind_; }
    /// n for both families; k is the block size of a Johnson scheme.
    int n() const { return n_; }
    int k() const { return k_; }
    int point_count() const { return static_cast<int>(points_.size()); }
    int classes() const { return classes_; }

    int relation(int x, int y) const { return relations_[static_cast<std::size_t>(x) * point_count() + y]; }
    Eigen::MatrixXd relation_matrix(int i) const;
    /// Number of points in relation i with a fixed point.
    std::int64_t valency(int i) const { return eigenmatrix_[i][0]; }

    /// Point encodings: words (Hamming) or element bitmasks (Johnson).
    const std::vector<Word>& points() const { return points_; }
    std::string point_label(int x) const;
    /// Index of a point encoding; -1 if absent.
    int point_index(Word encoding) const;

    const Eigen::MatrixXd& idempotent_basis(int i) const { return bases_.at(i); }
    /// Integer orthogonal basis of col(J_i), Hamming schemes only.
    const std::optional<IntMatrix>& integer_basis(int i) const { return integer_bases_.at(i); }
    Eigen::MatrixXd idempotent(int i) const;
    int rank(int i) const { return static_cast<int>(bases_.at(i).cols()); }

    /// p_k(i): eigenvalue of D_k on col(J_i).
    std::int64_t eigenvalue(int k, int i) const { return eigenmatrix_[k][i]; }
    /// c_ijk: for (x,y) in R_k, #{z : (x,z) in R_i, (z,y) in R_j}.
    std::int64_t intersection_number(int i, int j, int k) const;

    friend AssociationScheme hamming_scheme(int n);
    friend AssociationScheme johnson_scheme(int n, int k);

private:
    AssociationScheme() = default;
    void compute_intersection_numbers();

    SchemeKind kind_ = SchemeKind::Hamming;
    int n_ = 0;
    int k_ = 0;
    int classes_ = 0;
    std::vector<Word> points_;
    std::vector<std::uint8_t> relations_;
    std::vector<Eigen::MatrixXd> bases_;
    std::vector<std::optional<IntMatrix>> integer_bases_;
    std::vector<std::vector<std::int64_t>> eigenmatrix_;
    std::vector<std::int64_t> intersections_;
};

inline constexpr int kMaxSchemePoints = 5000;

/// 2 <= n <= 10. Throws Error(TooLarge) for larger n, OutOfSupportedRange below.
AssociationScheme hamming_scheme(int n);
/// 1 <= k <= n/2 and C(n,k) <= 5000. Throws Error(TooLarge, OutOfSupportedRange).
AssociationScheme johnson_scheme(int n, int k);

struct AxiomCheck {
    bool ok = true;
    std::vector<std::string> failures;
};

/// Checks D_0 = I, symmetry, constancy of c_ijk over sampled pairs,
/// commutativity, idempotent orthogonality/completeness, J_0 constant and
/// D_k B_i = p_k(i) B_i.
AxiomCheck verify_axioms(const AssociationScheme& s, int samples_per_relation = 100, unsigned seed = 1);

/// Graph on the points with adjacency sum_{i in I} D_i. Throws
/// Error(EmptyIndexSet) for empty I, Error(OutOfRange) for indices outside 1..n.
Graph union_graph(const AssociationScheme& s, const std::vector<int>& relations);

/// Decomposition of a union graph along the idempotents, with exact
/// eigenvalues sum_{i in I} p_i(j) / deg - 1. Exact basis for Hamming
/// schemes, floating basis for Johnson schemes.
SpectralDecomposition scheme_decomposition(const AssociationScheme& s, const std::vector<int>& relations,
                                           const Tolerance& tol = {});

/// J_i 1_Y = 0 (exact for Hamming schemes, norm < 1e-8 sqrt|X| otherwise).
bool idempotent_annihilates(const AssociationScheme& s, int i, const std::vector<int>& points);

/// Largest t with J_1 1_Y = ... = J_t 1_Y = 0. Throws Error(InvalidDesign)
/// for empty or repeated points, Error(OutOfRange) for bad indices.
int t_design_strength(const AssociationScheme& s, const std::vector<int>& points);

/// Blocks are sorted k-subsets of {1..n}, no repeats.
class BlockFamily {
public:
    /// Throws Error(InvalidDesign) for empty families, mixed block sizes,
    /// repeated elements or blocks; Error(OutOfRange) for elements outside 1..n.
    BlockFamily(int ground_size, std::vector<std::vector<int>> blocks);

    int ground_size() const { return n_; }
    int block_size() const { return k_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    Word mask(std::size_t b) const;

private:
    int n_;
    int k_;
    std::vector<std::vector<int>> blocks_;
};

/// One block per line, space-separated 1-indexed elements; blank lines and
/// lines starting with '#' are skipped. Throws Error(ParseError).
BlockFamily parse_block_family(const std::string& text, int ground_size);

/// lambda if every t-subset of {1..n} lies in exactly lambda blocks.
/// Throws Error(BadTarget) unless 0 <= t <= k.
std::optional<std::int64_t> classical_t_design(const BlockFamily& b, int t);

/// Johnson scheme point indices of the blocks. Throws Error(DimensionMismatch).
std::vector<int> johnson_points(const AssociationScheme& s, const BlockFamily& b);
BlockFamily johnson_blocks(const AssociationScheme& s, const std::vector<int>& points);

}  // namespace gdesign

#endif
