#ifndef GDESIGN_CUBE_HPP
#define GDESIGN_CUBE_HPP

#include "gdesign/design.hpp"
#include "gdesign/gf2.hpp"
#include "gdesign/graph.hpp"
#include "gdesign/spectral.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gdesign {

/// Distance cube Q_n(d): vertices {0,1}^n as integers (bit i = coordinate
/// i + 1), edges between words at Hamming distance 1..d. Q_n(1) = Q_n.
class CubeGraph {
public:
    static constexpr int kMaxDimension = 20;
    static constexpr int kMaxExplicit = 12;

    /// Throws Error(OutOfSupportedRange) unless 2 <= n <= 20 and 1 <= d <= n.
    explicit CubeGraph(int n, int d = 1);

    int n() const { return n_; }
    int d() const { return d_; }
    std::uint32_t vertex_count() const { return std::uint32_t{1} << n_; }
    std::int64_t degree() const;
    bool adjacent(Word x, Word y) const;

    /// Eigenvalue of L on the weight-i characters:
    /// (1/|S|) sum_{s in S} chi_a(s) - 1 for any a of weight i.
    Rational eigenvalue(int i) const;

    /// Explicit graph, n <= 12. Throws Error(TooLarge).
    Graph to_graph() const;

private:
    int n_;
    int d_;
};

/// chi_a(x) = (-1)^{a.x}
inline int character(Word a, Word x)
{
    return parity(a & x) ? -1 : 1;
}

/// Krawtchouk value sum_{wt(s) = j} chi_a(s) for wt(a) = i.
std::int64_t krawtchouk(int n, int j, int i);

/// Words of weight i in increasing numeric order.
std::vector<Word> words_of_weight(int n, int i);
/// All 2^n words ordered by weight, then numerically.
std::vector<Word> weight_ordered_words(int n);

/// Columns chi_a for wt(a) = i (a in increasing order), rows x = 0 .. 2^n - 1.
IntMatrix character_matrix(int n, int i);

/// Weight-i eigenspace with its integer character basis (n <= 12). The
/// tie_group field is left at 0; it only has meaning inside a decomposition.
Eigenspace cube_eigenspace(const CubeGraph& cube, int i);

/// Exact decomposition of an explicit cube (n <= 12). Weight classes with
/// equal eigenvalue are merged; components lists the merged weights.
SpectralDecomposition cube_decomposition(const CubeGraph& cube);

/// Merged spectrum of a cube without building it: eigenvalues, merged
/// weights and the report shape, in decomposition order.
struct CubeSpectrum {
    std::vector<Rational> eigenvalues;
    std::vector<std::vector<int>> weights;
    SpectrumShape shape;
};

CubeSpectrum cube_spectrum(const CubeGraph& cube);

/// sum_{x in W} chi_a(x) for every a, by a fast Walsh-Hadamard transform.
std::vector<std::int64_t> character_sums(int n, const std::vector<Word>& words);

/// Per-weight verdicts: entry i is true iff W integrates Lambda_i.
std::vector<bool> weight_verdicts(int n, const std::vector<Word>& words);

/**
 * Exact design report on Q_n(d) from character sums. Matches
 * design_report(cube_decomposition(cube), W) for explicit cubes.
 * Throws Error(InvalidDesign) for empty or repeated words and
 * Error(OutOfRange) for words with bits beyond n.
 */
DesignReport cube_design_report(const CubeGraph& cube, const std::vector<Word>& words);

/// Odd n: {0^n, 1^n}. Even n: {e1, e1+e2, 1-e1, 1-e1-e2}. Needs n >= 3.
std::vector<Word> simple_design(int n);

/// Parses '0'/'1' strings of length n. Throws Error(ParseError).
std::vector<Word> parse_words(int n, const std::vector<std::string>& strings);

/// Vertex indices of words, sorted, as a Design on an explicit cube.
Design cube_design(const CubeGraph& cube, const std::vector<Word>& words);

}  // namespace gdesign

#endif
