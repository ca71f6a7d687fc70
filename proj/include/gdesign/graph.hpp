#ifndef GDESIGN_GRAPH_HPP
#define GDESIGN_GRAPH_HPP

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gdesign {

using Edge = std::pair<int, int>;

/**
 * A finite, simple, undirected, connected graph. Edges are stored
 * normalized (first < second) and sorted; neighbour lists are sorted.
 *
 * Instances only come out of build_graph() or fixture(), both of which
 * validate, so a Graph in hand always satisfies the invariants.
 */
class Graph {
public:
    int vertex_count() const { return static_cast<int>(neighbours_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbours(int v) const { return neighbours_[v]; }
    int degree(int v) const { return static_cast<int>(neighbours_[v].size()); }
    bool adjacent(int u, int v) const;

    /// Present iff every vertex has the same degree.
    std::optional<int> regular_degree() const;

    const std::vector<std::string>& labels() const { return labels_; }

    Eigen::MatrixXd adjacency_matrix() const;
    /// A D^-1, the random-walk operator whose spectrum (shifted by -1) is L's.
    Eigen::MatrixXd walk_matrix() const;

    friend Graph build_graph(int vertex_count, std::vector<Edge> edges, std::vector<std::string> labels);

private:
    Graph() = default;

    std::vector<Edge> edges_;
    std::vector<std::vector<int>> neighbours_;
    std::vector<std::string> labels_;
};

/// Throws Error with OutOfRange, Loop, Duplicate or Disconnected.
Graph build_graph(int vertex_count, std::vector<Edge> edges, std::vector<std::string> labels = {});

enum class FixtureKind { Complete, CompleteBipartite, TruncatedTetrahedron, Petersen };

struct FixtureSpec {
    FixtureKind kind;
    std::vector<int> args;
};

Graph fixture(const FixtureSpec& spec);

/// Parses "complete:5", "complete_bipartite:4,4", "truncated_tetrahedron",
/// "petersen". Throws Error(UnknownFixture).
FixtureSpec parse_fixture(const std::string& text);

Graph complete_graph(int n);
Graph complete_bipartite_graph(int m, int n);

/// Vertices 0-8 are the outer 9-cycle (three triangles a0a1a2, a3a4a5, a6a7a8
/// closed by chords), 9-11 the inner triangle attached to a1, a4, a7.
Graph truncated_tetrahedron();

/// Outer 5-cycle 0-4, spokes i -- i+5, inner pentagram on 5-9.
Graph petersen_graph();

/// Interchange document: {"n": int, "edges": [[u, v], ...]}.
Graph graph_from_json_text(const std::string& text);
std::string graph_to_json_text(const Graph& g);

}  // namespace gdesign

#endif
