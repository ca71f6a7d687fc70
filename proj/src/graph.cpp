#include "gdesign/graph.hpp"

#include "gdesign/error.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>

namespace gdesign {

bool Graph::adjacent(int u, int v) const
{
    const auto& nb = neighbours_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<int> Graph::regular_degree() const
{
    int d = degree(0);
    for (int v = 1; v < vertex_count(); ++v)
        if (degree(v) != d)
            return std::nullopt;
    return d;
}

Eigen::MatrixXd Graph::adjacency_matrix() const
{
    const int n = vertex_count();
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (auto [u, v] : edges_) {
        a(u, v) = 1.0;
        a(v, u) = 1.0;
    }
    return a;
}

Eigen::MatrixXd Graph::walk_matrix() const
{
    Eigen::MatrixXd a = adjacency_matrix();
    for (int v = 0; v < vertex_count(); ++v)
        a.col(v) /= static_cast<double>(degree(v));
    return a;
}

Graph build_graph(int vertex_count, std::vector<Edge> edges, std::vector<std::string> labels)
{
    if (vertex_count < 1)
        throw Error(ErrorCode::OutOfRange, "vertex count must be positive");
    if (!labels.empty() && static_cast<int>(labels.size()) != vertex_count)
        throw Error(ErrorCode::OutOfRange, "label count does not match vertex count");

    for (auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
            throw Error(ErrorCode::OutOfRange,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) + ") outside [0," +
                            std::to_string(vertex_count) + ")");
        if (u == v)
            throw Error(ErrorCode::Loop, "loop at vertex " + std::to_string(u));
        if (u > v)
            std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end())
        throw Error(ErrorCode::Duplicate,
                    "edge (" + std::to_string(dup->first) + "," + std::to_string(dup->second) + ") repeated");

    Graph g;
    g.neighbours_.assign(vertex_count, {});
    for (auto [u, v] : edges) {
        g.neighbours_[u].push_back(v);
        g.neighbours_[v].push_back(u);
    }
    for (auto& nb : g.neighbours_)
        std::sort(nb.begin(), nb.end());

    // connectivity; an isolated vertex (including n = 1) also lands here
    std::vector<char> seen(vertex_count, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : g.neighbours_[u])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    if (reached != vertex_count || g.neighbours_[0].empty())
        throw Error(ErrorCode::Disconnected,
                    "only " + std::to_string(reached) + " of " + std::to_string(vertex_count) +
                        " vertices reachable from vertex 0, or vertex 0 is isolated");

    g.edges_ = std::move(edges);
    g.labels_ = std::move(labels);
    return g;
}

Graph complete_graph(int n)
{
    if (n < 2)
        throw Error(ErrorCode::OutOfRange, "complete graph needs at least 2 vertices");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            e.emplace_back(i, j);
    return build_graph(n, std::move(e));
}

Graph complete_bipartite_graph(int m, int n)
{
    if (m < 1 || n < 1)
        throw Error(ErrorCode::OutOfRange, "complete bipartite sides must be nonempty");
    std::vector<Edge> e;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            e.emplace_back(i, m + j);
    return build_graph(m + n, std::move(e));
}

Graph truncated_tetrahedron()
{
    std::vector<Edge> e;
    for (int i = 0; i < 9; ++i)
        e.emplace_back(i, (i + 1) % 9);
    e.insert(e.end(), {{0, 2}, {3, 5}, {6, 8}});
    e.insert(e.end(), {{9, 10}, {10, 11}, {9, 11}});
    e.insert(e.end(), {{9, 1}, {10, 4}, {11, 7}});
    return build_graph(12, std::move(e));
}

Graph petersen_graph()
{
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return build_graph(10, std::move(e));
}

Graph fixture(const FixtureSpec& spec)
{
    auto need = [&](std::size_t count) {
        if (spec.args.size() != count)
            throw Error(ErrorCode::UnknownFixture, "wrong number of fixture arguments");
    };
    switch (spec.kind) {
    case FixtureKind::Complete:
        need(1);
        return complete_graph(spec.args[0]);
    case FixtureKind::CompleteBipartite:
        need(2);
        return complete_bipartite_graph(spec.args[0], spec.args[1]);
    case FixtureKind::TruncatedTetrahedron:
        need(0);
        return truncated_tetrahedron();
    case FixtureKind::Petersen:
        need(0);
        return petersen_graph();
    }
    throw Error(ErrorCode::UnknownFixture, "unknown fixture kind");
}

FixtureSpec parse_fixture(const std::string& text)
{
    auto colon = text.find(':');
    std::string name = text.substr(0, colon);
    std::vector<int> args;
    if (colon != std::string::npos) {
        std::stringstream ss(text.substr(colon + 1));
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                std::size_t used = 0;
                args.push_back(std::stoi(item, &used));
                if (used != item.size())
                    throw std::invalid_argument(item);
            } catch (const std::exception&) {
                throw Error(ErrorCode::UnknownFixture, "bad fixture argument '" + item + "'");
            }
        }
    }
    auto with_arity = [&](FixtureKind kind, std::size_t count) {
        if (args.size() != count)
            throw Error(ErrorCode::UnknownFixture, "fixture '" + name + "' takes " + std::to_string(count) +
                                                       " argument(s)");
        return FixtureSpec{kind, args};
    };
    if (name == "complete")
        return with_arity(FixtureKind::Complete, 1);
    if (name == "complete_bipartite")
        return with_arity(FixtureKind::CompleteBipartite, 2);
    if (name == "truncated_tetrahedron")
        return with_arity(FixtureKind::TruncatedTetrahedron, 0);
    if (name == "petersen")
        return with_arity(FixtureKind::Petersen, 0);
    throw Error(ErrorCode::UnknownFixture, "unknown fixture '" + name + "'");
}

Graph graph_from_json_text(const std::string& text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges") || !doc["n"].is_number_integer() ||
        !doc["edges"].is_array())
        throw Error(ErrorCode::ParseError, "graph document needs integer 'n' and array 'edges'");
    std::vector<Edge> edges;
    for (const auto& e : doc["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw Error(ErrorCode::ParseError, "each edge must be a 2-element integer list");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    std::vector<std::string> labels;
    if (doc.contains("labels"))
        labels = doc["labels"].get<std::vector<std::string>>();
    return build_graph(doc["n"].get<int>(), std::move(edges), std::move(labels));
}

std::string graph_to_json_text(const Graph& g)
{
    nlohmann::json doc;
    doc["n"] = g.vertex_count();
    doc["edges"] = nlohmann::json::array();
    for (auto [u, v] : g.edges())
        doc["edges"].push_back({u, v});
    if (!g.labels().empty())
        doc["labels"] = g.labels();
    return doc.dump();
}

}  // namespace gdesign
