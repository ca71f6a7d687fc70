#include "commands.hpp"

#include "gdesign/bounds.hpp"
#include "gdesign/cube.hpp"
#include "gdesign/design.hpp"
#include "gdesign/gf2.hpp"
#include "gdesign/graph.hpp"
#include "gdesign/schemes.hpp"
#include "gdesign/serialize.hpp"
#include "gdesign/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

namespace gdesign::cli {

using nlohmann::json;

namespace {

// ---------------------------------------------------------------- text output

class TextTable {
public:
    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

    std::string str() const
    {
        std::vector<std::size_t> width;
        for (const auto& r : rows_)
            for (std::size_t c = 0; c < r.size(); ++c) {
                if (width.size() <= c)
                    width.push_back(0);
                width[c] = std::max(width[c], r[c].size());
            }
        std::string out;
        for (const auto& r : rows_) {
            std::string line;
            for (std::size_t c = 0; c < r.size(); ++c) {
                line += r[c];
                if (c + 1 < r.size())
                    line += std::string(width[c] - r[c].size() + 2, ' ');
            }
            out += line + "\n";
        }
        return out;
    }

private:
    std::vector<std::vector<std::string>> rows_;
};

std::string yes_no(bool b)
{
    return b ? "yes" : "no";
}

std::string join(const std::vector<int>& v, const std::string& sep)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

std::string join(const std::vector<std::string>& v, const std::string& sep)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? sep : "") + v[i];
    return s;
}

std::string mode_name(ArithmeticMode m)
{
    return m == ArithmeticMode::Exact ? "exact" : "floating";
}

// -------------------------------------------------------------------- parsing

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::ParseError, "cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int parse_int(const std::string& text, const std::string& what)
{
    try {
        std::size_t used = 0;
        int v = std::stoi(text, &used);
        if (used == text.size())
            return v;
    } catch (const std::exception&) {
    }
    throw Error(ErrorCode::ParseError, "bad " + what + " '" + text + "'");
}

std::vector<std::string> split(const std::string& text, const std::string& separators)
{
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (separators.find(ch) != std::string::npos) {
            if (!cur.empty())
                out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty())
        out.push_back(cur);
    return out;
}

Tolerance tolerance_from(const GraphOptions& o)
{
    Tolerance t;
    if (o.tolerance) {
        if (!(*o.tolerance > 0.0) || !std::isfinite(*o.tolerance))
            throw Error(ErrorCode::ParseError, "tolerance must be a positive number");
        t.eigen_group = *o.tolerance;
        t.tie = *o.tolerance;
    }
    return t;
}

// ------------------------------------------------------------- graph sources

struct Source {
    std::string name;
    json inputs;
    std::optional<CubeGraph> cube;
    std::optional<SpectralDecomposition> decomposition;
    std::vector<std::string> labels;

    int vertex_count() const
    {
        return cube ? static_cast<int>(cube->vertex_count()) : decomposition->vertex_count();
    }

    std::string label(int v) const
    {
        if (cube)
            return word_to_string(static_cast<Word>(v), cube->n());
        if (!labels.empty())
            return labels[v];
        return std::to_string(v);
    }

    std::vector<std::string> labels_of(const std::vector<int>& vs) const
    {
        std::vector<std::string> out;
        for (int v : vs)
            out.push_back(label(v));
        return out;
    }

    std::string arithmetic() const
    {
        return decomposition ? mode_name(decomposition->mode()) : "exact";
    }
};

std::string cube_name(int n, int d)
{
    return "Q_" + std::to_string(n) + (d == 1 ? "" : "(" + std::to_string(d) + ")");
}

Source johnson_source(const std::string& args, const Tolerance& tol)
{
    auto parts = split(args, ",");
    if (parts.size() != 3)
        throw Error(ErrorCode::UnknownFixture, "johnson takes N,K,I with I like 1+2");
    const int n = parse_int(parts[0], "johnson n");
    const int k = parse_int(parts[1], "johnson k");
    std::vector<int> relations;
    for (const auto& r : split(parts[2], "+"))
        relations.push_back(parse_int(r, "relation index"));
    const auto scheme = johnson_scheme(n, k);
    Source s;
    s.decomposition.emplace(scheme_decomposition(scheme, relations, tol));
    for (int x = 0; x < scheme.point_count(); ++x)
        s.labels.push_back(scheme.point_label(x));
    return s;
}

Source load_source(const GraphOptions& o)
{
    const int given = int(o.cube.has_value()) + int(o.fixture.has_value()) + int(o.graph_file.has_value());
    if (given != 1)
        throw Error(ErrorCode::ParseError, "give exactly one of --cube, --fixture, --graph");
    const Tolerance tol = tolerance_from(o);
    Source s;
    if (o.cube) {
        CubeGraph cube(*o.cube, o.dist);
        s.name = cube_name(cube.n(), cube.d());
        s.inputs = {{"cube", cube.n()}, {"dist", cube.d()}};
        if (cube.n() <= CubeGraph::kMaxExplicit)
            s.decomposition.emplace(cube_decomposition(cube));
        s.cube = cube;
        return s;
    }
    if (o.fixture) {
        const std::string& text = *o.fixture;
        if (text.rfind("johnson:", 0) == 0)
            s = johnson_source(text.substr(8), tol);
        else {
            Graph g = fixture(parse_fixture(text));
            s.labels = g.labels();
            s.decomposition.emplace(spectral_decomposition(g, tol));
        }
        s.name = text;
        s.inputs = {{"fixture", text}};
    } else {
        Graph g = graph_from_json_text(read_file(*o.graph_file));
        s.labels = g.labels();
        s.decomposition.emplace(spectral_decomposition(g, tol));
        s.name = *o.graph_file;
        s.inputs = {{"graph", *o.graph_file}};
    }
    if (o.tolerance)
        s.inputs["tolerance"] = *o.tolerance;
    return s;
}

// ------------------------------------------------------------ design sources

BinaryLinearCode parse_code(const std::string& spec)
{
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw Error(ErrorCode::ParseError, "bad code spec '" + spec + "'");
    const std::string head = spec.substr(0, colon);
    const std::string rest = spec.substr(colon + 1);
    if (head == "hamming")
        return hamming(parse_int(rest, "Hamming parameter"));
    if (head == "lift")
        return lift(parse_code(rest));
    if (head == "double_lift")
        return double_lift(parse_code(rest));
    if (head == "project")
        return project(parse_code(rest));
    if (head == "dual")
        return dual(parse_code(rest));
    if (head == "file") {
        json doc;
        try {
            doc = json::parse(read_file(rest));
        } catch (const json::exception& e) {
            throw Error(ErrorCode::ParseError, e.what());
        }
        return code_from_json(doc);
    }
    throw Error(ErrorCode::ParseError, "unknown code constructor '" + head + "'");
}

int parse_vertex(const Source& s, const std::string& token)
{
    if (s.cube && static_cast<int>(token.size()) == s.cube->n() &&
        token.find_first_not_of("01") == std::string::npos)
        return static_cast<int>(word_from_string(token));
    try {
        std::size_t used = 0;
        long long v = std::stoll(token, &used);
        if (used == token.size()) {
            if (v < 0 || v >= s.vertex_count())
                throw Error(ErrorCode::OutOfRange, "vertex " + token + " outside the graph");
            return static_cast<int>(v);
        }
    } catch (const std::logic_error&) {
    }
    throw Error(ErrorCode::ParseError, "bad vertex '" + token + "'");
}

std::vector<int> parse_design(const Source& s, const std::string& spec)
{
    std::error_code ec;
    const std::string text = std::filesystem::is_regular_file(spec, ec) ? read_file(spec) : spec;
    std::vector<std::string> tokens;
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[') {
        json doc;
        try {
            doc = json::parse(text);
        } catch (const json::exception& e) {
            throw Error(ErrorCode::ParseError, e.what());
        }
        for (const auto& item : doc) {
            if (item.is_string())
                tokens.push_back(item.get<std::string>());
            else if (item.is_number_integer())
                tokens.push_back(std::to_string(item.get<long long>()));
            else
                throw Error(ErrorCode::ParseError, "design entries must be integers or words");
        }
    } else {
        tokens = split(text, ", \t\r\n");
    }
    std::vector<int> vertices;
    for (const auto& t : tokens)
        vertices.push_back(parse_vertex(s, t));
    return vertices;
}

bool cube_stable(const CubeGraph& cube, const std::vector<Word>& words)
{
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            const int w = weight(words[i] ^ words[j]);
            if (w >= 1 && w <= cube.d())
                return false;
        }
    return true;
}

std::vector<Word> as_words(const std::vector<int>& vs)
{
    return {vs.begin(), vs.end()};
}

// ---------------------------------------------------------------- documents

json document(const std::string& command, const Source& s)
{
    json doc;
    doc["command"] = command;
    doc["inputs"] = s.inputs;
    doc["arithmetic"] = s.arithmetic();
    return doc;
}

SpectrumSummary summary_of(const Source& s)
{
    if (s.decomposition)
        return summarize(*s.decomposition);
    return summarize(*s.cube, cube_spectrum(*s.cube));
}

std::string components_cell(const SpectrumEntry& e)
{
    return e.components.empty() ? "-" : join(e.components, "+");
}

}  // namespace

int exit_code_for(ErrorCode code)
{
    switch (code) {
    case ErrorCode::TooLarge: return kExitResource;
    case ErrorCode::Mismatch: return kExitMismatch;
    default: return kExitUsage;
    }
}

std::string render(const Outcome& outcome, Format format)
{
    if (format == Format::Structured)
        return outcome.document.dump(2) + "\n";
    return outcome.table;
}

// ------------------------------------------------------------------ spectrum

Outcome cmd_spectrum(const GraphOptions& graph)
{
    const Source s = load_source(graph);
    const SpectrumSummary summary = summary_of(s);

    std::vector<std::vector<int>> order;
    for (std::size_t i = 0; i < summary.entries.size(); ++i) {
        const int g = summary.entries[i].tie_group;
        if (static_cast<int>(order.size()) <= g)
            order.resize(g + 1);
        order[g].push_back(static_cast<int>(i));
    }

    Outcome out;
    out.document = document("spectrum", s);
    out.document["results"] = {{"graph", s.name}, {"spectrum", summary}, {"frequency_order", order}};

    TextTable t;
    t.add({"index", "L", "AD^-1", "dim", "tie", "classes"});
    for (std::size_t i = 0; i < summary.entries.size(); ++i) {
        const auto& e = summary.entries[i];
        t.add({std::to_string(i), e.eigenvalue.to_string(), e.walk_eigenvalue.to_string(),
               std::to_string(e.dimension), std::to_string(e.tie_group), components_cell(e)});
    }
    out.table = "graph " + s.name + "  (" + std::to_string(summary.vertex_count) + " vertices, " +
                s.arithmetic() + ")\n" + t.str();
    return out;
}

// -------------------------------------------------------------------- verify

Outcome cmd_verify(const GraphOptions& graph, const DesignOptions& design)
{
    if (design.code.has_value() == design.design.has_value())
        throw Error(ErrorCode::ParseError, "give exactly one of --code, --design");
    const Source s = load_source(graph);

    std::vector<int> vertices;
    std::optional<BinaryLinearCode> code;
    json design_input;
    if (design.code) {
        if (!s.cube)
            throw Error(ErrorCode::ParseError, "--code needs --cube");
        code = parse_code(*design.code);
        if (code->length() != s.cube->n())
            throw Error(ErrorCode::DimensionMismatch, "code length " + std::to_string(code->length()) +
                                                          " does not match cube dimension " +
                                                          std::to_string(s.cube->n()));
        for (Word w : code->codewords())
            vertices.push_back(static_cast<int>(w));
        design_input = {{"code", *design.code}};
    } else {
        vertices = parse_design(s, *design.design);
        design_input = {{"design", *design.design}};
    }

    DesignReport report;
    bool stable = false;
    json certificates = json::array();
    if (s.decomposition) {
        const Design w(s.vertex_count(), vertices);
        vertices = w.vertices();
        report = design_report(*s.decomposition, w);
        stable = s.cube ? cube_stable(*s.cube, as_words(vertices)) : is_stable_set(s.decomposition->graph(), w);
        if (s.decomposition->regular_degree() && !w.is_full()) {
            if (stable)
                certificates.push_back(hoffman_certificate(*s.decomposition, w));
            certificates.push_back(cheeger_certificate(*s.decomposition, w));
        }
    } else {
        auto words = as_words(vertices);
        report = cube_design_report(*s.cube, words);
        std::sort(vertices.begin(), vertices.end());
        stable = cube_stable(*s.cube, words);
    }
    const SpectrumSummary summary = summary_of(s);

    std::vector<int> failed;
    for (std::size_t i = 0; i < report.per_eigenspace.size(); ++i)
        if (!report.per_eigenspace[i])
            failed.push_back(static_cast<int>(i));

    Outcome out;
    out.document = document("verify", s);
    out.document["inputs"].update(design_input);
    json results = {{"graph", s.name},
                    {"design", vertices},
                    {"labels", s.labels_of(vertices)},
                    {"report", report},
                    {"extremal", report.extremal},
                    {"stable", stable},
                    {"unintegrated", failed},
                    {"spectrum", summary},
                    {"certificates", certificates}};
    if (code)
        results["code"] = {{"length", code->length()},
                           {"dimension", code->dimension()},
                           {"distance", code->distance() ? json(*code->distance()) : json(nullptr)},
                           {"check_matrix", code->check_matrix().to_strings()}};
    out.document["results"] = std::move(results);

    TextTable t;
    t.add({"index", "L", "dim", "classes", "integrated"});
    for (std::size_t i = 0; i < summary.entries.size(); ++i) {
        const auto& e = summary.entries[i];
        t.add({std::to_string(i), e.eigenvalue.to_string(), std::to_string(e.dimension), components_cell(e),
               yes_no(report.per_eigenspace[i])});
    }
    TextTable facts;
    facts.add({"design size", std::to_string(report.design_size)});
    facts.add({"k", std::to_string(report.k)});
    facts.add({"integrated dimension", std::to_string(report.integrated_dimension)});
    facts.add({"efficacy", report.efficacy ? to_string(*report.efficacy) : "none"});
    facts.add({"extremal", report.extremal ? "true" : "false"});
    facts.add({"stable", stable ? "true" : "false"});
    for (const auto& c : certificates)
        facts.add({c["kind"].get<std::string>() + " bound",
                   c["bound"].get<std::string>() + (c["attained"].get<bool>() ? " (attained)" : "")});
    out.table = "graph " + s.name + "  (" + s.arithmetic() + ")\n" + t.str() + facts.str();
    return out;
}

// -------------------------------------------------------------------- search

Outcome cmd_search(const GraphOptions& graph, std::optional<int> max_size)
{
    const Source s = load_source(graph);
    if (!s.decomposition)
        throw Error(ErrorCode::TooLarge, "search needs an explicit graph; cube dimension is capped at " +
                                             std::to_string(CubeGraph::kMaxExplicit));
    const int limit = max_size.value_or(s.vertex_count());
    const SearchResult r = exhaustive_design_search(*s.decomposition, limit);

    Outcome out;
    out.document = document("search", s);
    out.document["inputs"]["max_size"] = limit;
    json labelled = json::array();
    for (const auto& w : r.witnesses)
        labelled.push_back(s.labels_of(w));
    out.document["results"] = {{"graph", s.name}, {"search", r}, {"witness_labels", labelled}};

    TextTable facts;
    facts.add({"best efficacy", r.best_efficacy ? to_string(*r.best_efficacy) : "none"});
    facts.add({"witnesses", std::to_string(r.witnesses.size())});
    facts.add({"subsets examined", std::to_string(r.subsets_examined)});
    facts.add({"exhaustive", r.exhaustive ? "true" : "false"});
    std::string text = "graph " + s.name + "  (" + s.arithmetic() + ", sizes 1.." + std::to_string(limit) + ")\n" +
                       facts.str();
    constexpr std::size_t kShown = 50;
    for (std::size_t i = 0; i < r.witnesses.size() && i < kShown; ++i)
        text += "  {" + join(s.labels_of(r.witnesses[i]), ", ") + "}\n";
    if (r.witnesses.size() > kShown)
        text += "  ... " + std::to_string(r.witnesses.size() - kShown) + " more\n";
    out.table = text;
    return out;
}

// ----------------------------------------------------------------- reproduce

namespace {

struct Cell {
    std::string row;
    std::string column;
    std::string expected;
    std::string actual;
    /// False for cells the reference table leaves open.
    bool asserted = true;
    bool ok = true;
};

Cell exact_cell(std::string row, std::string column, std::string expected, std::string actual)
{
    Cell c{std::move(row), std::move(column), std::move(expected), std::move(actual)};
    c.ok = c.expected == c.actual;
    return c;
}

Cell rational_cell(std::string row, std::string column, const std::string& expected,
                   const std::optional<Rational>& actual)
{
    Cell c{std::move(row), std::move(column), expected, actual ? to_string(*actual) : "none"};
    c.ok = actual && *actual == parse_rational(expected);
    return c;
}

Cell numeric_cell(std::string row, std::string column, const std::string& expected, const Scalar& actual,
                  double tolerance)
{
    Cell c{std::move(row), std::move(column), expected, actual.to_string()};
    c.ok = std::abs(actual.value - to_double(parse_rational(expected))) < tolerance;
    return c;
}

Outcome finish(const std::string& target, const std::vector<Cell>& cells)
{
    int mismatches = 0;
    json rows = json::array();
    TextTable t;
    t.add({"row", "column", "expected", "actual", "status"});
    for (const auto& c : cells) {
        const std::string status = !c.asserted ? "reported" : c.ok ? "match" : "MISMATCH";
        if (c.asserted && !c.ok)
            ++mismatches;
        rows.push_back({{"row", c.row},
                        {"column", c.column},
                        {"expected", c.expected},
                        {"actual", c.actual},
                        {"status", status == "MISMATCH" ? "mismatch" : status}});
        t.add({c.row, c.column, c.expected, c.actual, status});
    }
    Outcome out;
    out.document["command"] = "reproduce";
    out.document["inputs"] = {{"target", target}};
    out.document["arithmetic"] = target == "table3" ? "floating" : "exact";
    out.document["results"] = {{"target", target}, {"cells", rows}, {"mismatches", mismatches}};
    out.exit_code = mismatches ? kExitMismatch : kExitOk;
    out.table = t.str() + (mismatches ? std::to_string(mismatches) + " mismatch(es)\n" : "all cells match\n");
    return out;
}

/// Subset efficacy on Q_n(d) by characters, valid for every supported n.
std::optional<Rational> cube_efficacy(int n, const std::vector<Word>& words, int d = 1)
{
    return cube_design_report(CubeGraph(n, d), words).efficacy;
}

std::vector<Word> half_cube(int n)
{
    std::vector<Word> w;
    for (Word x = 0; x < (Word{1} << n); ++x)
        if (!(x & 1U))
            w.push_back(x);
    return w;
}

std::vector<int> johnson_star(const AssociationScheme& s)
{
    std::vector<int> y;
    for (int x = 0; x < s.point_count(); ++x)
        if (s.points()[x] & 1U)
            y.push_back(x);
    return y;
}

std::vector<Cell> table2_cells()
{
    // AD^-1 eigenvalue per weight class on Q_3 and Q_3(2); dimensions 1, 3, 3, 1.
    const std::vector<std::string> dims = {"1", "3", "3", "1"};
    const std::vector<std::pair<int, std::vector<std::string>>> columns = {
        {1, {"1", "1/3", "-1/3", "-1"}},
        {2, {"1", "0", "-1/3", "0"}},
    };
    std::vector<Cell> cells;
    for (int i = 0; i < 4; ++i)
        cells.push_back(exact_cell("Lambda_" + std::to_string(i), "dim", dims[i],
                                   std::to_string(words_of_weight(3, i).size())));
    for (const auto& [d, expected] : columns) {
        const auto dec = cube_decomposition(CubeGraph(3, d));
        for (int i = 0; i < 4; ++i) {
            std::string actual = "missing";
            for (const auto& e : dec.eigenspaces())
                if (std::find(e.components.begin(), e.components.end(), i) != e.components.end())
                    actual = e.walk_eigenvalue().to_string();
            cells.push_back(exact_cell("Lambda_" + std::to_string(i), cube_name(3, d), expected[i], actual));
        }
    }
    return cells;
}

std::vector<Cell> table3_cells()
{
    const std::vector<std::string> dims = {"1", "4", "5"};
    const std::vector<std::pair<int, std::vector<std::string>>> columns = {
        {1, {"0", "-5/6", "-4/3"}},
        {2, {"0", "-5/3", "-2/3"}},
    };
    const auto scheme = johnson_scheme(5, 2);
    std::vector<Cell> cells;
    for (const auto& [relation, expected] : columns) {
        const auto dec = scheme_decomposition(scheme, {relation});
        const std::string graph = "G_" + std::to_string(relation);
        for (int i = 0; i < 3; ++i) {
            const std::string row = "col(J_" + std::to_string(i) + ")";
            const Eigenspace* found = nullptr;
            for (const auto& e : dec.eigenspaces())
                if (std::find(e.components.begin(), e.components.end(), i) != e.components.end())
                    found = &e;
            if (!found) {
                cells.push_back(exact_cell(row, graph, expected[i], "missing"));
                continue;
            }
            cells.push_back(numeric_cell(row, graph, expected[i], found->eigenvalue, 1e-9));
            if (relation == 1)
                cells.push_back(exact_cell(row, "dim", dims[i], std::to_string(found->dimension)));
        }
    }
    return cells;
}

struct Table1Row {
    std::string name;
    std::string k;
    std::string t;
    std::string extremal;
    std::string optimal;
    std::string stable;
};

struct Table1Actual {
    DesignReport report;
    std::optional<int> t;
    bool stable = false;
    std::optional<bool> optimal;
};

constexpr int kOptimalitySearchLimit = 16;

std::optional<bool> optimal_by_search(const SpectralDecomposition& d, const DesignReport& r)
{
    if (d.vertex_count() > kOptimalitySearchLimit)
        return std::nullopt;
    const auto best = exhaustive_design_search(d, d.vertex_count());
    return r.efficacy && best.best_efficacy && *r.efficacy == *best.best_efficacy;
}

Table1Actual explicit_row(const SpectralDecomposition& d, const std::vector<int>& vertices, std::optional<int> t)
{
    const Design w(d.vertex_count(), vertices);
    Table1Actual a;
    a.report = design_report(d, w);
    a.t = t;
    a.stable = is_stable_set(d.graph(), w);
    a.optimal = optimal_by_search(d, a.report);
    return a;
}

Table1Actual cube_row(int n, const std::vector<Word>& words)
{
    const CubeGraph cube(n);
    std::vector<int> points(words.begin(), words.end());
    if ((1 << n) <= kOptimalitySearchLimit) {
        const auto dec = cube_decomposition(cube);
        return explicit_row(dec, points, t_design_strength(hamming_scheme(n), points));
    }
    Table1Actual a;
    a.report = cube_design_report(cube, words);
    a.t = t_design_strength(hamming_scheme(n), points);
    a.stable = cube_stable(cube, words);
    return a;
}

std::vector<Cell> table1_cells()
{
    std::vector<std::pair<Table1Row, Table1Actual>> rows;
    {
        const auto dec = spectral_decomposition(complete_graph(5));
        rows.push_back({{"K_5, {1}", "1", "N/A", "yes", "yes", "yes"}, explicit_row(dec, {0}, std::nullopt)});
    }
    rows.push_back({{"Q_7, H_3", "7", "3", "yes", "?", "yes"}, cube_row(7, hamming(3).codewords())});
    rows.push_back({{"Q_6, pi(H_3)", "5", "2", "no", "?", "yes"}, cube_row(6, project(hamming(3)).codewords())});
    rows.push_back({{"Q_4, H_2'", "4", "1", "yes", "yes", "no"}, cube_row(4, lift(hamming(2)).codewords())});
    rows.push_back({{"Q_4, {x: x_1 = 0}", "3", "no", "yes", "no", "no"}, cube_row(4, half_cube(4))});
    {
        const auto scheme = johnson_scheme(5, 2);
        const auto y = johnson_star(scheme);
        const int t = t_design_strength(scheme, y);
        rows.push_back({{"KG(5,2), Y", "1", "no", "yes", "no", "yes"},
                        explicit_row(scheme_decomposition(scheme, {2}), y, t)});
        rows.push_back({{"KG(5,2)^C, Y", "2", "no", "yes", "yes", "no"},
                        explicit_row(scheme_decomposition(scheme, {1}), y, t)});
    }

    std::vector<Cell> cells;
    for (const auto& [expected, actual] : rows) {
        const std::string t = !actual.t ? "N/A" : *actual.t == 0 ? "no" : std::to_string(*actual.t);
        cells.push_back(exact_cell(expected.name, "k-design", expected.k, std::to_string(actual.report.k)));
        cells.push_back(exact_cell(expected.name, "t-design", expected.t, t));
        cells.push_back(exact_cell(expected.name, "extremal", expected.extremal, yes_no(actual.report.extremal)));
        if (expected.optimal == "?") {
            Cell c{expected.name, "optimal", "unknown", actual.optimal ? yes_no(*actual.optimal) : "unknown"};
            c.asserted = false;
            cells.push_back(c);
        } else {
            cells.push_back(exact_cell(expected.name, "optimal", expected.optimal,
                                       actual.optimal ? yes_no(*actual.optimal) : "unknown"));
        }
        cells.push_back(exact_cell(expected.name, "stable", expected.stable, yes_no(actual.stable)));
    }
    return cells;
}

std::vector<Cell> efficacy_cells()
{
    std::vector<Cell> cells;
    auto add = [&](const std::string& row, const std::string& expected, const std::optional<Rational>& actual) {
        cells.push_back(rational_cell(row, "efficacy", expected, actual));
    };
    add("Q_3, H_2", "2/5", cube_efficacy(3, hamming(2).codewords()));
    add("Q_4, H_2'", "4/10", cube_efficacy(4, lift(hamming(2)).codewords()));
    add("Q_5, H_2''", "8/22", cube_efficacy(5, double_lift(hamming(2)).codewords()));
    add("Q_7, H_3", "16/93", cube_efficacy(7, hamming(3).codewords()));
    add("Q_8, H_3'", "32/186", cube_efficacy(8, lift(hamming(3)).codewords()));
    add("Q_9, H_3''", "64/386", cube_efficacy(9, double_lift(hamming(3)).codewords()));
    add("Q_6, pi(H_3)", "8/29", cube_efficacy(6, project(hamming(3)).codewords()));
    // best single parity check on Q_7: a check word of weight ceil(7/2)
    add("Q_7, check 1111000", "64/93",
        cube_efficacy(7, code_from_check_matrix(BinaryMatrix::from_strings({"1111000"})).codewords()));
    add("Q_5, {0, 1}", "2/7", cube_efficacy(5, simple_design(5)));
    add("Q_4, {x: x_1 = 0}", "8/6", cube_efficacy(4, half_cube(4)));
    {
        const auto dec = spectral_decomposition(truncated_tetrahedron());
        add("truncated tetrahedron, red", "4/10", design_report(dec, Design(12, {2, 3, 7, 11})).efficacy);
    }
    {
        const auto scheme = johnson_scheme(5, 2);
        const auto dec = scheme_decomposition(scheme, {1});
        add("KG(5,2)^C, Y", "4/5", design_report(dec, Design(scheme.point_count(), johnson_star(scheme))).efficacy);
    }
    return cells;
}

}  // namespace

Outcome cmd_reproduce(const std::string& target)
{
    if (target == "table1")
        return finish(target, table1_cells());
    if (target == "table2")
        return finish(target, table2_cells());
    if (target == "table3")
        return finish(target, table3_cells());
    if (target == "efficacies")
        return finish(target, efficacy_cells());
    throw Error(ErrorCode::ParseError, "unknown reproduce target '" + target + "'");
}

}  // namespace gdesign::cli
