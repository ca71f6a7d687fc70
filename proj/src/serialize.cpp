#include "gdesign/serialize.hpp"

#include "gdesign/error.hpp"

#include <string>

namespace gdesign {

using nlohmann::json;

SpectrumSummary summarize(const SpectralDecomposition& d)
{
    SpectrumSummary s;
    s.mode = d.mode();
    s.vertex_count = d.vertex_count();
    s.regular_degree = d.regular_degree();
    for (const auto& e : d.eigenspaces())
        s.entries.push_back({e.eigenvalue, e.walk_eigenvalue(), e.dimension, e.tie_group, e.components});
    return s;
}

SpectrumSummary summarize(const CubeGraph& cube, const CubeSpectrum& spectrum)
{
    SpectrumSummary s;
    s.mode = ArithmeticMode::Exact;
    s.vertex_count = static_cast<int>(cube.vertex_count());
    s.regular_degree = static_cast<int>(cube.degree());
    for (std::size_t i = 0; i < spectrum.eigenvalues.size(); ++i)
        s.entries.push_back({Scalar(spectrum.eigenvalues[i]), Scalar(spectrum.eigenvalues[i] + 1),
                             spectrum.shape.dimensions[i],
                             spectrum.shape.tie_groups[i], spectrum.weights[i]});
    return s;
}

void to_json(json& j, const Scalar& s)
{
    j = s.to_string();
}

void from_json(const json& j, Scalar& s)
{
    const auto text = j.get<std::string>();
    const bool decimal = text.find_first_of(".eEn") != std::string::npos;
    if (!decimal) {
        s = Scalar(parse_rational(text));
        return;
    }
    try {
        s = Scalar(std::stod(text));
    } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "bad decimal '" + text + "'");
    }
}

namespace {

std::string mode_name(ArithmeticMode m)
{
    return m == ArithmeticMode::Exact ? "exact" : "floating";
}

ArithmeticMode mode_from(const std::string& s)
{
    if (s == "exact")
        return ArithmeticMode::Exact;
    if (s == "floating")
        return ArithmeticMode::Floating;
    throw Error(ErrorCode::ParseError, "unknown arithmetic '" + s + "'");
}

json optional_rational(const std::optional<Rational>& r)
{
    return r ? json(to_string(*r)) : json(nullptr);
}

std::optional<Rational> read_optional_rational(const json& j)
{
    if (j.is_null())
        return std::nullopt;
    return parse_rational(j.get<std::string>());
}

}  // namespace

void to_json(json& j, const SpectrumSummary& s)
{
    j = json::object();
    j["arithmetic"] = mode_name(s.mode);
    j["vertex_count"] = s.vertex_count;
    j["regular_degree"] = s.regular_degree ? json(*s.regular_degree) : json(nullptr);
    j["eigenspaces"] = json::array();
    for (const auto& e : s.entries) {
        json row;
        row["eigenvalue"] = e.eigenvalue;
        row["walk_eigenvalue"] = e.walk_eigenvalue;
        row["dimension"] = e.dimension;
        row["tie_group"] = e.tie_group;
        row["components"] = e.components;
        j["eigenspaces"].push_back(std::move(row));
    }
}

void from_json(const json& j, SpectrumSummary& s)
{
    s.mode = mode_from(j.at("arithmetic").get<std::string>());
    s.vertex_count = j.at("vertex_count").get<int>();
    s.regular_degree.reset();
    if (!j.at("regular_degree").is_null())
        s.regular_degree = j.at("regular_degree").get<int>();
    s.entries.clear();
    for (const auto& row : j.at("eigenspaces"))
        s.entries.push_back({row.at("eigenvalue").get<Scalar>(), row.at("walk_eigenvalue").get<Scalar>(),
                             row.at("dimension").get<int>(),
                             row.at("tie_group").get<int>(), row.at("components").get<std::vector<int>>()});
}

void to_json(json& j, const DesignReport& r)
{
    j = json::object();
    j["design_size"] = r.design_size;
    j["k"] = r.k;
    j["integrated_dimension"] = r.integrated_dimension;
    j["efficacy"] = optional_rational(r.efficacy);
    j["extremal"] = r.extremal;
    j["per_eigenspace"] = r.per_eigenspace;
    j["chosen_order"] = r.chosen_order;
}

void from_json(const json& j, DesignReport& r)
{
    r.design_size = j.at("design_size").get<int>();
    r.k = j.at("k").get<int>();
    r.integrated_dimension = j.at("integrated_dimension").get<int>();
    r.efficacy = read_optional_rational(j.at("efficacy"));
    r.extremal = j.at("extremal").get<bool>();
    r.per_eigenspace = j.at("per_eigenspace").get<std::vector<bool>>();
    r.chosen_order = j.at("chosen_order").get<std::vector<int>>();
}

void to_json(json& j, const SearchResult& r)
{
    j = json::object();
    j["best_efficacy"] = optional_rational(r.best_efficacy);
    j["witnesses"] = r.witnesses;
    j["min_size"] = r.min_size;
    j["max_size"] = r.max_size;
    j["exhaustive"] = r.exhaustive;
    j["subsets_examined"] = r.subsets_examined;
    j["subsets_integrating_nontrivial"] = r.subsets_integrating_nontrivial;
}

void from_json(const json& j, SearchResult& r)
{
    r.best_efficacy = read_optional_rational(j.at("best_efficacy"));
    r.witnesses = j.at("witnesses").get<std::vector<std::vector<int>>>();
    r.min_size = j.at("min_size").get<int>();
    r.max_size = j.at("max_size").get<int>();
    r.exhaustive = j.at("exhaustive").get<bool>();
    r.subsets_examined = j.at("subsets_examined").get<std::int64_t>();
    r.subsets_integrating_nontrivial = j.at("subsets_integrating_nontrivial").get<std::int64_t>();
}

void to_json(json& j, const BoundCertificate& c)
{
    j = json::object();
    j["kind"] = c.kind == BoundKind::Hoffman ? "hoffman" : "cheeger";
    j["bound"] = c.bound;
    j["observed"] = c.observed;
    j["subset"] = c.subset;
    j["attained"] = c.attained;
    j["implicated"] = c.implicated;
    j["implicated_integrated"] = c.implicated_integrated;
}

void from_json(const json& j, BoundCertificate& c)
{
    const auto kind = j.at("kind").get<std::string>();
    if (kind != "hoffman" && kind != "cheeger")
        throw Error(ErrorCode::ParseError, "unknown bound kind '" + kind + "'");
    c.kind = kind == "hoffman" ? BoundKind::Hoffman : BoundKind::Cheeger;
    c.bound = j.at("bound").get<Scalar>();
    c.observed = j.at("observed").get<Scalar>();
    c.subset = j.at("subset").get<std::vector<int>>();
    c.attained = j.at("attained").get<bool>();
    c.implicated = j.at("implicated").get<int>();
    c.implicated_integrated = j.at("implicated_integrated").get<bool>();
}

void to_json(json& j, const StableSetResult& r)
{
    j = json::object();
    j["alpha"] = r.alpha;
    j["witnesses"] = r.witnesses;
    j["complete"] = r.complete;
}

void from_json(const json& j, StableSetResult& r)
{
    r.alpha = j.at("alpha").get<int>();
    r.witnesses = j.at("witnesses").get<std::vector<std::vector<int>>>();
    r.complete = j.at("complete").get<bool>();
}

void to_json(json& j, const BinaryLinearCode& c)
{
    j = json::object();
    j["length"] = c.length();
    j["dimension"] = c.dimension();
    j["distance"] = c.distance() ? json(*c.distance()) : json(nullptr);
    j["check_matrix"] = c.check_matrix().to_strings();
    j["codewords"] = c.codeword_strings();
}

BinaryLinearCode code_from_json(const json& j)
{
    std::vector<std::string> rows;
    try {
        const json& m = j.is_array() ? j : j.at("check_matrix");
        rows = m.get<std::vector<std::string>>();
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("code document: ") + e.what());
    }
    return code_from_check_matrix(BinaryMatrix::from_strings(rows));
}

}  // namespace gdesign
