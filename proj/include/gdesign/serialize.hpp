#ifndef GDESIGN_SERIALIZE_HPP
#define GDESIGN_SERIALIZE_HPP

#include "gdesign/bounds.hpp"
#include "gdesign/cube.hpp"
#include "gdesign/design.hpp"
#include "gdesign/gf2.hpp"
#include "gdesign/scalar.hpp"
#include "gdesign/spectral.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <vector>

namespace gdesign {

/// What a spectrum document records about one eigenspace.
struct SpectrumEntry {
    /// Eigenvalue of L, and of AD^-1 (kept separately so both printed
    /// values survive a round trip unchanged).
    Scalar eigenvalue;
    Scalar walk_eigenvalue;
    int dimension = 0;
    int tie_group = 0;
    std::vector<int> components;
};

struct SpectrumSummary {
    ArithmeticMode mode = ArithmeticMode::Exact;
    int vertex_count = 0;
    std::optional<int> regular_degree;
    std::vector<SpectrumEntry> entries;
};

SpectrumSummary summarize(const SpectralDecomposition& d);
/// The same summary for a cube too large to build explicitly.
SpectrumSummary summarize(const CubeGraph& cube, const CubeSpectrum& spectrum);

// Scalars are strings: "p/q" when exact, 12 significant digits otherwise.
// A string without '.', 'e', "inf" or "nan" reads back as exact.
void to_json(nlohmann::json& j, const Scalar& s);
void from_json(const nlohmann::json& j, Scalar& s);

void to_json(nlohmann::json& j, const SpectrumSummary& s);
void from_json(const nlohmann::json& j, SpectrumSummary& s);

void to_json(nlohmann::json& j, const DesignReport& r);
void from_json(const nlohmann::json& j, DesignReport& r);

void to_json(nlohmann::json& j, const SearchResult& r);
void from_json(const nlohmann::json& j, SearchResult& r);

void to_json(nlohmann::json& j, const BoundCertificate& c);
void from_json(const nlohmann::json& j, BoundCertificate& c);

void to_json(nlohmann::json& j, const StableSetResult& r);
void from_json(const nlohmann::json& j, StableSetResult& r);

/// Check matrix rows and lexicographic codewords as '0'/'1' strings.
void to_json(nlohmann::json& j, const BinaryLinearCode& c);
/// Rebuilds the code from its check matrix. Throws Error(ParseError).
BinaryLinearCode code_from_json(const nlohmann::json& j);

}  // namespace gdesign

#endif
