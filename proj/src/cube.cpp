#include "gdesign/cube.hpp"

#include "gdesign/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace gdesign {

namespace {

std::int64_t binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

}  // namespace

CubeGraph::CubeGraph(int n, int d) : n_(n), d_(d)
{
    if (n < 2 || n > kMaxDimension)
        throw Error(ErrorCode::OutOfSupportedRange, "cube dimension must be in [2, 20], got " + std::to_string(n));
    if (d < 1 || d > n)
        throw Error(ErrorCode::OutOfSupportedRange, "cube distance must be in [1, n], got " + std::to_string(d));
}

std::int64_t CubeGraph::degree() const
{
    std::int64_t deg = 0;
    for (int j = 1; j <= d_; ++j)
        deg += binomial(n_, j);
    return deg;
}

bool CubeGraph::adjacent(Word x, Word y) const
{
    const int dist = weight(x ^ y);
    return dist >= 1 && dist <= d_;
}

std::int64_t krawtchouk(int n, int j, int i)
{
    std::int64_t sum = 0;
    for (int l = 0; l <= j; ++l) {
        const std::int64_t term = binomial(i, l) * binomial(n - i, j - l);
        sum += (l % 2 == 0) ? term : -term;
    }
    return sum;
}

Rational CubeGraph::eigenvalue(int i) const
{
    if (i < 0 || i > n_)
        throw Error(ErrorCode::OutOfRange, "character weight out of range");
    std::int64_t sum = 0;
    for (int j = 1; j <= d_; ++j)
        sum += krawtchouk(n_, j, i);
    return Rational(sum, degree()) - Rational(1);
}

Graph CubeGraph::to_graph() const
{
    if (n_ > kMaxExplicit)
        throw Error(ErrorCode::TooLarge, "explicit cube graphs are limited to n <= 12");
    const int count = static_cast<int>(vertex_count());
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(count) * degree() / 2);
    for (int x = 0; x < count; ++x)
        for (int y = x + 1; y < count; ++y)
            if (adjacent(x, y))
                edges.emplace_back(x, y);
    std::vector<std::string> labels;
    labels.reserve(count);
    for (int x = 0; x < count; ++x)
        labels.push_back(word_to_string(x, n_));
    return build_graph(count, std::move(edges), std::move(labels));
}

std::vector<Word> words_of_weight(int n, int i)
{
    std::vector<Word> out;
    for (Word w = 0; w < (Word{1} << n); ++w)
        if (weight(w) == i)
            out.push_back(w);
    return out;
}

std::vector<Word> weight_ordered_words(int n)
{
    std::vector<Word> out;
    for (int i = 0; i <= n; ++i) {
        auto ws = words_of_weight(n, i);
        out.insert(out.end(), ws.begin(), ws.end());
    }
    return out;
}

IntMatrix character_matrix(int n, int i)
{
    const auto freqs = words_of_weight(n, i);
    const Word count = Word{1} << n;
    IntMatrix b(static_cast<Eigen::Index>(count), static_cast<Eigen::Index>(freqs.size()));
    for (std::size_t c = 0; c < freqs.size(); ++c)
        for (Word x = 0; x < count; ++x)
            b(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(c)) = character(freqs[c], x);
    return b;
}

Eigenspace cube_eigenspace(const CubeGraph& cube, int i)
{
    if (cube.n() > CubeGraph::kMaxExplicit)
        throw Error(ErrorCode::TooLarge, "explicit cube eigenspaces are limited to n <= 12");
    if (i < 0 || i > cube.n())
        throw Error(ErrorCode::OutOfRange, "character weight out of range");
    Eigenspace s;
    s.eigenvalue = Scalar(cube.eigenvalue(i));
    s.integer_basis = character_matrix(cube.n(), i);
    s.dimension = static_cast<int>(s.integer_basis->cols());
    // characters have norm sqrt(2^n)
    s.basis = s.integer_basis->cast<double>() / std::sqrt(static_cast<double>(cube.vertex_count()));
    s.components = {i};
    return s;
}

SpectralDecomposition cube_decomposition(const CubeGraph& cube)
{
    const Graph g = cube.to_graph();
    std::vector<ExactPart> parts;
    for (int i = 0; i <= cube.n(); ++i)
        parts.push_back({cube.eigenvalue(i), character_matrix(cube.n(), i), {i}});
    return exact_decomposition(g, std::move(parts));
}

CubeSpectrum cube_spectrum(const CubeGraph& cube)
{
    struct Entry {
        Rational value;
        std::vector<int> weights;
        int dimension = 0;
        int tie = 0;
    };
    std::map<Rational, Entry> merged;
    for (int i = 0; i <= cube.n(); ++i) {
        Entry& e = merged[cube.eigenvalue(i)];
        e.value = cube.eigenvalue(i);
        e.weights.push_back(i);
        e.dimension += static_cast<int>(binomial(cube.n(), i));
    }
    std::vector<Entry> entries;
    for (auto& [v, e] : merged)
        entries.push_back(std::move(e));

    auto key = [](const Entry& e) { return boost::abs(e.value + Rational(1)); };
    std::stable_sort(entries.begin(), entries.end(), [&](const Entry& a, const Entry& b) { return key(a) > key(b); });
    for (std::size_t i = 1; i < entries.size(); ++i)
        entries[i].tie = entries[i - 1].tie + (key(entries[i]) == key(entries[i - 1]) ? 0 : 1);
    std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.tie != b.tie)
            return a.tie < b.tie;
        if (a.dimension != b.dimension)
            return a.dimension > b.dimension;
        return a.value > b.value;
    });

    CubeSpectrum out;
    out.shape.vertex_count = static_cast<int>(cube.vertex_count());
    out.shape.regular = true;
    for (const auto& e : entries) {
        out.eigenvalues.push_back(e.value);
        out.weights.push_back(e.weights);
        out.shape.dimensions.push_back(e.dimension);
        out.shape.tie_groups.push_back(e.tie);
    }
    return out;
}

std::vector<std::int64_t> character_sums(int n, const std::vector<Word>& words)
{
    const std::size_t count = std::size_t{1} << n;
    std::vector<std::int64_t> f(count, 0);
    for (Word w : words)
        f[w] += 1;
    for (std::size_t h = 1; h < count; h <<= 1)
        for (std::size_t i = 0; i < count; i += 2 * h)
            for (std::size_t j = i; j < i + h; ++j) {
                const std::int64_t a = f[j];
                const std::int64_t b = f[j + h];
                f[j] = a + b;
                f[j + h] = a - b;
            }
    return f;
}

std::vector<bool> weight_verdicts(int n, const std::vector<Word>& words)
{
    const auto sums = character_sums(n, words);
    std::vector<bool> ok(n + 1, true);
    for (std::size_t a = 1; a < sums.size(); ++a)
        if (sums[a] != 0)
            ok[weight(a)] = false;
    return ok;
}

namespace {

void validate_words(const CubeGraph& cube, const std::vector<Word>& words)
{
    if (words.empty())
        throw Error(ErrorCode::InvalidDesign, "design is empty");
    for (Word w : words)
        if (w >= cube.vertex_count())
            throw Error(ErrorCode::OutOfRange, "word " + std::to_string(w) + " has bits beyond n = " +
                                                   std::to_string(cube.n()));
    std::vector<Word> sorted = words;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error(ErrorCode::InvalidDesign, "design repeats a word");
}

}  // namespace

DesignReport cube_design_report(const CubeGraph& cube, const std::vector<Word>& words)
{
    validate_words(cube, words);
    const auto by_weight = weight_verdicts(cube.n(), words);
    const CubeSpectrum spectrum = cube_spectrum(cube);
    std::vector<bool> verdicts;
    for (const auto& ws : spectrum.weights)
        verdicts.push_back(std::all_of(ws.begin(), ws.end(), [&](int i) { return by_weight[i]; }));
    return assemble_report(spectrum.shape, verdicts, static_cast<int>(words.size()));
}

std::vector<Word> simple_design(int n)
{
    if (n < 3 || n > CubeGraph::kMaxDimension)
        throw Error(ErrorCode::OutOfSupportedRange, "simple designs need 3 <= n <= 20");
    const Word ones = (Word{1} << n) - 1;
    if (n % 2 == 1)
        return {0, ones};
    return {0b1, 0b11, ones ^ 0b1, ones ^ 0b11};
}

std::vector<Word> parse_words(int n, const std::vector<std::string>& strings)
{
    std::vector<Word> out;
    for (const auto& s : strings) {
        if (static_cast<int>(s.size()) != n)
            throw Error(ErrorCode::ParseError, "word '" + s + "' does not have length " + std::to_string(n));
        out.push_back(word_from_string(s));
    }
    return out;
}

Design cube_design(const CubeGraph& cube, const std::vector<Word>& words)
{
    validate_words(cube, words);
    std::vector<int> vertices(words.begin(), words.end());
    return Design(static_cast<int>(cube.vertex_count()), std::move(vertices));
}

}  // namespace gdesign
