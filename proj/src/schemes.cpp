#include "gdesign/schemes.hpp"

#include "gdesign/cube.hpp"
#include "gdesign/error.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

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

// k-subsets of {0..n-1} as bitmasks, lexicographic in their sorted tuples.
std::vector<Word> lexicographic_subsets(int n, int k)
{
    std::vector<Word> out;
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i)
        c[i] = i;
    while (true) {
        Word m = 0;
        for (int e : c)
            m |= Word{1} << e;
        out.push_back(m);
        int i = k - 1;
        while (i >= 0 && c[i] == n - k + i)
            --i;
        if (i < 0)
            break;
        ++c[i];
        for (int j = i + 1; j < k; ++j)
            c[j] = c[j - 1] + 1;
    }
    return out;
}

Eigen::VectorXd indicator(int count, const std::vector<int>& points)
{
    Eigen::VectorXd v = Eigen::VectorXd::Zero(count);
    for (int p : points)
        v(p) = 1.0;
    return v;
}

void validate_points(const AssociationScheme& s, const std::vector<int>& points)
{
    if (points.empty())
        throw Error(ErrorCode::InvalidDesign, "point subset is empty");
    std::vector<int> sorted = points;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error(ErrorCode::InvalidDesign, "point subset repeats a point");
    if (sorted.front() < 0 || sorted.back() >= s.point_count())
        throw Error(ErrorCode::OutOfRange, "point index out of range");
}

}  // namespace

Eigen::MatrixXd AssociationScheme::relation_matrix(int i) const
{
    const int n = point_count();
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (relation(x, y) == i)
                d(x, y) = 1.0;
    return d;
}

std::string AssociationScheme::point_label(int x) const
{
    const Word p = points_.at(x);
    if (kind_ == SchemeKind::Hamming)
        return word_to_string(p, n_);
    std::string s = "{";
    bool first = true;
    for (int e = 0; e < n_; ++e) {
        if (!((p >> e) & 1U))
            continue;
        if (!first)
            s += ",";
        s += std::to_string(e + 1);
        first = false;
    }
    return s + "}";
}

int AssociationScheme::point_index(Word encoding) const
{
    if (kind_ == SchemeKind::Hamming) {
        auto it = std::lower_bound(points_.begin(), points_.end(), encoding);
        return (it != points_.end() && *it == encoding) ? static_cast<int>(it - points_.begin()) : -1;
    }
    // lexicographic tuple order is not numeric order
    auto it = std::find(points_.begin(), points_.end(), encoding);
    return it == points_.end() ? -1 : static_cast<int>(it - points_.begin());
}

Eigen::MatrixXd AssociationScheme::idempotent(int i) const
{
    const auto& b = bases_.at(i);
    return b * b.transpose();
}

std::int64_t AssociationScheme::intersection_number(int i, int j, int k) const
{
    const int c = classes_ + 1;
    if (i < 0 || j < 0 || k < 0 || i >= c || j >= c || k >= c)
        throw Error(ErrorCode::OutOfRange, "relation index out of range");
    return intersections_[(static_cast<std::size_t>(i) * c + j) * c + k];
}

void AssociationScheme::compute_intersection_numbers()
{
    const int c = classes_ + 1;
    const int count = point_count();
    intersections_.assign(static_cast<std::size_t>(c) * c * c, 0);
    for (int k = 0; k < c; ++k) {
        int y = 0;
        while (y < count && relation(0, y) != k)
            ++y;
        if (y == count)
            throw Error(ErrorCode::NumericalFailure, "relation " + std::to_string(k) + " is empty");
        for (int z = 0; z < count; ++z)
            ++intersections_[(static_cast<std::size_t>(relation(0, z)) * c + relation(z, y)) * c + k];
    }
}

AssociationScheme hamming_scheme(int n)
{
    if (n < 2)
        throw Error(ErrorCode::OutOfSupportedRange, "Hamming scheme needs n >= 2");
    if (n > 10)
        throw Error(ErrorCode::TooLarge, "Hamming scheme limited to n <= 10");
    AssociationScheme s;
    s.kind_ = SchemeKind::Hamming;
    s.n_ = n;
    s.classes_ = n;
    const int count = 1 << n;
    for (int x = 0; x < count; ++x)
        s.points_.push_back(static_cast<Word>(x));
    s.relations_.resize(static_cast<std::size_t>(count) * count);
    for (int x = 0; x < count; ++x)
        for (int y = 0; y < count; ++y)
            s.relations_[static_cast<std::size_t>(x) * count + y] = static_cast<std::uint8_t>(weight(x ^ y));
    const double norm = std::sqrt(static_cast<double>(count));
    for (int i = 0; i <= n; ++i) {
        IntMatrix chars = character_matrix(n, i);
        s.bases_.push_back(chars.cast<double>() / norm);
        s.integer_bases_.push_back(std::move(chars));
    }
    s.eigenmatrix_.assign(n + 1, std::vector<std::int64_t>(n + 1));
    for (int k = 0; k <= n; ++k)
        for (int i = 0; i <= n; ++i)
            s.eigenmatrix_[k][i] = krawtchouk(n, k, i);
    s.compute_intersection_numbers();
    return s;
}

AssociationScheme johnson_scheme(int n, int k)
{
    if (k < 1 || 2 * k > n)
        throw Error(ErrorCode::OutOfSupportedRange, "Johnson scheme needs 1 <= k <= n/2");
    if (n > 64 || binomial(n, k) > kMaxSchemePoints)
        throw Error(ErrorCode::TooLarge, "Johnson scheme limited to C(n,k) <= 5000 points");
    AssociationScheme s;
    s.kind_ = SchemeKind::Johnson;
    s.n_ = n;
    s.k_ = k;
    s.classes_ = k;
    s.points_ = lexicographic_subsets(n, k);
    const int count = s.point_count();
    s.relations_.resize(static_cast<std::size_t>(count) * count);
    for (int x = 0; x < count; ++x)
        for (int y = 0; y < count; ++y)
            s.relations_[static_cast<std::size_t>(x) * count + y] =
                static_cast<std::uint8_t>(k - weight(s.points_[x] & s.points_[y]));

    // The eigenvalues theta_i = (k-i)(n-k-i) - i of D_1 are distinct and
    // decreasing in i, so they label the idempotents.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(s.relation_matrix(1));
    if (solver.info() != Eigen::Success)
        throw Error(ErrorCode::NumericalFailure, "eigensolve of D_1 did not converge");
    std::vector<std::vector<Eigen::Index>> columns(k + 1);
    for (Eigen::Index c = 0; c < count; ++c) {
        const double value = solver.eigenvalues()(c);
        int match = -1;
        for (int i = 0; i <= k; ++i)
            if (std::abs(value - static_cast<double>((k - i) * (n - k - i) - i)) < 1e-6)
                match = i;
        if (match < 0)
            throw Error(ErrorCode::NumericalFailure, "unexpected eigenvalue of D_1");
        columns[match].push_back(c);
    }
    for (int i = 0; i <= k; ++i) {
        if (static_cast<std::int64_t>(columns[i].size()) != binomial(n, i) - binomial(n, i - 1))
            throw Error(ErrorCode::NumericalFailure, "idempotent J_" + std::to_string(i) + " has rank " +
                                                         std::to_string(columns[i].size()));
        Eigen::MatrixXd b(count, static_cast<Eigen::Index>(columns[i].size()));
        for (std::size_t j = 0; j < columns[i].size(); ++j)
            b.col(static_cast<Eigen::Index>(j)) = solver.eigenvectors().col(columns[i][j]);
        s.bases_.push_back(orthonormalize(b));
        s.integer_bases_.emplace_back();
    }

    s.eigenmatrix_.assign(k + 1, std::vector<std::int64_t>(k + 1));
    for (int r = 0; r <= k; ++r) {
        const Eigen::MatrixXd d = s.relation_matrix(r);
        for (int i = 0; i <= k; ++i) {
            const Eigen::VectorXd v = s.bases_[i].col(0);
            const double value = v.dot(d * v);
            const double rounded = std::round(value);
            if (std::abs(value - rounded) > 1e-6)
                throw Error(ErrorCode::NumericalFailure, "non-integral Johnson eigenvalue");
            s.eigenmatrix_[r][i] = static_cast<std::int64_t>(rounded);
        }
    }
    s.compute_intersection_numbers();
    return s;
}

AxiomCheck verify_axioms(const AssociationScheme& s, int samples_per_relation, unsigned seed)
{
    AxiomCheck out;
    auto fail = [&](std::string msg) {
        out.ok = false;
        out.failures.push_back(std::move(msg));
    };
    const int count = s.point_count();
    const int c = s.classes() + 1;

    for (int x = 0; x < count; ++x)
        for (int y = 0; y < count; ++y) {
            const int r = s.relation(x, y);
            if ((x == y) != (r == 0))
                fail("D_0 is not the identity at (" + std::to_string(x) + "," + std::to_string(y) + ")");
            if (r >= c)
                fail("relation index out of range");
            if (r != s.relation(y, x))
                fail("relation is not symmetric at (" + std::to_string(x) + "," + std::to_string(y) + ")");
        }

    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> pick(0, count - 1);
    for (int k = 0; k < c; ++k) {
        for (int sample = 0; sample < samples_per_relation; ++sample) {
            const int x = pick(rng);
            std::vector<int> partners;
            for (int y = 0; y < count; ++y)
                if (s.relation(x, y) == k)
                    partners.push_back(y);
            if (partners.empty()) {
                fail("relation " + std::to_string(k) + " empty at a point");
                break;
            }
            const int y = partners[std::uniform_int_distribution<std::size_t>(0, partners.size() - 1)(rng)];
            std::vector<std::int64_t> counts(static_cast<std::size_t>(c) * c, 0);
            for (int z = 0; z < count; ++z)
                ++counts[static_cast<std::size_t>(s.relation(x, z)) * c + s.relation(z, y)];
            for (int i = 0; i < c; ++i)
                for (int j = 0; j < c; ++j)
                    if (counts[static_cast<std::size_t>(i) * c + j] != s.intersection_number(i, j, k))
                        fail("c_" + std::to_string(i) + std::to_string(j) + std::to_string(k) +
                             " depends on the pair");
        }
    }
    for (int i = 0; i < c; ++i)
        for (int j = 0; j < c; ++j)
            for (int k = 0; k < c; ++k)
                if (s.intersection_number(i, j, k) != s.intersection_number(j, i, k))
                    fail("D_i D_j != D_j D_i");

    const double tol = 1e-8 * std::sqrt(static_cast<double>(count));
    int total_rank = 0;
    for (int i = 0; i < c; ++i) {
        const auto& bi = s.idempotent_basis(i);
        total_rank += s.rank(i);
        for (int j = 0; j < c; ++j) {
            const Eigen::MatrixXd gram = bi.transpose() * s.idempotent_basis(j);
            Eigen::MatrixXd want = Eigen::MatrixXd::Zero(gram.rows(), gram.cols());
            if (i == j)
                want.setIdentity();
            if ((gram - want).norm() > tol)
                fail(i == j ? "J_" + std::to_string(i) + " is not idempotent"
                            : "J_" + std::to_string(i) + " J_" + std::to_string(j) + " != 0");
        }
        for (int k = 0; k < c; ++k) {
            const Eigen::MatrixXd diff =
                s.relation_matrix(k) * bi - static_cast<double>(s.eigenvalue(k, i)) * bi;
            if (diff.norm() > tol * std::sqrt(static_cast<double>(bi.cols())))
                fail("D_" + std::to_string(k) + " is not p_k(" + std::to_string(i) + ") on col(J_" +
                     std::to_string(i) + ")");
        }
    }
    if (total_rank != count)
        fail("idempotents do not sum to the identity");
    const Eigen::MatrixXd j0 = s.idempotent(0);
    if ((j0 - Eigen::MatrixXd::Constant(count, count, 1.0 / count)).norm() > tol)
        fail("J_0 is not (1/|X|) J");
    return out;
}

namespace {

void validate_relations(const AssociationScheme& s, const std::vector<int>& relations)
{
    if (relations.empty())
        throw Error(ErrorCode::EmptyIndexSet, "relation index set is empty");
    for (int r : relations)
        if (r < 1 || r > s.classes())
            throw Error(ErrorCode::OutOfRange, "relation index " + std::to_string(r) + " outside 1.." +
                                                   std::to_string(s.classes()));
    std::vector<int> sorted = relations;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error(ErrorCode::Duplicate, "relation index set repeats an index");
}

}  // namespace

Graph union_graph(const AssociationScheme& s, const std::vector<int>& relations)
{
    validate_relations(s, relations);
    std::vector<bool> in(s.classes() + 1, false);
    for (int r : relations)
        in[r] = true;
    const int count = s.point_count();
    std::vector<Edge> edges;
    for (int x = 0; x < count; ++x)
        for (int y = x + 1; y < count; ++y)
            if (in[s.relation(x, y)])
                edges.emplace_back(x, y);
    std::vector<std::string> labels;
    for (int x = 0; x < count; ++x)
        labels.push_back(s.point_label(x));
    return build_graph(count, std::move(edges), std::move(labels));
}

SpectralDecomposition scheme_decomposition(const AssociationScheme& s, const std::vector<int>& relations,
                                           const Tolerance& tol)
{
    const Graph g = union_graph(s, relations);
    std::int64_t degree = 0;
    for (int r : relations)
        degree += s.valency(r);
    auto value = [&](int j) {
        std::int64_t sum = 0;
        for (int r : relations)
            sum += s.eigenvalue(r, j);
        return Rational(sum, degree) - Rational(1);
    };
    if (s.kind() == SchemeKind::Hamming) {
        std::vector<ExactPart> parts;
        for (int j = 0; j <= s.classes(); ++j)
            parts.push_back({value(j), *s.integer_basis(j), {j}});
        return exact_decomposition(g, std::move(parts));
    }
    std::vector<FloatingPart> parts;
    for (int j = 0; j <= s.classes(); ++j)
        parts.push_back({Scalar(value(j)), s.idempotent_basis(j), {j}});
    return assembled_decomposition(g, std::move(parts), tol);
}

bool idempotent_annihilates(const AssociationScheme& s, int i, const std::vector<int>& points)
{
    validate_points(s, points);
    if (i < 0 || i > s.classes())
        throw Error(ErrorCode::OutOfRange, "idempotent index out of range");
    if (const auto& exact = s.integer_basis(i)) {
        for (Eigen::Index c = 0; c < exact->cols(); ++c) {
            std::int64_t sum = 0;
            for (int p : points)
                sum += (*exact)(p, c);
            if (sum != 0)
                return false;
        }
        return true;
    }
    const Eigen::VectorXd coeffs = s.idempotent_basis(i).transpose() * indicator(s.point_count(), points);
    return coeffs.norm() < 1e-8 * std::sqrt(static_cast<double>(s.point_count()));
}

int t_design_strength(const AssociationScheme& s, const std::vector<int>& points)
{
    validate_points(s, points);
    int t = 0;
    while (t < s.classes() && idempotent_annihilates(s, t + 1, points))
        ++t;
    return t;
}

BlockFamily::BlockFamily(int ground_size, std::vector<std::vector<int>> blocks)
    : n_(ground_size), k_(0), blocks_(std::move(blocks))
{
    if (n_ < 1 || n_ > 64)
        throw Error(ErrorCode::OutOfRange, "ground set size must be in 1..64");
    if (blocks_.empty())
        throw Error(ErrorCode::InvalidDesign, "block family is empty");
    k_ = static_cast<int>(blocks_.front().size());
    for (auto& b : blocks_) {
        if (static_cast<int>(b.size()) != k_ || b.empty())
            throw Error(ErrorCode::InvalidDesign, "blocks must be nonempty and all the same size");
        std::sort(b.begin(), b.end());
        if (std::adjacent_find(b.begin(), b.end()) != b.end())
            throw Error(ErrorCode::InvalidDesign, "block repeats an element");
        if (b.front() < 1 || b.back() > n_)
            throw Error(ErrorCode::OutOfRange, "block element outside 1.." + std::to_string(n_));
    }
    std::vector<std::vector<int>> sorted = blocks_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error(ErrorCode::InvalidDesign, "block family repeats a block");
}

Word BlockFamily::mask(std::size_t b) const
{
    Word m = 0;
    for (int e : blocks_.at(b))
        m |= Word{1} << (e - 1);
    return m;
}

BlockFamily parse_block_family(const std::string& text, int ground_size)
{
    std::istringstream in(text);
    std::string line;
    std::vector<std::vector<int>> blocks;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::istringstream row(line);
        std::vector<int> block;
        std::string token;
        while (row >> token) {
            std::size_t used = 0;
            int value = 0;
            try {
                value = std::stoi(token, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != token.size())
                throw Error(ErrorCode::ParseError, "not an integer: '" + token + "'");
            block.push_back(value);
        }
        blocks.push_back(std::move(block));
    }
    return BlockFamily(ground_size, std::move(blocks));
}

std::optional<std::int64_t> classical_t_design(const BlockFamily& b, int t)
{
    if (t < 0 || t > b.block_size())
        throw Error(ErrorCode::BadTarget, "t must lie in [0, k]");
    std::vector<Word> masks;
    for (std::size_t i = 0; i < b.blocks().size(); ++i)
        masks.push_back(b.mask(i));
    if (t == 0)
        return static_cast<std::int64_t>(masks.size());
    std::optional<std::int64_t> lambda;
    for (Word subset : lexicographic_subsets(b.ground_size(), t)) {
        std::int64_t hits = 0;
        for (Word m : masks)
            if ((m & subset) == subset)
                ++hits;
        if (lambda && *lambda != hits)
            return std::nullopt;
        lambda = hits;
    }
    return lambda;
}

std::vector<int> johnson_points(const AssociationScheme& s, const BlockFamily& b)
{
    if (s.kind() != SchemeKind::Johnson || s.n() != b.ground_size() || s.k() != b.block_size())
        throw Error(ErrorCode::DimensionMismatch, "block family does not match the Johnson scheme");
    std::vector<int> out;
    for (std::size_t i = 0; i < b.blocks().size(); ++i)
        out.push_back(s.point_index(b.mask(i)));
    return out;
}

BlockFamily johnson_blocks(const AssociationScheme& s, const std::vector<int>& points)
{
    if (s.kind() != SchemeKind::Johnson)
        throw Error(ErrorCode::DimensionMismatch, "not a Johnson scheme");
    validate_points(s, points);
    std::vector<std::vector<int>> blocks;
    for (int p : points) {
        std::vector<int> block;
        for (int e = 0; e < s.n(); ++e)
            if ((s.points()[p] >> e) & 1U)
                block.push_back(e + 1);
        blocks.push_back(std::move(block));
    }
    return BlockFamily(s.n(), std::move(blocks));
}

}  // namespace gdesign
