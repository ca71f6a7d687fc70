#include "gdesign/gf2.hpp"

#include "gdesign/error.hpp"

#include <algorithm>

namespace gdesign {

std::string word_to_string(Word w, int n)
{
    std::string s(n, '0');
    for (int i = 0; i < n; ++i)
        if ((w >> i) & 1U)
            s[i] = '1';
    return s;
}

Word word_from_string(const std::string& s)
{
    if (s.empty() || s.size() > 64)
        throw Error(ErrorCode::ParseError, "binary word must have 1..64 characters: '" + s + "'");
    Word w = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            w |= Word{1} << i;
        else if (s[i] != '0')
            throw Error(ErrorCode::ParseError, "binary word has a non-binary character: '" + s + "'");
    }
    return w;
}

BinaryMatrix::BinaryMatrix(int rows, int cols) : BinaryMatrix(cols, std::vector<Word>(std::max(rows, 0), 0))
{
}

BinaryMatrix::BinaryMatrix(int cols, std::vector<Word> rows) : cols_(cols), rows_(std::move(rows))
{
    if (cols_ < 1 || cols_ > 64 || rows_.empty())
        throw Error(ErrorCode::OutOfRange, "binary matrix needs 1..64 columns and at least one row");
    const Word mask = cols_ == 64 ? ~Word{0} : ((Word{1} << cols_) - 1);
    for (Word r : rows_)
        if (r & ~mask)
            throw Error(ErrorCode::OutOfRange, "row has bits beyond the column count");
}

BinaryMatrix BinaryMatrix::from_strings(const std::vector<std::string>& rows)
{
    if (rows.empty())
        throw Error(ErrorCode::ParseError, "matrix has no rows");
    std::vector<Word> words;
    for (const auto& r : rows) {
        if (r.size() != rows.front().size())
            throw Error(ErrorCode::ParseError, "matrix rows differ in length");
        words.push_back(word_from_string(r));
    }
    return BinaryMatrix(static_cast<int>(rows.front().size()), std::move(words));
}

void BinaryMatrix::set(int r, int c, bool value)
{
    if (value)
        rows_[r] |= Word{1} << c;
    else
        rows_[r] &= ~(Word{1} << c);
}

std::vector<std::string> BinaryMatrix::to_strings() const
{
    std::vector<std::string> out;
    for (Word r : rows_)
        out.push_back(word_to_string(r, cols_));
    return out;
}

std::vector<Word> row_basis(const std::vector<Word>& rows, int cols)
{
    std::vector<Word> m = rows;
    std::size_t rank = 0;
    for (int c = 0; c < cols && rank < m.size(); ++c) {
        const Word bit = Word{1} << c;
        auto pivot = std::find_if(m.begin() + rank, m.end(), [&](Word r) { return r & bit; });
        if (pivot == m.end())
            continue;
        std::iter_swap(m.begin() + rank, pivot);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (i != rank && (m[i] & bit))
                m[i] ^= m[rank];
        ++rank;
    }
    m.resize(rank);
    return m;
}

int BinaryMatrix::rank() const
{
    return static_cast<int>(row_basis(rows_, cols_).size());
}

std::vector<Word> kernel_basis(const BinaryMatrix& m)
{
    const int n = m.cols();
    std::vector<Word> rref = row_basis(m.row_words(), n);
    std::vector<int> pivot_of_row;
    Word pivots = 0;
    for (Word r : rref) {
        int p = __builtin_ctzll(r);
        pivot_of_row.push_back(p);
        pivots |= Word{1} << p;
    }
    std::vector<Word> basis;
    for (int f = 0; f < n; ++f) {
        if ((pivots >> f) & 1U)
            continue;
        Word x = Word{1} << f;
        for (std::size_t r = 0; r < rref.size(); ++r)
            if ((rref[r] >> f) & 1U)
                x |= Word{1} << pivot_of_row[r];
        basis.push_back(x);
    }
    return basis;
}

bool BinaryLinearCode::contains(Word w) const
{
    return std::binary_search(codewords_.begin(), codewords_.end(), w);
}

std::vector<std::string> BinaryLinearCode::codeword_strings() const
{
    std::vector<std::string> out;
    out.reserve(codewords_.size());
    for (Word w : codewords_)
        out.push_back(word_to_string(w, length_));
    std::sort(out.begin(), out.end());
    return out;
}

std::map<int, int> BinaryLinearCode::weight_distribution() const
{
    std::map<int, int> dist;
    for (Word w : codewords_)
        ++dist[weight(w)];
    return dist;
}

BinaryLinearCode code_from_check_matrix(const BinaryMatrix& m)
{
    if (m.cols() > kMaxEnumeratedLength)
        throw Error(ErrorCode::TooLarge, "codeword enumeration limited to length " +
                                             std::to_string(kMaxEnumeratedLength));
    BinaryLinearCode c;
    c.length_ = m.cols();
    c.check_ = m;
    c.generator_ = kernel_basis(m);
    c.dimension_ = static_cast<int>(c.generator_.size());

    // Gray-code walk over all combinations of the basis
    const std::uint64_t count = std::uint64_t{1} << c.dimension_;
    c.codewords_.reserve(count);
    Word current = 0;
    c.codewords_.push_back(current);
    for (std::uint64_t i = 1; i < count; ++i) {
        current ^= c.generator_[__builtin_ctzll(i)];
        c.codewords_.push_back(current);
    }
    std::sort(c.codewords_.begin(), c.codewords_.end());

    for (Word w : c.codewords_)
        if (w != 0 && (!c.distance_ || weight(w) < *c.distance_))
            c.distance_ = weight(w);
    return c;
}

BinaryMatrix hamming_check_matrix(int n)
{
    if (n < 2 || n > 4)
        throw Error(ErrorCode::OutOfSupportedRange, "Hamming codes supported for 2 <= n <= 4");
    const int length = (1 << n) - 1;
    BinaryMatrix m(n, length);
    for (int col = 0; col < length; ++col)
        for (int r = 0; r < n; ++r)
            m.set(r, col, ((col + 1) >> r) & 1);
    return m;
}

BinaryLinearCode hamming(int n)
{
    return code_from_check_matrix(hamming_check_matrix(n));
}

BinaryLinearCode dual(const BinaryLinearCode& c)
{
    std::vector<Word> rows = c.generator();
    if (rows.empty())
        rows.push_back(0);
    return code_from_check_matrix(BinaryMatrix(c.length(), std::move(rows)));
}

namespace {

BinaryLinearCode pad(const BinaryLinearCode& c, int extra)
{
    const BinaryMatrix& m = c.check_matrix();
    if (m.cols() + extra > 64)
        throw Error(ErrorCode::TooLarge, "code length limited to 64");
    return code_from_check_matrix(BinaryMatrix(m.cols() + extra, m.row_words()));
}

}  // namespace

BinaryLinearCode lift(const BinaryLinearCode& c)
{
    return pad(c, 1);
}

BinaryLinearCode double_lift(const BinaryLinearCode& c)
{
    return pad(c, 2);
}

BinaryLinearCode project(const BinaryLinearCode& c)
{
    const BinaryMatrix& m = c.check_matrix();
    if (m.cols() < 2)
        throw Error(ErrorCode::TooShort, "projection needs length at least 2");
    const Word keep = (Word{1} << (m.cols() - 1)) - 1;
    std::vector<Word> rows;
    for (Word r : m.row_words())
        rows.push_back(r & keep);
    return code_from_check_matrix(BinaryMatrix(m.cols() - 1, std::move(rows)));
}

std::vector<int> predicted_unintegrated_weights(const BinaryLinearCode& c)
{
    std::vector<Word> basis = row_basis(c.check_matrix().row_words(), c.length());
    std::vector<int> weights;
    const std::uint64_t count = std::uint64_t{1} << basis.size();
    Word current = 0;
    for (std::uint64_t i = 1; i < count; ++i) {
        current ^= basis[__builtin_ctzll(i)];
        weights.push_back(weight(current));
    }
    std::sort(weights.begin(), weights.end());
    return weights;
}

namespace {

bool balanced_on(const std::vector<Word>& rows, const std::vector<int>& columns)
{
    const std::size_t k = columns.size();
    const std::size_t patterns = std::size_t{1} << k;
    if (rows.size() % patterns != 0)
        return false;
    std::vector<std::size_t> counts(patterns, 0);
    for (Word r : rows) {
        std::size_t p = 0;
        for (std::size_t j = 0; j < k; ++j)
            p |= static_cast<std::size_t>((r >> columns[j]) & 1U) << j;
        ++counts[p];
    }
    const std::size_t want = rows.size() / patterns;
    return std::all_of(counts.begin(), counts.end(), [&](std::size_t c) { return c == want; });
}

// Visits every k-subset of [0, n) in colexicographic order; stops when f returns false.
template <typename F>
bool all_subsets(int n, int k, F&& f)
{
    std::vector<int> s(k);
    for (int i = 0; i < k; ++i)
        s[i] = i;
    while (true) {
        if (!f(s))
            return false;
        int i = 0;
        while (i < k && s[i] + 1 == (i + 1 < k ? s[i + 1] : n))
            ++i;
        if (i == k)
            return true;
        ++s[i];
        for (int j = 0; j < i; ++j)
            s[j] = j;
    }
}

}  // namespace

OrthogonalArrayStrength orthogonal_array_strength(const BinaryMatrix& rows)
{
    const auto& words = rows.row_words();
    int strength = 0;
    for (int k = 1; k <= rows.cols(); ++k) {
        bool ok = all_subsets(rows.cols(), k, [&](const std::vector<int>& cols) { return balanced_on(words, cols); });
        if (!ok)
            break;
        strength = k;
    }
    return {strength, static_cast<std::int64_t>(words.size()) >> strength};
}

}  // namespace gdesign
