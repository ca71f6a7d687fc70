#ifndef GDESIGN_GF2_HPP
#define GDESIGN_GF2_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gdesign {

/// A binary word; bit i is coordinate i (the i-th character of its string form).
using Word = std::uint64_t;

inline int weight(Word w) { return __builtin_popcountll(w); }
inline int parity(Word w) { return __builtin_parityll(w); }

/// "100" for e_1 when n = 3.
std::string word_to_string(Word w, int n);
/// Throws Error(ParseError) on characters other than '0'/'1' or length > 64.
Word word_from_string(const std::string& s);

/// Row-major 0/1 matrix with at most 64 columns; each row is one Word.
class BinaryMatrix {
public:
    BinaryMatrix(int rows, int cols);
    BinaryMatrix(int cols, std::vector<Word> rows);

    /// One '0'/'1' string per row; all the same length.
    static BinaryMatrix from_strings(const std::vector<std::string>& rows);

    int rows() const { return static_cast<int>(rows_.size()); }
    int cols() const { return cols_; }
    bool get(int r, int c) const { return (rows_[r] >> c) & 1U; }
    void set(int r, int c, bool value);
    Word row(int r) const { return rows_[r]; }
    const std::vector<Word>& row_words() const { return rows_; }

    std::vector<std::string> to_strings() const;
    /// Rank over GF(2).
    int rank() const;

    bool operator==(const BinaryMatrix&) const = default;

private:
    int cols_;
    std::vector<Word> rows_;
};

/// Reduced row echelon basis of the row span (nonzero rows only).
std::vector<Word> row_basis(const std::vector<Word>& rows, int cols);

/// Basis of {x : Mx = 0}.
std::vector<Word> kernel_basis(const BinaryMatrix& m);

class BinaryLinearCode {
public:
    int length() const { return length_; }
    const BinaryMatrix& check_matrix() const { return check_; }
    int dimension() const { return dimension_; }
    /// Sorted by numeric value.
    const std::vector<Word>& codewords() const { return codewords_; }
    /// Minimum nonzero weight; absent for the zero-dimensional code.
    std::optional<int> distance() const { return distance_; }
    /// A basis of the code, one word per row.
    const std::vector<Word>& generator() const { return generator_; }

    bool contains(Word w) const;
    std::size_t size() const { return codewords_.size(); }
    /// Codewords as strings in lexicographic order.
    std::vector<std::string> codeword_strings() const;
    /// weight -> number of codewords.
    std::map<int, int> weight_distribution() const;

    /// Same length and codeword set.
    bool operator==(const BinaryLinearCode& other) const
    {
        return length_ == other.length_ && codewords_ == other.codewords_;
    }

    friend BinaryLinearCode code_from_check_matrix(const BinaryMatrix& m);

private:
    int length_ = 0;
    BinaryMatrix check_{1, 1};
    int dimension_ = 0;
    std::vector<Word> codewords_;
    std::vector<Word> generator_;
    std::optional<int> distance_;
};

inline constexpr int kMaxEnumeratedLength = 24;

/// Enumerates the kernel. Throws Error(TooLarge) when n > 24.
BinaryLinearCode code_from_check_matrix(const BinaryMatrix& m);

/// Check matrix with columns 1 .. 2^n - 1 in binary counting order.
BinaryMatrix hamming_check_matrix(int n);
/// The Hamming code of length 2^n - 1, 2 <= n <= 4. Throws Error(OutOfSupportedRange).
BinaryLinearCode hamming(int n);

/// Row span of the check matrix, given as a code whose check matrix is a
/// generator of C.
BinaryLinearCode dual(const BinaryLinearCode& c);

/// [M 0]
BinaryLinearCode lift(const BinaryLinearCode& c);
/// [M 0 0]
BinaryLinearCode double_lift(const BinaryLinearCode& c);
/// M without its last column. Throws Error(TooShort) for n < 2.
BinaryLinearCode project(const BinaryLinearCode& c);

/// Weights of the nonzero dual codewords, sorted. The code, as a design on
/// Q_n, fails to integrate exactly the characters indexed by those words.
std::vector<int> predicted_unintegrated_weights(const BinaryLinearCode& c);

struct OrthogonalArrayStrength {
    int strength = 0;
    /// Rows / 2^strength.
    std::int64_t index = 0;
};

/// Largest k such that every k columns show each of the 2^k patterns
/// equally often.
OrthogonalArrayStrength orthogonal_array_strength(const BinaryMatrix& rows);

}  // namespace gdesign

#endif
