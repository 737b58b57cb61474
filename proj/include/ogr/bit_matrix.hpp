#pragma once

// Bitpacked linear algebra over GF(2).
//
// Vectors are packed 64 columns per word, low bit first. Matrices store rows
// contiguously with a fixed word stride so that row operations are plain word
// XORs; a blocked (four-Russians) kernel can later be dropped in behind rref()
// without changing the interface.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ogr::f2 {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_(words_for(size), 0) {}

    static BitVector from_bits(std::span<const int> bits);
    static BitVector unit(std::size_t size, std::size_t i);

    std::size_t size() const { return size_; }
    bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
    void set(std::size_t i, bool v = true)
    {
        Word mask = Word{1} << (i % kWordBits);
        if (v)
            words_[i / kWordBits] |= mask;
        else
            words_[i / kWordBits] &= ~mask;
    }
    void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

    bool any() const;
    bool none() const { return !any(); }
    std::size_t popcount() const;
    /// Index of the lowest set bit, or size() when zero.
    std::size_t first_set() const;
    /// Indices of all set bits, ascending.
    std::vector<std::size_t> ones() const;

    BitVector& operator^=(const BitVector& o);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    friend bool operator==(const BitVector&, const BitVector&) = default;

    std::span<Word> words() { return words_; }
    std::span<const Word> words() const { return words_; }

    /// "0110..." with bit 0 first.
    std::string to_string() const;

private:
    std::size_t size_ = 0;
    std::vector<Word> words_;
};

class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * stride_, 0)
    {
    }

    static BitMatrix identity(std::size_t n);
    static BitMatrix from_rows(std::size_t cols, std::span<const BitVector> rows);
    static BitMatrix from_strings(std::span<const std::string> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t stride() const { return stride_; }

    bool get(std::size_t r, std::size_t c) const
    {
        return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1U;
    }
    void set(std::size_t r, std::size_t c, bool v = true)
    {
        Word mask = Word{1} << (c % kWordBits);
        Word& w = data_[r * stride_ + c / kWordBits];
        if (v)
            w |= mask;
        else
            w &= ~mask;
    }

    std::span<Word> row_words(std::size_t r) { return {data_.data() + r * stride_, stride_}; }
    std::span<const Word> row_words(std::size_t r) const { return {data_.data() + r * stride_, stride_}; }

    BitVector row(std::size_t r) const;
    void set_row(std::size_t r, const BitVector& v);
    void append_row(const BitVector& v);
    /// row(dst) ^= row(src)
    void add_row(std::size_t dst, std::size_t src);
    void swap_rows(std::size_t a, std::size_t b);
    bool row_is_zero(std::size_t r) const;

    BitMatrix transpose() const;
    bool is_zero() const;

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;
    friend BitMatrix operator+(const BitMatrix& a, const BitMatrix& b);
    /// Ordinary matrix product: (r x s) * (s x t) -> (r x t).
    friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<Word> data_;
};

/// x^T M: the sum of the rows of M selected by x.
BitVector row_combination(const BitVector& x, const BitMatrix& m);
/// M v
BitVector apply(const BitMatrix& m, const BitVector& v);

struct Echelon {
    BitMatrix matrix;                 ///< reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots;  ///< pivot column of each row, strictly increasing
    std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form. Row space is preserved.
Echelon rref(BitMatrix m);
std::size_t rank(const BitMatrix& m);
/// Basis of {v : M v = 0}, one vector per free column.
std::vector<BitVector> nullspace(const BitMatrix& m);
/// Basis of {x : x^T M = 0}: the kernel of the map whose images are the rows of M.
std::vector<BitVector> left_kernel(const BitMatrix& m);

/// Incrementally maintained echelon basis of a subspace of GF(2)^width.
///
/// Rows are kept in echelon form keyed by their lowest set bit. reduce() clears
/// every pivot position of a vector; insert() adds a vector if it is new.
class RowReducer {
public:
    explicit RowReducer(std::size_t width);

    std::size_t width() const { return width_; }
    std::size_t rank() const { return basis_.size(); }

    /// Reduce v against the basis; returns the residue (zero iff v in span).
    BitVector reduce(BitVector v) const;
    /// Same as reduce(), and also records which inserted rows were used.
    BitVector reduce_tracked(BitVector v, BitVector& combination) const;
    bool contains(const BitVector& v) const { return reduce(v).none(); }
    /// Inserts v; returns false if v was already in the span.
    bool insert(const BitVector& v);
    /// Inserts v tagged with a combination vector over some external index set.
    bool insert_tracked(const BitVector& v, const BitVector& combination);

    /// Fully reduced basis, sorted by pivot.
    Echelon echelon() const;
    /// Basis rows in insertion order; each row's lowest set bit is its pivot.
    const std::vector<BitVector>& rows() const { return basis_; }
    bool is_pivot(std::size_t column) const { return pivot_row_[column] >= 0; }

private:
    std::size_t width_;
    std::vector<BitVector> basis_;
    std::vector<BitVector> combos_;
    std::vector<std::ptrdiff_t> pivot_row_;  // column -> basis index or -1
};

}  // namespace ogr::f2
