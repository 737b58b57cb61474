#include "ogr/bit_matrix.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <numeric>

#include "ogr/error.hpp"

namespace ogr::f2 {

namespace {

void xor_words(std::span<Word> dst, std::span<const Word> src, std::size_t from_word = 0)
{
    for (std::size_t i = from_word; i < dst.size(); ++i)
        dst[i] ^= src[i];
}

// Lowest set bit at or after position `from`, or `size` when none.
std::size_t next_set(std::span<const Word> words, std::size_t size, std::size_t from)
{
    if (from >= size)
        return size;
    std::size_t w = from / kWordBits;
    Word cur = words[w] & (~Word{0} << (from % kWordBits));
    while (true) {
        if (cur)
            return std::min(size, w * kWordBits + static_cast<std::size_t>(std::countr_zero(cur)));
        if (++w >= words.size())
            return size;
        cur = words[w];
    }
}

}  // namespace

BitVector BitVector::from_bits(std::span<const int> bits)
{
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i] & 1)
            v.set(i);
    return v;
}

BitVector BitVector::unit(std::size_t size, std::size_t i)
{
    BitVector v(size);
    v.set(i);
    return v;
}

bool BitVector::any() const
{
    return std::any_of(words_.begin(), words_.end(), [](Word w) { return w != 0; });
}

std::size_t BitVector::popcount() const
{
    std::size_t c = 0;
    for (Word w : words_)
        c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

std::size_t BitVector::first_set() const { return next_set(words_, size_, 0); }

std::vector<std::size_t> BitVector::ones() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = next_set(words_, size_, 0); i < size_; i = next_set(words_, size_, i + 1))
        out.push_back(i);
    return out;
}

BitVector& BitVector::operator^=(const BitVector& o)
{
    if (o.size_ != size_)
        throw InvalidArgument("BitVector size mismatch");
    xor_words(words_, o.words_);
    return *this;
}

std::string BitVector::to_string() const
{
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
        if (get(i))
            s[i] = '1';
    return s;
}

BitMatrix BitMatrix::identity(std::size_t n)
{
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i);
    return m;
}

BitMatrix BitMatrix::from_rows(std::size_t cols, std::span<const BitVector> rows)
{
    BitMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        m.set_row(r, rows[r]);
    return m;
}

BitMatrix BitMatrix::from_strings(std::span<const std::string> rows)
{
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    BitMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw InvalidArgument("ragged bit matrix rows");
        for (std::size_t c = 0; c < cols; ++c)
            if (rows[r][c] == '1')
                m.set(r, c);
    }
    return m;
}

BitVector BitMatrix::row(std::size_t r) const
{
    BitVector v(cols_);
    std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(r * stride_), stride_, v.words().begin());
    return v;
}

void BitMatrix::set_row(std::size_t r, const BitVector& v)
{
    if (v.size() != cols_)
        throw InvalidArgument("row width mismatch");
    std::copy(v.words().begin(), v.words().end(), data_.begin() + static_cast<std::ptrdiff_t>(r * stride_));
}

void BitMatrix::append_row(const BitVector& v)
{
    if (v.size() != cols_)
        throw InvalidArgument("row width mismatch");
    data_.insert(data_.end(), v.words().begin(), v.words().end());
    ++rows_;
}

void BitMatrix::add_row(std::size_t dst, std::size_t src) { xor_words(row_words(dst), row_words(src)); }

void BitMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    std::swap_ranges(row_words(a).begin(), row_words(a).end(), row_words(b).begin());
}

bool BitMatrix::row_is_zero(std::size_t r) const
{
    auto w = row_words(r);
    return std::all_of(w.begin(), w.end(), [](Word x) { return x == 0; });
}

BitMatrix BitMatrix::transpose() const
{
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        auto w = row_words(r);
        for (std::size_t c = next_set(w, cols_, 0); c < cols_; c = next_set(w, cols_, c + 1))
            t.set(c, r);
    }
    return t;
}

bool BitMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](Word x) { return x == 0; });
}

BitMatrix operator+(const BitMatrix& a, const BitMatrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw InvalidArgument("matrix shape mismatch in sum");
    BitMatrix s = a;
    xor_words(s.data_, b.data_);
    return s;
}

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw InvalidArgument("matrix shape mismatch in product");
    BitMatrix p(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        auto ar = a.row_words(r);
        auto pr = p.row_words(r);
        for (std::size_t c = next_set(ar, a.cols_, 0); c < a.cols_; c = next_set(ar, a.cols_, c + 1))
            xor_words(pr, b.row_words(c));
    }
    return p;
}

std::string BitMatrix::to_string() const
{
    std::string s;
    for (std::size_t r = 0; r < rows_; ++r) {
        s += row(r).to_string();
        s += '\n';
    }
    return s;
}

BitVector row_combination(const BitVector& x, const BitMatrix& m)
{
    if (x.size() != m.rows())
        throw InvalidArgument("row_combination: size mismatch");
    BitVector out(m.cols());
    for (std::size_t r : x.ones())
        xor_words(out.words(), m.row_words(r));
    return out;
}

BitVector apply(const BitMatrix& m, const BitVector& v)
{
    if (v.size() != m.cols())
        throw InvalidArgument("apply: size mismatch");
    BitVector out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        auto w = m.row_words(r);
        auto vw = v.words();
        Word acc = 0;
        for (std::size_t i = 0; i < w.size(); ++i)
            acc ^= w[i] & vw[i];
        if (std::popcount(acc) & 1)
            out.set(r);
    }
    return out;
}

Echelon rref(BitMatrix m)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pr = r;
        while (pr < m.rows() && !m.get(pr, c))
            ++pr;
        if (pr == m.rows())
            continue;
        m.swap_rows(r, pr);
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (i != r && m.get(i, c))
                m.add_row(i, r);
        pivots.push_back(c);
        ++r;
    }
    BitMatrix reduced(r, m.cols());
    for (std::size_t i = 0; i < r; ++i)
        std::copy(m.row_words(i).begin(), m.row_words(i).end(), reduced.row_words(i).begin());
    return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const BitMatrix& m)
{
    RowReducer red(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        red.insert(m.row(r));
    return red.rank();
}

std::vector<BitVector> nullspace(const BitMatrix& m)
{
    Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : e.pivots)
        is_pivot[p] = true;
    std::vector<BitVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        BitVector v(m.cols());
        v.set(free);
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            if (e.matrix.get(i, free))
                v.set(e.pivots[i]);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<BitVector> left_kernel(const BitMatrix& m)
{
    RowReducer red(m.cols());
    std::vector<BitVector> kernel;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        BitVector combo(m.rows());
        BitVector residue = red.reduce_tracked(m.row(r), combo);
        combo.flip(r);
        if (residue.none())
            kernel.push_back(std::move(combo));
        else
            red.insert_tracked(residue, combo);
    }
    return kernel;
}

RowReducer::RowReducer(std::size_t width) : width_(width), pivot_row_(width, -1) {}

BitVector RowReducer::reduce(BitVector v) const
{
    for (std::size_t b = v.first_set(); b < width_; b = next_set(v.words(), width_, b + 1)) {
        std::ptrdiff_t r = pivot_row_[b];
        if (r >= 0)
            xor_words(v.words(), basis_[static_cast<std::size_t>(r)].words(), b / kWordBits);
    }
    return v;
}

BitVector RowReducer::reduce_tracked(BitVector v, BitVector& combination) const
{
    for (std::size_t b = v.first_set(); b < width_; b = next_set(v.words(), width_, b + 1)) {
        std::ptrdiff_t r = pivot_row_[b];
        if (r >= 0) {
            xor_words(v.words(), basis_[static_cast<std::size_t>(r)].words(), b / kWordBits);
            combination ^= combos_[static_cast<std::size_t>(r)];
        }
    }
    return v;
}

bool RowReducer::insert(const BitVector& v)
{
    BitVector residue = reduce(v);
    std::size_t lead = residue.first_set();
    if (lead >= width_)
        return false;
    pivot_row_[lead] = static_cast<std::ptrdiff_t>(basis_.size());
    basis_.push_back(std::move(residue));
    combos_.emplace_back();
    return true;
}

bool RowReducer::insert_tracked(const BitVector& v, const BitVector& combination)
{
    BitVector combo = combination;
    BitVector residue = reduce_tracked(v, combo);
    std::size_t lead = residue.first_set();
    if (lead >= width_)
        return false;
    pivot_row_[lead] = static_cast<std::ptrdiff_t>(basis_.size());
    basis_.push_back(std::move(residue));
    combos_.push_back(std::move(combo));
    return true;
}

Echelon RowReducer::echelon() const
{
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < width_; ++c)
        if (pivot_row_[c] >= 0)
            pivots.push_back(c);
    BitMatrix m(pivots.size(), width_);
    // Back-substitute from the highest pivot down so each row ends up clear of
    // every other pivot column.
    for (std::size_t i = pivots.size(); i-- > 0;) {
        BitVector row = basis_[static_cast<std::size_t>(pivot_row_[pivots[i]])];
        for (std::size_t j = i + 1; j < pivots.size(); ++j)
            if (row.get(pivots[j]))
                row ^= m.row(j);
        m.set_row(i, row);
    }
    return {std::move(m), std::move(pivots)};
}

}  // namespace ogr::f2
