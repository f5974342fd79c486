#include "atcover/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace atcover {

namespace {
constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

void check_same_len(std::size_t a, std::size_t b) {
    if (a != b) throw std::invalid_argument("gf2: dimension mismatch");
}
}  // namespace

Gf2Vector::Gf2Vector(std::size_t len) : len_(len), w_(words_for(len), 0) {}

bool Gf2Vector::get(std::size_t i) const {
    if (i >= len_) throw std::out_of_range("Gf2Vector::get");
    return (w_[i / kWordBits] >> (i % kWordBits)) & 1u;
}

void Gf2Vector::set(std::size_t i, bool value) {
    if (i >= len_) throw std::out_of_range("Gf2Vector::set");
    std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
    if (value)
        w_[i / kWordBits] |= mask;
    else
        w_[i / kWordBits] &= ~mask;
}

void Gf2Vector::flip(std::size_t i) {
    if (i >= len_) throw std::out_of_range("Gf2Vector::flip");
    w_[i / kWordBits] ^= std::uint64_t{1} << (i % kWordBits);
}

bool Gf2Vector::is_zero() const {
    for (std::uint64_t w : w_)
        if (w) return false;
    return true;
}

long Gf2Vector::pivot() const {
    for (std::size_t k = 0; k < w_.size(); ++k)
        if (w_[k]) return static_cast<long>(k * kWordBits + std::countr_zero(w_[k]));
    return -1;
}

std::size_t Gf2Vector::popcount() const {
    std::size_t total = 0;
    for (std::uint64_t w : w_) total += std::popcount(w);
    return total;
}

std::vector<std::size_t> Gf2Vector::support() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < w_.size(); ++k) {
        std::uint64_t w = w_[k];
        while (w) {
            out.push_back(k * kWordBits + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

Gf2Vector& Gf2Vector::operator^=(const Gf2Vector& other) {
    check_same_len(len_, other.len_);
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= other.w_[k];
    return *this;
}

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)), w_(rows * stride_, 0) {}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
    Gf2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

bool Gf2Matrix::get(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("Gf2Matrix::get");
    return (w_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1u;
}

void Gf2Matrix::set(std::size_t r, std::size_t c, bool value) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("Gf2Matrix::set");
    std::uint64_t mask = std::uint64_t{1} << (c % kWordBits);
    if (value)
        w_[r * stride_ + c / kWordBits] |= mask;
    else
        w_[r * stride_ + c / kWordBits] &= ~mask;
}

Gf2Vector Gf2Matrix::row(std::size_t r) const {
    if (r >= rows_) throw std::out_of_range("Gf2Matrix::row");
    Gf2Vector v(cols_);
    for (std::size_t c = 0; c < cols_; ++c)
        if ((w_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1u) v.set(c, true);
    return v;
}

void Gf2Matrix::xor_row_into(std::size_t src, std::size_t dst) {
    const std::uint64_t* s = &w_[src * stride_];
    std::uint64_t* d = &w_[dst * stride_];
    for (std::size_t k = 0; k < stride_; ++k) d[k] ^= s[k];
}

void Gf2Matrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t k = 0; k < stride_; ++k) std::swap(w_[a * stride_ + k], w_[b * stride_ + k]);
}

Gf2Vector Gf2Matrix::apply(const Gf2Vector& x) const {
    check_same_len(cols_, x.size());
    Gf2Vector out(rows_);
    const auto& xw = x.words();
    for (std::size_t r = 0; r < rows_; ++r) {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < stride_; ++k) acc ^= w_[r * stride_ + k] & xw[k];
        if (std::popcount(acc) & 1) out.set(r, true);
    }
    return out;
}

Gf2Matrix& Gf2Matrix::operator^=(const Gf2Matrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("gf2: shape mismatch");
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= other.w_[k];
    return *this;
}

std::size_t rank(Gf2Matrix m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pr = r;
        while (pr < m.rows() && !m.get(pr, c)) ++pr;
        if (pr == m.rows()) continue;
        m.swap_rows(r, pr);
        for (std::size_t i = r + 1; i < m.rows(); ++i)
            if (m.get(i, c)) m.xor_row_into(r, i);
        ++r;
    }
    return r;
}

Gf2Vector Gf2Basis::reduce(Gf2Vector v) const {
    check_same_len(v.size(), ambient_);
    for (const auto& row : rows_) {
        long p = row.pivot();
        if (p >= 0 && v.get(static_cast<std::size_t>(p))) v ^= row;
    }
    return v;
}

bool Gf2Basis::in_span(const Gf2Vector& v) const { return reduce(v).is_zero(); }

bool Gf2Basis::extend(const Gf2Vector& v) {
    Gf2Vector res = reduce(v);
    if (res.is_zero()) return false;
    std::size_t p = static_cast<std::size_t>(res.pivot());
    for (auto& row : rows_)
        if (row.get(p)) row ^= res;
    auto it = rows_.begin();
    while (it != rows_.end() && it->pivot() < static_cast<long>(p)) ++it;
    rows_.insert(it, std::move(res));
    return true;
}

Gf2Basis kernel_basis(const Gf2Matrix& m) {
    Gf2Matrix a = m;
    const std::size_t rows = a.rows(), cols = a.cols();

    // Reduced row echelon form, recording pivot columns.
    std::vector<std::size_t> pivot_col;
    std::vector<bool> is_pivot(cols, false);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && !a.get(pr, c)) ++pr;
        if (pr == rows) continue;
        a.swap_rows(r, pr);
        for (std::size_t i = 0; i < rows; ++i)
            if (i != r && a.get(i, c)) a.xor_row_into(r, i);
        pivot_col.push_back(c);
        is_pivot[c] = true;
        ++r;
    }

    // One kernel vector per free column: x[free] = 1, x[pivot_i] = a[i][free].
    Gf2Basis basis(cols);
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Gf2Vector v(cols);
        v.set(f, true);
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            if (a.get(i, f)) v.set(pivot_col[i], true);
        basis.extend(v);
    }
    return basis;
}

}  // namespace atcover
