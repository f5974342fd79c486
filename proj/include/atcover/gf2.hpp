#pragma once
// Dense bit-packed exact linear algebra over GF(2): vectors, matrices and
// row-reduced bases. Rows live in 64-bit words; all arithmetic is
// word-parallel XOR/AND, sized for matrices up to a few thousand columns.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace atcover {

class Gf2Vector {
public:
    Gf2Vector() = default;
    explicit Gf2Vector(std::size_t len);

    std::size_t size() const { return len_; }
    bool get(std::size_t i) const;
    void set(std::size_t i, bool value);
    void flip(std::size_t i);

    bool is_zero() const;
    // Index of the leftmost 1 (lowest index), or -1 for the zero vector.
    long pivot() const;
    std::size_t popcount() const;
    std::vector<std::size_t> support() const;

    Gf2Vector& operator^=(const Gf2Vector& other);
    friend Gf2Vector operator^(Gf2Vector a, const Gf2Vector& b) {
        a ^= b;
        return a;
    }
    bool operator==(const Gf2Vector&) const = default;

    const std::vector<std::uint64_t>& words() const { return w_; }

private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> w_;
};

class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(std::size_t rows, std::size_t cols);
    static Gf2Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool value);

    Gf2Vector row(std::size_t r) const;
    // row[dst] ^= row[src]
    void xor_row_into(std::size_t src, std::size_t dst);
    void swap_rows(std::size_t a, std::size_t b);
    // Matrix-vector product M x.
    Gf2Vector apply(const Gf2Vector& x) const;
    // Entrywise sum (XOR) of two matrices of equal shape.
    Gf2Matrix& operator^=(const Gf2Matrix& other);
    bool operator==(const Gf2Matrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0, stride_ = 0;
    std::vector<std::uint64_t> w_;
};

// Row rank over GF(2); takes a working copy by value.
std::size_t rank(Gf2Matrix m);

// Basis of a subspace kept in reduced row-echelon form: pivot columns
// strictly increasing, each pivot column containing a single 1.
class Gf2Basis {
public:
    explicit Gf2Basis(std::size_t ambient_dim) : ambient_(ambient_dim) {}

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<Gf2Vector>& vectors() const { return rows_; }

    // Residue of v after elimination against the basis.
    Gf2Vector reduce(Gf2Vector v) const;
    bool in_span(const Gf2Vector& v) const;
    // Inserts v if independent (re-reducing to echelon form) and returns
    // true; returns false and leaves the basis unchanged if v is dependent.
    bool extend(const Gf2Vector& v);

private:
    std::size_t ambient_;
    std::vector<Gf2Vector> rows_;
};

// Row-reduced basis of { x : Mx = 0 }.
Gf2Basis kernel_basis(const Gf2Matrix& m);

}  // namespace atcover
