#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "jordan_type.hpp"

namespace spc2 {

struct NotSquare : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotNilpotent : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotUnipotent : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotInvariant : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Dense bit-packed vector over GF(2).
class Gf2Vector {
public:
    Gf2Vector() = default;
    explicit Gf2Vector(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        uint64_t mask = uint64_t(1) << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= uint64_t(1) << (i & 63); }

    Gf2Vector& operator^=(const Gf2Vector& o) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
        return *this;
    }
    bool is_zero() const {
        for (uint64_t w : words_)
            if (w) return false;
        return true;
    }
    // Index of lowest set bit, or size() if zero.
    std::size_t first_set() const;

    bool operator==(const Gf2Vector&) const = default;

    const std::vector<uint64_t>& words() const { return words_; }
    std::vector<uint64_t>& words() { return words_; }

private:
    std::size_t n_ = 0;
    std::vector<uint64_t> words_;
};

// Dense bit-packed matrix over GF(2), rows stored as Gf2Vector.
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows, Gf2Vector(cols)) {}

    static Gf2Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t i, std::size_t j) const { return data_[i].get(j); }
    void set(std::size_t i, std::size_t j, bool v) { data_[i].set(j, v); }
    const Gf2Vector& row(std::size_t i) const { return data_[i]; }
    Gf2Vector& row(std::size_t i) { return data_[i]; }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    Gf2Matrix operator*(const Gf2Matrix& o) const;
    Gf2Matrix operator+(const Gf2Matrix& o) const;
    // Image of a column vector: M * v.
    Gf2Vector apply(const Gf2Vector& v) const;
    // Row vector times matrix: v * M (used for iterating image bases).
    Gf2Vector apply_row(const Gf2Vector& v) const;

    bool operator==(const Gf2Matrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Gf2Vector> data_;
};

// Subspace of GF(2)^n, stored via its unique reduced-echelon basis.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}
    // Span of the rows of `gens`.
    static Subspace span_of_rows(const Gf2Matrix& gens);
    static Subspace full(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Gf2Vector>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const Gf2Vector& v) const;
    bool contains(const Subspace& other) const;
    void insert(Gf2Vector v);  // grow span by one vector

    bool operator==(const Subspace&) const = default;

private:
    std::size_t ambient_ = 0;
    std::vector<Gf2Vector> basis_;     // reduced echelon rows, pivots increasing
    std::vector<std::size_t> pivots_;  // pivot column of each basis row
};

std::size_t rank(const Gf2Matrix& m);
Subspace kernel(const Gf2Matrix& m);

JordanType jordan_type_nilpotent(const Gf2Matrix& n);
JordanType jordan_type_unipotent(const Gf2Matrix& u);

// Matrix of M restricted to the invariant subspace W, in W's echelon basis.
Gf2Matrix restrict_to(const Gf2Matrix& m, const Subspace& w);
// Matrix of the action induced by M on ambient/W, in the basis of coordinates
// complementary to W's pivots.
Gf2Matrix quotient_by(const Gf2Matrix& m, const Subspace& w);

// True iff Ker(N^m) is contained in W (N nilpotent).
bool kernel_power_contained(const Gf2Matrix& n, std::size_t m, const Subspace& w);

}  // namespace spc2
