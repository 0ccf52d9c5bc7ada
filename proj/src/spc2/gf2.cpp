#include "gf2.hpp"

#include <bit>

namespace spc2 {

std::size_t Gf2Vector::first_set() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w]) return (w << 6) + std::countr_zero(words_[w]);
    return n_;
}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
    Gf2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

bool Gf2Matrix::is_zero() const {
    for (const auto& r : data_)
        if (!r.is_zero()) return false;
    return true;
}

Gf2Matrix Gf2Matrix::operator*(const Gf2Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("dimension mismatch in matrix product");
    Gf2Matrix out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        const auto& words = data_[i].words();
        for (std::size_t w = 0; w < words.size(); ++w) {
            uint64_t bits = words[w];
            while (bits) {
                std::size_t k = (w << 6) + std::countr_zero(bits);
                bits &= bits - 1;
                out.data_[i] ^= o.data_[k];
            }
        }
    }
    return out;
}

Gf2Matrix Gf2Matrix::operator+(const Gf2Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("dimension mismatch in matrix sum");
    Gf2Matrix out = *this;
    for (std::size_t i = 0; i < rows_; ++i) out.data_[i] ^= o.data_[i];
    return out;
}

Gf2Vector Gf2Matrix::apply(const Gf2Vector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("dimension mismatch in matrix-vector product");
    Gf2Vector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        uint64_t acc = 0;
        const auto& rw = data_[i].words();
        const auto& vw = v.words();
        for (std::size_t w = 0; w < rw.size(); ++w) acc ^= rw[w] & vw[w];
        out.set(i, std::popcount(acc) & 1);
    }
    return out;
}

Gf2Vector Gf2Matrix::apply_row(const Gf2Vector& v) const {
    if (v.size() != rows_) throw std::invalid_argument("dimension mismatch in vector-matrix product");
    Gf2Vector out(cols_);
    const auto& vw = v.words();
    for (std::size_t w = 0; w < vw.size(); ++w) {
        uint64_t bits = vw[w];
        while (bits) {
            std::size_t k = (w << 6) + std::countr_zero(bits);
            bits &= bits - 1;
            out ^= data_[k];
        }
    }
    return out;
}

void Subspace::insert(Gf2Vector v) {
    // Reduce against current echelon rows, then re-reduce rows above the new pivot.
    for (std::size_t r = 0; r < basis_.size(); ++r)
        if (v.get(pivots_[r])) v ^= basis_[r];
    std::size_t p = v.first_set();
    if (p == v.size()) return;  // already in span
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
    basis_.insert(basis_.begin() + pos, v);
    pivots_.insert(pivots_.begin() + pos, p);
    for (std::size_t r = 0; r < pos; ++r)
        if (basis_[r].get(p)) basis_[r] ^= basis_[pos];
}

Subspace Subspace::span_of_rows(const Gf2Matrix& gens) {
    Subspace s(gens.cols());
    for (std::size_t i = 0; i < gens.rows(); ++i) s.insert(gens.row(i));
    return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
    return span_of_rows(Gf2Matrix::identity(ambient_dim));
}

bool Subspace::contains(const Gf2Vector& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("ambient dimension mismatch");
    Gf2Vector w = v;
    for (std::size_t r = 0; r < basis_.size(); ++r)
        if (w.get(pivots_[r])) w ^= basis_[r];
    return w.is_zero();
}

bool Subspace::contains(const Subspace& other) const {
    for (const auto& b : other.basis_)
        if (!contains(b)) return false;
    return true;
}

std::size_t rank(const Gf2Matrix& m) {
    return Subspace::span_of_rows(m).dim();
}

Subspace kernel(const Gf2Matrix& m) {
    // Eliminate on columns of m by row-reducing the transpose-free way:
    // run Gaussian elimination on rows of [m^T | I] conceptually. Simpler:
    // reduce the columns as vectors. We row-reduce the matrix and track
    // which variables are free, then back-substitute.
    std::size_t nr = m.rows(), nc = m.cols();
    // Copy rows for elimination.
    std::vector<Gf2Vector> rows;
    rows.reserve(nr);
    for (std::size_t i = 0; i < nr; ++i) rows.push_back(m.row(i));
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t sel = r;
        while (sel < nr && !rows[sel].get(c)) ++sel;
        if (sel == nr) continue;
        std::swap(rows[r], rows[sel]);
        for (std::size_t i = 0; i < nr; ++i)
            if (i != r && rows[i].get(c)) rows[i] ^= rows[r];
        pivot_col.push_back(c);
        ++r;
    }
    Subspace ker(nc);
    std::vector<bool> is_pivot(nc, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    for (std::size_t c = 0; c < nc; ++c) {
        if (is_pivot[c]) continue;
        Gf2Vector v(nc);
        v.set(c, true);
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            if (rows[i].get(c)) v.set(pivot_col[i], true);
        ker.insert(v);
    }
    return ker;
}

namespace {

// Rank sequence r_k = rank(N^k) for k = 0, 1, ... until N^k = 0, computed by
// iterating an image basis (cheaper than forming matrix powers).
std::vector<std::size_t> rank_sequence(const Gf2Matrix& n) {
    std::size_t dim = n.rows();
    std::vector<std::size_t> ranks{dim};
    // Current basis of Im(N^k) as echelon rows.
    Subspace image = Subspace::full(dim);
    while (image.dim() > 0) {
        Subspace next(dim);
        for (const auto& b : image.basis()) next.insert(n.apply_row(b));
        // A stalled nonzero rank sequence can never reach zero.
        if (next.dim() == image.dim()) throw NotNilpotent("matrix is not nilpotent");
        image = std::move(next);
        ranks.push_back(image.dim());
    }
    return ranks;
}

}  // namespace

JordanType jordan_type_nilpotent(const Gf2Matrix& n) {
    if (!n.is_square()) throw NotSquare("jordan_type_nilpotent requires a square matrix");
    // apply_row iterates v -> v*N, whose rank sequence equals that of N.
    auto ranks = rank_sequence(n);
    if (ranks.back() != 0) throw NotNilpotent("matrix is not nilpotent");
    JordanType t;
    // Number of blocks of size >= k is r_{k-1} - r_k.
    ranks.push_back(0);
    for (std::size_t k = 1; k + 1 < ranks.size(); ++k) {
        long atleast_k = long(ranks[k - 1]) - long(ranks[k]);
        long atleast_k1 = long(ranks[k]) - long(ranks[k + 1]);
        t.add(long(k), atleast_k - atleast_k1);
    }
    return t;
}

JordanType jordan_type_unipotent(const Gf2Matrix& u) {
    if (!u.is_square()) throw NotSquare("jordan_type_unipotent requires a square matrix");
    Gf2Matrix n = u + Gf2Matrix::identity(u.rows());
    try {
        return jordan_type_nilpotent(n);
    } catch (const NotNilpotent&) {
        throw NotUnipotent("matrix is not unipotent");
    }
}

Gf2Matrix restrict_to(const Gf2Matrix& m, const Subspace& w) {
    if (!m.is_square() || m.cols() != w.ambient_dim())
        throw std::invalid_argument("restrict: dimension mismatch");
    std::size_t k = w.dim();
    Gf2Matrix out(k, k);
    for (std::size_t j = 0; j < k; ++j) {
        Gf2Vector img = m.apply(w.basis()[j]);
        // Coordinates in the reduced echelon basis are read off at the pivots.
        Gf2Vector residue = img;
        for (std::size_t i = 0; i < k; ++i) {
            if (residue.get(w.pivots()[i])) {
                out.set(i, j, true);
                residue ^= w.basis()[i];
            }
        }
        if (!residue.is_zero()) throw NotInvariant("subspace is not invariant under the matrix");
    }
    return out;
}

Gf2Matrix quotient_by(const Gf2Matrix& m, const Subspace& w) {
    if (!m.is_square() || m.cols() != w.ambient_dim())
        throw std::invalid_argument("quotient: dimension mismatch");
    // First check invariance.
    for (const auto& b : w.basis())
        if (!w.contains(m.apply(b))) throw NotInvariant("subspace is not invariant under the matrix");
    std::size_t n = w.ambient_dim();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : w.pivots()) is_pivot[p] = true;
    std::vector<std::size_t> comp;  // coordinates completing W to a basis
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) comp.push_back(c);
    std::size_t q = comp.size();
    Gf2Matrix out(q, q);
    for (std::size_t j = 0; j < q; ++j) {
        Gf2Vector e(n);
        e.set(comp[j], true);
        Gf2Vector img = m.apply(e);
        // Reduce modulo W, then read off complementary coordinates.
        for (std::size_t i = 0; i < w.dim(); ++i)
            if (img.get(w.pivots()[i])) img ^= w.basis()[i];
        for (std::size_t i = 0; i < q; ++i) out.set(i, j, img.get(comp[i]));
    }
    return out;
}

bool kernel_power_contained(const Gf2Matrix& n, std::size_t m, const Subspace& w) {
    if (!n.is_square()) throw NotSquare("kernel_power_contained requires a square matrix");
    Gf2Matrix p = Gf2Matrix::identity(n.rows());
    for (std::size_t i = 0; i < m; ++i) p = n * p;
    // Nilpotency check (precondition).
    Gf2Matrix q = p;
    std::size_t steps = 0;
    while (!q.is_zero()) {
        if (++steps > n.rows()) throw NotNilpotent("matrix is not nilpotent");
        q = q * n;
    }
    return w.contains(kernel(p));
}

}  // namespace spc2
