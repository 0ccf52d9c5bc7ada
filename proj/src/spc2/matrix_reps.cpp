#include "matrix_reps.hpp"

#include <bit>

namespace spc2 {

namespace {

Gf2Matrix transpose(const Gf2Matrix& m) {
    Gf2Matrix out(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.get(i, j)) out.set(j, i, true);
    return out;
}

Gf2Matrix standard_gram(std::size_t n) {
    Gf2Matrix g(n, n);
    for (std::size_t i = 0; i < n; ++i) g.set(i, n - 1 - i, true);
    return g;
}

}  // namespace

Gf2Matrix BilinearSpace::nilpotent_part() const {
    if (kind == Kind::unipotent) return op + Gf2Matrix::identity(dim());
    return op;
}

bool BilinearSpace::form_compatible() const {
    Gf2Matrix t = transpose(op);
    if (kind == Kind::unipotent) return t * gram * op == gram;
    return t * gram == gram * op;
}

bool BilinearSpace::pairing(const Gf2Vector& x, const Gf2Vector& y) const {
    Gf2Vector gy = gram.apply(y);
    uint64_t acc = 0;
    for (std::size_t w = 0; w < x.words().size(); ++w) acc ^= x.words()[w] & gy.words()[w];
    return std::popcount(acc) & 1;
}

std::vector<std::vector<std::size_t>> block_layout(const std::vector<long>& block_dims) {
    std::size_t n = 0;
    for (long d : block_dims) n += std::size_t(d);
    std::vector<std::vector<std::size_t>> layout;
    std::size_t front = 0;
    for (long d : block_dims) {
        std::size_t m = std::size_t(d) / 2;
        std::vector<std::size_t> idx(d);
        for (std::size_t i = 0; i < m; ++i) idx[i] = front + i;
        // Mirror half: local pair (i, d-1-i) must land on a global mirror pair.
        for (std::size_t i = m; i < std::size_t(d); ++i) idx[i] = n - 1 - idx[d - 1 - i];
        layout.push_back(std::move(idx));
        front += m;
    }
    return layout;
}

std::vector<SummandDesc> summands_of(const UnipClass& c) {
    std::vector<SummandDesc> out;
    for (auto it = c.w.rbegin(); it != c.w.rend(); ++it)
        for (long r = 0; r < it->second; ++r) out.push_back({SummandDesc::W, 0, it->first});
    for (auto it = c.v.rbegin(); it != c.v.rend(); ++it)
        for (long r = 0; r < it->second; ++r) out.push_back({SummandDesc::V, 0, it->first});
    return out;
}

std::vector<SummandDesc> summands_of(const NilpClass& c) {
    std::vector<SummandDesc> out;
    for (auto it = c.w.rbegin(); it != c.w.rend(); ++it)
        for (long r = 0; r < it->second; ++r) out.push_back({SummandDesc::W, 0, it->first});
    for (auto it = c.wk.rbegin(); it != c.wk.rend(); ++it)
        for (long r = 0; r < it->second; ++r)
            out.push_back({SummandDesc::Wk, it->first.first, it->first.second});
    for (auto it = c.v.rbegin(); it != c.v.rend(); ++it)
        for (long r = 0; r < it->second; ++r) out.push_back({SummandDesc::V, 0, it->first});
    return out;
}

namespace {

std::vector<long> dims_of(const std::vector<SummandDesc>& summands) {
    std::vector<long> dims;
    for (const auto& s : summands) dims.push_back(2 * s.half);
    return dims;
}

// Writes the local action of one summand into the global matrix. `image` is
// called with (local 1-based column j) and must fill a list of local 1-based
// row indices carrying a 1.
template <typename ImageFn>
void fill_block(Gf2Matrix& op, const std::vector<std::size_t>& idx, long dim, ImageFn&& image) {
    for (long j = 1; j <= dim; ++j)
        for (long i : image(j)) op.set(idx[std::size_t(i - 1)], idx[std::size_t(j - 1)], true);
}

}  // namespace

BilinearSpace build_unip(const UnipClass& c) {
    auto summands = summands_of(c);
    auto layout = block_layout(dims_of(summands));
    std::size_t n = 2 * std::size_t(c.ell());
    Gf2Matrix op(n, n);
    for (std::size_t b = 0; b < summands.size(); ++b) {
        long l = summands[b].half;
        long dim = 2 * l;
        bool is_v = summands[b].type == SummandDesc::V;
        fill_block(op, layout[b], dim, [&](long j) {
            std::vector<long> rows;
            long top = is_v ? l + 1 : l;  // u v_j = v_j + ... + v_1 for 1 < j <= top
            if (j == 1) {
                rows = {1};
            } else if (j <= top) {
                for (long i = 1; i <= j; ++i) rows.push_back(i);
            } else if (j == l + 1) {
                rows = {l + 1};  // only reachable for W(l)
            } else {
                rows = {j, j - 1};
            }
            return rows;
        });
    }
    BilinearSpace s{standard_gram(n), std::move(op), Kind::unipotent};
    if (!s.form_compatible()) throw InvariantViolation("unipotent representative does not preserve the form");
    return s;
}

BilinearSpace build_nilp(const NilpClass& c) {
    auto summands = summands_of(c);
    auto layout = block_layout(dims_of(summands));
    std::size_t n = 2 * std::size_t(c.ell());
    Gf2Matrix op(n, n);
    for (std::size_t b = 0; b < summands.size(); ++b) {
        const auto& sd = summands[b];
        long l = sd.half;
        long dim = 2 * l;
        fill_block(op, layout[b], dim, [&](long j) {
            std::vector<long> rows;
            switch (sd.type) {
                case SummandDesc::V:
                    if (j > 1) rows = {j - 1};
                    break;
                case SummandDesc::W:
                    if (j != 1 && j != l + 1) rows = {j - 1};
                    break;
                case SummandDesc::Wk:
                    if (j == dim - sd.k + 1)
                        rows = {dim - sd.k, sd.k};
                    else if (j != 1 && j != l + 1)
                        rows = {j - 1};
                    break;
            }
            return rows;
        });
    }
    BilinearSpace s{standard_gram(n), std::move(op), Kind::nilpotent};
    if (!s.form_compatible()) throw InvariantViolation("nilpotent representative is not in sp(V)");
    return s;
}

long index_function(const BilinearSpace& s, long m) {
    Gf2Matrix e = s.nilpotent_part();
    std::size_t n = s.dim();
    Gf2Matrix p = Gf2Matrix::identity(n);
    for (long i = 0; i < std::min<long>(m, long(n)); ++i) p = e * p;
    Subspace ker = kernel(p);

    // Iterated images e^t b_i of the echelon basis of Ker e^m.
    std::vector<Gf2Vector> cur(ker.basis().begin(), ker.basis().end());
    std::vector<Gf2Vector> nxt;
    long bound = (m + 1) / 2 + 1;
    for (long t = 0; t <= bound; ++t) {
        nxt.clear();
        for (const auto& x : cur) nxt.push_back(e.apply(x));
        // Q_t vanishes identically iff it vanishes on the basis and all
        // polarization cross terms vanish (char 2: Q is not additive).
        bool vanishes = true;
        for (std::size_t i = 0; i < cur.size() && vanishes; ++i)
            if (s.pairing(nxt[i], cur[i])) vanishes = false;
        for (std::size_t i = 0; i < cur.size() && vanishes; ++i)
            for (std::size_t j = i + 1; j < cur.size() && vanishes; ++j)
                if (s.pairing(nxt[i], cur[j]) ^ s.pairing(nxt[j], cur[i])) vanishes = false;
        if (vanishes) return t;
        cur = nxt;
    }
    throw InvariantViolation("index function exceeded its theoretical bound");
}

HesselinkSymbol hesselink_symbol(const BilinearSpace& s) {
    JordanType jt = jordan_type_nilpotent(s.nilpotent_part());
    HesselinkSymbol sym;
    // entries() iterates sizes descending; the symbol wants them ascending.
    for (auto it = jt.entries().rbegin(); it != jt.entries().rend(); ++it)
        sym.entries.push_back({it->first, it->second, index_function(s, it->first)});
    if (!sym.satisfies_constraints())
        throw InvariantViolation("computed symbol violates the classification constraints");
    return sym;
}

bool same_orbit(const BilinearSpace& a, const BilinearSpace& b) {
    if (a.kind != b.kind) throw KindMismatch("cannot compare unipotent and nilpotent spaces");
    if (a.dim() != b.dim()) throw DimMismatch("spaces have different dimensions");
    return hesselink_symbol(a) == hesselink_symbol(b);
}

bool singular_quadratic(const BilinearSpace& s) {
    Gf2Matrix e = s.nilpotent_part();
    std::size_t n = s.dim();
    std::vector<Gf2Vector> basis, image;
    for (std::size_t i = 0; i < n; ++i) {
        Gf2Vector v(n);
        v.set(i, true);
        image.push_back(e.apply(v));
        basis.push_back(std::move(v));
    }
    for (std::size_t i = 0; i < n; ++i)
        if (s.pairing(image[i], basis[i])) return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (s.pairing(image[i], basis[j]) ^ s.pairing(image[j], basis[i])) return false;
    return true;
}

BilinearSpace square_element(const BilinearSpace& s) {
    if (s.kind != Kind::nilpotent) throw KindMismatch("square_element expects a nilpotent space");
    return {s.gram, s.op * s.op, Kind::nilpotent};
}

Gf2Matrix kronecker(const Gf2Matrix& a, const Gf2Matrix& b) {
    Gf2Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (!a.get(i, j)) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (b.get(k, l)) out.set(i * b.rows() + k, j * b.cols() + l, true);
        }
    return out;
}

std::size_t sym2_index(std::size_t n, std::size_t i, std::size_t j) {
    return i * n - i * (i + 1) / 2 + j;
}

std::size_t ext2_index(std::size_t n, std::size_t i, std::size_t j) {
    return i * (n - 1) - i * (i - 1) / 2 + (j - i - 1);
}

Gf2Matrix sym2_action(const Gf2Matrix& a, Kind kind) {
    std::size_t n = a.rows();
    std::size_t s = n * (n + 1) / 2;
    Gf2Matrix out(s, s);
    auto flip = [&](std::size_t k, std::size_t l, std::size_t col) {
        out.set(sym2_index(n, std::min(k, l), std::max(k, l)), col,
                !out.get(sym2_index(n, std::min(k, l), std::max(k, l)), col));
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            std::size_t col = sym2_index(n, i, j);
            if (kind == Kind::unipotent) {
                // x_i x_j -> (A x_i)(A x_j); the k = l cross pairs cancel mod 2
                // so squares land on squares (Frobenius).
                for (std::size_t k = 0; k < n; ++k) {
                    if (!a.get(k, i)) continue;
                    for (std::size_t l = 0; l < n; ++l)
                        if (a.get(l, j)) flip(k, l, col);
                }
            } else {
                for (std::size_t k = 0; k < n; ++k) {
                    if (a.get(k, i)) flip(k, j, col);
                    if (a.get(k, j)) flip(i, k, col);
                }
            }
        }
    return out;
}

Gf2Matrix ext2_action(const Gf2Matrix& a, Kind kind) {
    std::size_t n = a.rows();
    std::size_t s = n * (n - 1) / 2;
    Gf2Matrix out(s, s);
    auto flip = [&](std::size_t k, std::size_t l, std::size_t col) {
        if (k == l) return;  // x /\ x = 0
        std::size_t row = ext2_index(n, std::min(k, l), std::max(k, l));
        out.set(row, col, !out.get(row, col));
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            std::size_t col = ext2_index(n, i, j);
            if (kind == Kind::unipotent) {
                for (std::size_t k = 0; k < n; ++k) {
                    if (!a.get(k, i)) continue;
                    for (std::size_t l = 0; l < n; ++l)
                        if (a.get(l, j)) flip(k, l, col);
                }
            } else {
                for (std::size_t k = 0; k < n; ++k) {
                    if (a.get(k, i)) flip(k, j, col);
                    if (a.get(k, j)) flip(i, k, col);
                }
            }
        }
    return out;
}

Subspace sym2_phi_kernel(const Gf2Matrix& gram) {
    std::size_t n = gram.rows();
    Gf2Matrix phi(1, n * (n + 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (gram.get(i, j)) phi.set(0, sym2_index(n, i, j), true);
    return kernel(phi);
}

}  // namespace spc2
