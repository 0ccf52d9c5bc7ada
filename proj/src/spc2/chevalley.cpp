#include "chevalley.hpp"

#include <utility>

namespace spc2 {

namespace {

int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw IntegerOverflow("integer addition overflow");
    return r;
}

int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw IntegerOverflow("integer multiplication overflow");
    return r;
}

}  // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

void IntMatrix::add_at(std::size_t i, std::size_t j, int64_t v) {
    set(i, j, checked_add(get(i, j), v));
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw DimMismatch("incompatible shapes in integer matrix product");
    IntMatrix out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            int64_t a = get(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                out.add_at(i, j, checked_mul(a, o.get(k, j)));
        }
    return out;
}

std::size_t LatticeBasis::monomial_index(std::size_t i, std::size_t j) const {
    if (i == j) return i;
    if (i == 0 && j == n - 1) return size() - 1;
    // Products v_i v_j in lexicographic order of (i, j), with the special
    // pair (0, n-1) moved to the final slot.
    if (i == 0) return n + (j - 1);
    return n + i * (2 * n - i - 1) / 2 + (j - i - 1) - 1;
}

namespace {

// Local column images of the integer representative of a single summand,
// matching the GF(2) builders of matrix_reps block for block but with the
// signs needed over the integers: on the mirror half of a block the isometry
// subtracts the previous basis vector and the nilpotent maps v_j to -v_{j-1}.
void fill_int_unip(IntMatrix& a, const std::vector<std::size_t>& idx, const SummandDesc& sd) {
    long l = sd.half;
    long dim = 2 * l;
    long top = sd.type == SummandDesc::V ? l + 1 : l;
    auto at = [&](long i, long j, int64_t v) {
        a.add_at(idx[std::size_t(i - 1)], idx[std::size_t(j - 1)], v);
    };
    for (long j = 1; j <= dim; ++j) {
        if (j == 1)
            at(1, 1, 1);
        else if (j <= top)
            for (long i = 1; i <= j; ++i) at(i, j, 1);
        else if (j == l + 1)
            at(j, j, 1);  // W(l) only: the middle vector is fixed
        else {
            at(j, j, 1);
            at(j - 1, j, -1);
        }
    }
}

void fill_int_nilp(IntMatrix& a, const std::vector<std::size_t>& idx, const SummandDesc& sd) {
    long l = sd.half;
    long dim = 2 * l;
    auto at = [&](long i, long j, int64_t v) {
        a.add_at(idx[std::size_t(i - 1)], idx[std::size_t(j - 1)], v);
    };
    for (long j = 2; j <= dim; ++j) {
        bool mirror = j > l + 1;
        switch (sd.type) {
            case SummandDesc::V:
                at(j - 1, j, mirror ? -1 : 1);
                break;
            case SummandDesc::W:
                if (j != l + 1) at(j - 1, j, mirror ? -1 : 1);
                break;
            case SummandDesc::Wk:
                if (j == dim - sd.k + 1) {
                    at(j - 1, j, -1);
                    at(sd.k, j, 1);
                } else if (j != l + 1) {
                    at(j - 1, j, mirror ? -1 : 1);
                }
                break;
        }
    }
}

template <typename Class, typename FillFn>
IntMatrix integer_rep(const Class& c, FillFn&& fill) {
    auto summands = summands_of(c);
    std::vector<long> dims;
    for (const auto& s : summands) dims.push_back(2 * s.half);
    auto layout = block_layout(dims);
    std::size_t n = 2 * std::size_t(c.ell());
    IntMatrix a(n, n);
    for (std::size_t b = 0; b < summands.size(); ++b) fill(a, layout[b], summands[b]);
    return a;
}

}  // namespace

IntMatrix integer_rep_unip(const UnipClass& c) {
    return integer_rep(c, [](IntMatrix& a, const std::vector<std::size_t>& idx,
                             const SummandDesc& sd) { fill_int_unip(a, idx, sd); });
}

IntMatrix integer_rep_nilp(const NilpClass& c) {
    return integer_rep(c, [](IntMatrix& a, const std::vector<std::size_t>& idx,
                             const SummandDesc& sd) { fill_int_nilp(a, idx, sd); });
}

namespace {

// Scratch representation of a lattice element: x = (1/2) sum c_{ij} v_i v_j
// over monomials i <= j. Indexed by LatticeBasis::monomial_index so the pair
// (0, n-1) lives in the last slot.
using Doubled = std::vector<int64_t>;

Doubled doubled_of_basis(const LatticeBasis& b, std::size_t index) {
    Doubled c(b.size(), 0);
    if (index == b.delta_index() && b.lattice == Lattice::ad) {
        // delta = (1/2) sum over mirror pairs v_i v_{n-1-i}
        for (std::size_t i = 0; i < b.n / 2; ++i) c[b.monomial_index(i, b.n - 1 - i)] = 1;
    } else if (index < b.n) {
        c[index] = 1;  // (1/2) v_i^2
    } else {
        c[index] = 2;  // v_i v_j = 2 * (1/2) v_i v_j
    }
    return c;
}

}  // namespace

LatticeAction induced_action(const IntMatrix& a, std::size_t n, Lattice lattice, ActionMode mode) {
    if (a.rows() != n || a.cols() != n) throw DimMismatch("endomorphism does not match the natural module");
    LatticeBasis basis{n, lattice};
    std::size_t s = basis.size();

    // pairs[t] = the monomial (i, j), i <= j, stored at slot t.
    std::vector<std::pair<std::size_t, std::size_t>> pairs(s);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) pairs[basis.monomial_index(i, j)] = {i, j};

    IntMatrix out(s, s);
    for (std::size_t col = 0; col < s; ++col) {
        Doubled c = doubled_of_basis(basis, col);
        Doubled d(s, 0);
        auto bump = [&](std::size_t k, std::size_t l, int64_t v) {
            std::size_t idx = basis.monomial_index(std::min(k, l), std::max(k, l));
            d[idx] = checked_add(d[idx], v);
        };
        for (std::size_t t = 0; t < s; ++t) {
            if (c[t] == 0) continue;
            auto [i, j] = pairs[t];
            if (mode == ActionMode::multiplicative) {
                // v_i v_j -> (A v_i)(A v_j)
                for (std::size_t k = 0; k < n; ++k) {
                    if (a.get(k, i) == 0) continue;
                    int64_t ck = checked_mul(c[t], a.get(k, i));
                    for (std::size_t l = 0; l < n; ++l)
                        if (a.get(l, j) != 0) bump(k, l, checked_mul(ck, a.get(l, j)));
                }
            } else {
                // v_i v_j -> (A v_i) v_j + v_i (A v_j)
                for (std::size_t k = 0; k < n; ++k) {
                    if (a.get(k, i) != 0) bump(k, j, checked_mul(c[t], a.get(k, i)));
                    if (a.get(k, j) != 0) bump(i, k, checked_mul(c[t], a.get(k, j)));
                }
            }
        }

        // Convert doubled coordinates back to lattice coordinates.
        if (lattice == Lattice::ad) {
            int64_t delta_coeff = d[basis.delta_index()];
            for (std::size_t i = 0; i < n / 2; ++i) {
                std::size_t idx = basis.monomial_index(i, n - 1 - i);
                d[idx] = checked_add(d[idx], checked_mul(-1, delta_coeff));
            }
            for (std::size_t t = n; t < s; ++t)
                if (d[t] % 2 != 0) throw NonIntegralImage("image leaves the adjoint lattice");
            for (std::size_t t = n; t + 1 < s; ++t) out.set(t, col, d[t] / 2);
            for (std::size_t t = 0; t < n; ++t) out.set(t, col, d[t]);
            out.set(basis.delta_index(), col, delta_coeff);
        } else {
            for (std::size_t t = n; t < s; ++t)
                if (d[t] % 2 != 0) throw NonIntegralImage("image leaves the simply connected lattice");
            for (std::size_t t = 0; t < n; ++t) out.set(t, col, d[t]);
            for (std::size_t t = n; t < s; ++t) out.set(t, col, d[t] / 2);
        }
    }
    return {basis, std::move(out)};
}

Gf2Matrix reduce_mod2(const IntMatrix& m) {
    Gf2Matrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.get(i, j) % 2 != 0) out.set(i, j, true);
    return out;
}

Gf2Matrix reduce_mod2(const LatticeAction& l) { return reduce_mod2(l.matrix); }

Subspace derived_subalgebra_subspace(std::size_t n) {
    LatticeBasis b{n, Lattice::ad};
    Subspace w(b.size());
    for (std::size_t t = 0; t + 1 < b.size(); ++t) {
        Gf2Vector e(b.size());
        e.set(t, true);
        w.insert(std::move(e));
    }
    return w;
}

Gf2Vector center_sc_vector(std::size_t n) {
    LatticeBasis b{n, Lattice::sc};
    // 2*delta = sum over mirror pairs v_i v_{n-1-i}
    Gf2Vector z(b.size());
    for (std::size_t i = 0; i < n / 2; ++i) z.set(b.monomial_index(i, n - 1 - i), true);
    return z;
}

namespace {

template <typename Class>
Mod2Actions mod2_actions_impl(const Class& c, const IntMatrix& a, ActionMode mode) {
    std::size_t n = 2 * std::size_t(c.ell());
    return {n, reduce_mod2(induced_action(a, n, Lattice::sc, mode)),
            reduce_mod2(induced_action(a, n, Lattice::ad, mode))};
}

OracleTypes oracle_types_impl(const Mod2Actions& acts, Kind kind) {
    auto jt = [&](const Gf2Matrix& m) {
        return kind == Kind::unipotent ? jordan_type_unipotent(m) : jordan_type_nilpotent(m);
    };
    OracleTypes out;
    out.gsc = jt(acts.sc);

    Subspace z(acts.sc.cols());
    z.insert(center_sc_vector(acts.n));
    out.gsc_mod_z = jt(quotient_by(acts.sc, z));

    Subspace der = derived_subalgebra_subspace(acts.n);
    out.derived = jt(restrict_to(acts.ad, der));

    out.gad = jt(acts.ad);
    return out;
}

}  // namespace

Mod2Actions mod2_actions(const UnipClass& c) {
    return mod2_actions_impl(c, integer_rep_unip(c), ActionMode::multiplicative);
}

Mod2Actions mod2_actions(const NilpClass& c) {
    return mod2_actions_impl(c, integer_rep_nilp(c), ActionMode::derivation);
}

OracleTypes oracle_types(const UnipClass& c) {
    return oracle_types_impl(mod2_actions(c), Kind::unipotent);
}

OracleTypes oracle_types(const NilpClass& c) {
    return oracle_types_impl(mod2_actions(c), Kind::nilpotent);
}

}  // namespace spc2
