#pragma once

#include <cstdint>

#include "classes.hpp"
#include "gf2.hpp"
#include "matrix_reps.hpp"

namespace spc2 {

struct NonIntegralImage : std::logic_error {
    using std::logic_error::logic_error;
};
struct IntegerOverflow : std::overflow_error {
    using std::overflow_error::overflow_error;
};

enum class Lattice { sc, ad };
enum class ActionMode { multiplicative, derivation };

// Exact-integer square matrix with checked arithmetic (overflow is a hard
// error, never silent wraparound).
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    int64_t get(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, int64_t v) { data_[i * cols_ + j] = v; }
    void add_at(std::size_t i, std::size_t j, int64_t v);

    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<int64_t> data_;
};

// Ordered basis of the lattice L_sc or L_ad inside S^2 of the natural module:
// the n squares (1/2)v_i^2, then the products v_i v_j (i < j) -- for the ad
// lattice the product v_1 v_n is swapped out for delta = (1/2) sum v_i v_{n+1-i}.
struct LatticeBasis {
    std::size_t n;  // dimension 2*ell of the natural module
    Lattice lattice;

    std::size_t size() const { return n * (n + 1) / 2; }
    std::size_t delta_index() const { return size() - 1; }  // ad only
    // Index of the label for the monomial v_i v_j (i <= j, 0-based); for the
    // ad lattice (0, n-1) maps to the delta slot.
    std::size_t monomial_index(std::size_t i, std::size_t j) const;
};

struct LatticeAction {
    LatticeBasis basis;
    IntMatrix matrix;
};

// Integer lift of the class representative acting on the natural lattice,
// in the shared block layout of matrix_reps.
IntMatrix integer_rep_unip(const UnipClass& c);
IntMatrix integer_rep_nilp(const NilpClass& c);

// Action induced on the chosen lattice by A: multiplicative for group
// elements (vw -> (Av)(Aw)), derivation for Lie algebra elements
// (vw -> (Av)w + v(Aw)). Throws NonIntegralImage if the image of a basis
// vector leaves the lattice.
LatticeAction induced_action(const IntMatrix& a, std::size_t n, Lattice lattice, ActionMode mode);

Gf2Matrix reduce_mod2(const LatticeAction& l);
Gf2Matrix reduce_mod2(const IntMatrix& m);

// In the ad basis: the hyperplane spanned by every label except delta.
Subspace derived_subalgebra_subspace(std::size_t n);
// In the sc basis: the vector of 2*delta mod 2 spanning the center.
Gf2Vector center_sc_vector(std::size_t n);

struct OracleTypes {
    JordanType gsc;       // on g_sc
    JordanType gsc_mod_z; // on g_sc / Z(g_sc)
    JordanType derived;   // on [g_ad, g_ad]
    JordanType gad;       // on g_ad
};

OracleTypes oracle_types(const UnipClass& c);
OracleTypes oracle_types(const NilpClass& c);

// Mod-2 actions on g_sc (sc basis) and g_ad (ad basis) for containment checks.
struct Mod2Actions {
    std::size_t n;
    Gf2Matrix sc;
    Gf2Matrix ad;
};
Mod2Actions mod2_actions(const UnipClass& c);
Mod2Actions mod2_actions(const NilpClass& c);

}  // namespace spc2
