#pragma once

#include "classes.hpp"
#include "gf2.hpp"

namespace spc2 {

struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};
struct KindMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DimMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A symplectic space over GF(2) together with a unipotent isometry or a
// nilpotent element of its Lie algebra.
struct BilinearSpace {
    Gf2Matrix gram;  // alternating, invertible
    Gf2Matrix op;    // the endomorphism u or e
    Kind kind;

    std::size_t dim() const { return gram.rows(); }
    // u - 1 for unipotent kind, e itself for nilpotent kind.
    Gf2Matrix nilpotent_part() const;
    bool form_compatible() const;
    // b(x, y) with respect to gram.
    bool pairing(const Gf2Vector& x, const Gf2Vector& y) const;
};

// Block layout shared with the integer lattice model: the summands occupy
// nested index ranges so that b(v_i, v_j) = 1 iff i + j = n + 1 globally.
// Returns, per summand, the list of global 0-based indices of its local basis.
std::vector<std::vector<std::size_t>> block_layout(const std::vector<long>& block_dims);

// Deterministic list of summand sizes used by both the GF(2) and the integer
// builders: W parts (largest first), then W_k parts, then V parts.
struct SummandDesc {
    enum Type { W, V, Wk } type;
    long k = 0;    // index k for Wk
    long half;     // l where the summand has dimension 2l
};
std::vector<SummandDesc> summands_of(const UnipClass& c);
std::vector<SummandDesc> summands_of(const NilpClass& c);

BilinearSpace build_unip(const UnipClass& c);
BilinearSpace build_nilp(const NilpClass& c);

// Hesselink index chi_V(m): least t such that b(e^{t+1}v, e^t v) = 0 for all
// v in Ker e^m, where e is the nilpotent part of the space.
long index_function(const BilinearSpace& s, long m);

HesselinkSymbol hesselink_symbol(const BilinearSpace& s);

bool same_orbit(const BilinearSpace& a, const BilinearSpace& b);

// b(ev, v) = 0 for all v, i.e. the quadratic map attached to e vanishes.
bool singular_quadratic(const BilinearSpace& s);

// The same space with e replaced by e^2 (nilpotent kind only).
BilinearSpace square_element(const BilinearSpace& s);

// Kronecker product A (x) B on the basis e_i (x) f_j, index i * cols(B) + j.
Gf2Matrix kronecker(const Gf2Matrix& a, const Gf2Matrix& b);

// Index of the monomial x_i x_j (i <= j) in the S^2 basis, and of the wedge
// x_i /\ x_j (i < j) in the /\^2 basis, both in lexicographic order.
std::size_t sym2_index(std::size_t n, std::size_t i, std::size_t j);
std::size_t ext2_index(std::size_t n, std::size_t i, std::size_t j);

// Action induced by A on S^2 of the natural module (commuting monomials over
// GF(2), so squares map to squares) and on /\^2. For unipotent kind the image
// of a product is the product of images; for nilpotent kind the Leibniz rule.
Gf2Matrix sym2_action(const Gf2Matrix& a, Kind kind);
Gf2Matrix ext2_action(const Gf2Matrix& a, Kind kind);

// The invariant hyperplane Ker phi of S^2, phi(x y) = b(x, y).
Subspace sym2_phi_kernel(const Gf2Matrix& gram);

}  // namespace spc2
