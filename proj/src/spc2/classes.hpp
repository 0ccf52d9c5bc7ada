#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "block_arith.hpp"
#include "jordan_type.hpp"

namespace spc2 {

struct ParseError : std::invalid_argument {
    std::size_t position;
    ParseError(std::size_t pos, const std::string& what)
        : std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + what),
          position(pos) {}
};
struct InvalidPart : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Unipotent class of Sp(V): orthogonal sum of W(m) and V(2k) summands.
struct UnipClass {
    std::map<long, long> w;  // m -> multiplicity of W(m)
    std::map<long, long> v;  // k -> multiplicity of V(2k)

    long ell() const;
    bool operator==(const UnipClass&) const = default;
    auto operator<=>(const UnipClass&) const = default;
};

// Nilpotent orbit of sp(V): orthogonal sum of W(m), W_k(l), V(2d) summands.
struct NilpClass {
    std::map<long, long> w;                        // m -> multiplicity of W(m)
    std::map<std::pair<long, long>, long> wk;      // (k, l) -> multiplicity of W_k(l)
    std::map<long, long> v;                        // d -> multiplicity of V(2d)

    long ell() const;
    bool all_w() const { return wk.empty() && v.empty(); }
    bool operator==(const NilpClass&) const = default;
    auto operator<=>(const NilpClass&) const = default;
};

using AnyClass = std::variant<UnipClass, NilpClass>;

// Canonical orbit invariant: (block size d, multiplicity n, index chi(d)),
// strictly increasing in d.
struct HesselinkSymbol {
    struct Entry {
        long d;
        long n;
        long chi;
        bool operator==(const Entry&) const = default;
        auto operator<=>(const Entry&) const = default;
    };
    std::vector<Entry> entries;

    // Checks chi monotonicity, d - chi monotonicity, 0 <= chi <= d/2, and
    // chi = d/2 for odd multiplicities.
    bool satisfies_constraints() const;

    bool operator==(const HesselinkSymbol&) const = default;
    auto operator<=>(const HesselinkSymbol&) const = default;
};

AnyClass parse_decomp(const std::string& text, Kind kind);

UnipClass canonicalize_unip(UnipClass c);
NilpClass canonicalize_nilp(NilpClass c);

std::vector<UnipClass> enumerate_unip(long ell);
std::vector<NilpClass> enumerate_nilp(long ell);

// Index function of a single orthogonally indecomposable nilpotent summand,
// evaluated at m.  W(l) has identically zero index and is omitted.
long chi_V(long d, long m);           // V(2d)
long chi_Wk(long k, long l, long m);  // W_k(l)

JordanType jordan_type_V(const UnipClass& c);
JordanType jordan_type_V(const NilpClass& c);

long alpha_of(const UnipClass& c);
long alpha_of(const NilpClass& c);
std::optional<long> beta_of(const UnipClass& c);

std::string render_decomp(const UnipClass& c);
std::string render_decomp(const NilpClass& c);

}  // namespace spc2
