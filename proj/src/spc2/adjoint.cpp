#include "adjoint.hpp"

namespace spc2 {

namespace {

// Replace one block of size `from` by one of size `to` (dropping it when
// to = 0). The block must exist; its absence means an internal inconsistency
// between the type computation and the case analysis.
JordanType substitute(JordanType t, long from, long to) {
    if (t.multiplicity(from) == 0)
        throw MissingBlock("expected a block of size " + std::to_string(from));
    t.remove(from);
    t.add(to, 1);
    return t;
}

}  // namespace

JordanType type_gsc(const UnipClass& c) {
    return sym2_of_type(jordan_type_V(c), Kind::unipotent);
}

JordanType type_gsc(const NilpClass& c) {
    return sym2_of_type(jordan_type_V(c), Kind::nilpotent);
}

JordanType type_derived(const UnipClass& c) {
    long a = alpha_of(c);
    return substitute(type_gsc(c), 1L << a, (1L << a) - 1);
}

JordanType type_derived(const NilpClass& c) {
    long a = alpha_of(c);
    return substitute(type_gsc(c), 1L << a, (1L << a) - 1);
}

JordanType type_gad_unip(const UnipClass& c) {
    JordanType g = type_gsc(c);
    long a = alpha_of(c);
    if (c.v.empty()) {
        // No V summands: g_ad gains a fixed vector against [g_ad, g_ad].
        if (a == 0) return g;
        g = substitute(g, 1L << a, (1L << a) - 1);
        g.add(1, 1);
        return g;
    }
    long b = *beta_of(c);
    bool case_a = true;  // every nu2(k_j) equals beta and every nu2(m_i) exceeds it
    for (auto [k, mult] : c.v)
        if (nu2(k) != b) case_a = false;
    for (auto [m, mult] : c.w)
        if (nu2(m) <= b) case_a = false;
    if (case_a) return g;
    g = substitute(g, 1L << b, (1L << b) + 1);
    g = substitute(g, 1L << a, (1L << a) - 1);
    return g;
}

JordanType type_gad_nilp(const NilpClass& c) {
    JordanType g = type_gsc(c);
    long a = alpha_of(c);
    if (c.all_w()) {
        if (a == 0) return g;
        g = substitute(g, 1L << a, (1L << a) - 1);
        g.add(1, 1);
        return g;
    }
    if (a == 1) return g;
    // Merge a fixed block with a block of size 2^alpha: one 1 and one 2^alpha
    // become one 2 and one 2^alpha - 1.
    g = substitute(g, 1, 2);
    g = substitute(g, 1L << a, (1L << a) - 1);
    return g;
}

std::pair<long, long> centralizer_dims(const UnipClass& c) {
    return {fixed_point_count(type_gsc(c)), fixed_point_count(type_gad_unip(c))};
}

std::pair<long, long> centralizer_dims(const NilpClass& c) {
    return {fixed_point_count(type_gsc(c)), fixed_point_count(type_gad_nilp(c))};
}

namespace {

template <typename Class>
AdjointReport report_impl(const Class& c, Kind kind, JordanType gad, std::optional<long> beta) {
    AdjointReport r;
    r.kind = kind;
    r.decomposition = render_decomp(c);
    r.ell = c.ell();
    r.type_V = jordan_type_V(c);
    r.type_gsc = type_gsc(c);
    r.type_derived = type_derived(c);
    r.type_gad = std::move(gad);
    r.alpha = alpha_of(c);
    r.beta = beta;
    r.dim_cent_sc = r.type_gsc.num_blocks();
    r.dim_cent_ad = r.type_gad.num_blocks();
    long dim = r.ell * (2 * r.ell + 1);
    if (r.type_gsc.dim() != dim || r.type_gad.dim() != dim || r.type_derived.dim() != dim - 1)
        throw MissingBlock("computed types have inconsistent total dimension");
    return r;
}

}  // namespace

AdjointReport report(const UnipClass& c) {
    return report_impl(c, Kind::unipotent, type_gad_unip(c), beta_of(c));
}

AdjointReport report(const NilpClass& c) {
    return report_impl(c, Kind::nilpotent, type_gad_nilp(c), std::nullopt);
}

}  // namespace spc2
