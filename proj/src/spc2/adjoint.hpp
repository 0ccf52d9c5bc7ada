#pragma once

#include <optional>
#include <string>

#include "classes.hpp"

namespace spc2 {

struct MissingBlock : std::logic_error {
    using std::logic_error::logic_error;
};

// One fully computed row: the class together with its Jordan types on the
// natural module V, on g_sc, on [g_ad, g_ad], and on g_ad, plus the
// invariants alpha, beta and the centralizer dimensions.
struct AdjointReport {
    Kind kind;
    std::string decomposition;
    long ell;
    JordanType type_V;
    JordanType type_gsc;
    JordanType type_derived;
    JordanType type_gad;
    long alpha;
    std::optional<long> beta;
    long dim_cent_sc;
    long dim_cent_ad;
};

JordanType type_gsc(const UnipClass& c);
JordanType type_gsc(const NilpClass& c);

JordanType type_derived(const UnipClass& c);
JordanType type_derived(const NilpClass& c);

JordanType type_gad_unip(const UnipClass& c);
JordanType type_gad_nilp(const NilpClass& c);

std::pair<long, long> centralizer_dims(const UnipClass& c);
std::pair<long, long> centralizer_dims(const NilpClass& c);

AdjointReport report(const UnipClass& c);
AdjointReport report(const NilpClass& c);

}  // namespace spc2
