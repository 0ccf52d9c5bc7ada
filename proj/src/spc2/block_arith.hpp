#pragma once

#include <vector>

#include "jordan_type.hpp"

namespace spc2 {

enum class Kind { unipotent, nilpotent };

struct NonPositive : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// 2-adic valuation: largest k with 2^k | a.
int nu2(long a);

// Minimal alternating sum of powers of two, n = 2^{b_1} - 2^{b_2} + ... with
// b_1 > b_2 > ... >= 0 and (if more than one term) b_{r-1} > b_r + 1.
struct ConsecutiveOnesExpansion {
    std::vector<int> exponents;  // b_1 > b_2 > ... >= 0; signs alternate starting +
    long value() const;
    // d_k = 2^{b_k} + sum_{i > k} (-1)^{k+i} 2^{b_i + 1}
    long d(std::size_t k) const;
};
ConsecutiveOnesExpansion consecutive_ones(long n);

// Jordan types of V_m (x) V_n, S^2(V_n), /\^2(V_n) for a unipotent block, and
// the analogues W_m (x) W_n etc. for a nilpotent block, in characteristic 2.
JordanType tensor_unip(long m, long n);
JordanType ext2_unip(long n);
JordanType sym2_unip(long n);

JordanType tensor_nilp(long m, long n);
JordanType square_tensor_nilp(long n);
JordanType ext2_nilp(long n);
JordanType sym2_nilp(long n);

JordanType tensor(long m, long n, Kind kind);
JordanType ext2(long n, Kind kind);
JordanType sym2(long n, Kind kind);

// Distribute over direct sums: S^2(A + B) = S^2(A) + S^2(B) + A (x) B, etc.
JordanType sym2_of_type(const JordanType& t, Kind kind);
JordanType ext2_of_type(const JordanType& t, Kind kind);
JordanType tensor_of_types(const JordanType& s, const JordanType& t, Kind kind);

// Dimension of the fixed-point space = number of Jordan blocks.
long fixed_point_count(const JordanType& t);

}  // namespace spc2
