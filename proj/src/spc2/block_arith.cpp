#include "block_arith.hpp"

#include <bit>
#include <cassert>
#include <map>
#include <mutex>
#include <tuple>

namespace spc2 {

namespace {

long bit_ceil_long(long n) {
    long q = 1;
    while (q < n) q <<= 1;
    return q;
}

void add_scaled(JordanType& acc, const JordanType& t, long factor) {
    for (auto [s, m] : t.entries()) acc.add(s, m * factor);
}

std::mutex memo_mutex;

}  // namespace

int nu2(long a) {
    if (a < 1) throw NonPositive("nu2 requires a positive argument");
    return std::countr_zero(static_cast<unsigned long>(a));
}

long ConsecutiveOnesExpansion::value() const {
    long v = 0, sign = 1;
    for (int b : exponents) {
        v += sign * (1L << b);
        sign = -sign;
    }
    return v;
}

long ConsecutiveOnesExpansion::d(std::size_t k) const {
    long v = 1L << exponents[k];
    long sign = -1;  // (-1)^{k+i} for i = k+1
    for (std::size_t i = k + 1; i < exponents.size(); ++i) {
        v += sign * (1L << (exponents[i] + 1));
        sign = -sign;
    }
    return v;
}

ConsecutiveOnesExpansion consecutive_ones(long n) {
    if (n < 1) throw NonPositive("consecutive_ones requires a positive argument");
    ConsecutiveOnesExpansion e;
    // Greedy: n = q - (q - n) for the least power of two q >= n; the remainder
    // is less than q/2, so exponents strictly decrease and signs alternate.
    while (n > 0) {
        long q = bit_ceil_long(n);
        e.exponents.push_back(std::countr_zero(static_cast<unsigned long>(q)));
        n = q - n;
    }
    return e;
}

JordanType tensor_unip(long m, long n) {
    if (m < 0 || n < 0) throw NonPositive("tensor_unip requires nonnegative arguments");
    if (m > n) std::swap(m, n);
    if (m == 0) return {};

    static std::map<std::pair<long, long>, JordanType> memo;
    {
        std::lock_guard lock(memo_mutex);
        auto it = memo.find({m, n});
        if (it != memo.end()) return it->second;
    }

    long q = bit_ceil_long(n);
    JordanType out;
    if (n == q) {
        out.add(q, m);
    } else if (m + n > q) {
        out.add(q, m + n - q);
        out.add(tensor_unip(q - n, q - m));
    } else {
        // V_m (x) V_{q-n} = sum V_{d_i}; then the result is sum V_{q-d_i}.
        JordanType inner = tensor_unip(m, q - n);
        for (auto [d, mult] : inner.entries()) out.add(q - d, mult);
    }

    std::lock_guard lock(memo_mutex);
    return memo.try_emplace({m, n}, std::move(out)).first->second;
}

JordanType ext2_unip(long n) {
    if (n < 0) throw NonPositive("ext2_unip requires a nonnegative argument");
    if (n <= 1) return {};

    static std::map<long, JordanType> memo;
    {
        std::lock_guard lock(memo_mutex);
        auto it = memo.find(n);
        if (it != memo.end()) return it->second;
    }

    long q = bit_ceil_long(n);
    JordanType out = ext2_unip(q - n);
    out.add(q, n - q / 2 - 1);
    out.add(3 * q / 2 - n, 1);

    std::lock_guard lock(memo_mutex);
    return memo.try_emplace(n, std::move(out)).first->second;
}

JordanType sym2_unip(long n) {
    if (n < 0) throw NonPositive("sym2_unip requires a nonnegative argument");
    if (n == 0) return {};
    if (n == 1) {
        JordanType t;
        t.add(1, 1);
        return t;
    }
    long q = bit_ceil_long(n);
    JordanType out = ext2_unip(q - n);
    out.add(q, n - q / 2);
    out.add(q / 2, 1);
    return out;
}

JordanType tensor_nilp(long m, long n) {
    // W_m (x) W_n decomposes with the same block sizes as V_m (x) V_n.
    return tensor_unip(m, n);
}

JordanType square_tensor_nilp(long n) {
    if (n < 0) throw NonPositive("square_tensor_nilp requires a nonnegative argument");
    if (n == 0) return {};
    auto e = consecutive_ones(n);
    JordanType out;
    for (std::size_t k = 0; k < e.exponents.size(); ++k) out.add(1L << e.exponents[k], e.d(k));
    return out;
}

JordanType ext2_nilp(long n) {
    if (n < 0) throw NonPositive("ext2_nilp requires a nonnegative argument");
    if (n == 0) return {};
    auto e = consecutive_ones(n);
    JordanType out;
    for (std::size_t k = 0; k < e.exponents.size(); ++k) {
        if (e.exponents[k] == 0) continue;
        long dk = e.d(k);
        assert(dk % 2 == 0);
        out.add((1L << e.exponents[k]) - 1, dk / 2);
    }
    return out;
}

JordanType sym2_nilp(long n) {
    if (n < 0) throw NonPositive("sym2_nilp requires a nonnegative argument");
    if (n == 0) return {};
    auto e = consecutive_ones(n);
    JordanType out;
    out.add(1, (n + 1) / 2);
    for (std::size_t k = 0; k < e.exponents.size(); ++k) {
        if (e.exponents[k] == 0) continue;
        long dk = e.d(k);
        assert(dk % 2 == 0);
        out.add(1L << e.exponents[k], dk / 2);
    }
    return out;
}

JordanType tensor(long m, long n, Kind kind) {
    return kind == Kind::unipotent ? tensor_unip(m, n) : tensor_nilp(m, n);
}
JordanType ext2(long n, Kind kind) {
    return kind == Kind::unipotent ? ext2_unip(n) : ext2_nilp(n);
}
JordanType sym2(long n, Kind kind) {
    return kind == Kind::unipotent ? sym2_unip(n) : sym2_nilp(n);
}

JordanType sym2_of_type(const JordanType& t, Kind kind) {
    JordanType out;
    const auto& e = t.entries();
    for (auto it = e.begin(); it != e.end(); ++it) {
        auto [a, ma] = *it;
        add_scaled(out, sym2(a, kind), ma);
        add_scaled(out, tensor(a, a, kind), ma * (ma - 1) / 2);
        for (auto jt = std::next(it); jt != e.end(); ++jt)
            add_scaled(out, tensor(a, jt->first, kind), ma * jt->second);
    }
    return out;
}

JordanType ext2_of_type(const JordanType& t, Kind kind) {
    JordanType out;
    const auto& e = t.entries();
    for (auto it = e.begin(); it != e.end(); ++it) {
        auto [a, ma] = *it;
        add_scaled(out, ext2(a, kind), ma);
        add_scaled(out, tensor(a, a, kind), ma * (ma - 1) / 2);
        for (auto jt = std::next(it); jt != e.end(); ++jt)
            add_scaled(out, tensor(a, jt->first, kind), ma * jt->second);
    }
    return out;
}

JordanType tensor_of_types(const JordanType& s, const JordanType& t, Kind kind) {
    JordanType out;
    for (auto [a, ma] : s.entries())
        for (auto [b, mb] : t.entries()) add_scaled(out, tensor(a, b, kind), ma * mb);
    return out;
}

long fixed_point_count(const JordanType& t) {
    return t.num_blocks();
}

}  // namespace spc2
