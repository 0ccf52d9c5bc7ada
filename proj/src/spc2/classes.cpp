#include "classes.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace spc2 {

long UnipClass::ell() const {
    long e = 0;
    for (auto [m, mult] : w) e += m * mult;
    for (auto [k, mult] : v) e += k * mult;
    return e;
}

long NilpClass::ell() const {
    long e = 0;
    for (auto [m, mult] : w) e += m * mult;
    for (auto [kl, mult] : wk) e += kl.second * mult;
    for (auto [d, mult] : v) e += d * mult;
    return e;
}

bool HesselinkSymbol::satisfies_constraints() const {
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& [d, n, chi] = entries[i];
        if (chi < 0 || 2 * chi > d) return false;
        if (n % 2 == 1 && 2 * chi != d) return false;
        if (i > 0) {
            const auto& prev = entries[i - 1];
            if (prev.d >= d) return false;
            if (prev.chi > chi) return false;
            if (prev.d - prev.chi > d - chi) return false;
        }
    }
    return true;
}

namespace {

struct Parser {
    const std::string& text;
    std::size_t pos = 0;

    explicit Parser(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    bool literal(const std::string& s) {
        skip_ws();
        if (text.compare(pos, s.size(), s) == 0) {
            pos += s.size();
            return true;
        }
        return false;
    }
    long integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError(pos, "expected an integer");
        return std::stol(text.substr(start, pos - start));
    }
    void expect(char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            throw ParseError(pos, std::string("expected '") + c + "'");
        ++pos;
    }
    bool separator() {
        // "+", the UTF-8 perpendicular sign, or the word "perp".
        return literal("+") || literal("⊥") || literal("perp");
    }
};

struct RawPart {
    enum Type { W, V, Wk } type;
    long k = 0;  // for Wk
    long arg = 0;
};

RawPart parse_part(Parser& p) {
    p.skip_ws();
    std::size_t at = p.pos;
    if (p.literal("W_")) {
        RawPart part{RawPart::Wk};
        part.k = p.integer();
        p.expect('(');
        part.arg = p.integer();
        p.expect(')');
        if (!(0 < part.k && 2 * part.k < part.arg))
            throw InvalidPart("W_" + std::to_string(part.k) + "(" + std::to_string(part.arg) +
                              ") requires 0 < k < l/2");
        return part;
    }
    if (p.literal("W")) {
        RawPart part{RawPart::W};
        p.expect('(');
        part.arg = p.integer();
        p.expect(')');
        if (part.arg < 1) throw InvalidPart("W(m) requires m >= 1");
        return part;
    }
    if (p.literal("V")) {
        RawPart part{RawPart::V};
        p.expect('(');
        part.arg = p.integer();
        p.expect(')');
        if (part.arg < 2 || part.arg % 2 != 0) throw InvalidPart("V(m) requires even m >= 2");
        return part;
    }
    throw ParseError(at, "expected a summand W(m), V(m), or W_k(l)");
}

}  // namespace

AnyClass parse_decomp(const std::string& text, Kind kind) {
    Parser p(text);
    UnipClass uc;
    NilpClass nc;
    bool first = true;
    while (true) {
        if (first) {
            if (p.eof()) throw ParseError(p.pos, "empty decomposition");
        } else {
            if (p.eof()) break;
            if (!p.separator()) throw ParseError(p.pos, "expected '+', '⊥', or 'perp'");
        }
        first = false;
        RawPart part = parse_part(p);
        long power = 1;
        if (p.literal("^")) {
            power = p.integer();
            if (power < 1) throw InvalidPart("exponent must be >= 1");
        }
        switch (part.type) {
            case RawPart::W:
                if (kind == Kind::unipotent)
                    uc.w[part.arg] += power;
                else
                    nc.w[part.arg] += power;
                break;
            case RawPart::V:
                if (kind == Kind::unipotent)
                    uc.v[part.arg / 2] += power;
                else
                    nc.v[part.arg / 2] += power;
                break;
            case RawPart::Wk:
                if (kind == Kind::unipotent)
                    throw InvalidPart("W_k(l) summands only occur for nilpotent elements");
                nc.wk[{part.k, part.arg}] += power;
                break;
        }
    }
    if (kind == Kind::unipotent) return canonicalize_unip(uc);
    return canonicalize_nilp(nc);
}

UnipClass canonicalize_unip(UnipClass c) {
    // V(m)^3 = W(m) + V(m): reduce every V-multiplicity to at most 2.
    for (auto& [k, mult] : c.v) {
        if (mult >= 3) {
            long reductions = (mult - 1) / 2;
            c.w[2 * k] += reductions;
            mult -= 2 * reductions;
        }
    }
    return c;
}

long chi_V(long d, long m) { return std::max(0L, std::min(m - d, d)); }

long chi_Wk(long k, long l, long m) { return std::max(0L, std::min(k, m - l + k)); }

NilpClass canonicalize_nilp(NilpClass c) {
    // The isometry class is determined by the Jordan block sizes together with
    // the index function evaluated at each size, and the index of the whole
    // module is the maximum of the indices of its summands.  A paired summand
    // at block size m is therefore only defined up to the index
    //   K(m) = max over all summands of their index at m,
    // and the canonical label for all pairs at size m is
    //   W(m)        if K(m) = 0,
    //   W_{K(m)}(m) if 0 < K(m) < m/2,
    //   V(m) + V(m) if K(m) = m/2  (which forces m even and V(m) present).
    std::map<long, long> pairs;
    for (auto [m, mult] : c.w) pairs[m] += mult;
    for (auto [kl, mult] : c.wk) pairs[kl.second] += mult;

    std::map<long, long> index;
    for (auto [m, mult] : pairs) {
        long k = 0;
        for (auto [d, vm] : c.v) k = std::max(k, chi_V(d, m));
        for (auto [kl, wm] : c.wk) k = std::max(k, chi_Wk(kl.first, kl.second, m));
        index[m] = k;
    }

    c.w.clear();
    c.wk.clear();
    for (auto [m, mult] : pairs) {
        long k = index[m];
        if (k == 0)
            c.w[m] = mult;
        else if (2 * k < m)
            c.wk[{k, m}] = mult;
        else
            c.v[m / 2] += 2 * mult;
    }
    return c;
}

namespace {

struct NilpPart {
    enum Type { W, V, Wk } type;
    long k = 0;
    long arg = 0;  // m for W, d for V(2d), l for W_k(l)
    long rank() const { return type == V ? arg : arg; }
};

template <typename Part, typename Emit>
void multisets(const std::vector<Part>& parts, std::size_t from, long remaining,
               std::vector<Part>& current, Emit&& emit) {
    if (remaining == 0) {
        emit(current);
        return;
    }
    for (std::size_t i = from; i < parts.size(); ++i) {
        if (parts[i].rank() > remaining) continue;
        current.push_back(parts[i]);
        multisets(parts, i, remaining - parts[i].rank(), current, emit);
        current.pop_back();
    }
}

}  // namespace

std::vector<UnipClass> enumerate_unip(long ell) {
    struct Part {
        bool is_w;
        long arg;  // m for W(m), k for V(2k)
        long rank() const { return arg; }
    };
    std::vector<Part> parts;
    for (long m = 1; m <= ell; ++m) parts.push_back({true, m});
    for (long k = 1; k <= ell; ++k) parts.push_back({false, k});

    std::set<UnipClass> seen;
    std::vector<Part> current;
    multisets(parts, 0, ell, current, [&](const std::vector<Part>& ps) {
        UnipClass c;
        for (const auto& p : ps) {
            if (p.is_w)
                c.w[p.arg] += 1;
            else
                c.v[p.arg] += 1;
        }
        seen.insert(canonicalize_unip(c));
    });

    std::vector<UnipClass> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [](const UnipClass& a, const UnipClass& b) {
        JordanType ta = jordan_type_V(a), tb = jordan_type_V(b);
        if (ta != tb) return tb < ta;  // natural-module Jordan type descending
        return a < b;
    });
    return out;
}

std::vector<NilpClass> enumerate_nilp(long ell) {
    std::vector<NilpPart> parts;
    for (long m = 1; m <= ell; ++m) parts.push_back({NilpPart::W, 0, m});
    for (long d = 1; d <= ell; ++d) parts.push_back({NilpPart::V, 0, d});
    for (long l = 3; l <= ell; ++l)
        for (long k = 1; 2 * k < l; ++k) parts.push_back({NilpPart::Wk, k, l});

    std::set<NilpClass> seen;
    std::vector<NilpPart> current;
    multisets(parts, 0, ell, current, [&](const std::vector<NilpPart>& ps) {
        NilpClass c;
        for (const auto& p : ps) {
            switch (p.type) {
                case NilpPart::W: c.w[p.arg] += 1; break;
                case NilpPart::V: c.v[p.arg] += 1; break;
                case NilpPart::Wk: c.wk[{p.k, p.arg}] += 1; break;
            }
        }
        seen.insert(canonicalize_nilp(c));
    });

    std::vector<NilpClass> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [](const NilpClass& a, const NilpClass& b) {
        JordanType ta = jordan_type_V(a), tb = jordan_type_V(b);
        if (ta != tb) return tb < ta;
        return a < b;
    });
    return out;
}

JordanType jordan_type_V(const UnipClass& c) {
    JordanType t;
    for (auto [m, mult] : c.w) t.add(m, 2 * mult);
    for (auto [k, mult] : c.v) t.add(2 * k, mult);
    return t;
}

JordanType jordan_type_V(const NilpClass& c) {
    JordanType t;
    for (auto [m, mult] : c.w) t.add(m, 2 * mult);
    for (auto [kl, mult] : c.wk) t.add(kl.second, 2 * mult);
    for (auto [d, mult] : c.v) t.add(2 * d, mult);
    return t;
}

long alpha_of(const UnipClass& c) {
    // Largest a with 2^a dividing every m_i and k_j.
    int a = 63;
    for (auto [m, mult] : c.w) a = std::min(a, nu2(m));
    for (auto [k, mult] : c.v) a = std::min(a, nu2(k));
    return a == 63 ? 0 : a;
}

long alpha_of(const NilpClass& c) {
    // Largest a with 2^a dividing every m_i, l_j and 2d_r.
    int a = 63;
    for (auto [m, mult] : c.w) a = std::min(a, nu2(m));
    for (auto [kl, mult] : c.wk) a = std::min(a, nu2(kl.second));
    for (auto [d, mult] : c.v) a = std::min(a, nu2(2 * d));
    return a == 63 ? 0 : a;
}

std::optional<long> beta_of(const UnipClass& c) {
    if (c.v.empty()) return std::nullopt;
    long b = 0;
    for (auto [k, mult] : c.v) b = std::max<long>(b, nu2(k));
    return b;
}

namespace {

void append_part(std::string& s, const std::string& part, long mult) {
    if (!s.empty()) s += " + ";
    s += part;
    if (mult > 1) s += "^" + std::to_string(mult);
}

}  // namespace

std::string render_decomp(const UnipClass& c) {
    std::string s;
    for (auto it = c.w.rbegin(); it != c.w.rend(); ++it)
        append_part(s, "W(" + std::to_string(it->first) + ")", it->second);
    for (auto it = c.v.rbegin(); it != c.v.rend(); ++it)
        append_part(s, "V(" + std::to_string(2 * it->first) + ")", it->second);
    return s;
}

std::string render_decomp(const NilpClass& c) {
    std::string s;
    for (auto it = c.w.rbegin(); it != c.w.rend(); ++it)
        append_part(s, "W(" + std::to_string(it->first) + ")", it->second);
    for (auto it = c.wk.rbegin(); it != c.wk.rend(); ++it)
        append_part(s,
                    "W_" + std::to_string(it->first.first) + "(" + std::to_string(it->first.second) + ")",
                    it->second);
    for (auto it = c.v.rbegin(); it != c.v.rend(); ++it)
        append_part(s, "V(" + std::to_string(2 * it->first) + ")", it->second);
    return s;
}

}  // namespace spc2
