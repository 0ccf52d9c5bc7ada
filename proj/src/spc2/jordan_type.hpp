#pragma once

#include <cctype>
#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

namespace spc2 {

// Multiset of Jordan block sizes. Size-0 entries are silently dropped, so the
// zero module is the empty type.
class JordanType {
public:
    JordanType() = default;

    void add(long size, long mult = 1) {
        if (size < 0 || mult < 0) throw std::invalid_argument("negative block size or multiplicity");
        if (size == 0 || mult == 0) return;
        blocks_[size] += mult;
    }
    void add(const JordanType& other) {
        for (auto [s, m] : other.blocks_) blocks_[s] += m;
    }
    // Remove one block of the given size; throws if absent.
    void remove(long size) {
        auto it = blocks_.find(size);
        if (it == blocks_.end()) throw std::invalid_argument("no block of size " + std::to_string(size));
        if (--it->second == 0) blocks_.erase(it);
    }
    bool has(long size) const { return blocks_.count(size) != 0; }
    long multiplicity(long size) const {
        auto it = blocks_.find(size);
        return it == blocks_.end() ? 0 : it->second;
    }

    long dim() const {
        long d = 0;
        for (auto [s, m] : blocks_) d += s * m;
        return d;
    }
    long num_blocks() const {
        long c = 0;
        for (auto [s, m] : blocks_) c += m;
        return c;
    }
    bool empty() const { return blocks_.empty(); }
    long min_size() const { return blocks_.empty() ? 0 : blocks_.rbegin()->first; }
    long max_size() const { return blocks_.empty() ? 0 : blocks_.begin()->first; }

    // (size, multiplicity) pairs, sizes descending.
    const std::map<long, long, std::greater<long>>& entries() const { return blocks_; }

    bool operator==(const JordanType&) const = default;
    // Lexicographic on the descending (size, multiplicity) sequence; gives a
    // stable total order for deterministic output.
    bool operator<(const JordanType& o) const { return blocks_ < o.blocks_; }

private:
    std::map<long, long, std::greater<long>> blocks_;
};

// Ascending "1^3,2,4^4" rendering.
inline std::string render_type(const JordanType& t) {
    std::string out;
    const auto& e = t.entries();
    for (auto it = e.rbegin(); it != e.rend(); ++it) {
        if (!out.empty()) out += ',';
        out += std::to_string(it->first);
        if (it->second > 1) out += '^' + std::to_string(it->second);
    }
    return out;
}

// Parses the render_type format back into a type (for frozen expected values).
inline JordanType parse_type(const std::string& s) {
    JordanType t;
    std::size_t i = 0;
    auto number = [&] {
        if (i >= s.size() || !isdigit(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument("expected a number in block-size list at position " +
                                        std::to_string(i));
        long v = 0;
        while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) v = v * 10 + (s[i++] - '0');
        return v;
    };
    while (i < s.size()) {
        long size = number();
        long mult = 1;
        if (i < s.size() && s[i] == '^') {
            ++i;
            mult = number();
        }
        t.add(size, mult);
        if (i < s.size()) {
            if (s[i] != ',') throw std::invalid_argument("expected ',' in block-size list");
            ++i;
        }
    }
    return t;
}

}  // namespace spc2
