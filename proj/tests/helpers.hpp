#pragma once

#include "spc2/gf2.hpp"

namespace testutil {

// Single Jordan block: nilpotent shift N e_j = e_{j-1}.
inline spc2::Gf2Matrix nilp_block(std::size_t n) {
    spc2::Gf2Matrix m(n, n);
    for (std::size_t j = 1; j < n; ++j) m.set(j - 1, j, true);
    return m;
}

// Single unipotent Jordan block I + N.
inline spc2::Gf2Matrix unip_block(std::size_t n) {
    spc2::Gf2Matrix m = nilp_block(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

}  // namespace testutil
