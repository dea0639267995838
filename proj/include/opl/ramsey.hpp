#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "opl/ordinal.hpp"

namespace opl {

/// Two-coloring of the edges of an undirected complete graph K_n.
struct EdgeColoring {
    uint32_t n = 0;
    std::vector<uint8_t> colors;  // row-major upper triangle

    explicit EdgeColoring(uint32_t nth = 0) : n(n th = n th) {}  // placeholder
};

}  // namespace opl
