#pragma once

#include <cstdint>

namespace mj {

using NodeId = std::uint32_t;
constexpr NodeId kNoNode = 0;

// Half-open byte range plus 1-based line/column of the start.
struct Span {
    std::uint32_t line = 0;
    std::uint32_t column = 0;
    std::uint32_t byte_begin = 0;
    std::uint32_t byte_end = 0;
};

} // namespace mj
