#pragma once

#include <charconv>
#include <string>

#include "simplicial/types.hpp"

namespace simplicial {

/// Shortest decimal that round-trips the 64-bit float (to_chars).
inline std::string format_double(scalar_t value) {
    char buffer[32];
    auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, ptr);
}

inline std::string format_vector(const vector_t& v) {
    std::string out = "(";
    for (index_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ", ";
        out += format_double(v[i]);
    }
    out += ")";
    return out;
}

}  // namespace simplicial
