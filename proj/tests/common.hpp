#pragma once

#include <cstdint>
#include <vector>

#include "padic/random.hpp"

namespace testutil {

// Exhaustive root search over F_p; the independent oracle for the
// Euler/Tonelli-Shanks path.
inline std::vector<std::int64_t> exhaustive_roots(std::int64_t a, std::int64_t p) {
    std::vector<std::int64_t> roots;
    a = ((a % p) + p) % p;
    for (std::int64_t r = 0; r < p; ++r)
        if (r * r % p == a) roots.push_back(r);
    return roots;
}

inline padic::FieldDescriptor fp(std::int64_t p) {
    return padic::FieldDescriptor::prime_field(p);
}

inline padic::FieldDescriptor qp(std::int64_t p, std::int32_t precision = 20) {
    return padic::FieldDescriptor::padic_field(p, precision);
}

} // namespace testutil
