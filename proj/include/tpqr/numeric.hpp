#pragma once

#include <gmpxx.h>

#include <string>

namespace tpqr {

// Exact scalars. All integer data is arbitrary precision; rationals appear
// transiently in quiver reduction and basis changes and never leak into
// exported integer results unchecked.
using Int = mpz_class;
using Rat = mpq_class;

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int to_int(const Rat& q) {
    if (!is_integer(q)) throw std::invalid_argument("to_int: non-integral rational " + q.get_str());
    return q.get_num();
}

inline std::string to_string(const Int& v) { return v.get_str(); }
inline std::string to_string(const Rat& v) { return v.get_str(); }

} // namespace tpqr
