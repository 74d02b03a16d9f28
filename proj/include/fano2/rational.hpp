#pragma once

#include <gmpxx.h>
#include <string>

namespace fano2 {

// Exact rational arithmetic everywhere; no floating point in this library.
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Canonical text form: "n" for integers, "n/d" otherwise.
inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

} // namespace fano2
