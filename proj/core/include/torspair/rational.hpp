#pragma once

#include <gmpxx.h>

#include <string>

#include "torspair/errors.hpp"

namespace torspair {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long p, long q = 1) {
    if (q == 0) throw AlgebraError("division by zero");
    Rat r(p, q);
    r.canonicalize();
    return r;
}

inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

// "p" or "p/q", canonicalized.
Rat rat_from_string(const std::string& s);
std::string rat_to_string(const Rat& r);

}  // namespace torspair
