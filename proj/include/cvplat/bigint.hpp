#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace cvplat {

// All arithmetic in this project is exact: distances are carried as integer
// p-th powers and every reduction clears its rational coefficients with an
// integer scale factor, so there is no floating point anywhere.
using Int = mpz_class;

Int int_pow(const Int& base, unsigned long exp);
Int binomial(unsigned long n, unsigned long k);
Int lcm(const Int& a, const Int& b);
Int pow2(unsigned long exp);

// Exact quotient; throws InvalidParameter if b does not divide a.
Int divide_exact(const Int& a, const Int& b);

std::string to_string(const Int& v);

// Strict decimal parse (optional leading '-', digits only).
Int parse_int(const std::string& s);

}  // namespace cvplat
