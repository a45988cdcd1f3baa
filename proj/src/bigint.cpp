#include "cvplat/bigint.hpp"

#include <cctype>

#include "cvplat/errors.hpp"

namespace cvplat {

Int int_pow(const Int& base, unsigned long exp) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

Int binomial(unsigned long n, unsigned long k) {
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Int lcm(const Int& a, const Int& b) {
  Int out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

Int pow2(unsigned long exp) {
  Int out;
  mpz_setbit(out.get_mpz_t(), exp);
  return out;
}

Int divide_exact(const Int& a, const Int& b) {
  if (b == 0) throw InvalidParameter("divide_exact: division by zero");
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r != 0)
    throw InvalidParameter("divide_exact: " + to_string(b) +
                           " does not divide " + to_string(a));
  return q;
}

std::string to_string(const Int& v) { return v.get_str(10); }

Int parse_int(const std::string& s) {
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (s.size() == start) throw ParseError("empty integer literal");
  for (std::size_t i = start; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError("bad integer literal: '" + s + "'");
  return Int(s);
}

}  // namespace cvplat
