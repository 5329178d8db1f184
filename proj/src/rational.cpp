#include "bifree/rational.hpp"

#include "bifree/errors.hpp"

namespace bifree {

Rat make_rat(long num, long den) {
  if (den == 0) throw argument_error("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat rat_from_string(const std::string& s) {
  try {
    Rat r(s);
    if (r.get_den() == 0) throw argument_error("rat_from_string: zero denominator");
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw parse_error("rat_from_string: cannot parse '" + s + "'");
  }
}

std::string rat_to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Int catalan(int n) {
  if (n < 0) throw argument_error("catalan: negative index");
  Int binom;
  mpz_bin_uiui(binom.get_mpz_t(), 2ul * static_cast<unsigned long>(n),
               static_cast<unsigned long>(n));
  return binom / (n + 1);
}

}  // namespace bifree
