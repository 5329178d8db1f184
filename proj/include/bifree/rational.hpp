#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace bifree {

/// Exact rational coefficient type. All series and lattice computations in
/// this library are carried out over Q with arbitrary-precision integers;
/// there are no tolerances anywhere.
using Rat = mpq_class;
using Int = mpz_class;

/// Builds a canonical rational from a numerator/denominator pair.
Rat make_rat(long num, long den = 1);

/// Parses "n" or "n/d" (decimal strings) into a canonical rational.
Rat rat_from_string(const std::string& s);

/// Formats as "n" or "n/d".
std::string rat_to_string(const Rat& r);

/// n-th Catalan number, C(2n,n)/(n+1). Used as the independent counting
/// oracle for non-crossing enumeration.
Int catalan(int n);

}  // namespace bifree
