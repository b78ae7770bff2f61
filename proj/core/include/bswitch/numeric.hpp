#pragma once

#include <string>
#include <vector>

namespace bswitch {

/// x^n by binary exponentiation. Deterministic (no libm), exact for n = 0, 1.
double ipow(double x, unsigned n);

/// Binomial coefficient as a double via the multiplicative formula.
/// Relative error grows like k*eps; adequate for basis evaluation up to
/// degrees of a few thousand.
double binomial_real(unsigned n, unsigned k);

/// Row n of Pascal's triangle. Entries are exact integers in double
/// precision for n <= 56 (C(56,28) < 2^53).
std::vector<double> binomial_row(unsigned n);

/// Shortest decimal string that parses back to exactly `v`.
/// Used everywhere a double reaches a file so output is byte-reproducible.
std::string repr(double v);

}  // namespace bswitch
