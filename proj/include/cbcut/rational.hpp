#pragma once

#include <gmpxx.h>

#include <string>

namespace cbcut {

// Exact rational number. All weights, penalties, cut values, LP coefficients
// and certificates in this library are Rat; doubles appear only in heatmap
// rendering and in the iterative l2 projection.
using Rat = mpq_class;

// Parses "p/q", "p", or a plain decimal like "1.25" / "-0.5" (converted
// exactly by place value). No exponent notation.
Rat rat_parse(const std::string& text);

// Canonical lossless form: "p/q", or "p" when the denominator is 1.
std::string rat_str(const Rat& x);

// Fixed-point decimal rendering with the given number of significant digits,
// rounded half away from zero. Used for CSV output.
std::string rat_decimal(const Rat& x, int significant_digits);

double rat_double(const Rat& x);

inline Rat rat_of(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace cbcut
