#pragma once

#include <gmpxx.h>

#include <string>

namespace metra {

/// Exact rational with unbounded integers. mpq_class keeps values in
/// canonical (lowest-terms) form under ordinary arithmetic.
using Rational = mpq_class;

/// Lowest-terms encoding: "p/q", or plain "k" when the denominator is 1.
std::string rational_to_string(const Rational& q);

/// Parses "p/q" or "k". Throws Error("BadRational") on malformed input
/// or a zero denominator.
Rational rational_from_string(const std::string& s);

}  // namespace metra
