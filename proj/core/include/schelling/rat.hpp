#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace schelling {

// Exact rational arithmetic. cpp_rational keeps canonical form (positive
// denominator, reduced) under all arithmetic; no operation here may round.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rat& x) { return numerator(x); }
inline BigInt rat_den(const Rat& x) { return denominator(x); }

// num/den with any signs; den must be nonzero.
Rat make_rat(const BigInt& num, const BigInt& den);

// Always "num/den", integers included ("5/1"); sign on the numerator.
std::string rat_to_string(const Rat& x);

// Accepts "num/den" or a bare integer. Throws Errc::ParseError.
Rat parse_rat(const std::string& text);

}  // namespace schelling
