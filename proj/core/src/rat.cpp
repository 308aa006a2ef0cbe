#include "schelling/rat.hpp"

#include <cctype>

#include "schelling/errors.hpp"

namespace schelling {

Rat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) {
    throw Error(Errc::BadParameters, "zero denominator");
  }
  // Division canonicalizes: sign moves to the numerator, gcd divided out.
  return Rat(num) / Rat(den);
}

std::string rat_to_string(const Rat& x) {
  return rat_num(x).str() + "/" + rat_den(x).str();
}

Rat parse_rat(const std::string& text) {
  auto bad = [&] { return Error(Errc::ParseError, "bad rational '" + text + "'"); };
  std::size_t slash = text.find('/');
  std::string num_part = text.substr(0, slash);
  std::string den_part = slash == std::string::npos ? "1" : text.substr(slash + 1);
  auto is_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  if (!is_int(num_part) || !is_int(den_part)) throw bad();
  BigInt num(num_part);
  BigInt den(den_part);
  if (den == 0) throw bad();
  return make_rat(num, den);
}

}  // namespace schelling
