#include "preop/rational.hpp"

#include <cctype>

#include "preop/errors.hpp"

namespace preop {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  auto digits = [&](bool allow_sign) {
    const auto start = pos;
    if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    const auto first = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == first) throw ParseError("expected digits in rational", pos);
    return std::string(text.substr(start, pos - start));
  };
  auto numerator = digits(true);
  if (numerator[0] == '+') numerator.erase(0, 1);
  std::string denominator = "1";
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    const auto at = pos;
    denominator = digits(false);
    if (mpz_class(denominator) == 0) throw ParseError("zero denominator", at);
  }
  if (pos != text.size()) throw ParseError("unexpected character in rational", pos);
  Rational q{mpz_class(numerator), mpz_class(denominator)};
  q.canonicalize();
  return q;
}

}  // namespace preop
