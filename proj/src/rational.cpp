#include "ballcarve/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace ballcarve {

namespace mp = boost::multiprecision;

BigInt floor(const Rational &x) {
  BigInt q = mp::numerator(x) / mp::denominator(x);
  if (mp::numerator(x) < 0 && q * mp::denominator(x) != mp::numerator(x))
    --q;
  return q;
}

BigInt ceil(const Rational &x) { return -floor(-x); }

std::string to_string(const BigInt &x) { return x.str(); }

std::string to_string(const Rational &x) {
  if (mp::denominator(x) == 1)
    return mp::numerator(x).str();
  return mp::numerator(x).str() + "/" + mp::denominator(x).str();
}

double to_double(const Rational &x) { return x.convert_to<double>(); }

namespace {

BigInt parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty())
    throw std::invalid_argument("not a number: '" + std::string(whole) + "'");
  for (char ch : digits)
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw std::invalid_argument("not a number: '" + std::string(whole) +
                                  "'");
  return BigInt(std::string(digits));
}

} // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    BigInt den = parse_integer(body.substr(slash + 1), text);
    if (den == 0)
      throw std::invalid_argument("zero denominator in '" + std::string(text) +
                                  "'");
    value = Rational(parse_integer(body.substr(0, slash), text), den);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = body.substr(0, dot);
    std::string_view frac_part = body.substr(dot + 1);
    if (int_part.empty() && frac_part.empty())
      throw std::invalid_argument("not a number: '" + std::string(text) + "'");
    BigInt whole = int_part.empty() ? BigInt(0) : parse_integer(int_part, text);
    BigInt frac = frac_part.empty() ? BigInt(0) : parse_integer(frac_part, text);
    value = Rational(whole) + Rational(frac, ipow(10, frac_part.size()));
  } else {
    value = Rational(parse_integer(body, text));
  }
  return negative ? Rational(-value) : value;
}

} // namespace ballcarve
