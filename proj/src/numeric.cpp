#include "tukey/numeric.hpp"

#include <cctype>

namespace tukey {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Base 10 always: GMP would read a leading zero as an octal prefix.
Integer decimal_integer(const std::string& digits) {
  Integer v;
  mpz_set_str(v.backend().data(), digits.c_str(), 10);
  return v;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) negative = s[pos++] == '-';
  if (pos == s.size()) throw PreconditionError("not a number: '" + std::string(whole) + "'");
  for (std::size_t i = pos; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw PreconditionError("not a number: '" + std::string(whole) + "'");
  const Integer v = decimal_integer(std::string(s.substr(pos)));
  return negative ? Integer(-v) : v;
}

Integer pow10(unsigned e) {
  Integer r = 1;
  for (unsigned i = 0; i < e; ++i) r *= 10;
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw PreconditionError("empty numeric field");

  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const Integer num = parse_integer(trim(s.substr(0, slash)), s);
    const Integer den = parse_integer(trim(s.substr(slash + 1)), s);
    if (den == 0) throw PreconditionError("zero denominator: '" + std::string(s) + "'");
    return Rational(num, den);
  }

  std::size_t pos = 0;
  bool negative = false;
  if (s[pos] == '+' || s[pos] == '-') negative = s[pos++] == '-';
  std::string digits;
  long exponent = 0;
  bool seen_digit = false;
  bool seen_point = false;
  for (; pos < s.size(); ++pos) {
    const char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      seen_digit = true;
      if (seen_point) --exponent;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw PreconditionError("not a number: '" + std::string(s) + "'");
  if (pos < s.size()) {
    if (s[pos] != 'e' && s[pos] != 'E')
      throw PreconditionError("not a number: '" + std::string(s) + "'");
    const std::string_view exp_text = s.substr(pos + 1);
    const Integer e = parse_integer(exp_text, s);
    if (e > 10000 || e < -10000) throw PreconditionError("exponent out of range: '" + std::string(s) + "'");
    exponent += e.convert_to<long>();
  }

  Rational v{decimal_integer(digits)};
  if (exponent > 0) v *= Rational(pow10(static_cast<unsigned>(exponent)));
  if (exponent < 0) v /= Rational(pow10(static_cast<unsigned>(-exponent)));
  return negative ? Rational(-v) : v;
}

std::string to_fraction_string(const Rational& v) {
  return numerator(v).str() + "/" + denominator(v).str();
}

std::string to_decimal_string(const Rational& v, int significant) {
  if (v == 0) return "0";
  const Rational a = v < 0 ? Rational(-v) : v;
  const Integer num = numerator(a);
  const Integer den = denominator(a);

  // exponent e with 10^e <= a < 10^(e+1)
  long e = static_cast<long>(num.str().size()) - static_cast<long>(den.str().size());
  auto power = [](long k) {
    return k >= 0 ? Rational(pow10(static_cast<unsigned>(k)))
                  : Rational(Integer(1), pow10(static_cast<unsigned>(-k)));
  };
  while (power(e) > a) --e;
  while (power(e + 1) <= a) ++e;

  const Rational scaled = a * power(significant - 1 - e);
  Integer rounded = numerator(scaled + Rational(1, 2)) / denominator(scaled + Rational(1, 2));
  if (rounded == pow10(static_cast<unsigned>(significant))) {
    rounded /= 10;
    ++e;
  }
  std::string digits = rounded.str();

  std::string out = v < 0 ? "-" : "";
  if (e < 0) {
    out += "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + digits;
  } else if (e + 1 >= static_cast<long>(digits.size())) {
    out += digits + std::string(static_cast<std::size_t>(e + 1 - static_cast<long>(digits.size())), '0');
  } else {
    out += digits.substr(0, static_cast<std::size_t>(e + 1)) + "." +
           digits.substr(static_cast<std::size_t>(e + 1));
  }
  return out;
}

std::string to_exact_string(const Rational& v) {
  Integer den = denominator(v);
  unsigned twos = 0;
  unsigned fives = 0;
  while (den % 2 == 0) {
    den /= 2;
    ++twos;
  }
  while (den % 5 == 0) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return to_fraction_string(v);

  const unsigned places = std::max(twos, fives);
  const Integer scaled = numerator(v) * pow10(places) / denominator(v);
  const bool negative = scaled < 0;
  std::string digits = (negative ? Integer(-scaled) : scaled).str();
  if (places > 0) {
    if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
    digits.insert(digits.size() - places, ".");
  }
  return negative ? "-" + digits : digits;
}

VectorZ clear_denominators(const VectorQ& v) {
  Integer scale = 1;
  for (Index i = 0; i < v.size(); ++i) scale = lcm(scale, denominator(v[i]));
  VectorZ out(v.size());
  for (Index i = 0; i < v.size(); ++i) out[i] = numerator(v[i]) * (scale / denominator(v[i]));
  return primitive(std::move(out));
}

VectorZ primitive(VectorZ v) {
  Integer g = 0;
  for (Index i = 0; i < v.size(); ++i) g = gcd(g, v[i]);
  if (g > 1)
    for (Index i = 0; i < v.size(); ++i) v[i] /= g;
  return v;
}

VectorQ to_rational(const VectorZ& v) {
  VectorQ out(v.size());
  for (Index i = 0; i < v.size(); ++i) out[i] = Rational(v[i]);
  return out;
}

int lex_compare(const VectorQ& a, const VectorQ& b) {
  const Index n = std::min(a.size(), b.size());
  for (Index i = 0; i < n; ++i) {
    if (a[i] < b[i]) return -1;
    if (b[i] < a[i]) return 1;
  }
  return a.size() < b.size() ? -1 : (a.size() > b.size() ? 1 : 0);
}

}  // namespace tukey
