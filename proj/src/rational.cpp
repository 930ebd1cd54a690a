#include "dhl/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace dhl {

namespace {

using boost::multiprecision::cpp_int;

cpp_int parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) {
    throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  }
  std::size_t pos = 0;
  bool negative = false;
  if (digits[0] == '+' || digits[0] == '-') {
    negative = digits[0] == '-';
    pos = 1;
  }
  if (pos == digits.size()) {
    throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  }
  cpp_int value = 0;
  for (; pos < digits.size(); ++pos) {
    const char ch = digits[pos];
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    }
    value = value * 10 + (ch - '0');
  }
  return negative ? cpp_int(-value) : value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view t = trim(text);
  const auto slash = t.find('/');
  const cpp_int num = parse_integer(trim(t.substr(0, slash)), text);
  cpp_int den = 1;
  if (slash != std::string_view::npos) {
    const std::string_view rest = trim(t.substr(slash + 1));
    if (!rest.empty() && (rest[0] == '+' || rest[0] == '-')) {
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    den = parse_integer(rest, text);
  }
  if (den == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

std::string to_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

bool is_integer(const Rational& r) { return denominator(r) == 1; }

Rational floor_mod(const Rational& r, const Rational& m) {
  const Rational q = r / m;
  // floor division on the exact quotient
  cpp_int fl = numerator(q) / denominator(q);
  if (numerator(q) < 0 && fl * denominator(q) != numerator(q)) fl -= 1;
  return r - m * Rational(fl);
}

}  // namespace dhl
