#include "symentropy/rational.hpp"

#include <cctype>

#include "symentropy/errors.hpp"

namespace symentropy {

std::string to_fraction_string(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

namespace {

BigInt parse_integer(const std::string& text, const std::string& whole) {
  if (text.empty()) fail(ErrorCode::kParseError, "empty number in '" + whole + "'");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) fail(ErrorCode::kParseError, "bad number '" + whole + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      fail(ErrorCode::kParseError, "bad number '" + whole + "'");
    }
  }
  return BigInt(text[0] == '+' ? text.substr(1) : text);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (auto slash = text.find('/'); slash != std::string::npos) {
    BigInt num = parse_integer(text.substr(0, slash), text);
    BigInt den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) fail(ErrorCode::kParseError, "zero denominator in '" + text + "'");
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string::npos) {
    std::string int_part = text.substr(0, dot);
    std::string frac_part = text.substr(dot + 1);
    bool negative = !int_part.empty() && int_part[0] == '-';
    if (int_part.empty() || int_part == "-" || int_part == "+") int_part += "0";
    BigInt whole = parse_integer(int_part, text);
    if (frac_part.empty()) return Rational(whole);
    BigInt frac = parse_integer(frac_part, text);
    if (frac_part[0] == '-' || frac_part[0] == '+') {
      fail(ErrorCode::kParseError, "bad number '" + text + "'");
    }
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac_part.size()));
    Rational magnitude = Rational(boost::multiprecision::abs(whole)) + Rational(frac, scale);
    return negative ? -magnitude : magnitude;
  }
  return Rational(parse_integer(text, text));
}

}  // namespace symentropy
