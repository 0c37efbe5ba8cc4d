#include "lindnet/rational.hpp"

#include <algorithm>
#include <cctype>
#include <string_view>

#include "lindnet/error.hpp"

namespace lindnet {

namespace {

bool digits_only(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

BigInt parse_integer(std::string_view s, const std::string& whole) {
  std::string_view body = s;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (!digits_only(body)) {
    throw Error(Errc::parse_error, "invalid rational literal: \"" + whole + "\"");
  }
  BigInt value{std::string(body)};
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string_view s(text);
  const auto slash = s.find('/');
  const BigInt num = parse_integer(s.substr(0, slash), text);
  if (slash == std::string_view::npos) {
    return Rational(num);
  }
  std::string_view den_part = s.substr(slash + 1);
  if (!digits_only(den_part)) {
    throw Error(Errc::parse_error, "invalid rational literal: \"" + text + "\"");
  }
  BigInt den{std::string(den_part)};
  if (den == 0) {
    throw Error(Errc::parse_error, "zero denominator in \"" + text + "\"");
  }
  return Rational(num, den);
}

std::string format_rational(const Rational& value) {
  std::string out = numerator(value).str();
  if (denominator(value) != 1) {
    out += "/" + denominator(value).str();
  }
  return out;
}

}  // namespace lindnet
