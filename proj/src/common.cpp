#include "drqsim/common.hpp"

#include <charconv>
#include <cstdlib>

namespace drqsim {

namespace {

std::int64_t to_int(std::string_view digits, std::string_view whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
  if (ec != std::errc{} || ptr != digits.data() + digits.size())
    throw std::invalid_argument("not a number: '" + std::string(whole) + "'");
  return v;
}

}  // namespace

Rational round2(Rational value) {
  bool negative = value.numerator() < 0;
  if (negative) value = -value;
  // floor(value * 100 + 1/2)
  Rational scaled = value * 100 + Rational(1, 2);
  std::int64_t hundredths = scaled.numerator() / scaled.denominator();
  Rational r(hundredths, 100);
  return negative ? -r : r;
}

std::string format_fixed2(Rational value) {
  Rational r = round2(value);
  bool negative = r.numerator() < 0;
  std::int64_t hundredths = (negative ? -r : r).numerator() * (100 / (negative ? -r : r).denominator());
  std::string out = negative ? "-" : "";
  out += std::to_string(hundredths / 100);
  out += '.';
  std::int64_t frac = hundredths % 100;
  if (frac < 10) out += '0';
  out += std::to_string(frac);
  return out;
}

Rational parse_decimal(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  std::string_view body = text;
  bool negative = false;
  if (body.front() == '-' || body.front() == '+') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (body.empty() || body.front() == '-' || body.front() == '+')
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");

  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::int64_t num = to_int(body.substr(0, slash), text);
    std::int64_t den = to_int(body.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    value = Rational(num, den);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view ip = body.substr(0, dot);
    std::string_view fp = body.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || fp.size() > 12)
      throw std::invalid_argument("not a number: '" + std::string(text) + "'");
    std::int64_t whole = ip.empty() ? 0 : to_int(ip, text);
    std::int64_t frac = fp.empty() ? 0 : to_int(fp, text);
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
    value = Rational(whole) + Rational(frac, scale);
  } else {
    value = Rational(to_int(body, text));
  }
  return negative ? -value : value;
}

}  // namespace drqsim
