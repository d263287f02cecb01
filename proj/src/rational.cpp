#include "concord/rational.hpp"

#include <cctype>

namespace concord {

namespace {

bool parse_integer(std::string_view s, Integer* out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') {
    neg = (s[i] == '-');
    ++i;
  }
  if (i == s.size()) return false;
  Integer v = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    v = v * 10 + (s[i] - '0');
  }
  *out = neg ? -v : v;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  // Trim surrounding whitespace.
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw NumberError("empty number");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num, den;
    if (!parse_integer(text.substr(0, slash), &num) ||
        !parse_integer(text.substr(slash + 1), &den)) {
      throw NumberError("malformed fraction: " + std::string(text));
    }
    if (den == 0) throw NumberError("zero denominator: " + std::string(text));
    return Rational(num, den);
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view ipart = text.substr(0, dot);
    std::string_view fpart = text.substr(dot + 1);
    if (fpart.find_first_of("+-") != std::string_view::npos) {
      throw NumberError("malformed decimal: " + std::string(text));
    }
    bool neg = !ipart.empty() && ipart.front() == '-';
    Integer whole = 0;
    if (!ipart.empty() && ipart != "-" && ipart != "+") {
      if (!parse_integer(ipart, &whole)) throw NumberError("malformed decimal: " + std::string(text));
    }
    if (fpart.empty()) return Rational(whole);
    Integer frac;
    if (!parse_integer(fpart, &frac)) throw NumberError("malformed decimal: " + std::string(text));
    Integer scale = 1;
    for (std::size_t i = 0; i < fpart.size(); ++i) scale *= 10;
    Rational magnitude = Rational(abs(whole)) + Rational(frac, scale);
    return neg ? -magnitude : magnitude;
  }

  Integer v;
  if (!parse_integer(text, &v)) throw NumberError("malformed number: " + std::string(text));
  return Rational(v);
}

std::string format_rational(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += '/';
    s += denominator(r).str();
  }
  return s;
}

std::string approx_decimal(const Rational& r, int digits) {
  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Integer num = numerator(r) * scale * 2 + (r >= 0 ? denominator(r) : -denominator(r));
  Integer q = num / (denominator(r) * 2);  // rounded, ties away from zero
  bool neg = q < 0;
  Integer magnitude = abs(q);
  std::string body = magnitude.str();
  if (static_cast<int>(body.size()) <= digits) {
    body.insert(0, digits + 1 - body.size(), '0');
  }
  body.insert(body.size() - digits, 1, '.');
  return neg ? "-" + body : body;
}

}  // namespace concord
