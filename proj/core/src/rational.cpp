#include "irum/rational.hpp"

#include "irum/core.hpp"

#include <cctype>

namespace irum {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  // Trim surrounding whitespace.
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw InputError("empty rational literal");

  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) throw InputError("sign without digits in rational literal");

  auto bad = [&] {
    return InputError("malformed rational literal: expected INTEGER, INTEGER/POSITIVE_INTEGER, or a finite decimal");
  };

  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw bad();
    BigInt d{std::string(den)};
    if (d == 0) throw InputError("rational literal has zero denominator");
    value = Rational(BigInt{std::string(num)}, d);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (!all_digits(frac) || (!whole.empty() && !all_digits(whole))) throw bad();
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt whole_part = whole.empty() ? BigInt(0) : BigInt{std::string(whole)};
    value = Rational(whole_part * scale + BigInt{std::string(frac)}, scale);
  } else {
    if (!all_digits(text)) throw bad();
    value = Rational(BigInt{std::string(text)});
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) {
  return value.str();
}

double to_double(const Rational& value) {
  return value.convert_to<double>();
}

}  // namespace irum
