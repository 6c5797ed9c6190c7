#include "grouptest/rational.hpp"

#include <charconv>
#include <numeric>
#include <ostream>

#include "grouptest/errors.hpp"

namespace grouptest {

__extension__ typedef unsigned __int128 u128;

namespace {

std::uint64_t parse_u64(std::string_view text, std::string_view whole) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError("not a non-negative rational: '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational::Rational(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw InputError("rational with zero denominator");
  const std::uint64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::parse(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return {parse_u64(text.substr(0, slash), text), parse_u64(text.substr(slash + 1), text)};
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto int_part = text.substr(0, dot);
    const auto frac_part = text.substr(dot + 1);
    if (frac_part.empty() || frac_part.size() > 18) {
      throw ParseError("unsupported decimal: '" + std::string(text) + "'");
    }
    std::uint64_t den = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) den *= 10;
    const std::uint64_t whole = int_part.empty() ? 0 : parse_u64(int_part, text);
    const std::uint64_t frac = parse_u64(frac_part, text);
    if (whole > (~std::uint64_t{0} - frac) / den) throw ParseError("decimal out of range");
    return {whole * den + frac, den};
  }
  return {parse_u64(text, text), 1};
}

std::string Rational::str() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const auto lhs = static_cast<u128>(a.num_) * b.den_;
  const auto rhs = static_cast<u128>(b.num_) * a.den_;
  return lhs <=> rhs;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace grouptest
