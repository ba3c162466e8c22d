#include "substfactor/rational.hpp"

#include <charconv>
#include <numeric>

#include "substfactor/error.hpp"

namespace substfactor {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InputError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

namespace {
__extension__ typedef __int128 i128;
}  // namespace

Rational Rational::operator+(const Rational& other) const {
  i128 n = static_cast<i128>(num_) * other.den_ + static_cast<i128>(other.num_) * den_;
  i128 d = static_cast<i128>(den_) * other.den_;
  const i128 limit = INT64_MAX;
  // Reduce before narrowing.
  i128 a = n < 0 ? -n : n, b = d;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    n /= a;
    d /= a;
  }
  if (n > limit || n < -limit || d > limit) throw ResourceError("rational overflow");
  return Rational(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
  auto parse_int = [&](std::string_view part) {
    std::int64_t v = 0;
    const char* first = part.data();
    if (!part.empty() && part.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty()) {
      throw InputError("malformed rational '" + text + "'");
    }
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  const std::string_view view(text);
  return Rational(parse_int(view.substr(0, slash)), parse_int(view.substr(slash + 1)));
}

}  // namespace substfactor
