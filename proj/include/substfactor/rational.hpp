#pragma once

#include <cstdint>
#include <string>

namespace substfactor {

//! Reduced fraction with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  bool operator==(const Rational&) const = default;
  Rational operator+(const Rational& other) const;

  //! "p/q", or "p" when q = 1.
  std::string to_string() const;
  //! Accepts "p/q" or "p". Throws InputError.
  static Rational parse(const std::string& text);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace substfactor
