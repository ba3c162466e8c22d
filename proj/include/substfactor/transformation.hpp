#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "substfactor/partition.hpp"
#include "substfactor/words.hpp"

namespace substfactor {

//! Largest alphabet a Transformation can act on.
inline constexpr std::size_t kMaxDegree = 256;

//! A total self-map of {0, ..., n-1}, n ≤ kMaxDegree, as a byte array.
class Transformation {
 public:
  Transformation() = default;
  //! Throws InputError on out-of-range entries, ResourceError if too large.
  explicit Transformation(std::vector<std::uint8_t> image);
  explicit Transformation(const ColumnMap& map);

  static Transformation identity(std::size_t n);

  std::size_t degree() const noexcept { return image_.size(); }
  Letter operator[](std::size_t x) const { return image_[x]; }
  const std::vector<std::uint8_t>& bytes() const noexcept { return image_; }
  ColumnMap to_column_map() const { return ColumnMap(image_.begin(), image_.end()); }

  std::size_t rank() const;
  //! Sorted image.
  std::vector<Letter> image_set() const;
  //! The partition {f⁻¹(y)}.
  Partition kernel_partition() const;
  bool is_idempotent() const;
  bool is_bijective() const { return rank() == degree(); }

  bool operator==(const Transformation& other) const { return image_ == other.image_; }
  bool operator<(const Transformation& other) const { return image_ < other.image_; }

 private:
  std::vector<std::uint8_t> image_;
};

//! f∘g, that is, x ↦ f(g(x)).
Transformation compose(const Transformation& f, const Transformation& g);

//! f^k for the least k ≥ 1 making f^k idempotent.
Transformation idempotent_power(const Transformation& f);

}  // namespace substfactor
