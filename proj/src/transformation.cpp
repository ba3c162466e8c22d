#include "substfactor/transformation.hpp"

#include <algorithm>
#include <bitset>

#include "substfactor/error.hpp"
#include "substfactor/kernels.hpp"

namespace substfactor {

Transformation::Transformation(std::vector<std::uint8_t> image) : image_(std::move(image)) {
  if (image_.size() > kMaxDegree) {
    throw ResourceError("transformations are limited to " + std::to_string(kMaxDegree) +
                        " letters");
  }
  for (std::uint8_t y : image_) {
    if (y >= image_.size()) throw InputError("transformation entry out of range");
  }
}

Transformation::Transformation(const ColumnMap& map) {
  if (map.size() > kMaxDegree) {
    throw ResourceError("transformations are limited to " + std::to_string(kMaxDegree) +
                        " letters, got " + std::to_string(map.size()));
  }
  image_.reserve(map.size());
  for (Letter y : map) {
    if (y >= map.size()) throw InputError("transformation entry out of range");
    image_.push_back(static_cast<std::uint8_t>(y));
  }
}

Transformation Transformation::identity(std::size_t n) {
  std::vector<std::uint8_t> image(n);
  for (std::size_t x = 0; x < n; ++x) image[x] = static_cast<std::uint8_t>(x);
  return Transformation(std::move(image));
}

std::size_t Transformation::rank() const {
  std::bitset<kMaxDegree> seen;
  for (std::uint8_t y : image_) seen.set(y);
  return seen.count();
}

std::vector<Letter> Transformation::image_set() const {
  std::bitset<kMaxDegree> seen;
  for (std::uint8_t y : image_) seen.set(y);
  std::vector<Letter> out;
  for (std::size_t y = 0; y < image_.size(); ++y) {
    if (seen[y]) out.push_back(static_cast<Letter>(y));
  }
  return out;
}

Partition Transformation::kernel_partition() const {
  return Partition::from_labels(image_);
}

bool Transformation::is_idempotent() const {
  for (std::uint8_t y : image_) {
    if (image_[y] != y) return false;
  }
  return true;
}

Transformation compose(const Transformation& f, const Transformation& g) {
  if (f.degree() != g.degree()) throw InputError("compose: degree mismatch");
  std::vector<std::uint8_t> out(f.degree());
  kernels::compose(f.bytes().data(), g.bytes().data(), out.data(), out.size());
  return Transformation(std::move(out));
}

Transformation idempotent_power(const Transformation& f) {
  Transformation power = f;
  while (!(compose(power, power) == power)) power = compose(power, f);
  return power;
}

}  // namespace substfactor
