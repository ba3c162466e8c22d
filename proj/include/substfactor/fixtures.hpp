#pragma once

// The bundled corpus of worked examples, each with the verdicts it must
// reproduce.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "substfactor/words.hpp"

namespace substfactor {

namespace detail {
//! (stem, file text) for every fixtures/*.sub, sorted by stem. Generated at
//! build time.
const std::vector<std::pair<std::string_view, std::string_view>>& fixture_files();
}  // namespace detail

struct Fixture {
  std::string name;
  std::string summary;
  std::string text;

  Substitution substitution() const;
};

//! Sorted by name.
const std::vector<Fixture>& fixtures();
//! Throws InputError for an unknown name.
const Fixture& fixture(std::string_view name);

struct FixtureCheck {
  std::string fixture;
  std::string check;
  bool passed = false;
  std::string detail;
};

//! Runs the expected-verdict checks of the named fixtures (all when empty).
std::vector<FixtureCheck> run_fixture_checks(const std::vector<std::string>& names = {},
                                             std::size_t jobs = 1);

}  // namespace substfactor
