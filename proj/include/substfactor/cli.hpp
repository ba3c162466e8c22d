#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace substfactor::cli {

//! Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kResourceError = 2;
inline constexpr int kInconclusive = 3;
inline constexpr int kFixtureMismatch = 4;
inline constexpr int kInternalError = 5;

//! Runs one command line (without the program name). Everything is written
//! to out/err in one piece once the command has finished.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace substfactor::cli
