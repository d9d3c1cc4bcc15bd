#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "crp/instance.hpp"

namespace crp {

/// Instance-file diagnostic. line() is 1-based; 0 means the problem is not
/// tied to one line (a missing key).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct ParsedInstance {
  CrpInstance instance;
  std::vector<std::string> warnings;
};

/// Parses `key = value` lines. Keys are exactly A0, I0, T, x_max, mu,
/// delta1, delta2, alpha, beta1, beta2, omega1, omega2, each once.
/// Influence values are written arctan(a, b), log(a, b) or power(a, p).
/// Blank lines and lines starting with '#' are ignored.
ParsedInstance parse_instance(std::string_view document);

ParsedInstance load_instance(const std::filesystem::path& path);

/// Canonical text form; parse_instance(serialize_instance(x)) == x.
std::string serialize_instance(const CrpInstance& inst);

/// Parses one influence expression such as "arctan(0.05, 0.3)".
InfluenceFunction parse_influence(std::string_view text);

}  // namespace crp
