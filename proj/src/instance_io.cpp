#include "crp/instance_io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace crp {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
      line_(line) {}

namespace {

constexpr std::array<std::string_view, 12> kKeys{"A0",     "I0",     "T",     "x_max",
                                                 "mu",     "delta1", "delta2", "alpha",
                                                 "beta1",  "beta2",  "omega1", "omega2"};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::optional<double> parse_number(std::string_view text) {
  text = trim(text);
  if (text.empty()) return std::nullopt;
  // from_chars rejects a leading '+'; accept it for hand-written files.
  if (text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v)) {
    return std::nullopt;
  }
  return v;
}

std::string format_exact(double v) {
  // Shortest form that parses back to the same double.
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

InfluenceFunction parse_influence(std::string_view text) {
  text = trim(text);
  const auto open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')') {
    throw std::invalid_argument("influence must look like name(a, b)");
  }
  const std::string_view name = trim(text.substr(0, open));
  const std::string_view args = text.substr(open + 1, text.size() - open - 2);
  const auto comma = args.find(',');
  if (comma == std::string_view::npos || args.find(',', comma + 1) != std::string_view::npos) {
    throw std::invalid_argument("influence takes exactly two arguments");
  }
  const auto a = parse_number(args.substr(0, comma));
  const auto b = parse_number(args.substr(comma + 1));
  if (!a || !b) throw std::invalid_argument("influence arguments must be finite decimals");

  if (name == "arctan") return InfluenceFunction::scaled_arctan(*a, *b);
  if (name == "log") return InfluenceFunction::scaled_log(*a, *b);
  if (name == "power") return InfluenceFunction::power_law(*a, *b);
  throw std::invalid_argument("unknown influence family '" + std::string(name) +
                              "' (expected arctan, log or power)");
}

ParsedInstance parse_instance(std::string_view document) {
  std::map<std::string_view, std::pair<std::string_view, std::size_t>> entries;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= document.size()) {
    const auto end = std::min(document.find('\n', pos), document.size());
    const std::string_view line = trim(document.substr(pos, end - pos));
    ++line_no;
    pos = end + 1;
    if (line.empty() || line.front() == '#') continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, "expected 'key = value'");
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end()) {
      throw ParseError(line_no, "unknown key '" + std::string(key) + "'");
    }
    if (entries.contains(key)) {
      throw ParseError(line_no, "duplicate key '" + std::string(key) + "' (first on line " +
                                    std::to_string(entries[key].second) + ")");
    }
    entries[key] = {value, line_no};
  }

  for (std::string_view key : kKeys) {
    if (!entries.contains(key)) throw ParseError(0, "missing key '" + std::string(key) + "'");
  }

  const auto number = [&](std::string_view key) {
    const auto& [text, line] = entries.at(key);
    const auto v = parse_number(text);
    if (!v) throw ParseError(line, "value of '" + std::string(key) + "' is not a finite decimal");
    return *v;
  };
  const auto influence = [&](std::string_view key) {
    const auto& [text, line] = entries.at(key);
    try {
      return parse_influence(text);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line, std::string(key) + ": " + e.what());
    }
  };

  ParsedInstance out{CrpInstance{.A0 = number("A0"),
                                 .I0 = number("I0"),
                                 .T = number("T"),
                                 .x_max = number("x_max"),
                                 .mu = number("mu"),
                                 .delta1 = number("delta1"),
                                 .delta2 = number("delta2"),
                                 .alpha = number("alpha"),
                                 .beta1 = influence("beta1"),
                                 .beta2 = influence("beta2"),
                                 .omega1 = number("omega1"),
                                 .omega2 = number("omega2")},
                     {}};
  try {
    out.warnings = out.instance.validate();
  } catch (const std::invalid_argument& e) {
    // Report against the line of the field named first in the message.
    const std::string msg = e.what();
    const std::string_view field(msg.data(), msg.find(' '));
    const auto it = entries.find(field);
    throw ParseError(it == entries.end() ? 0 : it->second.second, msg);
  }
  return out;
}

ParsedInstance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open instance file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

std::string serialize_instance(const CrpInstance& inst) {
  std::ostringstream out;
  out << "A0 = " << format_exact(inst.A0) << '\n'
      << "I0 = " << format_exact(inst.I0) << '\n'
      << "T = " << format_exact(inst.T) << '\n'
      << "x_max = " << format_exact(inst.x_max) << '\n'
      << "mu = " << format_exact(inst.mu) << '\n'
      << "delta1 = " << format_exact(inst.delta1) << '\n'
      << "delta2 = " << format_exact(inst.delta2) << '\n'
      << "alpha = " << format_exact(inst.alpha) << '\n'
      << "beta1 = " << inst.beta1.to_string() << '\n'
      << "beta2 = " << inst.beta2.to_string() << '\n'
      << "omega1 = " << format_exact(inst.omega1) << '\n'
      << "omega2 = " << format_exact(inst.omega2) << '\n';
  return out.str();
}

}  // namespace crp
