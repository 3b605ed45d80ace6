#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "json.hpp"

#include "hypersum/term.hpp"

namespace hypersum {

enum class Mode { Reduce, Summable, Telescope, Bench };

struct JobSpec {
  Mode mode = Mode::Reduce;
  std::string expr;                                            // term in the input grammar
  std::optional<std::pair<std::string, std::string>> quotients;  // (f, g) instead of expr
  bool want_certificate = false;
  bool verify = false;  // re-check L(T) = Delta_y(G); implied by want_certificate
  int max_order = 20;
  bool factored = false;
  BenchParams bench;
  std::uint64_t seed = 1;
};

struct Report {
  int exit_code = 0;
  nlohmann::json json;  // "schema": 1
  std::string text;
};

/// Never throws; failures become {"error": {"code", "message"}} with exit code
/// 1 (no telescoper / order cap / not summable with a certificate request),
/// 2 (parse, incompatible or bad parameters) or 3 (internal).
Report run(const JobSpec& job);

}  // namespace hypersum
