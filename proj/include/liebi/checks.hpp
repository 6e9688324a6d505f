#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "liebi/algebra.hpp"
#include "liebi/bialgebra.hpp"

namespace liebi {

using Json = nlohmann::ordered_json;

enum class Format { text, json };

struct CheckConfig {
  std::string algebra = "builtin:esv";
  std::string check;
  int window = 6;
  int margin = 2;
  std::uint64_t seed = 0;
  Format format = Format::text;
  bool timing = false;  // include wall time in JSON output
};

enum class Status { pass, fail, evidence };
const char* to_string(Status s);

struct Report {
  std::string check;
  CheckConfig config;
  Status status = Status::pass;
  Json details = Json::object();
  std::optional<Json> witness;  // present iff status == fail
  double wall_seconds = 0;
};

// Bad check name, window/margin, or algebra source. Maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::vector<std::string>& check_names();

// "builtin:esv" or a path to a .lialg file.
std::unique_ptr<LieAlgebra> load_algebra(const std::string& source);

// Skew r = Σ c_i (a_i⊗b_i - b_i⊗a_i) with 1..max_pairs pairs from the window.
RMatrix random_skew_r(const LieAlgebra& alg, std::mt19937_64& rng, int w, int max_pairs = 4);
// r = Σ c_i a_i⊗b_i with 1..max_terms pure tensors from the window.
RMatrix random_r(const LieAlgebra& alg, std::mt19937_64& rng, int w, int max_terms = 4);

Report run_check(const CheckConfig& cfg);

// Byte-deterministic for a fixed report.
std::string format_report(const Report& r, Format fmt);

int exit_code(const Report& r);

}  // namespace liebi
