#pragma once

// Report documents for the command-line front end. Every run produces a JSON
// tree {schema, config, results}; the text format renders the same tree.
// Rationals are written as "num/den" strings so no exact value passes
// through a double.

#include "bidisk/commutant.hpp"
#include "bidisk/lattice.hpp"
#include "bidisk/operators.hpp"
#include "bidisk/spectral.hpp"
#include "bidisk/structure.hpp"
#include "bidisk/subspace.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace bidisk {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

enum class Command { Analyze, Verify, Classes, Commutant };
enum class Format { Json, Text };

const char* to_string(Command command);
const char* to_string(Format format);

struct IntRange {
  int lo = 1;
  int hi = 1;
  bool operator==(const IntRange&) const = default;
};

/// "3" or "1..3". Throws std::invalid_argument on anything else.
IntRange parse_range(std::string_view text);
std::string to_string(const IntRange& range);

struct RunConfig {
  Command command = Command::Analyze;
  IntRange k;
  IntRange l;
  int max_grade = 8;
  int safe_grade = 4;
  int trials = 20;
  std::uint64_t seed = 0;
  double tol = 1e-8;
  Format format = Format::Json;
  bool commutant = false;  ///< analyze: also measure the commutant dimension
  std::optional<std::string> fault;  ///< test hook, see run_verify
};

/// Throws std::invalid_argument when k or l is below one, a range is
/// reversed, safe_grade < 2, max_grade < safe_grade + 2, trials < 1 or
/// tol <= 0.
void validate(const RunConfig& cfg);

struct RunResult {
  Json document;
  int exit_code = 0;  ///< 0 all checks passed, 1 a check failed
};

RunResult run(const RunConfig& cfg);
RunResult run_analyze(const RunConfig& cfg);
/// Runs every invariant suite over the configured range. cfg.fault = "adjoint"
/// scales one coefficient of Mp* inside the adjoint check, which must then
/// fail; any other fault name is rejected by validate.
RunResult run_verify(const RunConfig& cfg);
RunResult run_classes(const RunConfig& cfg);
RunResult run_commutant(const RunConfig& cfg);

Json to_json(const RunConfig& cfg);
Json to_json(const SparseVector& f);
Json to_json(const Subspace& M);
Json to_json(const StructureReport& report);
Json to_json(const LemmaReport& report);
Json to_json(const NullityResult& result);

/// Pretty JSON (two-space indent) or an indented key: value rendering.
std::string render(const Json& document, Format format);

}  // namespace bidisk
