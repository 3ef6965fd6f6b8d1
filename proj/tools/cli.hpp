#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "grassmor/construction.hpp"
#include "grassmor/exactness.hpp"
#include "grassmor/fillings.hpp"
#include "grassmor/sweep.hpp"
#include "grassmor/transversality.hpp"

namespace grassmor::cli {

using Json = nlohmann::ordered_json;

enum class Command { construct, verify, transversal, codim, fillings, components, sweep };
enum class Format { text, json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInvalidInput = 2;

struct RunConfig {
  Command command = Command::construct;
  Format format = Format::text;
  std::optional<int> n;
  std::optional<int> r;
  std::optional<int> e;
  std::optional<std::string> a;
  std::optional<std::string> b;
  std::optional<std::string> c;
  std::optional<unsigned> seed;
  int max_n = 8;
  int max_e = 6;
  bool emit_matrix = false;
  std::optional<std::string> output;
};

std::optional<Command> parse_command(const std::string& name);
std::string to_string(Command c);

/// Parses argv. Returns nullopt after printing help; throws InvalidInput on
/// bad arguments.
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out);

/// Dispatches one command and writes a single report document to `out`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full entry point: parse + run, mapping errors to exit codes.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Structured forms of the library types.
Json to_json(const Rational& q);
Json to_json(const HomPoly& p);
Json to_json(const PolyMatrix& m);
Json to_json(const SplittingType& t);
Json to_json(const SplittingPair& p);
Json to_json(const ExactSequence& seq);
Json to_json(const ExactnessReport& rep);
Json to_json(const TransversalityReport& rep);
Json to_json(const Filling& f);

/// Renders a report document as indented text. Matrices (objects with a
/// "text" grid) print as aligned grids.
std::string render_text(const Json& doc);

}  // namespace grassmor::cli
