#pragma once

#include <iosfwd>

#include "rasp/properties.hpp"

namespace rasp {

struct RunConfig {
  std::string input;
  std::string command;
  SemanticsId semantics{SemKind::Rational, std::nullopt};
  int max_atoms = static_cast<int>(kDefaultMaxAtoms);  // ≥ 1
  bool all_witnesses = false;
  bool json = false;
};

// Comma-separated atoms, optionally brace-wrapped: "a,b" or "{a,b}" or "{}".
Interpretation parse_interpretation(const std::string& text);
// Semicolon-separated interpretations: "{a,b};{c}".
EpistemicModel parse_epistemic_model(const std::string& text);

// Exit codes: 0 = results found / all checks agree or hold, 10 = empty result
// or a failed check, 2 = any error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rasp
