#pragma once

// Command-line front end: field/symbol grammar, verb dispatch and the output
// document (text or one JSON object per line).

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "cyclink/algebra.hpp"

namespace cyclink::cli {

/// GF(q) followed by (name) per transcendental step and [name: minpoly] per
/// algebraic step, e.g. "GF(3)(x)[s: s^2 - x]".
FieldTower parse_field(const std::string& text);
/// "[alpha, beta; p)" with alpha, beta expressions over the tower generators.
SymbolAlgebra parse_symbol(const std::string& text, const FieldTower& field);

enum class Format { Text, Jsonl };

struct Command {
  std::string verb;
  std::string field;
  std::string symbol;
  std::string symbol2;
  std::string elem;
  std::string alpha;
  std::string beta;
  std::string gamma;
  std::string slot;
  std::string var;
  std::vector<std::string> hints;
  unsigned p = 0;  // 0: the characteristic of the field
  Budget budget;
  Format format = Format::Text;
};

const std::vector<std::string>& verbs();

struct Outcome {
  int status = 0;  // 0 decided, 2 unknown, 1 error
  nlohmann::ordered_json document;
};

/// Never throws for engine errors; they become status 1 with an "error" entry.
Outcome execute(const Command& cmd);

/// Renders the outcome in the requested format; returns the exit status.
int run(const Command& cmd, std::ostream& out, std::ostream& err);

std::string render_text(const nlohmann::ordered_json& document);

}  // namespace cyclink::cli
