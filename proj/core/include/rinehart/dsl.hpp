#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rinehart/extensions.hpp"
#include "rinehart/lie_rinehart.hpp"

namespace rinehart {

/// Position-carrying problem report for text input, rendered in the
/// conventional "file:line:col: error: message" shape.
struct Diagnostic {
  std::size_t line = 0;  ///< 1-based
  std::size_t col = 0;   ///< 1-based
  std::string message;
  std::vector<std::string> expected;  ///< candidate tokens, when known

  std::string render(const std::string& filename) const;
};

/// Thrown by the expression entry points; carries the diagnostic.
struct ParseError {
  Diagnostic diagnostic;
};

struct SceneDecl {
  std::string name;
  int s = 1;
  int l = 1;
};

struct CommandDecl {
  std::string verb;  ///< check, bracket, reconstruct, build-extension, ...
  std::string target;
  std::vector<std::string> args;  ///< quoted string arguments
  std::size_t line = 0;
  std::size_t col = 0;
};

struct DslDocument {
  std::vector<std::shared_ptr<const LieRinehartPresentation>> algebras;
  std::vector<ExtensionData> extensions;
  std::vector<SceneDecl> scenes;
  std::vector<CommandDecl> commands;

  std::shared_ptr<const LieRinehartPresentation> find_algebra(const std::string& name) const;
  const ExtensionData* find_extension(const std::string& name) const;
  const SceneDecl* find_scene(const std::string& name) const;
};

struct ParseResult {
  std::optional<DslDocument> document;  ///< absent when diagnostics are fatal
  std::vector<Diagnostic> diagnostics;
};

/// Parses a full document:
///   algebra NAME { base x, y; basis e1, e2; anchor e1 -> dx; bracket [e1,e2] = x*e1; }
///   extension NAME { base ...; lprime { ... } ldoubleprime { ... } nabla { ... } omega { ... } }
///   scene NAME { s = 2; l = 1; }
///   check NAME; bracket NAME "expr" "expr"; ...
/// Stops at the first error and reports it with its position.
ParseResult parse_document(const std::string& text);

/// Parses a single polynomial expression over the given variable environment:
///   expr   := term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' natural)?
///   atom   := rational | ident | '(' expr ')' | '-' factor
/// Rational literals accept "3" and "3/2". Throws ParseError on failure.
Poly parse_poly_expression(const std::string& text, const std::map<std::string, Var>& env);

/// Variable environment of a presentation: every base variable and generator
/// by name.
std::map<std::string, Var> expression_env(const LieRinehartPresentation& pres);

}  // namespace rinehart
