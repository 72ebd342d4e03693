#include "rinehart/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>
#include <utility>

namespace rinehart {
namespace {

enum class TokKind { ident, number, string, punct, end };

struct Token {
  TokKind kind = TokKind::end;
  std::string text;
  std::size_t line = 1;
  std::size_t col = 1;
};

[[noreturn]] void fail_at(std::size_t line, std::size_t col, std::string message,
                          std::vector<std::string> expected = {}) {
  throw ParseError{Diagnostic{line, col, std::move(message), std::move(expected)}};
}

[[noreturn]] void fail_at(const Token& tok, std::string message,
                          std::vector<std::string> expected = {}) {
  fail_at(tok.line, tok.col, std::move(message), std::move(expected));
}

std::string describe(const Token& tok) {
  switch (tok.kind) {
    case TokKind::end:
      return "end of input";
    case TokKind::string:
      return "string \"" + tok.text + "\"";
    default:
      return "'" + tok.text + "'";
  }
}

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](char c) {
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(c);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(text[i]);
      continue;
    }
    Token tok;
    tok.line = line;
    tok.col = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      tok.kind = TokKind::ident;
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) ||
                                 text[i] == '_')) {
        tok.text.push_back(text[i]);
        advance(text[i]);
      }
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      tok.kind = TokKind::number;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        tok.text.push_back(text[i]);
        advance(text[i]);
      }
      if (i + 1 < text.size() && text[i] == '/' &&
          std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
        tok.text.push_back('/');
        advance('/');
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          tok.text.push_back(text[i]);
          advance(text[i]);
        }
      }
    } else if (c == '"') {
      tok.kind = TokKind::string;
      advance(c);
      while (i < text.size() && text[i] != '"' && text[i] != '\n') {
        tok.text.push_back(text[i]);
        advance(text[i]);
      }
      if (i >= text.size() || text[i] != '"') {
        fail_at(tok.line, tok.col, "unterminated string literal");
      }
      advance('"');
    } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      tok.kind = TokKind::punct;
      tok.text = "->";
      advance('-');
      advance('>');
    } else if (std::string("{}[](),;=+-*^").find(c) != std::string::npos) {
      tok.kind = TokKind::punct;
      tok.text = std::string(1, c);
      advance(c);
    } else {
      fail_at(line, col, std::string("unexpected character '") + c + "'");
    }
    out.push_back(std::move(tok));
  }
  Token end;
  end.kind = TokKind::end;
  end.line = line;
  end.col = col;
  out.push_back(std::move(end));
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& peek() const { return tokens_[pos_]; }
  const Token& get() { return tokens_[pos_ == tokens_.size() - 1 ? pos_ : pos_++]; }

  bool at_punct(const std::string& p) const {
    return peek().kind == TokKind::punct && peek().text == p;
  }
  bool at_ident(const std::string& word) const {
    return peek().kind == TokKind::ident && peek().text == word;
  }

  Token expect_punct(const std::string& p) {
    if (!at_punct(p)) {
      fail_at(peek(), "unexpected " + describe(peek()), {"'" + p + "'"});
    }
    return get();
  }

  Token expect_ident(const std::string& what) {
    if (peek().kind != TokKind::ident) {
      fail_at(peek(), "unexpected " + describe(peek()) + ", expected " + what);
    }
    return get();
  }

  bool done() const { return peek().kind == TokKind::end; }

  /// expr := term (('+'|'-') term)*
  Poly parse_expression(const std::map<std::string, Var>& env) {
    Poly out = parse_term(env);
    while (at_punct("+") || at_punct("-")) {
      bool plus = at_punct("+");
      get();
      Poly rhs = parse_term(env);
      out = plus ? out + rhs : out - rhs;
    }
    return out;
  }

 private:
  Poly parse_term(const std::map<std::string, Var>& env) {
    Poly out = parse_factor(env);
    while (at_punct("*")) {
      get();
      out *= parse_factor(env);
    }
    return out;
  }

  Poly parse_factor(const std::map<std::string, Var>& env) {
    Poly base = parse_atom(env);
    if (at_punct("^")) {
      get();
      const Token& tok = peek();
      if (tok.kind != TokKind::number || tok.text.find('/') != std::string::npos) {
        fail_at(tok, "exponent must be a natural number");
      }
      get();
      unsigned long e = std::strtoul(tok.text.c_str(), nullptr, 10);
      if (e > 4096) fail_at(tok, "exponent too large");
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Poly parse_atom(const std::map<std::string, Var>& env) {
    const Token& tok = peek();
    switch (tok.kind) {
      case TokKind::number: {
        get();
        return Poly::constant(parse_rational(tok.text));
      }
      case TokKind::ident: {
        auto it = env.find(tok.text);
        if (it == env.end()) {
          fail_at(tok, "unknown symbol '" + tok.text + "'");
        }
        get();
        return Poly::variable(it->second);
      }
      case TokKind::punct:
        if (tok.text == "(") {
          get();
          Poly inner = parse_expression(env);
          expect_punct(")");
          return inner;
        }
        if (tok.text == "-") {
          get();
          return -parse_factor(env);
        }
        break;
      default:
        break;
    }
    fail_at(tok, "unexpected " + describe(tok),
            {"a rational", "an identifier", "'('", "'-'"});
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

/// Accumulates one algebra block: declared names plus anchor and bracket
/// statements, and assembles the presentation once the block closes.
struct AlgebraBuilder {
  std::string name;
  std::size_t line = 1, col = 1;
  std::vector<std::string> base_names;
  std::vector<std::string> fiber_names;
  std::set<std::string> declared;
  bool allow_anchor = true;
  std::vector<std::vector<Poly>> anchor;     // filled lazily
  StructureTensor structure;                 // filled lazily
  std::set<std::pair<std::size_t, std::size_t>> bracket_seen;

  std::optional<std::size_t> base_index(const std::string& n) const {
    for (std::size_t s = 0; s < base_names.size(); ++s) {
      if (base_names[s] == n) return s;
    }
    return std::nullopt;
  }
  std::optional<std::size_t> fiber_index(const std::string& n) const {
    for (std::size_t j = 0; j < fiber_names.size(); ++j) {
      if (fiber_names[j] == n) return j;
    }
    return std::nullopt;
  }

  void declare(const Token& tok, bool base) {
    if (!declared.insert(tok.text).second) {
      fail_at(tok, "name '" + tok.text + "' is already declared");
    }
    (base ? base_names : fiber_names).push_back(tok.text);
  }

  void ensure_shapes() {
    anchor.resize(fiber_names.size());
    for (auto& row : anchor) row.resize(base_names.size(), Poly::zero());
    structure.resize(fiber_names.size());
    for (auto& plane : structure) {
      plane.resize(fiber_names.size());
      for (auto& row : plane) row.resize(fiber_names.size(), Poly::zero());
    }
  }

  /// Variable environment for bracket right-hand sides.
  std::map<std::string, Var> bracket_env() const {
    std::map<std::string, Var> env;
    for (const auto& n : base_names) env.emplace(n, base_var(n));
    for (const auto& n : fiber_names) env.emplace(n, fiber_var(n));
    return env;
  }

  /// Environment for anchor right-hand sides: base variables plus their
  /// direction symbols d<name>. A declared variable shadows the direction
  /// symbol of the same spelling.
  std::map<std::string, Var> anchor_env() const {
    std::map<std::string, Var> env;
    for (const auto& n : base_names) env.emplace(n, base_var(n));
    for (const auto& n : base_names) env.emplace("d" + n, fiber_var("d" + n));
    return env;
  }

  LieRinehartPresentation build() const {
    LieRinehartPresentation pres;
    pres.name = name;
    for (const auto& n : base_names) pres.base_vars.push_back(base_var(n));
    for (const auto& n : fiber_names) pres.l_basis.push_back(fiber_var(n));
    pres.anchor = anchor;
    pres.structure = structure;
    try {
      validate_presentation(pres);
    } catch (const std::invalid_argument& problem) {
      fail_at(line, col, std::string("algebra '") + name + "': " + problem.what());
    }
    return pres;
  }
};

class DocumentParser {
 public:
  explicit DocumentParser(std::vector<Token> tokens) : parser_(std::move(tokens)) {}

  DslDocument parse() {
    DslDocument doc;
    while (!parser_.done()) {
      const Token& tok = parser_.peek();
      if (tok.kind != TokKind::ident) {
        fail_at(tok, "unexpected " + describe(tok),
                {"algebra", "extension", "scene", "a command"});
      }
      if (tok.text == "algebra") {
        parse_algebra(doc);
      } else if (tok.text == "extension") {
        parse_extension(doc);
      } else if (tok.text == "scene") {
        parse_scene(doc);
      } else if (is_command_verb(tok.text)) {
        parse_command(doc);
      } else {
        fail_at(tok, "unknown declaration '" + tok.text + "'",
                {"algebra", "extension", "scene", "check", "bracket", "reconstruct",
                 "build_extension", "curvature", "reconstruct_extension"});
      }
    }
    return doc;
  }

 private:
  static bool is_command_verb(const std::string& word) {
    return word == "check" || word == "bracket" || word == "reconstruct" ||
           word == "build_extension" || word == "curvature" || word == "reconstruct_extension";
  }

  void claim_name(const Token& tok) {
    if (!declared_names_.insert(tok.text).second) {
      fail_at(tok, "'" + tok.text + "' is already the name of another declaration");
    }
  }

  void parse_name_list(AlgebraBuilder& builder, bool base) {
    do {
      Token name = parser_.expect_ident("a variable name");
      builder.declare(name, base);
    } while (parser_.at_punct(",") && (parser_.get(), true));
    parser_.expect_punct(";");
  }

  /// anchor IDENT -> expr ;
  void parse_anchor_item(AlgebraBuilder& builder) {
    Token kw = parser_.get();
    if (!builder.allow_anchor) {
      fail_at(kw, "vertical generators cannot carry an anchor");
    }
    Token gen = parser_.expect_ident("a generator name");
    auto j = builder.fiber_index(gen.text);
    if (!j) fail_at(gen, "unknown generator '" + gen.text + "'");
    parser_.expect_punct("->");
    const Token& start = parser_.peek();
    Poly expr = parser_.parse_expression(builder.anchor_env());
    parser_.expect_punct(";");
    builder.ensure_shapes();
    Poly remainder = expr;
    for (std::size_t s = 0; s < builder.base_names.size(); ++s) {
      Var direction = fiber_var("d" + builder.base_names[s]);
      Poly coeff = expr.partial(direction);
      if (coeff.uses(VarKind::fiber)) {
        fail_at(start, "anchor coefficients must be polynomials in the base variables");
      }
      builder.anchor[*j][s] = coeff;
      remainder -= coeff * Poly::variable(direction);
    }
    if (!remainder.is_zero()) {
      fail_at(start, "anchor expression must be linear in the direction symbols");
    }
  }

  /// bracket [ IDENT , IDENT ] = expr ;
  void parse_bracket_item(AlgebraBuilder& builder) {
    parser_.get();
    parser_.expect_punct("[");
    Token left = parser_.expect_ident("a generator name");
    auto j = builder.fiber_index(left.text);
    if (!j) fail_at(left, "unknown generator '" + left.text + "'");
    parser_.expect_punct(",");
    Token right = parser_.expect_ident("a generator name");
    auto k = builder.fiber_index(right.text);
    if (!k) fail_at(right, "unknown generator '" + right.text + "'");
    parser_.expect_punct("]");
    if (*j == *k) fail_at(left, "bracket of a generator with itself is identically zero");
    if (!builder.bracket_seen.insert(std::minmax(*j, *k)).second) {
      fail_at(left, "bracket [" + left.text + "," + right.text + "] is already declared");
    }
    parser_.expect_punct("=");
    const Token& start = parser_.peek();
    Poly expr = parser_.parse_expression(builder.bracket_env());
    parser_.expect_punct(";");
    builder.ensure_shapes();
    store_fiber_linear(builder, start, expr, [&](std::size_t i, const Poly& coeff) {
      builder.structure[*j][*k][i] = coeff;
      builder.structure[*k][*j][i] = -coeff;
    });
  }

  /// Decomposes expr = Σ coeff_i · e_i with base-only coefficients, failing
  /// with a positioned diagnostic otherwise.
  void store_fiber_linear(const AlgebraBuilder& builder, const Token& start, const Poly& expr,
                          const std::function<void(std::size_t, const Poly&)>& sink) {
    Poly remainder = expr;
    for (std::size_t i = 0; i < builder.fiber_names.size(); ++i) {
      Var gen = fiber_var(builder.fiber_names[i]);
      Poly coeff = expr.partial(gen);
      if (coeff.uses(VarKind::fiber)) {
        fail_at(start, "bracket values must be linear in the generators");
      }
      sink(i, coeff);
      remainder -= coeff * Poly::variable(gen);
    }
    if (!remainder.is_zero()) {
      fail_at(start,
              "bracket values must be generator-linear with base-variable coefficients");
    }
  }

  void parse_algebra_items(AlgebraBuilder& builder) {
    parser_.expect_punct("{");
    while (!parser_.at_punct("}")) {
      if (parser_.at_ident("base")) {
        parser_.get();
        parse_name_list(builder, true);
      } else if (parser_.at_ident("basis")) {
        parser_.get();
        parse_name_list(builder, false);
      } else if (parser_.at_ident("anchor")) {
        parse_anchor_item(builder);
      } else if (parser_.at_ident("bracket")) {
        parse_bracket_item(builder);
      } else {
        fail_at(parser_.peek(), "unexpected " + describe(parser_.peek()),
                {"base", "basis", "anchor", "bracket", "'}'"});
      }
    }
    parser_.get();
    builder.ensure_shapes();
  }

  void parse_algebra(DslDocument& doc) {
    Token kw = parser_.get();
    Token name = parser_.expect_ident("an algebra name");
    claim_name(name);
    AlgebraBuilder builder;
    builder.name = name.text;
    builder.line = kw.line;
    builder.col = kw.col;
    parse_algebra_items(builder);
    doc.algebras.push_back(
        std::make_shared<const LieRinehartPresentation>(builder.build()));
  }

  /// [ IDENT , IDENT ] = expr ; rules for the nabla and omega blocks.
  void parse_pair_rules(AlgebraBuilder& dprime, AlgebraBuilder& prime, bool omega,
                        std::vector<std::vector<std::vector<Poly>>>& tensor) {
    parser_.expect_punct("{");
    std::set<std::pair<std::size_t, std::size_t>> seen;
    while (!parser_.at_punct("}")) {
      parser_.expect_punct("[");
      Token left = parser_.expect_ident("a generator name");
      auto j = dprime.fiber_index(left.text);
      if (!j) fail_at(left, "unknown quotient generator '" + left.text + "'");
      parser_.expect_punct(",");
      Token right = parser_.expect_ident("a generator name");
      parser_.expect_punct("]");
      parser_.expect_punct("=");
      std::optional<std::size_t> k;
      if (omega) {
        k = dprime.fiber_index(right.text);
        if (!k) fail_at(right, "unknown quotient generator '" + right.text + "'");
        if (*j == *k) fail_at(left, "curvature of a generator with itself is identically zero");
        if (!seen.insert(std::minmax(*j, *k)).second) {
          fail_at(left, "curvature of [" + left.text + "," + right.text + "] is already declared");
        }
      } else {
        k = prime.fiber_index(right.text);
        if (!k) fail_at(right, "unknown vertical generator '" + right.text + "'");
        if (!seen.insert({*j, *k}).second) {
          fail_at(left, "action of [" + left.text + "," + right.text + "] is already declared");
        }
      }
      const Token& start = parser_.peek();
      Poly expr = parser_.parse_expression(prime.bracket_env());
      parser_.expect_punct(";");
      store_fiber_linear(prime, start, expr, [&](std::size_t i, const Poly& coeff) {
        tensor[*j][*k][i] = coeff;
        if (omega) tensor[*k][*j][i] = -coeff;
      });
    }
    parser_.get();
  }

  void parse_extension(DslDocument& doc) {
    Token kw = parser_.get();
    Token name = parser_.expect_ident("an extension name");
    claim_name(name);
    parser_.expect_punct("{");

    std::vector<std::string> base_names;
    std::set<std::string> base_seen;
    AlgebraBuilder prime;
    AlgebraBuilder dprime;
    prime.allow_anchor = false;
    prime.name = name.text + "_vertical";
    dprime.name = name.text + "_quotient";
    prime.line = dprime.line = kw.line;
    prime.col = dprime.col = kw.col;
    bool have_prime = false, have_dprime = false;
    std::vector<std::vector<std::vector<Poly>>> nabla, omega;
    bool have_nabla = false, have_omega = false;

    while (!parser_.at_punct("}")) {
      if (parser_.at_ident("base")) {
        parser_.get();
        do {
          Token var_name = parser_.expect_ident("a variable name");
          if (!base_seen.insert(var_name.text).second) {
            fail_at(var_name, "name '" + var_name.text + "' is already declared");
          }
          base_names.push_back(var_name.text);
        } while (parser_.at_punct(",") && (parser_.get(), true));
        parser_.expect_punct(";");
        prime.base_names = base_names;
        prime.declared.insert(base_seen.begin(), base_seen.end());
        dprime.base_names = base_names;
        dprime.declared.insert(base_seen.begin(), base_seen.end());
      } else if (parser_.at_ident("lprime")) {
        Token blk = parser_.get();
        if (have_prime) fail_at(blk, "duplicate lprime block");
        have_prime = true;
        parse_algebra_items(prime);
      } else if (parser_.at_ident("ldoubleprime")) {
        Token blk = parser_.get();
        if (have_dprime) fail_at(blk, "duplicate ldoubleprime block");
        have_dprime = true;
        parse_algebra_items(dprime);
      } else if (parser_.at_ident("nabla")) {
        Token blk = parser_.get();
        if (!have_prime || !have_dprime) {
          fail_at(blk, "nabla must follow the lprime and ldoubleprime blocks");
        }
        if (have_nabla) fail_at(blk, "duplicate nabla block");
        have_nabla = true;
        nabla.assign(dprime.fiber_names.size(),
                     std::vector<std::vector<Poly>>(
                         prime.fiber_names.size(),
                         std::vector<Poly>(prime.fiber_names.size(), Poly::zero())));
        parse_pair_rules(dprime, prime, false, nabla);
      } else if (parser_.at_ident("omega")) {
        Token blk = parser_.get();
        if (!have_prime || !have_dprime) {
          fail_at(blk, "omega must follow the lprime and ldoubleprime blocks");
        }
        if (have_omega) fail_at(blk, "duplicate omega block");
        have_omega = true;
        omega.assign(dprime.fiber_names.size(),
                     std::vector<std::vector<Poly>>(
                         dprime.fiber_names.size(),
                         std::vector<Poly>(prime.fiber_names.size(), Poly::zero())));
        parse_pair_rules(dprime, prime, true, omega);
      } else {
        fail_at(parser_.peek(), "unexpected " + describe(parser_.peek()),
                {"base", "lprime", "ldoubleprime", "nabla", "omega", "'}'"});
      }
    }
    parser_.get();
    if (!have_prime) fail_at(kw, "extension '" + name.text + "' is missing its lprime block");
    if (!have_dprime) {
      fail_at(kw, "extension '" + name.text + "' is missing its ldoubleprime block");
    }

    ExtensionData ext;
    ext.name = name.text;
    ext.l_prime = prime.build();
    ext.l_double_prime = dprime.build();
    if (!have_nabla) {
      nabla.assign(dprime.fiber_names.size(),
                   std::vector<std::vector<Poly>>(
                       prime.fiber_names.size(),
                       std::vector<Poly>(prime.fiber_names.size(), Poly::zero())));
    }
    if (!have_omega) {
      omega.assign(dprime.fiber_names.size(),
                   std::vector<std::vector<Poly>>(
                       dprime.fiber_names.size(),
                       std::vector<Poly>(prime.fiber_names.size(), Poly::zero())));
    }
    ext.nabla = std::move(nabla);
    ext.omega = std::move(omega);
    try {
      validate_extension(ext);
    } catch (const std::invalid_argument& problem) {
      fail_at(kw, "extension '" + name.text + "': " + problem.what());
    }
    doc.extensions.push_back(std::move(ext));
  }

  void parse_scene(DslDocument& doc) {
    parser_.get();
    Token name = parser_.expect_ident("a scene name");
    claim_name(name);
    parser_.expect_punct("{");
    SceneDecl scene;
    scene.name = name.text;
    while (!parser_.at_punct("}")) {
      Token field = parser_.expect_ident("'s' or 'l'");
      if (field.text != "s" && field.text != "l") {
        fail_at(field, "unknown scene field '" + field.text + "'", {"s", "l"});
      }
      parser_.expect_punct("=");
      const Token& value = parser_.peek();
      if (value.kind != TokKind::number || value.text.find('/') != std::string::npos) {
        fail_at(value, "scene fields take positive integers");
      }
      parser_.get();
      long parsed = std::strtol(value.text.c_str(), nullptr, 10);
      if (parsed < 1 || parsed > 16) {
        fail_at(value, "scene fields must lie between 1 and 16");
      }
      (field.text == "s" ? scene.s : scene.l) = static_cast<int>(parsed);
      parser_.expect_punct(";");
    }
    parser_.get();
    doc.scenes.push_back(scene);
  }

  void parse_command(DslDocument& doc) {
    Token verb = parser_.get();
    Token target = parser_.expect_ident("a declaration name");
    CommandDecl cmd;
    cmd.verb = verb.text;
    cmd.target = target.text;
    cmd.line = verb.line;
    cmd.col = verb.col;
    while (parser_.peek().kind == TokKind::string) {
      cmd.args.push_back(parser_.get().text);
    }
    parser_.expect_punct(";");
    if (cmd.verb == "bracket" && cmd.args.size() != 2) {
      fail_at(verb, "bracket takes exactly two quoted expressions");
    }
    doc.commands.push_back(std::move(cmd));
  }

  Parser parser_;
  std::set<std::string> declared_names_;
};

}  // namespace

std::string Diagnostic::render(const std::string& filename) const {
  std::ostringstream out;
  out << filename << ":" << line << ":" << col << ": error: " << message;
  if (!expected.empty()) {
    out << " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) out << ", ";
      out << expected[i];
    }
    out << ")";
  }
  return out.str();
}

std::shared_ptr<const LieRinehartPresentation> DslDocument::find_algebra(
    const std::string& name) const {
  for (const auto& algebra : algebras) {
    if (algebra->name == name) return algebra;
  }
  return nullptr;
}

const ExtensionData* DslDocument::find_extension(const std::string& name) const {
  for (const auto& ext : extensions) {
    if (ext.name == name) return &ext;
  }
  return nullptr;
}

const SceneDecl* DslDocument::find_scene(const std::string& name) const {
  for (const auto& scene : scenes) {
    if (scene.name == name) return &scene;
  }
  return nullptr;
}

ParseResult parse_document(const std::string& text) {
  ParseResult result;
  try {
    DocumentParser parser(lex(text));
    result.document = parser.parse();
  } catch (const ParseError& problem) {
    result.diagnostics.push_back(problem.diagnostic);
  }
  return result;
}

Poly parse_poly_expression(const std::string& text, const std::map<std::string, Var>& env) {
  Parser parser(lex(text));
  Poly out = parser.parse_expression(env);
  if (!parser.done()) {
    fail_at(parser.peek(), "unexpected " + describe(parser.peek()) + " after the expression");
  }
  return out;
}

std::map<std::string, Var> expression_env(const LieRinehartPresentation& pres) {
  std::map<std::string, Var> env;
  for (const Var& v : pres.base_vars) env.emplace(v.name, v);
  for (const Var& v : pres.l_basis) env.emplace(v.name, v);
  return env;
}

}  // namespace rinehart
