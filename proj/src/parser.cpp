#include "scdprolog/parser.hpp"

#include <cctype>
#include <charconv>
#include <unordered_map>

#include "scdprolog/builtins.hpp"
#include "scdprolog/operators.hpp"

namespace scd {

std::string Token::describe() const {
  switch (kind) {
    case TokenKind::End:
      return text.empty() ? "end of input" : "'.'";
    case TokenKind::Atom:
      return quoted ? "quoted atom '" + text + "'" : "atom '" + text + "'";
    case TokenKind::Variable:
      return "variable " + text;
    case TokenKind::Integer:
      return "integer " + text;
    case TokenKind::Punct:
      return "'" + text + "'";
  }
  return text;
}

// ---------------------------------------------------------------------------
// Tokenizer

namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      const bool layout = skip_layout();
      if (at_end()) break;
      Token tok = next();
      tok.layout_before = layout;
      out.push_back(std::move(tok));
    }
    return out;
  }

  Position position() const { return {line_, col_}; }

 private:
  bool at_end() const { return i_ >= src_.size(); }
  char peek(std::size_t k = 0) const { return i_ + k < src_.size() ? src_[i_ + k] : '\0'; }

  void advance() {
    if (src_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }

  bool skip_layout() {
    bool any = false;
    while (!at_end()) {
      const char c = peek();
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
        any = true;
      } else if (c == '%') {
        while (!at_end() && peek() != '\n') advance();
        any = true;
      } else {
        break;
      }
    }
    return any;
  }

  // A '.' ends a clause when followed by layout, a comment or end of input.
  bool is_end_dot(std::size_t k) const {
    if (peek(k) != '.') return false;
    if (i_ + k + 1 >= src_.size()) return true;
    const char n = src_[i_ + k + 1];
    return std::isspace(static_cast<unsigned char>(n)) || n == '%';
  }

  Token next() {
    const Position start = position();
    const char c = peek();
    const auto uc = static_cast<unsigned char>(c);
    std::string text;
    if (std::isdigit(uc)) {
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        text += peek();
        advance();
      }
      std::int64_t value = 0;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
      if (ec != std::errc()) throw LexError(start, "integer out of range: " + text);
      return {TokenKind::Integer, text, start};
    }
    if (std::isupper(uc) || c == '_' || std::islower(uc)) {
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') {
        text += peek();
        advance();
      }
      return {std::islower(uc) ? TokenKind::Atom : TokenKind::Variable, text, start};
    }
    if (c == '\'') return quoted(start);
    if (c == '(' || c == ')' || c == '[' || c == ']' || c == ',' || c == '|') {
      advance();
      return {TokenKind::Punct, std::string(1, c), start};
    }
    if (is_end_dot(0)) {
      advance();
      return {TokenKind::End, ".", start};
    }
    if (is_symbol_char(c)) {
      while (is_symbol_char(peek()) && !is_end_dot(0)) {
        text += peek();
        advance();
      }
      return {TokenKind::Punct, text, start};
    }
    throw LexError(start, std::string("illegal character '") + c + "'");
  }

  Token quoted(Position start) {
    advance();
    std::string text;
    while (true) {
      if (at_end()) throw LexError(start, "unterminated quoted atom");
      const char c = peek();
      if (c == '\'') {
        if (peek(1) == '\'') {
          text += '\'';
          advance();
          advance();
          continue;
        }
        advance();
        break;
      }
      if (c == '\\') {
        const Position esc = position();
        advance();
        if (at_end()) throw LexError(start, "unterminated quoted atom");
        switch (peek()) {
          case 'n': text += '\n'; break;
          case 't': text += '\t'; break;
          case '\\': text += '\\'; break;
          case '\'': text += '\''; break;
          default:
            throw LexError(esc, std::string("unknown escape sequence '\\") + peek() + "'");
        }
        advance();
        continue;
      }
      text += c;
      advance();
    }
    Token tok{TokenKind::Atom, text, start};
    tok.quoted = true;
    return tok;
  }

  std::string_view src_;
  std::size_t i_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

}  // namespace

std::vector<Token> tokenize(std::string_view source) { return Lexer(source).run(); }

// ---------------------------------------------------------------------------
// Parser

namespace {

bool is_symbolic(const Token& t) {
  return t.kind == TokenKind::Punct && !t.text.empty() && is_symbol_char(t.text[0]);
}

class Parser {
 public:
  explicit Parser(std::string_view source) : toks_(tokenize(source)) {
    // Position just past the last character, for end-of-input diagnostics.
    std::size_t line = 1, col = 1;
    for (char c : source) {
      if (c == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    eof_ = Token{TokenKind::End, "", Position{line, col}};
  }

  bool at_eof() const { return pos_ >= toks_.size(); }

  // Reads one `.`-terminated term with a fresh variable scope.
  Term read_clause() {
    vars_.clear();
    next_var_ = 0;
    Term t = parse(kMaxPrecedence).first;
    const Token& tok = peek();
    if (tok.kind != TokenKind::End || tok.text.empty()) {
      throw ParseError(tok.position, "operator or '.'", tok.describe());
    }
    ++pos_;
    return t;
  }

  void skip_query_prefix() {
    if (!at_eof() && peek().kind == TokenKind::Punct && peek().text == "?-") ++pos_;
  }

  void expect_eof() {
    if (!at_eof()) throw ParseError(peek().position, "end of input", peek().describe());
  }

  Position position_of(const Term& t) const {
    auto it = positions_.find(t.node_address());
    return it == positions_.end() ? eof_.position : it->second;
  }

  Goal to_goal(const Term& t) const {
    switch (t.kind()) {
      case TermKind::Var:
        throw ParseError(position_of(t), "callable goal", "variable " + t.as_var().hint);
      case TermKind::Integer:
        throw ParseError(position_of(t), "callable goal",
                         "integer " + std::to_string(t.as_integer().value));
      default:
        break;
    }
    if (t.arity() == 2) {
      if (t.name() == ",") return Goal::conj(to_goal(t.args()[0]), to_goal(t.args()[1]));
      if (t.name() == ";;") return Goal::scd(to_goal(t.args()[0]), to_goal(t.args()[1]));
      if (t.name() == ";" || t.name() == "*->") {
        throw ParseError(position_of(t), "goal", "unsupported control construct '" + t.name() + "'");
      }
    }
    return Goal::atomic(t);
  }

  Clause to_clause(const Term& t) const {
    if (t.is_compound() && t.arity() == 1 && (t.name() == ":-" || t.name() == "?-")) {
      throw ParseError(position_of(t), "clause", "directive '" + t.name() + "'");
    }
    if (t.is_compound() && t.arity() == 2 && t.name() == ":-") {
      const Term& head = t.args()[0];
      check_head(head);
      return {head, to_goal(t.args()[1])};
    }
    check_head(t);
    return {t, std::nullopt};
  }

 private:
  const Token& peek(std::size_t k = 0) const {
    return pos_ + k < toks_.size() ? toks_[pos_ + k] : eof_;
  }

  void check_head(const Term& head) const {
    if (head.is_var()) throw BadClauseHead(position_of(head), "variable " + head.as_var().hint);
    if (head.is_integer()) {
      throw BadClauseHead(position_of(head), "integer " + std::to_string(head.as_integer().value));
    }
    const auto& name = head.name();
    if (head.arity() == 2 && (name == "," || name == ";;" || name == ";" || name == "*->")) {
      throw BadClauseHead(position_of(head), "control construct '" + name + "'");
    }
    if (is_builtin(name, head.arity())) {
      throw BadClauseHead(position_of(head),
                          "cannot redefine builtin " + name + "/" + std::to_string(head.arity()));
    }
  }

  Term record(Term t, Position p) {
    positions_.try_emplace(t.node_address(), p);
    return t;
  }

  static bool starts_term(const Token& t) {
    switch (t.kind) {
      case TokenKind::Atom:
      case TokenKind::Variable:
      case TokenKind::Integer:
        return true;
      case TokenKind::Punct:
        return t.text == "(" || t.text == "[" || is_symbolic(t);
      case TokenKind::End:
        return false;
    }
    return false;
  }

  const Token& expect(std::string_view punct, std::string_view what) {
    const Token& t = peek();
    if (t.kind != TokenKind::Punct || t.text != punct) {
      throw ParseError(t.position, std::string(what), t.describe());
    }
    ++pos_;
    return t;
  }

  std::optional<OperatorDef> infix_at(const Token& t) const {
    if (t.kind == TokenKind::Punct && (t.text == "," || is_symbolic(t))) return infix_operator(t.text);
    if (t.kind == TokenKind::Atom && !t.quoted && (t.text == "is" || t.text == "mod")) {
      return infix_operator(t.text);
    }
    return std::nullopt;
  }

  std::pair<Term, int> parse(int max_prec) {
    auto [left, left_prec] = primary(max_prec);
    while (true) {
      const Token& op_tok = peek();
      auto op = infix_at(op_tok);
      if (!op || op->precedence > max_prec || left_prec > op->left_max()) break;
      ++pos_;
      Term right = parse(op->right_max()).first;
      left = record(Term::compound(op_tok.text, {left, right}), op_tok.position);
      left_prec = op->precedence;
    }
    return {left, left_prec};
  }

  std::vector<Term> arguments() {
    std::vector<Term> args;
    args.push_back(parse(kArgPrecedence).first);
    while (peek().kind == TokenKind::Punct && peek().text == ",") {
      ++pos_;
      args.push_back(parse(kArgPrecedence).first);
    }
    return args;
  }

  Term variable(const Token& t) {
    if (t.text == "_") return record(Term::var(next_var_++, t.text), t.position);
    auto it = vars_.find(t.text);
    if (it != vars_.end()) return it->second;
    Term v = record(Term::var(next_var_++, t.text), t.position);
    vars_.emplace(t.text, v);
    return v;
  }

  Term list(const Token& open) {
    if (peek().kind == TokenKind::Punct && peek().text == "]") {
      ++pos_;
      return record(Term::atom("[]"), open.position);
    }
    std::vector<Term> items = arguments();
    std::optional<Term> tail;
    if (peek().kind == TokenKind::Punct && peek().text == "|") {
      ++pos_;
      tail = parse(kArgPrecedence).first;
    }
    expect("]", "',', '|' or ']'");
    return record(Term::list(items, tail), open.position);
  }

  std::pair<Term, int> primary(int max_prec) {
    const Token tok = peek();
    switch (tok.kind) {
      case TokenKind::Integer:
        ++pos_;
        return {record(Term::integer(std::stoll(tok.text)), tok.position), 0};
      case TokenKind::Variable:
        ++pos_;
        return {variable(tok), 0};
      case TokenKind::End:
        throw ParseError(tok.position, "term", tok.describe());
      case TokenKind::Punct:
        if (tok.text == "(") {
          ++pos_;
          Term inner = parse(kMaxPrecedence).first;
          expect(")", "operator or ')'");
          return {inner, 0};
        }
        if (tok.text == "[") {
          ++pos_;
          return {list(tok), 0};
        }
        if (!is_symbolic(tok)) throw ParseError(tok.position, "term", tok.describe());
        break;
      case TokenKind::Atom:
        break;
    }
    // Name token: atom, compound in functional notation, negative integer
    // or prefix operator application.
    ++pos_;
    const Token& next = peek();
    if (next.kind == TokenKind::Punct && next.text == "(" && !next.layout_before) {
      ++pos_;
      std::vector<Term> args = arguments();
      expect(")", "',' or ')'");
      return {record(Term::compound(tok.text, std::move(args)), tok.position), 0};
    }
    if (!tok.quoted && tok.text == "-" && next.kind == TokenKind::Integer && !next.layout_before) {
      ++pos_;
      std::int64_t value = 0;
      const std::string digits = "-" + next.text;
      std::from_chars(digits.data(), digits.data() + digits.size(), value);
      return {record(Term::integer(value), tok.position), 0};
    }
    if (!tok.quoted && max_prec >= kMaxPrecedence && prefix_operator(tok.text) && starts_term(next) &&
        !infix_at(next)) {
      Term arg = parse(kMaxPrecedence - 1).first;
      return {record(Term::compound(tok.text, {arg}), tok.position), kMaxPrecedence};
    }
    return {record(Term::atom(tok.text), tok.position), 0};
  }

  std::vector<Token> toks_;
  Token eof_;
  std::size_t pos_ = 0;
  std::unordered_map<std::string, Term> vars_;
  VarId next_var_ = 0;
  std::unordered_map<const void*, Position> positions_;
};

}  // namespace

Program parse_program(std::string_view source) {
  Parser parser(source);
  Program program;
  while (!parser.at_eof()) {
    Term t = parser.read_clause();
    program.add(parser.to_clause(t));
  }
  return program;
}

Goal parse_query(std::string_view source) {
  Parser parser(source);
  parser.skip_query_prefix();
  Term t = parser.read_clause();
  parser.expect_eof();
  return parser.to_goal(t);
}

Term parse_term(std::string_view source) {
  Parser parser(source);
  Term t = parser.read_clause();
  parser.expect_eof();
  return t;
}

std::vector<Term> read_terms(std::string_view source) {
  Parser parser(source);
  std::vector<Term> out;
  while (!parser.at_eof()) out.push_back(parser.read_clause());
  return out;
}

std::vector<Term> answer_variables(const Goal& g) {
  std::vector<Term> out;
  for (auto& v : variables_of(g)) {
    const auto& hint = v.as_var().hint;
    if (!hint.empty() && hint[0] != '_') out.push_back(v);
  }
  return out;
}

}  // namespace scd
