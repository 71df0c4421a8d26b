#include "flcalc/syntax.hpp"

#include <array>
#include <cctype>
#include <sstream>
#include <utility>
#include <vector>

#include <json.hpp>

namespace flcalc {

SourceError::SourceError(std::size_t line, std::size_t column, std::string expected)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": expected " + expected),
      line_(line), column_(column), expected_(std::move(expected)) {}

namespace {

enum class Tok {
  Ident, One, Zero, Top, Bot, Neg, CoNeg,
  LParen, RParen, Star, With, Plus, Arrow, Back, Comma, Turnstile, End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

auto describe(Tok t) -> std::string {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::One: return "'1'";
    case Tok::Zero: return "'0'";
    case Tok::Top: return "'top'";
    case Tok::Bot: return "'bot'";
    case Tok::Neg: return "'neg'";
    case Tok::CoNeg: return "'coneg'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Star: return "'*'";
    case Tok::With: return "'/\\'";
    case Tok::Plus: return "'\\/'";
    case Tok::Arrow: return "'->'";
    case Tok::Back: return "'<-'";
    case Tok::Comma: return "','";
    case Tok::Turnstile: return "'|-'";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Alias {
  std::string_view spelling;
  Tok kind;
};

// Longest spellings first so that "¬′" wins over "¬".
constexpr std::array<Alias, 16> kSymbols = {{
    {"\xC2\xAC\xE2\x80\xB2", Tok::CoNeg}, // ¬′
    {"\xE2\x8A\x97", Tok::Star},          // ⊗
    {"\xE2\x88\xA7", Tok::With},          // ∧
    {"\xE2\x88\xA8", Tok::Plus},          // ∨
    {"\xE2\x86\x92", Tok::Arrow},         // →
    {"\xE2\x86\x90", Tok::Back},          // ←
    {"\xE2\x8A\xA4", Tok::Top},           // ⊤
    {"\xE2\x8A\xA5", Tok::Bot},           // ⊥
    {"\xE2\x8A\xA2", Tok::Turnstile},     // ⊢
    {"\xC2\xAC", Tok::Neg},               // ¬
    {"->", Tok::Arrow},
    {"<-", Tok::Back},
    {"/\\", Tok::With},
    {"\\/", Tok::Plus},
    {"|-", Tok::Turnstile},
    {"*", Tok::Star},
}};

auto isIdentStart(char c) -> bool { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
auto isIdentChar(char c) -> bool {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '\'';
}

class Lexer {
public:
  Lexer(std::string_view text, std::size_t line, std::size_t column)
      : text_(text), line_(line), column_(column) {}

  auto tokenize() -> std::vector<Token> {
    std::vector<Token> out;
    while (true) {
      skipSpace();
      if (pos_ >= text_.size()) {
        out.push_back(Token{Tok::End, {}, line_, column_});
        return out;
      }
      out.push_back(next());
    }
  }

private:
  void skipSpace() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r' ||
                                   text_[pos_] == '\n')) {
      if (text_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
      ++pos_;
    }
  }

  void advance(std::size_t bytes) {
    for (std::size_t i = 0; i < bytes; ++i) {
      // Count code points, not bytes.
      if ((static_cast<unsigned char>(text_[pos_ + i]) & 0xC0) != 0x80)
        ++column_;
    }
    pos_ += bytes;
  }

  auto next() -> Token {
    const std::size_t line = line_;
    const std::size_t col = column_;
    const auto rest = text_.substr(pos_);
    for (const auto& a : kSymbols) {
      if (rest.starts_with(a.spelling)) {
        advance(a.spelling.size());
        return Token{a.kind, std::string(a.spelling), line, col};
      }
    }
    const char c = rest.front();
    auto single = [&](Tok k) {
      advance(1);
      return Token{k, std::string(1, c), line, col};
    };
    switch (c) {
      case '(': return single(Tok::LParen);
      case ')': return single(Tok::RParen);
      case ',': return single(Tok::Comma);
      case '1': return single(Tok::One);
      case '0': return single(Tok::Zero);
      default: break;
    }
    if (isIdentStart(c)) {
      std::size_t n = 1;
      while (n < rest.size() && isIdentChar(rest[n]))
        ++n;
      std::string word(rest.substr(0, n));
      advance(n);
      Tok k = Tok::Ident;
      if (word == "neg") k = Tok::Neg;
      else if (word == "coneg") k = Tok::CoNeg;
      else if (word == "top") k = Tok::Top;
      else if (word == "bot") k = Tok::Bot;
      return Token{k, std::move(word), line, col};
    }
    throw SourceError(line, col, "a formula token");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t column_;
};

class Parser {
public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  auto formula() -> Formula {
    Formula lhs = coimps();
    if (peek() == Tok::Arrow) {
      ++i_;
      return Formula::imp(std::move(lhs), formula());
    }
    return lhs;
  }

  auto sequent() -> Sequent {
    Sequent s;
    if (peek() != Tok::Turnstile) {
      s.antecedent.push_back(formula());
      while (peek() == Tok::Comma) {
        ++i_;
        s.antecedent.push_back(formula());
      }
    }
    expect(Tok::Turnstile, "',' or '|-'");
    if (peek() != Tok::End)
      s.succedent = formula();
    return s;
  }

  void finish() { expect(Tok::End, "end of input"); }

private:
  auto peek() const -> Tok { return toks_[i_].kind; }

  void expect(Tok k, const std::string& what) {
    if (peek() != k)
      fail(what);
    ++i_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    const auto& t = toks_[i_];
    throw SourceError(t.line, t.column, what + ", found " + describe(t.kind));
  }

  auto coimps() -> Formula {
    Formula lhs = disjunction();
    while (peek() == Tok::Back) {
      ++i_;
      lhs = Formula::coimp(std::move(lhs), disjunction());
    }
    return lhs;
  }

  auto disjunction() -> Formula {
    return chain(Tok::Plus, Kind::Plus, [&] {
      return chain(Tok::With, Kind::With, [&] { return chain(Tok::Star, Kind::Tensor, [&] { return prefix(); }); });
    });
  }

  template <class Sub>
  auto chain(Tok op, Kind k, Sub sub) -> Formula {
    Formula lhs = sub();
    while (peek() == op) {
      ++i_;
      lhs = Formula::binary(k, std::move(lhs), sub());
    }
    return lhs;
  }

  auto prefix() -> Formula {
    const auto& t = toks_[i_];
    switch (t.kind) {
      case Tok::Neg: ++i_; return Formula::neg(prefix());
      case Tok::CoNeg: ++i_; return Formula::coneg(prefix());
      case Tok::Ident: ++i_; return Formula::atom(t.text);
      case Tok::One: ++i_; return Formula::one();
      case Tok::Zero: ++i_; return Formula::zero();
      case Tok::Top: ++i_; return Formula::top();
      case Tok::Bot: ++i_; return Formula::bot();
      case Tok::LParen: {
        ++i_;
        Formula f = formula();
        expect(Tok::RParen, "')'");
        return f;
      }
      default: fail("a formula");
    }
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

auto parseSequentAt(std::string_view text, std::size_t line, std::size_t column) -> Sequent {
  Parser p(Lexer(text, line, column).tokenize());
  Sequent s = p.sequent();
  p.finish();
  return s;
}

// Binding strength: implications 1, \/ 2, /\ 3, * 4, prefix 5, leaves 6.
auto level(Kind k) -> int {
  switch (k) {
    case Kind::Imp:
    case Kind::CoImp: return 1;
    case Kind::Plus: return 2;
    case Kind::With: return 3;
    case Kind::Tensor: return 4;
    case Kind::Neg:
    case Kind::CoNeg: return 5;
    default: return 6;
  }
}

struct Spelling {
  std::string_view imp, coimp, tensor, with, plus, neg, coneg, one, zero, top, bot;
  bool latex;
};

constexpr Spelling kAscii{" -> ", " <- ", " * ", " /\\ ", " \\/ ", "neg ", "coneg ", "1", "0", "top", "bot", false};
constexpr Spelling kLatex{" \\to ", " \\leftarrow ", " \\otimes ", " \\wedge ", " \\vee ", "\\neg ", "\\neg' ",
                          "\\mathbf{1}", "\\mathbf{0}", "\\top", "\\bot", true};

void render(const Formula& f, const Spelling& sp, std::string& out);

void renderWrapped(const Formula& f, bool wrap, const Spelling& sp, std::string& out) {
  if (wrap) {
    out += "(";
    render(f, sp, out);
    out += ")";
  } else {
    render(f, sp, out);
  }
}

void render(const Formula& f, const Spelling& sp, std::string& out) {
  switch (f.kind()) {
    case Kind::Atom: out += f.name(); return;
    case Kind::One: out += sp.one; return;
    case Kind::Zero: out += sp.zero; return;
    case Kind::Top: out += sp.top; return;
    case Kind::Bot: out += sp.bot; return;
    case Kind::Neg:
    case Kind::CoNeg:
      out += f.is(Kind::Neg) ? sp.neg : sp.coneg;
      renderWrapped(f.body(), level(f.body().kind()) < 5, sp, out);
      return;
    case Kind::Imp:
      renderWrapped(f.left(), f.left().is(Kind::Imp), sp, out);
      out += sp.imp;
      render(f.right(), sp, out);
      return;
    case Kind::CoImp:
      renderWrapped(f.left(), f.left().is(Kind::Imp), sp, out);
      out += sp.coimp;
      renderWrapped(f.right(), level(f.right().kind()) < 2, sp, out);
      return;
    case Kind::Plus:
    case Kind::With:
    case Kind::Tensor: {
      const int lv = level(f.kind());
      renderWrapped(f.left(), level(f.left().kind()) < lv, sp, out);
      out += f.is(Kind::Plus) ? sp.plus : f.is(Kind::With) ? sp.with : sp.tensor;
      renderWrapped(f.right(), level(f.right().kind()) <= lv, sp, out);
      return;
    }
  }
}

auto renderSequent(const Sequent& s, const Spelling& sp, std::string_view turnstile) -> std::string {
  std::string out;
  for (std::size_t i = 0; i < s.antecedent.size(); ++i) {
    if (i)
      out += ", ";
    render(s.antecedent[i], sp, out);
  }
  if (!s.antecedent.empty())
    out += " ";
  out += turnstile;
  if (s.succedent) {
    out += " ";
    render(*s.succedent, sp, out);
  }
  return out;
}

void printNode(const ProofTree& p, std::size_t depth, std::string& out) {
  out.append(2 * depth, ' ');
  out += p.rule;
  out += " : ";
  out += printSequent(p.conclusion);
  out += '\n';
  for (const auto& q : p.premises)
    printNode(q, depth + 1, out);
}

auto isRuleName(std::string_view s) -> bool {
  if (s.empty() || !isIdentStart(s.front()))
    return false;
  for (char c : s)
    if (!isIdentChar(c))
      return false;
  return true;
}

auto toJson(const ProofTree& p) -> nlohmann::ordered_json {
  nlohmann::ordered_json j;
  j["rule"] = p.rule;
  j["sequent"] = printSequent(p.conclusion);
  j["premises"] = nlohmann::ordered_json::array();
  for (const auto& q : p.premises)
    j["premises"].push_back(toJson(q));
  return j;
}

auto fromJson(const nlohmann::json& j) -> ProofTree {
  if (!j.is_object() || !j.contains("rule") || !j.contains("sequent") || !j["rule"].is_string() ||
      !j["sequent"].is_string())
    throw SourceError(1, 1, "an object with string fields 'rule' and 'sequent'");
  ProofTree t{j["rule"].get<std::string>(), parseSequent(j["sequent"].get<std::string>()), {}};
  if (j.contains("premises")) {
    if (!j["premises"].is_array())
      throw SourceError(1, 1, "'premises' to be an array");
    for (const auto& c : j["premises"])
      t.premises.push_back(fromJson(c));
  }
  return t;
}

void latexNode(const ProofTree& p, std::size_t depth, std::string& out) {
  const std::string pad(2 * depth, ' ');
  if (p.premises.empty()) {
    out += pad + latexSequent(p.conclusion);
    return;
  }
  out += pad + "\\infer[" + latexRuleLabel(p.rule) + "]{" + latexSequent(p.conclusion) + "}{\n";
  for (std::size_t i = 0; i < p.premises.size(); ++i) {
    if (i)
      out += "\n" + pad + "  &\n";
    latexNode(p.premises[i], depth + 1, out);
  }
  out += "\n" + pad + "}";
}

} // namespace

auto parseFormula(std::string_view text) -> Formula {
  Parser p(Lexer(text, 1, 1).tokenize());
  Formula f = p.formula();
  p.finish();
  return f;
}

auto printFormula(const Formula& f) -> std::string {
  std::string out;
  render(f, kAscii, out);
  return out;
}

auto parseSequent(std::string_view text) -> Sequent { return parseSequentAt(text, 1, 1); }

auto printSequent(const Sequent& s) -> std::string { return renderSequent(s, kAscii, "|-"); }

auto parseProof(std::string_view text) -> ProofTree {
  struct Node {
    std::string rule;
    Sequent conclusion;
    std::vector<std::size_t> children;
  };
  std::vector<Node> nodes;
  std::vector<std::size_t> stack; // stack[d] = index of the open node at depth d
  std::size_t lineNo = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    auto line = text.substr(start, end - start);
    start = end + 1;
    ++lineNo;
    if (!line.empty() && line.back() == '\r')
      line.remove_suffix(1);
    std::size_t indent = 0;
    while (indent < line.size() && line[indent] == ' ')
      ++indent;
    if (indent == line.size() || line[indent] == '#')
      continue;
    if (line[indent] == '\t')
      throw SourceError(lineNo, indent + 1, "spaces for indentation, found a tab");
    if (indent % 2 != 0)
      throw SourceError(lineNo, indent + 1, "indentation by a multiple of two spaces");
    const std::size_t depth = indent / 2;
    if (nodes.empty() && depth != 0)
      throw SourceError(lineNo, 1, "the root node at column 1");
    if (!nodes.empty() && depth == 0)
      throw SourceError(lineNo, 1, "a single root node; found a second unindented line");
    if (depth > stack.size())
      throw SourceError(lineNo, indent + 1, "indentation at most two spaces deeper than the parent");

    const auto body = line.substr(indent);
    const auto colon = body.find(':');
    if (colon == std::string_view::npos)
      throw SourceError(lineNo, indent + body.size() + 1, "'<rule> : <sequent>'");
    auto rule = body.substr(0, colon);
    while (!rule.empty() && rule.back() == ' ')
      rule.remove_suffix(1);
    if (!isRuleName(rule))
      throw SourceError(lineNo, indent + 1, "a rule name");
    Sequent s = parseSequentAt(body.substr(colon + 1), lineNo, indent + colon + 2);

    stack.resize(depth);
    const std::size_t id = nodes.size();
    nodes.push_back(Node{std::string(rule), std::move(s), {}});
    if (depth > 0)
      nodes[stack[depth - 1]].children.push_back(id);
    stack.push_back(id);
  }
  if (nodes.empty())
    throw SourceError(lineNo == 0 ? 1 : lineNo, 1, "a proof line");

  auto build = [&](auto&& self, std::size_t i) -> ProofTree {
    ProofTree t{std::move(nodes[i].rule), std::move(nodes[i].conclusion), {}};
    for (std::size_t c : nodes[i].children)
      t.premises.push_back(self(self, c));
    return t;
  };
  return build(build, 0);
}

auto printProof(const ProofTree& p) -> std::string {
  std::string out;
  printNode(p, 0, out);
  return out;
}

auto parseProofJson(std::string_view text) -> ProofTree {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw SourceError(line, col, "well-formed JSON");
  }
  return fromJson(j);
}

auto printProofJson(const ProofTree& p, int indent) -> std::string { return toJson(p).dump(indent) + "\n"; }

auto latexFormula(const Formula& f) -> std::string {
  std::string out;
  render(f, kLatex, out);
  return out;
}

auto latexSequent(const Sequent& s) -> std::string { return renderSequent(s, kLatex, "\\vdash"); }

auto latexRuleLabel(std::string_view rule) -> std::string {
  static const std::array<std::pair<std::string_view, std::string_view>, kRuleCount> labels = {{
      {"id", "\\mathrm{id}"},        {"oneR", "\\mathbf{1}R"},      {"zeroL", "\\mathbf{0}L"},
      {"topR", "\\top R"},           {"botL", "\\bot L"},           {"oneW", "\\mathbf{1}W"},
      {"zeroW", "\\mathbf{0}W"},     {"cut", "\\mathrm{Cut}"},      {"impL", "{\\to}L"},
      {"impR", "{\\to}R"},           {"coimpL", "{\\leftarrow}L"},  {"coimpR", "{\\leftarrow}R"},
      {"negL", "\\neg L"},           {"negR", "\\neg R"},           {"conegL", "\\neg' L"},
      {"conegR", "\\neg' R"},        {"tensL", "\\otimes L"},       {"tensR", "\\otimes R"},
      {"andL1", "\\wedge L_1"},      {"andL2", "\\wedge L_2"},      {"andR", "\\wedge R"},
      {"orL", "\\vee L"},            {"orR1", "\\vee R_1"},         {"orR2", "\\vee R_2"},
  }};
  for (const auto& [name, label] : labels)
    if (name == rule)
      return std::string(label);
  return "\\mathrm{" + std::string(rule) + "}";
}

auto emitLatex(const ProofTree& p) -> std::string {
  std::string out;
  latexNode(p, 0, out);
  return out;
}

} // namespace flcalc
