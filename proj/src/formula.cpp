#include "bba/formula.hpp"

#include <cctype>

namespace bba {

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  explicit Parser(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(const std::string& tok) {
    skip_ws();
    if (text.compare(pos, tok.size(), tok) == 0) {
      pos += tok.size();
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw Error(Errc::SyntaxError, msg + " at offset " + std::to_string(pos));
  }

  static FormulaPtr node(FormulaAst::Kind k, FormulaPtr l, FormulaPtr r) {
    auto f = std::make_shared<FormulaAst>();
    f->kind = k;
    f->lhs = std::move(l);
    f->rhs = std::move(r);
    return f;
  }

  FormulaPtr parse_iff() {
    FormulaPtr left = parse_implies();
    while (eat("<->")) left = node(FormulaAst::Kind::Iff, left, parse_implies());
    return left;
  }

  FormulaPtr parse_implies() {
    FormulaPtr left = parse_or();
    if (eat("->")) return node(FormulaAst::Kind::Implies, left, parse_implies());
    return left;
  }

  FormulaPtr parse_or() {
    FormulaPtr left = parse_and();
    while (true) {
      skip_ws();
      // "|" but not part of another token
      if (pos < text.size() && text[pos] == '|') {
        ++pos;
        left = node(FormulaAst::Kind::Or, left, parse_and());
      } else {
        return left;
      }
    }
  }

  FormulaPtr parse_and() {
    FormulaPtr left = parse_not();
    while (eat("&")) left = node(FormulaAst::Kind::And, left, parse_not());
    return left;
  }

  FormulaPtr parse_not() {
    if (eat("~")) return node(FormulaAst::Kind::Not, parse_not(), nullptr);
    return parse_primary();
  }

  FormulaPtr parse_primary() {
    skip_ws();
    if (eat("(")) {
      FormulaPtr inner = parse_iff();
      if (!eat(")")) fail("expected ')'");
      return inner;
    }
    if (pos >= text.size()) fail("unexpected end of input");
    char c = text[pos];
    if (!std::isalpha(static_cast<unsigned char>(c))) fail("expected atom");
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    auto f = std::make_shared<FormulaAst>();
    f->kind = FormulaAst::Kind::Atom;
    f->atom = text.substr(start, pos - start);
    return f;
  }
};

int precedence(FormulaAst::Kind k) {
  switch (k) {
    case FormulaAst::Kind::Iff: return 1;
    case FormulaAst::Kind::Implies: return 2;
    case FormulaAst::Kind::Or: return 3;
    case FormulaAst::Kind::And: return 4;
    case FormulaAst::Kind::Not: return 5;
    case FormulaAst::Kind::Atom: return 6;
  }
  return 6;
}

std::string print_at(const FormulaAst& f, int parent_prec) {
  int prec = precedence(f.kind);
  std::string body;
  switch (f.kind) {
    case FormulaAst::Kind::Atom: body = f.atom; break;
    case FormulaAst::Kind::Not: body = "~" + print_at(*f.lhs, prec); break;
    case FormulaAst::Kind::And:
      body = print_at(*f.lhs, prec) + " & " + print_at(*f.rhs, prec + 1);
      break;
    case FormulaAst::Kind::Or:
      body = print_at(*f.lhs, prec) + " | " + print_at(*f.rhs, prec + 1);
      break;
    case FormulaAst::Kind::Implies:
      body = print_at(*f.lhs, prec + 1) + " -> " + print_at(*f.rhs, prec);
      break;
    case FormulaAst::Kind::Iff:
      body = print_at(*f.lhs, prec) + " <-> " + print_at(*f.rhs, prec + 1);
      break;
  }
  return prec < parent_prec ? "(" + body + ")" : body;
}

bool eval(const FormulaAst& f, const std::vector<std::string>& atoms, WorldSet valuation) {
  switch (f.kind) {
    case FormulaAst::Kind::Atom:
      for (std::size_t i = 0; i < atoms.size(); ++i)
        if (atoms[i] == f.atom) return valuation >> i & 1;
      throw Error(Errc::UnknownAtom, "unknown atom: " + f.atom);
    case FormulaAst::Kind::Not: return !eval(*f.lhs, atoms, valuation);
    case FormulaAst::Kind::And:
      return eval(*f.lhs, atoms, valuation) && eval(*f.rhs, atoms, valuation);
    case FormulaAst::Kind::Or:
      return eval(*f.lhs, atoms, valuation) || eval(*f.rhs, atoms, valuation);
    case FormulaAst::Kind::Implies:
      return !eval(*f.lhs, atoms, valuation) || eval(*f.rhs, atoms, valuation);
    case FormulaAst::Kind::Iff:
      return eval(*f.lhs, atoms, valuation) == eval(*f.rhs, atoms, valuation);
  }
  return false;
}

}  // namespace

FormulaPtr parse_formula(const std::string& text) {
  Parser p(text);
  p.skip_ws();
  if (p.pos >= text.size()) p.fail("empty formula");
  FormulaPtr f = p.parse_iff();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return f;
}

std::string pretty_print(const FormulaAst& f) { return print_at(f, 0); }

WorldSet truth_set(const FormulaAst& f, const std::vector<std::string>& atoms) {
  const int worlds = 1 << atoms.size();
  WorldSet out = 0;
  for (int w = 0; w < worlds; ++w)
    if (eval(f, atoms, static_cast<WorldSet>(w))) out |= WorldSet{1} << w;
  return out;
}

Agenda compile_agenda_from_formulas(const std::vector<std::string>& atoms,
                                    const std::vector<std::string>& formulas) {
  if (atoms.empty() || atoms.size() > 5)
    throw Error(Errc::TooManyAtoms, "atom count must be in [1,5]");
  Universe u = Universe::of(1 << atoms.size());
  for (int w = 0; w < u.size; ++w) {
    std::string name;
    for (std::size_t i = 0; i < atoms.size(); ++i)
      name += (w >> i & 1) ? "1" : "0";  // atom 0 printed first
    u.labels.push_back("w" + name);
  }
  std::vector<WorldSet> sets;
  std::vector<std::string> names;
  for (const std::string& text : formulas) {
    FormulaPtr f = parse_formula(text);
    WorldSet s = truth_set(*f, atoms);
    if (s == 0 || s == u.full())
      throw Error(Errc::NonContingentIssue,
                  "formula is a tautology or contradiction: " + text);
    sets.push_back(s);
    names.push_back(pretty_print(*f));
  }
  return make_agenda(u, sets, true, names);
}

}  // namespace bba
