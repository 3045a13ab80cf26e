#include <doctest.h>

#include <random>

#include "bba/formula.hpp"
#include "fixtures.hpp"

using namespace bba;
using namespace fixtures;

TEST_CASE("parsing and precedence") {
  FormulaPtr f = parse_formula("p & q");
  CHECK(f->kind == FormulaAst::Kind::And);
  CHECK(f->lhs->atom == "p");
  CHECK(f->rhs->atom == "q");

  FormulaPtr g = parse_formula("~p <-> q -> r");
  CHECK(g->kind == FormulaAst::Kind::Iff);
  CHECK(g->lhs->kind == FormulaAst::Kind::Not);
  CHECK(g->rhs->kind == FormulaAst::Kind::Implies);

  // Right-associative implication, left-associative biconditional.
  FormulaPtr h = parse_formula("a -> b -> c");
  CHECK(h->rhs->kind == FormulaAst::Kind::Implies);
  FormulaPtr k = parse_formula("a <-> b <-> c");
  CHECK(k->lhs->kind == FormulaAst::Kind::Iff);
}

TEST_CASE("syntax errors carry a position") {
  try {
    parse_formula("p &");
    FAIL("expected SyntaxError");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SyntaxError);
    CHECK(std::string(e.what()).find("offset 3") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_formula(""), Error);
  CHECK_THROWS_AS(parse_formula("(p"), Error);
  CHECK_THROWS_AS(parse_formula("p q"), Error);
}

TEST_CASE("compiling the fixture agendas") {
  Agenda c = compile_agenda_from_formulas({"p", "q"}, {"p", "q", "p & q"});
  Agenda cf = conj_agenda();
  CHECK(c.issues == cf.issues);
  CHECK(c.universe.size == 4);

  Agenda b = compile_agenda_from_formulas({"p", "q"}, {"p", "q", "p <-> q"});
  CHECK(b.issues == bicond_agenda().issues);

  CHECK_THROWS_AS(compile_agenda_from_formulas({"p"}, {"p | ~p"}), Error);
  CHECK_THROWS_AS(compile_agenda_from_formulas({"p"}, {"p & ~p"}), Error);
  CHECK_THROWS_AS(compile_agenda_from_formulas({"p"}, {"q"}), Error);
  CHECK_THROWS_AS(
      compile_agenda_from_formulas({"a", "b", "c", "d", "e", "f"}, {"a"}), Error);
}

namespace {

FormulaPtr random_ast(std::mt19937& rng, const std::vector<std::string>& atoms, int depth) {
  auto node = std::make_shared<FormulaAst>();
  int pick = depth == 0 ? 0 : static_cast<int>(rng() % 6);
  switch (pick) {
    case 0:
      node->kind = FormulaAst::Kind::Atom;
      node->atom = atoms[rng() % atoms.size()];
      return node;
    case 1:
      node->kind = FormulaAst::Kind::Not;
      node->lhs = random_ast(rng, atoms, depth - 1);
      return node;
    default:
      node->kind = pick == 2   ? FormulaAst::Kind::And
                   : pick == 3 ? FormulaAst::Kind::Or
                   : pick == 4 ? FormulaAst::Kind::Implies
                               : FormulaAst::Kind::Iff;
      node->lhs = random_ast(rng, atoms, depth - 1);
      node->rhs = random_ast(rng, atoms, depth - 1);
      return node;
  }
}

bool same_ast(const FormulaAst& a, const FormulaAst& b) {
  if (a.kind != b.kind || a.atom != b.atom) return false;
  if (a.lhs && (!b.lhs || !same_ast(*a.lhs, *b.lhs))) return false;
  if (a.rhs && (!b.rhs || !same_ast(*a.rhs, *b.rhs))) return false;
  return static_cast<bool>(a.lhs) == static_cast<bool>(b.lhs) &&
         static_cast<bool>(a.rhs) == static_cast<bool>(b.rhs);
}

}  // namespace

TEST_CASE("pretty-print round trip and semantic soundness, 100 random ASTs") {
  const std::vector<std::string> atoms = {"p", "q", "r", "s"};
  std::mt19937 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    FormulaPtr f = random_ast(rng, atoms, 4);
    FormulaPtr back = parse_formula(pretty_print(*f));
    CHECK(same_ast(*f, *back));

    WorldSet fs = truth_set(*f, atoms);
    const WorldSet full = (WorldSet{1} << (1 << atoms.size())) - 1;

    auto neg = std::make_shared<FormulaAst>();
    neg->kind = FormulaAst::Kind::Not;
    neg->lhs = f;
    CHECK(truth_set(*neg, atoms) == (full & ~fs));

    FormulaPtr g = random_ast(rng, atoms, 3);
    auto conj = std::make_shared<FormulaAst>();
    conj->kind = FormulaAst::Kind::And;
    conj->lhs = f;
    conj->rhs = g;
    CHECK(truth_set(*conj, atoms) == (fs & truth_set(*g, atoms)));
  }
}
