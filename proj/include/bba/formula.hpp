#pragma once

#include <memory>
#include <string>
#include <vector>

#include "bba/core.hpp"

namespace bba {

// Propositional formulas over named atoms.  Grammar, loosest to tightest:
//   iff   "<->"  left-associative
//   imp   "->"   right-associative
//   or    "|"
//   and   "&"
//   not   "~"
//   atom | "(" formula ")"
struct FormulaAst {
  enum class Kind { Atom, Not, And, Or, Implies, Iff };
  Kind kind;
  std::string atom;  // Kind::Atom only
  std::shared_ptr<FormulaAst> lhs, rhs;  // Not uses lhs only
};

using FormulaPtr = std::shared_ptr<FormulaAst>;

FormulaPtr parse_formula(const std::string& text);

std::string pretty_print(const FormulaAst& f);

// Truth set of the formula over the valuation universe of |atoms| atoms;
// valuation w makes atom i true iff bit i of w is set.
WorldSet truth_set(const FormulaAst& f, const std::vector<std::string>& atoms);

// Universe = all valuations of the atoms (atom 0 least significant); each
// formula becomes its truth set; complements are auto-closed.
Agenda compile_agenda_from_formulas(const std::vector<std::string>& atoms,
                                    const std::vector<std::string>& formulas);

}  // namespace bba
