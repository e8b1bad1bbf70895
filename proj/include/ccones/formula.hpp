#ifndef CCONES_FORMULA_HPP
#define CCONES_FORMULA_HPP

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ccones/cone.hpp"
#include "ccones/exponential.hpp"

namespace ccones {

enum class FormulaKind {
  kAtom,
  kDual,
  kTensor,
  kPar,
  kPlus,
  kWith,
  kLollipop,
  kBang,
  kWhyNot,
  kOne,
  kBot,
  kZero,
  kTop,
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  FormulaKind kind;
  std::string name;  // atoms only
  std::vector<FormulaPtr> children;
};

FormulaPtr make_atom(std::string name);
FormulaPtr make_node(FormulaKind kind, std::vector<FormulaPtr> children = {});

// Grammar, loosest first:
//   expr    := plus ('-o' expr)?          right associative
//   plus    := with ('+' with)*
//   with    := par ('&' par)*
//   par     := tensor ('|' tensor)*
//   tensor  := unary ('*' unary)*
//   unary   := ('!' | '?') unary | postfix
//   postfix := primary '^'*
//   primary := ident | '1' | '0' | 'bot' | 'top' | '(' expr ')'
// Throws ParseError with the byte offset of the offending token.
FormulaPtr parse_formula(std::string_view text);

// Pushes duals down to atoms with the de Morgan laws; double duals cancel.
FormulaPtr normalize_duals(const FormulaPtr& f);

// Constructor form, e.g. Lollipop(Tensor(Bang(a), b), c).
std::string to_tree_string(const Formula& f);
// Fully parenthesized infix form that parses back to the same tree.
std::string to_infix_string(const Formula& f);
const char* kind_name(FormulaKind k);

bool formulas_equal(const Formula& a, const Formula& b);

using Environment = std::map<std::string, ConeObject>;

// Builds the object of a formula. Exponentials are truncated at N. Throws
// DomainError for unbound atoms and CapabilityError for spectral atoms under
// a constructive connective.
ConeObject interpret(const Formula& f, const Environment& env, std::size_t N = kDefaultTruncation);

}  // namespace ccones

#endif  // CCONES_FORMULA_HPP
