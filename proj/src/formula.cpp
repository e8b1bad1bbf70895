#include "ccones/formula.hpp"

#include <cctype>

#include "ccones/mall.hpp"

namespace ccones {
namespace {

enum class Tok { kIdent, kOne, kZero, kBot, kTop, kBang, kWhyNot, kHat, kStar, kBar, kAmp, kPlus, kLolli, kLParen, kRParen, kEnd };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      std::string word(s.substr(start, i - start));
      Tok k = word == "bot" ? Tok::kBot : word == "top" ? Tok::kTop : Tok::kIdent;
      out.push_back({k, word, start});
      continue;
    }
    switch (c) {
      case '1': out.push_back({Tok::kOne, "1", start}); break;
      case '0': out.push_back({Tok::kZero, "0", start}); break;
      case '!': out.push_back({Tok::kBang, "!", start}); break;
      case '?': out.push_back({Tok::kWhyNot, "?", start}); break;
      case '^': out.push_back({Tok::kHat, "^", start}); break;
      case '*': out.push_back({Tok::kStar, "*", start}); break;
      case '|': out.push_back({Tok::kBar, "|", start}); break;
      case '&': out.push_back({Tok::kAmp, "&", start}); break;
      case '+': out.push_back({Tok::kPlus, "+", start}); break;
      case '(': out.push_back({Tok::kLParen, "(", start}); break;
      case ')': out.push_back({Tok::kRParen, ")", start}); break;
      case '-':
        if (i + 1 < s.size() && s[i + 1] == 'o') {
          out.push_back({Tok::kLolli, "-o", start});
          i += 2;
          continue;
        }
        throw ParseError("expected '-o'", start);
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
    if (std::isdigit(static_cast<unsigned char>(c)) && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1])))
      throw ParseError("numeric constants are only 1 and 0", start);
    ++i;
  }
  out.push_back({Tok::kEnd, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  FormulaPtr parse() {
    FormulaPtr f = expr();
    if (peek().kind != Tok::kEnd) throw ParseError("unexpected '" + peek().text + "'", peek().pos);
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  FormulaPtr expr() {
    FormulaPtr lhs = binary(0);
    if (peek().kind == Tok::kLolli) {
      next();
      return make_node(FormulaKind::kLollipop, {lhs, expr()});
    }
    return lhs;
  }

  // Levels 0..3 are + & | *, loosest first.
  FormulaPtr binary(int level) {
    static const Tok ops[] = {Tok::kPlus, Tok::kAmp, Tok::kBar, Tok::kStar};
    static const FormulaKind kinds[] = {FormulaKind::kPlus, FormulaKind::kWith, FormulaKind::kPar, FormulaKind::kTensor};
    if (level == 4) return unary();
    FormulaPtr lhs = binary(level + 1);
    while (peek().kind == ops[level]) {
      next();
      lhs = make_node(kinds[level], {lhs, binary(level + 1)});
    }
    return lhs;
  }

  FormulaPtr unary() {
    if (peek().kind == Tok::kBang) {
      next();
      return make_node(FormulaKind::kBang, {unary()});
    }
    if (peek().kind == Tok::kWhyNot) {
      next();
      return make_node(FormulaKind::kWhyNot, {unary()});
    }
    FormulaPtr f = primary();
    while (peek().kind == Tok::kHat) {
      next();
      f = make_node(FormulaKind::kDual, {f});
    }
    return f;
  }

  FormulaPtr primary() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::kIdent: return make_atom(t.text);
      case Tok::kOne: return make_node(FormulaKind::kOne);
      case Tok::kZero: return make_node(FormulaKind::kZero);
      case Tok::kBot: return make_node(FormulaKind::kBot);
      case Tok::kTop: return make_node(FormulaKind::kTop);
      case Tok::kLParen: {
        FormulaPtr f = expr();
        if (peek().kind != Tok::kRParen) throw ParseError("expected ')'", peek().pos);
        next();
        return f;
      }
      case Tok::kEnd: throw ParseError("unexpected end of formula", t.pos);
      default: throw ParseError("unexpected '" + t.text + "'", t.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

FormulaPtr dual_of(const FormulaPtr& f);

FormulaPtr normalize(const FormulaPtr& f) {
  switch (f->kind) {
    case FormulaKind::kDual: return dual_of(f->children[0]);
    case FormulaKind::kAtom:
    case FormulaKind::kOne:
    case FormulaKind::kBot:
    case FormulaKind::kZero:
    case FormulaKind::kTop: return f;
    default: {
      std::vector<FormulaPtr> ch;
      for (const auto& c : f->children) ch.push_back(normalize(c));
      return make_node(f->kind, std::move(ch));
    }
  }
}

// Normal form of f^.
FormulaPtr dual_of(const FormulaPtr& f) {
  const auto& c = f->children;
  switch (f->kind) {
    case FormulaKind::kAtom: return make_node(FormulaKind::kDual, {f});
    case FormulaKind::kDual: return normalize(c[0]);
    case FormulaKind::kTensor: return make_node(FormulaKind::kPar, {dual_of(c[0]), dual_of(c[1])});
    case FormulaKind::kPar: return make_node(FormulaKind::kTensor, {dual_of(c[0]), dual_of(c[1])});
    case FormulaKind::kWith: return make_node(FormulaKind::kPlus, {dual_of(c[0]), dual_of(c[1])});
    case FormulaKind::kPlus: return make_node(FormulaKind::kWith, {dual_of(c[0]), dual_of(c[1])});
    case FormulaKind::kLollipop: return make_node(FormulaKind::kTensor, {normalize(c[0]), dual_of(c[1])});
    case FormulaKind::kBang: return make_node(FormulaKind::kWhyNot, {dual_of(c[0])});
    case FormulaKind::kWhyNot: return make_node(FormulaKind::kBang, {dual_of(c[0])});
    case FormulaKind::kOne: return make_node(FormulaKind::kBot);
    case FormulaKind::kBot: return make_node(FormulaKind::kOne);
    case FormulaKind::kZero: return make_node(FormulaKind::kTop);
    case FormulaKind::kTop: return make_node(FormulaKind::kZero);
  }
  return f;
}

const char* infix_op(FormulaKind k) {
  switch (k) {
    case FormulaKind::kTensor: return " * ";
    case FormulaKind::kPar: return " | ";
    case FormulaKind::kPlus: return " + ";
    case FormulaKind::kWith: return " & ";
    case FormulaKind::kLollipop: return " -o ";
    default: return "";
  }
}

}  // namespace

FormulaPtr make_atom(std::string name) {
  return std::make_shared<const Formula>(Formula{FormulaKind::kAtom, std::move(name), {}});
}

FormulaPtr make_node(FormulaKind kind, std::vector<FormulaPtr> children) {
  return std::make_shared<const Formula>(Formula{kind, "", std::move(children)});
}

FormulaPtr parse_formula(std::string_view text) { return Parser(tokenize(text)).parse(); }

FormulaPtr normalize_duals(const FormulaPtr& f) { return normalize(f); }

const char* kind_name(FormulaKind k) {
  switch (k) {
    case FormulaKind::kAtom: return "Atom";
    case FormulaKind::kDual: return "Dual";
    case FormulaKind::kTensor: return "Tensor";
    case FormulaKind::kPar: return "Par";
    case FormulaKind::kPlus: return "Plus";
    case FormulaKind::kWith: return "With";
    case FormulaKind::kLollipop: return "Lollipop";
    case FormulaKind::kBang: return "Bang";
    case FormulaKind::kWhyNot: return "WhyNot";
    case FormulaKind::kOne: return "One";
    case FormulaKind::kBot: return "Bot";
    case FormulaKind::kZero: return "Zero";
    case FormulaKind::kTop: return "Top";
  }
  return "?";
}

std::string to_tree_string(const Formula& f) {
  if (f.kind == FormulaKind::kAtom) return f.name;
  std::string s = kind_name(f.kind);
  if (f.children.empty()) return s;
  s += "(";
  for (std::size_t i = 0; i < f.children.size(); ++i) s += (i ? ", " : "") + to_tree_string(*f.children[i]);
  return s + ")";
}

std::string to_infix_string(const Formula& f) {
  switch (f.kind) {
    case FormulaKind::kAtom: return f.name;
    case FormulaKind::kOne: return "1";
    case FormulaKind::kBot: return "bot";
    case FormulaKind::kZero: return "0";
    case FormulaKind::kTop: return "top";
    case FormulaKind::kDual: {
      const Formula& c = *f.children[0];
      // binary nodes print their own parentheses; ^ binds tighter than ! and ?
      bool prefix = c.kind == FormulaKind::kBang || c.kind == FormulaKind::kWhyNot;
      return prefix ? "(" + to_infix_string(c) + ")^" : to_infix_string(c) + "^";
    }
    case FormulaKind::kBang: return "!" + to_infix_string(*f.children[0]);
    case FormulaKind::kWhyNot: return "?" + to_infix_string(*f.children[0]);
    default:
      return "(" + to_infix_string(*f.children[0]) + infix_op(f.kind) + to_infix_string(*f.children[1]) + ")";
  }
}

bool formulas_equal(const Formula& a, const Formula& b) {
  if (a.kind != b.kind || a.name != b.name || a.children.size() != b.children.size()) return false;
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (!formulas_equal(*a.children[i], *b.children[i])) return false;
  return true;
}

ConeObject interpret(const Formula& f, const Environment& env, std::size_t N) {
  auto sub = [&](std::size_t i) { return interpret(*f.children[i], env, N); };
  switch (f.kind) {
    case FormulaKind::kAtom: {
      auto it = env.find(f.name);
      if (it == env.end()) throw DomainError("unbound atom '" + f.name + "'", {f.name});
      return it->second;
    }
    case FormulaKind::kDual: return dual_object(sub(0));
    case FormulaKind::kTensor: return tensor_obj(sub(0), sub(1));
    case FormulaKind::kPar: return cotensor_obj(sub(0), sub(1));
    case FormulaKind::kWith: return product_obj(sub(0), sub(1));
    case FormulaKind::kPlus: return coproduct_obj(sub(0), sub(1));
    case FormulaKind::kLollipop: return hom_obj(sub(0), sub(1));
    case FormulaKind::kBang: return bang_obj(sub(0), N);
    case FormulaKind::kWhyNot: return whynot_obj(sub(0), N);
    case FormulaKind::kOne: return unit_object();
    case FormulaKind::kBot: return dual_object(unit_object());
    case FormulaKind::kZero: return zero_object();
    case FormulaKind::kTop: return dual_object(zero_object());
  }
  throw DomainError("unknown formula node");
}

}  // namespace ccones
