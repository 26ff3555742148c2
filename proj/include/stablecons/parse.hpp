#ifndef STABLECONS_PARSE_HPP
#define STABLECONS_PARSE_HPP

// ASCII surface syntax.
//
//   formula  := lattice [ ("->" | "<->") formula ]      (Lukasiewicz only)
//   lattice  := oplus ( ("/\" | "\/") oplus )*          (no mixing /\ with \/)
//   oplus    := otimes ( "(+)" otimes )*
//   otimes   := unary ( "(*)" unary )*
//   unary    := "~" unary | atom
//   atom     := var | "(" formula ")"
//   var      := "X" [1-9][0-9]*
//
// Boolean formulas use the same grammar without (+), (*), -> and <->.
// Chains of one connective nest to the left. "a -> b" and "a <-> b" are
// sugar for b (+) ~a and (a -> b) (*) (b -> a).

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include "stablecons/errors.hpp"
#include "stablecons/formula.hpp"

namespace stablecons {

namespace detail {

enum class TokenKind { Var, Neg, Binary, Arrow, DoubleArrow, LParen, RParen, End };

// Connectives as they appear in text, independent of the logic.
enum class Symbol { None, Oplus, Otimes, Meet, Join };

struct Token {
  TokenKind kind = TokenKind::End;
  Symbol symbol = Symbol::None;
  std::uint32_t var = 0;
  std::size_t offset = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    Token tok;
    tok.offset = pos_;
    if (pos_ >= text_.size()) return tok;

    const std::string_view rest = text_.substr(pos_);
    auto take = [&](std::size_t n, TokenKind kind, Symbol symbol = Symbol::None) {
      pos_ += n;
      tok.kind = kind;
      tok.symbol = symbol;
      return tok;
    };
    if (rest.starts_with("(+)")) return take(3, TokenKind::Binary, Symbol::Oplus);
    if (rest.starts_with("(*)")) return take(3, TokenKind::Binary, Symbol::Otimes);
    if (rest.starts_with("/\\")) return take(2, TokenKind::Binary, Symbol::Meet);
    if (rest.starts_with("\\/")) return take(2, TokenKind::Binary, Symbol::Join);
    if (rest.starts_with("<->")) return take(3, TokenKind::DoubleArrow);
    if (rest.starts_with("->")) return take(2, TokenKind::Arrow);
    if (rest[0] == '~') return take(1, TokenKind::Neg);
    if (rest[0] == '(') return take(1, TokenKind::LParen);
    if (rest[0] == ')') return take(1, TokenKind::RParen);
    if (rest[0] == 'X') return lex_var(tok);
    throw ParseError(std::string("unexpected character '") + rest[0] + "'", pos_);
  }

 private:
  Token lex_var(Token tok) {
    std::size_t p = pos_ + 1;
    if (p >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[p])))
      throw ParseError("expected variable index after 'X'", pos_);
    if (text_[p] == '0') throw ParseError("variable index must be >= 1 without leading zeros", pos_);
    std::uint64_t value = 0;
    while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) {
      value = value * 10 + static_cast<std::uint64_t>(text_[p] - '0');
      if (value > std::numeric_limits<std::uint32_t>::max())
        throw ParseError("variable index too large", pos_);
      ++p;
    }
    tok.kind = TokenKind::Var;
    tok.var = static_cast<std::uint32_t>(value);
    pos_ = p;
    return tok;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

template <class Logic>
std::optional<typename Logic::Op> binary_op_for(Symbol s);

template <>
inline std::optional<BooleanLogic::Op> binary_op_for<BooleanLogic>(Symbol s) {
  switch (s) {
    case Symbol::Meet: return BooleanLogic::Op::And;
    case Symbol::Join: return BooleanLogic::Op::Or;
    default: return std::nullopt;
  }
}

template <>
inline std::optional<LukasiewiczLogic::Op> binary_op_for<LukasiewiczLogic>(Symbol s) {
  switch (s) {
    case Symbol::Oplus: return LukasiewiczLogic::Op::Oplus;
    case Symbol::Otimes: return LukasiewiczLogic::Op::Otimes;
    case Symbol::Meet: return LukasiewiczLogic::Op::Meet;
    case Symbol::Join: return LukasiewiczLogic::Op::Join;
    default: return std::nullopt;
  }
}

template <class Logic>
class Parser {
 public:
  using F = Formula<Logic>;
  using Op = typename Logic::Op;
  static constexpr bool kHasArrows = std::is_same_v<Logic, LukasiewiczLogic>;

  explicit Parser(std::string_view text) : lexer_(text) { advance(); }

  F parse() {
    F f = formula();
    if (cur_.kind != TokenKind::End) throw ParseError("unexpected trailing input", cur_.offset);
    return f;
  }

 private:
  void advance() {
    cur_ = lexer_.next();
    if (cur_.kind == TokenKind::Binary && !binary_op_for<Logic>(cur_.symbol))
      throw ParseError("connective not available in boolean formulas", cur_.offset);
    if (!kHasArrows && (cur_.kind == TokenKind::Arrow || cur_.kind == TokenKind::DoubleArrow))
      throw ParseError("implication not available in boolean formulas", cur_.offset);
  }

  F formula() {
    F lhs = level(1);
    if constexpr (kHasArrows) {
      if (cur_.kind == TokenKind::Arrow) {
        advance();
        return luk::implies(lhs, formula());
      }
      if (cur_.kind == TokenKind::DoubleArrow) {
        advance();
        return luk::iff(lhs, formula());
      }
    }
    return lhs;
  }

  std::optional<Op> binary_at(int binding) const {
    if (cur_.kind != TokenKind::Binary) return std::nullopt;
    auto op = binary_op_for<Logic>(cur_.symbol);
    if (op && Logic::binding(*op) == binding) return op;
    return std::nullopt;
  }

  F level(int binding) {
    if (binding > Logic::kMaxBinding) return unary();
    F lhs = level(binding + 1);
    std::optional<Op> chain;
    while (auto op = binary_at(binding)) {
      if (chain && *chain != *op)
        throw ParseError("mixing /\\ and \\/ requires parentheses", cur_.offset);
      chain = op;
      advance();
      F rhs = level(binding + 1);
      lhs = F::binary(*op, lhs, rhs);
    }
    return lhs;
  }

  F unary() {
    if (cur_.kind == TokenKind::Neg) {
      advance();
      return F::negation(unary());
    }
    return atom();
  }

  F atom() {
    if (cur_.kind == TokenKind::Var) {
      F v = F::variable(VarId(cur_.var));
      advance();
      return v;
    }
    if (cur_.kind == TokenKind::LParen) {
      advance();
      F inner = formula();
      if (cur_.kind != TokenKind::RParen) throw ParseError("expected ')'", cur_.offset);
      advance();
      return inner;
    }
    if (cur_.kind == TokenKind::End) throw ParseError("unexpected end of input", cur_.offset);
    throw ParseError("expected variable, '~' or '('", cur_.offset);
  }

  Lexer lexer_;
  Token cur_;
};

template <class Logic>
void print_to(std::string& out, const Formula<Logic>& f) {
  if (f.is_var()) {
    out += to_string(f.var());
    return;
  }
  if (f.is_negation()) {
    out += Logic::token(Logic::kNegation);
    const auto a = f.operand();
    if (a.is_binary()) {
      out += '(';
      print_to(out, a);
      out += ')';
    } else {
      print_to(out, a);
    }
    return;
  }
  const int b = Logic::binding(f.op());
  const auto lhs = f.left();
  const auto rhs = f.right();
  const bool wrap_left =
      lhs.is_binary() && (Logic::binding(lhs.op()) < b ||
                          (Logic::binding(lhs.op()) == b && lhs.op() != f.op()));
  const bool wrap_right = rhs.is_binary() && Logic::binding(rhs.op()) <= b;

  if (wrap_left) out += '(';
  print_to(out, lhs);
  if (wrap_left) out += ')';
  out += ' ';
  out += Logic::token(f.op());
  out += ' ';
  if (wrap_right) out += '(';
  print_to(out, rhs);
  if (wrap_right) out += ')';
}

}  // namespace detail

inline BoolFormula parse_bool(std::string_view text) {
  return detail::Parser<BooleanLogic>(text).parse();
}

inline LukFormula parse_luk(std::string_view text) {
  return detail::Parser<LukasiewiczLogic>(text).parse();
}

/// Renders with the fewest parentheses that still reparse to the same tree.
template <class Logic>
std::string to_string(const Formula<Logic>& f) {
  std::string out;
  detail::print_to(out, f);
  return out;
}

}  // namespace stablecons

#endif  // STABLECONS_PARSE_HPP
