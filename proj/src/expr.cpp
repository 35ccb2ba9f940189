#include "pi3geo/expr.hpp"

#include <charconv>
#include <cstddef>
#include <numbers>
#include <optional>
#include <utility>

#include "pi3geo/format.hpp"

namespace pi3 {

namespace {

ExprPtr mk_const(double v, int offset = -1) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprNode::Kind::constant;
  n->value = v;
  n->offset = offset;
  return n;
}

ExprPtr mk_var(int index, int offset = -1) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprNode::Kind::variable;
  n->var = index;
  n->offset = offset;
  return n;
}

ExprPtr mk_unary(UnaryOp op, ExprPtr a, int offset = -1) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprNode::Kind::unary;
  n->uop = op;
  n->a = std::move(a);
  n->offset = offset;
  return n;
}

ExprPtr mk_binary(BinaryOp op, ExprPtr a, ExprPtr b, int offset = -1) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprNode::Kind::binary;
  n->bop = op;
  n->a = std::move(a);
  n->b = std::move(b);
  n->offset = offset;
  return n;
}

std::optional<UnaryOp> function_by_name(std::string_view s) {
  if (s == "sinh") return UnaryOp::sinh;
  if (s == "cosh") return UnaryOp::cosh;
  if (s == "tanh") return UnaryOp::tanh;
  if (s == "sin") return UnaryOp::sin;
  if (s == "cos") return UnaryOp::cos;
  if (s == "exp") return UnaryOp::exp;
  if (s == "ln") return UnaryOp::ln;
  if (s == "sqrt") return UnaryOp::sqrt;
  if (s == "abs") return UnaryOp::abs;
  if (s == "asin") return UnaryOp::asin;
  return std::nullopt;
}

const char* function_name(UnaryOp op) {
  switch (op) {
    case UnaryOp::neg: return "-";
    case UnaryOp::sinh: return "sinh";
    case UnaryOp::cosh: return "cosh";
    case UnaryOp::tanh: return "tanh";
    case UnaryOp::sin: return "sin";
    case UnaryOp::cos: return "cos";
    case UnaryOp::exp: return "exp";
    case UnaryOp::ln: return "ln";
    case UnaryOp::sqrt: return "sqrt";
    case UnaryOp::abs: return "abs";
    case UnaryOp::asin: return "asin";
  }
  return "?";
}

struct Token {
  enum class Kind { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };
  Kind kind = Kind::end;
  int offset = 0;
  double num = 0.0;
  std::string text;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto is_digit = [](char c) { return c >= '0' && c <= '9'; };
  auto is_alpha = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    Token t;
    t.offset = static_cast<int>(i);
    if (is_digit(c) || (c == '.' && i + 1 < src.size() && is_digit(src[i + 1]))) {
      double val = 0.0;
      auto res = std::from_chars(src.data() + i, src.data() + src.size(), val);
      if (res.ec != std::errc{})
        throw Error(Errc::syntax_error,
                    "malformed number at offset " + std::to_string(i), t.offset);
      t.kind = Token::Kind::number;
      t.num = val;
      i = static_cast<std::size_t>(res.ptr - src.data());
    } else if (is_alpha(c)) {
      std::size_t j = i;
      while (j < src.size() && (is_alpha(src[j]) || is_digit(src[j]))) ++j;
      t.kind = Token::Kind::ident;
      t.text.assign(src.substr(i, j - i));
      i = j;
    } else {
      switch (c) {
        case '+': t.kind = Token::Kind::plus; break;
        case '-': t.kind = Token::Kind::minus; break;
        case '*': t.kind = Token::Kind::star; break;
        case '/': t.kind = Token::Kind::slash; break;
        case '^': t.kind = Token::Kind::caret; break;
        case '(': t.kind = Token::Kind::lparen; break;
        case ')': t.kind = Token::Kind::rparen; break;
        default:
          throw Error(Errc::syntax_error,
                      std::string("unexpected character '") + c + "' at offset " +
                          std::to_string(i),
                      t.offset);
      }
      ++i;
    }
    out.push_back(std::move(t));
  }
  Token end_tok;
  end_tok.kind = Token::Kind::end;
  end_tok.offset = static_cast<int>(src.size());
  out.push_back(end_tok);
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, const std::vector<std::string>& vars)
      : toks_(std::move(toks)), vars_(vars) {}

  ExprPtr run() {
    ExprPtr e = expr();
    if (peek().kind != Token::Kind::end) fail("unexpected trailing input");
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& get() { return toks_[pos_++]; }

  // Errors at end-of-input point at the last real token (the dangling one).
  [[noreturn]] void fail(const std::string& what) const {
    int off = peek().offset;
    if (peek().kind == Token::Kind::end && pos_ > 0) off = toks_[pos_ - 1].offset;
    throw Error(Errc::syntax_error, what + " at offset " + std::to_string(off), off);
  }

  int var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return static_cast<int>(i);
    return -1;
  }

  ExprPtr expr() {
    ExprPtr e = term();
    while (peek().kind == Token::Kind::plus || peek().kind == Token::Kind::minus) {
      const Token op = get();
      ExprPtr r = term();
      e = mk_binary(op.kind == Token::Kind::plus ? BinaryOp::add : BinaryOp::sub,
                    std::move(e), std::move(r), op.offset);
    }
    return e;
  }

  ExprPtr term() {
    ExprPtr e = factor();
    while (peek().kind == Token::Kind::star || peek().kind == Token::Kind::slash) {
      const Token op = get();
      ExprPtr r = factor();
      e = mk_binary(op.kind == Token::Kind::star ? BinaryOp::mul : BinaryOp::div,
                    std::move(e), std::move(r), op.offset);
    }
    return e;
  }

  ExprPtr factor() {
    if (peek().kind == Token::Kind::minus) {
      const Token op = get();
      return mk_unary(UnaryOp::neg, factor(), op.offset);
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = atom();
    if (peek().kind == Token::Kind::caret) {
      const Token op = get();
      if (peek().kind != Token::Kind::number) fail("expected numeric exponent");
      const Token ex = get();
      base = mk_binary(BinaryOp::pow, std::move(base), mk_const(ex.num, ex.offset),
                       op.offset);
    }
    return base;
  }

  ExprPtr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Token::Kind::number: {
        const Token n = get();
        return mk_const(n.num, n.offset);
      }
      case Token::Kind::lparen: {
        get();
        ExprPtr e = expr();
        if (peek().kind != Token::Kind::rparen) fail("expected ')'");
        get();
        return e;
      }
      case Token::Kind::ident: {
        const Token id = get();
        const bool called = peek().kind == Token::Kind::lparen;
        const int vi = var_index(id.text);
        if (vi >= 0) {
          if (called)
            throw Error(Errc::arity_error,
                        "'" + id.text + "' is a variable, not a function (offset " +
                            std::to_string(id.offset) + ")",
                        id.offset);
          return mk_var(vi, id.offset);
        }
        if (auto fn = function_by_name(id.text)) {
          if (!called)
            throw Error(Errc::arity_error,
                        "function '" + id.text + "' requires an argument list (offset " +
                            std::to_string(id.offset) + ")",
                        id.offset);
          get();  // '('
          ExprPtr arg = expr();
          if (peek().kind != Token::Kind::rparen) fail("expected ')'");
          get();
          return mk_unary(*fn, std::move(arg), id.offset);
        }
        if (id.text == "pi" || id.text == "e") {
          if (called)
            throw Error(Errc::arity_error,
                        "'" + id.text + "' is a constant, not a function (offset " +
                            std::to_string(id.offset) + ")",
                        id.offset);
          return mk_const(id.text == "pi" ? std::numbers::pi : std::numbers::e,
                          id.offset);
        }
        throw Error(Errc::unknown_identifier,
                    "unknown identifier '" + id.text + "' (offset " +
                        std::to_string(id.offset) + ")",
                    id.offset);
      }
      default:
        fail("expected operand");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const std::vector<std::string>& vars_;
};

// Re-throws evaluation-domain failures with the source offset of the node.
template <typename F>
auto with_node_context(const ExprNode& node, F&& f) {
  try {
    return f();
  } catch (const Error& err) {
    if (err.code() == Errc::domain_error && err.offset() < 0 && node.offset >= 0)
      throw Error(Errc::domain_error,
                  std::string(err.what()) + " (node at offset " +
                      std::to_string(node.offset) + ")",
                  node.offset);
    throw;
  }
}

template <typename J>
J apply_unary_jet(UnaryOp op, const J& g) {
  switch (op) {
    case UnaryOp::neg: return -g;
    case UnaryOp::sinh: return sinh(g);
    case UnaryOp::cosh: return cosh(g);
    case UnaryOp::tanh: return tanh(g);
    case UnaryOp::sin: return sin(g);
    case UnaryOp::cos: return cos(g);
    case UnaryOp::exp: return exp(g);
    case UnaryOp::ln: return ln(g);
    case UnaryOp::sqrt: return sqrt(g);
    case UnaryOp::abs: return abs(g);
    case UnaryOp::asin: return asin(g);
  }
  throw Error(Errc::invalid_params, "unhandled unary operator");
}

template <typename J, typename VarFn>
J eval_node(const ExprNode& n, const VarFn& var_jet) {
  switch (n.kind) {
    case ExprNode::Kind::constant:
      if constexpr (std::is_same_v<J, Jet1>) return jet1_const(n.value);
      else return jet2_const(n.value);
    case ExprNode::Kind::variable:
      return var_jet(n.var);
    case ExprNode::Kind::unary: {
      J a = eval_node<J>(*n.a, var_jet);
      return with_node_context(n, [&] { return apply_unary_jet(n.uop, a); });
    }
    case ExprNode::Kind::binary: {
      J a = eval_node<J>(*n.a, var_jet);
      if (n.bop == BinaryOp::pow)
        return with_node_context(n, [&] { return pow(a, n.b->value); });
      J b = eval_node<J>(*n.b, var_jet);
      switch (n.bop) {
        case BinaryOp::add: return a + b;
        case BinaryOp::sub: return a - b;
        case BinaryOp::mul: return a * b;
        case BinaryOp::div:
          return with_node_context(n, [&] { return a / b; });
        default: break;
      }
      break;
    }
  }
  throw Error(Errc::invalid_params, "malformed expression node");
}

// Variable-index remapping used when two trees with different variable lists
// are combined.
ExprPtr remap_vars(const ExprPtr& n, const std::vector<int>& map) {
  if (!n) return n;
  switch (n->kind) {
    case ExprNode::Kind::constant: return n;
    case ExprNode::Kind::variable: {
      const int target = map[static_cast<std::size_t>(n->var)];
      if (target == n->var) return n;
      return mk_var(target, n->offset);
    }
    case ExprNode::Kind::unary: {
      ExprPtr a = remap_vars(n->a, map);
      if (a == n->a) return n;
      return mk_unary(n->uop, std::move(a), n->offset);
    }
    case ExprNode::Kind::binary: {
      ExprPtr a = remap_vars(n->a, map);
      ExprPtr b = remap_vars(n->b, map);
      if (a == n->a && b == n->b) return n;
      return mk_binary(n->bop, std::move(a), std::move(b), n->offset);
    }
  }
  return n;
}

struct Merged {
  std::vector<std::string> vars;
  ExprPtr a, b;
};

Merged merge_operands(const ExprAst& a, const ExprAst& b) {
  if (a.empty() || b.empty())
    throw Error(Errc::invalid_params, "operation on an empty expression");
  Merged m;
  m.vars = a.vars();
  std::vector<int> map(b.vars().size(), -1);
  for (std::size_t i = 0; i < b.vars().size(); ++i) {
    int idx = -1;
    for (std::size_t j = 0; j < m.vars.size(); ++j)
      if (m.vars[j] == b.vars()[i]) { idx = static_cast<int>(j); break; }
    if (idx < 0) {
      idx = static_cast<int>(m.vars.size());
      m.vars.push_back(b.vars()[i]);
    }
    map[i] = idx;
  }
  m.a = a.root();
  m.b = remap_vars(b.root(), map);
  return m;
}

int print_precedence(const ExprNode& n) {
  switch (n.kind) {
    case ExprNode::Kind::constant: return n.value < 0.0 ? 3 : 5;
    case ExprNode::Kind::variable: return 5;
    case ExprNode::Kind::unary: return n.uop == UnaryOp::neg ? 3 : 5;
    case ExprNode::Kind::binary:
      switch (n.bop) {
        case BinaryOp::add:
        case BinaryOp::sub: return 1;
        case BinaryOp::mul:
        case BinaryOp::div: return 2;
        case BinaryOp::pow: return 4;
      }
  }
  return 5;
}

void print_node(std::string& out, const ExprNode& n,
                const std::vector<std::string>& vars);

void print_child(std::string& out, const ExprNode& child, int min_prec,
                 const std::vector<std::string>& vars) {
  if (print_precedence(child) < min_prec) {
    out += '(';
    print_node(out, child, vars);
    out += ')';
  } else {
    print_node(out, child, vars);
  }
}

void print_node(std::string& out, const ExprNode& n,
                const std::vector<std::string>& vars) {
  switch (n.kind) {
    case ExprNode::Kind::constant:
      out += fmt_shortest(n.value);
      return;
    case ExprNode::Kind::variable:
      out += vars[static_cast<std::size_t>(n.var)];
      return;
    case ExprNode::Kind::unary:
      if (n.uop == UnaryOp::neg) {
        out += '-';
        print_child(out, *n.a, 3, vars);
      } else {
        out += function_name(n.uop);
        out += '(';
        print_node(out, *n.a, vars);
        out += ')';
      }
      return;
    case ExprNode::Kind::binary:
      switch (n.bop) {
        case BinaryOp::add:
          print_child(out, *n.a, 1, vars);
          out += '+';
          print_child(out, *n.b, 2, vars);
          return;
        case BinaryOp::sub:
          print_child(out, *n.a, 1, vars);
          out += '-';
          print_child(out, *n.b, 2, vars);
          return;
        case BinaryOp::mul:
          print_child(out, *n.a, 2, vars);
          out += '*';
          print_child(out, *n.b, 3, vars);
          return;
        case BinaryOp::div:
          print_child(out, *n.a, 2, vars);
          out += '/';
          print_child(out, *n.b, 3, vars);
          return;
        case BinaryOp::pow:
          // The grammar wants a bare numeric exponent; negative exponents are
          // rendered through a reciprocal instead.
          if (n.b->value < 0.0) {
            out += "1/";
            ExprNode pos = *n.b;
            pos.value = -pos.value;
            auto flipped = mk_binary(BinaryOp::pow, n.a, mk_const(pos.value));
            print_child(out, *flipped, 3, vars);
            return;
          }
          print_child(out, *n.a, 5, vars);
          out += '^';
          out += fmt_shortest(n.b->value);
          return;
      }
  }
}

void dump_node(std::string& out, const ExprNode& n,
               const std::vector<std::string>& vars, int indent) {
  out.append(static_cast<std::size_t>(indent) * 2, ' ');
  switch (n.kind) {
    case ExprNode::Kind::constant:
      out += "constant " + fmt_shortest(n.value);
      break;
    case ExprNode::Kind::variable:
      out += "variable " + vars[static_cast<std::size_t>(n.var)];
      break;
    case ExprNode::Kind::unary:
      out += std::string("unary ") +
             (n.uop == UnaryOp::neg ? "neg" : function_name(n.uop));
      break;
    case ExprNode::Kind::binary:
      out += "binary ";
      switch (n.bop) {
        case BinaryOp::add: out += "add"; break;
        case BinaryOp::sub: out += "sub"; break;
        case BinaryOp::mul: out += "mul"; break;
        case BinaryOp::div: out += "div"; break;
        case BinaryOp::pow: out += "pow"; break;
      }
      break;
  }
  if (n.offset >= 0) out += " @" + std::to_string(n.offset);
  out += '\n';
  if (n.a) dump_node(out, *n.a, vars, indent + 1);
  if (n.b) dump_node(out, *n.b, vars, indent + 1);
}

}  // namespace

ExprAst ExprAst::parse(std::string_view text, const std::vector<std::string>& vars) {
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = i + 1; j < vars.size(); ++j)
      if (vars[i] == vars[j])
        throw Error(Errc::invalid_params, "duplicate variable name '" + vars[i] + "'");
  Parser p(lex(text), vars);
  return ExprAst(p.run(), vars);
}

ExprAst ExprAst::constant(double v) { return ExprAst(mk_const(v), {}); }

ExprAst ExprAst::variable(const std::string& name) {
  return ExprAst(mk_var(0), {name});
}

Jet1 ExprAst::eval_jet1(double s, int order) const {
  if (!root_) throw Error(Errc::invalid_params, "empty expression");
  if (vars_.size() > 1)
    throw Error(Errc::invalid_params, "eval_jet1 requires a univariate expression");
  if (order < 1 || order > 3)
    throw Error(Errc::invalid_params, "eval_jet1 order must be 1, 2 or 3");
  Jet1 j = eval_node<Jet1>(*root_, [s](int) { return jet1_var(s); });
  if (order < 3) j.d3 = 0.0;
  if (order < 2) j.d2 = 0.0;
  if (!is_finite(j))
    throw Error(Errc::non_finite, "expression produced a non-finite value");
  return j;
}

Jet2 ExprAst::eval_jet2(double u, double v) const {
  if (!root_) throw Error(Errc::invalid_params, "empty expression");
  if (vars_.size() > 2)
    throw Error(Errc::invalid_params, "eval_jet2 requires a bivariate expression");
  Jet2 j = eval_node<Jet2>(*root_, [u, v](int idx) {
    return idx == 0 ? jet2_var_u(u) : jet2_var_v(v);
  });
  if (!is_finite(j))
    throw Error(Errc::non_finite, "expression produced a non-finite value");
  return j;
}

std::string ExprAst::to_string() const {
  if (!root_) return "";
  std::string out;
  print_node(out, *root_, vars_);
  return out;
}

std::string ExprAst::dump() const {
  if (!root_) return "";
  std::string out;
  dump_node(out, *root_, vars_, 0);
  return out;
}

ExprAst ExprAst::substitute(const std::string& var, const ExprAst& replacement) const {
  if (!root_) throw Error(Errc::invalid_params, "empty expression");
  int target = -1;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == var) target = static_cast<int>(i);
  if (target < 0)
    throw Error(Errc::invalid_params, "substitute: unknown variable '" + var + "'");

  // Rebuild through the combining operators so variable lists merge cleanly.
  struct Walker {
    const ExprAst& self;
    int target;
    const ExprAst& repl;
    ExprAst walk(const ExprNode& n) const {
      switch (n.kind) {
        case ExprNode::Kind::constant: return ExprAst::constant(n.value);
        case ExprNode::Kind::variable:
          if (n.var == target) return repl;
          return ExprAst::variable(self.vars()[static_cast<std::size_t>(n.var)]);
        case ExprNode::Kind::unary: return apply_unary(n.uop, walk(*n.a));
        case ExprNode::Kind::binary: {
          if (n.bop == BinaryOp::pow) return pow(walk(*n.a), n.b->value);
          ExprAst a = walk(*n.a), b = walk(*n.b);
          switch (n.bop) {
            case BinaryOp::add: return a + b;
            case BinaryOp::sub: return a - b;
            case BinaryOp::mul: return a * b;
            case BinaryOp::div: return a / b;
            default: break;
          }
          break;
        }
      }
      throw Error(Errc::invalid_params, "malformed expression node");
    }
  };
  return Walker{*this, target, replacement}.walk(*root_);
}

ExprAst operator+(const ExprAst& a, const ExprAst& b) {
  Merged m = merge_operands(a, b);
  return ExprAst(mk_binary(BinaryOp::add, m.a, m.b), std::move(m.vars));
}
ExprAst operator-(const ExprAst& a, const ExprAst& b) {
  Merged m = merge_operands(a, b);
  return ExprAst(mk_binary(BinaryOp::sub, m.a, m.b), std::move(m.vars));
}
ExprAst operator*(const ExprAst& a, const ExprAst& b) {
  Merged m = merge_operands(a, b);
  return ExprAst(mk_binary(BinaryOp::mul, m.a, m.b), std::move(m.vars));
}
ExprAst operator/(const ExprAst& a, const ExprAst& b) {
  Merged m = merge_operands(a, b);
  return ExprAst(mk_binary(BinaryOp::div, m.a, m.b), std::move(m.vars));
}
ExprAst operator-(const ExprAst& a) {
  if (a.empty()) throw Error(Errc::invalid_params, "operation on an empty expression");
  return ExprAst(mk_unary(UnaryOp::neg, a.root()), a.vars());
}
ExprAst apply_unary(UnaryOp op, const ExprAst& a) {
  if (a.empty()) throw Error(Errc::invalid_params, "operation on an empty expression");
  return ExprAst(mk_unary(op, a.root()), a.vars());
}
ExprAst pow(const ExprAst& a, double exponent) {
  if (a.empty()) throw Error(Errc::invalid_params, "operation on an empty expression");
  return ExprAst(mk_binary(BinaryOp::pow, a.root(), mk_const(exponent)), a.vars());
}

}  // namespace pi3
