#include "ivopt/expr.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <utility>

#include "ivopt/errors.hpp"

namespace ivopt {

enum class NodeKind { Const, Var, Add, Sub, Mul, Neg, Pow, Call };

struct RealExpr::Node {
  NodeKind kind;
  double value = 0.0;                  // Const
  int index = 0;                       // Var
  int exponent = 0;                    // Pow
  Fn fn = Fn::Exp;                     // Call
  std::shared_ptr<const Node> a, b;    // children
};

namespace {

using Node = RealExpr::Node;
using NodePtr = std::shared_ptr<const Node>;

double eval_node(const Node& n, const Eigen::VectorXd& x) {
  switch (n.kind) {
    case NodeKind::Const:
      return n.value;
    case NodeKind::Var:
      if (n.index >= x.size())
        throw std::invalid_argument("expression variable index out of range");
      return x[n.index];
    case NodeKind::Add:
      return eval_node(*n.a, x) + eval_node(*n.b, x);
    case NodeKind::Sub:
      return eval_node(*n.a, x) - eval_node(*n.b, x);
    case NodeKind::Mul:
      return eval_node(*n.a, x) * eval_node(*n.b, x);
    case NodeKind::Neg:
      return -eval_node(*n.a, x);
    case NodeKind::Pow: {
      const double base = eval_node(*n.a, x);
      return std::pow(base, n.exponent);
    }
    case NodeKind::Call: {
      const double arg = eval_node(*n.a, x);
      switch (n.fn) {
        case RealExpr::Fn::Exp: return std::exp(arg);
        case RealExpr::Fn::Sin: return std::sin(arg);
        case RealExpr::Fn::Cos: return std::cos(arg);
      }
      return 0.0;
    }
  }
  return 0.0;
}

struct Dual {
  double v;
  Eigen::VectorXd g;
};

Dual eval_dual(const Node& n, const Eigen::VectorXd& x) {
  const auto dims = x.size();
  switch (n.kind) {
    case NodeKind::Const:
      return {n.value, Eigen::VectorXd::Zero(dims)};
    case NodeKind::Var: {
      if (n.index >= dims)
        throw std::invalid_argument("expression variable index out of range");
      Eigen::VectorXd g = Eigen::VectorXd::Zero(dims);
      g[n.index] = 1.0;
      return {x[n.index], std::move(g)};
    }
    case NodeKind::Add: {
      Dual a = eval_dual(*n.a, x), b = eval_dual(*n.b, x);
      return {a.v + b.v, a.g + b.g};
    }
    case NodeKind::Sub: {
      Dual a = eval_dual(*n.a, x), b = eval_dual(*n.b, x);
      return {a.v - b.v, a.g - b.g};
    }
    case NodeKind::Mul: {
      Dual a = eval_dual(*n.a, x), b = eval_dual(*n.b, x);
      return {a.v * b.v, a.v * b.g + b.v * a.g};
    }
    case NodeKind::Neg: {
      Dual a = eval_dual(*n.a, x);
      return {-a.v, -a.g};
    }
    case NodeKind::Pow: {
      Dual a = eval_dual(*n.a, x);
      if (n.exponent == 0) return {1.0, Eigen::VectorXd::Zero(dims)};
      const double p = std::pow(a.v, n.exponent - 1);
      return {p * a.v, n.exponent * p * a.g};
    }
    case NodeKind::Call: {
      Dual a = eval_dual(*n.a, x);
      switch (n.fn) {
        case RealExpr::Fn::Exp: {
          const double e = std::exp(a.v);
          return {e, e * a.g};
        }
        case RealExpr::Fn::Sin:
          return {std::sin(a.v), std::cos(a.v) * a.g};
        case RealExpr::Fn::Cos:
          return {std::cos(a.v), -std::sin(a.v) * a.g};
      }
      return {0.0, Eigen::VectorXd::Zero(dims)};
    }
  }
  return {0.0, Eigen::VectorXd::Zero(dims)};
}

int min_dim_node(const Node& n) {
  switch (n.kind) {
    case NodeKind::Const:
      return 0;
    case NodeKind::Var:
      return n.index + 1;
    case NodeKind::Add:
    case NodeKind::Sub:
    case NodeKind::Mul:
      return std::max(min_dim_node(*n.a), min_dim_node(*n.b));
    case NodeKind::Neg:
    case NodeKind::Pow:
    case NodeKind::Call:
      return min_dim_node(*n.a);
  }
  return 0;
}

// Printer precedence: additive 0, multiplicative 1, unary minus 2, power 3,
// atoms 4. A child is parenthesized when its precedence is below what the
// context requires.
int prec(const Node& n) {
  switch (n.kind) {
    case NodeKind::Add:
    case NodeKind::Sub:
      return 0;
    case NodeKind::Mul:
      return 1;
    case NodeKind::Neg:
      return 2;
    case NodeKind::Pow:
      return 3;
    case NodeKind::Const:
      return n.value < 0 ? 2 : 4;  // negative literal prints with '-'
    case NodeKind::Var:
    case NodeKind::Call:
      return 4;
  }
  return 4;
}

std::string print_node(const Node& n);

std::string print_child(const Node& child, int min_prec) {
  std::string s = print_node(child);
  if (prec(child) < min_prec) return "(" + s + ")";
  return s;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string print_node(const Node& n) {
  switch (n.kind) {
    case NodeKind::Const:
      return format_double(n.value);
    case NodeKind::Var:
      return "x" + std::to_string(n.index + 1);
    case NodeKind::Add:
      return print_child(*n.a, 0) + " + " + print_child(*n.b, 1);
    case NodeKind::Sub:
      return print_child(*n.a, 0) + " - " + print_child(*n.b, 1);
    case NodeKind::Mul:
      return print_child(*n.a, 1) + "*" + print_child(*n.b, 2);
    case NodeKind::Neg:
      return "-" + print_child(*n.a, 2);
    case NodeKind::Pow:
      return print_child(*n.a, 4) + "^" + std::to_string(n.exponent);
    case NodeKind::Call: {
      const char* name = n.fn == RealExpr::Fn::Exp   ? "exp"
                         : n.fn == RealExpr::Fn::Sin ? "sin"
                                                     : "cos";
      return std::string(name) + "(" + print_node(*n.a) + ")";
    }
  }
  return {};
}

bool equal_nodes(const Node& a, const Node& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case NodeKind::Const:
      return a.value == b.value;
    case NodeKind::Var:
      return a.index == b.index;
    case NodeKind::Add:
    case NodeKind::Sub:
    case NodeKind::Mul:
      return equal_nodes(*a.a, *b.a) && equal_nodes(*a.b, *b.b);
    case NodeKind::Neg:
      return equal_nodes(*a.a, *b.a);
    case NodeKind::Pow:
      return a.exponent == b.exponent && equal_nodes(*a.a, *b.a);
    case NodeKind::Call:
      return a.fn == b.fn && equal_nodes(*a.a, *b.a);
  }
  return false;
}

NodePtr make(Node n) { return std::make_shared<const Node>(std::move(n)); }

}  // namespace

RealExpr RealExpr::constant(double v) {
  Node n;
  n.kind = NodeKind::Const;
  n.value = v;
  return RealExpr(make(std::move(n)));
}

RealExpr RealExpr::variable(int index) {
  if (index < 0) throw std::invalid_argument("negative variable index");
  Node n;
  n.kind = NodeKind::Var;
  n.index = index;
  return RealExpr(make(std::move(n)));
}

RealExpr RealExpr::add(RealExpr a, RealExpr b) {
  Node n;
  n.kind = NodeKind::Add;
  n.a = std::move(a.node_);
  n.b = std::move(b.node_);
  return RealExpr(make(std::move(n)));
}

RealExpr RealExpr::sub(RealExpr a, RealExpr b) {
  Node n;
  n.kind = NodeKind::Sub;
  n.a = std::move(a.node_);
  n.b = std::move(b.node_);
  return RealExpr(make(std::move(n)));
}

RealExpr RealExpr::mul(RealExpr a, RealExpr b) {
  Node n;
  n.kind = NodeKind::Mul;
  n.a = std::move(a.node_);
  n.b = std::move(b.node_);
  return RealExpr(make(std::move(n)));
}

RealExpr RealExpr::neg(RealExpr a) {
  Node n;
  n.kind = NodeKind::Neg;
  n.a = std::move(a.node_);
  return RealExpr(make(std::move(n)));
}

RealExpr RealExpr::pow(RealExpr base, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  Node n;
  n.kind = NodeKind::Pow;
  n.exponent = exponent;
  n.a = std::move(base.node_);
  return RealExpr(make(std::move(n)));
}

RealExpr RealExpr::call(Fn fn, RealExpr arg) {
  Node n;
  n.kind = NodeKind::Call;
  n.fn = fn;
  n.a = std::move(arg.node_);
  return RealExpr(make(std::move(n)));
}

double RealExpr::value(const Eigen::VectorXd& x) const {
  return eval_node(*node_, x);
}

double RealExpr::value_and_gradient(const Eigen::VectorXd& x,
                                    Eigen::VectorXd& grad) const {
  Dual d = eval_dual(*node_, x);
  grad = std::move(d.g);
  return d.v;
}

int RealExpr::min_dim() const { return min_dim_node(*node_); }

std::string RealExpr::str() const { return print_node(*node_); }

bool RealExpr::equals(const RealExpr& other) const {
  return equal_nodes(*node_, *other.node_);
}

}  // namespace ivopt
