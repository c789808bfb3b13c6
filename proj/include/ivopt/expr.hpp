#pragma once

#include <Eigen/Core>
#include <memory>
#include <string>

namespace ivopt {

/// Immutable real-valued expression over variables x1..xn: sums, products,
/// integer powers and exp/sin/cos. Shared-node value type; copies are cheap.
class RealExpr {
 public:
  enum class Fn { Exp, Sin, Cos };

  static RealExpr constant(double v);
  static RealExpr variable(int index);  // 0-based
  static RealExpr add(RealExpr a, RealExpr b);
  static RealExpr sub(RealExpr a, RealExpr b);
  static RealExpr mul(RealExpr a, RealExpr b);
  static RealExpr neg(RealExpr a);
  static RealExpr pow(RealExpr base, int exponent);  // exponent >= 0
  static RealExpr call(Fn fn, RealExpr arg);

  double value(const Eigen::VectorXd& x) const;

  /// Value plus gradient with respect to all variables (forward mode).
  double value_and_gradient(const Eigen::VectorXd& x,
                            Eigen::VectorXd& grad) const;

  /// 1 + largest variable index appearing in the expression (0 if none).
  int min_dim() const;

  /// Canonical text form; parses back to a structurally equal expression.
  std::string str() const;

  bool equals(const RealExpr& other) const;
  friend bool operator==(const RealExpr& a, const RealExpr& b) {
    return a.equals(b);
  }

  struct Node;

 private:
  explicit RealExpr(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace ivopt
