#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "arithmetree/linear.hpp"

namespace atree {

enum class Op { Prec, Succ, Bullet };

// the closed interval [over(v,w), under(v,w)], in literal order
const std::vector<Name>& star_interval(const Name& v, const Name& w);

LinComb star(const Name& v, const Name& w);
LinComb star(const LinComb& x, const LinComb& y);

// support of v op w; every coefficient is 1. Throws UndefinedExpression on (0) op (0).
std::vector<Name> tri_terms(Op op, const Name& v, const Name& w);
LinComb tri_op(Op op, const Name& v, const Name& w);
LinComb tri_op(Op op, const LinComb& x, const LinComb& y);

// GEN, or a binary node labelled by an operation
class UniversalExpr {
 public:
  static UniversalExpr gen();
  static UniversalExpr node(Op op, UniversalExpr l, UniversalExpr r);

  bool is_gen() const { return !node_; }
  Op op() const;
  const UniversalExpr& left() const;
  const UniversalExpr& right() const;
  int gen_count() const;

  // "(g > g) . g": tokens g, <, >, . for GEN, prec, succ, bullet
  std::string str() const;

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

struct UniversalExpr::Node {
  Op op;
  UniversalExpr l, r;
};

inline Op UniversalExpr::op() const { return node_->op; }
inline const UniversalExpr& UniversalExpr::left() const { return node_->l; }
inline const UniversalExpr& UniversalExpr::right() const { return node_->r; }

UniversalExpr universal_expression(const Tree& t);

template <class T>
struct OpTriple {
  std::function<T(const T&, const T&)> prec, succ, bullet;

  T apply(Op op, const T& a, const T& b) const {
    switch (op) {
      case Op::Prec:
        return prec(a, b);
      case Op::Succ:
        return succ(a, b);
      case Op::Bullet:
        return bullet(a, b);
    }
    return bullet(a, b);
  }
};

template <class T>
T eval_universal(const UniversalExpr& e, const OpTriple<T>& ops, const T& g) {
  if (e.is_gen()) return g;
  return ops.apply(e.op(), eval_universal(e.left(), ops, g), eval_universal(e.right(), ops, g));
}

OpTriple<LinComb> trialgebra_ops();

}  // namespace atree
