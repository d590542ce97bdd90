#include "absint/hoare.hpp"

namespace absint {

ArithPtr subst_arith(const std::string& x, const ArithPtr& s,
                     const ArithPtr& e) {
  return std::visit(
      overloaded{[&](const Num&) { return e; },
                 [&](const Var& v) { return v.name == x ? s : e; },
                 [&](const Plus& p) {
                   return plus(subst_arith(x, s, p.left),
                               subst_arith(x, s, p.right));
                 }},
      e->node());
}

BoolExpr subst_bool(const std::string& x, const ArithPtr& s,
                    const BoolExpr& b) {
  return lt(subst_arith(x, s, b.left), subst_arith(x, s, b.right));
}

AssertPtr subst_assert(const std::string& x, const ArithPtr& s,
                       const AssertPtr& a) {
  return std::visit(
      overloaded{[&](const Pred& p) {
                   std::vector<ArithPtr> args;
                   args.reserve(p.args.size());
                   for (const auto& arg : p.args)
                     args.push_back(subst_arith(x, s, arg));
                   return pred(p.name, std::move(args));
                 },
                 [&](const BoolHolds& h) {
                   return bool_holds(subst_bool(x, s, h.test));
                 },
                 [&](const Conj& c) {
                   return conj(subst_assert(x, s, c.left),
                               subst_assert(x, s, c.right));
                 },
                 [&](const Not& n) {
                   return not_a(subst_assert(x, s, n.arg));
                 },
                 [&](const TrueA&) { return a; },
                 [&](const FalseA&) { return a; }},
      a->node());
}

AssertPtr precondition(const AnnInstr& i, const AssertPtr& post) {
  return std::visit(
      overloaded{[&](const PreAnn& p) { return p.assertion; },
                 [&](const AAssign& a) {
                   return subst_assert(a.var, a.rhs, post);
                 },
                 [&](const ASeq& s) {
                   return precondition(*s.first,
                                       precondition(*s.second, post));
                 },
                 [&](const AWhile& w) { return w.invariant; }},
      i.node());
}

std::vector<Condition> conditions(const AnnInstr& i, const AssertPtr& post) {
  return std::visit(
      overloaded{
          [&](const PreAnn& p) {
            std::vector<Condition> out{
                Condition{p.assertion, precondition(*p.body, post)}};
            auto rest = conditions(*p.body, post);
            out.insert(out.end(), rest.begin(), rest.end());
            return out;
          },
          [&](const AAssign&) { return std::vector<Condition>{}; },
          [&](const ASeq& s) {
            auto out = conditions(*s.first, precondition(*s.second, post));
            auto rest = conditions(*s.second, post);
            out.insert(out.end(), rest.begin(), rest.end());
            return out;
          },
          [&](const AWhile& w) {
            std::vector<Condition> out{
                Condition{conj(w.invariant, bool_holds(w.test)),
                          precondition(*w.body, w.invariant)},
                Condition{conj(w.invariant, not_a(bool_holds(w.test))), post}};
            auto rest = conditions(*w.body, w.invariant);
            out.insert(out.end(), rest.begin(), rest.end());
            return out;
          }},
      i.node());
}

}  // namespace absint
