#include "absint/interpreter.hpp"

namespace absint {

AnnPtr mark(const Instr& i) {
  return std::visit(
      overloaded{[](const Assign& a) {
                   return pre_ann(false_a(), a_assign(a.var, a.rhs));
                 },
                 [](const Seq& s) {
                   return a_seq(mark(*s.first), mark(*s.second));
                 },
                 [](const While& w) {
                   return a_while(w.test, false_a(), mark(*w.body));
                 }},
      i.node());
}

}  // namespace absint
