#pragma once

#include <vector>

#include "absint/syntax.hpp"

// Substitution, weakest-precondition computation, and verification-condition
// generation over annotated instructions.

namespace absint {

// Replaces every occurrence of the variable x by s.
ArithPtr subst_arith(const std::string& x, const ArithPtr& s,
                     const ArithPtr& e);
BoolExpr subst_bool(const std::string& x, const ArithPtr& s,
                    const BoolExpr& b);
AssertPtr subst_assert(const std::string& x, const ArithPtr& s,
                       const AssertPtr& a);

// Weakest precondition of i for the given post-condition; annotations and
// loop invariants are taken for granted.
AssertPtr precondition(const AnnInstr& i, const AssertPtr& post);

// Implications that certify the annotations of i against the post-condition.
std::vector<Condition> conditions(const AnnInstr& i, const AssertPtr& post);

}  // namespace absint
