#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dglift/semifree_module.hpp"

namespace dglift {

/// Named objects declared in a problem file, in declaration order.
struct ProblemDescription {
  struct NamedRing {
    std::string name;
    RingPtr ring;
  };
  struct NamedAlgebra {
    std::string name;
    std::string ring;
    AlgebraPtr algebra;
  };
  struct NamedModule {
    std::string name;
    std::string algebra;
    ModulePtr module;
  };

  std::vector<NamedRing> rings;
  std::vector<NamedAlgebra> algebras;
  std::vector<NamedModule> modules;

  const NamedModule* find_module(const std::string& name) const;
  const NamedAlgebra* find_algebra(const std::string& name) const;
};

/// Parses a problem file:
///   ring R = QQ[x:1,y:1]/(x*y)
///   algebra B = R<X:1, Y:2 | dX = x, dY = X*y>
///   module N over B = <e:0, ep:4 | de = 0, dep = e*X*Y*y>
/// Degrees are written name:hdeg or name:hdeg:wdeg. Statements may span
/// lines while a bracket is open; '#' starts a comment.
/// Errors carry the source line: SyntaxError, UndeclaredName, DuplicateName,
/// plus every construction error of the declared objects.
ProblemDescription parse_problem(std::string_view text);

/// Canonical text: explicit internal degrees, nonzero differentials only.
/// parse_problem(print_problem(p)) prints back identically.
std::string print_problem(const ProblemDescription& p);

/// A ring description such as "QQ", "FF(5)" or "QQ[x:1,y:1]/(x*y)".
RingPtr parse_ring(std::string_view text);

/// An expression over the variables of alg and the generators of its ring.
AlgebraElement parse_algebra_element(const AlgebraPtr& alg, std::string_view text);

}  // namespace dglift
