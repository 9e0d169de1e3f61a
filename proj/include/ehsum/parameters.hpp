#pragma once

#include <map>
#include <string>
#include <vector>

#include "ehsum/lattice.hpp"
#include "ehsum/theta.hpp"

namespace ehsum {

// Requested evaluation shape: rank n plus either a simplex size N or box
// bounds m, depending on the identity's summation domain.
struct Shape {
  int n = 1;
  int N = 0;
  MultiIndex m;

  std::string str() const;
  bool operator==(const Shape&) const = default;
};

// One fully-instantiated parameter draw: nome, step q, named scalars and
// named parameter lists, together with the realized shape.  All complex
// entries are nonzero; solved-for parameters satisfy their balancing
// relation exactly (up to rounding at the working precision).
struct ParameterSet {
  Nome p;
  Complex q;
  int n = 1;
  int N = 0;
  MultiIndex m;
  std::map<std::string, Complex> scalars;
  std::map<std::string, std::vector<Complex>> lists;
  std::map<std::string, int> ints;  // small auxiliary integers (Pochhammer lengths)

  long prec() const;
  const Complex& s(const std::string& name) const;
  const std::vector<Complex>& list(const std::string& name) const;
  int i(const std::string& name) const;
};

}  // namespace ehsum
