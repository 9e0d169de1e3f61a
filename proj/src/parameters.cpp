#include "ehsum/parameters.hpp"

#include <algorithm>
#include <sstream>

namespace ehsum {

std::string Shape::str() const {
  std::ostringstream os;
  os << "n=" << n;
  if (!m.empty()) {
    os << " m=(";
    for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
    os << ")";
  } else {
    os << " N=" << N;
  }
  return os.str();
}

long ParameterSet::prec() const { return std::min(p.prec(), q.prec()); }

const Complex& ParameterSet::s(const std::string& name) const {
  auto it = scalars.find(name);
  if (it == scalars.end()) throw std::invalid_argument("missing scalar parameter: " + name);
  return it->second;
}

const std::vector<Complex>& ParameterSet::list(const std::string& name) const {
  auto it = lists.find(name);
  if (it == lists.end()) throw std::invalid_argument("missing list parameter: " + name);
  return it->second;
}

int ParameterSet::i(const std::string& name) const {
  auto it = ints.find(name);
  if (it == ints.end()) throw std::invalid_argument("missing integer parameter: " + name);
  return it->second;
}

}  // namespace ehsum
