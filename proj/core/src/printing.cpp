#include "pcla/printing.hpp"

namespace pcla {

std::string to_string(const LieMonomial& m, const CommutationGraph& g) {
  if (m.is_leaf()) return g.name(m.generator());
  return "[" + to_string(m.left(), g) + "," + to_string(m.right(), g) + "]";
}

std::string to_string(const LieElement& e, const CommutationGraph& g) {
  if (e.is_zero()) return "0";
  std::string out;
  e.for_each_term([&](const LieMonomial& m, const Scalar& c) {
    const bool negative = sgn(c) < 0;
    const Scalar magnitude = negative ? Scalar(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += to_string(magnitude) + "*" + to_string(m, g);
  });
  return out;
}

std::string to_string(GenSet s, const CommutationGraph& g) {
  std::string out = "{";
  bool first = true;
  for (int v : s.to_vector()) {
    if (!first) out += ", ";
    out += g.name(v);
    first = false;
  }
  return out + "}";
}

}  // namespace pcla
