#include "pcla/element.hpp"

#include <algorithm>

namespace pcla {

GenSet support(const LieElement& g) {
  GenSet s;
  g.for_each_term([&](const LieMonomial& m, const Scalar&) { s |= m.support(); });
  return s;
}

bool is_homogeneous(const LieElement& g) {
  if (g.is_zero()) return false;
  const int n = g.order().size();
  bool first = true;
  Multidegree d0{{}};
  bool homogeneous = true;
  g.for_each_term([&](const LieMonomial& m, const Scalar&) {
    Multidegree d = multidegree(m, n);
    if (first) {
      d0 = std::move(d);
      first = false;
    } else if (!(d == d0)) {
      homogeneous = false;
    }
  });
  return homogeneous;
}

Multidegree mdeg(const LieElement& g) {
  if (!is_homogeneous(g))
    throw Error("mdeg: element is not homogeneous");
  return multidegree(g.leading_term().first, g.order().size());
}

std::vector<std::pair<Multidegree, LieElement>> homogeneous_parts(
    const LieElement& g) {
  const int n = g.order().size();
  std::vector<std::pair<Multidegree, LieElement>> parts;
  g.for_each_term([&](const LieMonomial& m, const Scalar& c) {
    Multidegree d = multidegree(m, n);
    auto it = std::find_if(parts.begin(), parts.end(),
                           [&](const auto& p) { return p.first == d; });
    if (it == parts.end()) {
      LieElement part(g.order(), g.form());
      part.add_term(m, c);
      parts.emplace_back(std::move(d), std::move(part));
    } else {
      it->second.add_term(m, c);
    }
  });
  return parts;
}

std::vector<std::pair<GenSet, LieElement>> component_split(
    const CommutationGraph& g, const LieElement& e) {
  if (e.is_zero()) throw Error("component_split: zero element");
  if (e.form() != ElementForm::nf)
    throw Error("component_split: element must be in reduced form");
  const GenSet supp = support(e);
  const CommutationGraph h = g.induced(supp).complement();
  const std::vector<GenSet> sub_components = h.components();

  // Components of the induced complement use local vertex numbers; map them
  // back through the ordered support set.
  std::vector<GenSet> comps;
  comps.reserve(sub_components.size());
  for (const GenSet& sc : sub_components) {
    GenSet full;
    for (int local : sc.to_vector()) full.add(supp.nth(local));
    comps.push_back(full);
  }

  std::vector<std::pair<GenSet, LieElement>> out;
  out.reserve(comps.size());
  for (const GenSet& c : comps)
    out.emplace_back(c, LieElement::zero(e.order(), e.form()));

  e.for_each_term([&](const LieMonomial& m, const Scalar& coeff) {
    const GenSet ms = m.support();
    bool placed = false;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      if (ms.subset_of(comps[i])) {
        out[i].second.add_term(m, coeff);
        placed = true;
        break;
      }
    }
    if (!placed)
      throw ConsistencyError("basis monomial straddles support components");
  });
  return out;
}

}  // namespace pcla
