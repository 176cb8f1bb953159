#include "pcla/centralizer.hpp"

#include <algorithm>

namespace pcla {

bool commutes(const ReductionTable& t, const LieElement& g, const LieElement& h,
              FreeBracketCache& cache) {
  return bracket(t, g, h, cache).is_zero();
}

bool commutes(const ReductionTable& t, const LieElement& g,
              const LieElement& h) {
  FreeBracketCache cache;
  return commutes(t, g, h, cache);
}

std::optional<ProportionalityWitness> proportional(const LieElement& g,
                                                   const LieElement& h) {
  if (g.order() != h.order())
    throw Error("proportional: elements use different generator orders");
  if (g.is_zero() && h.is_zero())
    return ProportionalityWitness{Scalar(1), Scalar(1)};
  if (h.is_zero()) return ProportionalityWitness{Scalar(0), Scalar(1)};
  if (g.is_zero()) return ProportionalityWitness{Scalar(1), Scalar(0)};

  // Pivot criterion: fix s with alpha_s != 0 and require
  // alpha_s * beta_i = alpha_i * beta_s on the union of the term keys.
  const auto [pivot, alpha_s] = g.leading_term();
  const Scalar beta_s = h.coefficient(pivot);
  bool ok = true;
  h.for_each_term([&](const LieMonomial& m, const Scalar& beta_i) {
    if (alpha_s * beta_i != g.coefficient(m) * beta_s) ok = false;
  });
  g.for_each_term([&](const LieMonomial& m, const Scalar& alpha_i) {
    if (alpha_s * h.coefficient(m) != alpha_i * beta_s) ok = false;
  });
  if (!ok) return std::nullopt;
  return ProportionalityWitness{beta_s, alpha_s};
}

bool homogeneous_commutes_criterion(const CommutationGraph& g,
                                    const LieElement& a, const LieElement& b) {
  if (a.is_zero() || b.is_zero())
    throw Error("homogeneous criterion: elements must be nonzero");
  if (!is_homogeneous(a) || !is_homogeneous(b))
    throw Error("homogeneous criterion: elements must be homogeneous");
  const GenSet sa = support(a);
  const GenSet sb = support(b);
  if (sa.intersects(sb)) return proportional(a, b).has_value();
  for (int x : sa.to_vector())
    if (!g.adjacent_to_all(x, sb)) return false;
  return true;
}

CentralizerDescription centralizer_of(const ReductionTable& t,
                                      const LieElement& g) {
  if (g.is_zero())
    throw Error("centralizer of zero is the whole algebra");
  if (g.form() != ElementForm::nf)
    throw Error("centralizer_of: element must be in reduced form");

  CentralizerDescription d{g, {}, {}, {}};
  for (auto& [comp, part] : component_split(t.graph(), g)) {
    d.component_supports.push_back(comp);
    d.components.push_back(std::move(part));
  }
  const GenSet supp = support(g);
  for (int x = 0; x < t.graph().size(); ++x)
    if (t.graph().adjacent_to_all(x, supp)) d.common_neighbors.add(x);
  return d;
}

bool centralizer_membership(const ReductionTable& t,
                            const CentralizerDescription& d,
                            const LieElement& h) {
  if (h.form() != ElementForm::nf)
    throw Error("centralizer_membership: element must be in reduced form");
  h.require_same_order(d.g);
  if (h.degree() > t.degree_bound())
    throw DegreeError("element degree exceeds the reduction table bound",
                      h.degree());

  const GenSet supp_g = support(d.g);
  std::vector<LieElement> buckets(
      d.components.size(), LieElement::zero(h.order(), ElementForm::nf));
  bool ok = true;
  h.for_each_term([&](const LieMonomial& m, const Scalar& c) {
    if (!ok) return;
    const GenSet ms = m.support();
    if (ms.subset_of(supp_g)) {
      bool placed = false;
      for (std::size_t i = 0; i < buckets.size(); ++i) {
        if (ms.subset_of(d.component_supports[i])) {
          buckets[i].add_term(m, c);
          placed = true;
          break;
        }
      }
      if (!placed)
        throw ConsistencyError("basis monomial straddles support components");
    } else if (!ms.intersects(supp_g)) {
      if (!ms.subset_of(d.common_neighbors)) ok = false;
    } else {
      // Mixed support never centralizes.
      ok = false;
    }
  });
  if (!ok) return false;
  for (std::size_t i = 0; i < buckets.size(); ++i)
    if (!proportional(d.components[i], buckets[i]).has_value()) return false;
  return true;
}

GenSet centralizer_in_commutant(
    const ReductionTable& t,
    const std::vector<std::pair<int, Scalar>>& coefficients) {
  if (coefficients.empty())
    throw Error("centralizer_in_commutant: empty linear combination");
  GenSet listed;
  for (const auto& [gen, coeff] : coefficients) {
    if (gen < 0 || gen >= t.graph().size())
      throw UnknownGeneratorError("#" + std::to_string(gen));
    if (is_zero(coeff))
      throw Error("centralizer_in_commutant: zero coefficient at '" +
                  t.graph().name(gen) + "'");
    if (listed.contains(gen))
      throw Error("centralizer_in_commutant: generator '" +
                  t.graph().name(gen) + "' listed twice");
    listed.add(gen);
  }
  GenSet out;
  for (int x = 0; x < t.graph().size(); ++x)
    if (t.graph().adjacent_to_all(x, listed)) out.add(x);
  return out;
}

}  // namespace pcla
