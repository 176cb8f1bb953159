#include "pcla/verify.hpp"

#include "pcla/centralizer.hpp"
#include "pcla/printing.hpp"

namespace pcla {

Scalar random_coefficient(VerifyRng& rng, int bound) {
  const int span = 2 * bound;
  const int v = static_cast<int>(rng() % static_cast<std::uint64_t>(span));
  // skip zero: values land in [-bound,-1] U [1,bound]
  return Scalar(v < bound ? v - bound : v - bound + 1);
}

LieElement random_nf_element(const ReductionTable& t, VerifyRng& rng,
                             int max_degree, int max_terms, bool allow_zero) {
  const std::vector<LieMonomial> basis =
      pcls_basis_flat(t.order(), t.graph(), max_degree);
  LieElement e(t.order(), ElementForm::nf);
  if (basis.empty()) return e;
  for (int attempt = 0; attempt < 64; ++attempt) {
    const int terms = 1 + static_cast<int>(pick_index(
                              rng, static_cast<std::size_t>(max_terms)));
    for (int i = 0; i < terms; ++i)
      e.add_term(basis[pick_index(rng, basis.size())],
                 random_coefficient(rng));
    if (!e.is_zero() || allow_zero) return e;
  }
  return e;
}

LieElement random_homogeneous_element(const ReductionTable& t, VerifyRng& rng,
                                      int degree, int max_terms) {
  const auto levels = enumerate_pcls(t.order(), t.graph(), degree);
  const auto& level = levels[static_cast<std::size_t>(degree - 1)];
  LieElement e(t.order(), ElementForm::nf);
  if (level.empty()) return e;

  // Group the graded piece by multidegree and draw from one group.
  std::vector<std::vector<std::size_t>> groups;
  std::vector<Multidegree> keys;
  for (std::size_t i = 0; i < level.size(); ++i) {
    const Multidegree d = multidegree(level[i], t.order().size());
    bool found = false;
    for (std::size_t k = 0; k < keys.size(); ++k) {
      if (keys[k] == d) {
        groups[k].push_back(i);
        found = true;
        break;
      }
    }
    if (!found) {
      keys.push_back(d);
      groups.push_back({i});
    }
  }
  const auto& group = groups[pick_index(rng, groups.size())];
  for (int attempt = 0; attempt < 64 && e.is_zero(); ++attempt) {
    const int terms = 1 + static_cast<int>(pick_index(
                              rng, static_cast<std::size_t>(max_terms)));
    for (int i = 0; i < terms; ++i)
      e.add_term(level[group[pick_index(rng, group.size())]],
                 random_coefficient(rng));
  }
  return e;
}

SuiteResult run_identities_suite(const ReductionTable& t, std::uint64_t seed,
                                 int samples) {
  SuiteResult r{"identities", 0, 0, {}};
  VerifyRng rng(seed);
  FreeBracketCache cache;
  const int d = std::max(3, t.degree_bound());
  for (int i = 0; i < samples; ++i) {
    // Degree budget split across the triple so every mix within the bound
    // gets exercised.
    const int dg = 1 + static_cast<int>(pick_index(
                           rng, static_cast<std::size_t>(d - 2)));
    const int dh = 1 + static_cast<int>(pick_index(
                           rng, static_cast<std::size_t>(d - dg - 1)));
    const int dk = std::max(1, d - dg - dh);
    const LieElement g = random_nf_element(t, rng, dg, 3);
    const LieElement h = random_nf_element(t, rng, dh, 3);
    const LieElement k = random_nf_element(t, rng, dk, 3);
    const Scalar a = random_coefficient(rng);

    const LieElement s = random_nf_element(t, rng, d / 2, 3);
    r.record(bracket(t, s, s, cache).is_zero(), "bracket(g,g) != 0");
    r.record(bracket(t, g, h, cache) ==
                 bracket(t, h, g, cache).scaled(Scalar(-1)),
             "anticommutativity failed");
    r.record(bracket(t, g.scaled(a) + h, k, cache) ==
                 bracket(t, g, k, cache).scaled(a) + bracket(t, h, k, cache),
             "bilinearity failed");
    r.record(bracket(t, g, bracket(t, h, k, cache), cache) ==
                 bracket(t, bracket(t, g, h, cache), k, cache) +
                     bracket(t, h, bracket(t, g, k, cache), cache),
             "Jacobi identity failed");
  }
  return r;
}

SuiteResult run_dimensions_suite(const ReductionTable& t) {
  SuiteResult r{"dimensions", 0, 0, {}};
  r.record(dimension_check(t.graph(), t.order(), t.degree_bound()),
           "graded dimension certificate failed");
  return r;
}

SuiteResult run_centralizers_suite(const ReductionTable& t, std::uint64_t seed,
                                   int samples) {
  SuiteResult r{"centralizers", 0, 0, {}};
  VerifyRng rng(seed);
  FreeBracketCache cache;
  // Split the bound between the sampled element and the kernel truncation.
  const int gdeg = std::max(1, (t.degree_bound() - 1) / 2);
  const int kdeg = t.degree_bound() - gdeg;
  for (int i = 0; i < samples; ++i) {
    const LieElement g = random_nf_element(t, rng, gdeg, 3);
    if (g.is_zero()) continue;
    const CentralizerDescription d = centralizer_of(t, g);
    const KernelBasis brute = brute_force_centralizer(t, g, kdeg);
    const KernelBasis structural = structural_kernel(t, d, kdeg);
    r.record(kernels_equal(brute, structural),
             "kernel mismatch for g = " + to_string(g, t.graph()));
    for (const LieElement& e : brute.elements)
      r.record(commutes(t, g, e, cache),
               "kernel element fails to commute with g");

    const LieElement h = random_nf_element(t, rng, kdeg, 3, true);
    r.record(centralizer_membership(t, d, h) == commutes(t, g, h, cache),
             "membership disagrees with the product test for g = " +
                 to_string(g, t.graph()));
  }
  return r;
}

}  // namespace pcla
