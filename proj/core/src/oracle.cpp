#include "pcla/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace pcla {

std::vector<LieMonomial> pcls_basis_flat(const GeneratorOrder& o,
                                         const CommutationGraph& g, int dmax) {
  std::vector<LieMonomial> out;
  for (auto& level : enumerate_pcls(o, g, dmax))
    for (auto& m : level) out.push_back(std::move(m));
  return out;
}

namespace {

std::vector<Word> column_words(const std::vector<LieMonomial>& basis) {
  std::vector<Word> out;
  out.reserve(basis.size());
  for (const auto& m : basis) out.push_back(m.word());
  return out;
}

KernelBasis from_rows(const ReductionTable& t, int d,
                      const std::vector<LieMonomial>& basis,
                      QMatrix rows) {
  rows.rref();
  KernelBasis k{d, t.order(), column_words(basis), {}, std::move(rows)};
  for (std::size_t r = 0; r < k.echelon.rows(); ++r) {
    LieElement e(t.order(), ElementForm::nf);
    for (std::size_t c = 0; c < basis.size(); ++c)
      e.add_term(basis[c], k.echelon.at(r, c));
    k.elements.push_back(std::move(e));
  }
  return k;
}

}  // namespace

KernelBasis brute_force_centralizer(const ReductionTable& t,
                                    const LieElement& g, int d) {
  if (d < 1) throw Error("brute_force_centralizer: degree must be positive");
  if (g.degree() + d > t.degree_bound())
    throw DegreeError("kernel computation exceeds the reduction table bound",
                      g.degree() + d);

  const std::vector<LieMonomial> domain =
      pcls_basis_flat(t.order(), t.graph(), d);
  const std::vector<LieMonomial> range =
      pcls_basis_flat(t.order(), t.graph(), g.degree() + d);
  std::map<Word, std::size_t> range_index;
  for (std::size_t i = 0; i < range.size(); ++i)
    range_index.emplace(range[i].word(), i);

  // Columns of the map h -> bracket(g, h).
  QMatrix m(range.size(), domain.size());
  FreeBracketCache cache;
  for (std::size_t j = 0; j < domain.size(); ++j) {
    const LieElement image = bracket(
        t, g, LieElement::monomial(t.order(), ElementForm::nf, domain[j]),
        cache);
    image.for_each_term([&](const LieMonomial& mono, const Scalar& c) {
      m.at(range_index.at(mono.word()), j) = c;
    });
  }
  return from_rows(t, d, domain, m.kernel());
}

KernelBasis structural_kernel(const ReductionTable& t,
                              const CentralizerDescription& d, int degree) {
  if (degree < 1) throw Error("structural_kernel: degree must be positive");
  if (d.g.degree() + degree > t.degree_bound())
    throw DegreeError("kernel computation exceeds the reduction table bound",
                      d.g.degree() + degree);

  const std::vector<LieMonomial> domain =
      pcls_basis_flat(t.order(), t.graph(), degree);
  std::map<Word, std::size_t> domain_index;
  for (std::size_t i = 0; i < domain.size(); ++i)
    domain_index.emplace(domain[i].word(), i);

  std::vector<LieElement> spanning;
  for (const LieElement& part : d.components)
    if (part.degree() <= degree) spanning.push_back(part);

  // Admissible monomials over the common-neighbor set, lifted back to the
  // ambient generator indexing by name.
  const GenSet y = d.common_neighbors;
  if (!y.empty()) {
    const CommutationGraph sub = t.graph().induced(y);
    const std::vector<int> members = y.to_vector();
    auto local_of = [&](int ambient) {
      return static_cast<int>(
          std::lower_bound(members.begin(), members.end(), ambient) -
          members.begin());
    };
    std::vector<int> local_desc;
    for (int gidx : t.order().letters_descending())
      if (y.contains(gidx)) local_desc.push_back(local_of(gidx));
    const GeneratorOrder sub_o = GeneratorOrder::descending(local_desc);
    std::function<LieMonomial(const LieMonomial&)> lift =
        [&](const LieMonomial& m) -> LieMonomial {
      if (m.is_leaf()) return LieMonomial::leaf(y.nth(m.generator()));
      return LieMonomial::pair(lift(m.left()), lift(m.right()));
    };
    for (const LieMonomial& m : pcls_basis_flat(sub_o, sub, degree))
      spanning.push_back(
          LieElement::monomial(t.order(), ElementForm::nf, lift(m)));
  }

  QMatrix rows(spanning.size(), domain.size());
  for (std::size_t r = 0; r < spanning.size(); ++r)
    spanning[r].for_each_term([&](const LieMonomial& mono, const Scalar& c) {
      rows.at(r, domain_index.at(mono.word())) = c;
    });
  return from_rows(t, degree, domain, std::move(rows));
}

bool kernels_equal(const KernelBasis& a, const KernelBasis& b) {
  if (a.degree_bound != b.degree_bound)
    throw Error("kernels_equal: degree bounds differ");
  if (a.order != b.order || a.columns != b.columns)
    throw Error("kernels_equal: column labelings differ");
  return a.echelon == b.echelon;
}

CliquePolynomial clique_polynomial(const CommutationGraph& g) {
  CliquePolynomial p{{Integer(1)}};
  std::function<void(GenSet, int)> rec = [&](GenSet candidates, int size) {
    for (int v : candidates.to_vector()) {
      const int k = size + 1;
      if (static_cast<int>(p.coefficients.size()) <= k)
        p.coefficients.resize(static_cast<std::size_t>(k) + 1, Integer(0));
      p.coefficients[static_cast<std::size_t>(k)] += (k % 2 == 0) ? 1 : -1;
      GenSet next = candidates & g.neighbors(v);
      for (int w : next.to_vector())
        if (w <= v) next.remove(w);
      rec(next, k);
    }
  };
  rec(g.vertices(), 0);
  return p;
}

bool dimension_check(const CommutationGraph& g, const GeneratorOrder& o,
                     int nmax) {
  if (nmax < 1) throw Error("dimension_check: nmax must be positive");
  const auto basis = enumerate_pcls(o, g, nmax);

  // prod (1 - t^n)^{l_n} truncated past t^nmax.
  std::vector<Integer> series(static_cast<std::size_t>(nmax) + 1, Integer(0));
  series[0] = 1;
  for (int n = 1; n <= nmax; ++n) {
    const int l = static_cast<int>(basis[static_cast<std::size_t>(n - 1)].size());
    for (int rep = 0; rep < l; ++rep) {
      for (int k = nmax; k >= n; --k)
        series[static_cast<std::size_t>(k)] -=
            series[static_cast<std::size_t>(k - n)];
    }
  }

  const CliquePolynomial cp = clique_polynomial(g);
  for (int k = 0; k <= nmax; ++k) {
    const Integer want =
        k < static_cast<int>(cp.coefficients.size())
            ? cp.coefficients[static_cast<std::size_t>(k)]
            : Integer(0);
    if (series[static_cast<std::size_t>(k)] != want) return false;
  }
  return true;
}

}  // namespace pcla
