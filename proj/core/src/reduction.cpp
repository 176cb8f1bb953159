#include "pcla/reduction.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace pcla {
namespace {

// Multidegrees are used as grading keys; plain vectors give map ordering.
using DegKey = std::vector<int>;

std::string degkey_string(const DegKey& k) {
  std::string s = "(";
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(k[i]);
  }
  return s + ")";
}

// All count vectors with the given total over n slots.
void for_each_multidegree(int n, int total,
                          const std::function<void(const DegKey&)>& f) {
  DegKey k(static_cast<std::size_t>(n), 0);
  // Lexicographic odometer over compositions of `total`.
  std::function<void(int, int)> rec = [&](int slot, int left) {
    if (slot == n - 1) {
      k[static_cast<std::size_t>(slot)] = left;
      f(k);
      return;
    }
    for (int c = 0; c <= left; ++c) {
      k[static_cast<std::size_t>(slot)] = c;
      rec(slot + 1, left - c);
    }
  };
  if (n > 0) rec(0, total);
}

}  // namespace

ReductionTable ReductionTable::build(const CommutationGraph& g,
                                     const GeneratorOrder& o, int dmax) {
  if (dmax < 2) throw Error("build_reduction: degree bound must be >= 2");
  if (o.size() != g.size())
    throw Error("generator order does not match the graph");

  ReductionTable table(g, o, dmax);
  FreeBracketCache cache;
  const int n = g.size();

  // LS monomials per multidegree, descending by word within each piece.
  std::map<DegKey, std::vector<LieMonomial>> ls_pieces;
  for (int deg = 2; deg <= dmax; ++deg) {
    for (const Word& w : enumerate_lsa(o, deg)) {
      LieMonomial m = bracket_word(o, w);
      ls_pieces[multidegree_of_word(w, n).counts].push_back(std::move(m));
    }
  }

  // Ideal graded pieces, kept as reduced bases of coordinate rows together
  // with the matching elements (needed to bracket upward).
  std::map<DegKey, std::vector<LieElement>> ideal_basis;

  auto coordinates = [&](const LieElement& e,
                         const std::map<Word, std::size_t>& col_index,
                         std::size_t width) {
    std::vector<Integer> row(width, Integer(0));
    e.for_each_term([&](const LieMonomial& m, const Scalar& c) {
      const auto it = col_index.find(m.word());
      if (it == col_index.end())
        throw ConsistencyError("term outside the graded LS piece");
      if (!is_integral(c))
        throw ConsistencyError("non-integral ideal coordinate");
      row[it->second] = c.get_num();
    });
    return row;
  };

  for (int deg = 2; deg <= dmax; ++deg) {
    for_each_multidegree(n, deg, [&](const DegKey& key) {
      const auto piece_it = ls_pieces.find(key);
      const std::vector<LieMonomial> no_monomials;
      const std::vector<LieMonomial>& cols =
          piece_it == ls_pieces.end() ? no_monomials : piece_it->second;

      // Spanning vectors: degree-2 pieces start from the edge relators,
      // higher pieces bracket every generator against the piece one letter
      // down.  Closure under generator brackets spans the whole ideal.
      std::vector<LieElement> spanning;
      if (deg == 2) {
        for (const auto& [a, b] : g.edges()) {
          DegKey k(static_cast<std::size_t>(n), 0);
          ++k[static_cast<std::size_t>(a)];
          ++k[static_cast<std::size_t>(b)];
          if (k != key) continue;
          spanning.push_back(free_bracket(o, LieMonomial::leaf(a),
                                          LieMonomial::leaf(b), cache));
        }
      } else {
        for (int x = 0; x < n; ++x) {
          if (key[static_cast<std::size_t>(x)] == 0) continue;
          DegKey down = key;
          --down[static_cast<std::size_t>(x)];
          const auto below = ideal_basis.find(down);
          if (below == ideal_basis.end()) continue;
          const LieElement leaf =
              LieElement::monomial(o, ElementForm::ls, LieMonomial::leaf(x));
          for (const LieElement& v : below->second) {
            LieElement w = free_bracket_elements(leaf, v, cache);
            if (!w.is_zero()) spanning.push_back(std::move(w));
          }
        }
      }

      if (spanning.empty() && cols.empty()) return;

      std::map<Word, std::size_t> col_index;
      for (std::size_t cidx = 0; cidx < cols.size(); ++cidx)
        col_index.emplace(cols[cidx].word(), cidx);

      IntEchelon echelon(cols.size());
      for (const LieElement& v : spanning)
        echelon.insert(coordinates(v, col_index, cols.size()));

      // The pivots must be exactly the non-admissible monomials of this
      // piece; anything else falsifies the basis claim the whole quotient
      // construction rests on.
      std::vector<std::size_t> expected;
      for (std::size_t cidx = 0; cidx < cols.size(); ++cidx)
        if (!is_pcls(o, g, cols[cidx])) expected.push_back(cidx);
      if (echelon.pivots() != expected)
        throw ConsistencyError("graded piece dimension mismatch at multidegree " +
                               degkey_string(key));

      if (echelon.rank() == 0) return;

      const QMatrix rows = echelon.reduced();
      std::vector<LieElement> basis_elements;
      basis_elements.reserve(rows.rows());
      const std::vector<std::size_t> pivots = echelon.pivots();
      for (std::size_t r = 0; r < rows.rows(); ++r) {
        LieElement ideal_elem(o, ElementForm::ls);
        LieElement image(o, ElementForm::nf);
        for (std::size_t c = 0; c < cols.size(); ++c) {
          const Scalar& entry = rows.at(r, c);
          if (is_zero(entry)) continue;
          ideal_elem.add_term(cols[c], entry);
          if (c != pivots[r]) {
            if (!is_integral(entry))
              throw ConsistencyError("non-integral rewriting coefficient");
            image.add_term(cols[c], -entry);
          }
        }
        table.entries_.emplace(cols[pivots[r]].word(), std::move(image));
        basis_elements.push_back(std::move(ideal_elem));
      }
      ideal_basis.emplace(key, std::move(basis_elements));
    });
  }

  return table;
}

LieElement normal_form(const ReductionTable& t, const LieElement& e) {
  if (e.order() != t.order())
    throw Error("element order does not match the reduction table");
  LieElement out(t.order(), ElementForm::nf);
  e.for_each_term([&](const LieMonomial& m, const Scalar& c) {
    if (m.degree() > t.degree_bound())
      throw DegreeError("monomial degree exceeds the reduction table bound",
                        m.degree());
    if (const LieElement* image = t.find(m.word()))
      out.add(*image, c);
    else
      out.add_term(m, c);
  });
  return out;
}

LieElement bracket(const ReductionTable& t, const LieElement& g,
                   const LieElement& h, FreeBracketCache& cache) {
  g.require_same_order(h);
  if (g.order() != t.order())
    throw Error("element order does not match the reduction table");
  if (g.degree() + h.degree() > t.degree_bound())
    throw DegreeError("product degree exceeds the reduction table bound",
                      g.degree() + h.degree());
  return normal_form(t, free_bracket_elements(g, h, cache));
}

LieElement bracket(const ReductionTable& t, const LieElement& g,
                   const LieElement& h) {
  FreeBracketCache cache;
  return bracket(t, g, h, cache);
}

}  // namespace pcla
