#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pcla/oracle.hpp"
#include "pcla/reduction.hpp"

namespace pcla {

/// Deterministic RNG for verification runs.  Helpers below avoid
/// distribution classes so byte-identical streams come out on every
/// platform.
using VerifyRng = std::mt19937_64;

inline std::size_t pick_index(VerifyRng& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

/// Nonzero integer in [-bound, bound].
Scalar random_coefficient(VerifyRng& rng, int bound = 5);

/// Random reduced element: up to max_terms admissible monomials of degree
/// <= max_degree with small nonzero integer coefficients.  May be zero only
/// when allow_zero is set.
LieElement random_nf_element(const ReductionTable& t, VerifyRng& rng,
                             int max_degree, int max_terms,
                             bool allow_zero = false);

/// Random nonzero homogeneous reduced element of the given total degree.
/// Returns a zero element when the graded piece is empty.
LieElement random_homogeneous_element(const ReductionTable& t, VerifyRng& rng,
                                      int degree, int max_terms);

struct SuiteResult {
  std::string name;
  int checks = 0;
  int failures = 0;
  std::vector<std::string> messages;

  bool ok() const { return failures == 0; }
  void record(bool pass, const std::string& what) {
    ++checks;
    if (!pass) {
      ++failures;
      if (messages.size() < 25) messages.push_back(what);
    }
  }
};

/// Anticommutativity, bilinearity and the Jacobi identity on randomized
/// reduced triples within the table bound; exact equality throughout.
SuiteResult run_identities_suite(const ReductionTable& t, std::uint64_t seed,
                                 int samples);

/// Graded-dimension certificate on the table's graph up to its bound.
SuiteResult run_dimensions_suite(const ReductionTable& t);

/// Brute-force centralizer kernels against structural descriptions, plus
/// membership consistency, on randomized elements.
SuiteResult run_centralizers_suite(const ReductionTable& t, std::uint64_t seed,
                                   int samples);

}  // namespace pcla
