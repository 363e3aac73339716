#ifndef THETA_VERIFY_HPP
#define THETA_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace theta {

struct SuiteResult {
  std::string name;
  long cases = 0;
  long failures = 0;
  double millis = 0.0;
  std::vector<std::string> notes;  // first few failure descriptions

  bool passed() const { return failures == 0; }
};

struct VerifyOptions {
  uint64_t seed = 0;
  bool full = false;  // full scale: n <= 5, word length <= 6, q in {2,3,5}
};

// Runs every property suite deterministically; equal options give equal
// results (and byte-identical serialized reports).
std::vector<SuiteResult> run_all_suites(const VerifyOptions& opts);

// Individual suites, exposed for the acceptance harness. Each runs at the
// scale implied by opts and returns its result.
SuiteResult suite_canonical_form(const VerifyOptions& opts);
SuiteResult suite_specialize_homomorphism(const VerifyOptions& opts);
SuiteResult suite_charpoly_conjugation(const VerifyOptions& opts);
SuiteResult suite_divide_roundtrip(const VerifyOptions& opts);
SuiteResult suite_symmetrize_fixedness(const VerifyOptions& opts);
SuiteResult suite_rallis_formula(const VerifyOptions& opts);
SuiteResult suite_rallis_adjointness(const VerifyOptions& opts);
SuiteResult suite_rallis_equivariance(const VerifyOptions& opts);
SuiteResult suite_duality_involution(const VerifyOptions& opts);
SuiteResult suite_point_composition(const VerifyOptions& opts);
SuiteResult suite_surjectivity_witness(const VerifyOptions& opts);
SuiteResult suite_preimage_roundtrip(const VerifyOptions& opts);
SuiteResult suite_support_inductive(const VerifyOptions& opts);
SuiteResult suite_support_injectivity(const VerifyOptions& opts);
SuiteResult suite_support_rallis_consistency(const VerifyOptions& opts);
SuiteResult suite_mod_ell_collapse(const VerifyOptions& opts);
SuiteResult suite_tame_relation(const VerifyOptions& opts);
SuiteResult suite_word_conjugation(const VerifyOptions& opts);
SuiteResult suite_factorization_pullback(const VerifyOptions& opts);
SuiteResult suite_satake_crosscheck(const VerifyOptions& opts);
SuiteResult suite_strata_census(const VerifyOptions& opts);
SuiteResult suite_strata_transitivity(const VerifyOptions& opts);
SuiteResult suite_serialization_roundtrip(const VerifyOptions& opts);

}  // namespace theta

#endif
