#pragma once

#include "nlie/catalog.hpp"
#include "nlie/linalg.hpp"

namespace nlie {

enum class ClassifyFail : uint8_t {
  NotClassTwo,
  UnsupportedArity,
  UnsupportedDimension,
  NormalizationFailure,
};

struct ClassifyError : NLieError {
  ClassifyFail kind;
  std::vector<std::string> trace;

  ClassifyError(ClassifyFail k, const std::string& msg, std::vector<std::string> tr = {})
      : NLieError(msg), kind(k), trace(std::move(tr)) {}
};

struct ClassificationResult {
  Label label;
  Mat witness;                      // verify_witness(input, build(label), witness)
  std::vector<std::string> trace;   // case route, central line, base changes
};

/// Decision procedure for nilpotent class-two algebras with n >= 3 and
/// n <= d <= n+5: returns the catalog label together with an exact verified
/// witness, or throws ClassifyError. The route mirrors the quotient-and-
/// normalize case analysis; the structural steps (center split, radical
/// splitting of the induced forms, pivot elimination) are deterministic, so
/// conjugated inputs reclassify identically.
ClassificationResult classify(const NLieAlgebra& a);

/// The (n+4)-dimensional branch: label selected by the invariant pair
/// (dim A^2, dim Z) and confirmed by an exact constructed witness.
Label classify_quotient_n4(const NLieAlgebra& a);

}  // namespace nlie
