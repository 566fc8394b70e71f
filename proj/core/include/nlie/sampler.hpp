#pragma once

#include "nlie/classifier.hpp"
#include "nlie/invariants.hpp"

namespace nlie {

struct SamplerOptions {
  int n = 3;
  int d = 8;
  FieldSpec field = FieldSpec::GF(2);
  size_t count = 100;
  uint64_t seed = 0;
};

struct SampleOutcome {
  NLieAlgebra algebra;
  Label quotient_label;            // the (d-1)-dimensional table that was extended
  std::optional<Label> label;      // classification, when it succeeded
  bool normalization_failure = false;
  bool separated_from_list = false;  // fingerprint differs from every known entry
  std::string detail;
};

struct SampleRun {
  std::vector<SampleOutcome> outcomes;
  std::map<std::string, long> histogram;  // label string -> count, "FAIL" bucketed
  size_t attempts = 0;                    // extensions drawn, including rejected ones
  size_t failures = 0;
  size_t certified_outside = 0;
};

/// Seeded completeness audit: draws random cocycles over random entries of the
/// (d-1)-dimensional class-two list, keeps the class-two extensions, and
/// classifies each one. Failures are cross-checked against the known list by
/// fingerprint separation so that a genuine gap is certified, not guessed.
SampleRun run_sampler(const SamplerOptions& opts);

}  // namespace nlie
