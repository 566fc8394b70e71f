#include "nlie/sampler.hpp"

#include "nlie/forms.hpp"
#include "nlie/rng.hpp"

namespace nlie {

SampleRun run_sampler(const SamplerOptions& opts) {
  SampleRun run;
  SplitMix64 rng(opts.seed);
  CatalogList quotient_list = list_for(opts.n, opts.d - 1);
  std::vector<Label> sources;
  for (const auto& l : quotient_list.labels) {
    if (l.kind == Label::Kind::L7 || l.kind == Label::Kind::L5_2Lie) continue;
    sources.push_back(l);
  }
  if (sources.empty()) throw NLieError("sampler: no quotient entries for this (n, d)");

  CatalogList target_list = list_for(opts.n, opts.d);
  std::vector<Fingerprint> target_fps;
  std::vector<std::optional<std::map<int, long>>> target_pencils;
  for (const auto& l : target_list.labels) {
    NLieAlgebra t = build(l, opts.field);
    target_fps.push_back(fingerprint(t));
    target_pencils.push_back(pencil_rank_profile(t));
  }

  const auto tuples = increasing_tuples(opts.d - 1, opts.n);
  const size_t max_attempts = opts.count * 200 + 1000;
  while (run.outcomes.size() < opts.count && run.attempts < max_attempts) {
    ++run.attempts;
    const Label& src = sources[rng.below(sources.size())];
    NLieAlgebra q = build(src, opts.field);
    // class two forces the cocycle to vanish on tuples touching the derived
    // coordinates of q; drawing those entries as zero samples exactly the
    // conditional distribution of "uniform cocycle given class two"
    std::vector<bool> derived_coord(q.dim + 1, false);
    for (const auto& [key, value] : q.brackets)
      for (int i = 0; i < q.dim; ++i)
        if (!value[i].is_zero()) derived_coord[i + 1] = true;
    std::map<Tuple, Scalar> cocycle;
    for (const auto& t : tuples) {
      bool touches = false;
      for (int i : t) touches = touches || derived_coord[i];
      if (touches) continue;
      Scalar c = random_scalar(opts.field, rng);
      if (!c.is_zero()) cocycle[t] = c;
    }
    NLieAlgebra ext = central_extension(q, cocycle);
    if (!is_class_two(ext)) continue;

    SampleOutcome out;
    out.algebra = ext;
    out.quotient_label = src;
    try {
      ClassificationResult res = classify(ext);
      WitnessCheck check = verify_witness(ext, build(res.label, opts.field), res.witness);
      if (!check.ok) throw NLieError("sampler: classifier returned an unverified witness");
      out.label = res.label;
      run.histogram[res.label.to_string()]++;
    } catch (const ClassifyError& e) {
      out.normalization_failure = (e.kind == ClassifyFail::NormalizationFailure);
      out.detail = e.what();
      run.histogram["FAIL"]++;
      ++run.failures;
      Fingerprint fp = fingerprint(ext);
      auto pencil = pencil_rank_profile(ext);
      bool separated = true;
      for (size_t i = 0; i < target_fps.size(); ++i) {
        bool fp_differs = !(fp == target_fps[i]);
        bool pencil_differs =
            pencil && target_pencils[i] && !(*pencil == *target_pencils[i]);
        separated = separated && (fp_differs || pencil_differs);
      }
      out.separated_from_list = separated;
      if (separated) ++run.certified_outside;
    }
    run.outcomes.push_back(std::move(out));
  }
  return run;
}

}  // namespace nlie
