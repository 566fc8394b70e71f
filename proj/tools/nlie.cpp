// Command-line surface for the n-Lie structure-constant toolkit: file
// verification, structural info, classification, isomorphism checks, catalog
// emission and the randomized completeness sampler.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nlie/classifier.hpp"
#include "nlie/invariants.hpp"
#include "nlie/io.hpp"
#include "nlie/sampler.hpp"

using nlie::FieldSpec;
using nlie::NLieAlgebra;
using ojson = nlohmann::ordered_json;

namespace {

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 t0)
        .count();
  }
};

std::optional<FieldSpec> env_default_field() {
  const char* env = std::getenv("NLIE_DEFAULT_FIELD");
  if (!env || !*env) return std::nullopt;
  return FieldSpec::parse(env);
}

NLieAlgebra load(const std::string& path, const std::string& field_flag) {
  std::optional<FieldSpec> fallback = env_default_field();
  if (!field_flag.empty()) fallback = FieldSpec::parse(field_flag);
  NLieAlgebra a = nlie::read_algebra_file(path, fallback);
  if (!field_flag.empty()) {
    FieldSpec want = FieldSpec::parse(field_flag);
    if (!(a.field == want)) a = nlie::reinterpret_field(a, want);  // integral tables only
  }
  return a;
}

ojson matrix_json(const nlie::Mat& m) {
  ojson rows = ojson::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    ojson row = ojson::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
    rows.push_back(row);
  }
  return rows;
}

ojson fingerprint_json(const nlie::Fingerprint& fp) {
  ojson j;
  j["arity"] = fp.arity;
  j["dim"] = fp.dim;
  j["dim_derived"] = fp.dim_derived;
  j["dim_center"] = fp.dim_center;
  j["dim_derived_cap_center"] = fp.dim_derived_cap_center;
  j["class"] = fp.nil.to_string();
  ojson profs = ojson::array();
  for (const auto& [p, prof] : fp.profiles) {
    ojson pj;
    pj["mod"] = p;
    ojson counts = ojson::object();
    for (const auto& [r, c] : prof) counts[std::to_string(r)] = c;
    pj["ranks"] = counts;
    profs.push_back(pj);
  }
  j["ad_rank_profiles"] = profs;
  return j;
}

void deliver(const ojson& report, const std::string& out_path) {
  std::string text = report.dump(2) + "\n";
  if (out_path.empty())
    std::cout << text;
  else
    nlie::write_file(out_path, text);
}

std::string g_command_echo;

ojson base_report(const std::string& command, const NLieAlgebra* a) {
  ojson j;
  j["command"] = command;
  j["command_line"] = g_command_echo;
  if (a) j["input_digest"] = nlie::algebra_digest(*a);
  return j;
}

int classify_exit_code(const nlie::ClassifyError& e) {
  return e.kind == nlie::ClassifyFail::NormalizationFailure ? 3 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 0; i < argc; ++i) {
    if (i) g_command_echo += " ";
    g_command_echo += argv[i];
  }
  CLI::App app{"exact structure-constant toolkit for nilpotent n-Lie algebras of class two"};
  app.require_subcommand(1);
  app.fallthrough();  // global --field/--out may follow the subcommand

  std::string field_flag, out_path;
  app.add_option("--field", field_flag, "field override (Q or GF(p)); integral tables only");
  app.add_option("--out", out_path, "write the JSON report (or emitted file) here");

  auto* c_verify = app.add_subcommand("verify", "check the alternating table and the Filippov identity");
  std::string verify_file;
  c_verify->add_option("file", verify_file)->required();

  auto* c_info = app.add_subcommand("info", "derived/central series, nilpotency class, fingerprint");
  std::string info_file;
  c_info->add_option("file", info_file)->required();

  auto* c_classify = app.add_subcommand("classify", "catalog label with verified witness and trace");
  std::string classify_file;
  c_classify->add_option("file", classify_file)->required();

  auto* c_iso = app.add_subcommand("iso", "isomorphism check between two tables");
  std::string iso_a, iso_b;
  bool perm_only = false;
  size_t budget = 1000000;
  c_iso->add_option("fileA", iso_a)->required();
  c_iso->add_option("fileB", iso_b)->required();
  c_iso->add_flag("--perm-only", perm_only, "restrict to signed permutation witnesses");
  c_iso->add_option("--budget", budget, "candidate budget for searches");

  auto* c_catalog = app.add_subcommand("catalog", "emit catalog entries or list them");
  std::vector<std::string> catalog_args;
  bool catalog_list = false;
  int catalog_arity = 3;
  std::string reading;
  c_catalog->add_option("args", catalog_args, "label, or: list <n> <d>");
  c_catalog->add_flag("--list", catalog_list, "list labels for n d");
  c_catalog->add_option("--arity", catalog_arity, "arity for abelian labels (default 3)");
  c_catalog->add_option("--reading", reading, "L7(3) reading: A or B");

  auto* c_sample = app.add_subcommand("sample", "seeded class-two central-extension audit");
  int sample_n = 3, sample_d = 8;
  size_t sample_count = 100;
  uint64_t sample_seed = 0;
  c_sample->add_option("n", sample_n)->required();
  c_sample->add_option("d", sample_d)->required();
  c_sample->add_option("--count", sample_count, "number of accepted samples");
  c_sample->add_option("--seed", sample_seed, "PRNG seed");

  CLI11_PARSE(app, argc, argv);
  Timer timer;

  try {
    if (*c_verify) {
      NLieAlgebra a = load(verify_file, field_flag);
      bool alt = nlie::check_alternating(a);
      nlie::FilippovResult fr = nlie::check_filippov(a);
      ojson rep = base_report("verify", &a);
      ojson result;
      result["alternating"] = alt;
      result["filippov"] = fr.ok;
      if (!fr.ok) {
        result["violation"]["x"] = fr.x;
        result["violation"]["y"] = fr.y;
      }
      rep["result"] = result;
      rep["timing_ms"] = timer.ms();
      std::cout << (alt && fr.ok ? "PASS" : "FAIL") << ": alternating=" << (alt ? "yes" : "no")
                << " filippov=" << (fr.ok ? "yes" : "no");
      if (!fr.ok)
        std::cout << " violation at x=" << nlie::tuple_to_string(fr.x)
                  << " y=" << nlie::tuple_to_string(fr.y);
      std::cout << "\n";
      deliver(rep, out_path);
      return (alt && fr.ok) ? 0 : 2;
    }

    if (*c_info) {
      NLieAlgebra a = load(info_file, field_flag);
      nlie::SeriesReport sr = nlie::series_report(a);
      nlie::Fingerprint fp = nlie::fingerprint(a);
      ojson rep = base_report("info", &a);
      ojson result;
      ojson derived = ojson::array(), upper = ojson::array();
      for (const auto& s : sr.derived) derived.push_back(s.dim());
      for (const auto& s : sr.upper) upper.push_back(s.dim());
      result["derived_series_dims"] = derived;
      result["upper_central_series_dims"] = upper;
      result["class"] = sr.nil.to_string();
      result["fingerprint"] = fingerprint_json(fp);
      rep["result"] = result;
      rep["timing_ms"] = timer.ms();
      std::cout << "dim A^2 = " << fp.dim_derived << ", dim Z = " << fp.dim_center << ", "
                << sr.nil.to_string() << "\n";
      deliver(rep, out_path);
      return 0;
    }

    if (*c_classify) {
      NLieAlgebra a = load(classify_file, field_flag);
      ojson rep = base_report("classify", &a);
      try {
        nlie::ClassificationResult res = nlie::classify(a);
        ojson result;
        result["label"] = res.label.to_string();
        result["witness"] = matrix_json(res.witness);
        result["trace"] = res.trace;
        rep["result"] = result;
        rep["timing_ms"] = timer.ms();
        std::cout << "label: " << res.label.to_string() << "\n";
        deliver(rep, out_path);
        return 0;
      } catch (const nlie::ClassifyError& e) {
        ojson result;
        result["error"] = e.what();
        result["trace"] = e.trace;
        rep["result"] = result;
        rep["timing_ms"] = timer.ms();
        std::cerr << "classification failed: " << e.what() << "\n";
        deliver(rep, out_path);
        return classify_exit_code(e);
      }
    }

    if (*c_iso) {
      NLieAlgebra a = load(iso_a, field_flag);
      NLieAlgebra b = load(iso_b, field_flag);
      ojson rep = base_report("iso", &a);
      rep["input_digest_b"] = nlie::algebra_digest(b);
      ojson result;
      result["isomorphic"] = "unknown";
      result["witness"] = nullptr;
      size_t checked = 0;
      auto set_found = [&](const nlie::Mat& w) {
        result["isomorphic"] = true;
        result["witness"] = matrix_json(w);
      };
      nlie::Fingerprint fa = nlie::fingerprint(a), fb = nlie::fingerprint(b);
      if (!(fa == fb)) {
        result["isomorphic"] = false;
        result["reason"] = "fingerprints differ";
      } else {
        nlie::PermSearchResult pr = nlie::signed_perm_iso(a, b, budget);
        checked += pr.tested;
        if (pr.witness) {
          set_found(*pr.witness);
        } else if (!perm_only) {
          nlie::GradedResult gr = nlie::graded_iso_search(a, b, budget);
          checked += gr.checked;
          if (gr.status == nlie::GradedStatus::found)
            set_found(*gr.witness);
          else if (gr.status == nlie::GradedStatus::none) {
            result["isomorphic"] = false;
            result["reason"] = gr.note;
          }
        }
      }
      result["checked"] = checked;
      rep["result"] = result;
      rep["timing_ms"] = timer.ms();
      std::cout << "isomorphic: " << result["isomorphic"].dump() << "\n";
      deliver(rep, out_path);
      return 0;
    }

    if (*c_catalog) {
      bool list_mode = catalog_list;
      std::vector<std::string> args = catalog_args;
      if (!args.empty() && args[0] == "list") {
        list_mode = true;
        args.erase(args.begin());
      }
      if (list_mode) {
        if (args.size() != 2) {
          std::cerr << "usage: nlie catalog list <n> <d>\n";
          return 2;
        }
        int n = std::stoi(args[0]), d = std::stoi(args[1]);
        nlie::CatalogList cl = nlie::list_for(n, d);
        ojson rep = base_report("catalog list", nullptr);
        ojson labels = ojson::array();
        for (const auto& l : cl.labels) {
          labels.push_back(l.to_string());
          std::cout << l.to_string() << "\n";
        }
        std::cout << (cl.complete ? "(complete class-two list)"
                                  : "(known entries only; possibly incomplete)")
                  << "\n";
        ojson result;
        result["labels"] = labels;
        result["complete"] = cl.complete;
        rep["result"] = result;
        rep["timing_ms"] = timer.ms();
        if (!out_path.empty()) deliver(rep, out_path);
        return 0;
      }
      if (args.size() != 1) {
        std::cerr << "usage: nlie catalog <label> | nlie catalog list <n> <d>\n";
        return 2;
      }
      nlie::Label label = nlie::Label::parse(args[0], catalog_arity);
      if (label.kind == nlie::Label::Kind::L7 && label.i == 3) {
        if (reading == "A")
          label.l7_reading = 1;
        else if (reading == "B")
          label.l7_reading = 2;
      }
      FieldSpec f = field_flag.empty() ? env_default_field().value_or(FieldSpec::Q())
                                       : FieldSpec::parse(field_flag);
      NLieAlgebra a = nlie::build(label, f);
      std::string text = nlie::emit_algebra(a);
      if (out_path.empty())
        std::cout << text;
      else
        nlie::write_file(out_path, text);
      return 0;
    }

    if (*c_sample) {
      nlie::SamplerOptions opts;
      opts.n = sample_n;
      opts.d = sample_d;
      opts.field = field_flag.empty() ? env_default_field().value_or(FieldSpec::GF(2))
                                      : FieldSpec::parse(field_flag);
      opts.count = sample_count;
      opts.seed = sample_seed;
      nlie::SampleRun run = nlie::run_sampler(opts);
      ojson rep = base_report("sample", nullptr);
      ojson result;
      result["n"] = opts.n;
      result["d"] = opts.d;
      result["field"] = opts.field.to_string();
      result["count"] = run.outcomes.size();
      result["attempts"] = run.attempts;
      ojson hist = ojson::object();
      for (const auto& [k, v] : run.histogram) hist[k] = v;
      result["histogram"] = hist;
      result["failures"] = run.failures;
      result["certified_outside_list"] = run.certified_outside;
      rep["result"] = result;
      rep["seed"] = opts.seed;
      rep["timing_ms"] = timer.ms();
      std::cout << "samples: " << run.outcomes.size() << ", failures: " << run.failures
                << " (certified outside the known list: " << run.certified_outside << ")\n";
      for (const auto& [k, v] : run.histogram) std::cout << "  " << k << ": " << v << "\n";
      if (!out_path.empty()) {
        std::filesystem::create_directories(out_path);
        size_t idx = 0;
        for (const auto& o : run.outcomes) {
          if (!o.label) {
            nlie::write_file(out_path + "/failure_" + std::to_string(idx) + ".json",
                             nlie::emit_algebra(o.algebra));
          }
          ++idx;
        }
        nlie::write_file(out_path + "/report.json", rep.dump(2) + "\n");
      } else {
        deliver(rep, "");
      }
      return 0;
    }
  } catch (const nlie::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const nlie::ClassifyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return classify_exit_code(e);
  } catch (const nlie::InvalidParametersError& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
    return 2;
  } catch (const nlie::DisputedEntryError& e) {
    std::cerr << "disputed entry: " << e.what() << "\n";
    return 2;
  } catch (const nlie::FieldError& e) {
    std::cerr << "field error: " << e.what() << "\n";
    return 2;
  } catch (const nlie::NLieError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
