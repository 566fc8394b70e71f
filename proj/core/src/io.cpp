#include "nlie/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace nlie {

NLieAlgebra parse_algebra(const std::string& json_text, std::optional<FieldSpec> fallback_field) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("top level must be an object");
  if (!j.contains("arity") || !j["arity"].is_number_integer())
    throw ParseError("missing integer field \"arity\"");
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw ParseError("missing integer field \"dim\"");
  NLieAlgebra a;
  a.arity = j["arity"].get<int>();
  a.dim = j["dim"].get<int>();
  if (a.arity < 2) throw ParseError("arity must be >= 2");
  if (a.dim < 0) throw ParseError("dim must be >= 0");
  if (j.contains("field")) {
    if (!j["field"].is_string()) throw ParseError("\"field\" must be a string");
    try {
      a.field = FieldSpec::parse(j["field"].get<std::string>());
    } catch (const FieldError& e) {
      throw ParseError(e.what());
    }
  } else if (fallback_field) {
    a.field = *fallback_field;
  } else {
    throw ParseError("file declares no \"field\" and no default is configured");
  }
  if (j.contains("brackets")) {
    if (!j["brackets"].is_array()) throw ParseError("\"brackets\" must be an array");
    std::set<Tuple> seen;
    size_t entry_no = 0;
    for (const auto& row : j["brackets"]) {
      ++entry_no;
      auto where = [&] { return "brackets[" + std::to_string(entry_no - 1) + "]"; };
      if (!row.is_object() || !row.contains("args") || !row.contains("value"))
        throw ParseError(where() + " must be an object with \"args\" and \"value\"");
      Tuple args;
      for (const auto& x : row["args"]) {
        if (!x.is_number_integer()) throw ParseError(where() + ".args must hold integers");
        args.push_back(x.get<int>());
      }
      if (static_cast<int>(args.size()) != a.arity)
        throw ParseError(where() + ".args must have exactly arity entries");
      if (!is_strictly_increasing(args))
        throw ParseError(where() + ".args must be strictly increasing");
      if (args.front() < 1 || args.back() > a.dim)
        throw ParseError(where() + ".args indices must lie in [1, dim]");
      if (!seen.insert(args).second)
        throw ParseError(where() + " duplicates args " + tuple_to_string(args));
      if (!row["value"].is_object()) throw ParseError(where() + ".value must be an object");
      Vec v = zero_vec(a.field, a.dim);
      for (const auto& [key, sval] : row["value"].items()) {
        int coord = 0;
        try {
          coord = std::stoi(key);
        } catch (...) {
          throw ParseError(where() + ".value key \"" + key + "\" is not a coordinate index");
        }
        if (coord < 1 || coord > a.dim)
          throw ParseError(where() + ".value key " + key + " out of range");
        if (!sval.is_string()) throw ParseError(where() + ".value entries must be scalar strings");
        try {
          v[coord - 1] = Scalar::parse(a.field, sval.get<std::string>());
        } catch (const FieldError& e) {
          throw ParseError(where() + ".value[" + key + "]: " + e.what());
        }
      }
      if (!is_zero_vec(v)) a.set_bracket(args, v);
    }
  }
  a.validate();
  return a;
}

std::string emit_algebra(const NLieAlgebra& a) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"arity\": " << a.arity << ",\n";
  out << "  \"dim\": " << a.dim << ",\n";
  out << "  \"field\": \"" << a.field.to_string() << "\",\n";
  out << "  \"brackets\": [";
  bool first = true;
  for (const auto& [key, value] : a.brackets) {
    if (!first) out << ",";
    first = false;
    out << "\n    { \"args\": [";
    for (size_t i = 0; i < key.size(); ++i) {
      if (i) out << ", ";
      out << key[i];
    }
    out << "], \"value\": { ";
    bool fc = true;
    for (int i = 0; i < a.dim; ++i) {
      if (value[i].is_zero()) continue;
      if (!fc) out << ", ";
      fc = false;
      out << "\"" << (i + 1) << "\": \"" << value[i].to_string() << "\"";
    }
    out << " } }";
  }
  if (!first) out << "\n  ";
  out << "]\n";
  out << "}\n";
  return out.str();
}

NLieAlgebra read_algebra_file(const std::string& path, std::optional<FieldSpec> fallback_field) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra(buf.str(), fallback_field);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw NLieError("cannot write file: " + path);
  out << text;
}

std::string algebra_digest(const NLieAlgebra& a) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : emit_algebra(a)) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

NLieAlgebra reinterpret_field(const NLieAlgebra& a, const FieldSpec& target) {
  if (a.field == target) return a;
  NLieAlgebra out = abelian_algebra(a.arity, a.dim, target);
  out.basis_labels = a.basis_labels;
  for (const auto& [key, value] : a.brackets) {
    Vec v = zero_vec(target, a.dim);
    for (int i = 0; i < a.dim; ++i) {
      if (value[i].is_zero()) continue;
      if (!value[i].is_integral())
        throw FieldError("cannot reinterpret a non-integral coefficient over " + target.to_string());
      if (target.is_prime_field()) {
        v[i] = Scalar::from_residue(target, value[i].reduce_mod(target.p()));
      } else {
        // GF(p) residue lifted to the integer representative
        v[i] = Scalar::from_int(target, static_cast<long>(value[i].residue()));
      }
    }
    if (!is_zero_vec(v)) out.set_bracket(key, v);
  }
  return out;
}

}  // namespace nlie
