#include "kideal/json_io.hpp"

#include <json.hpp>
#include <utility>

#include "kideal/errors.hpp"

namespace kideal {

using json = nlohmann::ordered_json;

namespace {

// Savers emit with this; goldens depend on the exact rendering.
std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw structural_error(std::string("json parse failed: ") + e.what());
  }
}

const json& field(const json& j, const std::string& key,
                  const std::string& what) {
  if (!j.is_object())
    throw structural_error(what + " must be a json object");
  auto it = j.find(key);
  if (it == j.end())
    throw structural_error(what + " is missing the field '" + key + "'");
  return *it;
}

int int_field(const json& j, const std::string& key, const std::string& what) {
  const json& v = field(j, key, what);
  if (!v.is_number_integer())
    throw structural_error("field '" + key + "' of " + what +
                           " must be an integer");
  return v.get<int>();
}

std::string string_field(const json& j, const std::string& key,
                         const std::string& what) {
  const json& v = field(j, key, what);
  if (!v.is_string())
    throw structural_error("field '" + key + "' of " + what +
                           " must be a string");
  return v.get<std::string>();
}

std::vector<std::vector<int>> table_field(const json& j, const std::string& key,
                                          const std::string& what) {
  const json& v = field(j, key, what);
  if (!v.is_array())
    throw structural_error("field '" + key + "' of " + what +
                           " must be an array of integer rows");
  std::vector<std::vector<int>> out;
  for (const json& row : v) {
    if (!row.is_array())
      throw structural_error("field '" + key + "' of " + what +
                             " must contain only arrays");
    std::vector<int> r;
    for (const json& cell : row) {
      if (!cell.is_number_integer())
        throw structural_error("field '" + key + "' of " + what +
                               " must contain only integers");
      r.push_back(cell.get<int>());
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<int> int_list_field(const json& j, const std::string& key,
                                const std::string& what) {
  const json& v = field(j, key, what);
  if (!v.is_array())
    throw structural_error("field '" + key + "' of " + what +
                           " must be an integer array");
  std::vector<int> out;
  for (const json& cell : v) {
    if (!cell.is_number_integer())
      throw structural_error("field '" + key + "' of " + what +
                             " must contain only integers");
    out.push_back(cell.get<int>());
  }
  return out;
}

json table_json(const std::vector<std::vector<int>>& t) {
  json rows = json::array();
  for (const auto& row : t) rows.push_back(row);
  return rows;
}

json semiring_json(const FiniteSemiring& s) {
  const SemiringData& d = s.data();
  json j;
  j["size"] = d.size;
  j["add"] = table_json(d.add);
  j["mul"] = table_json(d.mul);
  j["zero"] = d.zero;
  j["one"] = d.one;
  j["label"] = d.label;
  j["elements"] = d.element_labels;
  return j;
}

SemiringPtr semiring_from_json(const json& j, const Caps& caps);

SemiringPtr semiring_family_from_json(const json& j, const Caps& caps) {
  std::string family = string_field(j, "family", "the semiring shorthand");
  if (family == "product") {
    const json& factors = field(j, "factors", "the product shorthand");
    if (!factors.is_array() || factors.empty())
      throw structural_error(
          "the product shorthand needs a non-empty 'factors' array");
    std::vector<SemiringPtr> parts;
    for (const json& f : factors) parts.push_back(semiring_from_json(f, caps));
    return std::make_shared<FiniteSemiring>(product_semiring(parts, caps));
  }
  if (family == "matrix") {
    SemiringPtr base =
        semiring_from_json(field(j, "base", "the matrix shorthand"), caps);
    int n = int_field(j, "n", "the matrix shorthand");
    return std::make_shared<FiniteSemiring>(matrix_semiring(base, n, caps));
  }
  int n = j.contains("n") ? int_field(j, "n", "the semiring shorthand") : 0;
  int i = j.contains("i") ? int_field(j, "i", "the semiring shorthand") : 0;
  return std::make_shared<FiniteSemiring>(build_named(family, n, i));
}

SemiringPtr semiring_from_json(const json& j, const Caps& caps) {
  if (j.is_string())
    return std::make_shared<FiniteSemiring>(
        build_named(j.get<std::string>()));
  if (j.is_object() && j.contains("family"))
    return semiring_family_from_json(j, caps);
  SemiringData d;
  d.size = int_field(j, "size", "the semiring");
  d.add = table_field(j, "add", "the semiring");
  d.mul = table_field(j, "mul", "the semiring");
  d.zero = int_field(j, "zero", "the semiring");
  d.one = int_field(j, "one", "the semiring");
  if (j.contains("label")) d.label = string_field(j, "label", "the semiring");
  if (j.contains("elements")) {
    const json& names = field(j, "elements", "the semiring");
    if (!names.is_array())
      throw structural_error("field 'elements' of the semiring must be an "
                             "array of strings");
    for (const json& e : names) d.element_labels.push_back(e.get<std::string>());
  }
  if (d.size > caps.semiring_size)
    throw resource_error("semiring size exceeds the cap");
  return std::make_shared<FiniteSemiring>(FiniteSemiring::validate(std::move(d)));
}

json semimodule_json(const FiniteSemimodule& m) {
  const SemimoduleData& d = m.data();
  json j;
  j["scalars"] = semiring_json(*d.scalars);
  j["size"] = d.size;
  j["add"] = table_json(d.add);
  j["action"] = table_json(d.action);
  j["zero"] = d.zero;
  j["label"] = d.label;
  j["elements"] = d.element_labels;
  return j;
}

ModulePtr semimodule_from_json(const json& j, const Caps& caps) {
  if (j.is_object() && !j.contains("action") &&
      (j.contains("mul") || j.contains("family"))) {
    // A bare semiring stands for its regular module.
    return regular_module(semiring_from_json(j, caps));
  }
  SemimoduleData d;
  d.scalars = semiring_from_json(field(j, "scalars", "the semimodule"), caps);
  d.size = int_field(j, "size", "the semimodule");
  d.add = table_field(j, "add", "the semimodule");
  d.action = table_field(j, "action", "the semimodule");
  d.zero = j.contains("zero") ? int_field(j, "zero", "the semimodule") : 0;
  if (j.contains("label")) d.label = string_field(j, "label", "the semimodule");
  if (j.contains("elements")) {
    const json& names = field(j, "elements", "the semimodule");
    if (!names.is_array())
      throw structural_error("field 'elements' of the semimodule must be an "
                             "array of strings");
    for (const json& e : names) d.element_labels.push_back(e.get<std::string>());
  }
  if (d.size > caps.module_size)
    throw resource_error("semimodule size exceeds the cap");
  return std::make_shared<FiniteSemimodule>(
      FiniteSemimodule::validate(std::move(d)));
}

json mat2_json(const Mat2& m) {
  json j;
  j["a"] = m.a.str();
  j["b"] = m.b.str();
  j["c"] = m.c.str();
  j["d"] = m.d.str();
  return j;
}

Mat2 mat2_from_json(const json& j) {
  Mat2 m;
  m.a = QPlus::parse(string_field(j, "a", "the matrix"));
  m.b = QPlus::parse(string_field(j, "b", "the matrix"));
  m.c = QPlus::parse(string_field(j, "c", "the matrix"));
  m.d = QPlus::parse(string_field(j, "d", "the matrix"));
  return m;
}

json family_json(const IdealFamily& f) {
  json j;
  switch (f.tag) {
    case IdealFamily::Tag::zero:
      j["tag"] = "Zero";
      break;
    case IdealFamily::Tag::e1:
      j["tag"] = "E1";
      break;
    case IdealFamily::Tag::e2:
      j["tag"] = "E2";
      break;
    case IdealFamily::Tag::n:
      j["tag"] = "N";
      j["r"] = f.r.str();
      break;
    case IdealFamily::Tag::n_geq:
      j["tag"] = "NGeq";
      j["r"] = f.r.str();
      break;
    case IdealFamily::Tag::full:
      j["tag"] = "Full";
      break;
  }
  return j;
}

IdealFamily family_from_json(const json& j) {
  std::string tag = string_field(j, "tag", "the family");
  if (tag == "Zero") return zero_family();
  if (tag == "E1") return e1_family();
  if (tag == "E2") return e2_family();
  if (tag == "Full") return full_family();
  if (tag == "N") return n_family(QPlus::parse(string_field(j, "r", "the family")));
  if (tag == "NGeq")
    return n_geq_family(QPlus::parse(string_field(j, "r", "the family")));
  throw structural_error("unknown family tag '" + tag + "'");
}

json map_json(const LinearMap& f) {
  json j;
  j["source"] = semimodule_json(*f.domain);
  j["target"] = semimodule_json(*f.codomain);
  j["table"] = f.image;
  j["label"] = f.label;
  return j;
}

}  // namespace

std::string save_semiring(const FiniteSemiring& s) {
  return dump(semiring_json(s));
}

SemiringPtr load_semiring(const std::string& text, const Caps& caps) {
  return semiring_from_json(parse(text), caps);
}

std::string save_semimodule(const FiniteSemimodule& m) {
  return dump(semimodule_json(m));
}

ModulePtr load_semimodule(const std::string& text, const Caps& caps) {
  return semimodule_from_json(parse(text), caps);
}

std::string save_linear_map(const LinearMap& f) { return dump(map_json(f)); }

LinearMap load_linear_map(const std::string& text, const Caps& caps) {
  json j = parse(text);
  ModulePtr source = semimodule_from_json(field(j, "source", "the map"), caps);
  ModulePtr target = semimodule_from_json(field(j, "target", "the map"), caps);
  std::string label =
      j.contains("label") ? string_field(j, "label", "the map") : "";
  return linear_map(source, target, int_list_field(j, "table", "the map"),
                    label);
}

std::vector<LinearMap> load_sequence(const std::string& text,
                                     const Caps& caps) {
  json j = parse(text);
  const json& modules = field(j, "modules", "the sequence");
  if (!modules.is_array() || modules.empty())
    throw structural_error("the sequence needs a non-empty 'modules' array");
  std::vector<ModulePtr> loaded;
  for (const json& m : modules) loaded.push_back(semimodule_from_json(m, caps));
  const json& maps = field(j, "maps", "the sequence");
  if (!maps.is_array() || maps.empty())
    throw structural_error("the sequence needs a non-empty 'maps' array");
  std::vector<LinearMap> out;
  for (const json& m : maps) {
    int source = int_field(m, "source", "a sequence map");
    int target = int_field(m, "target", "a sequence map");
    if (source < 0 || source >= static_cast<int>(loaded.size()) ||
        target < 0 || target >= static_cast<int>(loaded.size()))
      throw structural_error("a sequence map references a module index "
                             "outside the 'modules' array");
    std::string label =
        m.contains("label") ? string_field(m, "label", "a sequence map") : "";
    out.push_back(linear_map(loaded[source], loaded[target],
                             int_list_field(m, "table", "a sequence map"),
                             label));
  }
  for (std::size_t i = 1; i < out.size(); ++i)
    if (!out[i].domain->same_tables(*out[i - 1].codomain))
      throw structural_error("sequence maps do not compose at junction " +
                             std::to_string(i - 1));
  return out;
}

std::string save_mat2(const Mat2& m) { return dump(mat2_json(m)); }

Mat2 load_mat2(const std::string& text) { return mat2_from_json(parse(text)); }

std::string save_family(const IdealFamily& f) { return dump(family_json(f)); }

IdealFamily load_family(const std::string& text) {
  return family_from_json(parse(text));
}

std::vector<Mat2> load_mat2_generators(const std::string& text) {
  json j = parse(text);
  const json* list = &j;
  if (j.is_object()) list = &field(j, "generators", "the generator file");
  if (!list->is_array() || list->empty())
    throw structural_error("expected a non-empty array of matrices");
  std::vector<Mat2> out;
  for (const json& m : *list) out.push_back(mat2_from_json(m));
  return out;
}

std::vector<std::vector<int>> load_member_chain(const std::string& text) {
  json j = parse(text);
  const json* list = &j;
  if (j.is_object()) list = &field(j, "chain", "the chain file");
  if (!list->is_array() || list->empty())
    throw structural_error("expected a non-empty array of member sets");
  std::vector<std::vector<int>> out;
  for (const json& row : *list) {
    if (!row.is_array())
      throw structural_error("each chain entry must be an array of members");
    std::vector<int> members;
    for (const json& cell : row) {
      if (!cell.is_number_integer())
        throw structural_error("chain members must be integers");
      members.push_back(cell.get<int>());
    }
    out.push_back(std::move(members));
  }
  return out;
}

std::string save_axiom_report(const AxiomReport& r) {
  json j;
  j["passed"] = r.passed;
  json violations = json::array();
  for (const AxiomViolation& v : r.violations) {
    json one;
    one["axiom"] = v.axiom;
    one["witness"] = v.witness;
    violations.push_back(std::move(one));
  }
  j["violations"] = std::move(violations);
  return dump(j);
}

std::string save_lattice_report(const KIdealLattice& lat) {
  json j;
  j["module"] = lat.module->label();
  j["nodes"] = static_cast<int>(lat.nodes.size());
  json members = json::array();
  for (const Subsemimodule& n : lat.nodes) members.push_back(n.members);
  j["member_sets"] = std::move(members);
  json edges = json::array();
  for (const auto& e : lat.edges)
    edges.push_back(json::array({e.first, e.second}));
  j["edges"] = std::move(edges);
  j["height"] = lat.height;
  j["width"] = lat.width;
  LatticeMetrics metrics = lattice_metrics(lat);
  j["longest_chain"] = metrics.longest_chain;
  return dump(j);
}

std::string save_summand_scan(const SummandScan& scan) {
  json j;
  j["module"] = scan.lattice.module->label();
  j["holds"] = scan.holds;
  j["finite_height"] = scan.finite_height;
  j["height"] = scan.lattice.height;
  json nodes = json::array();
  for (std::size_t i = 0; i < scan.lattice.nodes.size(); ++i) {
    json one;
    one["members"] = scan.lattice.nodes[i].members;
    json comps = json::array();
    for (const Subsemimodule& c : scan.complements[i])
      comps.push_back(c.members);
    one["complements"] = std::move(comps);
    nodes.push_back(std::move(one));
  }
  j["nodes"] = std::move(nodes);
  j["failures"] = scan.failures;
  return dump(j);
}

namespace {

json sequence_verdict_json(const SequenceVerdict& v) {
  json j;
  j["exact"] = v.exact;
  json junctions = json::array();
  for (const JunctionReport& r : v.junctions) {
    json one;
    one["image_equals_kernel"] = r.image_equals_kernel;
    one["outgoing_k_normal"] = r.outgoing_k_normal;
    one["mismatch_witness"] = r.mismatch_witness;
    junctions.push_back(std::move(one));
  }
  j["junctions"] = std::move(junctions);
  return j;
}

}  // namespace

std::string save_sequence_verdict(const SequenceVerdict& v) {
  return dump(sequence_verdict_json(v));
}

std::string save_short_exact_report(const ShortExactReport& r) {
  json j;
  j["exact"] = r.exact;
  j["mono"] = r.mono;
  j["mono_k_normal"] = r.mono_k_normal;
  j["mono_i_normal"] = r.mono_i_normal;
  j["epi"] = r.epi;
  j["epi_k_normal"] = r.epi_k_normal;
  j["sequence"] = sequence_verdict_json(r.sequence);
  return dump(j);
}

std::string save_injectivity_verdict(const InjectivityVerdict& v) {
  json j;
  j["kind"] = v.kind;
  j["relative_to"] = v.relative_to;
  j["holds"] = v.holds;
  if (v.failing_sub) j["failing_sub"] = v.failing_sub->members;
  if (v.failing_map) {
    json m;
    m["table"] = v.failing_map->image;
    m["label"] = v.failing_map->label;
    j["failing_map"] = std::move(m);
  }
  if (v.induced) j["induced"] = sequence_verdict_json(v.induced->verdict);
  return dump(j);
}

std::string save_transformed_chain(const TransformedChain& t) {
  json j;
  j["direction"] =
      t.direction == ChainDirection::descending ? "descending" : "ascending";
  json given = json::array();
  for (const Subsemimodule& s : t.given) given.push_back(s.members);
  j["given"] = std::move(given);
  json complements = json::array();
  for (const Subsemimodule& s : t.given_complements)
    complements.push_back(s.members);
  j["given_complements"] = std::move(complements);
  json transformed = json::array();
  for (const Subsemimodule& s : t.transformed) transformed.push_back(s.members);
  j["transformed"] = std::move(transformed);
  j["valid"] = t.valid;
  j["monotone"] = t.monotone;
  j["given_stationary_at"] = t.given_stationary_at;
  j["transformed_stationary_at"] = t.transformed_stationary_at;
  return dump(j);
}

std::string save_classification(const Classification& c) {
  json j;
  j["family"] = family_json(c.family);
  json gens = json::array();
  for (const Mat2& g : c.canonical_generators) gens.push_back(mat2_json(g));
  j["canonical_generators"] = std::move(gens);
  json steps = json::array();
  for (const DerivationStep& s : c.derivation) {
    json one;
    one["result"] = mat2_json(s.result);
    if (s.by_subtraction) {
      one["addend"] = s.addend;
      one["minuend"] = s.minuend;
    } else {
      json terms = json::array();
      for (const DerivationTerm& t : s.terms) {
        json term;
        term["factor"] = mat2_json(t.factor);
        term[t.from_step ? "step" : "generator"] = t.index;
        terms.push_back(std::move(term));
      }
      one["terms"] = std::move(terms);
    }
    one["note"] = s.note;
    steps.push_back(std::move(one));
  }
  j["derivation"] = std::move(steps);
  j["generators_inside"] = c.generators_inside;
  j["derivation_checks"] = c.derivation_checks;
  j["sampled_combinations_inside"] = c.sampled_combinations_inside;
  return dump(j);
}

std::string save_chain_demo(const ChainDemo& d) {
  json j;
  j["kind"] = d.kind;
  j["depth"] = d.depth;
  j["all_strict"] = d.all_strict;
  json seps = json::array();
  for (const ChainSeparation& s : d.separations) {
    json one;
    one["larger"] = s.larger;
    one["smaller"] = s.smaller;
    one["witness"] = s.witness;
    one["verified"] = s.verified;
    seps.push_back(std::move(one));
  }
  j["separations"] = std::move(seps);
  return dump(j);
}

}  // namespace kideal
