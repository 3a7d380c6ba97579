// Command-line front end: loads structures from JSON, runs the library
// analyses and renders reports as json, text or DOT.
//
// Exit codes: 0 success, 1 when a command's verdict is negative (failed
// axioms, inexact sequence, missing summand, broken separation, verdict
// false), 2 on input or usage errors.

#include <CLI11.hpp>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kideal/dot.hpp"
#include "kideal/errors.hpp"
#include "kideal/injectivity.hpp"
#include "kideal/json_io.hpp"
#include "kideal/mat2.hpp"
#include "kideal/morphism.hpp"
#include "kideal/semimodule.hpp"
#include "kideal/semiring.hpp"
#include "kideal/structure.hpp"

namespace {

using nlohmann::ordered_json;

struct Config {
  kideal::Caps caps;
  unsigned long long seed = 0;
  std::string format = "json";
  std::string out;
};

// Shared flags; every subcommand takes the same set.
void add_common(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--cap-module", cfg.caps.module_size,
                  "size cap for loaded structures")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--cap-hom", cfg.caps.hom_search,
                  "cap on homomorphism search spaces")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", cfg.seed, "seed for every sampled check");
  cmd->add_option("--format", cfg.format, "output format: json, text or dot")
      ->check(CLI::IsMember({"json", "text", "dot"}));
  cmd->add_option("--out", cfg.out, "write the report to this file");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw kideal::parameter_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const Config& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out, std::ios::binary);
  if (!out) throw kideal::parameter_error("cannot write " + cfg.out);
  out << text;
}

// Module loading with the convention that a file holding a bare semiring
// stands for its regular module.
kideal::ModulePtr load_module_file(const std::string& path,
                                   const kideal::Caps& caps) {
  kideal::Caps adjusted = caps;
  adjusted.semiring_size = caps.module_size;
  return kideal::load_semimodule(read_file(path), adjusted);
}

std::string members_text(const std::vector<int>& members) {
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(members[i]);
  }
  return out + "}";
}

// FNV-1a, the content address for cached lattices.
std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t h) {
  static const char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

// Lattice enumeration dominates every command that needs it, so computed
// lattices are cached under $KIDEAL_CACHE keyed by the canonical module
// serialization plus the size cap.  A missing, unreadable or stale entry
// falls back to recomputation.
kideal::KIdealLattice lattice_for(const kideal::ModulePtr& m,
                                  const kideal::Caps& caps) {
  const char* dir = std::getenv("KIDEAL_CACHE");
  std::string path;
  if (dir && *dir) {
    std::string key = kideal::save_semimodule(*m) + "|" +
                      std::to_string(caps.module_size);
    path = std::string(dir) + "/" + hex64(fnv1a(key)) + ".json";
    std::ifstream in(path, std::ios::binary);
    if (in) {
      try {
        ordered_json j = ordered_json::parse(in);
        kideal::KIdealLattice lat;
        lat.module = m;
        for (const auto& row : j.at("member_sets"))
          lat.nodes.push_back(
              kideal::subsemimodule(m, row.get<std::vector<int>>()));
        for (const auto& e : j.at("edges"))
          lat.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        lat.height = j.at("height").get<int>();
        lat.width = j.at("width").get<int>();
        return lat;
      } catch (...) {
        // fall through to recomputation
      }
    }
  }
  kideal::KIdealLattice lat = kideal::k_ideal_lattice(m, caps);
  if (!path.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    ordered_json j;
    ordered_json sets = ordered_json::array();
    for (const auto& node : lat.nodes) sets.push_back(node.members);
    j["member_sets"] = std::move(sets);
    ordered_json edges = ordered_json::array();
    for (const auto& e : lat.edges)
      edges.push_back(ordered_json::array({e.first, e.second}));
    j["edges"] = std::move(edges);
    j["height"] = lat.height;
    j["width"] = lat.width;
    std::ofstream out(path, std::ios::binary);
    if (out) out << j.dump(2) << "\n";
  }
  return lat;
}

int run_axioms(const Config& cfg, const std::string& path) {
  std::string text = read_file(path);
  ordered_json probe = ordered_json::parse(text, nullptr, false);
  kideal::AxiomReport report;
  std::string what = path;
  // A module file carries an action table; everything else is read as a
  // semiring.  Tables that parse but break the axioms surface as a
  // validation error carrying the full report, which is exactly what this
  // command exists to show.
  try {
    if (probe.is_object() && probe.contains("action")) {
      kideal::ModulePtr m = load_module_file(path, cfg.caps);
      report = kideal::check_semimodule_axioms(m->data());
      what = "semimodule " + m->label();
    } else {
      kideal::SemiringPtr s = kideal::load_semiring(text, cfg.caps);
      report = kideal::check_semiring_axioms(s->data());
      what = "semiring " + s->label();
    }
  } catch (const kideal::validation_error& e) {
    report = e.report;
  }
  if (cfg.format == "text") {
    std::string out = what + ": " +
                      (report.passed ? "axioms hold" : "axioms fail") + "\n";
    for (const auto& v : report.violations)
      out += "  " + v.axiom + " at (" + std::to_string(v.witness[0]) + ", " +
             std::to_string(v.witness[1]) + ", " +
             std::to_string(v.witness[2]) + ")\n";
    write_output(cfg, out);
  } else {
    write_output(cfg, kideal::save_axiom_report(report));
  }
  return report.passed ? 0 : 1;
}

int run_ideals(const Config& cfg, const std::string& path) {
  kideal::ModulePtr m = load_module_file(path, cfg.caps);
  kideal::KIdealLattice lat = lattice_for(m, cfg.caps);
  if (cfg.format == "dot") {
    write_output(cfg, kideal::emit_dot(lat));
  } else if (cfg.format == "text") {
    std::string out = "subtractive lattice of " + m->label() + ": " +
                      std::to_string(lat.nodes.size()) + " nodes, height " +
                      std::to_string(lat.height) + ", width " +
                      std::to_string(lat.width) + "\n";
    for (std::size_t i = 0; i < lat.nodes.size(); ++i)
      out += "  node " + std::to_string(i) + ": " +
             members_text(lat.nodes[i].members) + "\n";
    for (const auto& e : lat.edges)
      out += "  " + std::to_string(e.first) + " -> " +
             std::to_string(e.second) + "\n";
    write_output(cfg, out);
  } else {
    write_output(cfg, kideal::save_lattice_report(lat));
  }
  return 0;
}

int run_summands(const Config& cfg, const std::string& path,
                 const std::string& chain_path,
                 const std::string& direction) {
  kideal::ModulePtr m = load_module_file(path, cfg.caps);
  if (chain_path.empty()) {
    kideal::SummandScan scan = kideal::all_k_ideals_summands(m, cfg.caps);
    if (cfg.format == "text") {
      std::string out =
          "summand scan of " + m->label() + ": " +
          (scan.holds ? "every subtractive subobject is a summand"
                      : "some subtractive subobject has no complement") +
          "\n";
      for (std::size_t i = 0; i < scan.lattice.nodes.size(); ++i) {
        out += "  " + members_text(scan.lattice.nodes[i].members) + ": ";
        if (scan.complements[i].empty()) {
          out += "no complement\n";
          continue;
        }
        for (std::size_t k = 0; k < scan.complements[i].size(); ++k) {
          if (k) out += ", ";
          out += members_text(scan.complements[i][k].members);
        }
        out += "\n";
      }
      write_output(cfg, out);
    } else {
      write_output(cfg, kideal::save_summand_scan(scan));
    }
    return scan.holds ? 0 : 1;
  }

  // Chain mode: the file lists nested member sets outermost first; each
  // entry is certified as a summand before the chain is transformed.
  std::vector<std::vector<int>> sets =
      kideal::load_member_chain(read_file(chain_path));
  std::vector<kideal::SummandCertificate> chain;
  for (const auto& members : sets) {
    kideal::Subsemimodule node = kideal::subsemimodule(m, members);
    auto certificates = kideal::direct_summand_complements(node, cfg.caps);
    if (certificates.empty())
      throw kideal::precondition_error("chain entry " +
                                       members_text(members) +
                                       " is not a direct summand");
    chain.push_back(certificates.front());
  }
  kideal::ChainDirection dir = direction == "ascending"
                                   ? kideal::ChainDirection::ascending
                                   : kideal::ChainDirection::descending;
  kideal::TransformedChain result = kideal::transform_chain(dir, chain);
  if (cfg.format == "text") {
    std::string out = std::string("transformed chain (") + direction + "): " +
                      (result.valid && result.monotone ? "certified"
                                                       : "failed") +
                      "\n";
    for (std::size_t i = 0; i < result.transformed.size(); ++i)
      out += "  " + members_text(result.given[i].members) + " with " +
             members_text(result.transformed[i].members) + "\n";
    out += "  stationary from " +
           std::to_string(result.given_stationary_at) + " and " +
           std::to_string(result.transformed_stationary_at) + "\n";
    write_output(cfg, out);
  } else {
    write_output(cfg, kideal::save_transformed_chain(result));
  }
  return result.valid && result.monotone ? 0 : 1;
}

int run_exact(const Config& cfg, const std::string& path) {
  std::vector<kideal::LinearMap> maps =
      kideal::load_sequence(read_file(path), cfg.caps);
  kideal::SequenceVerdict verdict = kideal::check_exact(maps);
  if (cfg.format == "text") {
    std::string out =
        std::string("sequence is ") + (verdict.exact ? "exact" : "not exact") +
        "\n";
    for (std::size_t i = 0; i < verdict.junctions.size(); ++i) {
      const auto& junction = verdict.junctions[i];
      out += "  junction " + std::to_string(i) + ": image=kernel " +
             (junction.image_equals_kernel ? "yes" : "no") + ", k-normal " +
             (junction.outgoing_k_normal ? "yes" : "no");
      if (junction.mismatch_witness >= 0)
        out += ", witness " + std::to_string(junction.mismatch_witness);
      out += "\n";
    }
    write_output(cfg, out);
  } else {
    write_output(cfg, kideal::save_sequence_verdict(verdict));
  }
  return verdict.exact ? 0 : 1;
}

int run_injective(const Config& cfg, const std::string& target_path,
                  const std::string& rel_path, const std::string& kind) {
  kideal::ModulePtr target = load_module_file(target_path, cfg.caps);
  kideal::ModulePtr rel = rel_path.empty()
                              ? target
                              : load_module_file(rel_path, cfg.caps);
  std::vector<kideal::InjectivityVerdict> verdicts;
  if (kind == "injective" || kind == "both")
    verdicts.push_back(kideal::is_injective_rel(target, rel, cfg.caps));
  if (kind == "i-injective" || kind == "both")
    verdicts.push_back(kideal::is_i_injective_rel(target, rel, cfg.caps));
  bool all_hold = true;
  for (const auto& verdict : verdicts)
    if (!verdict.holds) all_hold = false;
  if (cfg.format == "text") {
    std::string out;
    for (const auto& verdict : verdicts) {
      out += verdict.kind + " relative to " + verdict.relative_to + ": " +
             (verdict.holds ? "holds" : "fails");
      if (verdict.failing_sub)
        out += " at " + members_text(verdict.failing_sub->members);
      out += "\n";
    }
    write_output(cfg, out);
  } else {
    std::string out = "[\n";
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
      std::string one = kideal::save_injectivity_verdict(verdicts[i]);
      if (!one.empty() && one.back() == '\n') one.pop_back();
      out += one;
      out += i + 1 < verdicts.size() ? ",\n" : "\n";
    }
    out += "]\n";
    write_output(cfg, out);
  }
  return all_hold ? 0 : 1;
}

int run_classify(const Config& cfg, const std::string& path) {
  std::vector<kideal::Mat2> gens =
      kideal::load_mat2_generators(read_file(path));
  kideal::Classification result = kideal::classify_k_closure(gens);
  if (cfg.format == "text") {
    std::string out = "closure family: " + result.family.str() + "\n";
    out += "  canonical generators:";
    for (const auto& g : result.canonical_generators) out += " " + g.str();
    out += result.canonical_generators.empty() ? " none\n" : "\n";
    out += std::string("  derivation verified: ") +
           (result.derivation_checks ? "yes" : "no") + "\n";
    out += std::string("  generators satisfy the predicate: ") +
           (result.generators_inside ? "yes" : "no") + "\n";
    write_output(cfg, out);
  } else {
    write_output(cfg, kideal::save_classification(result));
  }
  return 0;
}

int run_chains(const Config& cfg, const std::string& kind, int depth,
               int trials) {
  kideal::ChainDemo demo = kideal::chain_demo(kind, depth);
  // The demos live among the threshold families, so attach the sampled
  // closure-law evidence and the subtractivity witness for the first term
  // when the chain is matrix-valued.
  std::optional<kideal::ClosureWitness> witness;
  if (demo.kind == "threshold-descending" ||
      demo.kind == "threshold-ascending")
    witness = kideal::closure_witness_search(
        kideal::n_geq_family(kideal::QPlus::one()), trials, cfg.seed);
  if (cfg.format == "text") {
    std::string out = demo.kind + " depth " + std::to_string(demo.depth) +
                      ": " +
                      (demo.all_strict ? "all separations strict"
                                       : "separation failed") +
                      "\n";
    for (const auto& sep : demo.separations)
      out += "  " + sep.larger + " > " + sep.smaller + " by " + sep.witness +
             (sep.verified ? "" : " (unverified)") + "\n";
    if (witness)
      out += "  threshold families are not subtractive: " +
             witness->outside.str() + " + " + witness->member.str() + " = " +
             witness->sum.str() + "\n";
    write_output(cfg, out);
  } else {
    std::string base = kideal::save_chain_demo(demo);
    if (witness) {
      ordered_json j = ordered_json::parse(base);
      ordered_json w;
      w["outside"] = ordered_json::parse(kideal::save_mat2(witness->outside));
      w["member"] = ordered_json::parse(kideal::save_mat2(witness->member));
      w["sum"] = ordered_json::parse(kideal::save_mat2(witness->sum));
      j["closure_witness"] = std::move(w);
      base = j.dump(2) + "\n";
    }
    write_output(cfg, base);
  }
  return demo.all_strict ? 0 : 1;
}

int run_emit_dot(const Config& cfg, const std::string& path) {
  kideal::ModulePtr m = load_module_file(path, cfg.caps);
  write_output(cfg, kideal::emit_dot(lattice_for(m, cfg.caps)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite semiring and semimodule analysis"};
  app.require_subcommand(1);
  Config cfg;

  std::string structure_path, chain_path, direction = "descending";
  std::string rel_path, kind = "both", chain_kind = "threshold-descending";
  int depth = 10, trials = 1000;

  CLI::App* axioms = app.add_subcommand("axioms", "validate a structure file");
  axioms->add_option("file", structure_path, "semiring or semimodule json")
      ->required();
  add_common(axioms, cfg);

  CLI::App* ideals =
      app.add_subcommand("ideals", "subtractive-subobject lattice");
  ideals->add_option("file", structure_path, "semimodule json")->required();
  add_common(ideals, cfg);

  CLI::App* summands =
      app.add_subcommand("summands", "direct-summand scan or chain transform");
  summands->add_option("file", structure_path, "semimodule json")->required();
  summands->add_option("--chain", chain_path,
                       "member-set chain file, outermost first");
  summands->add_option("--direction", direction, "chain direction")
      ->check(CLI::IsMember({"descending", "ascending"}));
  add_common(summands, cfg);

  CLI::App* exact = app.add_subcommand("exact", "exactness of a map sequence");
  exact->add_option("file", structure_path, "sequence json")->required();
  add_common(exact, cfg);

  CLI::App* injective =
      app.add_subcommand("injective", "extension-property verdicts");
  injective->add_option("file", structure_path, "target semimodule json")
      ->required();
  injective->add_option("--rel", rel_path,
                        "module whose subobjects drive the test "
                        "(default: the target itself)");
  injective->add_option("--kind", kind, "which verdicts to compute")
      ->check(CLI::IsMember({"injective", "i-injective", "both"}));
  add_common(injective, cfg);

  CLI::App* classify =
      app.add_subcommand("classify", "subtractive closure of matrix generators");
  classify->add_option("file", structure_path, "generator list json")
      ->required();
  add_common(classify, cfg);

  CLI::App* chains =
      app.add_subcommand("chains", "strict chain demonstrations");
  chains->add_option("--kind", chain_kind,
                     "threshold-descending, threshold-ascending or "
                     "integer-thresholds");
  chains->add_option("--depth", depth, "chain length")->check(CLI::PositiveNumber);
  chains->add_option("--trials", trials, "sampled trials for the witness")
      ->check(CLI::PositiveNumber);
  add_common(chains, cfg);

  CLI::App* emit =
      app.add_subcommand("emit-dot", "lattice Hasse diagram as DOT");
  emit->add_option("file", structure_path, "semimodule json")->required();
  add_common(emit, cfg);

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.caps.semiring_size = cfg.caps.module_size;
    if (axioms->parsed()) return run_axioms(cfg, structure_path);
    if (ideals->parsed()) return run_ideals(cfg, structure_path);
    if (summands->parsed())
      return run_summands(cfg, structure_path, chain_path, direction);
    if (exact->parsed()) return run_exact(cfg, structure_path);
    if (injective->parsed())
      return run_injective(cfg, structure_path, rel_path, kind);
    if (classify->parsed()) return run_classify(cfg, structure_path);
    if (chains->parsed()) return run_chains(cfg, chain_kind, depth, trials);
    if (emit->parsed()) return run_emit_dot(cfg, structure_path);
  } catch (const kideal::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
