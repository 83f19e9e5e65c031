// Copyright 2026 The digicov Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// digicov: command-line front end.
//
//   digicov check <predicate> <map.json> [--json] [--subset-search]
//   digicov classify <map.json> [--json]
//   digicov gen {scc|wrap|cover|interval} [params] [--out file]
//   digicov repro <result> [bounds]
//   digicov falsify <hypothesis> <conclusion> [bounds]
//
// Exit status: 0 the predicate/claim holds, 1 it does not, 2 bad input or
// search ceiling exceeded.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "digicov/certify.hpp"
#include "digicov/digicov.hpp"
#include "digicov/io.hpp"
#include "digicov/repro.hpp"

namespace {

using namespace digicov;
using nlohmann::json;

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kInputError = 2;

const std::vector<std::string> kCheckPredicates = {
    "continuous",    "isomorphism",     "local-iso",      "wl-iso",
    "wl-surjection", "local-iso-surjection", "pseudo-original", "pseudo-revised",
    "covering",      "inclusion-39"};

PredicateReport verdict_report(const char* name, const DigitalMap& m, const Verdict& v) {
  PredicateReport rep;
  rep.predicate = name;
  rep.surjective = is_surjective_map(m);
  rep.holds = v.holds;
  rep.witness = v.witness;
  return rep;
}

PredicateReport run_check(const std::string& predicate, const DigitalMap& m, bool subset_search) {
  if (predicate == "continuous") return verdict_report("continuous", m, is_continuous(m));
  if (predicate == "isomorphism") return verdict_report("isomorphism", m, is_isomorphism(m));
  if (predicate == "local-iso") return verdict_report("local-iso", m, is_local_isomorphism(m));
  if (predicate == "wl-iso") return verdict_report("wl-iso", m, is_wl_isomorphism(m));
  if (predicate == "wl-surjection") return check_wl_surjection(m);
  if (predicate == "local-iso-surjection") return check_local_iso_surjection(m);
  if (predicate == "pseudo-original") return check_original_pseudocovering(m, subset_search);
  if (predicate == "pseudo-revised") return check_revised_pseudocovering(m);
  if (predicate == "covering") return check_digital_covering(m);
  if (predicate == "inclusion-39") return check_inclusion_39(m);
  throw DomainError("unknown predicate '" + predicate + "'");
}

std::string_view title(const std::string& predicate) {
  if (predicate == "pseudo-original") return "original pseudo-(k0,k1)-covering";
  if (predicate == "pseudo-revised") return "revised pseudo-(k0,k1)-covering";
  if (predicate == "covering") return "digital (k0,k1)-covering";
  if (predicate == "wl-surjection") return "WL-(k0,k1)-isomorphic surjection";
  if (predicate == "local-iso-surjection") return "local (k0,k1)-isomorphic surjection";
  if (predicate == "inclusion-39") return "sheet union inside p^-1(N(b,1)) at every b";
  if (predicate == "local-iso") return "local (k0,k1)-isomorphism";
  if (predicate == "wl-iso") return "WL-(k0,k1)-isomorphism";
  if (predicate == "isomorphism") return "(k0,k1)-isomorphism";
  return "(k0,k1)-continuous";
}

void print_report(const std::string& predicate, const PredicateReport& rep) {
  std::cout << title(predicate) << ": " << (rep.holds ? "holds" : "fails") << '\n';
  for (const auto& b : rep.per_base) {
    auto mark = [](std::optional<bool> v) { return !v ? "-" : (*v ? "ok" : "FAIL"); };
    std::cout << "  b=" << to_string(b.b) << "  (1) " << mark(b.cond1) << "  (2) " << mark(b.cond2)
              << "  (3) " << mark(b.cond3) << "  equality " << (b.equality38 ? "yes" : "strict")
              << '\n';
  }
  if (rep.witness) {
    std::cout << "witness: " << describe(*rep.witness) << '\n';
    std::cout << io::to_json(*rep.witness).dump() << '\n';
  }
}

struct BoundsFlags {
  EnumerationBounds bounds;
  std::optional<std::uint64_t> ceiling;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--max-points", bounds.max_points, "Largest image size")->check(CLI::PositiveNumber);
    cmd->add_option("--dim", bounds.dim, "Largest dimension")->check(CLI::PositiveNumber);
    cmd->add_option("--t", bounds.t, "Largest adjacency parameter t")->check(CLI::PositiveNumber);
    cmd->add_option("--box", bounds.box, "Bounding box extent per axis")->check(CLI::PositiveNumber);
    cmd->add_option("--ceiling", ceiling, "Refuse searches above this many candidate maps");
  }

  EnumerationBounds resolve() const {
    EnumerationBounds b = bounds;
    if (const char* env = std::getenv("DIGICOV_CEILING")) {
      try {
        b.ceiling = std::stoull(env);
      } catch (const std::exception&) {
        throw DomainError("DIGICOV_CEILING is not a number");
      }
    }
    if (ceiling) b.ceiling = *ceiling;
    return b;
  }
};

void emit(const json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    io::write_json_file(out, j);
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Decide continuity, (local) isomorphism and covering-type properties of maps "
               "between digital images"};
  app.require_subcommand(1);

  // check
  auto* check = app.add_subcommand("check", "Run one predicate on a map file");
  std::string predicate;
  std::string map_path;
  bool as_json = false;
  bool subset_search = false;
  check->add_option("predicate,--predicate", predicate, "Predicate name")
      ->required()
      ->check(CLI::IsMember(kCheckPredicates));
  check->add_option("map,--map", map_path, "Map JSON file")->required();
  check->add_flag("--json", as_json, "Print the JSON report");
  check->add_flag("--subset-search", subset_search,
                  "Let the index set M range over nonempty fiber subsets (pseudo-original)");

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "Run every predicate on a map file");
  classify_cmd->add_option("map,--map", map_path, "Map JSON file")->required();
  classify_cmd->add_flag("--json", as_json, "Print JSON");

  // gen
  auto* gen = app.add_subcommand("gen", "Write fixture images and maps as JSON");
  std::string gen_kind;
  std::string name, curve_name, big_name, small_name, out;
  std::optional<Coord> window_end;
  Coord from = 0, to = 0;
  gen->add_option("kind", gen_kind, "scc, wrap, cover or interval")
      ->required()
      ->check(CLI::IsMember({"scc", "wrap", "cover", "interval"}));
  gen->add_option("--name", name, "Catalog curve (scc)");
  gen->add_option("--curve", curve_name, "Catalog curve (wrap)");
  gen->add_option("--window-end", window_end, "Window [0, N] (wrap); default 3l");
  gen->add_option("--big", big_name, "Covering curve (cover)");
  gen->add_option("--small", small_name, "Base curve (cover)");
  gen->add_option("--from", from, "Interval start (interval)");
  gen->add_option("--to", to, "Interval end (interval)");
  gen->add_option("--out", out, "Output file; stdout when omitted");

  // repro
  auto* repro = app.add_subcommand("repro", "Reproduce a named result");
  std::string result;
  BoundsFlags repro_bounds;
  std::vector<std::string> names(repro_names().begin(), repro_names().end());
  repro->add_option("result", result, "remark-3-1, prop-3-9, corollary, theorem-1 or summary")
      ->required()
      ->check(CLI::IsMember(names));
  repro_bounds.add_to(repro);

  // falsify
  auto* falsify = app.add_subcommand("falsify", "Search for counterexamples to an implication");
  std::string hypothesis, conclusion;
  std::size_t limit = 3;
  BoundsFlags falsify_bounds;
  std::vector<std::string> pred_names;
  for (auto p : kAllPredicates) pred_names.emplace_back(to_string(p));
  falsify->add_option("hypothesis", hypothesis)->required()->check(CLI::IsMember(pred_names));
  falsify->add_option("conclusion", conclusion)->required()->check(CLI::IsMember(pred_names));
  falsify->add_option("--limit", limit, "Counterexamples to print");
  falsify->add_flag("--json", as_json, "Print counterexamples as JSON");
  falsify_bounds.add_to(falsify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kHolds : kInputError;
  }

  if (check->parsed()) {
    const auto m = io::load_map(map_path);
    const auto rep = run_check(predicate, m, subset_search);
    if (as_json) {
      std::cout << io::to_json(rep).dump(2) << '\n';
    } else {
      print_report(predicate, rep);
    }
    return rep.holds ? kHolds : kFails;
  }

  if (classify_cmd->parsed()) {
    const auto m = io::load_map(map_path);
    const auto c = classify(m);
    if (as_json) {
      std::cout << io::to_json(c).dump(2) << '\n';
    } else {
      auto line = [](std::string_view label, bool holds) {
        std::cout << (holds ? "  yes  " : "  no   ") << label << '\n';
      };
      line("(k0,k1)-continuous", c.continuous.holds);
      line("WL-(k0,k1)-isomorphic surjection", c.wl_surjection.holds);
      line("local (k0,k1)-isomorphism", c.local_isomorphism.holds);
      line("original pseudo-(k0,k1)-covering", c.pseudo_original.holds);
      line("revised pseudo-(k0,k1)-covering", c.pseudo_revised.holds);
      line("digital (k0,k1)-covering", c.covering.holds);
    }
    return kHolds;
  }

  if (gen->parsed()) {
    if (gen_kind == "scc") {
      if (name.empty()) throw DomainError("gen scc needs --name");
      emit(io::to_json(scc_catalog(name)), out);
    } else if (gen_kind == "wrap") {
      if (curve_name.empty()) throw DomainError("gen wrap needs --curve");
      const auto curve = scc_catalog(curve_name);
      emit(io::to_json(wrap_map(curve, window_end.value_or(default_window_end(curve.length())))),
           out);
    } else if (gen_kind == "cover") {
      if (big_name.empty() || small_name.empty()) throw DomainError("gen cover needs --big and --small");
      emit(io::to_json(cyclic_cover(scc_catalog(big_name), scc_catalog(small_name))), out);
    } else {
      emit(io::to_json(interval_image(from, to)), out);
    }
    return kHolds;
  }

  if (repro->parsed()) {
    const auto rep = run_repro(result, repro_bounds.resolve());
    std::cout << "reproducing " << rep.name << '\n';
    for (const auto& c : rep.checks) {
      std::cout << (c.passed ? "  PASS  " : "  FAIL  ") << c.claim;
      if (!c.detail.empty()) std::cout << "  [" << c.detail << ']';
      std::cout << '\n';
    }
    std::cout << (rep.ok() ? "all claims confirmed" : "some claims NOT confirmed") << '\n';
    return rep.ok() ? kHolds : kFails;
  }

  if (falsify->parsed()) {
    const auto scan = implication_scan(predicate_from_string(hypothesis),
                                       predicate_from_string(conclusion), falsify_bounds.resolve());
    if (as_json) {
      json list = json::array();
      for (std::size_t i = 0; i < scan.counterexamples.size() && i < limit; ++i) {
        const auto& c = scan.counterexamples[i];
        json j = io::to_json(c.map);
        j["failing"] = io::to_json(c.conclusion);
        list.push_back(j);
      }
      std::cout << json{{"hypothesis", hypothesis},
                        {"conclusion", conclusion},
                        {"maps_checked", scan.maps_checked},
                        {"hypothesis_held", scan.hypothesis_held},
                        {"counterexample_count", scan.counterexamples.size()},
                        {"counterexamples", list}}
                       .dump(2)
                << '\n';
    } else {
      std::cout << hypothesis << " => " << conclusion << ": " << scan.maps_checked
                << " maps checked, " << scan.hypothesis_held << " satisfy the hypothesis, "
                << scan.counterexamples.size() << " counterexamples\n";
      for (std::size_t i = 0; i < scan.counterexamples.size() && i < limit; ++i) {
        const auto& c = scan.counterexamples[i];
        std::cout << "counterexample " << i + 1 << ": " << io::to_json(c.map).dump() << '\n';
        if (c.conclusion.witness) std::cout << "  " << describe(*c.conclusion.witness) << '\n';
      }
    }
    return scan.counterexamples.empty() ? kHolds : kFails;
  }
  return kInputError;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "digicov: " << e.what() << '\n';
    return kInputError;
  }
}
