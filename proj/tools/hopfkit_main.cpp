#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hopfkit/cat_protected.hpp"
#include "hopfkit/io.hpp"
#include "hopfkit/mcg.hpp"

using namespace hopfkit;

namespace {

struct Options {
  std::string group_path;
  std::string xmod_path;
  std::string graph_path;
  int genus = -1;
  int levels = 2;
  std::string format = "json";
  int threads = 0;
  std::string out_path;
  std::vector<std::string> aut_paths;
};

void write_output(const Options& opt, const std::string& text) {
  if (!opt.out_path.empty()) {
    std::ofstream out(opt.out_path, std::ios::binary);
    require(out.good(), errc::input_error, "cannot write " + opt.out_path);
    out << text;
  } else {
    std::cout << text;
  }
}

void emit_json(const Options& opt, Json doc) {
  write_output(opt, doc.dump(2) + "\n");
}

Json inputs_digest(const Options& opt) {
  Json inputs = Json::object();
  if (!opt.group_path.empty()) inputs["group"] = fnv_digest(read_file(opt.group_path));
  if (!opt.xmod_path.empty()) inputs["xmod"] = fnv_digest(read_file(opt.xmod_path));
  if (!opt.graph_path.empty()) inputs["graph"] = fnv_digest(read_file(opt.graph_path));
  return inputs;
}

RibbonGraph resolve_graph(const Options& opt) {
  if (!opt.graph_path.empty()) return parse_graph_doc(load_json_file(opt.graph_path));
  require(opt.genus >= 0, errc::input_error, "either --graph or --genus is required");
  return RibbonGraph::standard_graph(opt.genus);
}

int run_rep_variety(const Options& opt) {
  auto g = parse_group_doc(load_json_file(opt.group_path));
  require(opt.genus >= 0, errc::input_error, "--genus is required");
  auto reps = enumerate_surface_reps_parallel(g, opt.genus);
  auto orbits = conjugation_orbits(reps, g);
  Json doc;
  doc["schema"] = "hopfkit/result/rep-variety/v1";
  doc["inputs"] = inputs_digest(opt);
  doc["genus"] = opt.genus;
  doc["hom_count"] = reps.size();
  doc["class_count"] = orbits.count();
  Json classes = Json::array();
  for (const auto& orbit : orbits.orbits) {
    Json names = Json::array();
    for (Elt e : orbit[0]) names.push_back(g.name_of(e));
    classes.push_back(Json::object({{"representative", names}, {"size", orbit.size()}}));
  }
  doc["classes"] = classes;
  emit_json(opt, doc);
  return 0;
}

int run_protected_set(const Options& opt) {
  auto g = parse_group_doc(load_json_file(opt.group_path));
  auto graph = resolve_graph(opt);
  if (opt.format == "dot") {
    write_output(opt, graph.to_dot());
    return 0;
  }
  auto p = protected_set(graph, g);
  Json doc = protected_set_to_doc(p, graph, g);
  doc["schema"] = "hopfkit/result/protected-set/v1";
  doc["inputs"] = inputs_digest(opt);
  emit_json(opt, doc);
  return 0;
}

int run_protected_cat(const Options& opt) {
  auto x = parse_xmod_doc(load_json_file(opt.xmod_path));
  require(opt.genus >= 0, errc::input_error, "--genus is required");
  auto result = protected_groupoid(x, opt.genus);
  if (opt.format == "dot") {
    write_output(opt, result.groupoid.to_dot());
    return 0;
  }
  Json doc = groupoid_to_doc(result.groupoid);
  doc["schema"] = "hopfkit/result/protected-cat/v1";
  doc["inputs"] = inputs_digest(opt);
  doc["genus"] = opt.genus;
  doc["congruence_discrepancy"] = result.discrepancy;
  emit_json(opt, doc);
  return 0;
}

int run_verify_invariance(const Options& opt) {
  auto g = parse_group_doc(load_json_file(opt.group_path));
  auto graph = parse_graph_doc(load_json_file(opt.graph_path));
  auto check = protected_set_via_reduction(graph, g);
  require(check.bijection, errc::internal_invariant,
          "transported orbits do not biject onto the standard graph orbits");
  std::cout << "bijection verified, " << check.standard.orbit_count() << " orbits\n";
  if (!opt.out_path.empty()) {
    Json doc;
    doc["schema"] = "hopfkit/result/verify-invariance/v1";
    doc["inputs"] = inputs_digest(opt);
    doc["bijection_verified"] = true;
    doc["orbit_count"] = check.standard.orbit_count();
    doc["moves"] = check.script.size();
    std::ofstream out(opt.out_path, std::ios::binary);
    out << doc.dump(2) << "\n";
  }
  return 0;
}

int run_mcg_relations(const Options& opt) {
  auto g = parse_group_doc(load_json_file(opt.group_path));
  auto report = verify_torus_relations(g);
  Json doc;
  doc["schema"] = "hopfkit/result/mcg-relations/v1";
  doc["inputs"] = inputs_digest(opt);
  doc["class_count"] = report.class_count;
  doc["braid_holds"] = report.braid_holds;
  doc["torsion_holds"] = report.torsion_holds;
  emit_json(opt, doc);
  return report.braid_holds && report.torsion_holds ? 0 : 1;
}

int run_mcg_orbits(const Options& opt) {
  auto g = parse_group_doc(load_json_file(opt.group_path));
  std::vector<SurfaceAutomorphism> generators;
  int genus = opt.genus >= 1 ? opt.genus : 1;
  if (opt.aut_paths.empty()) {
    require(genus == 1, errc::input_error,
            "twist generators are built in only for genus 1; pass --aut words above that");
    auto [da, db] = torus_twists();
    generators = {da, db};
  } else {
    for (const auto& path : opt.aut_paths) {
      generators.push_back(parse_automorphism_doc(load_json_file(path)));
      require(generators.back().genus == genus, errc::input_error,
              "automorphism genus does not match --genus");
    }
  }
  auto orbits = conjugation_orbits(enumerate_surface_reps_parallel(g, genus), g);
  std::vector<std::vector<int>> perms;
  for (const auto& aut : generators)
    perms.push_back(induced_class_permutation(aut, orbits, g));
  auto decomposition = orbit_decomposition(perms);
  Json doc;
  doc["schema"] = "hopfkit/result/mcg-orbits/v1";
  doc["inputs"] = inputs_digest(opt);
  doc["class_count"] = orbits.count();
  Json parts = Json::array();
  Json sizes = Json::array();
  for (const auto& orbit : decomposition) {
    parts.push_back(orbit);
    sizes.push_back(orbit.size());
  }
  doc["orbits"] = parts;
  doc["orbit_sizes"] = sizes;
  emit_json(opt, doc);
  return 0;
}

int run_simplicial_levels(const Options& opt) {
  auto x = parse_xmod_doc(load_json_file(opt.xmod_path));
  require(opt.genus >= 0, errc::input_error, "--genus is required");
  auto levels = simplicial_protected_levels(x, opt.genus, opt.levels);
  Json doc;
  doc["schema"] = "hopfkit/result/simplicial-levels/v1";
  doc["inputs"] = inputs_digest(opt);
  doc["genus"] = opt.genus;
  Json counts = Json::array();
  for (std::size_t n = 0; n < levels.level_orbits.size(); ++n)
    counts.push_back(levels.level_orbits[n].count());
  doc["class_counts"] = counts;
  Json faces = Json::object();
  for (std::size_t n = 1; n < levels.face_maps.size(); ++n) {
    Json per_level = Json::array();
    for (const auto& column : levels.face_maps[n]) per_level.push_back(column);
    faces[std::to_string(n)] = per_level;
  }
  doc["face_maps"] = faces;
  Json degeneracies = Json::object();
  for (std::size_t n = 0; n + 1 < levels.degeneracy_maps.size() + 1 &&
                          n < levels.degeneracy_maps.size();
       ++n) {
    if (levels.degeneracy_maps[n].empty()) continue;
    Json per_level = Json::array();
    for (const auto& column : levels.degeneracy_maps[n]) per_level.push_back(column);
    degeneracies[std::to_string(n)] = per_level;
  }
  doc["degeneracy_maps"] = degeneracies;
  emit_json(opt, doc);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (std::getenv("HOPFKIT_SEED") != nullptr) {
    Json err;
    err["error"] = {{"code", "seed_rejected"},
                    {"message", "HOPFKIT_SEED is rejected: all computations are deterministic "
                                "and accept no seed"}};
    std::cout << err.dump(2) << "\n";
    return 64;
  }

  CLI::App app{"protected-object computations for finite groups and crossed modules on surfaces"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd, bool group, bool xmod, bool graph, bool genus) {
    if (group) cmd->add_option("--group", opt.group_path, "group document (JSON)");
    if (xmod) cmd->add_option("--xmod", opt.xmod_path, "crossed module document (JSON)");
    if (graph) cmd->add_option("--graph", opt.graph_path, "ribbon graph document (JSON)");
    if (genus) cmd->add_option("--genus", opt.genus, "surface genus");
    cmd->add_option("--format", opt.format, "output format: json or dot")
        ->check(CLI::IsMember({"json", "dot"}));
    cmd->add_option("--threads", opt.threads, "cap the number of worker threads");
    cmd->add_option("--out", opt.out_path, "write the result document here instead of stdout");
  };

  auto* rep = app.add_subcommand("rep-variety", "surface-group representation classes");
  add_common(rep, true, false, false, true);
  auto* pset = app.add_subcommand("protected-set", "flat configurations modulo gauge");
  add_common(pset, true, false, true, true);
  auto* pcat = app.add_subcommand("protected-cat", "protected groupoid of a crossed module");
  add_common(pcat, false, true, false, true);
  auto* verify = app.add_subcommand("verify-invariance",
                                    "reduce a graph and verify the transported orbit bijection");
  add_common(verify, true, false, true, false);
  auto* morb = app.add_subcommand("mcg-orbits", "mapping class group orbits on classes");
  add_common(morb, true, false, false, true);
  morb->add_option("--aut", opt.aut_paths, "automorphism documents used as generators");
  auto* mrel = app.add_subcommand("mcg-relations", "torus mapping class group relations");
  add_common(mrel, true, false, false, false);
  auto* slev = app.add_subcommand("simplicial-levels", "representation classes of nerve levels");
  add_common(slev, false, true, false, true);
  slev->add_option("--levels", opt.levels, "top simplicial level (at most 2)");

  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  if (opt.threads > 0) omp_set_num_threads(opt.threads);
#endif

  try {
    if (rep->parsed()) return run_rep_variety(opt);
    if (pset->parsed()) return run_protected_set(opt);
    if (pcat->parsed()) return run_protected_cat(opt);
    if (verify->parsed()) return run_verify_invariance(opt);
    if (morb->parsed()) return run_mcg_orbits(opt);
    if (mrel->parsed()) return run_mcg_relations(opt);
    if (slev->parsed()) return run_simplicial_levels(opt);
  } catch (const error& e) {
    Json err;
    err["error"] = {{"code", errc_name(e.code())}, {"message", e.what()}};
    std::cout << err.dump(2) << "\n";
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    Json err;
    err["error"] = {{"code", "internal"}, {"message", e.what()}};
    std::cout << err.dump(2) << "\n";
    return 70;
  }
  return 0;
}
