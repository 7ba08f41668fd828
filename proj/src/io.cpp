#include "hopfkit/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace hopfkit {

std::string fnv_digest(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << h;
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), errc::input_error, "cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json load_json_file(const std::string& path) {
  Json doc = Json::parse(read_file(path), nullptr, false);
  require(!doc.is_discarded(), errc::schema_violation, "invalid JSON in " + path);
  return doc;
}

namespace {

void require_schema(const Json& doc, const std::string& expected) {
  require(doc.is_object(), errc::schema_violation, "document must be a JSON object");
  require(doc.contains("schema") && doc["schema"].is_string(), errc::schema_violation,
          "missing schema field");
  require(doc["schema"].get<std::string>() == expected, errc::schema_violation,
          "expected schema " + expected);
}

std::vector<std::string> parse_names(const Json& doc, std::size_t expected) {
  std::vector<std::string> names;
  if (doc.contains("element_names")) {
    require(doc["element_names"].is_array() && doc["element_names"].size() == expected,
            errc::schema_violation, "element_names must list every element");
    for (const auto& n : doc["element_names"]) {
      require(n.is_string(), errc::schema_violation, "element names must be strings");
      names.push_back(n.get<std::string>());
    }
  }
  return names;
}

}  // namespace

FiniteGroup parse_group_doc(const Json& doc) {
  require_schema(doc, "hopfkit/group/v1");
  FiniteGroup g;
  if (doc.contains("mult_table")) {
    require(doc.contains("order") && doc["order"].is_number_integer(), errc::schema_violation,
            "mult_table groups need an order field");
    const auto& table = doc["mult_table"];
    require(table.is_array() && table.size() == doc["order"].get<std::size_t>(),
            errc::schema_violation, "mult_table must be an order x order array");
    std::vector<std::vector<int>> rows;
    for (const auto& row : table) {
      require(row.is_array() && row.size() == table.size(), errc::schema_violation,
              "mult_table must be square");
      rows.emplace_back();
      for (const auto& v : row) {
        require(v.is_number_integer(), errc::schema_violation, "mult_table entries are indices");
        rows.back().push_back(v.get<int>());
      }
    }
    g = FiniteGroup::from_mult_table(rows, parse_names(doc, table.size()));
  } else if (doc.contains("permutation_generators")) {
    require(doc.contains("degree") && doc["degree"].is_number_integer(), errc::schema_violation,
            "permutation groups need a degree field");
    std::vector<std::vector<int>> gens;
    for (const auto& p : doc["permutation_generators"]) {
      require(p.is_array(), errc::schema_violation, "permutation generators are arrays");
      gens.emplace_back();
      for (const auto& v : p) gens.back().push_back(v.get<int>());
    }
    g = FiniteGroup::from_permutations(doc["degree"].get<int>(), gens);
  } else {
    fail(errc::schema_violation, "group document needs mult_table or permutation_generators");
  }
  if (doc.contains("name")) g.set_name(doc["name"].get<std::string>());
  return g;
}

CrossedModule parse_xmod_doc(const Json& doc) {
  require_schema(doc, "hopfkit/xmod/v1");
  require(doc.contains("B") && doc.contains("A") && doc.contains("action") && doc.contains("boundary"),
          errc::schema_violation, "crossed module document needs B, A, action, boundary");
  FiniteGroup b = parse_group_doc(doc["B"]);
  FiniteGroup a = parse_group_doc(doc["A"]);
  const auto& act = doc["action"];
  require(act.is_array() && static_cast<int>(act.size()) == b.order(), errc::schema_violation,
          "action must have one row per element of B");
  std::vector<Elt> action;
  for (const auto& row : act) {
    require(row.is_array() && static_cast<int>(row.size()) == a.order(), errc::schema_violation,
            "action rows must have one entry per element of A");
    for (const auto& v : row) {
      int value = v.get<int>();
      require(value >= 0 && value < a.order(), errc::schema_violation, "action entry out of range");
      action.push_back(static_cast<Elt>(value));
    }
  }
  const auto& bd = doc["boundary"];
  require(bd.is_array() && static_cast<int>(bd.size()) == a.order(), errc::schema_violation,
          "boundary must have one entry per element of A");
  std::vector<Elt> boundary;
  for (const auto& v : bd) {
    int value = v.get<int>();
    require(value >= 0 && value < b.order(), errc::schema_violation, "boundary entry out of range");
    boundary.push_back(static_cast<Elt>(value));
  }
  return CrossedModule::validate(std::move(b), std::move(a), std::move(action), std::move(boundary));
}

namespace {

// "b1 a1^-1" -> word letters; generator a_i is letter 2i-1, b_i is 2i
Word parse_word(const std::string& text, int genus) {
  Word out;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    int power = 1;
    auto caret = token.find('^');
    std::string base = token;
    if (caret != std::string::npos) {
      base = token.substr(0, caret);
      power = std::stoi(token.substr(caret + 1));
    }
    require(base.size() >= 2 && (base[0] == 'a' || base[0] == 'b'), errc::schema_violation,
            "generator tokens look like a1, b2, a1^-1");
    int index = std::stoi(base.substr(1));
    require(index >= 1 && index <= genus, errc::schema_violation,
            "generator index exceeds the genus");
    int letter = base[0] == 'a' ? 2 * index - 1 : 2 * index;
    require(power != 0, errc::schema_violation, "zero powers are not allowed");
    for (int k = 0; k < std::abs(power); ++k) out.push_back(power > 0 ? letter : -letter);
  }
  return out;
}

std::vector<Word> parse_word_map(const Json& map, int genus) {
  require(map.is_object(), errc::schema_violation, "image maps are JSON objects");
  std::vector<Word> words(2 * genus);
  std::vector<bool> seen(2 * genus, false);
  for (const auto& [key, value] : map.items()) {
    require(value.is_string(), errc::schema_violation, "image words are strings");
    require(key.size() >= 2 && (key[0] == 'a' || key[0] == 'b'), errc::schema_violation,
            "generator keys look like a1 or b1");
    int index = std::stoi(key.substr(1));
    require(index >= 1 && index <= genus, errc::schema_violation, "generator key exceeds the genus");
    int slot = key[0] == 'a' ? 2 * (index - 1) : 2 * index - 1;
    words[slot] = parse_word(value.get<std::string>(), genus);
    seen[slot] = true;
  }
  for (bool s : seen)
    require(s, errc::schema_violation, "every generator needs an image word");
  return words;
}

}  // namespace

SurfaceAutomorphism parse_automorphism_doc(const Json& doc) {
  require_schema(doc, "hopfkit/aut/v1");
  require(doc.contains("genus") && doc["genus"].is_number_integer(), errc::schema_violation,
          "automorphism document needs a genus");
  int genus = doc["genus"].get<int>();
  require(doc.contains("images") && doc.contains("inverse_images"), errc::schema_violation,
          "automorphism document needs images and inverse_images");
  return make_surface_automorphism(genus, parse_word_map(doc["images"], genus),
                                   parse_word_map(doc["inverse_images"], genus));
}

RibbonGraph parse_graph_doc(const Json& doc) {
  require_schema(doc, "hopfkit/graph/v1");
  require(doc.contains("vertices") && doc["vertices"].is_array(), errc::schema_violation,
          "graph document needs a vertices array");
  require(doc.contains("edges") && doc["edges"].is_array(), errc::schema_violation,
          "graph document needs an edges array");
  std::vector<VertexRec> vertices;
  for (const auto& v : doc["vertices"]) {
    require(v.is_object() && v.contains("rotation") && v["rotation"].is_array(),
            errc::schema_violation, "each vertex needs a rotation array");
    VertexRec rec;
    for (const auto& h : v["rotation"]) rec.rotation.push_back(h.get<int>());
    int cilium = v.value("cilium", 0);
    require(cilium >= 0 && (rec.rotation.empty() ? cilium == 0
                                                 : cilium < static_cast<int>(rec.rotation.size())),
            errc::schema_violation, "cilium index out of range");
    std::rotate(rec.rotation.begin(), rec.rotation.begin() + cilium, rec.rotation.end());
    vertices.push_back(std::move(rec));
  }
  std::vector<EdgeRec> edges;
  int e = 0;
  for (const auto& ed : doc["edges"]) {
    require(ed.is_array() && ed.size() == 2, errc::schema_violation,
            "each edge is a [source half, target half] pair");
    edges.push_back(EdgeRec{ed[0].get<int>(), ed[1].get<int>(), "e" + std::to_string(e++)});
  }
  if (doc.contains("edge_names")) {
    require(doc["edge_names"].is_array() && doc["edge_names"].size() == edges.size(),
            errc::schema_violation, "edge_names must name every edge");
    for (std::size_t i = 0; i < edges.size(); ++i) edges[i].name = doc["edge_names"][i].get<std::string>();
  }
  std::map<int, Side> face_cilia;
  if (doc.contains("face_cilia")) {
    require(doc["face_cilia"].is_object(), errc::schema_violation,
            "face_cilia maps face ids to sides");
    for (const auto& [key, value] : doc["face_cilia"].items()) {
      require(value.is_array() && value.size() == 2, errc::schema_violation,
              "face cilium is [edge, direction]");
      std::string dir = value[1].get<std::string>();
      require(dir == "forward" || dir == "backward", errc::schema_violation,
              "face cilium direction must be forward or backward");
      face_cilia[std::stoi(key)] = Side{value[0].get<int>(), dir == "forward"};
    }
  }
  return RibbonGraph(std::move(vertices), std::move(edges), std::move(face_cilia));
}

Json graph_to_doc(const RibbonGraph& g) {
  Json doc;
  doc["schema"] = "hopfkit/graph/v1";
  doc["vertices"] = Json::array();
  for (const auto& v : g.vertices()) {
    Json rec;
    rec["rotation"] = v.rotation;
    rec["cilium"] = 0;
    doc["vertices"].push_back(rec);
  }
  doc["edges"] = Json::array();
  Json names = Json::array();
  for (const auto& e : g.edges()) {
    doc["edges"].push_back(Json::array({e.src_half, e.tgt_half}));
    names.push_back(e.name);
  }
  doc["edge_names"] = names;
  if (!g.face_cilia().empty()) {
    Json fc = Json::object();
    for (const auto& [fid, side] : g.face_cilia())
      fc[std::to_string(fid)] = Json::array({side.edge, side.forward ? "forward" : "backward"});
    doc["face_cilia"] = fc;
  }
  return doc;
}

Json protected_set_to_doc(const ProtectedSet& p, const RibbonGraph& graph, const FiniteGroup& g) {
  Json doc;
  doc["flat_count"] = p.flat_count;
  doc["orbit_count"] = p.orbit_count();
  Json orbits = Json::array();
  for (const auto& rep : p.orbit_reps) {
    Json labels = Json::array();
    for (std::size_t e = 0; e < rep.size(); ++e) labels.push_back(g.name_of(rep[e]));
    orbits.push_back(labels);
  }
  doc["orbits"] = orbits;
  Json graph_summary;
  graph_summary["vertices"] = graph.num_vertices();
  graph_summary["edges"] = graph.num_edges();
  Json genus = Json::array();
  for (auto [c, gen] : graph.genus()) genus.push_back(Json::array({c, gen}));
  graph_summary["genus"] = genus;
  doc["graph"] = graph_summary;
  doc["group"] = g.name().empty() ? "unnamed" : g.name();
  return doc;
}

Json groupoid_to_doc(const FiniteGroupoid& g) {
  Json doc;
  doc["object_count"] = g.num_objects();
  doc["morphism_count"] = g.num_morphisms();
  Json objects = Json::array();
  for (int o = 0; o < g.num_objects(); ++o) objects.push_back(g.object_labels()[o]);
  doc["objects"] = objects;
  Json morphisms = Json::array();
  for (const auto& m : g.morphisms()) {
    Json rec;
    rec["source"] = g.object_labels()[m.src];
    rec["target"] = g.object_labels()[m.tgt];
    rec["representative"] = m.label;
    morphisms.push_back(rec);
  }
  doc["morphisms"] = morphisms;
  // a deterministic sample of the induced composition
  Json samples = Json::array();
  int emitted = 0;
  for (int f = 0; f < g.num_morphisms() && emitted < 8; ++f)
    for (int h = 0; h < g.num_morphisms() && emitted < 8; ++h) {
      if (!g.composable(h, f)) continue;
      samples.push_back(Json::array({h, f, g.compose(h, f)}));
      ++emitted;
    }
  doc["composition_samples"] = samples;
  Json components = Json::array();
  auto fp = g.fingerprint();
  for (auto [objects_in_comp, aut_order] : fp.components)
    components.push_back(Json::array({objects_in_comp, aut_order}));
  doc["components"] = components;
  return doc;
}

}  // namespace hopfkit
