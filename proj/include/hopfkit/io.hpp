#pragma once

#include <json.hpp>
#include <string>

#include "hopfkit/groupoid.hpp"
#include "hopfkit/lattice.hpp"
#include "hopfkit/mcg.hpp"
#include "hopfkit/ribbon.hpp"
#include "hopfkit/xmod.hpp"

namespace hopfkit {

using Json = nlohmann::json;

/// FNV-1a/64 hex digest; embedded into result documents for reproducibility.
std::string fnv_digest(const std::string& bytes);

Json load_json_file(const std::string& path);
std::string read_file(const std::string& path);

/// {"schema":"hopfkit/group/v1", ...} with either {"order","mult_table"} or
/// {"degree","permutation_generators"}; element_names optional.
FiniteGroup parse_group_doc(const Json& doc);
/// {"schema":"hopfkit/xmod/v1","B":{...},"A":{...},"action":[[...]],"boundary":[...]}.
CrossedModule parse_xmod_doc(const Json& doc);
/// {"schema":"hopfkit/aut/v1","genus":1,"images":{"a1":"a1","b1":"b1 a1^-1"},
///  "inverse_images":{"a1":"a1","b1":"b1 a1"}}; words are space-separated
/// generator tokens with an optional ^-1.
SurfaceAutomorphism parse_automorphism_doc(const Json& doc);

/// {"schema":"hopfkit/graph/v1","vertices":[{"rotation":[...],"cilium":0}],
///  "edges":[[src,tgt],...],"edge_names":[...],"face_cilia":{"0":[edge,"forward"]}}.
RibbonGraph parse_graph_doc(const Json& doc);

Json graph_to_doc(const RibbonGraph& g);
Json protected_set_to_doc(const ProtectedSet& p, const RibbonGraph& graph, const FiniteGroup& g);
Json groupoid_to_doc(const FiniteGroupoid& g);

}  // namespace hopfkit
