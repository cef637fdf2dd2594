#include "dollo/report.hpp"

#include <json.hpp>

#include "dollo/errors.hpp"

namespace dollo {
namespace {

using Json = nlohmann::ordered_json;

Json edge_to_json(const Tree& tree, const Edge& e) {
  Json j;
  if (e.parent == k_root_parent) {
    j["parent"] = "rho'";
  } else {
    j["parent"] = e.parent;
  }
  j["child"] = e.child;
  j["parent_name"] = tree.node_name(e.parent);
  j["child_name"] = tree.node_name(e.child);
  return j;
}

Edge edge_from_json(const Json& j) {
  Edge e;
  if (j.at("parent").is_string()) {
    if (j.at("parent").get<std::string>() != "rho'")
      throw ParseError("unknown edge endpoint: " +
                       j.at("parent").get<std::string>());
    e.parent = k_root_parent;
  } else {
    e.parent = j.at("parent").get<NodeId>();
  }
  e.child = j.at("child").get<NodeId>();
  return e;
}

std::string edge_name(const Tree& tree, const Edge& e) {
  return tree.node_name(e.parent) + "->" + tree.node_name(e.child);
}

std::string to_tsv(const Tree& tree, const LabelingReport& r) {
  std::string out;
  out += "# character\t" + r.character.to_string() + "\n";
  out += "# k\t" + std::to_string(r.labeling.score_k) + "\n";
  out += "# birth_edge\t";
  out += r.labeling.birth_edge ? edge_name(tree, *r.labeling.birth_edge) : "none";
  out += "\n";
  for (const Edge& e : r.labeling.loss_edges)
    out += "# loss_edge\t" + edge_name(tree, e) + "\n";
  out += "node\tname\tstate\n";
  for (NodeId v = 0; v < tree.node_count(); ++v) {
    out += std::to_string(v) + "\t" + tree.node_name(v) + "\t" +
           std::to_string(r.labeling.node_states[v]) + "\n";
  }
  return out;
}

std::string to_annotated_newick(const Tree& tree, const LabelingReport& r) {
  std::string out;
  std::vector<std::pair<NodeId, int>> stack{{tree.root(), 0}};
  auto annotate = [&](NodeId v) {
    out += "[&state=" + std::to_string(r.labeling.node_states[v]) + "]";
  };
  while (!stack.empty()) {
    auto& [v, phase] = stack.back();
    if (tree.is_leaf(v)) {
      out += tree.leaf_label(v);
      annotate(v);
      stack.pop_back();
      continue;
    }
    if (phase == 0) {
      out.push_back('(');
      phase = 1;
      stack.emplace_back(tree.left(v), 0);
    } else if (phase == 1) {
      out.push_back(',');
      phase = 2;
      stack.emplace_back(tree.right(v), 0);
    } else {
      out.push_back(')');
      annotate(v);
      stack.pop_back();
    }
  }
  out += ";";
  return out;
}

}  // namespace

std::string write_labeling(const Tree& tree, const LabelingReport& report,
                           ReportFormat format) {
  switch (format) {
    case ReportFormat::tsv:
      return to_tsv(tree, report);
    case ReportFormat::annotated_newick:
      return to_annotated_newick(tree, report);
    case ReportFormat::json:
      break;
  }
  Json j;
  j["character"] = report.character.to_string();
  j["n"] = report.character.size();
  j["k"] = report.labeling.score_k;
  if (report.labeling.birth_edge) {
    j["birth_edge"] = edge_to_json(tree, *report.labeling.birth_edge);
  } else {
    j["birth_edge"] = nullptr;
  }
  j["loss_edges"] = Json::array();
  for (const Edge& e : report.labeling.loss_edges)
    j["loss_edges"].push_back(edge_to_json(tree, e));
  j["node_states"] = Json::array();
  for (NodeId v = 0; v < tree.node_count(); ++v) {
    Json entry;
    entry["node"] = v;
    entry["name"] = tree.node_name(v);
    entry["state"] = report.labeling.node_states[v];
    j["node_states"].push_back(entry);
  }
  return j.dump(2) + "\n";
}

LabelingReport read_labeling_json(const Tree& tree, std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("bad labeling json: ") + e.what());
  }
  try {
    LabelingReport r;
    r.character = parse_character(j.at("character").get<std::string>(), tree);
    r.labeling.score_k = j.at("k").get<int>();
    if (!j.at("birth_edge").is_null())
      r.labeling.birth_edge = edge_from_json(j.at("birth_edge"));
    for (const Json& e : j.at("loss_edges"))
      r.labeling.loss_edges.push_back(edge_from_json(e));
    r.labeling.node_states.assign(tree.node_count(), 0);
    for (const Json& entry : j.at("node_states")) {
      const NodeId v = entry.at("node").get<NodeId>();
      if (v < 0 || v >= tree.node_count())
        throw ParseError("node id out of range in labeling json");
      r.labeling.node_states[v] = entry.at("state").get<int>() ? 1 : 0;
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad labeling json: ") + e.what());
  }
}

}  // namespace dollo
