#pragma once

#include <string>
#include <string_view>

#include "dollo/character.hpp"
#include "dollo/labeling.hpp"
#include "dollo/tree.hpp"

namespace dollo {

/// A labeling bundled with the character it realizes, ready for output.
struct LabelingReport {
  CharacterVector character;
  DolloLabeling labeling;

  friend bool operator==(const LabelingReport& a, const LabelingReport& b) {
    return a.character == b.character &&
           a.labeling.node_states == b.labeling.node_states &&
           a.labeling.score_k == b.labeling.score_k &&
           a.labeling.birth_edge == b.labeling.birth_edge &&
           a.labeling.loss_edges == b.labeling.loss_edges;
  }
};

enum class ReportFormat { json, tsv, annotated_newick };

/// Deterministic serialization. The virtual ancestor above the root is
/// rendered as "rho'" wherever it appears as an edge endpoint. The
/// annotated form attaches states as bracketed comments, which Newick
/// parsing skips, so the topology round-trips.
std::string write_labeling(const Tree& tree, const LabelingReport& report,
                           ReportFormat format);

/// Inverse of write_labeling for the json format.
LabelingReport read_labeling_json(const Tree& tree, std::string_view text);

}  // namespace dollo
