#pragma once

#include <optional>
#include <string>
#include <vector>

namespace kidrank {

// One retrieved web result. The snippet stands in for page content
// throughout the pipeline; full pages are never fetched.
struct Resource {
  std::string url;
  std::string title;
  std::string snippet;
  int source_rank = 1;  // position returned by the upstream engine, 1-based
  std::optional<int> label;  // relevance in {0,1,2} when judged
  bool is_known_bad = false;
  bool is_ideal = false;

  // doc_id is the URL unless callers assign explicit ids elsewhere
  const std::string& doc_id() const { return url; }
};

// A query with its ordered resources — the unit of training and evaluation.
struct JudgedList {
  std::string query_id;
  std::string query_text;
  std::vector<Resource> resources;
};

// Per-resource scores produced by the reward and risk sides.
struct ScoreTriple {
  double s_read = 0.0;  // grade-level units, [0, 13]
  double s_edu = 0.0;   // [0, 1]
  double s_bad = 0.0;   // [0, 1]
};

// One feature row of a learning-to-rank dataset.
struct LtrRow {
  std::string query_id;
  std::string doc_id;
  int label = 0;                 // {0,1,2}
  std::vector<double> features;  // length = feature schema length
  double cost = 0.0;             // [0,1], defaults to s_bad upstream
};

// The canonical feature schema emitted by the extraction pipeline.
// Ablation masks select subsets of these names.
inline const std::vector<std::string>& default_feature_schema() {
  static const std::vector<std::string> schema = {"s_read", "s_edu", "s_bad",
                                                  "mixer"};
  return schema;
}

enum class GainMapping { Exp2, Linear };

// Relevance gain. Exp2 gives {0,1,3} over labels {0,1,2}.
double gain(int label, GainMapping mapping = GainMapping::Exp2);

// Checks the JudgedList invariants and returns the list unchanged.
// Throws Error with DuplicateIdeal, MissingLabels or EmptySnippet
// (message names the offending doc_id).
const JudgedList& validate_list(const JudgedList& list);

}  // namespace kidrank
