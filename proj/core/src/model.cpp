#include "kidrank/model.hpp"

#include <cmath>

#include "kidrank/error.hpp"

namespace kidrank {

double gain(int label, GainMapping mapping) {
  switch (mapping) {
    case GainMapping::Exp2:
      return std::exp2(static_cast<double>(label)) - 1.0;
    case GainMapping::Linear:
      return static_cast<double>(label);
  }
  return 0.0;
}

const JudgedList& validate_list(const JudgedList& list) {
  bool seen_ideal = false;
  std::size_t labeled = 0;
  for (const Resource& res : list.resources) {
    if (res.is_ideal) {
      if (seen_ideal) {
        throw Error(ErrorCode::DuplicateIdeal,
                    "second ideal resource " + res.doc_id() + " in query " +
                        list.query_id);
      }
      seen_ideal = true;
      if (!res.label || *res.label != 2) {
        throw Error(ErrorCode::MissingLabels,
                    "ideal resource " + res.doc_id() + " must carry label 2");
      }
    }
    if (res.is_known_bad && res.label && *res.label != 0) {
      throw Error(ErrorCode::MissingLabels,
                  "known-bad resource " + res.doc_id() + " must carry label 0");
    }
    if (res.label) {
      if (*res.label < 0 || *res.label > 2) {
        throw Error(ErrorCode::MissingLabels,
                    "label out of {0,1,2} on " + res.doc_id());
      }
      ++labeled;
    }
    if (res.snippet.empty() && !res.is_known_bad) {
      throw Error(ErrorCode::EmptySnippet,
                  "empty snippet on " + res.doc_id() + " in query " +
                      list.query_id);
    }
  }
  if (labeled != 0 && labeled != list.resources.size()) {
    throw Error(ErrorCode::MissingLabels,
                "query " + list.query_id + " labels only " +
                    std::to_string(labeled) + " of " +
                    std::to_string(list.resources.size()) + " resources");
  }
  return list;
}

}  // namespace kidrank
