#pragma once

#include <array>
#include <map>
#include <string>
#include <unordered_set>
#include <vector>

#include "kidrank/textproc.hpp"

namespace kidrank {

// The seven objectionable categories, fixed in alphabetical order. The
// feature vector layout depends on this order never changing.
inline constexpr std::size_t kNumCategories = 7;
const std::array<std::string, kNumCategories>& category_names();

// Per-category term lists plus their union. Lists are data inputs; each
// file starts with "#category: <Name>" and carries one term per line.
struct TermLists {
  std::map<std::string, std::unordered_set<std::string>> per_category;
  std::unordered_set<std::string> all_terms;

  // Loads all seven <Name>.txt files from a directory and checks the
  // category set is exactly the expected seven.
  static TermLists load_dir(const std::string& dir,
                            std::size_t max_terms_per_list = 100);

  static TermLists from_map(
      std::map<std::string, std::unordered_set<std::string>> lists);

  const std::unordered_set<std::string>& list_for(
      const std::string& category) const;
};

// The 16 text features feeding the objectionability judge: per-category
// term prevalence and coverage, then misspelling prevalence and coverage.
struct ObjFeatures {
  std::array<double, kNumCategories> tp{};
  std::array<double, kNumCategories> tcov{};
  double mp = 0.0;
  double mc = 0.0;

  static constexpr std::size_t kDim = 2 * kNumCategories + 2;

  std::array<double, kDim> flat() const;
  static ObjFeatures from_flat(std::span<const double> values);
};

// Names of the 16 dimensions in flat() order (tp_<Cat>..., tcov_<Cat>...,
// mp, mc).
const std::vector<std::string>& obj_feature_names();

// Share of tokens that belong to the category list, with multiplicity.
// 0 for an empty term sequence.
double term_prevalence(const TermSequence& terms,
                       const std::unordered_set<std::string>& category_list);

// Share of the category list that occurs at least once in the snippet.
// Throws EmptyTermList for an empty list.
double term_coverage(const TermSequence& terms,
                     const std::unordered_set<std::string>& category_list);

// Share of tokens that are misspelled, with multiplicity. 0 when empty.
double misspelling_prevalence(const TermSequence& terms,
                              const SpellDictionary& dict);

// Over unique terms: misspellings that land in the union term list,
// divided by the number of unique misspellings. 0 when there are none.
double misspelling_coverage(const TermSequence& terms,
                            const TermLists& term_lists,
                            const SpellDictionary& dict);

// normalize() the snippet, then all 16 features in fixed category order.
ObjFeatures extract_obj_features(std::string_view snippet,
                                 const TermLists& term_lists,
                                 const Stopwords& stopwords,
                                 const LemmaRules& rules,
                                 const SpellDictionary& dict);

}  // namespace kidrank
