#include "kidrank/objectionability.hpp"

#include <algorithm>
#include <fstream>

#include "kidrank/error.hpp"

namespace kidrank {

namespace {

std::string ascii_lower_copy(const std::string& s) {
  std::string out = s;
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c + 32);
  }
  return out;
}

}  // namespace

const std::array<std::string, kNumCategories>& category_names() {
  static const std::array<std::string, kNumCategories> names = {
      "Abortion",       "Drugs",       "Gambling", "HateSpeech",
      "IllegalAffairs", "Pornography", "Violence"};
  return names;
}

TermLists TermLists::from_map(
    std::map<std::string, std::unordered_set<std::string>> lists) {
  TermLists result;
  for (const std::string& name : category_names()) {
    auto it = lists.find(name);
    if (it == lists.end()) {
      throw Error(ErrorCode::ParseError, "missing term list for " + name);
    }
    if (it->second.empty()) {
      throw Error(ErrorCode::EmptyTermList, "term list " + name + " is empty");
    }
    result.all_terms.insert(it->second.begin(), it->second.end());
  }
  if (lists.size() != kNumCategories) {
    throw Error(ErrorCode::ParseError,
                "expected exactly 7 categories, got " +
                    std::to_string(lists.size()));
  }
  result.per_category = std::move(lists);
  return result;
}

TermLists TermLists::load_dir(const std::string& dir,
                              std::size_t max_terms_per_list) {
  std::map<std::string, std::unordered_set<std::string>> lists;
  for (const std::string& name : category_names()) {
    std::string path = dir + "/" + name + ".txt";
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open term list " + path);
    std::string line;
    if (!std::getline(in, line)) {
      throw Error(ErrorCode::ParseError, path + ": empty file");
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "#category: " + name) {
      throw Error(ErrorCode::ParseError,
                  path + ": first line must be '#category: " + name + "'");
    }
    std::unordered_set<std::string> terms;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line.front() == '#') continue;
      terms.insert(ascii_lower_copy(line));
    }
    if (terms.size() > max_terms_per_list) {
      throw Error(ErrorCode::ParseError,
                  path + ": " + std::to_string(terms.size()) +
                      " terms exceeds the per-list cap of " +
                      std::to_string(max_terms_per_list));
    }
    lists[name] = std::move(terms);
  }
  return from_map(std::move(lists));
}

const std::unordered_set<std::string>& TermLists::list_for(
    const std::string& category) const {
  auto it = per_category.find(category);
  if (it == per_category.end()) {
    throw Error(ErrorCode::ParseError, "unknown category " + category);
  }
  return it->second;
}

std::array<double, ObjFeatures::kDim> ObjFeatures::flat() const {
  std::array<double, kDim> out{};
  for (std::size_t i = 0; i < kNumCategories; ++i) out[i] = tp[i];
  for (std::size_t i = 0; i < kNumCategories; ++i) {
    out[kNumCategories + i] = tcov[i];
  }
  out[2 * kNumCategories] = mp;
  out[2 * kNumCategories + 1] = mc;
  return out;
}

ObjFeatures ObjFeatures::from_flat(std::span<const double> values) {
  if (values.size() != kDim) {
    throw Error(ErrorCode::SchemaMismatch,
                "expected 16 feature values, got " +
                    std::to_string(values.size()));
  }
  ObjFeatures f;
  for (std::size_t i = 0; i < kNumCategories; ++i) f.tp[i] = values[i];
  for (std::size_t i = 0; i < kNumCategories; ++i) {
    f.tcov[i] = values[kNumCategories + i];
  }
  f.mp = values[2 * kNumCategories];
  f.mc = values[2 * kNumCategories + 1];
  return f;
}

const std::vector<std::string>& obj_feature_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const std::string& cat : category_names()) out.push_back("tp_" + cat);
    for (const std::string& cat : category_names()) {
      out.push_back("tcov_" + cat);
    }
    out.push_back("mp");
    out.push_back("mc");
    return out;
  }();
  return names;
}

double term_prevalence(const TermSequence& terms,
                       const std::unordered_set<std::string>& category_list) {
  if (terms.empty()) return 0.0;
  std::size_t hits = 0;
  for (const std::string& term : terms.terms) {
    if (category_list.count(term)) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(terms.size());
}

double term_coverage(const TermSequence& terms,
                     const std::unordered_set<std::string>& category_list) {
  if (category_list.empty()) {
    throw Error(ErrorCode::EmptyTermList, "coverage over an empty term list");
  }
  std::size_t covered = 0;
  for (const std::string& term : category_list) {
    if (terms.unique_terms.count(term)) ++covered;
  }
  return static_cast<double>(covered) /
         static_cast<double>(category_list.size());
}

double misspelling_prevalence(const TermSequence& terms,
                              const SpellDictionary& dict) {
  if (terms.empty()) return 0.0;
  std::size_t misspelled = 0;
  for (const std::string& term : terms.terms) {
    if (is_misspelled(term, dict)) ++misspelled;
  }
  return static_cast<double>(misspelled) / static_cast<double>(terms.size());
}

double misspelling_coverage(const TermSequence& terms,
                            const TermLists& term_lists,
                            const SpellDictionary& dict) {
  std::size_t misspelled = 0;
  std::size_t in_lists = 0;
  for (const std::string& term : terms.unique_terms) {
    if (!is_misspelled(term, dict)) continue;
    ++misspelled;
    if (term_lists.all_terms.count(term)) ++in_lists;
  }
  if (misspelled == 0) return 0.0;
  return static_cast<double>(in_lists) / static_cast<double>(misspelled);
}

ObjFeatures extract_obj_features(std::string_view snippet,
                                 const TermLists& term_lists,
                                 const Stopwords& stopwords,
                                 const LemmaRules& rules,
                                 const SpellDictionary& dict) {
  TermSequence terms = normalize(snippet, stopwords, rules);
  ObjFeatures features;
  const auto& names = category_names();
  for (std::size_t i = 0; i < kNumCategories; ++i) {
    const auto& list = term_lists.list_for(names[i]);
    features.tp[i] = term_prevalence(terms, list);
    features.tcov[i] = term_coverage(terms, list);
  }
  features.mp = misspelling_prevalence(terms, dict);
  features.mc = misspelling_coverage(terms, term_lists, dict);
  return features;
}

}  // namespace kidrank
