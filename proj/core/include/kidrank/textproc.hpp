#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace kidrank {

// Result of the normalization pipeline. terms keeps snippet order with
// multiplicity; unique_terms is the set of distinct members.
struct TermSequence {
  std::vector<std::string> terms;
  std::unordered_set<std::string> unique_terms;

  static TermSequence from_terms(std::vector<std::string> ordered);

  std::size_t size() const { return terms.size(); }
  bool empty() const { return terms.empty(); }
};

// Deterministic suffix lemmatizer: plural, past and progressive rules plus
// an exception table loaded from a tab-separated "surface<TAB>lemma" file.
// Rules only touch all-ASCII-alphabetic tokens; anything else passes through.
class LemmaRules {
 public:
  LemmaRules() = default;

  static LemmaRules load(const std::string& path);

  void add_exception(std::string surface, std::string lemma);

  std::string lemma(const std::string& word) const;

 private:
  std::unordered_map<std::string, std::string> exceptions_;
};

using Stopwords = std::unordered_set<std::string>;

// One word per line, UTF-8, lowercased on load.
Stopwords load_stopwords(const std::string& path);

// Wordlist spell dictionary; lookup is case-insensitive.
struct SpellDictionary {
  std::unordered_set<std::string> words;
  std::string source;

  static SpellDictionary load(const std::string& path);

  bool contains(std::string_view term) const;
};

// Lowercased word tokens. Splits on non-alphanumeric boundaries, UTF-8
// aware: multi-byte letters survive, general punctuation (em dashes,
// ellipses, curly quotes) does not. Hyphenated words split into parts.
std::vector<std::string> tokenize(std::string_view text);

// tokenize + stop-word removal + lemmatization. Stop words are dropped on
// both the surface form and the lemma so the result is a fixed point of
// normalize itself.
TermSequence normalize(std::string_view text, const Stopwords& stopwords,
                       const LemmaRules& rules);

// True iff term is absent from the dictionary. Pure numbers and single
// letters are never misspellings.
bool is_misspelled(std::string_view term, const SpellDictionary& dict);

}  // namespace kidrank
