#include "kidrank/textproc.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include "kidrank/error.hpp"

namespace kidrank {

namespace {

bool ascii_alnum(char32_t cp) {
  return (cp >= '0' && cp <= '9') || (cp >= 'a' && cp <= 'z') ||
         (cp >= 'A' && cp <= 'Z');
}

// Word constituents. ASCII alphanumerics, Latin-1 letters, and (permissive
// default) letters of other scripts; Latin-1 symbol block, the General
// Punctuation block and currency signs are separators.
bool word_codepoint(char32_t cp) {
  if (cp < 0x80) return ascii_alnum(cp);
  if (cp >= 0x00A0 && cp <= 0x00BF) return false;
  if (cp == 0x00D7 || cp == 0x00F7) return false;
  if (cp >= 0x2000 && cp <= 0x206F) return false;
  if (cp >= 0x20A0 && cp <= 0x20CF) return false;
  return true;
}

// Decodes one UTF-8 code point starting at i; advances i. Malformed bytes
// decode as U+FFFD one byte at a time so tokenization never fails.
char32_t decode_utf8(std::string_view text, std::size_t& i) {
  unsigned char b0 = static_cast<unsigned char>(text[i]);
  std::size_t len = 1;
  char32_t cp = 0xFFFD;
  if (b0 < 0x80) {
    cp = b0;
  } else if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    ++i;
    return 0xFFFD;
  }
  if (i + len > text.size()) {
    ++i;
    return 0xFFFD;
  }
  for (std::size_t k = 1; k < len; ++k) {
    unsigned char bk = static_cast<unsigned char>(text[i + k]);
    if ((bk & 0xC0) != 0x80) {
      ++i;
      return 0xFFFD;
    }
    cp = (cp << 6) | (bk & 0x3F);
  }
  i += len;
  return cp;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

char32_t ascii_lower(char32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 32;
  return cp;
}

bool all_ascii_lower_alpha(const std::string& w) {
  return std::all_of(w.begin(), w.end(),
                     [](char c) { return c >= 'a' && c <= 'z'; });
}

bool all_digits(std::string_view w) {
  return !w.empty() && std::all_of(w.begin(), w.end(), [](char c) {
    return c >= '0' && c <= '9';
  });
}

std::string ascii_lower_copy(std::string_view w) {
  std::string out;
  out.reserve(w.size());
  for (char c : w) {
    out.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c + 32) : c);
  }
  return out;
}

bool ends_with(const std::string& w, std::string_view suffix) {
  return w.size() >= suffix.size() &&
         w.compare(w.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Porter-style consonant test: y counts as a vowel after a consonant.
bool is_consonant(const std::string& w, std::size_t i) {
  char c = w[i];
  if (c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u') return false;
  if (c == 'y') return i == 0 ? true : !is_consonant(w, i - 1);
  return true;
}

bool has_vowel(const std::string& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!is_consonant(w, i)) return true;
  }
  return false;
}

// Porter's measure: the number of vowel->consonant transitions.
int measure(const std::string& w) {
  int m = 0;
  bool prev_vowel = false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    bool vowel = !is_consonant(w, i);
    if (prev_vowel && !vowel) ++m;
    prev_vowel = vowel;
  }
  return m;
}

// consonant-vowel-consonant ending, final consonant not w/x/y
bool ends_cvc(const std::string& w) {
  std::size_t n = w.size();
  if (n < 3) return false;
  char last = w[n - 1];
  if (last == 'w' || last == 'x' || last == 'y') return false;
  return is_consonant(w, n - 3) && !is_consonant(w, n - 2) &&
         is_consonant(w, n - 1);
}

// Applied after stripping -ed / -ing.
std::string fix_stripped_stem(std::string stem) {
  if (ends_with(stem, "at") || ends_with(stem, "bl") || ends_with(stem, "iz")) {
    return stem + "e";
  }
  std::size_t n = stem.size();
  if (n >= 2 && stem[n - 1] == stem[n - 2] && is_consonant(stem, n - 1) &&
      stem[n - 1] != 'l' && stem[n - 1] != 's' && stem[n - 1] != 'z') {
    stem.pop_back();
    return stem;
  }
  if (measure(stem) == 1 && ends_cvc(stem)) return stem + "e";
  return stem;
}

}  // namespace

TermSequence TermSequence::from_terms(std::vector<std::string> ordered) {
  TermSequence seq;
  seq.terms = std::move(ordered);
  seq.unique_terms.insert(seq.terms.begin(), seq.terms.end());
  return seq;
}

void LemmaRules::add_exception(std::string surface, std::string lemma) {
  exceptions_[std::move(surface)] = std::move(lemma);
}

LemmaRules LemmaRules::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open lemma table " + path);
  LemmaRules rules;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 >= line.size()) {
      throw Error(ErrorCode::ParseError, path + ":" + std::to_string(line_no) +
                                              ": expected surface<TAB>lemma");
    }
    rules.add_exception(ascii_lower_copy(line.substr(0, tab)),
                        ascii_lower_copy(line.substr(tab + 1)));
  }
  return rules;
}

std::string LemmaRules::lemma(const std::string& word) const {
  auto hit = exceptions_.find(word);
  if (hit != exceptions_.end()) return hit->second;
  if (!all_ascii_lower_alpha(word) || word.size() < 4) return word;

  const std::string& w = word;
  // plurals
  if (ends_with(w, "sses")) return w.substr(0, w.size() - 2);
  if (ends_with(w, "ies") && w.size() >= 5)
    return w.substr(0, w.size() - 3) + "y";
  if (ends_with(w, "ches") || ends_with(w, "shes"))
    return w.substr(0, w.size() - 2);
  if (ends_with(w, "xes") || ends_with(w, "zes"))
    return w.substr(0, w.size() - 2);
  if (ends_with(w, "ses")) {
    // bus+es / virus+es keep the stem; size+s style drops one s
    std::string stem = w.substr(0, w.size() - 2);
    if (ends_with(stem, "us") || ends_with(stem, "is")) return stem;
    return w.substr(0, w.size() - 1);
  }
  if (ends_with(w, "s") && !ends_with(w, "ss") && !ends_with(w, "us") &&
      !ends_with(w, "is")) {
    return w.substr(0, w.size() - 1);
  }
  // past
  if (ends_with(w, "ied") && w.size() >= 5)
    return w.substr(0, w.size() - 3) + "y";
  if (ends_with(w, "eed")) {
    if (measure(w.substr(0, w.size() - 3)) > 0)
      return w.substr(0, w.size() - 1);
    return w;
  }
  if (ends_with(w, "ed")) {
    std::string stem = w.substr(0, w.size() - 2);
    if (has_vowel(stem)) return fix_stripped_stem(std::move(stem));
    return w;
  }
  // progressive
  if (ends_with(w, "ing")) {
    std::string stem = w.substr(0, w.size() - 3);
    if (stem.size() >= 2 && has_vowel(stem))
      return fix_stripped_stem(std::move(stem));
    return w;
  }
  return w;
}

Stopwords load_stopwords(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open stopword file " + path);
  Stopwords words;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    words.insert(ascii_lower_copy(line));
  }
  return words;
}

SpellDictionary SpellDictionary::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open dictionary " + path);
  SpellDictionary dict;
  dict.source = path;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    dict.words.insert(ascii_lower_copy(line));
  }
  if (dict.words.empty()) {
    throw Error(ErrorCode::ParseError, "dictionary " + path + " is empty");
  }
  return dict;
}

bool SpellDictionary::contains(std::string_view term) const {
  return words.count(ascii_lower_copy(term)) > 0;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  std::size_t i = 0;
  while (i < text.size()) {
    char32_t cp = decode_utf8(text, i);
    if (word_codepoint(cp)) {
      append_utf8(current, ascii_lower(cp));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

TermSequence normalize(std::string_view text, const Stopwords& stopwords,
                       const LemmaRules& rules) {
  std::vector<std::string> out;
  for (std::string& token : tokenize(text)) {
    if (stopwords.count(token)) continue;
    std::string lemma = rules.lemma(token);
    if (lemma.empty() || stopwords.count(lemma)) continue;
    out.push_back(std::move(lemma));
  }
  return TermSequence::from_terms(std::move(out));
}

bool is_misspelled(std::string_view term, const SpellDictionary& dict) {
  if (term.empty()) return false;
  if (all_digits(term)) return false;
  if (term.size() == 1) return false;
  return !dict.contains(term);
}

}  // namespace kidrank
