#pragma once

// Words over the alphabet {x_{n,eps} : n >= 1, eps in F_q^*} and sparse
// F_q-linear combinations of words, word pairs and word triples.

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "amzv/ff.hpp"

namespace amzv {

using ff::Code;
using ff::Elem;
using ff::Field;
using ff::FieldPtr;

/// x_{n,eps}. The character is stored as its field code.
struct Letter {
  std::uint16_t weight = 1;
  Code eps = 1;

  friend bool operator==(Letter, Letter) = default;
};

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  static Word letter(Letter l) { return Word({l}); }

  bool empty() const { return letters_.empty(); }
  int depth() const { return static_cast<int>(letters_.size()); }
  int weight() const;
  const std::vector<Letter>& letters() const { return letters_; }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  const Letter& front() const { return letters_.front(); }

  /// The word with its first letter removed.
  Word tail() const { return Word(std::vector<Letter>(letters_.begin() + 1, letters_.end())); }
  /// l followed by this word.
  Word prepend(Letter l) const;
  Word concat(const Word& other) const;

  /// True when every character is 1 (a word over the MZV sub-alphabet).
  bool is_mzv() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (const Letter& l : w.letters()) {
      h ^= (static_cast<std::size_t>(l.weight) << 8) | l.eps;
      h *= 0x100000001b3ull;
    }
    return h ^ static_cast<std::size_t>(w.depth());
  }
};

using WordPair = std::pair<Word, Word>;
using WordTriple = std::array<Word, 3>;

struct WordPairHash {
  std::size_t operator()(const WordPair& p) const noexcept {
    WordHash h;
    return h(p.first) * 0x9e3779b97f4a7c15ull ^ h(p.second);
  }
};

struct WordTripleHash {
  std::size_t operator()(const WordTriple& t) const noexcept {
    WordHash h;
    return (h(t[0]) * 0x9e3779b97f4a7c15ull ^ h(t[1])) * 0x9e3779b97f4a7c15ull ^ h(t[2]);
  }
};

/// Canonical total order on words: weight, then depth, then letters
/// lexicographically by (weight, exponent of the character).
class WordOrder {
 public:
  explicit WordOrder(const Field& field) : field_(&field) {}
  std::strong_ordering compare(const Word& a, const Word& b) const;
  bool operator()(const Word& a, const Word& b) const { return compare(a, b) < 0; }
  /// Pairs: total weight, total depth, then left, then right.
  bool operator()(const WordPair& a, const WordPair& b) const;
  bool operator()(const WordTriple& a, const WordTriple& b) const;

 private:
  const Field* field_;
};

/// A finite F_q-linear combination of keys. Zero coefficients are never
/// stored, so structural equality is equality of vectors.
template <class Key, class Hash>
class LinComb {
 public:
  using Map = std::unordered_map<Key, Code, Hash>;

  LinComb() = default;
  explicit LinComb(FieldPtr field) : field_(std::move(field)) {}
  LinComb(FieldPtr field, const Key& key) : field_(std::move(field)) { terms_.emplace(key, Code{1}); }

  const FieldPtr& field_ptr() const { return field_; }
  const Field& field() const { return *field_; }
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  Elem coeff(const Key& key) const {
    auto it = terms_.find(key);
    return {field_.get(), it == terms_.end() ? Code{0} : it->second};
  }

  /// this += c * key
  void add_term(const Key& key, Code c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second = field_->add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }
  void add_term(Key&& key, Code c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(key), c);
    if (!inserted) {
      it->second = field_->add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }
  void add_term(const Key& key, Elem c) { add_term(key, c.code()); }

  /// this += c * other
  void add_scaled(const LinComb& other, Code c) {
    if (c == 0) return;
    if (c == 1) {
      for (const auto& [k, v] : other.terms_) add_term(k, v);
    } else {
      for (const auto& [k, v] : other.terms_) add_term(k, field_->mul(v, c));
    }
  }

  LinComb& operator+=(const LinComb& other) {
    adopt_field(other);
    add_scaled(other, 1);
    return *this;
  }
  LinComb& operator-=(const LinComb& other) {
    adopt_field(other);
    add_scaled(other, field_->neg(1));
    return *this;
  }
  LinComb& operator*=(Elem c) {
    if (c.is_zero()) {
      terms_.clear();
    } else {
      for (auto& [k, v] : terms_) v = field_->mul(v, c.code());
    }
    return *this;
  }
  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(Elem c, LinComb a) { return a *= c; }
  LinComb operator-() const {
    LinComb out(*this);
    for (auto& [k, v] : out.terms_) v = field_->neg(v);
    return out;
  }

  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

  /// Terms in canonical order.
  std::vector<std::pair<Key, Code>> sorted_terms() const {
    std::vector<std::pair<Key, Code>> out(terms_.begin(), terms_.end());
    WordOrder order(*field_);
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return order(a.first, b.first); });
    return out;
  }

 private:
  void adopt_field(const LinComb& other) {
    if (!field_) field_ = other.field_;
  }

  FieldPtr field_;
  Map terms_;
};

using Element = LinComb<Word, WordHash>;
using TensorElement = LinComb<WordPair, WordPairHash>;
using Tensor3 = LinComb<WordTriple, WordTripleHash>;

inline Element element_of(const FieldPtr& field, const Word& w) { return Element(field, w); }
inline Element unit_element(const FieldPtr& field) { return Element(field, Word{}); }

/// Letter with the character given as a field element; throws when eps = 0
/// or n = 0.
Letter make_letter(int n, Elem eps);

/// Grammar: "1" | ("x[" n "," j "]")+ with j the exponent of the character.
Word parse_word(std::string_view text, const Field& field);
std::string format_word(const Word& w, const Field& field);

/// Grammar: "0" | term (" + " term)*, term = [coeff "*"] word,
/// coeff = "g^" j | residue.
Element parse_element(std::string_view text, const FieldPtr& field);
std::string format_element(const Element& e);

/// Pairs printed "left ⊗ right"; with ascii = true, "left (x) right".
/// Parsing accepts either separator.
TensorElement parse_tensor(std::string_view text, const FieldPtr& field);
std::string format_tensor(const TensorElement& t, bool ascii = false);
std::string format_tensor3(const Tensor3& t, bool ascii = false);

/// Bilinear extension of concatenation.
Element concat(const Element& a, const Element& b);

/// All words of weight exactly w, in canonical order; [1] for w = 0.
std::vector<Word> basis_words(int w, const Field& field);
/// All words of weight <= w, in canonical order.
std::vector<Word> basis_words_up_to(int w, const Field& field);
/// Words over the MZV sub-alphabet (all characters 1) of weight exactly w,
/// i.e. the compositions of w in lexicographic order.
std::vector<Word> mzv_words(int w);

/// Weight-graded parts of e, keyed by weight.
std::vector<std::pair<int, Element>> homogeneous_parts(const Element& e);

}  // namespace amzv
