#pragma once

// Products on the word algebra: the coefficients Delta^i_{r,s}, the diamond,
// shuffle and triangle products, horizontal maps and the bracket operator.

#include <map>
#include <tuple>
#include <unordered_map>

#include "amzv/word.hpp"

namespace amzv {

/// C(a, b) mod p for any integer a and b >= 0. Lucas' theorem for a >= 0,
/// C(a, b) = (-1)^b C(b - a - 1, b) for a < 0.
int binom_mod_p(long long a, long long b, int p);

/// Delta^i_{r,s} in the prime field, from the closed formula. Throws
/// std::out_of_range unless r, s >= 1 and 1 <= i <= r + s - 1.
Elem delta_coeff(int r, int s, int i, const Field& field);

/// Test-only corruption of the product structure.
struct ProductFaults {
  /// Adds 1 to Delta^1_{1,1}.
  bool corrupt_delta = false;
};

/// Memoizing evaluator for the recursive products. Results on word pairs are
/// cached for the lifetime of the engine, keyed on the ordered pair. Not
/// thread-safe; use one engine per worker.
class ProductEngine {
 public:
  explicit ProductEngine(FieldPtr field, ProductFaults faults = {});

  const FieldPtr& field_ptr() const { return field_; }
  const Field& field() const { return *field_; }

  /// Delta^i_{r,s} as used by this engine (honours fault injection).
  Code delta(int r, int s, int i);

  const Element& shuffle(const Word& a, const Word& b);
  const Element& diamond(const Word& a, const Word& b);
  Element triangle(const Word& a, const Word& b);

  Element shuffle(const Element& a, const Element& b);
  Element diamond(const Element& a, const Element& b);
  Element triangle(const Element& a, const Element& b);

  /// [a] for a word over the MZV sub-alphabet; throws std::invalid_argument
  /// on a nontrivial character.
  Element bracket(const Word& a);

  std::size_t cache_size() const { return shuffle_cache_.size() + diamond_cache_.size(); }

 private:
  Element shuffle_word_element(const Word& a, const Element& b);

  FieldPtr field_;
  ProductFaults faults_;
  std::map<std::tuple<int, int, int>, Code> delta_cache_;
  std::unordered_map<WordPair, Element, WordPairHash> shuffle_cache_;
  std::unordered_map<WordPair, Element, WordPairHash> diamond_cache_;
};

/// phi_alpha: multiplies the first character of every word by alpha; the
/// empty word is fixed. Throws std::invalid_argument when alpha = 0.
Element horizontal(Elem alpha, const Element& a);
Word horizontal(Elem alpha, const Word& w);

/// l * e, prepending a letter to every word of e.
Element prepend(Letter l, const Element& e);

}  // namespace amzv
