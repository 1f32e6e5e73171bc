#include "amzv/prod.hpp"

#include <stdexcept>

namespace amzv {

int binom_mod_p(long long a, long long b, int p) {
  if (b < 0) return 0;
  if (b == 0) return 1 % p;
  if (a < 0) {
    const int r = binom_mod_p(b - a - 1, b, p);
    return (b % 2 == 0 || r == 0) ? r : p - r;
  }
  if (b > a) return 0;
  // Lucas: product of digit binomials in base p.
  long long result = 1;
  while (a > 0 || b > 0) {
    const long long ad = a % p;
    const long long bd = b % p;
    if (bd > ad) return 0;
    // C(ad, bd) mod p with ad < p: multiplicative formula using inverses.
    long long num = 1, den = 1;
    for (long long i = 0; i < bd; ++i) {
      num = num * ((ad - i) % p) % p;
      den = den * ((i + 1) % p) % p;
    }
    // den is a unit mod p since bd < p.
    long long inv = 1, base = den, e = p - 2;
    while (e > 0) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    result = result * (num * inv % p) % p;
    a /= p;
    b /= p;
  }
  return static_cast<int>(result);
}

Elem delta_coeff(int r, int s, int i, const Field& field) {
  if (r < 1 || s < 1 || i < 1 || i > r + s - 1)
    throw std::out_of_range("Delta^" + std::to_string(i) + "_{" + std::to_string(r) + "," + std::to_string(s) + "} out of range");
  if (i % (field.q() - 1) != 0) return field.zero();
  const int p = field.p();
  const long long first = binom_mod_p(i - 1, r - 1, p) * ((r - 1) % 2 == 0 ? 1 : -1);
  const long long second = binom_mod_p(i - 1, s - 1, p) * ((s - 1) % 2 == 0 ? 1 : -1);
  return field.from_int(first + second);
}

ProductEngine::ProductEngine(FieldPtr field, ProductFaults faults) : field_(std::move(field)), faults_(faults) {}

Code ProductEngine::delta(int r, int s, int i) {
  const auto key = std::make_tuple(r, s, i);
  if (auto it = delta_cache_.find(key); it != delta_cache_.end()) return it->second;
  Code value = delta_coeff(r, s, i, *field_).code();
  if (faults_.corrupt_delta && r == 1 && s == 1 && i == 1) value = field_->add(value, 1);
  delta_cache_.emplace(key, value);
  return value;
}

const Element& ProductEngine::shuffle(const Word& a, const Word& b) {
  WordPair key{a, b};
  if (auto it = shuffle_cache_.find(key); it != shuffle_cache_.end()) return it->second;
  Element result(field_);
  if (a.empty()) {
    result.add_term(b, 1);
  } else if (b.empty()) {
    result.add_term(a, 1);
  } else {
    const Word a_tail = a.tail();
    const Word b_tail = b.tail();
    for (const auto& [w, c] : shuffle(a_tail, b)) result.add_term(w.prepend(a.front()), c);
    for (const auto& [w, c] : shuffle(a, b_tail)) result.add_term(w.prepend(b.front()), c);
    result += diamond(a, b);
  }
  return shuffle_cache_.emplace(std::move(key), std::move(result)).first->second;
}

const Element& ProductEngine::diamond(const Word& a, const Word& b) {
  WordPair key{a, b};
  if (auto it = diamond_cache_.find(key); it != diamond_cache_.end()) return it->second;
  Element result(field_);
  if (a.empty()) {
    result.add_term(b, 1);
  } else if (b.empty()) {
    result.add_term(a, 1);
  } else {
    const int wa = a.front().weight;
    const int wb = b.front().weight;
    const Code chi = field_->mul(a.front().eps, b.front().eps);
    const Element& tails = shuffle(a.tail(), b.tail());
    for (const auto& [w, c] : tails) result.add_term(w.prepend(Letter{static_cast<std::uint16_t>(wa + wb), chi}), c);
    for (int j = 1; j < wa + wb; ++j) {
      const Code d = delta(wa, wb, j);
      if (d == 0) continue;
      const Letter head{static_cast<std::uint16_t>(wa + wb - j), chi};
      const Element inner = shuffle_word_element(Word::letter(Letter{static_cast<std::uint16_t>(j), Code{1}}), tails);
      for (const auto& [w, c] : inner) result.add_term(w.prepend(head), field_->mul(c, d));
    }
  }
  return diamond_cache_.emplace(std::move(key), std::move(result)).first->second;
}

Element ProductEngine::triangle(const Word& a, const Word& b) {
  Element result(field_);
  if (a.empty()) {
    result.add_term(b, 1);
  } else if (b.empty()) {
    result.add_term(a, 1);
  } else {
    for (const auto& [w, c] : shuffle(a.tail(), b)) result.add_term(w.prepend(a.front()), c);
  }
  return result;
}

Element ProductEngine::shuffle_word_element(const Word& a, const Element& b) {
  Element result(field_);
  for (const auto& [w, c] : b) result.add_scaled(shuffle(a, w), c);
  return result;
}

Element ProductEngine::shuffle(const Element& a, const Element& b) {
  Element result(field_);
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) result.add_scaled(shuffle(wa, wb), field_->mul(ca, cb));
  return result;
}

Element ProductEngine::diamond(const Element& a, const Element& b) {
  Element result(field_);
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) result.add_scaled(diamond(wa, wb), field_->mul(ca, cb));
  return result;
}

Element ProductEngine::triangle(const Element& a, const Element& b) {
  Element result(field_);
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) result.add_scaled(triangle(wa, wb), field_->mul(ca, cb));
  return result;
}

Element ProductEngine::bracket(const Word& a) {
  if (!a.is_mzv()) throw std::invalid_argument("bracket is defined on words with trivial characters only");
  if (a.empty()) return unit_element(field_);
  const int total = a.weight() + 1;
  Code coeff = (a.depth() % 2 == 0) ? Code{1} : field_->neg(1);
  for (const Letter& l : a.letters()) coeff = field_->mul(coeff, delta(1, total, l.weight));
  Element result(field_);
  if (coeff == 0) return result;
  Element acc = element_of(field_, Word::letter(a.front()));
  for (int k = 1; k < a.depth(); ++k) {
    Element next(field_);
    const Word letter = Word::letter(a[k]);
    for (const auto& [w, c] : acc) next.add_scaled(shuffle(w, letter), c);
    acc = std::move(next);
  }
  result.add_scaled(acc, coeff);
  return result;
}

Word horizontal(Elem alpha, const Word& w) {
  if (alpha.is_zero()) throw std::invalid_argument("horizontal map needs a unit");
  if (w.empty()) return w;
  std::vector<Letter> letters(w.letters());
  letters[0].eps = alpha.field().mul(alpha.code(), letters[0].eps);
  return Word(std::move(letters));
}

Element horizontal(Elem alpha, const Element& a) {
  if (alpha.is_zero()) throw std::invalid_argument("horizontal map needs a unit");
  Element result(a.field_ptr());
  for (const auto& [w, c] : a) result.add_term(horizontal(alpha, w), c);
  return result;
}

Element prepend(Letter l, const Element& e) {
  Element result(e.field_ptr());
  for (const auto& [w, c] : e) result.add_term(w.prepend(l), c);
  return result;
}

}  // namespace amzv
