#include "amzv/coalgebra.hpp"

#include <stdexcept>

namespace amzv {

Coalgebra::Coalgebra(ProductEngine& products, CoalgebraFaults faults) : products_(&products), faults_(faults) {}

TensorElement Coalgebra::coproduct_letter(Letter x) {
  const FieldPtr& field = field_ptr();
  const int p = field->p();
  const int n = x.weight;
  TensorElement result(field);
  result.add_term(WordPair{Word{}, Word::letter(x)}, 1);
  for (int r = 1; r <= n; ++r) {
    const Word left = Word::letter(Letter{static_cast<std::uint16_t>(r), x.eps});
    for (const Word& a : mzv_words(n - r)) {
      const int m = a.depth();
      const Code c = field->from_int(binom_mod_p(r + m - 2, m, p)).code();
      if (c == 0) continue;
      for (const auto& [w, cw] : products_->bracket(a)) result.add_term(WordPair{left, w}, field->mul(c, cw));
    }
  }
  return result;
}

TensorElement Coalgebra::expand_depth(const Word& u, const TensorElement& head, const TensorElement& rest, bool use_triangle) {
  const Field& field = *field_ptr();
  TensorElement result(field_ptr());
  result.add_term(WordPair{Word{}, u}, 1);
  for (const auto& [hp, hc] : head) {
    for (const auto& [rp, rc] : rest) {
      const Code c = field.mul(hc, rc);
      const Element& right = products_->shuffle(hp.second, rp.second);
      if (use_triangle) {
        const Element left = products_->triangle(hp.first, rp.first);
        for (const auto& [lw, lc] : left)
          for (const auto& [rw, rcw] : right) result.add_term(WordPair{lw, rw}, field.mul(c, field.mul(lc, rcw)));
      } else {
        const Word left = hp.first.concat(rp.first);
        for (const auto& [rw, rcw] : right) result.add_term(WordPair{left, rw}, field.mul(c, rcw));
      }
    }
  }
  return result;
}

const TensorElement& Coalgebra::coproduct(const Word& w) {
  if (auto it = coproduct_cache_.find(w); it != coproduct_cache_.end()) return it->second;
  TensorElement result(field_ptr());
  if (w.empty()) {
    result.add_term(WordPair{Word{}, Word{}}, 1);
  } else {
    if (w.depth() == 1) {
      result = coproduct_letter(w.front());
    } else {
      const Word head_word = Word::letter(w.front());
      TensorElement head = coproduct_letter(w.front());
      head.add_term(WordPair{Word{}, head_word}, field_ptr()->neg(1));
      result = expand_depth(w, head, coproduct(w.tail()), false);
    }
    if (faults_.drop_unit_term) result.add_term(WordPair{Word{}, w}, field_ptr()->neg(result.coeff(WordPair{Word{}, w}).code()));
  }
  return coproduct_cache_.emplace(w, std::move(result)).first->second;
}

TensorElement Coalgebra::coproduct(const Element& e) {
  TensorElement result(e.field_ptr());
  for (const auto& [w, c] : e) result.add_scaled(coproduct(w), c);
  return result;
}

const Element& Coalgebra::antipode(const Word& w) {
  if (auto it = antipode_cache_.find(w); it != antipode_cache_.end()) return it->second;
  const FieldPtr& field = field_ptr();
  Element result(field);
  if (w.empty()) {
    result.add_term(w, 1);
  } else {
    result.add_term(w, faults_.flip_antipode_sign ? Code{1} : field->neg(1));
    const TensorElement& delta = coproduct(w);
    for (const auto& [pair, c] : delta) {
      if (pair.first.empty() || pair.second.empty()) continue;
      const Element& s_left = antipode(pair.first);
      Element term(field);
      for (const auto& [lw, lc] : s_left) term.add_scaled(products_->shuffle(lw, pair.second), lc);
      result.add_scaled(term, field->neg(c));
    }
  }
  return antipode_cache_.emplace(w, std::move(result)).first->second;
}

Element Coalgebra::antipode(const Element& e) {
  Element result(e.field_ptr());
  for (const auto& [w, c] : e) result.add_scaled(antipode(w), c);
  return result;
}

const TensorElement& Coalgebra::coproduct_mzv_word(const Word& w) {
  if (!w.is_mzv()) throw std::invalid_argument("the recursive coproduct is defined on MZV words only");
  if (auto it = oracle_cache_.find(w); it != oracle_cache_.end()) return it->second;
  const FieldPtr& field = field_ptr();
  const Code minus_one = field->neg(1);
  auto letter = [](int n) { return Word::letter(Letter{static_cast<std::uint16_t>(n), Code{1}}); };
  TensorElement result(field);
  if (w.empty()) {
    result.add_term(WordPair{Word{}, Word{}}, 1);
  } else if (w.depth() == 1 && w.weight() == 1) {
    result.add_term(WordPair{Word{}, w}, 1);
    result.add_term(WordPair{w, Word{}}, 1);
  } else if (w.depth() == 1) {
    const int n = w.weight();
    result = tensor_shuffle(*products_, coproduct_mzv_word(letter(1)), coproduct_mzv_word(letter(n - 1)));
    result.add_scaled(coproduct_mzv_word(Word{Letter{1, 1}, Letter{static_cast<std::uint16_t>(n - 1), 1}}), minus_one);
    result.add_scaled(coproduct_mzv_word(Word{Letter{static_cast<std::uint16_t>(n - 1), 1}, Letter{1, 1}}), minus_one);
    for (int j = 1; j < n; ++j) {
      const Code d = products_->delta(1, n - 1, j);
      if (d == 0) continue;
      const Word pair_word{Letter{static_cast<std::uint16_t>(n - j), 1}, Letter{static_cast<std::uint16_t>(j), 1}};
      result.add_scaled(coproduct_mzv_word(pair_word), field->neg(d));
    }
  } else {
    const Word head_word = Word::letter(w.front());
    TensorElement head = coproduct_mzv_word(head_word);
    head.add_term(WordPair{Word{}, head_word}, minus_one);
    result = expand_depth(w, head, coproduct_mzv_word(w.tail()), true);
  }
  return oracle_cache_.emplace(w, std::move(result)).first->second;
}

TensorElement Coalgebra::coproduct_mzv_recursive(int n) {
  if (n < 1) throw std::invalid_argument("recursive coproduct needs n >= 1");
  return coproduct_mzv_word(Word::letter(Letter{static_cast<std::uint16_t>(n), Code{1}}));
}

Elem counit(const Element& e) { return e.coeff(Word{}); }

TensorElement tensor_shuffle(ProductEngine& products, const TensorElement& s, const TensorElement& t) {
  const Field& field = products.field();
  TensorElement result(products.field_ptr());
  for (const auto& [sp, sc] : s) {
    for (const auto& [tp, tc] : t) {
      const Code c = field.mul(sc, tc);
      const Element& left = products.shuffle(sp.first, tp.first);
      const Element& right = products.shuffle(sp.second, tp.second);
      for (const auto& [lw, lc] : left) {
        const Code cl = field.mul(c, lc);
        for (const auto& [rw, rc] : right) result.add_term(WordPair{lw, rw}, field.mul(cl, rc));
      }
    }
  }
  return result;
}

TensorElement horizontal_left(Elem alpha, const TensorElement& t) {
  TensorElement result(t.field_ptr());
  for (const auto& [pair, c] : t) result.add_term(WordPair{horizontal(alpha, pair.first), pair.second}, c);
  return result;
}

TensorElement horizontal_right(Elem alpha, const TensorElement& t) {
  TensorElement result(t.field_ptr());
  for (const auto& [pair, c] : t) result.add_term(WordPair{pair.first, horizontal(alpha, pair.second)}, c);
  return result;
}

Tensor3 coproduct_right(Coalgebra& coalgebra, const TensorElement& t) {
  const Field& field = *t.field_ptr();
  Tensor3 result(t.field_ptr());
  for (const auto& [pair, c] : t)
    for (const auto& [inner, ic] : coalgebra.coproduct(pair.second))
      result.add_term(WordTriple{pair.first, inner.first, inner.second}, field.mul(c, ic));
  return result;
}

Tensor3 coproduct_left(Coalgebra& coalgebra, const TensorElement& t) {
  const Field& field = *t.field_ptr();
  Tensor3 result(t.field_ptr());
  for (const auto& [pair, c] : t)
    for (const auto& [inner, ic] : coalgebra.coproduct(pair.first))
      result.add_term(WordTriple{inner.first, inner.second, pair.second}, field.mul(c, ic));
  return result;
}

Element counit_left(const TensorElement& t) {
  Element result(t.field_ptr());
  for (const auto& [pair, c] : t)
    if (pair.first.empty()) result.add_term(pair.second, c);
  return result;
}

Element counit_right(const TensorElement& t) {
  Element result(t.field_ptr());
  for (const auto& [pair, c] : t)
    if (pair.second.empty()) result.add_term(pair.first, c);
  return result;
}

Element antipode_left_convolution(Coalgebra& coalgebra, const TensorElement& t) {
  ProductEngine& products = coalgebra.products();
  Element result(t.field_ptr());
  for (const auto& [pair, c] : t) {
    const Element& s = coalgebra.antipode(pair.first);
    for (const auto& [w, sc] : s) result.add_scaled(products.shuffle(w, pair.second), t.field().mul(c, sc));
  }
  return result;
}

Element antipode_right_convolution(Coalgebra& coalgebra, const TensorElement& t) {
  ProductEngine& products = coalgebra.products();
  Element result(t.field_ptr());
  for (const auto& [pair, c] : t) {
    const Element& s = coalgebra.antipode(pair.second);
    for (const auto& [w, sc] : s) result.add_scaled(products.shuffle(pair.first, w), t.field().mul(c, sc));
  }
  return result;
}

}  // namespace amzv
