#pragma once

// Coproduct, counit and antipode on the word algebra, plus the
// weight-recursive MZV coproduct kept as an independent oracle.

#include <unordered_map>

#include "amzv/prod.hpp"

namespace amzv {

/// Test-only corruption of the coalgebra structure.
struct CoalgebraFaults {
  /// Omit the 1 (x) u term from the coproduct of every nonempty word.
  bool drop_unit_term = false;
  /// Use S(x) = +x - sum ... instead of -x - sum ...
  bool flip_antipode_sign = false;
};

/// Memoizing coproduct/antipode evaluator layered on a ProductEngine. The
/// engine must outlive this object. Not thread-safe.
class Coalgebra {
 public:
  explicit Coalgebra(ProductEngine& products, CoalgebraFaults faults = {});

  ProductEngine& products() { return *products_; }
  const FieldPtr& field_ptr() const { return products_->field_ptr(); }

  /// Closed depth-one formula:
  /// Delta(x_{n,e}) = 1 (x) x_{n,e} + sum_{r + w(a) = n} C(r + depth(a) - 2, depth(a)) x_{r,e} (x) [a],
  /// a ranging over all MZV words including the empty one.
  TensorElement coproduct_letter(Letter x);

  /// Delta on words: closed formula on letters, and for u = x v of depth >= 2
  /// Delta(u) = 1 (x) u + sum (a_x a_v) (x) (b_x sha b_v).
  const TensorElement& coproduct(const Word& w);
  TensorElement coproduct(const Element& e);

  /// S(1) = 1, S(x) = -x - sum S(x_(1)) sha x_(2) over the proper part of Delta(x).
  const Element& antipode(const Word& w);
  Element antipode(const Element& e);

  /// Oracle: Delta(x_n) over the MZV alphabet by recursion on weight,
  /// Delta(x_w) = Delta(x_1) sha Delta(x_{w-1}) - Delta(x_1 x_{w-1}) - Delta(x_{w-1} x_1)
  ///              - sum_{0<j<w} Delta^j_{1,w-1} Delta(x_{w-j} x_j),
  /// with depth >= 2 words expanded by Delta(u) = 1 (x) u + sum (a_x |> a_v) (x) (b_x sha b_v).
  /// Shares nothing with coproduct() except the product engine.
  TensorElement coproduct_mzv_recursive(int n);
  /// The same recursion evaluated on an arbitrary MZV word.
  const TensorElement& coproduct_mzv_word(const Word& w);

 private:
  TensorElement expand_depth(const Word& u, const TensorElement& head, const TensorElement& rest, bool use_triangle);

  ProductEngine* products_;
  CoalgebraFaults faults_;
  std::unordered_map<Word, TensorElement, WordHash> coproduct_cache_;
  std::unordered_map<Word, Element, WordHash> antipode_cache_;
  std::unordered_map<Word, TensorElement, WordHash> oracle_cache_;
};

/// Coefficient of the empty word.
Elem counit(const Element& e);

/// (a (x) b) sha (c (x) d) = (a sha c) (x) (b sha d), extended bilinearly.
TensorElement tensor_shuffle(ProductEngine& products, const TensorElement& s, const TensorElement& t);

/// (phi_alpha (x) Id) t and (Id (x) phi_alpha) t.
TensorElement horizontal_left(Elem alpha, const TensorElement& t);
TensorElement horizontal_right(Elem alpha, const TensorElement& t);

/// (Id (x) Delta) t and (Delta (x) Id) t.
Tensor3 coproduct_right(Coalgebra& coalgebra, const TensorElement& t);
Tensor3 coproduct_left(Coalgebra& coalgebra, const TensorElement& t);

/// (counit (x) Id) t and (Id (x) counit) t.
Element counit_left(const TensorElement& t);
Element counit_right(const TensorElement& t);

/// m (S (x) Id) t and m (Id (x) S) t, with m the shuffle product.
Element antipode_left_convolution(Coalgebra& coalgebra, const TensorElement& t);
Element antipode_right_convolution(Coalgebra& coalgebra, const TensorElement& t);

}  // namespace amzv
