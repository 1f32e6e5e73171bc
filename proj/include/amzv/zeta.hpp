#pragma once

// Function-field numerics over A = F_q[theta]: monic enumeration, truncated
// Laurent series in u = 1/theta, the power sums S_d and S_{<d}, and truncated
// alternating multiple zeta values.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "amzv/word.hpp"

namespace amzv {

/// Polynomial in theta over F_q, ascending coefficients, no trailing zeros.
class Poly {
 public:
  explicit Poly(FieldPtr field) : field_(std::move(field)) {}
  Poly(FieldPtr field, std::vector<Code> coeffs);

  const FieldPtr& field_ptr() const { return field_; }
  const std::vector<Code>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  friend Poly operator*(const Poly& a, const Poly& b);
  Poly pow(int e) const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  /// e.g. "theta^2 + g^1*theta + 1"
  std::string format() const;

 private:
  FieldPtr field_;
  std::vector<Code> coeffs_;
};

/// Truncated Laurent series sum_{i < prec} c_i u^i with u = 1/theta, stored as
/// coefficients of u^val ... u^{val + N - 1}. The absolute precision is
/// val + N: coefficients of u^i for i >= val + N are unknown.
class Laurent {
 public:
  explicit Laurent(FieldPtr field) : field_(std::move(field)) {}
  Laurent(FieldPtr field, int val, std::vector<Code> coeffs);

  /// 0 + O(u^prec)
  static Laurent zero(FieldPtr field, int prec);
  /// c*u^v + O(u^prec)
  static Laurent monomial(FieldPtr field, Code c, int v, int prec);

  const FieldPtr& field_ptr() const { return field_; }
  int val() const { return val_; }
  const std::vector<Code>& coeffs() const { return coeffs_; }
  /// Number of known coefficients N.
  int rel_prec() const { return static_cast<int>(coeffs_.size()); }
  int abs_prec() const { return val_ + rel_prec(); }
  /// Coefficient of u^i; throws std::out_of_range when i >= abs_prec().
  Elem coeff(int i) const;
  /// Index of the first nonzero known coefficient, or abs_prec() if none.
  int valuation() const;
  bool is_zero() const { return valuation() == abs_prec(); }

  /// Drops knowledge beyond u^prec (no-op if already coarser).
  Laurent truncated(int prec) const;

  friend Laurent operator+(const Laurent& a, const Laurent& b);
  friend Laurent operator-(const Laurent& a, const Laurent& b);
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent& operator+=(const Laurent& b) { return *this = *this + b; }
  Laurent scaled(Code c) const;

  /// True when both agree on every coefficient below min(prec, both abs precs).
  bool agrees_with(const Laurent& other, int prec) const;

  /// "c0*u^v + c1*u^(v+1) + ... + O(u^(v+N))" with coefficient 1 omitted,
  /// u^0 printed as the bare coefficient and u^1 as "u".
  std::string format() const;

 private:
  void normalize();

  FieldPtr field_;
  int val_ = 0;
  std::vector<Code> coeffs_;
};

Laurent parse_laurent(std::string_view text, const FieldPtr& field);

/// (eps_1, ..., eps_n; s_1, ..., s_n)
struct ZetaArray {
  std::vector<Code> eps;
  std::vector<int> s;
  int depth() const { return static_cast<int>(s.size()); }
  friend bool operator==(const ZetaArray&, const ZetaArray&) = default;
};

/// x_{s_1,e_1} ... x_{s_n,e_n} -> ((e_1..e_n); (s_1..s_n)); throws
/// std::invalid_argument on the empty word.
ZetaArray word_to_array(const Word& w);
Word array_to_word(const ZetaArray& a);

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

/// All q^d monic polynomials of degree d, ordered by their lower coefficients
/// read as a base-q number in code order. Throws BudgetExceeded when q^d
/// exceeds budget.
std::vector<Poly> monic_enum(int d, const FieldPtr& field, std::uint64_t budget = kDefaultBudget);

/// 1/a^s with n_coeffs correct coefficients starting at u^{s deg a}.
Laurent laurent_inv_pow(const Poly& a, int s, int n_coeffs);

/// Memoizing evaluator of S_d, S_{<d} and zeta_A at a fixed absolute
/// precision. Not thread-safe.
class ZetaEngine {
 public:
  ZetaEngine(FieldPtr field, int prec, std::uint64_t budget = kDefaultBudget);

  const FieldPtr& field_ptr() const { return field_; }
  int prec() const { return prec_; }

  /// S_d(eps; s) for a single letter.
  const Laurent& power_sum_letter(Letter x, int d);
  /// S_d and S_{<d} of a positive array; 0 when d < depth - 1 or d < 0.
  Laurent power_sum_d(const ZetaArray& arr, int d);
  Laurent power_sum_lt(const ZetaArray& arr, int d);
  /// Word versions; the empty word has S_{<d}(1) = 1 and S_d(1) = [d == 0].
  const Laurent& power_sum_d(const Word& w, int d);
  const Laurent& power_sum_lt(const Word& w, int d);
  /// Linear extensions to elements.
  Laurent power_sum_lt(const Element& e, int d);
  /// zeta_A(w) = sum_{d=0}^{prec} S_d(w); zeta_A(1) = 1.
  const Laurent& zeta(const Word& w);
  Laurent zeta(const Element& e);

 private:
  struct KeyHash {
    std::size_t operator()(const std::pair<Word, int>& k) const noexcept {
      return WordHash{}(k.first) * 0x9e3779b97f4a7c15ull ^ static_cast<std::size_t>(k.second + 1);
    }
  };

  FieldPtr field_;
  int prec_;
  std::uint64_t budget_;
  std::map<std::tuple<int, Code, int>, Laurent> letter_cache_;
  std::unordered_map<std::pair<Word, int>, Laurent, KeyHash> d_cache_;
  std::unordered_map<std::pair<Word, int>, Laurent, KeyHash> lt_cache_;
  std::unordered_map<Word, Laurent, WordHash> zeta_cache_;
};

/// One-shot helpers with a fresh engine.
Laurent power_sum_d(const ZetaArray& arr, int d, int prec, const FieldPtr& field, std::uint64_t budget = kDefaultBudget);
Laurent power_sum_lt(const ZetaArray& arr, int d, int prec, const FieldPtr& field, std::uint64_t budget = kDefaultBudget);
Laurent zeta_trunc(const Element& e, int prec, std::uint64_t budget = kDefaultBudget);

}  // namespace amzv
