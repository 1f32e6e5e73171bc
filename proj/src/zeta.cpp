#include "amzv/zeta.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "amzv/error.hpp"

namespace amzv {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n')) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, const char* what) {
  s = trim(s);
  if (!s.empty() && s.front() == '(' && s.back() == ')') s = trim(s.substr(1, s.size() - 2));
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError(std::string("bad ") + what + " '" + std::string(s) + "'");
  return v;
}

// "u", "u^k" -> k
int parse_u_power(std::string_view s) {
  s = trim(s);
  if (s == "u") return 1;
  if (s.size() < 3 || s.substr(0, 2) != "u^") throw ParseError("expected u^k, got '" + std::string(s) + "'");
  return parse_int(s.substr(2), "exponent");
}

std::string u_power(int i) {
  if (i == 1) return "u";
  return "u^" + std::to_string(i);
}

}  // namespace

// ---------------------------------------------------------------- Poly

Poly::Poly(FieldPtr field, std::vector<Code> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.field_);
  const Field& f = *a.field_;
  std::vector<Code> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
  }
  return Poly(a.field_, std::move(out));
}

Poly Poly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative polynomial exponent");
  Poly result(field_, {Code{1}});
  Poly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

std::string Poly::format() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Code c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    std::string mono = i == 0 ? "" : (i == 1 ? "theta" : "theta^" + std::to_string(i));
    if (mono.empty())
      out += c == 1 ? "1" : field_->format(field_->from_code(c));
    else
      out += (c == 1 ? "" : field_->format(field_->from_code(c)) + "*") + mono;
  }
  return out;
}

// ---------------------------------------------------------------- Laurent

Laurent::Laurent(FieldPtr field, int val, std::vector<Code> coeffs) : field_(std::move(field)), val_(val), coeffs_(std::move(coeffs)) {
  normalize();
}

void Laurent::normalize() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == 0) return;
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
  val_ += static_cast<int>(lead);
}

Laurent Laurent::zero(FieldPtr field, int prec) { return Laurent(std::move(field), prec, {}); }

Laurent Laurent::monomial(FieldPtr field, Code c, int v, int prec) {
  if (prec <= v) return zero(std::move(field), prec);
  std::vector<Code> coeffs(static_cast<std::size_t>(prec - v), 0);
  coeffs[0] = c;
  return Laurent(std::move(field), v, std::move(coeffs));
}

Elem Laurent::coeff(int i) const {
  if (i >= abs_prec()) throw std::out_of_range("coefficient of u^" + std::to_string(i) + " beyond precision " + std::to_string(abs_prec()));
  if (i < val_) return field_->zero();
  return field_->from_code(coeffs_[static_cast<std::size_t>(i - val_)]);
}

int Laurent::valuation() const { return val_; }

Laurent Laurent::truncated(int prec) const {
  if (prec >= abs_prec()) return *this;
  if (prec <= val_) return zero(field_, prec);
  return Laurent(field_, val_, std::vector<Code>(coeffs_.begin(), coeffs_.begin() + (prec - val_)));
}

namespace {

Laurent combine(const Laurent& a, const Laurent& b, bool subtract) {
  const FieldPtr& fp = a.field_ptr() ? a.field_ptr() : b.field_ptr();
  const Field& f = *fp;
  const int prec = std::min(a.abs_prec(), b.abs_prec());
  const int v = std::min(a.val(), b.val());
  if (v >= prec) return Laurent::zero(fp, prec);
  std::vector<Code> out(static_cast<std::size_t>(prec - v), 0);
  for (int i = v; i < prec; ++i) {
    const Code ca = i >= a.val() ? a.coeffs()[static_cast<std::size_t>(i - a.val())] : Code{0};
    const Code cb = i >= b.val() ? b.coeffs()[static_cast<std::size_t>(i - b.val())] : Code{0};
    out[static_cast<std::size_t>(i - v)] = subtract ? f.sub(ca, cb) : f.add(ca, cb);
  }
  return Laurent(fp, v, std::move(out));
}

}  // namespace

Laurent operator+(const Laurent& a, const Laurent& b) { return combine(a, b, false); }
Laurent operator-(const Laurent& a, const Laurent& b) { return combine(a, b, true); }

Laurent operator*(const Laurent& a, const Laurent& b) {
  const FieldPtr& fp = a.field_ptr() ? a.field_ptr() : b.field_ptr();
  const Field& f = *fp;
  // Stored valuations are exact after normalization, so the product is known
  // up to min(v_a + P_b, v_b + P_a).
  const int prec = std::min(a.val() + b.abs_prec(), b.val() + a.abs_prec());
  const int v = a.val() + b.val();
  if (v >= prec) return Laurent::zero(fp, prec);
  const int n = prec - v;
  std::vector<Code> out(static_cast<std::size_t>(n), 0);
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  for (int i = 0; i < n && i < static_cast<int>(ac.size()); ++i) {
    if (ac[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; i + j < n && j < static_cast<int>(bc.size()); ++j) {
      auto& slot = out[static_cast<std::size_t>(i + j)];
      slot = f.add(slot, f.mul(ac[static_cast<std::size_t>(i)], bc[static_cast<std::size_t>(j)]));
    }
  }
  return Laurent(fp, v, std::move(out));
}

Laurent Laurent::scaled(Code c) const {
  if (c == 0) return zero(field_, abs_prec());
  std::vector<Code> out(coeffs_);
  for (Code& x : out) x = field_->mul(x, c);
  return Laurent(field_, val_, std::move(out));
}

bool Laurent::agrees_with(const Laurent& other, int prec) const {
  const int limit = std::min({prec, abs_prec(), other.abs_prec()});
  const int start = std::min(val_, other.val_);
  for (int i = start; i < limit; ++i)
    if (coeff(i).code() != other.coeff(i).code()) return false;
  return true;
}

std::string Laurent::format() const {
  std::string out;
  for (int i = val_; i < abs_prec(); ++i) {
    const Code c = coeffs_[static_cast<std::size_t>(i - val_)];
    if (c == 0) continue;
    const std::string lit = field_->format(field_->from_code(c));
    std::string term;
    if (i == 0)
      term = c == 1 ? "1" : lit;
    else
      term = (c == 1 ? "" : lit + "*") + u_power(i);
    out += term + " + ";
  }
  return out + "O(u^" + std::to_string(abs_prec()) + ")";
}

Laurent parse_laurent(std::string_view text, const FieldPtr& field) {
  std::vector<std::string_view> terms;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '+') {
      terms.push_back(trim(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (terms.empty() || terms.back().substr(0, 2) != "O(" || terms.back().back() != ')')
    throw ParseError("series must end with O(u^P)");
  const std::string_view big_o = terms.back();
  const int prec = parse_u_power(big_o.substr(2, big_o.size() - 3));
  terms.pop_back();
  std::map<int, Code> coeffs;
  for (std::string_view term : terms) {
    if (term.empty()) throw ParseError("empty term in series");
    int exponent = 0;
    Code c = 1;
    if (term.find('u') == std::string_view::npos) {
      c = field->parse(term).code();
    } else {
      const auto star = term.find('*');
      if (star != std::string_view::npos) {
        c = field->parse(trim(term.substr(0, star))).code();
        term = term.substr(star + 1);
      }
      exponent = parse_u_power(term);
    }
    if (exponent >= prec) throw ParseError("term u^" + std::to_string(exponent) + " beyond stated precision");
    auto [it, inserted] = coeffs.try_emplace(exponent, c);
    if (!inserted) it->second = field->add(it->second, c);
  }
  if (coeffs.empty()) return Laurent::zero(field, prec);
  const int v = coeffs.begin()->first;
  std::vector<Code> out(static_cast<std::size_t>(prec - v), 0);
  for (const auto& [e, c] : coeffs) out[static_cast<std::size_t>(e - v)] = c;
  return Laurent(field, v, std::move(out));
}

// ---------------------------------------------------------------- arrays

ZetaArray word_to_array(const Word& w) {
  if (w.empty()) throw std::invalid_argument("the empty word has no array");
  ZetaArray a;
  for (const Letter& l : w.letters()) {
    a.eps.push_back(l.eps);
    a.s.push_back(l.weight);
  }
  return a;
}

Word array_to_word(const ZetaArray& a) {
  if (a.eps.size() != a.s.size()) throw std::invalid_argument("array with mismatched lengths");
  std::vector<Letter> letters;
  for (std::size_t i = 0; i < a.s.size(); ++i) {
    if (a.s[i] < 1 || a.s[i] > 0xFFFF) throw std::invalid_argument("array entry s must be in [1, 65535]");
    if (a.eps[i] == 0) throw std::invalid_argument("array character must be a unit");
    letters.push_back(Letter{static_cast<std::uint16_t>(a.s[i]), a.eps[i]});
  }
  return Word(std::move(letters));
}

// ---------------------------------------------------------------- monics

std::vector<Poly> monic_enum(int d, const FieldPtr& field, std::uint64_t budget) {
  if (d < 0) return {};
  const auto q = static_cast<std::uint64_t>(field->q());
  std::uint64_t count = 1;
  for (int i = 0; i < d; ++i) {
    count *= q;
    if (count > budget) throw BudgetExceeded("q^" + std::to_string(d) + " monic polynomials exceed the enumeration budget of " + std::to_string(budget));
  }
  std::vector<Poly> out;
  out.reserve(count);
  std::vector<Code> coeffs(static_cast<std::size_t>(d) + 1, 0);
  coeffs[static_cast<std::size_t>(d)] = 1;
  for (std::uint64_t t = 0; t < count; ++t) {
    std::uint64_t rest = t;
    for (int i = 0; i < d; ++i) {
      coeffs[static_cast<std::size_t>(i)] = static_cast<Code>(rest % q);
      rest /= q;
    }
    out.emplace_back(field, coeffs);
  }
  return out;
}

Laurent laurent_inv_pow(const Poly& a, int s, int n_coeffs) {
  if (a.is_zero()) throw std::invalid_argument("cannot invert the zero polynomial");
  if (s < 1) throw std::invalid_argument("exponent must be positive");
  const FieldPtr& fp = a.field_ptr();
  const Field& f = *fp;
  const Poly power = a.pow(s);
  const int deg = power.degree();
  if (n_coeffs <= 0) return Laurent::zero(fp, deg);
  // a^s = lead * theta^deg * b(u) with b(u) = sum_j b_j u^j, b_0 = 1.
  const Code lead_inv = f.inv(power.coeffs().back());
  std::vector<Code> b(static_cast<std::size_t>(deg) + 1);
  for (int j = 0; j <= deg; ++j) b[static_cast<std::size_t>(j)] = f.mul(power.coeffs()[static_cast<std::size_t>(deg - j)], lead_inv);
  std::vector<Code> inv(static_cast<std::size_t>(n_coeffs), 0);
  inv[0] = 1;
  for (int m = 1; m < n_coeffs; ++m) {
    Code acc = 0;
    for (int j = 1; j <= std::min(m, deg); ++j)
      acc = f.add(acc, f.mul(b[static_cast<std::size_t>(j)], inv[static_cast<std::size_t>(m - j)]));
    inv[static_cast<std::size_t>(m)] = f.neg(acc);
  }
  if (lead_inv != 1)
    for (Code& c : inv) c = f.mul(c, lead_inv);
  return Laurent(fp, deg, std::move(inv));
}

// ---------------------------------------------------------------- engine

ZetaEngine::ZetaEngine(FieldPtr field, int prec, std::uint64_t budget) : field_(std::move(field)), prec_(prec), budget_(budget) {}

const Laurent& ZetaEngine::power_sum_letter(Letter x, int d) {
  const auto key = std::make_tuple(static_cast<int>(x.weight), x.eps, d);
  if (auto it = letter_cache_.find(key); it != letter_cache_.end()) return it->second;
  Laurent result = Laurent::zero(field_, prec_);
  if (d == 0) {
    result = Laurent::monomial(field_, 1, 0, prec_);
  } else if (d > 0) {
    // Every summand has valuation s*d; it contributes n = prec - s*d
    // coefficients, of which coefficient j only depends on the top j
    // lower coefficients of a. When n - 1 < d, the q^(d - n + 1) monics
    // sharing the relevant coefficients contribute identical series, so the
    // sum vanishes modulo p.
    const int s = x.weight;
    const long long n = static_cast<long long>(prec_) - static_cast<long long>(s) * d;
    if (n > 0 && n - 1 >= d) {
      Laurent sum = Laurent::zero(field_, prec_);
      for (const Poly& a : monic_enum(d, field_, budget_)) sum += laurent_inv_pow(a, s, static_cast<int>(n));
      const Code twist = field_->exp(static_cast<long long>(field_->log(x.eps)) * d);
      result = sum.scaled(twist);
    }
  }
  return letter_cache_.emplace(key, std::move(result)).first->second;
}

const Laurent& ZetaEngine::power_sum_d(const Word& w, int d) {
  std::pair<Word, int> key{w, d};
  if (auto it = d_cache_.find(key); it != d_cache_.end()) return it->second;
  Laurent result = Laurent::zero(field_, prec_);
  if (w.empty()) {
    if (d == 0) result = Laurent::monomial(field_, 1, 0, prec_);
  } else if (d >= w.depth() - 1 && d >= 0) {
    const Laurent& head = power_sum_letter(w.front(), d);
    if (!head.is_zero()) result = (head * power_sum_lt(w.tail(), d)).truncated(prec_);
  }
  return d_cache_.emplace(std::move(key), std::move(result)).first->second;
}

const Laurent& ZetaEngine::power_sum_lt(const Word& w, int d) {
  std::pair<Word, int> key{w, d};
  if (auto it = lt_cache_.find(key); it != lt_cache_.end()) return it->second;
  Laurent result = Laurent::zero(field_, prec_);
  if (w.empty()) {
    result = Laurent::monomial(field_, 1, 0, prec_);
  } else if (d > 0) {
    // Copy before recursing: the recursive calls may rehash the cache.
    Laurent below = power_sum_lt(w, d - 1);
    result = below + power_sum_d(w, d - 1);
  }
  return lt_cache_.emplace(std::move(key), std::move(result)).first->second;
}

Laurent ZetaEngine::power_sum_d(const ZetaArray& arr, int d) { return power_sum_d(array_to_word(arr), d); }

Laurent ZetaEngine::power_sum_lt(const ZetaArray& arr, int d) { return power_sum_lt(array_to_word(arr), d); }

Laurent ZetaEngine::power_sum_lt(const Element& e, int d) {
  Laurent result = Laurent::zero(field_, prec_);
  for (const auto& [w, c] : e) result += power_sum_lt(w, d).scaled(c);
  return result;
}

const Laurent& ZetaEngine::zeta(const Word& w) {
  if (auto it = zeta_cache_.find(w); it != zeta_cache_.end()) return it->second;
  Laurent result = Laurent::monomial(field_, 1, 0, prec_);
  if (!w.empty()) {
    result = Laurent::zero(field_, prec_);
    // v(S_d) >= d, so terms with d >= prec cannot change the known coefficients.
    for (int d = 0; d <= prec_; ++d) {
      if (power_sum_letter(w.front(), d).is_zero()) continue;
      Laurent term = power_sum_d(w, d);
      result += term;
    }
  }
  return zeta_cache_.emplace(w, std::move(result)).first->second;
}

Laurent ZetaEngine::zeta(const Element& e) {
  Laurent result = Laurent::zero(field_, prec_);
  for (const auto& [w, c] : e) result += zeta(w).scaled(c);
  return result;
}

Laurent power_sum_d(const ZetaArray& arr, int d, int prec, const FieldPtr& field, std::uint64_t budget) {
  ZetaEngine engine(field, prec, budget);
  return engine.power_sum_d(arr, d);
}

Laurent power_sum_lt(const ZetaArray& arr, int d, int prec, const FieldPtr& field, std::uint64_t budget) {
  ZetaEngine engine(field, prec, budget);
  return engine.power_sum_lt(arr, d);
}

Laurent zeta_trunc(const Element& e, int prec, std::uint64_t budget) {
  ZetaEngine engine(e.field_ptr(), prec, budget);
  return engine.zeta(e);
}

}  // namespace amzv
