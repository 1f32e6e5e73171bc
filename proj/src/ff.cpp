#include "amzv/ff.hpp"

#include <charconv>
#include <map>
#include <stdexcept>
#include <utility>

#include "amzv/error.hpp"

namespace amzv::ff {

namespace {

constexpr int kMaxQ = 64;

// Conway polynomials (ascending coefficients) for every non-prime q <= 64.
const std::map<std::pair<int, int>, std::vector<int>>& modulus_table() {
  static const std::map<std::pair<int, int>, std::vector<int>> table = {
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
      {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{5, 2}, {2, 4, 1}},
      {{7, 2}, {3, 6, 1}},
  };
  return table;
}

int mod(long long a, int p) {
  long long r = a % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

// Remainder of a modulo a monic b, both ascending over F_p.
std::vector<int> poly_rem(std::vector<int> a, const std::vector<int>& b, int p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const int lead = a.back();
    if (lead != 0) {
      const std::size_t shift = a.size() - 1 - db;
      for (std::size_t i = 0; i <= db; ++i) a[shift + i] = mod(a[shift + i] - static_cast<long long>(lead) * b[i], p);
    }
    a.pop_back();
  }
  return a;
}

std::vector<int> decode(int code, int p, int k) {
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) {
    c[i] = code % p;
    code /= p;
  }
  return c;
}

int encode(const std::vector<int>& c, int p) {
  int code = 0;
  for (std::size_t i = c.size(); i-- > 0;) code = code * p + c[i];
  return code;
}

long long parse_int(std::string_view text, const char* what) {
  long long value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) throw ParseError(std::string("invalid ") + what + ": '" + std::string(text) + "'");
  return value;
}

}  // namespace

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::vector<int>> default_modulus(int p, int k) {
  if (k == 1) return std::vector<int>{0, 1};
  auto it = modulus_table().find({p, k});
  if (it == modulus_table().end()) return std::nullopt;
  return it->second;
}

bool is_irreducible(const std::vector<int>& poly, int p) {
  const int deg = static_cast<int>(poly.size()) - 1;
  if (deg < 1 || poly.back() != 1) return false;
  if (deg == 1) return true;
  for (int d = 1; d < deg; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int low = 0; low < count; ++low) {
      std::vector<int> divisor = decode(low, p, d);
      divisor.push_back(1);
      auto r = poly_rem(poly, divisor, p);
      bool zero = true;
      for (int c : r) zero = zero && c == 0;
      if (zero) return false;
    }
  }
  return true;
}

Field::Field(int p, int k, std::vector<int> modulus) : p_(p), k_(k), q_(1), modulus_(std::move(modulus)) {
  for (int i = 0; i < k; ++i) q_ *= p;
  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  log_.assign(q_, -1);

  std::vector<std::vector<int>> coords(q_);
  for (int a = 0; a < q_; ++a) coords[a] = decode(a, p, k);
  for (int a = 0; a < q_; ++a) {
    std::vector<int> n(k);
    for (int i = 0; i < k; ++i) n[i] = mod(-coords[a][i], p);
    neg_[a] = static_cast<Code>(encode(n, p));
    for (int b = 0; b < q_; ++b) {
      std::vector<int> s(k);
      for (int i = 0; i < k; ++i) s[i] = (coords[a][i] + coords[b][i]) % p;
      add_[a * q_ + b] = static_cast<Code>(encode(s, p));
      std::vector<int> prod(2 * k - 1, 0);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + coords[a][i] * coords[b][j]) % p;
      auto r = k == 1 ? prod : poly_rem(prod, modulus_, p);
      r.resize(k, 0);
      mul_[a * q_ + b] = static_cast<Code>(encode(r, p));
    }
  }
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) inv_[a] = static_cast<Code>(b);

  // Smallest code of multiplicative order q-1.
  for (int g = 1; g < q_; ++g) {
    int order = 1;
    Code x = static_cast<Code>(g);
    for (; x != 1 && order < q_; ++order) x = mul_[x * q_ + g];
    if (order == q_ - 1) {
      gen_ = static_cast<Code>(g);
      break;
    }
  }
  exp_.resize(q_ - 1);
  Code x = 1;
  for (std::size_t j = 0; j < exp_.size(); ++j) {
    exp_[j] = x;
    log_[x] = static_cast<int>(j);
    x = mul_[x * q_ + gen_];
  }
}

FieldPtr Field::make(int p, int k, std::optional<std::vector<int>> modulus) {
  if (!ff::is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) throw std::invalid_argument("extension degree must be >= 1");
  long long q = 1;
  for (int i = 0; i < k; ++i) q *= p;
  if (q > kMaxQ) throw std::invalid_argument("q = " + std::to_string(q) + " exceeds the supported maximum of 64");
  if (!modulus) {
    modulus = default_modulus(p, k);
    if (!modulus) throw std::invalid_argument("no default modulus for p=" + std::to_string(p) + ", k=" + std::to_string(k));
  } else {
    for (int& c : *modulus) c = mod(c, p);
    while (modulus->size() > 1 && modulus->back() == 0) modulus->pop_back();
    if (static_cast<int>(modulus->size()) != k + 1 || modulus->back() != 1)
      throw std::invalid_argument("modulus must be monic of degree " + std::to_string(k));
    if (!is_irreducible(*modulus, p)) throw std::invalid_argument("modulus is reducible over F_" + std::to_string(p));
  }
  return FieldPtr(new Field(p, k, std::move(*modulus)));
}

FieldPtr Field::from_q_string(std::string_view text) {
  const auto caret = text.find('^');
  if (caret != std::string_view::npos) {
    const int p = static_cast<int>(parse_int(text.substr(0, caret), "characteristic"));
    const int k = static_cast<int>(parse_int(text.substr(caret + 1), "extension degree"));
    return make(p, k);
  }
  const long long q = parse_int(text, "field size");
  if (q < 2 || q > kMaxQ) throw std::invalid_argument("unsupported field size " + std::string(text));
  for (int p = 2; p <= q; ++p) {
    if (!ff::is_prime(p) || q % p != 0) continue;
    long long r = q;
    int k = 0;
    while (r % p == 0) {
      r /= p;
      ++k;
    }
    if (r != 1) break;
    return make(p, k);
  }
  throw std::invalid_argument(std::string(text) + " is not a prime power");
}

Elem Field::from_int(long long n) const { return {this, static_cast<Code>(mod(n, p_))}; }

Elem Field::from_code(Code c) const {
  if (c >= q_) throw std::out_of_range("field element code out of range");
  return {this, c};
}

Elem Field::from_coords(const std::vector<int>& coords) const {
  if (static_cast<int>(coords.size()) != k_) throw std::invalid_argument("expected " + std::to_string(k_) + " coordinates");
  std::vector<int> c(coords);
  for (int& x : c) x = mod(x, p_);
  return {this, static_cast<Code>(encode(c, p_))};
}

Elem Field::from_log(long long j) const { return {this, exp(j)}; }

std::vector<Elem> Field::elements() const {
  std::vector<Elem> out;
  for (int c = 0; c < q_; ++c) out.emplace_back(this, static_cast<Code>(c));
  return out;
}

std::vector<Elem> Field::units() const {
  std::vector<Elem> out;
  for (Code c : exp_) out.emplace_back(this, c);
  return out;
}

Code Field::inv(Code a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return inv_[a];
}

int Field::log(Code a) const {
  if (a == 0) throw std::domain_error("logarithm of zero");
  return log_[a];
}

Code Field::exp(long long j) const { return exp_[mod(j, q_ - 1)]; }

std::string Field::format(Elem e) const {
  if (e.is_zero()) return "0";
  return "g^" + std::to_string(log(e.code()));
}

Elem Field::parse(std::string_view text) const {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.size() >= 2 && text.substr(0, 2) == "g^") {
    const long long j = parse_int(text.substr(2), "exponent");
    if (j < 0 || j > q_ - 2) throw ParseError("exponent " + std::to_string(j) + " out of range [0, " + std::to_string(q_ - 2) + "]");
    return from_log(j);
  }
  const long long n = parse_int(text, "field element");
  if (n < 0 || n >= p_) throw ParseError("residue " + std::string(text) + " out of range [0, " + std::to_string(p_ - 1) + "]");
  return from_int(n);
}

bool Field::same_as(const Field& other) const {
  return this == &other || (p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_);
}

namespace {
const Field& common(Elem a, Elem b) {
  if (a.field_ptr() == nullptr || b.field_ptr() == nullptr) throw std::invalid_argument("uninitialized field element");
  if (!a.field().same_as(b.field())) throw std::invalid_argument("field elements from different fields");
  return a.field();
}
}  // namespace

std::vector<int> Elem::coords() const { return decode(code_, field_->p(), field_->k()); }

int Elem::log() const { return field_->log(code_); }

Elem Elem::inv() const { return {field_, field_->inv(code_)}; }

Elem Elem::pow(long long n) const {
  if (code_ == 0) {
    if (n < 0) throw std::domain_error("zero raised to a negative power");
    return {field_, static_cast<Code>(n == 0 ? 1 : 0)};
  }
  Elem base = n < 0 ? inv() : *this;
  unsigned long long e = n < 0 ? static_cast<unsigned long long>(-(n + 1)) + 1 : static_cast<unsigned long long>(n);
  Elem acc(field_, 1);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Elem operator+(Elem a, Elem b) {
  const Field& f = common(a, b);
  return {&f, f.add(a.code_, b.code_)};
}

Elem operator-(Elem a, Elem b) {
  const Field& f = common(a, b);
  return {&f, f.sub(a.code_, b.code_)};
}

Elem operator*(Elem a, Elem b) {
  const Field& f = common(a, b);
  return {&f, f.mul(a.code_, b.code_)};
}

Elem operator/(Elem a, Elem b) {
  const Field& f = common(a, b);
  return {&f, f.mul(a.code_, f.inv(b.code_))};
}

Elem Elem::operator-() const { return {field_, field_->neg(code_)}; }

bool operator==(Elem a, Elem b) {
  if (a.field_ == nullptr || b.field_ == nullptr) return a.field_ == b.field_ && a.code_ == b.code_;
  return a.code_ == b.code_ && a.field().same_as(b.field());
}

}  // namespace amzv::ff
