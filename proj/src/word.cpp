#include "amzv/word.hpp"

#include <charconv>
#include <map>
#include <sstream>
#include <stdexcept>

#include "amzv/error.hpp"

namespace amzv {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n')) s.remove_suffix(1);
  return s;
}

long long read_nat(std::string_view& s, const char* what) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr == s.data()) throw ParseError(std::string("expected ") + what + " in word");
  s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
  return v;
}

void expect(std::string_view& s, char c) {
  if (s.empty() || s.front() != c) throw ParseError(std::string("expected '") + c + "' in word");
  s.remove_prefix(1);
}

// Splits on '+' separators at top level.
std::vector<std::string_view> split_terms(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == '+') {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

// "[coeff*]rest" -> (coeff, rest)
std::pair<Code, std::string_view> split_coeff(std::string_view term, const Field& field) {
  const auto star = term.find('*');
  if (star == std::string_view::npos) return {Code{1}, term};
  const Elem c = field.parse(trim(term.substr(0, star)));
  return {c.code(), trim(term.substr(star + 1))};
}

std::string coeff_prefix(Code c, const Field& field) {
  if (c == 1) return "";
  return field.format(field.from_code(c)) + "*";
}

void compositions(int w, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (w == 0) {
    out.push_back(current);
    return;
  }
  for (int first = 1; first <= w; ++first) {
    current.push_back(first);
    compositions(w - first, current, out);
    current.pop_back();
  }
}

}  // namespace

int Word::weight() const {
  int w = 0;
  for (const Letter& l : letters_) w += l.weight;
  return w;
}

Word Word::prepend(Letter l) const {
  std::vector<Letter> out;
  out.reserve(letters_.size() + 1);
  out.push_back(l);
  out.insert(out.end(), letters_.begin(), letters_.end());
  return Word(std::move(out));
}

Word Word::concat(const Word& other) const {
  std::vector<Letter> out(letters_);
  out.insert(out.end(), other.letters_.begin(), other.letters_.end());
  return Word(std::move(out));
}

bool Word::is_mzv() const {
  for (const Letter& l : letters_)
    if (l.eps != 1) return false;
  return true;
}

std::strong_ordering WordOrder::compare(const Word& a, const Word& b) const {
  if (auto c = a.weight() <=> b.weight(); c != 0) return c;
  if (auto c = a.depth() <=> b.depth(); c != 0) return c;
  for (int i = 0; i < a.depth(); ++i) {
    if (auto c = a[i].weight <=> b[i].weight; c != 0) return c;
    if (auto c = field_->log(a[i].eps) <=> field_->log(b[i].eps); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

bool WordOrder::operator()(const WordPair& a, const WordPair& b) const {
  const int wa = a.first.weight() + a.second.weight();
  const int wb = b.first.weight() + b.second.weight();
  if (wa != wb) return wa < wb;
  const int da = a.first.depth() + a.second.depth();
  const int db = b.first.depth() + b.second.depth();
  if (da != db) return da < db;
  if (auto c = compare(a.first, b.first); c != 0) return c < 0;
  return compare(a.second, b.second) < 0;
}

bool WordOrder::operator()(const WordTriple& a, const WordTriple& b) const {
  int wa = 0, wb = 0, da = 0, db = 0;
  for (int i = 0; i < 3; ++i) {
    wa += a[i].weight();
    wb += b[i].weight();
    da += a[i].depth();
    db += b[i].depth();
  }
  if (wa != wb) return wa < wb;
  if (da != db) return da < db;
  for (int i = 0; i < 3; ++i)
    if (auto c = compare(a[i], b[i]); c != 0) return c < 0;
  return false;
}

Letter make_letter(int n, Elem eps) {
  if (n < 1 || n > 0xFFFF) throw std::invalid_argument("letter weight must be in [1, 65535]");
  if (eps.is_zero()) throw std::invalid_argument("letter character must be a unit");
  return Letter{static_cast<std::uint16_t>(n), eps.code()};
}

Word parse_word(std::string_view text, const Field& field) {
  std::string_view s = trim(text);
  if (s == "1") return Word{};
  if (s.empty()) throw ParseError("empty word literal (use \"1\")");
  std::vector<Letter> letters;
  while (!s.empty()) {
    expect(s, 'x');
    expect(s, '[');
    const long long n = read_nat(s, "letter weight");
    expect(s, ',');
    const long long j = read_nat(s, "character exponent");
    expect(s, ']');
    if (n < 1 || n > 0xFFFF) throw ParseError("letter weight must be in [1, 65535], got " + std::to_string(n));
    if (j < 0 || j > field.q() - 2)
      throw ParseError("character exponent " + std::to_string(j) + " out of range [0, " + std::to_string(field.q() - 2) + "]");
    letters.push_back(Letter{static_cast<std::uint16_t>(n), field.exp(j)});
    s = trim(s);
  }
  return Word(std::move(letters));
}

std::string format_word(const Word& w, const Field& field) {
  if (w.empty()) return "1";
  std::string out;
  for (const Letter& l : w.letters()) {
    out += "x[" + std::to_string(l.weight) + "," + std::to_string(field.log(l.eps)) + "]";
  }
  return out;
}

Element parse_element(std::string_view text, const FieldPtr& field) {
  Element out(field);
  std::string_view s = trim(text);
  if (s == "0") return out;
  for (std::string_view term : split_terms(s)) {
    if (term.empty()) throw ParseError("empty term in element '" + std::string(text) + "'");
    auto [c, rest] = split_coeff(term, *field);
    out.add_term(parse_word(rest, *field), c);
  }
  return out;
}

std::string format_element(const Element& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : e.sorted_terms()) {
    if (!out.empty()) out += " + ";
    out += coeff_prefix(c, e.field()) + format_word(w, e.field());
  }
  return out;
}

TensorElement parse_tensor(std::string_view text, const FieldPtr& field) {
  TensorElement out(field);
  std::string_view s = trim(text);
  if (s == "0") return out;
  for (std::string_view term : split_terms(s)) {
    auto [c, rest] = split_coeff(term, *field);
    std::size_t pos = rest.find("⊗");
    std::size_t len = std::string_view("⊗").size();
    if (pos == std::string_view::npos) {
      pos = rest.find("(x)");
      len = 3;
    }
    if (pos == std::string_view::npos) throw ParseError("tensor term without separator: '" + std::string(term) + "'");
    out.add_term(WordPair{parse_word(rest.substr(0, pos), *field), parse_word(rest.substr(pos + len), *field)}, c);
  }
  return out;
}

std::string format_tensor(const TensorElement& t, bool ascii) {
  if (t.is_zero()) return "0";
  const std::string sep = ascii ? " (x) " : " ⊗ ";
  std::string out;
  for (const auto& [pair, c] : t.sorted_terms()) {
    if (!out.empty()) out += " + ";
    out += coeff_prefix(c, t.field()) + format_word(pair.first, t.field()) + sep + format_word(pair.second, t.field());
  }
  return out;
}

std::string format_tensor3(const Tensor3& t, bool ascii) {
  if (t.is_zero()) return "0";
  const std::string sep = ascii ? " (x) " : " ⊗ ";
  std::string out;
  for (const auto& [triple, c] : t.sorted_terms()) {
    if (!out.empty()) out += " + ";
    out += coeff_prefix(c, t.field()) + format_word(triple[0], t.field()) + sep + format_word(triple[1], t.field()) + sep +
           format_word(triple[2], t.field());
  }
  return out;
}

Element concat(const Element& a, const Element& b) {
  Element out(a.field_ptr() ? a.field_ptr() : b.field_ptr());
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) out.add_term(wa.concat(wb), a.field().mul(ca, cb));
  return out;
}

std::vector<Word> mzv_words(int w) {
  std::vector<std::vector<int>> comps;
  std::vector<int> current;
  if (w >= 0) compositions(w, current, comps);
  std::vector<Word> out;
  out.reserve(comps.size());
  for (const auto& c : comps) {
    std::vector<Letter> letters;
    for (int part : c) letters.push_back(Letter{static_cast<std::uint16_t>(part), Code{1}});
    out.emplace_back(std::move(letters));
  }
  return out;
}

std::vector<Word> basis_words(int w, const Field& field) {
  if (w < 0) return {};
  const std::vector<Elem> units = field.units();
  std::vector<Word> out;
  for (const Word& shape : mzv_words(w)) {
    // Every assignment of characters to the letters of this composition.
    const int depth = shape.depth();
    std::vector<int> idx(depth, 0);
    while (true) {
      std::vector<Letter> letters(shape.letters());
      for (int i = 0; i < depth; ++i) letters[i].eps = units[idx[i]].code();
      out.emplace_back(std::move(letters));
      int pos = depth - 1;
      while (pos >= 0 && ++idx[pos] == static_cast<int>(units.size())) idx[pos--] = 0;
      if (pos < 0) break;
    }
  }
  std::sort(out.begin(), out.end(), WordOrder(field));
  return out;
}

std::vector<Word> basis_words_up_to(int w, const Field& field) {
  std::vector<Word> out;
  for (int i = 0; i <= w; ++i) {
    auto part = basis_words(i, field);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<std::pair<int, Element>> homogeneous_parts(const Element& e) {
  std::map<int, Element> parts;
  for (const auto& [w, c] : e) {
    auto [it, _] = parts.try_emplace(w.weight(), e.field_ptr());
    it->second.add_term(w, c);
  }
  return {parts.begin(), parts.end()};
}

}  // namespace amzv
