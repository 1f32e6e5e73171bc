#include "amzv/verify.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

namespace amzv {

namespace {

using Outcome = std::optional<std::string>;

int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Per-worker memoizing engines for the algebraic checks.
struct AlgebraContext {
  AlgebraContext(const FieldPtr& field, const Faults& faults) : products(field, faults.products), coalgebra(products, faults.coalgebra) {}
  ProductEngine products;
  Coalgebra coalgebra;
};

struct ZetaContext {
  ZetaContext(const FieldPtr& field, const Faults& faults, const ZetaCheckParams& params)
      : products(field, faults.products), series(field, params.prec, params.budget), zetas(field, params.zeta_prec, params.budget) {}
  ProductEngine products;
  ZetaEngine series;
  ZetaEngine zetas;
};

// Runs sections over per-worker contexts and appends them to a report.
template <class Context>
class Runner {
 public:
  Runner(CheckReport& report, const VerifyOptions& options, std::function<std::unique_ptr<Context>()> make)
      : report_(report), options_(options) {
    const int jobs = resolve_jobs(options.jobs);
    for (int i = 0; i < jobs; ++i) contexts_.push_back(make());
  }

  void run(const std::string& theorem_id, const std::string& bound, std::size_t count,
           const std::function<Outcome(Context&, std::size_t)>& check) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<Outcome> outcomes(count);
    const std::size_t workers = std::min(contexts_.size(), std::max<std::size_t>(count, 1));
    if (workers <= 1) {
      for (std::size_t i = 0; i < count; ++i) outcomes[i] = check(*contexts_[0], i);
    } else {
      std::atomic<std::size_t> next{0};
      std::exception_ptr error;
      std::mutex error_mutex;
      std::vector<std::thread> threads;
      for (std::size_t w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
          try {
            for (std::size_t i = next++; i < count; i = next++) outcomes[i] = check(*contexts_[w], i);
          } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) error = std::current_exception();
            next = count;
          }
        });
      }
      for (auto& t : threads) t.join();
      if (error) std::rethrow_exception(error);
    }
    Section section;
    section.theorem_id = theorem_id;
    section.q = report_.q;
    section.bound = bound;
    section.instances = count;
    for (auto& outcome : outcomes) {
      if (!outcome) continue;
      ++section.failures;
      if (static_cast<int>(section.counterexamples.size()) < options_.max_counterexamples)
        section.counterexamples.push_back(std::move(*outcome));
    }
    section.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report_.sections.push_back(std::move(section));
  }

 private:
  CheckReport& report_;
  const VerifyOptions& options_;
  std::vector<std::unique_ptr<Context>> contexts_;
};

std::string fw(const Word& w, const Field& f) { return format_word(w, f); }
std::string fe(const Element& e) { return format_element(e); }
std::string ft(const TensorElement& t) { return format_tensor(t); }

template <class T>
Outcome compare(const T& lhs, const T& rhs, const std::string& instance, std::string (*render)(const T&)) {
  if (lhs == rhs) return std::nullopt;
  return instance + ": lhs = " + render(lhs) + " ; rhs = " + render(rhs);
}

Outcome compare_elements(const Element& lhs, const Element& rhs, const std::string& instance) { return compare(lhs, rhs, instance, fe); }
Outcome compare_tensors(const TensorElement& lhs, const TensorElement& rhs, const std::string& instance) {
  return compare(lhs, rhs, instance, ft);
}
Outcome compare_triples(const Tensor3& lhs, const Tensor3& rhs, const std::string& instance) {
  if (lhs == rhs) return std::nullopt;
  return instance + ": lhs = " + format_tensor3(lhs) + " ; rhs = " + format_tensor3(rhs);
}

Outcome compare_series(const Laurent& lhs, const Laurent& rhs, int prec, const std::string& instance) {
  if (lhs.agrees_with(rhs, prec)) return std::nullopt;
  return instance + ": lhs = " + lhs.format() + " ; rhs = " + rhs.format();
}

std::string weight_bound(int w) { return "w<=" + std::to_string(w); }

// Unordered pairs (i <= j, or i < j when strict) of words with total weight <= bound.
std::vector<std::pair<std::size_t, std::size_t>> unordered_pairs(const std::vector<Word>& words, int bound, bool strict) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = strict ? i + 1 : i; j < words.size(); ++j)
      if (words[i].weight() + words[j].weight() <= bound) out.emplace_back(i, j);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> ordered_pairs(const std::vector<Word>& words, int bound) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = 0; j < words.size(); ++j)
      if (words[i].weight() + words[j].weight() <= bound) out.emplace_back(i, j);
  return out;
}

std::vector<std::array<std::size_t, 3>> ordered_triples(const std::vector<Word>& words, int bound) {
  std::vector<std::array<std::size_t, 3>> out;
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = 0; j < words.size(); ++j) {
      if (words[i].weight() + words[j].weight() > bound) continue;
      for (std::size_t k = 0; k < words.size(); ++k)
        if (words[i].weight() + words[j].weight() + words[k].weight() <= bound) out.push_back({i, j, k});
    }
  return out;
}

std::vector<Word> nonempty_words_up_to(int w, const Field& field) {
  std::vector<Word> out;
  for (int i = 1; i <= w; ++i) {
    auto part = basis_words(i, field);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

// x_{a,alpha} triangle e for an element e, linear in e; words of a must be nonempty.
Element triangle_elements(ProductEngine& products, const Element& a, const Element& b) { return products.triangle(a, b); }

TensorElement proper_part(const TensorElement& t, const Word& u) {
  TensorElement out = t;
  out.add_term(WordPair{Word{}, u}, t.field().neg(t.coeff(WordPair{Word{}, u}).code()));
  return out;
}

long long dimension_formula(int w, int q) {
  if (w == 0) return 1;
  long long total = 0;
  for (int r = 1; r <= w; ++r) {
    long long binom = 1;
    for (int i = 1; i <= r - 1; ++i) binom = binom * (w - 1 - (r - 1) + i) / i;
    long long units = 1;
    for (int i = 0; i < r; ++i) units *= q - 1;
    total += binom * units;
  }
  return total;
}

}  // namespace

// ---------------------------------------------------------------- report

bool CheckReport::passed() const {
  for (const Section& s : sections)
    if (!s.passed()) return false;
  return true;
}

std::uint64_t CheckReport::instances() const {
  std::uint64_t n = 0;
  for (const Section& s : sections) n += s.instances;
  return n;
}

std::uint64_t CheckReport::failures() const {
  std::uint64_t n = 0;
  for (const Section& s : sections) n += s.failures;
  return n;
}

double CheckReport::millis() const {
  double t = 0;
  for (const Section& s : sections) t += s.millis;
  return t;
}

const Section* CheckReport::find(const std::string& theorem_id) const {
  for (const Section& s : sections)
    if (s.theorem_id == theorem_id) return &s;
  return nullptr;
}

Element random_element(SplitMix64& rng, int max_weight, int max_terms, const FieldPtr& field) {
  if (max_weight < 1 || max_terms < 1) throw std::invalid_argument("random_element bounds must be >= 1");
  const auto units = field->units();
  Element out(field);
  const auto terms = 1 + rng.uniform(static_cast<std::uint64_t>(max_terms));
  for (std::uint64_t t = 0; t < terms; ++t) {
    const int w = 1 + static_cast<int>(rng.uniform(static_cast<std::uint64_t>(max_weight)));
    const auto words = basis_words(w, *field);
    const Word& word = words[rng.uniform(words.size())];
    const Code c = units[rng.uniform(units.size())].code();
    out.add_term(word, c);
  }
  return out;
}

// ---------------------------------------------------------------- algebra

CheckReport check_algebra(const FieldPtr& field, int pair_bound, int triple_bound, const VerifyOptions& options) {
  CheckReport report{"algebra", field->q(), {}};
  const Field& f = *field;
  Runner<AlgebraContext> runner(report, options, [&] { return std::make_unique<AlgebraContext>(field, options.faults); });
  const auto words = basis_words_up_to(pair_bound, f);
  const auto nonempty = nonempty_words_up_to(std::max(pair_bound, triple_bound), f);
  const auto pairs = unordered_pairs(words, pair_bound, true);
  const auto pairs_ne = ordered_pairs(nonempty, pair_bound);
  const auto triples = ordered_triples(nonempty, triple_bound);
  const auto units = f.units();

  auto pair_name = [&](const Word& a, const Word& b) { return "a=" + fw(a, f) + " b=" + fw(b, f); };
  auto triple_name = [&](const std::array<std::size_t, 3>& t) {
    return "a=" + fw(nonempty[t[0]], f) + " b=" + fw(nonempty[t[1]], f) + " c=" + fw(nonempty[t[2]], f);
  };

  runner.run("thm-commutative-diamond", weight_bound(pair_bound), pairs.size(), [&](AlgebraContext& ctx, std::size_t i) {
    const Word& a = words[pairs[i].first];
    const Word& b = words[pairs[i].second];
    return compare_elements(ctx.products.diamond(a, b), ctx.products.diamond(b, a), pair_name(a, b));
  });
  runner.run("thm-commutative-shuffle", weight_bound(pair_bound), pairs.size(), [&](AlgebraContext& ctx, std::size_t i) {
    const Word& a = words[pairs[i].first];
    const Word& b = words[pairs[i].second];
    return compare_elements(ctx.products.shuffle(a, b), ctx.products.shuffle(b, a), pair_name(a, b));
  });
  runner.run("thm-associative-diamond", weight_bound(triple_bound), triples.size(), [&](AlgebraContext& ctx, std::size_t i) {
    auto& P = ctx.products;
    const Element a = element_of(field, nonempty[triples[i][0]]);
    const Element b = element_of(field, nonempty[triples[i][1]]);
    const Element c = element_of(field, nonempty[triples[i][2]]);
    return compare_elements(P.diamond(P.diamond(a, b), c), P.diamond(a, P.diamond(b, c)), triple_name(triples[i]));
  });
  runner.run("thm-associative-shuffle", weight_bound(triple_bound), triples.size(), [&](AlgebraContext& ctx, std::size_t i) {
    auto& P = ctx.products;
    const Element a = element_of(field, nonempty[triples[i][0]]);
    const Element b = element_of(field, nonempty[triples[i][1]]);
    const Element c = element_of(field, nonempty[triples[i][2]]);
    return compare_elements(P.shuffle(P.shuffle(a, b), c), P.shuffle(a, P.shuffle(b, c)), triple_name(triples[i]));
  });
  // (a |> b) |> c = a |> (b sha c) and (a |> b) <> c = a <> (c |> b) = (a <> c) |> b.
  runner.run("prop-triangle-laws", weight_bound(triple_bound), triples.size(), [&](AlgebraContext& ctx, std::size_t i) -> Outcome {
    auto& P = ctx.products;
    const Element a = element_of(field, nonempty[triples[i][0]]);
    const Element b = element_of(field, nonempty[triples[i][1]]);
    const Element c = element_of(field, nonempty[triples[i][2]]);
    const std::string name = triple_name(triples[i]);
    if (auto r = compare_elements(P.triangle(P.triangle(a, b), c), P.triangle(a, P.shuffle(b, c)), name + " (a|>b)|>c")) return r;
    const Element left = P.diamond(P.triangle(a, b), c);
    if (auto r = compare_elements(left, P.diamond(a, P.triangle(c, b)), name + " (a|>b)<>c vs a<>(c|>b)")) return r;
    return compare_elements(left, triangle_elements(P, P.diamond(a, c), b), name + " (a|>b)<>c vs (a<>c)|>b");
  });
  // a <> b = (x_a <> x_b) |> (a_ sha b_) and a sha b = a |> b + b |> a + a <> b.
  runner.run("lemma-triangle-formulas", weight_bound(pair_bound), pairs_ne.size(), [&](AlgebraContext& ctx, std::size_t i) -> Outcome {
    auto& P = ctx.products;
    const Word& a = nonempty[pairs_ne[i].first];
    const Word& b = nonempty[pairs_ne[i].second];
    const Element heads = P.diamond(Word::letter(a.front()), Word::letter(b.front()));
    const Element tails = P.shuffle(a.tail(), b.tail());
    if (auto r = compare_elements(P.diamond(a, b), P.triangle(heads, tails), pair_name(a, b) + " diamond")) return r;
    Element rhs = P.triangle(a, b);
    rhs += P.triangle(b, a);
    rhs += P.diamond(a, b);
    return compare_elements(P.shuffle(a, b), rhs, pair_name(a, b) + " shuffle");
  });
  // phi_alpha(a) <> phi_beta(b) = phi_{alpha beta}(a <> b), phi_alpha(a) |> b = phi_alpha(a |> b),
  // phi_{alpha beta} = phi_alpha phi_beta.
  runner.run("lemma-horizontal", weight_bound(pair_bound), pairs_ne.size(), [&](AlgebraContext& ctx, std::size_t i) -> Outcome {
    auto& P = ctx.products;
    const Word& a = nonempty[pairs_ne[i].first];
    const Word& b = nonempty[pairs_ne[i].second];
    for (Elem alpha : units) {
      const Word pa = horizontal(alpha, a);
      const std::string base = pair_name(a, b) + " alpha=" + f.format(alpha);
      if (auto r = compare_elements(P.triangle(element_of(field, pa), element_of(field, b)), horizontal(alpha, P.triangle(a, b)), base + " triangle"))
        return r;
      for (Elem beta : units) {
        const std::string name = base + " beta=" + f.format(beta);
        if (auto r = compare_elements(P.diamond(pa, horizontal(beta, b)), horizontal(alpha * beta, P.diamond(a, b)), name + " diamond")) return r;
        if (horizontal(alpha * beta, a) != horizontal(alpha, horizontal(beta, a)))
          return name + " composition: " + fw(horizontal(alpha * beta, a), f) + " vs " + fw(horizontal(alpha, horizontal(beta, a)), f);
      }
    }
    return std::nullopt;
  });
  return report;
}

// ---------------------------------------------------------------- coalgebra

CheckReport check_coalgebra(const FieldPtr& field, int max_weight, const VerifyOptions& options) {
  CheckReport report{"coalgebra", field->q(), {}};
  const Field& f = *field;
  Runner<AlgebraContext> runner(report, options, [&] { return std::make_unique<AlgebraContext>(field, options.faults); });
  const auto words = basis_words_up_to(max_weight, f);
  const auto nonempty = nonempty_words_up_to(max_weight, f);
  const auto pairs = unordered_pairs(nonempty, max_weight, false);
  const auto units = f.units();
  const std::string bound = weight_bound(max_weight);

  runner.run("thm-compatibility", bound, pairs.size(), [&](AlgebraContext& ctx, std::size_t i) {
    const Word& a = nonempty[pairs[i].first];
    const Word& b = nonempty[pairs[i].second];
    const TensorElement lhs = ctx.coalgebra.coproduct(ctx.products.shuffle(a, b));
    const TensorElement rhs = tensor_shuffle(ctx.products, ctx.coalgebra.coproduct(a), ctx.coalgebra.coproduct(b));
    return compare_tensors(lhs, rhs, "a=" + fw(a, f) + " b=" + fw(b, f));
  });
  runner.run("thm-coassociativity", bound, words.size(), [&](AlgebraContext& ctx, std::size_t i) {
    const TensorElement d = ctx.coalgebra.coproduct(words[i]);
    return compare_triples(coproduct_right(ctx.coalgebra, d), coproduct_left(ctx.coalgebra, d), "u=" + fw(words[i], f));
  });
  runner.run("counit", bound, words.size(), [&](AlgebraContext& ctx, std::size_t i) -> Outcome {
    const TensorElement& d = ctx.coalgebra.coproduct(words[i]);
    const Element u = element_of(field, words[i]);
    if (auto r = compare_elements(counit_left(d), u, "u=" + fw(words[i], f) + " (counit x Id)")) return r;
    return compare_elements(counit_right(d), u, "u=" + fw(words[i], f) + " (Id x counit)");
  });
  runner.run("grading", bound, words.size(), [&](AlgebraContext& ctx, std::size_t i) -> Outcome {
    const Word& u = words[i];
    for (const auto& [pair, c] : ctx.coalgebra.coproduct(u))
      if (pair.first.weight() + pair.second.weight() != u.weight())
        return "u=" + fw(u, f) + ": term " + fw(pair.first, f) + " ⊗ " + fw(pair.second, f) + " has the wrong weight";
    return std::nullopt;
  });
  runner.run("lemma-left-nonempty", bound, nonempty.size(), [&](AlgebraContext& ctx, std::size_t i) -> Outcome {
    const Word& u = nonempty[i];
    const TensorElement& d = ctx.coalgebra.coproduct(u);
    if (!d.coeff(WordPair{Word{}, u}).is_one()) return "u=" + fw(u, f) + ": coefficient of 1 ⊗ u is not 1 in " + ft(d);
    for (const auto& [pair, c] : d)
      if (pair.first.empty() && pair.second != u) return "u=" + fw(u, f) + ": extra term 1 ⊗ " + fw(pair.second, f);
    return std::nullopt;
  });
  // Delta(phi_e(u)) = (phi_e x Id) Delta(u) + (Id x phi_e - phi_e x Id)(1 x u).
  runner.run("prop-delta-horizontal", bound, nonempty.size(), [&](AlgebraContext& ctx, std::size_t i) -> Outcome {
    const Word& u = nonempty[i];
    for (Elem e : units) {
      const TensorElement lhs = ctx.coalgebra.coproduct(horizontal(e, u));
      TensorElement rhs = horizontal_left(e, ctx.coalgebra.coproduct(u));
      rhs.add_term(WordPair{Word{}, horizontal(e, u)}, 1);
      rhs.add_term(WordPair{Word{}, u}, f.neg(1));  // phi_e(1) = 1
      if (auto r = compare_tensors(lhs, rhs, "u=" + fw(u, f) + " e=" + f.format(e))) return r;
    }
    return std::nullopt;
  });
  // Delta(u <> v) = 1 x (u <> v) + sum (u1 <> v1) x (u2 sha v2) over the proper parts.
  runner.run("lemma-delta-diamond", bound, pairs.size(), [&](AlgebraContext& ctx, std::size_t i) -> Outcome {
    auto& P = ctx.products;
    const Word& a = nonempty[pairs[i].first];
    const Word& b = nonempty[pairs[i].second];
    const Element prod = P.diamond(a, b);
    const TensorElement lhs = ctx.coalgebra.coproduct(prod);
    TensorElement rhs(field);
    for (const auto& [w, c] : prod) rhs.add_term(WordPair{Word{}, w}, c);
    const TensorElement da = proper_part(ctx.coalgebra.coproduct(a), a);
    const TensorElement db = proper_part(ctx.coalgebra.coproduct(b), b);
    for (const auto& [pa, ca] : da)
      for (const auto& [pb, cb] : db) {
        const Code c = f.mul(ca, cb);
        const Element& left = P.diamond(pa.first, pb.first);
        const Element& right = P.shuffle(pa.second, pb.second);
        for (const auto& [lw, lc] : left)
          for (const auto& [rw, rc] : right) rhs.add_term(WordPair{lw, rw}, f.mul(c, f.mul(lc, rc)));
      }
    return compare_tensors(lhs, rhs, "a=" + fw(a, f) + " b=" + fw(b, f));
  });
  return report;
}

// ---------------------------------------------------------------- hopf

CheckReport check_hopf(const FieldPtr& field, int max_weight, int dimension_bound, const VerifyOptions& options) {
  CheckReport report{"hopf", field->q(), {}};
  const Field& f = *field;
  Runner<AlgebraContext> runner(report, options, [&] { return std::make_unique<AlgebraContext>(field, options.faults); });
  const auto words = basis_words_up_to(max_weight, f);
  const auto nonempty = nonempty_words_up_to(max_weight, f);
  const auto pairs = unordered_pairs(nonempty, max_weight, false);
  const std::string bound = weight_bound(max_weight);

  runner.run("thm-hopf-antipode", bound, words.size(), [&](AlgebraContext& ctx, std::size_t i) -> Outcome {
    const Word& u = words[i];
    const TensorElement& d = ctx.coalgebra.coproduct(u);
    Element expected(field);
    if (u.empty()) expected.add_term(Word{}, 1);
    if (auto r = compare_elements(antipode_left_convolution(ctx.coalgebra, d), expected, "u=" + fw(u, f) + " m(S x Id)Delta")) return r;
    return compare_elements(antipode_right_convolution(ctx.coalgebra, d), expected, "u=" + fw(u, f) + " m(Id x S)Delta");
  });
  runner.run("antipode-weight", bound, words.size(), [&](AlgebraContext& ctx, std::size_t i) -> Outcome {
    const Word& u = words[i];
    for (const auto& [w, c] : ctx.coalgebra.antipode(u))
      if (w.weight() != u.weight()) return "u=" + fw(u, f) + ": S(u) = " + fe(ctx.coalgebra.antipode(u)) + " is not homogeneous";
    return std::nullopt;
  });
  runner.run("antipode-involution", bound, words.size(), [&](AlgebraContext& ctx, std::size_t i) {
    const Element s = ctx.coalgebra.antipode(words[i]);
    return compare_elements(ctx.coalgebra.antipode(s), element_of(field, words[i]), "u=" + fw(words[i], f));
  });
  runner.run("antipode-multiplicative", bound, pairs.size(), [&](AlgebraContext& ctx, std::size_t i) {
    const Word& a = nonempty[pairs[i].first];
    const Word& b = nonempty[pairs[i].second];
    const Element lhs = ctx.coalgebra.antipode(ctx.products.shuffle(a, b));
    const Element sa = ctx.coalgebra.antipode(a);
    const Element sb = ctx.coalgebra.antipode(b);
    return compare_elements(lhs, ctx.products.shuffle(sa, sb), "a=" + fw(a, f) + " b=" + fw(b, f));
  });
  runner.run("finite-type-dimension", weight_bound(dimension_bound), static_cast<std::size_t>(dimension_bound) + 1,
             [&](AlgebraContext&, std::size_t i) -> Outcome {
               const int w = static_cast<int>(i);
               const long long got = static_cast<long long>(basis_words(w, f).size());
               const long long want = dimension_formula(w, f.q());
               if (got == want) return std::nullopt;
               return "w=" + std::to_string(w) + ": " + std::to_string(got) + " basis words, formula gives " + std::to_string(want);
             });
  return report;
}

// ---------------------------------------------------------------- oracle

CheckReport check_coproduct_oracle(const FieldPtr& field, int max_n, int table_bound, const VerifyOptions& options) {
  CheckReport report{"oracle", field->q(), {}};
  const Field& f = *field;
  Runner<AlgebraContext> runner(report, options, [&] { return std::make_unique<AlgebraContext>(field, options.faults); });

  runner.run("prop-delta-letter", "n<=" + std::to_string(max_n), static_cast<std::size_t>(std::max(max_n, 0)), [&](AlgebraContext& ctx, std::size_t i) {
    const int n = static_cast<int>(i) + 1;
    const Letter x{static_cast<std::uint16_t>(n), Code{1}};
    return compare_tensors(ctx.coalgebra.coproduct_letter(x), ctx.coalgebra.coproduct_mzv_recursive(n), "n=" + std::to_string(n));
  });
  runner.run("lemma-delta-1n", "n<=" + std::to_string(table_bound), static_cast<std::size_t>(std::max(table_bound, 0)),
             [&](AlgebraContext& ctx, std::size_t i) -> Outcome {
               const int n = static_cast<int>(i) + 1;
               for (int j = 1; j <= n; ++j) {
                 const Code want = (j < n && j % (f.q() - 1) == 0) ? Code{1} : Code{0};
                 const Code got = ctx.products.delta(1, n, j);
                 if (got != want)
                   return "Delta^" + std::to_string(j) + "_{1," + std::to_string(n) + "} = " + f.format(f.from_code(got)) + ", lemma gives " +
                          f.format(f.from_code(want));
               }
               return std::nullopt;
             });
  std::vector<Word> deep;
  for (int w = 2; w <= max_n; ++w)
    for (const Word& u : mzv_words(w))
      if (u.depth() >= 2) deep.push_back(u);
  runner.run("mzv-coproduct-recursion", "w<=" + std::to_string(max_n), deep.size(), [&](AlgebraContext& ctx, std::size_t i) {
    return compare_tensors(ctx.coalgebra.coproduct(deep[i]), ctx.coalgebra.coproduct_mzv_word(deep[i]), "u=" + fw(deep[i], f));
  });
  return report;
}

// ---------------------------------------------------------------- zeta

CheckReport check_zeta_homomorphism(const FieldPtr& field, const ZetaCheckParams& params, const VerifyOptions& options) {
  CheckReport report{"zeta", field->q(), {}};
  const Field& f = *field;
  Runner<ZetaContext> runner(report, options, [&] { return std::make_unique<ZetaContext>(field, options.faults, params); });
  const auto units = f.units();

  SplitMix64 rng(params.seed);
  std::vector<std::pair<Element, Element>> samples;
  for (int t = 0; t < params.trials; ++t) {
    Element a = random_element(rng, params.max_weight, params.max_terms, field);
    Element b = random_element(rng, params.max_weight, params.max_terms, field);
    samples.emplace_back(std::move(a), std::move(b));
  }
  auto sample_name = [&](std::size_t t) {
    return "trial=" + std::to_string(t) + " a=" + fe(samples[t].first) + " b=" + fe(samples[t].second);
  };
  const std::string tail = ",w<=" + std::to_string(params.max_weight) + ",trials=" + std::to_string(params.trials) +
                           ",seed=" + std::to_string(params.seed);
  const auto per_trial = static_cast<std::size_t>(params.d_max) + 1;

  runner.run("thm-shuffle-map-lt", "d<=" + std::to_string(params.d_max) + ",N=" + std::to_string(params.prec) + tail,
             samples.size() * per_trial, [&](ZetaContext& ctx, std::size_t i) {
               const std::size_t t = i / per_trial;
               const int d = static_cast<int>(i % per_trial);
               const auto& [a, b] = samples[t];
               const Element prod = ctx.products.shuffle(a, b);
               const Laurent lhs = ctx.series.power_sum_lt(prod, d);
               const Laurent rhs = ctx.series.power_sum_lt(a, d) * ctx.series.power_sum_lt(b, d);
               return compare_series(lhs, rhs, params.prec, sample_name(t) + " d=" + std::to_string(d));
             });
  runner.run("thm-shuffle-map-zeta", "N=" + std::to_string(params.zeta_prec) + tail, samples.size(), [&](ZetaContext& ctx, std::size_t t) {
    const auto& [a, b] = samples[t];
    const Element prod = ctx.products.shuffle(a, b);
    const Laurent lhs = ctx.zetas.zeta(prod);
    const Laurent rhs = ctx.zetas.zeta(a) * ctx.zetas.zeta(b);
    return compare_series(lhs, rhs, params.zeta_prec, sample_name(t));
  });

  // S_d(alpha; r) S_d(beta; s) = S_d(alpha beta; r + s) + sum_{i+j=r+s} Delta^j_{r,s} S_d((alpha beta, 1); (i, j)).
  struct ChenCase {
    int r, s, d;
    Code alpha, beta;
  };
  auto chen_cases = [&](bool twisted) {
    std::vector<ChenCase> out;
    for (int total = 2; total <= params.chen_weight; ++total)
      for (int r = 1; r < total; ++r)
        for (int d = 0; d <= params.chen_d; ++d) {
          if (!twisted) {
            out.push_back({r, total - r, d, 1, 1});
            continue;
          }
          for (Elem alpha : units)
            for (Elem beta : units) out.push_back({r, total - r, d, alpha.code(), beta.code()});
        }
    return out;
  };
  auto chen_check = [&](ZetaContext& ctx, const ChenCase& c) {
    auto& Z = ctx.series;
    const Code ab = f.mul(c.alpha, c.beta);
    const auto letter = [](int n, Code e) { return Letter{static_cast<std::uint16_t>(n), e}; };
    const Laurent lhs = Z.power_sum_d(Word::letter(letter(c.r, c.alpha)), c.d) * Z.power_sum_d(Word::letter(letter(c.s, c.beta)), c.d);
    Laurent rhs = Z.power_sum_d(Word::letter(letter(c.r + c.s, ab)), c.d);
    for (int j = 1; j < c.r + c.s; ++j) {
      const Code delta = ctx.products.delta(c.r, c.s, j);
      if (delta == 0) continue;
      rhs += Z.power_sum_d(Word({letter(c.r + c.s - j, ab), letter(j, 1)}), c.d).scaled(delta);
    }
    return compare_series(lhs, rhs, params.prec,
                          "r=" + std::to_string(c.r) + " s=" + std::to_string(c.s) + " d=" + std::to_string(c.d) +
                              " alpha=" + f.format(f.from_code(c.alpha)) + " beta=" + f.format(f.from_code(c.beta)));
  };
  const auto plain = chen_cases(false);
  const auto twisted = chen_cases(true);
  const std::string chen_bound = "r+s<=" + std::to_string(params.chen_weight) + ",d<=" + std::to_string(params.chen_d) + ",N=" + std::to_string(params.prec);
  runner.run("chen", chen_bound, plain.size(), [&](ZetaContext& ctx, std::size_t i) { return chen_check(ctx, plain[i]); });
  runner.run("chen-twisted", chen_bound, twisted.size(), [&](ZetaContext& ctx, std::size_t i) { return chen_check(ctx, twisted[i]); });

  // S_d((e); (s)) = e^d S_d((1); (s)) for d <= 4, s <= 3.
  const int twist_d = 4, twist_s = 3;
  const std::size_t twist_count = units.size() * static_cast<std::size_t>(twist_s) * static_cast<std::size_t>(twist_d + 1);
  runner.run("character-twist", "d<=4,s<=3,N=" + std::to_string(params.prec), twist_count, [&](ZetaContext& ctx, std::size_t i) {
    const Elem e = units[i % units.size()];
    const int s = 1 + static_cast<int>((i / units.size()) % twist_s);
    const int d = static_cast<int>(i / (units.size() * twist_s));
    const Laurent lhs = ctx.series.power_sum_letter(Letter{static_cast<std::uint16_t>(s), e.code()}, d);
    const Laurent rhs = ctx.series.power_sum_letter(Letter{static_cast<std::uint16_t>(s), Code{1}}, d).scaled(e.pow(d).code());
    return compare_series(lhs, rhs, params.prec, "e=" + f.format(e) + " s=" + std::to_string(s) + " d=" + std::to_string(d));
  });

  const auto nonempty = nonempty_words_up_to(params.max_weight, f);
  runner.run("valuation-bound", "d<=" + std::to_string(params.d_max) + ",w<=" + std::to_string(params.max_weight) + ",N=" + std::to_string(params.prec),
             nonempty.size() * per_trial, [&](ZetaContext& ctx, std::size_t i) -> Outcome {
               const Word& u = nonempty[i / per_trial];
               const int d = static_cast<int>(i % per_trial);
               const Laurent& s = ctx.series.power_sum_d(u, d);
               if (s.valuation() >= d) return std::nullopt;
               return "u=" + fw(u, f) + " d=" + std::to_string(d) + ": S_d = " + s.format();
             });
  return report;
}

// ---------------------------------------------------------------- output

std::string format_report_text(const CheckReport& report) {
  std::ostringstream out;
  for (const Section& s : report.sections) {
    out << (s.passed() ? "[PASS] " : "[FAIL] ") << s.theorem_id << "  q=" << s.q << "  " << s.bound << "  instances=" << s.instances
        << "  failures=" << s.failures << "  (" << static_cast<long long>(s.millis) << " ms)\n";
    for (const std::string& c : s.counterexamples) out << "    counterexample: " << c << "\n";
    if (s.failures > s.counterexamples.size()) out << "    ... " << (s.failures - s.counterexamples.size()) << " more\n";
  }
  out << report.suite << " q=" << report.q << ": " << (report.passed() ? "PASS" : "FAIL") << " (" << report.instances() << " instances, "
      << report.failures() << " failures)\n";
  return out.str();
}

std::string format_report_machine(const CheckReport& report) {
  std::ostringstream out;
  for (const Section& s : report.sections)
    out << s.theorem_id << '\t' << s.q << '\t' << s.bound << '\t' << s.instances << '\t' << s.failures << '\t' << static_cast<long long>(s.millis)
        << '\n';
  return out.str();
}

}  // namespace amzv
