// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only when
// every criterion passes.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "amzv/verify.hpp"
#include "oracles.hpp"

using namespace amzv;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  std::vector<std::string> problems;

  void fail(const std::string& why) {
    ok = false;
    problems.push_back(why);
  }
};

FieldPtr field(int q) { return ff::Field::from_q_string(std::to_string(q)); }

VerifyOptions default_options() {
  VerifyOptions o;
  o.jobs = 0;
  return o;
}

// Requires every named section of the report to exist and pass.
void require_sections(Outcome& out, const CheckReport& r, const std::vector<std::string>& ids, std::uint64_t& instances) {
  for (const std::string& id : ids) {
    const Section* s = r.find(id);
    if (s == nullptr) {
      out.fail(id + " missing for q=" + std::to_string(r.q));
      continue;
    }
    instances += s->instances;
    if (s->instances == 0) out.fail(id + " checked no instances for q=" + std::to_string(r.q));
    if (!s->passed())
      out.fail(id + " q=" + std::to_string(r.q) + ": " + std::to_string(s->failures) + " failures" +
               (s->counterexamples.empty() ? "" : ", e.g. " + s->counterexamples.front()));
  }
}

void require_all(Outcome& out, const CheckReport& r, std::uint64_t& instances) {
  std::vector<std::string> ids;
  for (const Section& s : r.sections) ids.push_back(s.theorem_id);
  require_sections(out, r, ids, instances);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(AMZV_GOLDEN_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string s = ss.str();
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

std::string format_oracle(const oracle::Series& s, const FieldPtr& f) {
  int first = 0;
  while (first < static_cast<int>(s.size()) && s[static_cast<std::size_t>(first)] == 0) ++first;
  return Laurent(f, first, std::vector<Code>(s.begin() + first, s.end())).format();
}

void print(int id, const std::string& title, const Outcome& out, double secs) {
  std::cout << (out.ok ? "[PASS] " : "[FAIL] ") << "criterion " << id << ": " << title << " -- " << out.detail << " ("
            << static_cast<long long>(secs * 1000) << " ms)\n";
  for (const std::string& p : out.problems) std::cout << "        " << p << "\n";
}

}  // namespace

int main() {
  const auto options = default_options();
  bool all_ok = true;
  auto finish = [&](int id, const std::string& title, Outcome& out, std::chrono::steady_clock::time_point start, double limit_seconds) {
    const double secs = seconds_since(start);
    if (limit_seconds > 0 && secs > limit_seconds) out.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(limit_seconds) + " s");
    print(id, title, out, secs);
    all_ok = all_ok && out.ok;
  };

  // 1. Commutativity (pairs, total weight <= 6) and associativity (triples, <= 5).
  {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    std::uint64_t n = 0;
    for (int q : {2, 3, 4}) require_all(out, check_algebra(field(q), 6, 5, options), n);
    out.detail = "diamond and shuffle, q in {2,3,4}, " + std::to_string(n) + " instances";
    finish(1, "algebra", out, start, 300);
  }

  // 2 and 3 share the coalgebra reports.
  std::vector<CheckReport> coalgebra_reports;
  double coalgebra_secs = 0;
  {
    const auto start = std::chrono::steady_clock::now();
    for (int q : {2, 3, 4}) coalgebra_reports.push_back(check_coalgebra(field(q), 6, options));
    coalgebra_secs = seconds_since(start);
  }
  {
    Outcome out;
    std::uint64_t n = 0;
    for (const auto& r : coalgebra_reports) require_sections(out, r, {"thm-compatibility"}, n);
    out.detail = "pairs of total weight <= 6, q in {2,3,4}, " + std::to_string(n) + " instances";
    if (coalgebra_secs > 600) out.fail("coalgebra checks took " + std::to_string(coalgebra_secs) + " s");
    print(2, "compatibility", out, coalgebra_secs);
    all_ok = all_ok && out.ok;
  }
  {
    Outcome out;
    std::uint64_t n = 0;
    for (const auto& r : coalgebra_reports) require_all(out, r, n);
    out.detail = "coassociativity, counit, grading and coproduct lemmas on words of weight <= 6, q in {2,3,4}, " + std::to_string(n) +
                 " instances";
    print(3, "coassociativity + counit", out, coalgebra_secs);
    all_ok = all_ok && out.ok;
  }

  // 4. Hopf algebra.
  {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    std::uint64_t n = 0;
    for (int q : {2, 3, 4}) require_all(out, check_hopf(field(q), 6, 8, options), n);
    out.detail = "antipode axioms and weight on words of weight <= 6, dimension formula for w <= 8, q in {2,3,4}, " + std::to_string(n) +
                 " instances";
    finish(4, "Hopf/antipode", out, start, 0);
  }

  // 5. Closed coproduct formula against the weight recursion.
  {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    std::uint64_t n = 0;
    for (int q : {2, 3, 4, 5}) require_all(out, check_coproduct_oracle(field(q), 8, 12, options), n);
    out.detail = "n <= 8 and Delta^j_{1,n} for n <= 12, q in {2,3,4,5}, " + std::to_string(n) + " instances";
    finish(5, "closed-formula oracle", out, start, 0);
  }

  // 6 and 7 share the zeta reports.
  std::vector<CheckReport> zeta_reports;
  double zeta_secs = 0;
  {
    const auto start = std::chrono::steady_clock::now();
    ZetaCheckParams params;  // d <= 3, weight <= 4, N = 32, zeta at N = 20, 100 trials, Chen r+s <= 6, d <= 2
    for (int q : {2, 3}) zeta_reports.push_back(check_zeta_homomorphism(field(q), params, options));
    zeta_secs = seconds_since(start);
  }
  {
    Outcome out;
    std::uint64_t n = 0;
    for (const auto& r : zeta_reports) require_sections(out, r, {"thm-shuffle-map-lt", "thm-shuffle-map-zeta", "valuation-bound"}, n);
    out.detail = "S_<d for d <= 3 at N = 32 and zeta_A at N = 20, 100 seeded pairs of weight <= 4, q in {2,3}, " + std::to_string(n) +
                 " instances";
    if (zeta_secs > 300) out.fail("zeta checks took " + std::to_string(zeta_secs) + " s");
    print(6, "numeric shuffle homomorphism", out, zeta_secs);
    all_ok = all_ok && out.ok;
  }
  {
    Outcome out;
    std::uint64_t n = 0;
    for (const auto& r : zeta_reports) require_sections(out, r, {"chen", "chen-twisted", "character-twist"}, n);
    out.detail = "r+s <= 6, d <= 2, all character pairs, q in {2,3}, " + std::to_string(n) + " instances";
    print(7, "Chen / twisted Chen", out, 0);
    all_ok = all_ok && out.ok;
  }

  // 8. Spot values, each against the chain enumerator and the frozen golden file.
  {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    int n = 0;
    const int prec = 12;
    for (int q : {2, 3, 4, 5}) {
      auto f = field(q);
      ZetaEngine engine(f, prec);
      for (Elem e : f->units())
        for (int s = 1; s <= 6; ++s) {
          ++n;
          const Laurent s0 = engine.power_sum_d(Word::letter(make_letter(s, e)), 0);
          const auto brute = oracle::power_sum_chains(*f, {e.code()}, {s}, 0, prec);
          if (s0.format() != "1 + O(u^12)" || format_oracle(brute, f) != s0.format())
            out.fail("S_0 of (" + f->format(e) + ";" + std::to_string(s) + ") = " + s0.format());
        }
    }
    auto f2 = field(2);
    {
      ++n;
      const Laurent s1 = power_sum_d(ZetaArray{{1}, {1}}, 1, 6, f2);
      const std::string brute = format_oracle(oracle::power_sum_chains(*f2, {1}, {1}, 1, 6), f2);
      const std::string golden = read_golden("spot_s1_q2.txt");
      if (s1.format() != brute || s1.format() != golden) out.fail("S_1((1);(1)) = " + s1.format() + ", enumerator " + brute + ", golden " + golden);
    }
    {
      ++n;
      const Laurent z = zeta_trunc(parse_element("x[1,0]", f2), 4);
      oracle::Series total(4, 0);
      for (int d = 0; d <= 4; ++d) {
        const auto sd = oracle::power_sum_chains(*f2, {1}, {1}, d, 4);
        for (int i = 0; i < 4; ++i) total[i] = f2->add(total[i], sd[i]);
      }
      const std::string brute = format_oracle(total, f2);
      const std::string golden = read_golden("spot_zeta_x1_q2.txt");
      if (z.format() != brute || z.format() != golden) out.fail("zeta_A(x_{1,1}) = " + z.format() + ", enumerator " + brute + ", golden " + golden);
    }
    out.detail = std::to_string(n) + " values: S_0 of depth-1 arrays (q in {2,3,4,5}), S_1((1);(1)) and zeta_A(x_{1,1}) at q=2";
    finish(8, "spot values", out, start, 0);
  }

  // 9. Negative controls: each fault must trip at least one suite.
  {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    std::vector<std::string> tripped;
    auto faulty = [&](Faults faults) {
      VerifyOptions o = options;
      o.faults = faults;
      return o;
    };
    auto first_failure = [](const CheckReport& r) -> std::string {
      for (const Section& s : r.sections)
        if (!s.passed()) return s.theorem_id + " (" + std::to_string(s.failures) + " failures)";
      return "";
    };
    const CheckReport bad_delta = check_algebra(field(2), 6, 5, faulty(Faults{ProductFaults{true}, {}}));
    const CheckReport bad_unit = check_coalgebra(field(2), 6, faulty(Faults{{}, CoalgebraFaults{true, false}}));
    const CheckReport bad_sign = check_hopf(field(3), 6, 8, faulty(Faults{{}, CoalgebraFaults{false, true}}));
    const std::vector<std::pair<std::string, const CheckReport*>> controls = {
        {"corrupted Delta^1_{1,1}", &bad_delta}, {"dropped 1 (x) u term", &bad_unit}, {"flipped antipode sign", &bad_sign}};
    for (const auto& [name, report] : controls) {
      const std::string hit = first_failure(*report);
      if (hit.empty())
        out.fail(name + " was not detected");
      else
        tripped.push_back(name + " -> " + hit);
    }
    for (std::size_t i = 0; i < tripped.size(); ++i) out.detail += (i ? "; " : "") + tripped[i];
    finish(9, "negative controls", out, start, 0);
  }

  std::cout << (all_ok ? "ACCEPTANCE: PASS" : "ACCEPTANCE: FAIL") << "\n";
  return all_ok ? 0 : 1;
}
