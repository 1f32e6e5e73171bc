#include "amzv/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <optional>
#include <sstream>

#include "amzv/error.hpp"
#include "amzv/verify.hpp"

namespace amzv::cli {

namespace {

struct Config {
  std::string q;
  int p = 0;
  int k = 0;
  std::string modulus;
  int prec = 20;
  bool prec_given = false;
  int zeta_prec = 20;
  int dmax = 3;
  std::optional<int> d;
  bool lt = false;
  int weight_max = 6;
  std::uint64_t seed = 1;
  int trials = 100;
  std::string format = "text";
  bool ascii = false;
  int jobs = 1;
  std::string suite = "all";
  std::vector<std::string> operands;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

FieldPtr make_field(const Config& cfg) {
  try {
    if (cfg.p != 0 || cfg.k != 0 || !cfg.modulus.empty()) {
      if (!cfg.q.empty()) throw UsageError("--q cannot be combined with --p/--k/--modulus");
      if (cfg.p == 0) throw UsageError("--p is required with --k/--modulus");
      const int k = cfg.k == 0 ? 1 : cfg.k;
      std::optional<std::vector<int>> modulus;
      if (!cfg.modulus.empty()) {
        std::vector<int> coeffs;
        std::stringstream ss(cfg.modulus);
        std::string item;
        while (std::getline(ss, item, ',')) coeffs.push_back(std::stoi(item));
        modulus = coeffs;
      }
      return ff::Field::make(cfg.p, k, modulus);
    }
    std::string q = cfg.q;
    if (q.empty()) {
      const char* env = std::getenv("AMZV_Q");
      if (env == nullptr || *env == '\0') throw UsageError("no field given: pass --q (or --p/--k/--modulus) or set AMZV_Q");
      q = env;
    }
    return ff::Field::from_q_string(q);
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

bool machine(const Config& cfg) { return cfg.format == "machine"; }

void print_element(std::ostream& out, const Element& e, const Config& cfg) {
  if (!machine(cfg)) {
    out << format_element(e) << "\n";
    return;
  }
  for (const auto& [w, c] : e.sorted_terms()) out << e.field().format(e.field().from_code(c)) << '\t' << format_word(w, e.field()) << "\n";
}

void print_tensor(std::ostream& out, const TensorElement& t, const Config& cfg) {
  if (!machine(cfg)) {
    out << format_tensor(t, cfg.ascii) << "\n";
    return;
  }
  for (const auto& [pair, c] : t.sorted_terms())
    out << t.field().format(t.field().from_code(c)) << '\t' << format_word(pair.first, t.field()) << '\t' << format_word(pair.second, t.field())
        << "\n";
}

void print_series(std::ostream& out, const Laurent& s, const std::string& label, const Config& cfg) {
  if (!machine(cfg)) {
    out << (label.empty() ? "" : label + " = ") << s.format() << "\n";
    return;
  }
  const std::string prefix = label.empty() ? "" : label + "\t";
  const Field& f = *s.field_ptr();
  for (int i = s.val(); i < s.abs_prec(); ++i)
    if (!s.coeff(i).is_zero()) out << prefix << i << '\t' << f.format(s.coeff(i)) << "\n";
  out << prefix << "O\t" << s.abs_prec() << "\n";
}

Element operand(const Config& cfg, std::size_t i, const FieldPtr& field) { return parse_element(cfg.operands.at(i), field); }

int run_binary_product(const Config& cfg, const std::string& which, std::ostream& out) {
  require(cfg.operands.size() == 2, which + " takes exactly two elements");
  const FieldPtr field = make_field(cfg);
  const Element a = operand(cfg, 0, field);
  const Element b = operand(cfg, 1, field);
  ProductEngine products(field);
  Element result(field);
  if (which == "shuffle")
    result = products.shuffle(a, b);
  else if (which == "diamond")
    result = products.diamond(a, b);
  else {
    for (const auto& [w, c] : a) require(!w.empty(), "the triangle product needs nonempty words on the left");
    result = products.triangle(a, b);
  }
  print_element(out, result, cfg);
  return kOk;
}

int run_powsum(const Config& cfg, std::ostream& out) {
  require(cfg.operands.size() == 1, "powsum takes exactly one word");
  const FieldPtr field = make_field(cfg);
  const Word w = parse_word(cfg.operands[0], *field);
  require(!w.empty(), "powsum needs a nonempty word (a positive array)");
  ZetaEngine engine(field, cfg.prec);
  std::vector<int> ds;
  if (cfg.d)
    ds.push_back(*cfg.d);
  else
    for (int d = 0; d <= cfg.dmax; ++d) ds.push_back(d);
  for (int d : ds) {
    const Laurent s = cfg.lt ? engine.power_sum_lt(w, d) : engine.power_sum_d(w, d);
    std::string label;
    if (!cfg.d || machine(cfg)) label = machine(cfg) ? std::to_string(d) : (cfg.lt ? "S_<" : "S_") + std::to_string(d);
    print_series(out, s, label, cfg);
  }
  return kOk;
}

int run_verify(const Config& cfg, std::ostream& out) {
  require(cfg.operands.empty(), "verify takes no positional arguments");
  const FieldPtr field = make_field(cfg);
  VerifyOptions options;
  options.jobs = cfg.jobs;
  std::vector<CheckReport> reports;
  const bool all = cfg.suite == "all";
  if (all || cfg.suite == "algebra") reports.push_back(check_algebra(field, cfg.weight_max, std::max(cfg.weight_max - 1, 0), options));
  if (all || cfg.suite == "coalgebra") reports.push_back(check_coalgebra(field, cfg.weight_max, options));
  if (all || cfg.suite == "hopf") reports.push_back(check_hopf(field, cfg.weight_max, std::max(cfg.weight_max, 8), options));
  if (all || cfg.suite == "oracle") reports.push_back(check_coproduct_oracle(field, cfg.weight_max + 2, 12, options));
  if (all || cfg.suite == "zeta") {
    ZetaCheckParams params;
    params.d_max = cfg.dmax;
    params.max_weight = std::min(cfg.weight_max, 4);
    params.prec = cfg.prec_given ? cfg.prec : 32;
    params.zeta_prec = cfg.zeta_prec;
    params.trials = cfg.trials;
    params.seed = cfg.seed;
    reports.push_back(check_zeta_homomorphism(field, params, options));
  }
  bool passed = true;
  for (const CheckReport& r : reports) {
    out << (machine(cfg) ? format_report_machine(r) : format_report_text(r));
    passed = passed && r.passed();
  }
  return passed ? kOk : kVerifyFailed;
}

int dispatch(const std::string& command, const Config& cfg, std::ostream& out) {
  if (command == "shuffle" || command == "diamond" || command == "triangle") return run_binary_product(cfg, command, out);
  if (command == "coproduct" || command == "antipode") {
    require(cfg.operands.size() == 1, command + " takes exactly one element");
    const FieldPtr field = make_field(cfg);
    const Element e = operand(cfg, 0, field);
    ProductEngine products(field);
    Coalgebra coalgebra(products);
    if (command == "coproduct")
      print_tensor(out, coalgebra.coproduct(e), cfg);
    else
      print_element(out, coalgebra.antipode(e), cfg);
    return kOk;
  }
  if (command == "powsum") return run_powsum(cfg, out);
  if (command == "zeta") {
    require(cfg.operands.size() == 1, "zeta takes exactly one element");
    const FieldPtr field = make_field(cfg);
    print_series(out, zeta_trunc(operand(cfg, 0, field), cfg.prec), "", cfg);
    return kOk;
  }
  if (command == "basis") {
    require(cfg.operands.size() == 1, "basis takes exactly one weight");
    const FieldPtr field = make_field(cfg);
    int w = 0;
    try {
      std::size_t used = 0;
      w = std::stoi(cfg.operands[0], &used);
      require(used == cfg.operands[0].size(), "");
    } catch (const std::exception&) {
      throw UsageError("basis weight must be an integer, got '" + cfg.operands[0] + "'");
    }
    require(w >= 0 && w <= 12, "basis weight must be in [0, 12]");
    for (const Word& word : basis_words(w, *field)) out << format_word(word, *field) << "\n";
    return kOk;
  }
  if (command == "verify") return run_verify(cfg, out);
  throw UsageError("unknown command '" + command + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Exact shuffle Hopf algebra of alternating MZVs over F_q", "amzv"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--q", cfg.q, "Field size as q or p^k (default: $AMZV_Q)");
  app.add_option("--p", cfg.p, "Field characteristic");
  app.add_option("--k", cfg.k, "Extension degree");
  app.add_option("--modulus", cfg.modulus, "Irreducible modulus, ascending comma-separated coefficients");
  app.add_option("--prec", cfg.prec, "Absolute precision N in u = 1/theta")->check(CLI::Range(1, 4096));
  app.add_option("--zeta-prec", cfg.zeta_prec, "Precision for zeta_A in verify")->check(CLI::Range(1, 4096));
  app.add_option("--dmax", cfg.dmax, "Largest degree d")->check(CLI::Range(0, 64));
  app.add_option("--weight-max", cfg.weight_max, "Weight bound for verify")->check(CLI::Range(0, 12));
  app.add_option("--seed", cfg.seed, "Seed for randomized checks");
  app.add_option("--trials", cfg.trials, "Random pairs for the zeta checks")->check(CLI::Range(0, 1000000));
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "machine"}));
  app.add_flag("--ascii", cfg.ascii, "Write (x) instead of the tensor sign");
  app.add_option("--jobs", cfg.jobs, "Worker threads for verify (0 = all cores)")->check(CLI::Range(0, 1024));

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"shuffle", "Shuffle product of two elements"},
      {"diamond", "Diamond product of two elements"},
      {"triangle", "Triangle product of two elements"},
      {"coproduct", "Coproduct of an element"},
      {"antipode", "Antipode of an element"},
      {"powsum", "Power sums S_d (or S_<d with --lt) of a word"},
      {"zeta", "Truncated alternating MZV of an element"},
      {"verify", "Run verification suites"},
      {"basis", "List the basis words of a weight"},
  };
  std::vector<CLI::App*> subs;
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("operands", cfg.operands, "Operands");
    if (name == "powsum") {
      sub->add_option("--d", cfg.d, "Single degree d");
      sub->add_flag("--lt", cfg.lt, "Print S_<d instead of S_d");
    }
    if (name == "verify") sub->add_option("--suite", cfg.suite, "Suite to run")->check(CLI::IsMember({"algebra", "coalgebra", "hopf", "oracle", "zeta", "all"}));
    subs.push_back(sub);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  cfg.prec_given = app.count("--prec") > 0;
  std::string command;
  for (CLI::App* sub : subs)
    if (sub->parsed()) command = sub->get_name();

  try {
    return dispatch(command, cfg, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsageError;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kComputeError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kComputeError;
  }
}

}  // namespace amzv::cli
