// Python bindings: fields, elements, the products, the coproduct and antipode,
// power sums, zeta_A and the verification suites.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "amzv/error.hpp"
#include "amzv/verify.hpp"

namespace py = pybind11;
using namespace amzv;

namespace {

/// A field handle; Python never sees a raw Field.
struct PyField {
  FieldPtr ptr;
};

struct PyElement {
  Element value;
};

struct PyTensor {
  TensorElement value;
};

/// Product and coalgebra engines sharing one cache for a field.
class Algebra {
 public:
  explicit Algebra(FieldPtr field) : products_(std::make_unique<ProductEngine>(field)), coalgebra_(std::make_unique<Coalgebra>(*products_)) {}

  const FieldPtr& field() const { return products_->field_ptr(); }
  ProductEngine& products() { return *products_; }
  Coalgebra& coalgebra() { return *coalgebra_; }

 private:
  std::unique_ptr<ProductEngine> products_;
  std::unique_ptr<Coalgebra> coalgebra_;
};

using Operand = std::variant<PyElement, std::string>;

Element to_element(const Operand& x, const FieldPtr& field) {
  if (const auto* s = std::get_if<std::string>(&x)) return parse_element(*s, field);
  const Element& e = std::get<PyElement>(x).value;
  if (e.field_ptr() && !e.field().same_as(*field)) throw std::invalid_argument("element belongs to a different field");
  return e;
}

Word to_word(const std::string& text, const FieldPtr& field) { return parse_word(text, *field); }

std::vector<std::pair<std::string, std::string>> element_terms(const Element& e) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [w, c] : e.sorted_terms()) out.emplace_back(e.field().format(e.field().from_code(c)), format_word(w, e.field()));
  return out;
}

std::vector<std::tuple<std::string, std::string, std::string>> tensor_terms(const TensorElement& t) {
  std::vector<std::tuple<std::string, std::string, std::string>> out;
  const Field& f = t.field();
  for (const auto& [pair, c] : t.sorted_terms())
    out.emplace_back(f.format(f.from_code(c)), format_word(pair.first, f), format_word(pair.second, f));
  return out;
}

py::list report_sections(const CheckReport& r) {
  py::list out;
  for (const Section& s : r.sections) {
    py::dict d;
    d["theorem_id"] = s.theorem_id;
    d["q"] = s.q;
    d["bound"] = s.bound;
    d["instances"] = s.instances;
    d["failures"] = s.failures;
    d["counterexamples"] = s.counterexamples;
    d["millis"] = s.millis;
    out.append(d);
  }
  return out;
}

VerifyOptions options(int jobs) {
  VerifyOptions o;
  o.jobs = jobs;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact arithmetic in the shuffle Hopf algebra of alternating multiple zeta values over F_q";

  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<PyField>(m, "Field")
      .def(py::init([](int q) { return PyField{Field::from_q_string(std::to_string(q))}; }), py::arg("q"))
      .def(py::init([](int p, int k, std::optional<std::vector<int>> modulus) { return PyField{Field::make(p, k, std::move(modulus))}; }),
           py::arg("p"), py::arg("k"), py::arg("modulus") = std::nullopt)
      .def_property_readonly("p", [](const PyField& f) { return f.ptr->p(); })
      .def_property_readonly("k", [](const PyField& f) { return f.ptr->k(); })
      .def_property_readonly("q", [](const PyField& f) { return f.ptr->q(); })
      .def_property_readonly("modulus", [](const PyField& f) { return f.ptr->modulus(); })
      .def("units", [](const PyField& f) {
        std::vector<std::string> out;
        for (Elem e : f.ptr->units()) out.push_back(f.ptr->format(e));
        return out;
      })
      .def("basis", [](const PyField& f, int weight) {
        std::vector<std::string> out;
        for (const Word& w : basis_words(weight, *f.ptr)) out.push_back(format_word(w, *f.ptr));
        return out;
      }, py::arg("weight"))
      .def("element", [](const PyField& f, const std::string& text) { return PyElement{parse_element(text, f.ptr)}; }, py::arg("text"))
      .def("__repr__", [](const PyField& f) { return "Field(" + std::to_string(f.ptr->q()) + ")"; });

  py::class_<PyElement>(m, "Element")
      .def("__str__", [](const PyElement& e) { return format_element(e.value); })
      .def("__repr__", [](const PyElement& e) { return "Element('" + format_element(e.value) + "')"; })
      .def("__eq__", [](const PyElement& a, const PyElement& b) { return a.value == b.value; })
      .def("__add__", [](const PyElement& a, const PyElement& b) { return PyElement{a.value + b.value}; })
      .def("__sub__", [](const PyElement& a, const PyElement& b) { return PyElement{a.value - b.value}; })
      .def("__neg__", [](const PyElement& a) { return PyElement{-a.value}; })
      .def("is_zero", [](const PyElement& e) { return e.value.is_zero(); })
      .def("terms", [](const PyElement& e) { return element_terms(e.value); }, "(coefficient, word) pairs in canonical order");

  py::class_<PyTensor>(m, "Tensor")
      .def("__str__", [](const PyTensor& t) { return format_tensor(t.value); })
      .def("format", [](const PyTensor& t, bool ascii) { return format_tensor(t.value, ascii); }, py::arg("ascii") = false)
      .def("__eq__", [](const PyTensor& a, const PyTensor& b) { return a.value == b.value; })
      .def("terms", [](const PyTensor& t) { return tensor_terms(t.value); }, "(coefficient, left, right) triples in canonical order");

  py::class_<Laurent>(m, "Series")
      .def("__str__", &Laurent::format)
      .def("__repr__", [](const Laurent& s) { return "Series('" + s.format() + "')"; })
      .def_property_readonly("valuation", &Laurent::valuation)
      .def_property_readonly("abs_prec", &Laurent::abs_prec)
      .def("coeff", [](const Laurent& s, int i) { return s.field_ptr()->format(s.coeff(i)); }, py::arg("i"));

  py::class_<Algebra>(m, "Algebra")
      .def(py::init([](const PyField& f) { return std::make_unique<Algebra>(f.ptr); }), py::arg("field"))
      .def_property_readonly("field", [](const Algebra& a) { return PyField{a.field()}; })
      .def("shuffle", [](Algebra& a, const Operand& x, const Operand& y) {
        return PyElement{a.products().shuffle(to_element(x, a.field()), to_element(y, a.field()))};
      })
      .def("diamond", [](Algebra& a, const Operand& x, const Operand& y) {
        return PyElement{a.products().diamond(to_element(x, a.field()), to_element(y, a.field()))};
      })
      .def("triangle", [](Algebra& a, const Operand& x, const Operand& y) {
        return PyElement{a.products().triangle(to_element(x, a.field()), to_element(y, a.field()))};
      })
      .def("delta", [](Algebra& a, int r, int s, int i) { return a.field()->format(a.field()->from_code(a.products().delta(r, s, i))); },
           py::arg("r"), py::arg("s"), py::arg("i"))
      .def("coproduct", [](Algebra& a, const Operand& x) { return PyTensor{a.coalgebra().coproduct(to_element(x, a.field()))}; })
      .def("antipode", [](Algebra& a, const Operand& x) { return PyElement{a.coalgebra().antipode(to_element(x, a.field()))}; });

  m.def(
      "power_sum",
      [](const PyField& f, const std::string& word, int d, int prec, bool lt) {
        ZetaEngine engine(f.ptr, prec);
        const Word w = to_word(word, f.ptr);
        return lt ? engine.power_sum_lt(w, d) : engine.power_sum_d(w, d);
      },
      py::arg("field"), py::arg("word"), py::arg("d"), py::arg("prec") = 20, py::arg("lt") = false,
      "S_d (or S_<d with lt=True) of a word, truncated at u^prec");
  m.def(
      "zeta",
      [](const PyField& f, const Operand& x, int prec) { return zeta_trunc(to_element(x, f.ptr), prec); }, py::arg("field"), py::arg("x"),
      py::arg("prec") = 20, "zeta_A of an element, truncated at u^prec");

  m.def(
      "check_algebra", [](const PyField& f, int pair_bound, int triple_bound, int jobs) {
        return report_sections(check_algebra(f.ptr, pair_bound, triple_bound, options(jobs)));
      },
      py::arg("field"), py::arg("pair_bound") = 6, py::arg("triple_bound") = 5, py::arg("jobs") = 1);
  m.def(
      "check_coalgebra", [](const PyField& f, int max_weight, int jobs) {
        return report_sections(check_coalgebra(f.ptr, max_weight, options(jobs)));
      },
      py::arg("field"), py::arg("max_weight") = 6, py::arg("jobs") = 1);
  m.def(
      "check_hopf", [](const PyField& f, int max_weight, int dimension_bound, int jobs) {
        return report_sections(check_hopf(f.ptr, max_weight, dimension_bound, options(jobs)));
      },
      py::arg("field"), py::arg("max_weight") = 6, py::arg("dimension_bound") = 8, py::arg("jobs") = 1);
  m.def(
      "check_coproduct_oracle", [](const PyField& f, int max_n, int table_bound, int jobs) {
        return report_sections(check_coproduct_oracle(f.ptr, max_n, table_bound, options(jobs)));
      },
      py::arg("field"), py::arg("max_n") = 8, py::arg("table_bound") = 12, py::arg("jobs") = 1);
  m.def(
      "check_zeta", [](const PyField& f, int d_max, int max_weight, int prec, int zeta_prec, int trials, std::uint64_t seed, int jobs) {
        ZetaCheckParams p;
        p.d_max = d_max;
        p.max_weight = max_weight;
        p.prec = prec;
        p.zeta_prec = zeta_prec;
        p.trials = trials;
        p.seed = seed;
        return report_sections(check_zeta_homomorphism(f.ptr, p, options(jobs)));
      },
      py::arg("field"), py::arg("d_max") = 3, py::arg("max_weight") = 4, py::arg("prec") = 32, py::arg("zeta_prec") = 20,
      py::arg("trials") = 100, py::arg("seed") = 1, py::arg("jobs") = 1);
}
