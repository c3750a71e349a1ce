#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nott/character.hpp"
#include "nott/equivalence.hpp"
#include "nott/errors.hpp"
#include "nott/literal.hpp"
#include "nott/reduction.hpp"
#include "nott/report.hpp"

namespace py = pybind11;
using namespace nott;

namespace {

SearchOptions options(std::uint64_t budget, int jobs) { return {budget, jobs}; }

Character parse(const std::string& text, int p) {
  if (text.find('=') != std::string::npos) return parse_character_text(text);
  if (p == 0) throw UsageError("a bare character literal needs p");
  return parse_character_literal(text, Prime(p));
}

py::dict witness_dict(const NottinghamElt& u, std::optional<int> kernel) {
  py::dict d;
  d["u"] = format_product(u);
  d["precision"] = u.precision();
  if (kernel) d["kernel_value"] = *kernel;
  return d;
}

CountMethod method_of(const std::string& name) {
  if (name == "canonical" || name == "canonical-reduce") return CountMethod::canonical_reduce;
  if (name == "oracle" || name == "oracle-partition") return CountMethod::oracle_partition;
  throw UsageError("unknown method '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Order-p^2 torsion characters of the Nottingham group over F_p";

  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);

  py::class_<Character>(m, "Character")
      .def(py::init(&parse), py::arg("text"), py::arg("p") = 0)
      .def_property_readonly("p", [](const Character& c) { return c.prime().value(); })
      .def_property_readonly("coeffs", [](const Character& c) { return c.entries(); })
      .def_property_readonly("type", [](const Character& c) {
        const TypeLM t = break_sequence(c);
        return py::make_tuple(t.l, t.m);
      })
      .def("coeff", &Character::coeff)
      .def("is_reduced", [](const Character& c) { return is_reduced(c); })
      .def("literal", &Character::literal)
      .def("to_json", [](const Character& c) { return character_to_json(c).dump(); })
      .def_static("from_json", [](const std::string& s) {
        return character_from_json(nlohmann::json::parse(s));
      })
      .def("__mul__", [](const Character& c, long n) { return scalar_mul(n, c); })
      .def("__rmul__", [](const Character& c, long n) { return scalar_mul(n, c); })
      .def("__eq__", [](const Character& a, const Character& b) { return a == b; })
      .def("__hash__", [](const Character& c) { return py::hash(py::str(c.text())); })
      .def("__str__", &Character::text)
      .def("__repr__", [](const Character& c) { return "Character('" + c.text() + "')"; });

  m.def("reduce", [](const Character& chi) {
    const Reduction r = reduce(chi);
    const Character psi = r.form.to_character();
    py::dict d;
    d["reduced"] = psi;
    d["witness"] = witness_dict(r.witness.u, r.witness.kernel_value);
    d["verified"] = verify_witness(chi, psi, r.witness.u);
    return d;
  }, py::arg("chi"));

  m.def("act", [](const std::string& u, const Character& chi) {
    return char_act(parse_nottingham(u, chi.prime(), chi.bound()), chi);
  }, py::arg("u"), py::arg("chi"), "The character f -> chi(f o u), u in product or series form.");

  m.def("evaluate", [](const Character& chi, const std::string& f) {
    return char_eval(chi, parse_unit(f, chi.prime(), chi.bound()));
  }, py::arg("chi"), py::arg("f"));

  m.def("verify_witness", [](const Character& chi, const Character& psi, const std::string& u) {
    return to_string(check_witness(chi, psi, parse_nottingham(u, chi.prime(), chi.bound())));
  }, py::arg("chi"), py::arg("psi"), py::arg("u"));

  m.def("strict_search", [](const Character& chi, const Character& psi, std::uint64_t budget, int jobs)
        -> std::optional<py::dict> {
    const auto w = strict_equiv_search(chi, psi, options(budget, jobs));
    if (!w) return std::nullopt;
    return witness_dict(w->u, w->kernel_value);
  }, py::arg("chi"), py::arg("psi"), py::arg("budget") = SearchOptions{}.budget, py::arg("jobs") = 1);

  m.def("weak_search", [](const Character& chi, const Character& psi, std::uint64_t budget, int jobs)
        -> std::optional<py::dict> {
    const auto u = weak_equiv_search(chi, psi, options(budget, jobs));
    if (!u) return std::nullopt;
    return witness_dict(*u, std::nullopt);
  }, py::arg("chi"), py::arg("psi"), py::arg("budget") = SearchOptions{}.budget, py::arg("jobs") = 1);

  m.def("count_classes", [](int p, int l, int mm, const std::string& method, std::uint64_t budget) {
    return count_classes(Prime(p), l, mm, method_of(method), options(budget, 1));
  }, py::arg("p"), py::arg("l"), py::arg("m"), py::arg("method") = "oracle",
     py::arg("budget") = SearchOptions{}.budget);

  m.def("classify", [](int p, int l, int mm, const std::string& method, std::uint64_t budget) {
    return report_to_json(classify(Prime(p), l, mm, method_of(method), options(budget, 1))).dump();
  }, py::arg("p"), py::arg("l"), py::arg("m"), py::arg("method") = "oracle",
     py::arg("budget") = SearchOptions{}.budget, "ClassReport as a JSON string.");

  m.def("bound", [](int p, int l, int mm) {
    const BoundB b = bound_B(Prime(p), l, mm);
    return py::make_tuple(b.value, b.k, b.epsilon);
  }, py::arg("p"), py::arg("l"), py::arg("m"), "(B, k, epsilon)");

  m.def("valid_type", [](int p, int l, int mm) { return validate_type(Prime(p), l, mm); });

  m.def("reduced_forms", [](int p, int l, int mm) {
    std::vector<Character> out;
    for (const ReducedForm& f : enumerate_reduced_forms(Prime(p), l, mm)) out.push_back(f.to_character());
    return out;
  });

  m.def("power_conjugacy_predicate", [](int p, int l, int mm, long n) {
    return power_conjugacy_predicate(Prime(p), l, mm, n);
  });

  m.def("power_conjugacy_oracle", [](const Character& chi, long n, std::uint64_t budget) {
    const PowerConjugacy r = power_conjugacy_oracle(chi, n, options(budget, 1));
    py::dict d;
    d["conjugate"] = r.conjugate;
    d["witness"] = r.witness ? py::object(witness_dict(r.witness->u, r.witness->kernel_value))
                             : py::object(py::none());
    return d;
  }, py::arg("chi"), py::arg("n"), py::arg("budget") = SearchOptions{}.budget);
}
