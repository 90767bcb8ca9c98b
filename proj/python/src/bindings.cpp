#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cuntz/classify.hpp"
#include "cuntz/error.hpp"
#include "cuntz/reference.hpp"
#include "cuntz/report.hpp"
#include "cuntz/sweep.hpp"

namespace py = pybind11;
using namespace cuntz;

namespace {

// Python callers pass permutations as text ("(142)", "2134") or as objects.
Permutation as_perm(const py::object& p, int rank = 2) {
  if (py::isinstance<Permutation>(p)) return p.cast<Permutation>();
  return Permutation::parse(p.cast<std::string>(), rank);
}

std::vector<std::string> element_strings(const Subspace& s) {
  std::vector<std::string> out;
  for (const auto& e : s.basis_elements()) out.push_back(to_string(e));
  return out;
}

ClassifyOptions make_options(int depth_cap, int rank_bound, int order_bound, int diagonal_depth) {
  ClassifyOptions o;
  o.depth_cap = depth_cap;
  o.rank_bound = rank_bound;
  o.order_bound = order_bound;
  o.diagonal_depth = diagonal_depth;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact index computations for permutation endomorphisms of O_2.";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
  error_type.call_once_and_store_result(
      [&]() { return py::object(py::exception<Error>(m, "CuntzError", PyExc_ValueError)); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object type = error_type.get_stored();
      py::object exc = type(e.what());
      exc.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(type.ptr(), exc.ptr());
    }
  });

  py::class_<Permutation>(m, "Permutation")
      .def(py::init([](const std::string& text, int rank) { return Permutation::parse(text, rank); }),
           py::arg("text"), py::arg("rank") = 2)
      .def_static("identity", &Permutation::identity)
      .def_static("from_one_line", &Permutation::from_one_line, py::arg("rank"), py::arg("images"))
      .def_property_readonly("rank", &Permutation::rank)
      .def_property_readonly("images", &Permutation::images)
      .def("cycle_notation", &Permutation::cycle_notation)
      .def("one_line", &Permutation::one_line)
      .def("label", &Permutation::label)
      .def("inverse", &Permutation::inverse)
      .def("compose", &Permutation::compose)
      .def("is_identity", &Permutation::is_identity)
      .def("__eq__", [](const Permutation& a, const Permutation& b) { return a == b; })
      .def("__hash__", [](const Permutation& p) { return py::hash(py::make_tuple(p.rank(), p.one_line())); })
      .def("__str__", &Permutation::cycle_notation)
      .def("__repr__", [](const Permutation& p) { return "Permutation('" + p.cycle_notation() + "')"; });

  m.def("table_order", &rank2_table_order);
  m.def("all_permutations", &all_permutations, py::arg("rank"));

  m.def("generator_images", [](const py::object& p) {
    PermEndomorphism rho(as_perm(p));
    return py::make_tuple(to_string(rho.endo().image(1)), to_string(rho.endo().image(2)));
  }, py::arg("perm"));

  m.def("unitary", [](const py::object& p, int rank) { return to_string(permutation_unitary(as_perm(p, rank))); },
        py::arg("perm"), py::arg("rank") = 2);

  m.def("normalize", [](const std::string& text) { return to_string(parse_element(text)); }, py::arg("element"),
        "Canonical form of an element such as 's_{12,1} + s_{11,2}'.");

  m.def("apply", [](const py::object& p, const std::string& x) {
    return to_string(PermEndomorphism(as_perm(p)).apply(parse_element(x)));
  }, py::arg("perm"), py::arg("element"));

  m.def("automorphism_order", [](const py::object& p, int bound) {
    return automorphism_order(PermEndomorphism(as_perm(p)).endo(), bound);
  }, py::arg("perm"), py::arg("bound") = 8);

  m.def("inner_witness", [](const py::object& p, int rank_bound) -> std::optional<std::string> {
    auto w = inner_witness(PermEndomorphism(as_perm(p)), rank_bound);
    if (!w) return std::nullopt;
    return w->witness.cycle_notation();
  }, py::arg("perm"), py::arg("rank_bound") = 2);

  m.def("equivalence_witness", [](const py::object& a, const py::object& b, int rank_bound)
            -> std::optional<std::string> {
    auto w = inner_equivalence_witness(PermEndomorphism(as_perm(a)), PermEndomorphism(as_perm(b)), rank_bound);
    if (!w) return std::nullopt;
    return w->witness.cycle_notation();
  }, py::arg("left"), py::arg("right"), py::arg("rank_bound") = 2);

  m.def("equivalence_classes", [](int rank_bound, int jobs) {
    std::vector<std::vector<std::string>> out;
    for (const auto& cls : equivalence_classes(rank_bound, jobs).classes) {
      auto& names = out.emplace_back();
      for (const auto& p : cls) names.push_back(p.cycle_notation());
    }
    return out;
  }, py::arg("rank_bound") = 2, py::arg("jobs") = 1);

  m.def("diagonal", [](const py::object& p, int depth_cap) {
    auto r = analyze_diagonal(PermEndomorphism(as_perm(p)), depth_cap);
    py::dict d;
    d["verdict"] = to_string(r.verdict);
    d["lag"] = r.lag;
    d["deficit"] = r.deficit;
    return d;
  }, py::arg("perm"), py::arg("depth_cap") = 6);

  m.def("commutant_dimension", [](const py::object& p, int k) {
    return static_cast<int>(permutation_commutant(as_perm(p), k).dimension());
  }, py::arg("perm"), py::arg("level"));

  m.def("xi", [](const py::object& p) {
    auto c = jones_index_via_xi(PermEndomorphism(as_perm(p)));
    py::dict d;
    d["chain_dims"] = c.chain_dims;
    d["basis"] = element_strings(c.xi);
    d["square_closed"] = c.square_closed;
    d["condition_a"] = c.condition_a;
    d["condition_b"] = c.condition_b;
    d["index"] = c.index;
    d["failing_check"] = c.failing_check;
    return d;
  }, py::arg("perm"));

  m.def("classify", [](const py::object& p, int depth_cap, int rank_bound, int order_bound, int diagonal_depth) {
    auto c = classify(as_perm(p), make_options(depth_cap, rank_bound, order_bound, diagonal_depth));
    py::dict d;
    d["perm"] = c.perm.cycle_notation();
    d["property"] = to_string(c.property);
    d["index"] = c.index;
    d["automorphism_order"] = c.automorphism_order;
    d["inner_witness"] = c.inner_witness ? py::cast(c.inner_witness->witness.cycle_notation()) : py::none();
    d["xi_dims"] = c.xi.chain_dims;
    d["commutant_dims"] = c.commutant.dims;
    d["commutant_witness"] = c.commutant.witness ? py::cast(to_string(*c.commutant.witness)) : py::none();
    d["diagonal"] = to_string(c.diagonal.verdict);
    d["entropy_zero"] = c.entropy_zero;
    d["diagonal_entropy_zero"] = c.diagonal_entropy_zero;
    return d;
  }, py::arg("perm"), py::arg("depth_cap") = 3, py::arg("rank_bound") = 2, py::arg("order_bound") = 8,
     py::arg("diagonal_depth") = 6);

  m.def("table", [](const std::string& format, int depth_cap, int rank_bound, int jobs, bool details) {
    auto doc = build_table(make_options(depth_cap, rank_bound, 8, 6), jobs);
    return render(doc, parse_format(format), details);
  }, py::arg("format") = "markdown", py::arg("depth_cap") = 3, py::arg("rank_bound") = 2, py::arg("jobs") = 1,
     py::arg("details") = false);

  m.def("report", [](const py::object& p, const std::string& format) {
    return render(classify_report(as_perm(p)), parse_format(format), true);
  }, py::arg("perm"), py::arg("format") = "json");

  m.def("roundtrip_json", [](const std::string& text) { return render(parse_report(text), Format::Json); },
        py::arg("text"), "Parses a JSON report and renders it again.");

  m.def("verify", [](int jobs) {
    std::vector<std::tuple<std::string, bool, std::string>> out;
    for (const auto& r : run_reference_checks({}, jobs)) out.emplace_back(r.name, r.passed, r.detail);
    return out;
  }, py::arg("jobs") = 1);

  m.def("identities", [] {
    std::vector<std::tuple<std::string, bool, int, int>> out;
    for (const auto& c : verify_composition_identities())
      out.emplace_back(c.identity.str(), c.holds, c.lhs_index, c.product_index);
    return out;
  });

  m.def("sweep", [](int rank, int order_bound, int depth, int jobs) {
    SweepOptions o;
    o.rank = rank;
    o.order_bound = order_bound;
    o.depth = depth;
    o.jobs = jobs;
    SweepReport r;
    {
      py::gil_scoped_release release;
      r = sweep(o);
    }
    py::dict counts;
    for (auto v : {SweepVerdict::Automorphism, SweepVerdict::ReducibleWitnessFound, SweepVerdict::Unknown})
      counts[py::str(to_string(v))] = r.count(v);
    return counts;
  }, py::arg("rank") = 3, py::arg("order_bound") = 4, py::arg("depth") = 2, py::arg("jobs") = 1);

  m.attr("__version__") = CUNTZ_VERSION;
}
