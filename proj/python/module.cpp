// Python bindings for the s-expression query engine.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sxq/list_patterns.hpp"
#include "sxq/query.hpp"
#include "sxq/reader.hpp"
#include "sxq/value.hpp"

namespace py = pybind11;

namespace {

py::dict bindings_to_dict(const sxq::BindingSet& bindings) {
  py::dict out;
  for (const auto& [name, value] : bindings.entries) {
    out[py::str(name)] = value;
  }
  return out;
}

// Query wraps one compiled pattern; match/all open a fresh session each call.
class Query {
 public:
  explicit Query(const std::string& text)
      : text_(text), compiled_(sxq::compile_query(text)) {}

  std::optional<py::dict> match(const sxq::Value& target) {
    std::vector<sxq::BindingSet> solutions =
        sxq::collect_bindings(compiled_, target, 1);
    if (solutions.empty()) return std::nullopt;
    return bindings_to_dict(solutions.front());
  }

  std::vector<py::dict> all(const sxq::Value& target,
                            std::optional<std::size_t> max) {
    std::vector<py::dict> out;
    for (const sxq::BindingSet& bindings :
         sxq::collect_bindings(compiled_, target, max)) {
      out.push_back(bindings_to_dict(bindings));
    }
    return out;
  }

  const std::string& text() const { return text_; }

 private:
  std::string text_;
  sxq::CompiledQuery compiled_;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Backtracking pattern queries over s-expression data";

  py::class_<sxq::Value>(m, "Value")
      .def_static("symbol", &sxq::Value::symbol, py::arg("name"))
      .def_static("integer", &sxq::Value::integer, py::arg("value"))
      .def_static("decimal", &sxq::Value::decimal, py::arg("value"))
      .def_static("string", &sxq::Value::string, py::arg("text"))
      .def_static("boolean", &sxq::Value::boolean, py::arg("flag"))
      .def_static("cons", &sxq::Value::cons, py::arg("car"), py::arg("cdr"))
      .def_static("empty", &sxq::Value::empty)
      .def_static("list", &sxq::Value::list, py::arg("elements"))
      .def_property_readonly("is_pair", &sxq::Value::is_pair)
      .def_property_readonly("is_empty_list", &sxq::Value::is_empty_list)
      .def_property_readonly("is_symbol", &sxq::Value::is_symbol)
      .def("car", &sxq::Value::car)
      .def("cdr", &sxq::Value::cdr)
      .def("__eq__",
           [](const sxq::Value& a, const sxq::Value& b) { return a == b; },
           py::is_operator())
      .def("__hash__",
           [](const sxq::Value& v) { return py::hash(py::str(sxq::print(v))); })
      .def("__str__", [](const sxq::Value& v) { return sxq::print(v); })
      .def("__repr__", [](const sxq::Value& v) {
        return "Value(" + py::repr(py::str(sxq::print(v))).cast<std::string>() +
               ")";
      });

  m.def("read", [](const std::string& text) { return sxq::read(text); },
        py::arg("text"), "Parse one s-expression from text.");

  m.def("write", &sxq::print, py::arg("value"),
        "Render a value in canonical text form.");

  m.def(
      "elements",
      [](const sxq::Value& v) { return sxq::nth().eager_bindings(v); },
      py::arg("value"), "All list elements of a value, in order.");

  m.def(
      "suffixes",
      [](const sxq::Value& v) { return sxq::nthcdr().eager_bindings(v); },
      py::arg("value"), "The value and all its iterated cdrs.");

  py::class_<Query>(m, "Query")
      .def(py::init<const std::string&>(), py::arg("text"))
      .def("match", &Query::match, py::arg("target"),
           "Bindings of the first solution, or None.")
      .def("all", &Query::all, py::arg("target"), py::arg("max") = py::none(),
           "Bindings of every solution, in solution order.")
      .def_property_readonly("text", &Query::text)
      .def("__repr__",
           [](const Query& q) { return "Query(" + q.text() + ")"; });

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const sxq::ParseError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });
}
