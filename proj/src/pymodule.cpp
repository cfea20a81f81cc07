#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "taz/generators.hpp"
#include "taz/model.hpp"
#include "taz/search.hpp"

namespace py = pybind11;

namespace {

py::dict check_text(const std::string& text, const std::string& algo,
                    bool oracle) {
  taz::Network net = taz::parse_model(text);
  taz::SearchOptions opts = taz::options_for(algo);
  opts.oracle_check = oracle;
  const taz::RunReport rep = taz::run(net, opts);
  py::dict d;
  d["reachable"] = rep.reachable;
  d["trace"] = rep.trace;
  d["visited"] = rep.stats.visited;
  d["stored"] = rep.stats.stored;
  d["subsumption_tests"] = rep.stats.subsumption_tests;
  d["reopened"] = rep.stats.reopened;
  d["ms"] = rep.stats.ms;
  d["oracle_checked"] = rep.stats.oracle_checked;
  d["oracle_skipped"] = rep.stats.oracle_skipped;
  return d;
}

std::string generate_text(const std::string& family, int n) {
  return taz::print_model(taz::generate(family, n));
}

std::string roundtrip(const std::string& text) {
  return taz::print_model(taz::parse_model(text));
}

}  // namespace

PYBIND11_MODULE(_taz, m) {
  m.doc() = "reachability for networks of timed automata";
  m.def("generate", &generate_text, py::arg("family"), py::arg("n"),
        "render a generated model in the text format");
  m.def("check_text", &check_text, py::arg("text"),
        py::arg("algo") = "closure-lu", py::arg("oracle") = false,
        "decide the reachability query of a model given as text");
  m.def("roundtrip", &roundtrip, py::arg("text"),
        "parse a model and render it back");
}
