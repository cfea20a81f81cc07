// Command line front end: `taz check <model>` decides the reachability
// query of a model file, `taz gen <family> <n>` prints a generated model.
//
// Exit codes of `check`: 0 query unreachable, 1 query reachable,
// 2 usage or model error, 3 internal consistency failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "taz/generators.hpp"
#include "taz/model.hpp"
#include "taz/search.hpp"

namespace {

void print_text(std::ostream& os, const std::string& model,
                const std::string& algo, const taz::RunReport& rep,
                bool oracle, bool want_trace) {
  os << "model=" << model << "\n";
  os << "algo=" << algo << "\n";
  os << "verdict=" << (rep.reachable ? "reachable" : "unreachable") << "\n";
  os << "visited=" << rep.stats.visited << "\n";
  os << "stored=" << rep.stats.stored << "\n";
  os << "subsumption_tests=" << rep.stats.subsumption_tests << "\n";
  os << "reopened=" << rep.stats.reopened << "\n";
  os << "ms=" << rep.stats.ms << "\n";
  if (oracle) {
    os << "oracle_checked=" << rep.stats.oracle_checked << "\n";
    os << "oracle_skipped=" << rep.stats.oracle_skipped << "\n";
  }
  if (want_trace && rep.reachable)
    for (size_t i = 0; i < rep.trace.size(); ++i)
      os << "trace." << i << "=" << rep.trace[i] << "\n";
}

void print_tsv(std::ostream& os, const std::string& model,
               const std::string& algo, const taz::RunReport& rep) {
  os << model << '\t' << algo << '\t'
     << (rep.reachable ? "reachable" : "unreachable") << '\t'
     << rep.stats.visited << '\t' << rep.stats.stored << '\t'
     << rep.stats.subsumption_tests << '\t' << rep.stats.reopened << '\t'
     << rep.stats.ms << "\n";
}

int do_check(const std::string& path, const std::string& algo, bool oracle,
             bool want_trace, const std::string& fmt) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    return 2;
  }
  std::stringstream buf;
  buf << in.rdbuf();

  taz::Network net;
  try {
    net = taz::parse_model(buf.str());
  } catch (const std::exception& e) {
    std::cerr << "error: " << path << ": " << e.what() << "\n";
    return 2;
  }

  taz::SearchOptions opts = taz::options_for(algo);
  opts.oracle_check = oracle;

  taz::RunReport rep;
  try {
    rep = taz::run(net, opts);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }

  if (fmt == "tsv") {
    print_tsv(std::cout, path, algo, rep);
    if (want_trace && rep.reachable)
      for (size_t i = 0; i < rep.trace.size(); ++i)
        std::cerr << "trace." << i << "=" << rep.trace[i] << "\n";
  } else {
    print_text(std::cout, path, algo, rep, oracle, want_trace);
  }
  return rep.reachable ? 1 : 0;
}

int do_gen(const std::string& family, int n) {
  try {
    std::cout << taz::print_model(taz::generate(family, n));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reachability checker for networks of timed automata"};
  app.require_subcommand(1);

  std::string path;
  std::string algo = "closure-lu";
  std::string fmt = "text";
  bool oracle = false;
  bool want_trace = false;
  auto* check = app.add_subcommand("check", "decide the query of a model file");
  check->add_option("file", path, "model file")->required();
  check->add_option("--algo", algo, "search configuration")
      ->check(CLI::IsMember({"closure-lu", "closure-m", "extra-lu-static",
                             "extra-m-static"}));
  check->add_flag("--oracle", oracle,
                  "confirm subsumption decisions against region enumeration "
                  "where small enough");
  check->add_flag("--trace", want_trace, "print the witness trace");
  check->add_option("--stats-format", fmt, "output format")
      ->check(CLI::IsMember({"text", "tsv"}));

  std::string family;
  int n = 2;
  auto* gen = app.add_subcommand("gen", "print a generated model");
  gen->add_option("family", family,
                  "fischer | fischer-buggy | csma | fddi | pump-sync | "
                  "pump-empty | pump-int")
      ->required();
  gen->add_option("n", n, "size parameter")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (check->parsed()) return do_check(path, algo, oracle, want_trace, fmt);
  return do_gen(family, n);
}
