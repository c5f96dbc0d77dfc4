// thetalab command-line front end.
//
// Exit codes: 0 success, 1 a verification failed, 2 usage or parameter error.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "thetalab/thetalab.hpp"

namespace {

using thetalab::Json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

std::string fmt(double x) { return thetalab::format9(x); }

Json rounded_rows(const thetalab::SymMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m.rows()) {
    Json r = Json::array();
    for (double v : row) r.push_back(thetalab::round9(v));
    rows.push_back(std::move(r));
  }
  return rows;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw thetalab::Error(thetalab::ErrorKind::kParse, "cannot write " + out_path);
  out << text;
}

struct ConstructArgs {
  std::uint64_t q = 0;
  std::uint64_t t = 0;
  std::size_t n = 0;
  std::string out;
};

int cmd_construct(const std::string& family, const ConstructArgs& a) {
  thetalab::Graph g;
  Json params;
  std::vector<bool> loops;
  if (family == "furedi") {
    auto fg = thetalab::furedi_graph(a.q, a.t);
    g = std::move(fg.graph);
    loops = std::move(fg.has_loop);
    params = {{"q", a.q}, {"t", a.t}};
  } else if (family == "polarity") {
    auto pg = thetalab::polarity_graph(a.q);
    g = std::move(pg.graph);
    loops = std::move(pg.has_loop);
    params = {{"q", a.q}};
  } else {
    g = thetalab::clique_union(a.n, a.t);
    params = {{"n", a.n}, {"t", a.t}};
  }
  Json removed = Json::array();
  for (std::size_t v = 0; v < loops.size(); ++v) {
    if (loops[v]) removed.push_back(v);
  }
  Json doc = thetalab::graph_to_json(g);
  doc["provenance"] = {
      {"family", family}, {"loops_removed", removed}, {"parameters", params}, {"tool", "thetalab construct"}};
  emit(doc.dump() + "\n", a.out);
  return kOk;
}

struct VerifyArgs {
  std::string experiment;
  bool json = false;
  std::uint64_t seed = 0;
  bool parallel = false;
  bool timing = false;
};

int cmd_verify(const VerifyArgs& a) {
  const auto& names = thetalab::experiment_names();
  std::vector<std::string> selected;
  if (a.experiment == "all") {
    selected = names;
  } else if (std::find(names.begin(), names.end(), a.experiment) != names.end()) {
    selected = {a.experiment};
  } else {
    std::cerr << "unknown experiment '" << a.experiment << "'; expected one of:";
    for (const auto& n : names) std::cerr << " " << n;
    std::cerr << " all\n";
    return kUsage;
  }
  const thetalab::ExperimentOptions options{a.seed, a.parallel, a.timing};
  std::vector<thetalab::ExperimentReport> reports;
  for (const auto& name : selected) reports.push_back(thetalab::run_experiment(name, options));
  bool pass = true;
  for (const auto& r : reports) pass = pass && r.pass();
  if (a.json) {
    if (reports.size() == 1) {
      std::cout << thetalab::report_to_json(reports.front()).dump(2) << "\n";
    } else {
      Json all = Json::array();
      for (const auto& r : reports) all.push_back(thetalab::report_to_json(r));
      std::cout << all.dump(2) << "\n";
    }
  } else {
    for (const auto& r : reports) std::cout << thetalab::report_to_text(r);
  }
  return pass ? kOk : kFailed;
}

struct ThetaArgs {
  std::string graph;
  bool complement = false;
  double tol = 1e-7;
  std::size_t iterations = 200;
  bool json = false;
};

int cmd_theta(const ThetaArgs& a) {
  thetalab::Graph g = thetalab::load_graph(a.graph);
  if (a.complement) g = thetalab::complement(g);
  const auto r = thetalab::theta_sdp(g, {a.tol, a.iterations});
  if (a.json) {
    Json doc = {{"n", g.n()},
                {"lower", thetalab::round9(r.lower)},
                {"upper", thetalab::round9(r.upper)},
                {"gap", thetalab::round9(r.gap)},
                {"tol", a.tol},
                {"gap_reached", r.gap_reached},
                {"iterations", r.iterations},
                {"primal_X", rounded_rows(r.primal_X)},
                {"dual_B", rounded_rows(r.dual_B)}};
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << "n           " << g.n() << "\n"
              << "lower       " << fmt(r.lower) << "\n"
              << "upper       " << fmt(r.upper) << "\n"
              << "gap         " << fmt(r.gap) << (r.gap_reached ? "" : "  (tolerance not reached)") << "\n"
              << "iterations  " << r.iterations << "\n";
  }
  return r.gap_reached ? kOk : kFailed;
}

int cmd_spectrum(const std::string& path, bool json) {
  const auto g = thetalab::load_graph(path);
  const auto spectrum = thetalab::eigen_sym(thetalab::adjacency_matrix(g), false);
  if (json) {
    Json values = Json::array();
    for (double v : spectrum.eigenvalues) values.push_back(thetalab::round9(v));
    std::cout << Json{{"n", g.n()}, {"eigenvalues", values}}.dump() << "\n";
  } else {
    for (double v : spectrum.eigenvalues) std::cout << fmt(v) << "\n";
  }
  return kOk;
}

int cmd_check_free(const std::string& pattern_text, const std::string& path, bool json) {
  const auto pattern = thetalab::Pattern::parse(pattern_text);
  const auto g = thetalab::load_graph(path);
  const bool free = !thetalab::contains_pattern(g, pattern);
  if (json) {
    std::cout << Json{{"pattern", pattern.name()}, {"n", g.n()}, {"free", free}}.dump() << "\n";
  } else {
    std::cout << "pattern: " << pattern.name() << "\nfree: " << (free ? "true" : "false") << "\n";
  }
  return free ? kOk : kFailed;
}

struct RepArgs {
  std::string file;
  std::string graph;
  std::string check;
  std::size_t t = 1;
  std::string parity = "odd";
  std::uint64_t seed = 0;
  std::string out;
  bool json = false;
};

int cmd_rep_random(const RepArgs& a) {
  const auto rep = thetalab::random_rep(thetalab::load_graph(a.graph), a.seed);
  emit(thetalab::rep_to_json(rep).dump() + "\n", a.out);
  return kOk;
}

int cmd_rep_validate(const RepArgs& a) {
  const auto rep = thetalab::load_rep(a.file);
  const auto v = thetalab::validate_rep(rep);
  if (a.json) {
    std::cout << Json{{"valid", v.valid},
                      {"max_residual", thetalab::round9(v.max_residual)},
                      {"norm_residual", thetalab::round9(v.norm_residual)},
                      {"orthogonality_residual", thetalab::round9(v.orthogonality_residual)}}
                     .dump()
              << "\n";
  } else {
    std::cout << "valid: " << (v.valid ? "true" : "false") << "\nmax residual: " << fmt(v.max_residual) << "\n";
  }
  return v.valid ? kOk : kFailed;
}

int cmd_rep_gram(const RepArgs& a) {
  const auto m = thetalab::gram(thetalab::load_rep(a.file));
  if (a.json) {
    std::cout << Json{{"gram", rounded_rows(m)}}.dump() << "\n";
  } else {
    for (const auto& row : m.rows()) {
      for (std::size_t j = 0; j < row.size(); ++j) std::cout << (j ? " " : "") << fmt(row[j]);
      std::cout << "\n";
    }
  }
  return kOk;
}

int cmd_rep_certify(const RepArgs& a) {
  const auto rep = thetalab::load_rep(a.file);
  Json doc = {{"check", a.check}};
  bool pass = false;
  if (a.check == "schnirelmann") {
    const auto r = thetalab::schnirelmann_check(thetalab::gram(rep));
    doc.update({{"trace", r.trace}, {"trace_sq", r.trace_sq}, {"rank", r.rank}, {"lhs", r.lhs}, {"rhs", r.rhs},
                {"slack", r.slack}});
    pass = r.pass;
  } else if (a.check == "trace-power") {
    if (a.parity != "odd" && a.parity != "even") {
      throw thetalab::Error(thetalab::ErrorKind::kPreconditionViolated, "parity must be odd or even");
    }
    const auto parity = a.parity == "odd" ? thetalab::Parity::kOdd : thetalab::Parity::kEven;
    const auto r = thetalab::trace_power_certificate(rep, rep.target(), a.t, parity);
    doc.update({{"t", r.t}, {"parity", a.parity}, {"exponent", r.exponent}, {"trace_power", r.trace_power},
                {"bound", r.bound}, {"lambda_max", r.lambda_max}, {"lambda_bound", r.lambda_bound}});
    pass = r.pass;
  } else {
    const auto r = thetalab::msr_lower_chain_check(rep, rep.target(), a.t);
    doc.update({{"t", r.t}, {"n", r.n}, {"d", r.d}, {"trace_sq", r.trace_sq}, {"trace_sq_bound", r.trace_sq_bound},
                {"chain_lhs", r.chain_lhs}, {"chain_rhs", r.chain_rhs}});
    pass = r.pass;
  }
  doc["pass"] = pass;
  doc = thetalab::detail::rounded(doc);
  if (a.json) {
    std::cout << doc.dump() << "\n";
  } else {
    for (const auto& [key, value] : doc.items()) {
      std::cout << key << ": " << (value.is_number_float() ? fmt(value.get<double>()) : value.dump()) << "\n";
    }
  }
  return pass ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lovasz theta, extremal constructions and orthonormal-representation certificates"};
  app.require_subcommand(1);
  int status = kOk;

  // construct
  auto* construct = app.add_subcommand("construct", "build a graph family and print it as JSON");
  construct->require_subcommand(1);
  ConstructArgs cargs;
  for (const std::string family : {"furedi", "polarity", "cliques"}) {
    auto* sub = construct->add_subcommand(family);
    if (family != "cliques") sub->add_option("--q", cargs.q, "field order")->required();
    if (family == "furedi") sub->add_option("--t", cargs.t, "subgroup order, divides q - 1")->required();
    if (family == "cliques") {
      sub->add_option("--n", cargs.n, "vertex count")->required();
      sub->add_option("--t", cargs.t, "clique size")->required();
    }
    sub->add_option("--out", cargs.out, "write to this file instead of stdout");
    sub->callback([&, family] { status = cmd_construct(family, cargs); });
  }

  // verify paper
  auto* verify = app.add_subcommand("verify", "run reproduction experiments");
  verify->require_subcommand(1);
  auto* paper = verify->add_subcommand("paper", "run a named experiment");
  VerifyArgs vargs;
  paper->add_option("--experiment", vargs.experiment, "experiment name, or 'all'")->required();
  paper->add_flag("--json", vargs.json, "machine-readable report");
  paper->add_option("--seed", vargs.seed, "random seed (default 0)");
  paper->add_flag("--parallel", vargs.parallel, "run independent sections concurrently");
  paper->add_flag("--timing", vargs.timing, "include runtime_ms in the report");
  paper->callback([&] { status = cmd_verify(vargs); });

  // theta
  auto* theta = app.add_subcommand("theta", "certified bracket on the Lovasz theta function");
  ThetaArgs targs;
  theta->add_option("--graph", targs.graph, "graph file (JSON or edge list)")->required();
  theta->add_flag("--complement", targs.complement, "use the complement graph");
  theta->add_option("--tol", targs.tol, "target gap, at least 1e-8");
  theta->add_option("--max-iterations", targs.iterations, "iteration cap");
  theta->add_flag("--json", targs.json, "JSON output with certificates");
  theta->callback([&] { status = cmd_theta(targs); });

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "adjacency eigenvalues, descending");
  std::string spectrum_graph;
  bool spectrum_json = false;
  spectrum->add_option("--graph", spectrum_graph, "graph file")->required();
  spectrum->add_flag("--json", spectrum_json, "JSON output");
  spectrum->callback([&] { status = cmd_spectrum(spectrum_graph, spectrum_json); });

  // check free
  auto* check = app.add_subcommand("check", "subgraph freeness");
  check->require_subcommand(1);
  auto* free = check->add_subcommand("free", "test whether the graph avoids a pattern");
  std::string pattern;
  std::string free_graph;
  bool free_json = false;
  free->add_option("--pattern", pattern, "C<k>, K<k> or K<s>,<t>")->required();
  free->add_option("--graph", free_graph, "graph file")->required();
  free->add_flag("--json", free_json, "JSON output");
  free->callback([&] { status = cmd_check_free(pattern, free_graph, free_json); });

  // rep
  auto* rep = app.add_subcommand("rep", "orthonormal representations");
  rep->require_subcommand(1);
  RepArgs rargs;
  auto* rep_random = rep->add_subcommand("random", "generate a representation from a clique cover");
  rep_random->add_option("--graph", rargs.graph, "graph file")->required();
  rep_random->add_option("--seed", rargs.seed, "random seed");
  rep_random->add_option("--out", rargs.out, "write to this file instead of stdout");
  rep_random->callback([&] { status = cmd_rep_random(rargs); });
  auto* rep_validate = rep->add_subcommand("validate", "check unit norms and orthogonality");
  auto* rep_gram = rep->add_subcommand("gram", "print the Gram matrix");
  auto* rep_certify = rep->add_subcommand("certify", "evaluate a trace inequality");
  for (auto* sub : {rep_validate, rep_gram, rep_certify}) {
    sub->add_option("--file", rargs.file, "representation JSON")->required();
    sub->add_flag("--json", rargs.json, "JSON output");
  }
  rep_certify->add_option("--check", rargs.check, "schnirelmann, trace-power or msr-chain")
      ->required()
      ->check(CLI::IsMember({"schnirelmann", "trace-power", "msr-chain"}));
  rep_certify->add_option("--t", rargs.t, "cycle parameter or tree size");
  rep_certify->add_option("--parity", rargs.parity, "odd or even (trace-power)")->check(CLI::IsMember({"odd", "even"}));
  rep_validate->callback([&] { status = cmd_rep_validate(rargs); });
  rep_gram->callback([&] { status = cmd_rep_gram(rargs); });
  rep_certify->callback([&] { status = cmd_rep_certify(rargs); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const thetalab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return status;
}
