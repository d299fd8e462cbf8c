// Command-line front end. Talks to the library only through ecm.h.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ecm/ecm.h"

namespace {

struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(ecm_status s) {
  if (s != ECM_OK) throw CliError(std::string(ecm_status_name(s)) + ": " + ecm_last_error());
}

struct GraphDeleter {
  void operator()(ecm_graph* g) const { ecm_graph_free(g); }
};
using GraphPtr = std::unique_ptr<ecm_graph, GraphDeleter>;

std::string take(char* s) {
  std::string out = s ? s : "";
  ecm_string_free(s);
  return out;
}

/// "2", "-0.5", "1+2i", "0.3-1.5i", "i", "-2i".
ecm_complex parse_complex(const std::string& text) {
  if (text.empty()) throw CliError("empty complex value");
  const char* p = text.c_str();
  char* end = nullptr;
  if (text.back() != 'i') {
    const double re = std::strtod(p, &end);
    if (*end != '\0') throw CliError("cannot read '" + text + "' as a number");
    return {re, 0.0};
  }
  // Split at the last sign that is not an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t i = text.size() - 1; i-- > 0;)
    if ((text[i] == '+' || text[i] == '-') && i > 0 && text[i - 1] != 'e' && text[i - 1] != 'E') {
      split = i;
      break;
    }
  auto imaginary = [&](const std::string& s) {
    const std::string body = s.substr(0, s.size() - 1);
    if (body.empty() || body == "+") return 1.0;
    if (body == "-") return -1.0;
    const double v = std::strtod(body.c_str(), &end);
    if (*end != '\0') throw CliError("cannot read '" + text + "' as a complex number");
    return v;
  };
  if (split == std::string::npos) return {0.0, imaginary(text)};
  const std::string re_part = text.substr(0, split);
  const double re = std::strtod(re_part.c_str(), &end);
  if (*end != '\0') throw CliError("cannot read '" + text + "' as a complex number");
  return {re, imaginary(text.substr(split))};
}

std::vector<ecm_complex> parse_list(const std::string& text) {
  std::vector<ecm_complex> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_complex(item));
  return out;
}

std::string show(ecm_complex v) {
  std::ostringstream out;
  out.precision(12);
  out << v.re;
  if (v.im != 0.0) out << (v.im < 0 ? " - " : " + ") << std::abs(v.im) << "i";
  return out.str();
}

void print_value(const ecm_model_value& v) {
  std::cout.precision(12);
  std::cout << "value " << show(v.value) << '\n'
            << "magnitude " << v.magnitude << '\n'
            << "imag_residual " << v.imag_residual << '\n'
            << "integer_residual " << std::abs(v.value.re - std::round(v.value.re)) << '\n'
            << "terms " << v.terms << '\n';
}

GraphPtr load_graph(const std::string& path, const std::string& builtin) {
  ecm_graph* g = nullptr;
  if (!builtin.empty()) {
    check(ecm_graph_corpus(builtin.c_str(), &g));
  } else {
    if (path.empty()) throw CliError("--graph FILE or --corpus NAME is required");
    check(ecm_graph_read(path.c_str(), &g));
  }
  return GraphPtr(g);
}

std::string group_of(const std::string& group, int q) {
  if (!group.empty()) return group;
  if (q < 1) throw CliError("--group or --q is required");
  return std::to_string(q);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph invariants as edge and vertex colouring models"};
  app.require_subcommand(1);

  std::string graph_path, builtin, group, weights, edge_weights, model = "cwe", s_text, t_text, suite = "all";
  std::string out_path;
  int q = 0, k = 0;
  double tol = 1e-7;
  std::uint64_t max_terms = 100000000ULL, seed = 0;
  bool tensions = false;
  std::vector<std::string> graph_files;
  std::vector<int> qs;

  auto graph_opts = [&](CLI::App* sub) {
    sub->add_option("--graph", graph_path, "graph file");
    sub->add_option("--corpus", builtin, "built-in graph name instead of a file");
    sub->add_option("--max-terms", max_terms, "enumeration cap")->capture_default_str();
  };

  auto* tutte = app.add_subcommand("tutte", "Tutte polynomial by subset expansion");
  graph_opts(tutte);

  auto* flow = app.add_subcommand("flow", "flow polynomial F(G;q)");
  graph_opts(flow);
  flow->add_option("--q", q, "evaluation point")->required();

  auto* chrom = app.add_subcommand("chromatic", "chromatic polynomial P(G;q)");
  graph_opts(chrom);
  chrom->add_option("--q", q, "evaluation point")->required();

  auto* hwe = app.add_subcommand("hwe", "Hamming weight enumerator of the flows (or tensions)");
  auto* cwe = app.add_subcommand("cwe", "complete weight enumerator of the flows (or tensions)");
  for (auto* sub : {hwe, cwe}) {
    graph_opts(sub);
    sub->add_option("--q", q, "cyclic group order");
    sub->add_option("--group", group, "group: n, n1xn2.. or f4");
    sub->add_option("--weights", weights, "hwe: weight of a zero entry; cwe: one weight per element")->required();
    sub->add_flag("--tensions", tensions, "enumerate tensions instead of flows");
  }

  auto* vmodel = app.add_subcommand("vertex-model", "vertex colouring model");
  auto* emodel = app.add_subcommand("edge-model", "edge colouring model");
  for (auto* sub : {vmodel, emodel}) {
    graph_opts(sub);
    sub->add_option("--model", model, "cwe | tutte | szegedy")
        ->check(CLI::IsMember({"cwe", "tutte", "szegedy"}))
        ->capture_default_str();
    sub->add_option("--q", q, "cyclic group order");
    sub->add_option("--group", group, "group for the cwe model");
    sub->add_option("--weights", weights, "cwe: edge weight per element; szegedy: vertex weight per element");
    sub->add_option("--edge-weights", edge_weights, "szegedy: symmetric q x q edge weight, row-major");
    sub->add_option("--s", s_text, "tutte edge model: s (evaluates on the hyperbola at s^2)");
    sub->add_option("--t", t_text, "tutte vertex model: weight of a monochromatic edge");
  }

  auto* sine = app.add_subcommand("sine-model", "signed edge q-colouring model with sine weights");
  graph_opts(sine);
  sine->add_option("--q", q, "number of colours")->required();
  sine->add_option("--k", k, "degree (odd)")->required();

  auto* kplus1 = app.add_subcommand("kplus1", "(k+1)^{-|V|/2} sum of signs over edge (k+1)-colourings");
  graph_opts(kplus1);
  kplus1->add_option("--k", k, "degree")->required();

  auto* proper = app.add_subcommand("proper-sign", "sum of signs over proper edge k-colourings");
  graph_opts(proper);
  proper->add_option("--k", k, "number of colours")->required();

  auto* evenodd = app.add_subcommand("even-odd4", "#even - #odd proper edge 4-colourings of a cubic graph");
  graph_opts(evenodd);

  auto* xq = app.add_subcommand("xq", "vertex-weighted monochrome function and its dual");
  graph_opts(xq);
  xq->add_option("--group", group, "group: n, n1xn2.. or f4");
  xq->add_option("--q", q, "cyclic group order");
  xq->add_option("--s", s_text, "vertex weights, one per element")->required();
  xq->add_option("--t", t_text, "edge weights, one per element")->required();

  auto* verify = app.add_subcommand("verify", "run the identity battery");
  verify->add_option("--suite", suite, "all | fourier | duality | signed")
      ->check(CLI::IsMember({"all", "fourier", "duality", "signed"}))
      ->capture_default_str();
  verify->add_option("--graph", graph_files, "graph files (default: built-in corpus)");
  verify->add_option("--q", qs, "group orders for graph-dependent checks");
  verify->add_option("--tol", tol, "scales every pinned tolerance by tol / 1e-7")->capture_default_str();
  verify->add_option("--max-terms", max_terms, "enumeration cap")->capture_default_str();
  verify->add_option("--seed", seed, "seed for randomized checks")->capture_default_str();
  verify->add_option("--out", out_path, "write the report here instead of stdout");

  auto* fixtures = app.add_subcommand("corpus", "write the built-in graphs as .g files");
  fixtures->add_option("--out", out_path, "directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*tutte) {
      auto g = load_graph(graph_path, builtin);
      ecm_tutte* t = nullptr;
      check(ecm_tutte_compute(g.get(), max_terms, &t));
      char* s = nullptr;
      const ecm_status st = ecm_tutte_string(t, &s);
      ecm_tutte_free(t);
      check(st);
      std::cout << take(s) << '\n';
    } else if (*flow || *chrom) {
      auto g = load_graph(graph_path, builtin);
      char* s = nullptr;
      check(*flow ? ecm_flow_polynomial(g.get(), q, max_terms, &s) : ecm_chromatic(g.get(), q, max_terms, &s));
      std::cout << take(s) << '\n';
    } else if (*hwe || *cwe) {
      auto g = load_graph(graph_path, builtin);
      const std::string grp = group_of(group, q);
      const auto w = parse_list(weights);
      ecm_complex v{};
      if (*hwe) {
        if (w.size() != 1) throw CliError("hwe takes a single weight");
        check(ecm_hwe(g.get(), grp.c_str(), tensions, w[0], max_terms, &v));
      } else {
        check(ecm_cwe(g.get(), grp.c_str(), tensions, w.data(), w.size(), max_terms, &v));
      }
      std::cout << show(v) << '\n';
    } else if (*vmodel || *emodel) {
      auto g = load_graph(graph_path, builtin);
      const bool edge = emodel->parsed();
      ecm_model_value v{};
      if (model == "cwe") {
        const std::string grp = group_of(group, q);
        const auto w = parse_list(weights);
        check(edge ? ecm_cwe_edge_model(g.get(), grp.c_str(), w.data(), w.size(), max_terms, &v)
                   : ecm_cwe_vertex_model(g.get(), grp.c_str(), w.data(), w.size(), max_terms, &v));
      } else if (model == "tutte") {
        if (q < 1) throw CliError("--q is required");
        if (edge) {
          if (s_text.empty()) throw CliError("--s is required");
          check(ecm_tutte_edge_model(g.get(), q, parse_complex(s_text), max_terms, &v));
        } else {
          if (t_text.empty()) throw CliError("--t is required");
          check(ecm_monochrome_vertex_model(g.get(), q, parse_complex(t_text), max_terms, &v));
        }
      } else {
        if (q < 1) throw CliError("--q is required");
        const auto f = parse_list(weights);
        const auto m = parse_list(edge_weights);
        if (f.size() != static_cast<std::size_t>(q) || m.size() != static_cast<std::size_t>(q) * q)
          throw CliError("szegedy needs q vertex weights and q*q edge weights");
        std::vector<double> real;
        for (const auto& c : m) {
          if (c.im != 0.0) throw CliError("szegedy edge weights must be real");
          real.push_back(c.re);
        }
        check(edge ? ecm_szegedy_edge_model(g.get(), q, f.data(), real.data(), max_terms, &v)
                   : ecm_szegedy_vertex_model(g.get(), q, f.data(), real.data(), max_terms, &v));
      }
      print_value(v);
    } else if (*sine) {
      auto g = load_graph(graph_path, builtin);
      ecm_model_value v{};
      check(ecm_sine_model(g.get(), q, k, max_terms, &v));
      print_value(v);
    } else if (*kplus1) {
      auto g = load_graph(graph_path, builtin);
      ecm_model_value v{};
      check(ecm_kplus1_sign_sum(g.get(), k, max_terms, &v));
      print_value(v);
    } else if (*proper) {
      auto g = load_graph(graph_path, builtin);
      long long sum = 0;
      std::uint64_t count = 0;
      check(ecm_proper_sign_sum(g.get(), k, max_terms, &sum, &count));
      std::cout << "signed_sum " << sum << "\ncount " << count << '\n';
    } else if (*evenodd) {
      auto g = load_graph(graph_path, builtin);
      long long diff = 0;
      check(ecm_even_minus_odd4(g.get(), max_terms, &diff));
      std::cout << diff << '\n';
    } else if (*xq) {
      auto g = load_graph(graph_path, builtin);
      const std::string grp = group_of(group, q);
      const auto s = parse_list(s_text);
      const auto t = parse_list(t_text);
      if (s.size() != t.size()) throw CliError("--s and --t need one weight per element each");
      ecm_complex primal{}, dual{};
      check(ecm_xq(g.get(), grp.c_str(), s.data(), t.data(), s.size(), max_terms, &primal, &dual));
      const double diff = std::hypot(primal.re - dual.re, primal.im - dual.im);
      std::cout << "xq " << show(primal) << "\ndual " << show(dual) << "\nresidual " << diff << '\n';
    } else if (*verify) {
      std::vector<GraphPtr> owned;
      std::vector<const ecm_graph*> graphs;
      std::vector<std::string> names;
      for (const auto& path : graph_files) {
        ecm_graph* g = nullptr;
        check(ecm_graph_read(path.c_str(), &g));
        owned.emplace_back(g);
        graphs.push_back(g);
        std::string name = path.substr(path.find_last_of('/') + 1);
        if (const auto dot = name.rfind('.'); dot != std::string::npos && dot > 0) name.resize(dot);
        names.push_back(name);
      }
      std::vector<const char*> cnames;
      for (const auto& n : names) cnames.push_back(n.c_str());
      ecm_report* r = nullptr;
      check(ecm_verify(suite.c_str(), graphs.data(), cnames.data(), graphs.size(), qs.data(), qs.size(), tol,
                       max_terms, seed, &r));
      char* text = nullptr;
      const ecm_status st = ecm_report_jsonl(r, &text);
      const std::size_t count = ecm_report_count(r), skipped = ecm_report_skipped(r), failures = ecm_report_failures(r);
      ecm_report_free(r);
      check(st);
      if (out_path.empty()) {
        std::cout << take(text);
      } else {
        std::ofstream out(out_path);
        if (!out) throw CliError("cannot write " + out_path);
        out << take(text);
      }
      std::cerr << "checks " << count << " skipped " << skipped << " failed " << failures << '\n';
      return failures == 0 ? 0 : 1;
    } else if (*fixtures) {
      check(ecm_corpus_write(out_path.c_str()));
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
