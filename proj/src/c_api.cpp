#include "ecm/ecm.h"

#include <cstring>
#include <new>
#include <string>

#include "ecm/corpus.hpp"
#include "ecm/duality.hpp"
#include "ecm/error.hpp"
#include "ecm/graph_io.hpp"
#include "ecm/oracles.hpp"
#include "ecm/signed.hpp"
#include "ecm/verify.hpp"

struct ecm_graph {
  ecm::Multigraph g;
};

struct ecm_tutte {
  ecm::TuttePolynomial t;
};

struct ecm_report {
  ecm::Report r;
};

namespace {

thread_local std::string last_error;

ecm_status fail(ecm_status s, const char* what) {
  last_error = what;
  return s;
}

template <class Fn>
ecm_status guard(Fn&& fn) {
  try {
    fn();
    return ECM_OK;
  } catch (const ecm::ParseError& e) {
    return fail(ECM_PARSE_ERROR, e.what());
  } catch (const ecm::CapExceeded& e) {
    return fail(ECM_CAP_EXCEEDED, e.what());
  } catch (const ecm::Mismatch& e) {
    return fail(ECM_MISMATCH, e.what());
  } catch (const ecm::InvalidArgument& e) {
    return fail(ECM_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(ECM_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ECM_INTERNAL, e.what());
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw ecm::InvalidArgument(std::string(what) + " must not be null");
}

char* duplicate(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ecm::EvalLimits limits_of(uint64_t max_terms) {
  ecm::EvalLimits l;
  if (max_terms != 0) l.max_terms = max_terms;
  return l;
}

ecm_complex to_c(ecm::Complex v) { return {v.real(), v.imag()}; }
ecm::Complex from_c(ecm_complex v) { return {v.re, v.im}; }

ecm_model_value to_c(const ecm::ModelValue& v) {
  return {to_c(v.value), v.magnitude(), v.imag_residual(), v.terms};
}

ecm::Group group_of(const char* spec) {
  require(spec, "group");
  return ecm::Group::parse(spec);
}

ecm::QFunction weights_of(const ecm::Group& grp, const ecm_complex* w, size_t n) {
  require(w, "weights");
  if (n != static_cast<size_t>(grp.order()))
    throw ecm::InvalidArgument("expected " + std::to_string(grp.order()) + " weights, got " + std::to_string(n));
  std::vector<ecm::Complex> values;
  for (size_t i = 0; i < n; ++i) values.push_back(from_c(w[i]));
  return ecm::QFunction(grp, 1, std::move(values));
}

ecm::RealMatrix matrix_of(int q, const double* m) {
  require(m, "edge weight");
  ecm::RealMatrix out(q, q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) out(i, j) = m[i * q + j];
  return out;
}

const ecm::Multigraph& graph_of(const ecm_graph* g) {
  require(g, "graph");
  return g->g;
}

int order_of(int q) {
  if (q < 1) throw ecm::InvalidArgument("q must be positive");
  return q;
}

}  // namespace

extern "C" {

const char* ecm_version(void) { return "0.1.0"; }

const char* ecm_status_name(ecm_status status) {
  switch (status) {
    case ECM_OK: return "ok";
    case ECM_INVALID_ARGUMENT: return "invalid argument";
    case ECM_PARSE_ERROR: return "parse error";
    case ECM_CAP_EXCEEDED: return "term cap exceeded";
    case ECM_MISMATCH: return "mismatch";
    case ECM_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* ecm_last_error(void) { return last_error.c_str(); }

void ecm_string_free(char* s) { delete[] s; }

ecm_status ecm_graph_parse(const char* text, ecm_graph** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = new ecm_graph{ecm::parse_graph(text)};
  });
}

ecm_status ecm_graph_read(const char* path, ecm_graph** out) {
  return guard([&] {
    require(path, "path");
    require(out, "out");
    *out = new ecm_graph{ecm::read_graph_file(path)};
  });
}

ecm_status ecm_graph_corpus(const char* name, ecm_graph** out) {
  return guard([&] {
    require(name, "name");
    require(out, "out");
    *out = new ecm_graph{ecm::corpus::by_name(name)};
  });
}

ecm_status ecm_graph_serialize(const ecm_graph* g, char** out) {
  return guard([&] {
    require(out, "out");
    *out = duplicate(ecm::serialize_graph(graph_of(g)));
  });
}

size_t ecm_graph_vertex_count(const ecm_graph* g) { return g ? g->g.vertex_count() : 0; }
size_t ecm_graph_edge_count(const ecm_graph* g) { return g ? g->g.edge_count() : 0; }
int ecm_graph_has_rotation(const ecm_graph* g) { return g && g->g.has_rotation() ? 1 : 0; }
void ecm_graph_free(ecm_graph* g) { delete g; }

ecm_status ecm_corpus_write(const char* dir) {
  return guard([&] {
    require(dir, "dir");
    ecm::corpus::write_fixtures(dir);
  });
}

ecm_status ecm_tutte_compute(const ecm_graph* g, uint64_t max_terms, ecm_tutte** out) {
  return guard([&] {
    require(out, "out");
    *out = new ecm_tutte{ecm::tutte(graph_of(g), limits_of(max_terms))};
  });
}

ecm_status ecm_tutte_string(const ecm_tutte* t, char** out) {
  return guard([&] {
    require(t, "polynomial");
    require(out, "out");
    *out = duplicate(t->t.to_string());
  });
}

ecm_status ecm_tutte_coefficient(const ecm_tutte* t, int i, int j, char** out) {
  return guard([&] {
    require(t, "polynomial");
    require(out, "out");
    *out = duplicate(ecm::to_string(t->t.coefficient(i, j)));
  });
}

void ecm_tutte_free(ecm_tutte* t) { delete t; }

ecm_status ecm_flow_polynomial(const ecm_graph* g, int q, uint64_t max_terms, char** out) {
  return guard([&] {
    require(out, "out");
    *out = duplicate(ecm::to_string(ecm::flow_polynomial(graph_of(g), order_of(q), limits_of(max_terms))));
  });
}

ecm_status ecm_chromatic(const ecm_graph* g, int q, uint64_t max_terms, char** out) {
  return guard([&] {
    require(out, "out");
    *out = duplicate(ecm::to_string(ecm::chromatic(graph_of(g), order_of(q), limits_of(max_terms))));
  });
}

ecm_status ecm_hwe(const ecm_graph* g, const char* group, int tensions, ecm_complex s, uint64_t max_terms,
                   ecm_complex* out) {
  return guard([&] {
    require(out, "out");
    const auto grp = group_of(group);
    const auto set = tensions ? ecm::enumerate_tensions(graph_of(g), grp, limits_of(max_terms))
                              : ecm::enumerate_flows(graph_of(g), grp, limits_of(max_terms));
    *out = to_c(ecm::hwe(set, from_c(s)));
  });
}

ecm_status ecm_cwe(const ecm_graph* g, const char* group, int tensions, const ecm_complex* weights, size_t n,
                   uint64_t max_terms, ecm_complex* out) {
  return guard([&] {
    require(out, "out");
    const auto grp = group_of(group);
    const auto w = weights_of(grp, weights, n);
    const auto set = tensions ? ecm::enumerate_tensions(graph_of(g), grp, limits_of(max_terms))
                              : ecm::enumerate_flows(graph_of(g), grp, limits_of(max_terms));
    *out = to_c(ecm::cwe(set, w.values()));
  });
}

ecm_status ecm_cwe_vertex_model(const ecm_graph* g, const char* group, const ecm_complex* weights, size_t n,
                                uint64_t max_terms, ecm_model_value* out) {
  return guard([&] {
    require(out, "out");
    const auto grp = group_of(group);
    *out = to_c(ecm::cwe_flow_vertex_model(graph_of(g), weights_of(grp, weights, n), limits_of(max_terms)));
  });
}

ecm_status ecm_cwe_edge_model(const ecm_graph* g, const char* group, const ecm_complex* weights, size_t n,
                              uint64_t max_terms, ecm_model_value* out) {
  return guard([&] {
    require(out, "out");
    const auto grp = group_of(group);
    *out = to_c(ecm::cwe_flow_edge_model(graph_of(g), weights_of(grp, weights, n), limits_of(max_terms)));
  });
}

ecm_status ecm_tutte_edge_model(const ecm_graph* g, int q, ecm_complex s, uint64_t max_terms, ecm_model_value* out) {
  return guard([&] {
    require(out, "out");
    *out = to_c(ecm::tutte_edge_model(graph_of(g), order_of(q), from_c(s), limits_of(max_terms)));
  });
}

ecm_status ecm_monochrome_vertex_model(const ecm_graph* g, int q, ecm_complex t, uint64_t max_terms,
                                       ecm_model_value* out) {
  return guard([&] {
    require(out, "out");
    const auto grp = ecm::Group::cyclic(order_of(q));
    const auto edge = ecm::QFunction::tabulate(grp, 2, [&](std::span<const int> ab) {
      return ab[0] == ab[1] ? from_c(t) : ecm::Complex(1.0);
    });
    *out = to_c(ecm::vertex_partition(graph_of(g), ecm::VertexModel{ecm::constant(grp, 1, 1.0), edge},
                                      limits_of(max_terms)));
  });
}

ecm_status ecm_szegedy_vertex_model(const ecm_graph* g, int q, const ecm_complex* f, const double* edge_weight,
                                    uint64_t max_terms, ecm_model_value* out) {
  return guard([&] {
    require(out, "out");
    const auto grp = ecm::Group::cyclic(order_of(q));
    *out = to_c(ecm::szegedy_vertex_model(graph_of(g), weights_of(grp, f, static_cast<size_t>(q)),
                                          matrix_of(q, edge_weight), limits_of(max_terms)));
  });
}

ecm_status ecm_szegedy_edge_model(const ecm_graph* g, int q, const ecm_complex* f, const double* edge_weight,
                                  uint64_t max_terms, ecm_model_value* out) {
  return guard([&] {
    require(out, "out");
    const auto grp = ecm::Group::cyclic(order_of(q));
    *out = to_c(ecm::szegedy_edge_model(graph_of(g), weights_of(grp, f, static_cast<size_t>(q)),
                                        matrix_of(q, edge_weight), limits_of(max_terms)));
  });
}

ecm_status ecm_xq(const ecm_graph* g, const char* group, const ecm_complex* s, const ecm_complex* t, size_t n,
                  uint64_t max_terms, ecm_complex* primal, ecm_complex* dual) {
  return guard([&] {
    require(primal, "primal");
    require(dual, "dual");
    const auto grp = group_of(group);
    ecm::XQParams p{grp, weights_of(grp, s, n).values(), weights_of(grp, t, n).values()};
    *primal = to_c(ecm::xq_evaluate(graph_of(g), p, limits_of(max_terms)).value);
    *dual = to_c(ecm::xq_dual(graph_of(g), p, limits_of(max_terms)).value);
  });
}

ecm_status ecm_sine_model(const ecm_graph* g, int q, int k, uint64_t max_terms, ecm_model_value* out) {
  return guard([&] {
    require(out, "out");
    *out = to_c(ecm::sine_model(graph_of(g), order_of(q), k, limits_of(max_terms)));
  });
}

ecm_status ecm_kplus1_sign_sum(const ecm_graph* g, int k, uint64_t max_terms, ecm_model_value* out) {
  return guard([&] {
    require(out, "out");
    *out = to_c(ecm::kplus1_sign_sum(graph_of(g), k, limits_of(max_terms)));
  });
}

ecm_status ecm_proper_sign_sum(const ecm_graph* g, int k, uint64_t max_terms, long long* signed_sum,
                               uint64_t* count) {
  return guard([&] {
    require(signed_sum, "signed_sum");
    const auto r = ecm::proper_colouring_sign_sum(graph_of(g), order_of(k), limits_of(max_terms));
    *signed_sum = r.signed_sum;
    if (count) *count = r.count;
  });
}

ecm_status ecm_even_minus_odd4(const ecm_graph* g, uint64_t max_terms, long long* difference) {
  return guard([&] {
    require(difference, "difference");
    *difference = ecm::even_minus_odd_proper4(graph_of(g), limits_of(max_terms)).difference;
  });
}

ecm_status ecm_verify(const char* suite, const ecm_graph* const* graphs, const char* const* names, size_t n_graphs,
                      const int* qs, size_t n_qs, double tol, uint64_t max_terms, uint64_t seed, ecm_report** out) {
  return guard([&] {
    require(out, "out");
    ecm::VerifyOptions opts;
    if (suite) opts.suite = suite;
    if (tol > 0.0) opts.tol = tol;
    opts.max_terms = limits_of(max_terms).max_terms;
    opts.seed = seed;
    if (n_graphs > 0) require(graphs, "graphs");
    for (size_t i = 0; i < n_graphs; ++i) {
      const std::string name = names && names[i] ? names[i] : "graph" + std::to_string(i);
      opts.graphs.push_back({name, graph_of(graphs[i])});
    }
    if (n_qs > 0) require(qs, "qs");
    for (size_t i = 0; i < n_qs; ++i) opts.qs.push_back(qs[i]);
    *out = new ecm_report{ecm::verify(opts)};
  });
}

size_t ecm_report_count(const ecm_report* r) { return r ? r->r.evaluated() : 0; }
size_t ecm_report_skipped(const ecm_report* r) { return r ? r->r.skipped() : 0; }
size_t ecm_report_failures(const ecm_report* r) { return r ? r->r.failures() : 0; }

ecm_status ecm_report_jsonl(const ecm_report* r, char** out) {
  return guard([&] {
    require(r, "report");
    require(out, "out");
    *out = duplicate(r->r.to_jsonl());
  });
}

void ecm_report_free(ecm_report* r) { delete r; }

}  // extern "C"
