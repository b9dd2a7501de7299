#include "latticevortex.h"

#include <cstring>
#include <string>

#include "abelian_higgs.hpp"
#include "config.hpp"
#include "runner.hpp"

using namespace lvx;

struct lvx_config {
  RunConfig cfg;
};
struct lvx_run_result {
  RunResult res;
};
struct lvx_verify_result {
  VerifyResult res;
};
struct lvx_solution {
  DomainSolution sol;
};

namespace {

void put_error(char* errbuf, size_t errbuf_len, const char* msg) {
  if (!errbuf || errbuf_len == 0) return;
  std::strncpy(errbuf, msg, errbuf_len - 1);
  errbuf[errbuf_len - 1] = '\0';
}

lvx_status status_of(errc c) {
  switch (c) {
    case errc::invalid_input: return LVX_ERR_INVALID_INPUT;
    case errc::out_of_domain: return LVX_ERR_OUT_OF_DOMAIN;
    case errc::solver_failure: return LVX_ERR_SOLVER_FAILURE;
    case errc::non_convergence: return LVX_ERR_NON_CONVERGENCE;
    case errc::consistency: return LVX_ERR_CONSISTENCY;
    case errc::diagnostic: return LVX_ERR_DIAGNOSTIC;
    case errc::io: return LVX_ERR_IO;
  }
  return LVX_ERR_UNKNOWN;
}

template <typename F>
lvx_status guard(char* errbuf, size_t errbuf_len, F&& f) {
  try {
    f();
    return LVX_OK;
  } catch (const error& e) {
    put_error(errbuf, errbuf_len, e.what());
    return status_of(e.code());
  } catch (const std::exception& e) {
    put_error(errbuf, errbuf_len, e.what());
    return LVX_ERR_UNKNOWN;
  } catch (...) {
    put_error(errbuf, errbuf_len, "unknown error");
    return LVX_ERR_UNKNOWN;
  }
}

}  // namespace

extern "C" {

const char* lvx_version(void) { return "0.1.0"; }

const char* lvx_status_name(lvx_status status) {
  switch (status) {
    case LVX_OK: return "ok";
    case LVX_ERR_INVALID_INPUT: return "invalid_input";
    case LVX_ERR_OUT_OF_DOMAIN: return "out_of_domain";
    case LVX_ERR_SOLVER_FAILURE: return "solver_failure";
    case LVX_ERR_NON_CONVERGENCE: return "non_convergence";
    case LVX_ERR_CONSISTENCY: return "consistency";
    case LVX_ERR_DIAGNOSTIC: return "diagnostic";
    case LVX_ERR_IO: return "io";
    case LVX_ERR_UNKNOWN: break;
  }
  return "unknown";
}

lvx_status lvx_config_parse(const char* json_text, lvx_config** out,
                            char* errbuf, size_t errbuf_len) {
  if (!json_text || !out) {
    put_error(errbuf, errbuf_len, "null argument");
    return LVX_ERR_INVALID_INPUT;
  }
  *out = nullptr;
  return guard(errbuf, errbuf_len, [&] {
    *out = new lvx_config{RunConfig::from_json_text(json_text)};
  });
}

lvx_status lvx_config_load(const char* path, lvx_config** out,
                           char* errbuf, size_t errbuf_len) {
  if (!path || !out) {
    put_error(errbuf, errbuf_len, "null argument");
    return LVX_ERR_INVALID_INPUT;
  }
  *out = nullptr;
  return guard(errbuf, errbuf_len, [&] {
    *out = new lvx_config{RunConfig::from_file(path)};
  });
}

lvx_status lvx_config_set_output_dir(lvx_config* cfg, const char* dir) {
  if (!cfg || !dir || !*dir) return LVX_ERR_INVALID_INPUT;
  cfg->cfg.output_dir = dir;
  return LVX_OK;
}

void lvx_config_free(lvx_config* cfg) { delete cfg; }

lvx_status lvx_run(const lvx_config* cfg, lvx_run_result** out,
                   char* errbuf, size_t errbuf_len) {
  if (!cfg || !out) {
    put_error(errbuf, errbuf_len, "null argument");
    return LVX_ERR_INVALID_INPUT;
  }
  *out = nullptr;
  return guard(errbuf, errbuf_len,
               [&] { *out = new lvx_run_result{run(cfg->cfg)}; });
}

int lvx_run_exit_code(const lvx_run_result* r) {
  return r ? r->res.exit_code : 2;
}

const char* lvx_run_summary(const lvx_run_result* r) {
  return r ? r->res.summary.c_str() : "";
}

const char* lvx_run_report_path(const lvx_run_result* r) {
  return r ? r->res.report_path.c_str() : "";
}

void lvx_run_result_free(lvx_run_result* r) { delete r; }

lvx_status lvx_verify(const lvx_config* cfg, lvx_verify_result** out,
                      char* errbuf, size_t errbuf_len) {
  if (!cfg || !out) {
    put_error(errbuf, errbuf_len, "null argument");
    return LVX_ERR_INVALID_INPUT;
  }
  *out = nullptr;
  return guard(errbuf, errbuf_len,
               [&] { *out = new lvx_verify_result{verify(cfg->cfg)}; });
}

int lvx_verify_checks(const lvx_verify_result* r) {
  return r ? r->res.checks : 0;
}

int lvx_verify_failures(const lvx_verify_result* r) {
  return r ? r->res.failures : 0;
}

const char* lvx_verify_table(const lvx_verify_result* r) {
  return r ? r->res.table.c_str() : "";
}

void lvx_verify_result_free(lvx_verify_result* r) { delete r; }

lvx_status lvx_solve_box(lvx_model model, int dim, double lambda,
                         const int64_t* points, const int* multiplicities,
                         size_t n_vortices, int64_t half_width,
                         lvx_solution** out, char* errbuf, size_t errbuf_len) {
  if (!out || (n_vortices > 0 && !points)) {
    put_error(errbuf, errbuf_len, "null argument");
    return LVX_ERR_INVALID_INPUT;
  }
  *out = nullptr;
  return guard(errbuf, errbuf_len, [&] {
    std::vector<VortexPoint> vs;
    vs.reserve(n_vortices);
    for (size_t i = 0; i < n_vortices; ++i) {
      Vertex p(std::vector<Coord>(points + i * dim, points + (i + 1) * dim));
      vs.push_back({std::move(p), multiplicities ? multiplicities[i] : 1});
    }
    const VortexConfig vc(dim, lambda, std::move(vs));
    auto dom = Domain::box(Vertex{std::vector<Coord>(dim, 0)}, half_width);
    DomainSolution sol = model == LVX_MODEL_ABELIAN_HIGGS
                             ? solve_ah(vc, dom)
                             : solve_cs_on_domain(vc, dom);
    *out = new lvx_solution{std::move(sol)};
  });
}

int lvx_solution_dim(const lvx_solution* s) {
  return s ? s->sol.domain->dim() : 0;
}

size_t lvx_solution_interior_count(const lvx_solution* s) {
  return s ? s->sol.domain->interior_count() : 0;
}

int lvx_solution_iterations(const lvx_solution* s) {
  return s ? s->sol.iterations : 0;
}

double lvx_solution_residual_sup(const lvx_solution* s) {
  return s ? s->sol.residual_sup : 0.0;
}

double lvx_solution_flux_gap(const lvx_solution* s) {
  return s ? s->sol.flux_gap : 0.0;
}

lvx_status lvx_solution_value_at(const lvx_solution* s, const int64_t* coords,
                                 int dim, double* out) {
  if (!s || !coords || !out) return LVX_ERR_INVALID_INPUT;
  char scratch[1];
  return guard(scratch, sizeof scratch, [&] {
    if (dim != s->sol.domain->dim())
      throw_invalid("coordinate dimension mismatch");
    *out = s->sol.u.at(Vertex(std::vector<Coord>(coords, coords + dim)));
  });
}

void lvx_solution_free(lvx_solution* s) { delete s; }

}  // extern "C"
