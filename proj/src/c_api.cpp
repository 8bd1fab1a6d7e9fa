#include "afm/afm_c.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include <json.hpp>

#include "afm/duality.hpp"
#include "afm/exact/predict.hpp"
#include "afm/exact/salpeter.hpp"
#include "afm/tables.hpp"

using nlohmann::json;

namespace {

thread_local std::string g_last_error;

afm_status code_of(const afm::Error& e) {
  switch (e.code()) {
    case afm::ErrorCode::invalid_argument:
      return AFM_ERR_INVALID;
    case afm::ErrorCode::parse_error:
      return AFM_ERR_PARSE;
    case afm::ErrorCode::domain_error:
      return AFM_ERR_DOMAIN;
    case afm::ErrorCode::no_bracket:
      return AFM_ERR_NO_BRACKET;
    case afm::ErrorCode::no_convergence:
      return AFM_ERR_NO_CONVERGENCE;
    case afm::ErrorCode::non_monotone:
      return AFM_ERR_NON_MONOTONE;
    case afm::ErrorCode::unsupported:
      return AFM_ERR_UNSUPPORTED;
  }
  return AFM_ERR_INTERNAL;
}

template <class F>
afm_status guarded(F&& f) {
  try {
    f();
    return AFM_OK;
  } catch (const afm::Error& e) {
    g_last_error = e.what();
    return code_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return AFM_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

json report_to_json(const afm::DualityCheckReport& rep) {
  return json{{"relation", std::string(afm::relation_name(rep.id))},
              {"lhs", rep.lhs_value},
              {"rhs", rep.rhs_value},
              {"multiplier", rep.multiplier},
              {"m_target", rep.m_target},
              {"q_target", rep.q_target},
              {"sigma_target", rep.sigma_target},
              {"abs_residual", rep.abs_residual},
              {"rel_residual", rep.rel_residual},
              {"passed", rep.passed},
              {"error", rep.error}};
}

afm::StateLabels labels_from(const int* nl_pairs, int n_pairs) {
  if (!nl_pairs || n_pairs < 1) afm::throw_error(afm::ErrorCode::invalid_argument, "labels required");
  std::vector<std::pair<int, int>> v;
  for (int i = 0; i < n_pairs; ++i) v.emplace_back(nl_pairs[2 * i], nl_pairs[2 * i + 1]);
  return afm::StateLabels(v);
}

}  // namespace

struct afm_potential {
  afm::PotentialSpec spec;
};

struct afm_system {
  afm::SystemSpec spec;
};

extern "C" {

const char* afm_version(void) { return "1.0.0"; }

const char* afm_last_error(void) { return g_last_error.c_str(); }

void afm_string_free(char* s) { std::free(s); }

afm_status afm_potential_parse(const char* text, afm_potential** out) {
  return guarded([&] {
    if (!text || !out) afm::throw_error(afm::ErrorCode::invalid_argument, "null argument");
    *out = new afm_potential{afm::parse_potential(text)};
  });
}

afm_status afm_potential_format(const afm_potential* p, char** out) {
  return guarded([&] {
    if (!p || !out) afm::throw_error(afm::ErrorCode::invalid_argument, "null argument");
    *out = dup_string(afm::format_potential(p->spec));
  });
}

afm_status afm_potential_eval(const afm_potential* p, double r, double* out) {
  return guarded([&] {
    if (!p || !out) afm::throw_error(afm::ErrorCode::invalid_argument, "null argument");
    *out = p->spec.eval(r);
  });
}

afm_status afm_potential_deriv(const afm_potential* p, double r, double* out) {
  return guarded([&] {
    if (!p || !out) afm::throw_error(afm::ErrorCode::invalid_argument, "null argument");
    *out = p->spec.deriv(r);
  });
}

afm_status afm_potential_sqrt_transform(const afm_potential* p, double alpha, afm_potential** out) {
  return guarded([&] {
    if (!p || !out) afm::throw_error(afm::ErrorCode::invalid_argument, "null argument");
    *out = new afm_potential{afm::sqrt_transform(p->spec, alpha)};
  });
}

void afm_potential_free(afm_potential* p) { delete p; }

afm_status afm_system_create(const char* kinematics, int n_particles, double sigma, double m,
                             const afm_potential* one_body, const afm_potential* two_body,
                             afm_system** out) {
  return guarded([&] {
    if (!kinematics || !out) afm::throw_error(afm::ErrorCode::invalid_argument, "null argument");
    afm::SystemSpec s;
    s.flavor = afm::parse_kinematics(kinematics);
    s.N = n_particles;
    s.sigma = sigma;
    s.m = m;
    if (one_body) s.one_body = one_body->spec;
    if (two_body) s.two_body = two_body->spec;
    s.validate();
    *out = new afm_system{std::move(s)};
  });
}

void afm_system_free(afm_system* s) { delete s; }

afm_status afm_solve(const afm_system* s, double q, afm_solution* out) {
  return guarded([&] {
    if (!s || !out) afm::throw_error(afm::ErrorCode::invalid_argument, "null argument");
    afm::AFMSolution sol = afm::solve_afm(s->spec, q);
    out->x0 = sol.x0;
    out->r0_onebody = sol.r0_onebody.value_or(0.0);
    out->r0_twobody = sol.r0_twobody.value_or(0.0);
    out->value = sol.value;
    out->iterations = sol.iterations;
    out->residual = sol.residual;
  });
}

afm_status afm_universal_F(const afm_potential* p, double x, double* out) {
  return guarded([&] {
    if (!p || !out) afm::throw_error(afm::ErrorCode::invalid_argument, "null argument");
    *out = afm::universal_F(p->spec, x);
  });
}

afm_status afm_universal_G(const afm_potential* p, double x, double* out) {
  return guarded([&] {
    if (!p || !out) afm::throw_error(afm::ErrorCode::invalid_argument, "null argument");
    *out = afm::universal_G(p->spec, x);
  });
}

afm_status afm_compact_ur(const afm_system* s, double q, double a, double* out) {
  return guarded([&] {
    if (!s || !out) afm::throw_error(afm::ErrorCode::invalid_argument, "null argument");
    *out = afm::compact_ur(s->spec, q, a);
  });
}

afm_status afm_compact_nr(const afm_system* s, double q, double a, double* out) {
  return guarded([&] {
    if (!s || !out) afm::throw_error(afm::ErrorCode::invalid_argument, "null argument");
    *out = afm::compact_nr(s->spec, q, a);
  });
}

afm_status afm_closed_powerlaw(const afm_system* s, double q, double* out) {
  return guarded([&] {
    if (!s || !out) afm::throw_error(afm::ErrorCode::invalid_argument, "null argument");
    *out = afm::closed_powerlaw(s->spec, q);
  });
}

afm_status afm_q_eval(const char* prescription, int n_particles, const int* nl_pairs, int n_pairs,
                      double* out) {
  return guarded([&] {
    if (!prescription || !out) afm::throw_error(afm::ErrorCode::invalid_argument, "null argument");
    afm::QPrescription p = afm::parse_prescription(prescription, n_particles);
    *out = afm::q_custom(p, labels_from(nl_pairs, n_pairs));
  });
}

afm_status afm_duality_verify(const char* relation, const afm_system* lhs, double q, double tol,
                              const char* free_params_json, char** report_json) {
  return guarded([&] {
    if (!relation || !lhs || !report_json)
      afm::throw_error(afm::ErrorCode::invalid_argument, "null argument");
    afm::DualityRelation rel;
    rel.id = afm::parse_relation(relation);
    if (free_params_json && *free_params_json) {
      json fp = json::parse(free_params_json, nullptr, false);
      if (fp.is_discarded() || !fp.is_object())
        afm::throw_error(afm::ErrorCode::parse_error, "free_params must be a JSON object");
      for (auto& [k, v] : fp.items()) rel.free_params[k] = v.get<double>();
    }
    auto rep = afm::verify_relation(rel, lhs->spec, q, tol);
    *report_json = dup_string(report_to_json(rep).dump());
  });
}

afm_status afm_duality_sweep(uint64_t seed, int count, double tol, int jobs, char** report_json) {
  return guarded([&] {
    if (!report_json) afm::throw_error(afm::ErrorCode::invalid_argument, "null argument");
    afm::SweepConfig cfg;
    cfg.seed = seed;
    cfg.count = count;
    cfg.tol = tol;
    cfg.jobs = jobs;
    auto res = afm::duality_sweep(cfg);
    json failures = json::array();
    for (const auto& f : res.failed)
      failures.push_back(json{{"relation", std::string(afm::relation_name(f.id))},
                              {"potential", f.potential},
                              {"instance", f.instance},
                              {"report", report_to_json(f.report)}});
    json out{{"seed", seed},
             {"count", count},
             {"tol", tol},
             {"checks", res.checks},
             {"failures", res.failures},
             {"worst_rel_residual", res.worst_rel_residual},
             {"worst_relation", std::string(afm::relation_name(res.worst_id))},
             {"failed", failures}};
    *report_json = dup_string(out.dump());
  });
}

afm_status afm_bridge_verify(const afm_potential* p, const char* body, int n_particles, double m,
                             double q, double tol, char** report_json) {
  return guarded([&] {
    if (!p || !body || !report_json) afm::throw_error(afm::ErrorCode::invalid_argument, "null argument");
    afm::BridgeBody bb;
    if (std::string(body) == "one")
      bb = afm::BridgeBody::one;
    else if (std::string(body) == "two")
      bb = afm::BridgeBody::two;
    else
      afm::throw_error(afm::ErrorCode::parse_error, "body must be 'one' or 'two'");
    auto rep = afm::bridge_verify(p->spec, bb, n_particles, m, q, tol);
    *report_json = dup_string(report_to_json(rep).dump());
  });
}

afm_status afm_exact2b(double m, const afm_potential* v, int n, int l, int points, double* out) {
  return guarded([&] {
    if (!v || !out) afm::throw_error(afm::ErrorCode::invalid_argument, "null argument");
    afm::exact::MeshConfig cfg;
    if (points > 0) cfg.points = points;
    *out = afm::exact::solve_radial_2b(m, v->spec, n, l, cfg);
  });
}

afm_status afm_exact3b(double m, const afm_potential* v, int L, int parity, int bmax, double b,
                       int max_states, char** report_json) {
  return guarded([&] {
    if (!v || !report_json) afm::throw_error(afm::ErrorCode::invalid_argument, "null argument");
    afm::exact::ThreeBodyBasisConfig cfg;
    if (bmax > 0) cfg.Bmax = bmax;
    if (b > 0) cfg.b = b;
    if (max_states > 0) cfg.max_states = max_states;
    auto spec = afm::exact::solve_3b(m, v->spec, L, parity, cfg);
    json states = json::array();
    for (const auto& e : spec.entries)
      states.push_back(json{{"labels", e.labels},
                            {"bracketed", e.bracketed},
                            {"band", e.band},
                            {"energy", e.energy},
                            {"amplitude", e.main_amplitude},
                            {"multiplicity", e.multiplicity}});
    json out{{"L", spec.L},          {"parity", spec.parity},       {"b", spec.b_used},
             {"dimension", spec.dimension}, {"states", states}};
    *report_json = dup_string(out.dump());
  });
}

afm_status afm_salpeter2b(double sigma, double m, const afm_potential* v, int n, int l, int basis_size,
                          double* out) {
  return guarded([&] {
    if (!v || !out) afm::throw_error(afm::ErrorCode::invalid_argument, "null argument");
    afm::exact::SalpeterConfig cfg;
    if (basis_size > 0) cfg.basis_size = basis_size;
    *out = afm::exact::solve_salpeter_2b(sigma, m, v->spec, n, l, cfg);
  });
}

afm_status afm_universal_f(const afm_potential* v, double m, double* out) {
  return guarded([&] {
    if (!v || !out) afm::throw_error(afm::ErrorCode::invalid_argument, "null argument");
    *out = afm::exact::universal_f_fn(v->spec, m);
  });
}

afm_status afm_predict(const char* mode, double m, const int* nl_pairs, int n_pairs,
                       const char* prescription, int n_particles, const afm_potential* v, double* out) {
  return guarded([&] {
    if (!mode || !prescription || !v || !out)
      afm::throw_error(afm::ErrorCode::invalid_argument, "null argument");
    afm::exact::PredictMode pm;
    std::string ms(mode);
    if (ms == "two_body_f")
      pm = afm::exact::PredictMode::two_body_f;
    else if (ms == "n_body_gs")
      pm = afm::exact::PredictMode::n_body_gs;
    else if (ms == "n_body_via_f")
      pm = afm::exact::PredictMode::n_body_via_f;
    else if (ms == "gs_link")
      pm = afm::exact::PredictMode::gs_link;
    else
      afm::throw_error(afm::ErrorCode::parse_error, "unknown predict mode '" + ms + "'");
    afm::QPrescription presc = afm::parse_prescription(prescription, n_particles);
    afm::StateLabels labels = labels_from(nl_pairs, n_pairs);
    *out = afm::exact::predict_spectrum(pm, m, labels, presc, n_particles, v->spec);
  });
}

afm_status afm_table(const char* name, const char* prescription, const char* format, char** out,
                     int* check_failed) {
  return guarded([&] {
    if (!name || !format || !out || !check_failed)
      afm::throw_error(afm::ErrorCode::invalid_argument, "null argument");
    std::string nm(name), fmt(format), presc(prescription ? prescription : "");
    *check_failed = 0;
    std::string text;
    if (nm == "table1") {
      auto rows = afm::tables::table1();
      const auto& ref = afm::tables::table1_reference();
      bool want_ho = presc.empty() || presc == "ho";
      bool want_imp = presc.empty() || presc == "improved2b";
      if (!want_ho && !want_imp)
        afm::throw_error(afm::ErrorCode::invalid_argument, "table1 prescription must be ho or improved2b");
      for (size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        for (const auto& q : ref) {
          if (q.n != r.n || q.l != r.l) continue;
          if (std::abs(r.exact - q.exact) > 1e-3) *check_failed = 1;
          if (want_ho && (std::abs(r.pred_ho - q.pred_ho) > 2e-3 ||
                          std::abs(r.dev_ho_pct - q.dev_ho) > 0.3))
            *check_failed = 1;
          if (want_imp && (std::abs(r.pred_improved - q.pred_imp) > 2e-3 ||
                           std::abs(r.dev_improved_pct - q.dev_imp) > 0.3))
            *check_failed = 1;
        }
      }
      if (fmt == "csv") {
        std::string head = "n,l,exact";
        if (want_ho) head += ",pred_ho,dev_ho_pct";
        if (want_imp) head += ",pred_improved,dev_improved_pct";
        text = head + "\n";
        char buf[256];
        for (const auto& r : rows) {
          std::string line = std::to_string(r.n) + "," + std::to_string(r.l);
          std::snprintf(buf, sizeof buf, ",%.6g", r.exact);
          line += buf;
          if (want_ho) {
            std::snprintf(buf, sizeof buf, ",%.6g,%.6g", r.pred_ho, r.dev_ho_pct);
            line += buf;
          }
          if (want_imp) {
            std::snprintf(buf, sizeof buf, ",%.6g,%.6g", r.pred_improved, r.dev_improved_pct);
            line += buf;
          }
          text += line + "\n";
        }
      } else {
        json arr = json::array();
        for (const auto& r : rows) {
          json row{{"n", r.n}, {"l", r.l}, {"exact", r.exact}};
          if (want_ho) {
            row["pred_ho"] = r.pred_ho;
            row["dev_ho_pct"] = r.dev_ho_pct;
          }
          if (want_imp) {
            row["pred_improved"] = r.pred_improved;
            row["dev_improved_pct"] = r.dev_improved_pct;
          }
          arr.push_back(row);
        }
        text = arr.dump(2);
      }
    } else if (nm == "table2") {
      auto rows = afm::tables::table2();
      const auto& ref = afm::tables::table2_reference();
      for (size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        const auto& q = ref[i];
        if (std::abs(r.exact - q.exact) / q.exact > 1e-3) *check_failed = 1;
        if (std::abs(r.pred_qho - q.pred_qho) > 5e-3) *check_failed = 1;
        if (std::abs(r.pred_qwkb - q.pred_qwkb) > 5e-3) *check_failed = 1;
      }
      if (fmt == "csv") {
        text = "B,labels,exact,pred_Qho,dev_pct,pred_Qwkb,dev_pct\n";
        char buf[256];
        for (const auto& r : rows) {
          std::snprintf(buf, sizeof buf, "%d,\"%s\",%.6g,%.6g,%.6g,%.6g,%.6g\n", r.band,
                        r.label.c_str(), r.exact, r.pred_qho, r.dev_qho_pct, r.pred_qwkb,
                        r.dev_qwkb_pct);
          text += buf;
        }
      } else {
        json arr = json::array();
        for (const auto& r : rows)
          arr.push_back(json{{"B", r.band},
                             {"labels", r.label},
                             {"exact", r.exact},
                             {"pred_Qho", r.pred_qho},
                             {"dev_Qho_pct", r.dev_qho_pct},
                             {"pred_Qwkb", r.pred_qwkb},
                             {"dev_Qwkb_pct", r.dev_qwkb_pct}});
        text = arr.dump(2);
      }
    } else {
      afm::throw_error(afm::ErrorCode::invalid_argument, "unknown table '" + nm + "'");
    }
    *out = dup_string(text);
  });
}

}  // extern "C"
