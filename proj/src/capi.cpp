#include "qgr.h"

#include <cstring>
#include <json.hpp>
#include <memory>
#include <string>

#include "qgr/errors.hpp"
#include "qgr/ext_quiver.hpp"
#include "qgr/graded_rep.hpp"
#include "qgr/growth.hpp"
#include "qgr/k0.hpp"
#include "qgr/matricial.hpp"
#include "qgr/monomial.hpp"
#include "qgr/oracles.hpp"
#include "qgr/quiver.hpp"
#include "qgr/report.hpp"

struct qgr_quiver {
  std::shared_ptr<const qgr::Quiver> q;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
qgr_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const qgr::ParseError& e) {
    g_last_error = e.what();
    return QGR_ERR_PARSE;
  } catch (const qgr::NotFiniteGK& e) {
    g_last_error = e.what();
    return QGR_ERR_NOT_FINITE_GK;
  } catch (const qgr::AssertionFailure& e) {
    g_last_error = e.what();
    return QGR_ERR_INTERNAL;
  } catch (const nlohmann::json::exception& e) {
    g_last_error = e.what();
    return QGR_ERR_PARSE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return QGR_ERR_INVALID;
  }
}

qgr_status need(bool cond, const char* message) {
  if (cond) return QGR_OK;
  g_last_error = message;
  return QGR_ERR_INVALID;
}

}  // namespace

extern "C" {

const char* qgr_version(void) { return "0.1.0"; }

const char* qgr_last_error(void) { return g_last_error.c_str(); }

void qgr_string_free(char* s) { std::free(s); }

qgr_status qgr_quiver_parse(const char* text, qgr_quiver** out) {
  if (need(text && out, "null argument") != QGR_OK) return QGR_ERR_INVALID;
  return guarded([&] {
    *out = new qgr_quiver{std::make_shared<qgr::Quiver>(qgr::parse_quiver(text))};
    return QGR_OK;
  });
}

qgr_status qgr_quiver_from_json(const char* json_text, qgr_quiver** out) {
  if (need(json_text && out, "null argument") != QGR_OK) return QGR_ERR_INVALID;
  return guarded([&] {
    *out = new qgr_quiver{std::make_shared<qgr::Quiver>(qgr::quiver_from_json(json_text))};
    return QGR_OK;
  });
}

void qgr_quiver_free(qgr_quiver* q) { delete q; }

size_t qgr_quiver_vertex_count(const qgr_quiver* q) { return q ? q->q->vertex_count() : 0; }

size_t qgr_quiver_arrow_count(const qgr_quiver* q) { return q ? q->q->arrow_count() : 0; }

qgr_status qgr_quiver_serialize(const qgr_quiver* q, const char* format, char** out) {
  if (need(q && format && out, "null argument") != QGR_OK) return QGR_ERR_INVALID;
  return guarded([&] {
    std::string f = format;
    qgr::QuiverFormat qf;
    if (f == "text")
      qf = qgr::QuiverFormat::Text;
    else if (f == "json")
      qf = qgr::QuiverFormat::Json;
    else if (f == "dot")
      qf = qgr::QuiverFormat::Dot;
    else {
      g_last_error = "unknown format '" + f + "'";
      return QGR_ERR_INVALID;
    }
    *out = dup_string(qgr::serialize(*q->q, qf));
    return QGR_OK;
  });
}

qgr_status qgr_veronese(const qgr_quiver* q, unsigned power, qgr_quiver** out) {
  if (need(q && out, "null argument") != QGR_OK) return QGR_ERR_INVALID;
  return guarded([&] {
    *out = new qgr_quiver{std::make_shared<qgr::Quiver>(qgr::veronese(*q->q, power))};
    return QGR_OK;
  });
}

qgr_status qgr_algebra_graph(const char* text, qgr_quiver** out, char** warnings_json) {
  if (need(text && out, "null argument") != QGR_OK) return QGR_ERR_INVALID;
  return guarded([&] {
    auto parsed = qgr::parse_algebra(text);
    *out = new qgr_quiver{
        std::make_shared<qgr::Quiver>(qgr::ufnarovskii_graph(parsed.presentation))};
    if (warnings_json) {
      nlohmann::json w = parsed.warnings;
      *warnings_json = dup_string(w.dump());
    }
    return QGR_OK;
  });
}

qgr_status qgr_growth_json(const qgr_quiver* q, char** out) {
  if (need(q && out, "null argument") != QGR_OK) return QGR_ERR_INVALID;
  return guarded([&] {
    *out = dup_string(qgr::to_json(qgr::gk_dimension(*q->q)));
    return QGR_OK;
  });
}

qgr_status qgr_cycles_json(const qgr_quiver* q, char** out) {
  if (need(q && out, "null argument") != QGR_OK) return QGR_ERR_INVALID;
  return guarded([&] {
    *out = dup_string(qgr::cycles_json(*q->q));
    return QGR_OK;
  });
}

qgr_status qgr_growth_verify_json(const qgr_quiver* q, char** out) {
  if (need(q && out, "null argument") != QGR_OK) return QGR_ERR_INVALID;
  return guarded([&] {
    *out = dup_string(qgr::growth_verify_json(*q->q));
    return QGR_OK;
  });
}

qgr_status qgr_simples_json(const qgr_quiver* q, char** out) {
  if (need(q && out, "null argument") != QGR_OK) return QGR_ERR_INVALID;
  return guarded([&] {
    *out = dup_string(qgr::simples_json(*q->q));
    return QGR_OK;
  });
}

qgr_status qgr_ext_quiver(const qgr_quiver* q, qgr_quiver** out) {
  if (need(q && out, "null argument") != QGR_OK) return QGR_ERR_INVALID;
  return guarded([&] {
    *out = new qgr_quiver{
        std::make_shared<qgr::Quiver>(qgr::ext_quiver(*q->q).as_quiver())};
    return QGR_OK;
  });
}

qgr_status qgr_ext_poset_json(const qgr_quiver* q, char** out) {
  if (need(q && out, "null argument") != QGR_OK) return QGR_ERR_INVALID;
  return guarded([&] {
    *out = dup_string(qgr::ext_poset_json(qgr::ext_quiver(*q->q)));
    return QGR_OK;
  });
}

qgr_status qgr_canonical(const qgr_quiver* q, qgr_quiver** out) {
  if (need(q && out, "null argument") != QGR_OK) return QGR_ERR_INVALID;
  return guarded([&] {
    *out = new qgr_quiver{
        std::make_shared<qgr::Quiver>(qgr::gamma(qgr::ext_quiver(*q->q).poset()))};
    return QGR_OK;
  });
}

namespace {

qgr_status equivalence_impl(const qgr_quiver* a, const qgr_quiver* b, int* equivalent,
                            char** witness_json, bool verify) {
  return guarded([&] {
    auto w = qgr::qgr_equivalent(*a->q, *b->q);
    if (verify) {
      auto pa = qgr::ext_quiver(*a->q).poset();
      auto pb = qgr::ext_quiver(*b->q).poset();
      bool brute = qgr::oracles::poset_iso_bruteforce(pa, pb).has_value();
      if (brute != w.equivalent) {
        g_last_error = "isomorphism search disagrees with brute force";
        return QGR_ERR_INTERNAL;
      }
    }
    *equivalent = w.equivalent ? 1 : 0;
    if (witness_json) {
      nlohmann::json j;
      j["equivalent"] = w.equivalent;
      if (w.equivalent) {
        nlohmann::json bij = nlohmann::json::object();
        for (const auto& [from, to] : w.bijection) bij[from] = to;
        j["bijection"] = bij;
      } else {
        j["distinguishing"] = w.distinguishing;
      }
      *witness_json = dup_string(j.dump());
    }
    return QGR_OK;
  });
}

}  // namespace

qgr_status qgr_equivalent(const qgr_quiver* a, const qgr_quiver* b, int* equivalent,
                          char** witness_json) {
  if (need(a && b && equivalent, "null argument") != QGR_OK) return QGR_ERR_INVALID;
  return equivalence_impl(a, b, equivalent, witness_json, false);
}

qgr_status qgr_equivalent_verified(const qgr_quiver* a, const qgr_quiver* b, int* equivalent,
                                   char** witness_json) {
  if (need(a && b && equivalent, "null argument") != QGR_OK) return QGR_ERR_INVALID;
  return equivalence_impl(a, b, equivalent, witness_json, true);
}

qgr_status qgr_k0_json(const qgr_quiver* q, char** out) {
  if (need(q && out, "null argument") != QGR_OK) return QGR_ERR_INVALID;
  return guarded([&] {
    *out = dup_string(qgr::k0_json(qgr::k0(*q->q)));
    return QGR_OK;
  });
}

qgr_status qgr_cone_contains(const qgr_quiver* q, const char* vec, int* member) {
  if (need(q && vec && member, "null argument") != QGR_OK) return QGR_ERR_INVALID;
  return guarded([&] {
    auto k = qgr::k0(*q->q);
    auto v = qgr::parse_int_csv(vec);
    *member = qgr::k0_cone_contains(k, v) ? 1 : 0;
    return QGR_OK;
  });
}

qgr_status qgr_cone_oracle(const qgr_quiver* q, const char* vec, unsigned cap, int* verdict) {
  if (need(q && vec && verdict, "null argument") != QGR_OK) return QGR_ERR_INVALID;
  return guarded([&] {
    auto k = qgr::k0(*q->q);
    auto v = qgr::parse_int_csv(vec);
    switch (qgr::positive_cone_oracle_embedded(k, v, cap)) {
      case qgr::ConeVerdict::Member:
        *verdict = 1;
        break;
      case qgr::ConeVerdict::NonMember:
        *verdict = 0;
        break;
      case qgr::ConeVerdict::Inconclusive:
        *verdict = -1;
        break;
    }
    return QGR_OK;
  });
}

qgr_status qgr_hom_dim(const qgr_quiver* q, const char* v, const char* w, int cap_degree,
                       int* dim, int* stabilized) {
  if (need(q && v && w && dim && stabilized, "null argument") != QGR_OK) return QGR_ERR_INVALID;
  return guarded([&] {
    auto ov = qgr::cyclic_point_module(q->q, v, cap_degree);
    auto ow = qgr::cyclic_point_module(q->q, w, cap_degree);
    auto res = qgr::qgr_hom_dim(ov, ow);
    *dim = res.dimension;
    *stabilized = res.stabilized ? 1 : 0;
    return QGR_OK;
  });
}

qgr_status qgr_ext_split(const qgr_quiver* q, const char* v, const char* w, const char* r,
                         const char* nu, int cap_degree, int* verdict, int* witness) {
  if (need(q && v && w && r && nu && verdict, "null argument") != QGR_OK) return QGR_ERR_INVALID;
  return guarded([&] {
    auto coeffs = qgr::parse_rat_csv(nu);
    auto e = qgr::build_extension(q->q, v, w, r, coeffs, cap_degree);
    auto res = qgr::is_split_extension(e);
    switch (res.verdict) {
      case qgr::SplitVerdict::Split:
        *verdict = 1;
        break;
      case qgr::SplitVerdict::NonSplit:
        *verdict = 0;
        break;
      case qgr::SplitVerdict::Inconclusive:
        *verdict = -1;
        break;
    }
    if (witness) *witness = res.witness_from;
    return QGR_OK;
  });
}

qgr_status qgr_point_module_json(const qgr_quiver* q, const char* v, int cap_degree, int shift,
                                 char** out) {
  if (need(q && v && out, "null argument") != QGR_OK) return QGR_ERR_INVALID;
  return guarded([&] {
    auto ov = qgr::cyclic_point_module(q->q, v, cap_degree + shift);
    *out = dup_string(qgr::rep_to_json(shift > 0 ? ov.shift_truncate(shift) : ov));
    return QGR_OK;
  });
}

qgr_status qgr_point_classify(const char* rep_json, char** out) {
  if (need(rep_json && out, "null argument") != QGR_OK) return QGR_ERR_INVALID;
  return guarded([&] {
    auto rep = qgr::rep_from_json(rep_json);
    try {
      *out = dup_string(qgr::to_json(qgr::classify_point_module(rep)));
    } catch (const qgr::NotEventuallyPeriodic& e) {
      g_last_error = e.what();
      return QGR_ERR_INCONCLUSIVE;
    }
    return QGR_OK;
  });
}

qgr_status qgr_matricial_json(const qgr_quiver* q, unsigned n_max, char** out) {
  if (need(q && out, "null argument") != QGR_OK) return QGR_ERR_INVALID;
  return guarded([&] {
    *out = dup_string(qgr::matricial_json(*q->q, n_max));
    return QGR_OK;
  });
}

qgr_status qgr_gk1_json(const qgr_quiver* q, char** out) {
  if (need(q && out, "null argument") != QGR_OK) return QGR_ERR_INVALID;
  return guarded([&] {
    *out = dup_string(qgr::to_json(qgr::gk1_report(*q->q)));
    return QGR_OK;
  });
}

qgr_status qgr_noetherian(const qgr_quiver* q, int* left, int* right) {
  if (need(q && left && right, "null argument") != QGR_OK) return QGR_ERR_INVALID;
  return guarded([&] {
    auto rep = qgr::noetherian_check(*q->q);
    *left = rep.left ? 1 : 0;
    *right = rep.right ? 1 : 0;
    return QGR_OK;
  });
}

qgr_status qgr_report_json(const qgr_quiver* q, int cap_degree, int cap_iterations, char** out) {
  if (need(q && out, "null argument") != QGR_OK) return QGR_ERR_INVALID;
  return guarded([&] {
    *out = dup_string(qgr::report_json(*q->q, cap_degree, cap_iterations));
    return QGR_OK;
  });
}

}  // extern "C"
