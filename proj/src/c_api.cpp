#include "aksch/aksch.h"

#include <memory>
#include <optional>
#include <string>

#include "aksch/blocks.hpp"
#include "aksch/cache.hpp"
#include "aksch/errors.hpp"
#include "aksch/grading.hpp"
#include "aksch/jantzen.hpp"
#include "aksch/parameters.hpp"
#include "aksch/quiver.hpp"
#include "aksch/serialize.hpp"
#include "aksch/tableaux.hpp"
#include "aksch/worked_examples.hpp"

struct aksch_context {
  std::optional<aksch::EnumerationCache> cache;
  std::string last_error;
};

struct aksch_params {
  aksch::ParameterSet p;
};

struct aksch_modular {
  aksch::ModularConfig cfg;
};

struct aksch_result {
  std::string text;
};

using namespace aksch;

namespace {

template <class F>
aksch_status guard(aksch_context* ctx, F&& body) {
  auto fail = [&](aksch_status s, const char* what) {
    if (ctx) ctx->last_error = what;
    return s;
  };
  try {
    body();
    if (ctx) ctx->last_error.clear();
    return AKSCH_OK;
  } catch (const RegimeError& e) {
    return fail(AKSCH_REGIME, e.what());
  } catch (const DegenerateError& e) {
    return fail(AKSCH_DEGENERATE, e.what());
  } catch (const IoError& e) {
    return fail(AKSCH_IO, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(AKSCH_INVALID_ARGUMENT, e.what());
  } catch (const json::exception& e) {
    return fail(AKSCH_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(AKSCH_INTERNAL, e.what());
  } catch (...) {
    return fail(AKSCH_INTERNAL, "unknown error");
  }
}

void need(bool ok, const char* what) {
  if (!ok) throw InvalidArgument(what);
}

void emit(aksch_result** out, const json& j) { *out = new aksch_result{j.dump()}; }

std::vector<int> ints(const int* v, size_t len) {
  return v ? std::vector<int>(v, v + len) : std::vector<int>{};
}

// The blocks selected by content (all blocks when content is null).
std::vector<Block> select_blocks(int n, const ParameterSet& p, const long* content, size_t len) {
  if (!content) return block_partition(n, p);
  return {find_block(n, p, std::vector<long>(content, content + len))};
}

}  // namespace

extern "C" {

const char* aksch_version(void) { return "1.0.0"; }

const char* aksch_status_string(aksch_status s) {
  switch (s) {
    case AKSCH_OK: return "OK";
    case AKSCH_INVALID_ARGUMENT: return "INVALID_ARGUMENT";
    case AKSCH_REGIME: return "REGIME";
    case AKSCH_DEGENERATE: return "DEGENERATE";
    case AKSCH_IO: return "IO";
    case AKSCH_INTERNAL: return "INTERNAL";
  }
  return "UNKNOWN";
}

aksch_status aksch_context_new(aksch_context** out) {
  if (!out) return AKSCH_INVALID_ARGUMENT;
  *out = new (std::nothrow) aksch_context{};
  return *out ? AKSCH_OK : AKSCH_INTERNAL;
}

void aksch_context_free(aksch_context* ctx) { delete ctx; }

aksch_status aksch_context_set_cache_dir(aksch_context* ctx, const char* dir) {
  if (!ctx) return AKSCH_INVALID_ARGUMENT;
  return guard(ctx, [&] {
    if (!dir || !*dir) ctx->cache.reset();
    else ctx->cache.emplace(dir);
  });
}

const char* aksch_last_error(const aksch_context* ctx) { return ctx ? ctx->last_error.c_str() : ""; }

aksch_status aksch_params_new(aksch_context* ctx, long e, const long* f, size_t r, long char_p,
                              aksch_params** out) {
  return guard(ctx, [&] {
    need(out != nullptr, "output pointer is null");
    need(f != nullptr || r == 0, "exponent array is null");
    need(e == AKSCH_E_INFINITY || e >= 0, "e must be positive or AKSCH_E_INFINITY");
    const ExtendedInt ee = e == AKSCH_E_INFINITY ? ExtendedInt::infinity() : ExtendedInt(e);
    *out = new aksch_params{ParameterSet::root_of_unity(ee, std::vector<long>(f, f + r), char_p)};
  });
}

aksch_status aksch_params_new_q_one(aksch_context* ctx, size_t r, long char_p, aksch_params** out) {
  return guard(ctx, [&] {
    need(out != nullptr, "output pointer is null");
    *out = new aksch_params{ParameterSet::q_one(static_cast<int>(r), char_p)};
  });
}

void aksch_params_free(aksch_params* p) { delete p; }

aksch_status aksch_modular_new(aksch_context* ctx, size_t r, aksch_modular** out) {
  return guard(ctx, [&] {
    need(out != nullptr, "output pointer is null");
    need(r >= 1, "r must be at least 1");
    *out = new aksch_modular{ModularConfig::standard(static_cast<int>(r))};
  });
}

aksch_status aksch_modular_set_deform(aksch_context* ctx, aksch_modular* m, size_t k, int c) {
  return guard(ctx, [&] {
    need(m != nullptr, "modular handle is null");
    need(k >= 1 && k <= m->cfg.deform.size(), "component index out of range");
    need(c >= 0, "deformation exponent must be positive (or AKSCH_PURE)");
    m->cfg.deform[k - 1] = c == AKSCH_PURE ? std::nullopt : std::optional<int>(c);
  });
}

aksch_status aksch_modular_set_q_deform(aksch_context* ctx, aksch_modular* m, int c0) {
  return guard(ctx, [&] {
    need(m != nullptr, "modular handle is null");
    need(c0 >= 0, "q-deformation exponent must be positive (or 0 to disable)");
    m->cfg.q_deform = c0 == 0 ? std::nullopt : std::optional<int>(c0);
  });
}

aksch_status aksch_modular_set_truncation(aksch_context* ctx, aksch_modular* m, int t) {
  return guard(ctx, [&] {
    need(m != nullptr, "modular handle is null");
    need(t >= 0, "truncation order must be positive (or 0 for the default)");
    m->cfg.truncation = t == 0 ? std::nullopt : std::optional<int>(t);
  });
}

void aksch_modular_free(aksch_modular* m) { delete m; }

const char* aksch_result_json(const aksch_result* r) { return r ? r->text.c_str() : ""; }

void aksch_result_free(aksch_result* r) { delete r; }

aksch_status aksch_classify(aksch_context* ctx, int n, const aksch_params* p, aksch_result** out) {
  return guard(ctx, [&] {
    need(p && out, "null argument");
    json j = to_json(classify(n, p->p));
    j["n"] = n;
    j["params"] = to_json(p->p);
    j["semisimple"] = is_semisimple(n, p->p);
    j["invariants"] = p->p.q_is_one() ? json(nullptr) : to_json(spread_invariants(p->p));
    emit(out, j);
  });
}

aksch_status aksch_classify_orbits(aksch_context* ctx, int n, const aksch_params* const* orbits, size_t count,
                                   aksch_result** out) {
  return guard(ctx, [&] {
    need(orbits && out, "null argument");
    OrbitSpec spec;
    json per = json::array();
    for (size_t i = 0; i < count; ++i) {
      need(orbits[i] != nullptr, "null orbit");
      spec.push_back(orbits[i]->p);
      json o = {{"params", to_json(orbits[i]->p)}, {"verdict", to_json(classify(n, orbits[i]->p))}};
      o["semisimplicityThreshold"] = semisimplicity_threshold(n, orbits[i]->p);
      per.push_back(o);
    }
    json j = to_json(classify_multi_orbit(n, spec));
    j["n"] = n;
    j["orbits"] = per;
    emit(out, j);
  });
}

aksch_status aksch_blocks(aksch_context* ctx, int n, const aksch_params* p, aksch_result** out) {
  return guard(ctx, [&] {
    need(p && out, "null argument");
    const Verdict v = classify(n, p->p);
    const bool reduce = p->p.r() >= 3 && is_finite_type(v.kind);
    json blocks = json::array();
    for (const auto& b : block_partition(n, p->p)) {
      json jb = to_json(b);
      if (reduce) jb["morita"] = to_json(morita_reduction(b, p->p));
      blocks.push_back(jb);
    }
    emit(out, {{"n", n}, {"params", to_json(p->p)}, {"verdict", to_string(v.kind)}, {"blocks", blocks}});
  });
}

aksch_status aksch_jantzen(aksch_context* ctx, int n, const aksch_params* p, const aksch_modular* m,
                           const long* content, size_t content_len, aksch_result** out) {
  return guard(ctx, [&] {
    need(p && m && out, "null argument");
    const JantzenEngine eng(n, p->p, m->cfg);
    json blocks = json::array();
    for (const auto& b : select_blocks(n, p->p, content, content_len)) {
      json jb = to_json(jantzen_table(b, eng));
      jb["content"] = b.content;
      blocks.push_back(jb);
    }
    json j;
    if (content) j = blocks.front();
    else j["blocks"] = blocks;
    j["config"] = to_json(m->cfg, n);
    j["n"] = n;
    j["params"] = to_json(p->p);
    emit(out, j);
  });
}

aksch_status aksch_decompose(aksch_context* ctx, int n, const aksch_params* p, const aksch_modular* m,
                             const long* content, size_t content_len, aksch_result** out) {
  return guard(ctx, [&] {
    need(p && m && out, "null argument");
    const Verdict v = classify(n, p->p);
    if (!is_finite_type(v.kind))
      throw RegimeError("decomposition matrices are only determined in the finite regime (verdict " +
                        to_string(v.kind) + ")");
    const JantzenEngine eng(n, p->p, m->cfg);
    json blocks = json::array();
    for (const auto& b : select_blocks(n, p->p, content, content_len)) {
      json jb = to_json(decomposition_matrix(b, eng));
      jb["content"] = b.content;
      blocks.push_back(jb);
    }
    json j;
    if (content) j = blocks.front();
    else j["blocks"] = blocks;
    j["config"] = to_json(m->cfg, n);
    j["n"] = n;
    j["params"] = to_json(p->p);
    emit(out, j);
  });
}

aksch_status aksch_dims(aksch_context* ctx, int n, int r, const int* m, size_t m_len, aksch_result** out) {
  return guard(ctx, [&] {
    need(ctx && out, "null argument");
    const DimsResult d = compute_dims(n, r, ints(m, m_len), ctx->cache ? &*ctx->cache : nullptr);
    json shapes = json::array();
    for (const auto& c : d.shapes)
      shapes.push_back({{"shape", to_json(c.shape)}, {"standard", c.standard}, {"semistandard", c.semistandard}});
    // r^n n!, the expected Hecke dimension
    std::uint64_t expect = 1;
    for (int i = 0; i < n; ++i) expect *= static_cast<std::uint64_t>(r);
    for (int i = 2; i <= n; ++i) expect *= static_cast<std::uint64_t>(i);
    emit(out, {{"n", n},
               {"r", r},
               {"m", d.m},
               {"dimHecke", d.dim_hecke},
               {"dimSchur", d.dim_schur},
               {"rPowNTimesNFactorial", expect},
               {"shapes", shapes}});
  });
}

aksch_status aksch_grading(aksch_context* ctx, int n, const int* m, size_t m_len, const int* levels, size_t g,
                           const int* eps, aksch_result** out) {
  return guard(ctx, [&] {
    need(levels && out, "null argument");
    const LevelComposition lp(ints(levels, g));
    std::vector<int> bounds = ints(m, m_len);
    if (bounds.empty()) bounds = default_bounds(n, lp.r());
    need(static_cast<int>(bounds.size()) == lp.r(), "m must have r entries");
    std::vector<std::vector<int>> weights;
    if (eps) weights.push_back(ints(eps, g));
    else weights = weight_vectors(n, lp.g());
    json reports = json::array();
    bool all = true;
    for (const auto& w : weights) {
      json rep = to_json(graded_dim_check(n, bounds, lp, w));
      all = all && rep["pass"].get<bool>();
      json shapes = json::array();
      for (const auto& lambda : enumerate_multipartitions(n, lp.r())) {
        const TableauSplit s = split_tableaux(lambda, lp, w, bounds);
        shapes.push_back({{"shape", to_json(lambda)},
                          {"alpha", alpha_p(lambda, lp)},
                          {"plus", s.plus.size()},
                          {"epsilon", s.epsilon.size()},
                          {"minus", s.minus_count}});
      }
      rep["shapes"] = shapes;
      reports.push_back(rep);
    }
    emit(out, {{"n", n}, {"m", bounds}, {"levels", lp.sizes()}, {"reports", reports}, {"pass", all}});
  });
}

aksch_status aksch_quiver(aksch_context* ctx, int m, aksch_result** out) {
  return guard(ctx, [&] {
    need(out != nullptr, "null argument");
    emit(out, to_json(AmAlgebra(m)));
  });
}

aksch_status aksch_worked_examples(aksch_context* ctx, aksch_result** out) {
  return guard(ctx, [&] {
    need(out != nullptr, "null argument");
    emit(out, to_json(worked_examples_report()));
  });
}

aksch_status aksch_classify_kind(aksch_context* ctx, int n, const aksch_params* p, aksch_verdict_kind* out) {
  return guard(ctx, [&] {
    need(p && out, "null argument");
    switch (classify(n, p->p).kind) {
      case VerdictKind::Semisimple: *out = AKSCH_SEMISIMPLE; break;
      case VerdictKind::Finite: *out = AKSCH_FINITE; break;
      case VerdictKind::Infinite: *out = AKSCH_INFINITE; break;
      case VerdictKind::Wild: *out = AKSCH_WILD; break;
      case VerdictKind::OutOfScope: *out = AKSCH_OUT_OF_SCOPE; break;
    }
  });
}

aksch_status aksch_is_semisimple(aksch_context* ctx, int n, const aksch_params* p, int* out) {
  return guard(ctx, [&] {
    need(p && out, "null argument");
    *out = is_semisimple(n, p->p) ? 1 : 0;
  });
}

aksch_status aksch_dim_hecke(aksch_context* ctx, int n, int r, uint64_t* out) {
  return guard(ctx, [&] {
    need(out != nullptr, "null argument");
    need(n >= 0 && r >= 1, "need n >= 0 and r >= 1");
    *out = dim_hecke(n, r);
  });
}

aksch_status aksch_dim_schur(aksch_context* ctx, int n, int r, const int* m, size_t m_len, uint64_t* out) {
  return guard(ctx, [&] {
    need(out != nullptr, "null argument");
    need(n >= 0 && r >= 1, "need n >= 0 and r >= 1");
    const std::vector<int> bounds = ints(m, m_len);
    *out = dim_schur(n, r, bounds);
  });
}

aksch_status aksch_jantzen_coefficient(aksch_context* ctx, const aksch_params* p, const aksch_modular* m,
                                       const char* lambda_json, const char* mu_json, long* out) {
  return guard(ctx, [&] {
    need(p && m && lambda_json && mu_json && out, "null argument");
    const Multipartition lambda = multipartition_from_json(json::parse(lambda_json));
    const Multipartition mu = multipartition_from_json(json::parse(mu_json));
    *out = jantzen_coefficient(lambda, mu, p->p, m->cfg);
  });
}

}  // extern "C"
