// aksch command-line front end. Talks to the library only through aksch.h.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "aksch/aksch.h"
#include "json.hpp"

using json = nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRegime = 3;

struct Options {
  int n = 0;
  std::optional<int> r;
  std::string e = "inf";
  std::vector<long> f;
  long char_p = 0;
  bool q_one = false;
  std::string format = "json";
  std::string cache_dir;
  bool no_cache = false;
  std::vector<int> deform;
  std::vector<int> pure;
  int q_deform = 0;
  int truncation = 0;
  std::vector<long> content;
  std::vector<int> m;
  std::vector<int> levels;
  std::vector<int> eps;
  std::vector<std::string> orbits;
  int quiver_m = 1;
};

// Thrown for flag-level problems caught before the library is called.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Library failures carry their status so main can pick the exit code.
struct LibraryError : std::runtime_error {
  aksch_status status;
  LibraryError(aksch_status s, const std::string& what) : std::runtime_error(what), status(s) {}
};

class Session {
 public:
  Session() {
    if (aksch_context_new(&ctx_) != AKSCH_OK) throw std::runtime_error("cannot create context");
  }
  ~Session() {
    for (auto* p : params_) aksch_params_free(p);
    if (modular_) aksch_modular_free(modular_);
    aksch_context_free(ctx_);
  }
  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  aksch_context* ctx() { return ctx_; }

  void check(aksch_status s) {
    if (s != AKSCH_OK) throw LibraryError(s, aksch_last_error(ctx_));
  }

  aksch_params* params(const std::string& e, const std::vector<long>& f, long char_p, bool q_one,
                       std::optional<int> r) {
    aksch_params* p = nullptr;
    if (q_one) {
      const int rr = r ? *r : static_cast<int>(f.size());
      if (rr < 1) throw UsageError("--q-one needs --r (or --f to fix r)");
      check(aksch_params_new_q_one(ctx_, static_cast<size_t>(rr), char_p, &p));
    } else {
      if (f.empty()) throw UsageError("--f is required unless --q-one is given");
      if (r && *r != static_cast<int>(f.size()))
        throw UsageError("--r disagrees with the number of --f entries");
      check(aksch_params_new(ctx_, parse_e(e), f.data(), f.size(), char_p, &p));
    }
    params_.push_back(p);
    return p;
  }

  aksch_modular* modular(const Options& o, size_t r) {
    check(aksch_modular_new(ctx_, r, &modular_));
    if (!o.deform.empty()) {
      if (o.deform.size() != r) throw UsageError("--deform-exponents needs one value per component");
      for (size_t k = 0; k < r; ++k) {
        if (o.deform[k] < 1) throw UsageError("--deform-exponents values must be positive (use --pure)");
        check(aksch_modular_set_deform(ctx_, modular_, k + 1, o.deform[k]));
      }
    }
    for (int k : o.pure) {
      if (k < 1 || static_cast<size_t>(k) > r) throw UsageError("--pure component out of range");
      check(aksch_modular_set_deform(ctx_, modular_, static_cast<size_t>(k), AKSCH_PURE));
    }
    if (o.q_deform < 0) throw UsageError("--q-deform must be positive");
    check(aksch_modular_set_q_deform(ctx_, modular_, o.q_deform));
    if (o.truncation < 0) throw UsageError("--truncation must be positive");
    check(aksch_modular_set_truncation(ctx_, modular_, o.truncation));
    return modular_;
  }

  json take(aksch_status s, aksch_result*& res) {
    check(s);
    json j = json::parse(aksch_result_json(res));
    aksch_result_free(res);
    return j;
  }

  static long parse_e(const std::string& e) {
    if (e == "inf" || e == "INF" || e == "infinity") return AKSCH_E_INFINITY;
    try {
      std::size_t used = 0;
      const long v = std::stol(e, &used);
      if (used != e.size()) throw std::invalid_argument(e);
      if (v < 0) throw UsageError("--e must be positive or 'inf'");
      return v;
    } catch (const std::logic_error&) {
      throw UsageError("--e must be an integer or 'inf', got '" + e + "'");
    }
  }

 private:
  aksch_context* ctx_ = nullptr;
  std::vector<aksch_params*> params_;
  aksch_modular* modular_ = nullptr;
};

// ------------------------------------------------------------ table output

bool is_matrix(const json& j) {
  if (!j.is_array() || j.empty()) return false;
  for (const auto& row : j) {
    if (!row.is_array()) return false;
    for (const auto& v : row)
      if (!v.is_primitive()) return false;
  }
  return true;
}

std::string scalar(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void render(const json& j, std::ostream& os, const std::string& indent) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_primitive() || (v.is_array() && !is_matrix(v) && std::all_of(v.begin(), v.end(), [](const json& x) {
                                 return x.is_primitive() || x.is_array();
                               }))) {
        os << indent << k << ": " << (v.is_primitive() ? scalar(v) : v.dump()) << '\n';
      } else {
        os << indent << k << ":\n";
        render(v, os, indent + "  ");
      }
    }
  } else if (is_matrix(j)) {
    std::size_t w = 1;
    for (const auto& row : j)
      for (const auto& v : row) w = std::max(w, scalar(v).size());
    for (const auto& row : j) {
      os << indent;
      for (const auto& v : row) {
        const std::string s = scalar(v);
        os << std::string(w - s.size() + 1, ' ') << s;
      }
      os << '\n';
    }
  } else if (j.is_array()) {
    std::size_t i = 0;
    for (const auto& v : j) {
      if (v.is_primitive()) {
        os << indent << "- " << scalar(v) << '\n';
      } else {
        os << indent << "[" << i << "]\n";
        render(v, os, indent + "  ");
      }
      ++i;
    }
  } else {
    os << indent << scalar(j) << '\n';
  }
}

void print(const json& j, const std::string& format) {
  if (format == "table") render(j, std::cout, "");
  else std::cout << j.dump(2) << '\n';
}

// "E:F1,F2,..." or "one:R"
aksch_params* parse_orbit(Session& s, const std::string& spec, long char_p) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw UsageError("--orbit expects E:F1,F2,... or one:R, got '" + spec + "'");
  const std::string head = spec.substr(0, colon);
  std::vector<long> f;
  std::stringstream ss(spec.substr(colon + 1));
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      f.push_back(std::stol(item));
    } catch (const std::logic_error&) {
      throw UsageError("bad number '" + item + "' in --orbit");
    }
  }
  if (head == "one") {
    if (f.size() != 1) throw UsageError("--orbit one:R takes a single R");
    return s.params("inf", {}, char_p, true, static_cast<int>(f[0]));
  }
  return s.params(head, f, char_p, false, std::nullopt);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classifier, residue blocks, Jantzen coefficients and A_m models for cyclotomic Hecke and q-Schur algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;

  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--cache-dir", o.cache_dir, "Enumeration cache directory (default: $AKSCH_CACHE_DIR)");
  app.add_flag("--no-cache", o.no_cache, "Disable the enumeration cache");

  auto add_params = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "Rank n")->required()->check(CLI::NonNegativeNumber);
    sub->add_option("--r", o.r, "Number of parameters r");
    sub->add_option("--e", o.e, "Order of q: integer >= 2 or 'inf'");
    sub->add_option("--f", o.f, "Exponents f_1..f_r with Q_i = q^{f_i}")->delimiter(',');
    sub->add_option("--char", o.char_p, "Field characteristic (0 or a prime)");
    sub->add_flag("--q-one", o.q_one, "q = Q_1 = ... = Q_r = 1");
  };
  auto add_modular = [&](CLI::App* sub) {
    sub->add_option("--deform-exponents", o.deform, "t-exponents c_1..c_r")->delimiter(',');
    sub->add_option("--pure", o.pure, "Components without a t-term")->delimiter(',');
    sub->add_option("--q-deform", o.q_deform, "q-deformation exponent c0");
    sub->add_option("--truncation", o.truncation, "t-adic truncation order");
    sub->add_option("--content", o.content, "Residue content selecting one block")->delimiter(',');
  };

  auto* classify = app.add_subcommand("classify", "Representation type of the algebra");
  add_params(classify);
  auto* orbits = app.add_subcommand("orbits", "Representation type from separated parameter orbits");
  orbits->add_option("--n", o.n, "Rank n")->required()->check(CLI::NonNegativeNumber);
  orbits->add_option("--orbit", o.orbits, "Orbit as E:F1,F2,... or one:R (repeatable)")->required();
  orbits->add_option("--char", o.char_p, "Field characteristic (0 or a prime)");
  auto* blocks = app.add_subcommand("blocks", "Residue blocks, with Morita reductions in the finite regime");
  add_params(blocks);
  auto* jantzen = app.add_subcommand("jantzen", "Jantzen coefficient tables");
  add_params(jantzen);
  add_modular(jantzen);
  auto* decompose = app.add_subcommand("decompose", "Decomposition and Cartan matrices (finite regime)");
  add_params(decompose);
  add_modular(decompose);
  auto* dims = app.add_subcommand("dims", "Hecke and Schur algebra dimensions");
  dims->add_option("--n", o.n, "Rank n")->required()->check(CLI::NonNegativeNumber);
  dims->add_option("--r", o.r, "Number of parameters r")->required()->check(CLI::PositiveNumber);
  dims->add_option("--m", o.m, "Length bounds m_1..m_r")->delimiter(',');
  auto* grading = app.add_subcommand("grading", "Graded dimension check for a level composition");
  grading->add_option("--n", o.n, "Rank n")->required()->check(CLI::NonNegativeNumber);
  grading->add_option("--m", o.m, "Length bounds m_1..m_r")->delimiter(',');
  grading->add_option("--p", o.levels, "Level sizes r_1..r_g")->delimiter(',')->required();
  grading->add_option("--epsilon", o.eps, "Weight vector n_1..n_g (default: all)")->delimiter(',');
  auto* quiver = app.add_subcommand("quiver", "The algebra A_m");
  quiver->add_option("--m", o.quiver_m, "Number of vertices")->required()->check(CLI::PositiveNumber);
  auto* examples = app.add_subcommand("paper-examples", "Recompute the worked examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    Session s;
    std::string dir = o.cache_dir;
    if (dir.empty())
      if (const char* env = std::getenv("AKSCH_CACHE_DIR")) dir = env;
    if (!o.no_cache && !dir.empty()) s.check(aksch_context_set_cache_dir(s.ctx(), dir.c_str()));

    aksch_result* res = nullptr;
    json out;
    auto content_ptr = [&]() -> const long* { return o.content.empty() ? nullptr : o.content.data(); };

    if (*classify) {
      auto* p = s.params(o.e, o.f, o.char_p, o.q_one, o.r);
      out = s.take(aksch_classify(s.ctx(), o.n, p, &res), res);
    } else if (*orbits) {
      std::vector<const aksch_params*> ps;
      for (const auto& spec : o.orbits) ps.push_back(parse_orbit(s, spec, o.char_p));
      out = s.take(aksch_classify_orbits(s.ctx(), o.n, ps.data(), ps.size(), &res), res);
    } else if (*blocks) {
      auto* p = s.params(o.e, o.f, o.char_p, o.q_one, o.r);
      out = s.take(aksch_blocks(s.ctx(), o.n, p, &res), res);
    } else if (*jantzen || *decompose) {
      if (o.q_one) throw UsageError("Jantzen coefficients need q != 1");
      auto* p = s.params(o.e, o.f, o.char_p, false, o.r);
      auto* mod = s.modular(o, o.f.size());
      const auto op = *jantzen ? aksch_jantzen : aksch_decompose;
      out = s.take(op(s.ctx(), o.n, p, mod, content_ptr(), o.content.size(), &res), res);
    } else if (*dims) {
      const int* m = o.m.empty() ? nullptr : o.m.data();
      out = s.take(aksch_dims(s.ctx(), o.n, *o.r, m, o.m.size(), &res), res);
    } else if (*grading) {
      const int* m = o.m.empty() ? nullptr : o.m.data();
      const int* eps = nullptr;
      if (!o.eps.empty()) {
        if (o.eps.size() != o.levels.size()) throw UsageError("--epsilon needs one entry per level");
        eps = o.eps.data();
      }
      out = s.take(aksch_grading(s.ctx(), o.n, m, o.m.size(), o.levels.data(), o.levels.size(), eps, &res), res);
    } else if (*quiver) {
      out = s.take(aksch_quiver(s.ctx(), o.quiver_m, &res), res);
    } else if (*examples) {
      out = s.take(aksch_worked_examples(s.ctx(), &res), res);
      print(out, o.format);
      return out["summary"]["fail"].get<int>() == 0 ? kExitOk : kExitFailure;
    }
    print(out, o.format);
    return kExitOk;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const LibraryError& e) {
    switch (e.status) {
      case AKSCH_INVALID_ARGUMENT:
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
      case AKSCH_REGIME:
      case AKSCH_DEGENERATE: {
        const json err = {{"error", {{"status", aksch_status_string(e.status)}, {"message", e.what()}}}};
        std::cout << err.dump(2) << '\n';
        return kExitRegime;
      }
      default:
        std::cerr << "error (" << aksch_status_string(e.status) << "): " << e.what() << '\n';
        return kExitFailure;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}
