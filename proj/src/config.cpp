#include "tpwave/config.hpp"

#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

#include <json.hpp>

#include "tpwave/errors.hpp"
#include "tpwave/halfspace.hpp"

namespace tpwave {

using json = nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::Config, "'" + path + "': " + what);
}

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }

// Object view that rejects keys outside the allowed set.
class Reader {
 public:
  Reader(const json& j, std::string path, std::initializer_list<const char*> allowed)
      : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) fail(path_.empty() ? "<root>" : path_, "expected an object");
    std::set<std::string> ok(allowed.begin(), allowed.end());
    for (auto it = j_.begin(); it != j_.end(); ++it)
      if (!ok.count(it.key())) fail(join(path_, it.key()), "unknown key");
  }

  bool has(const char* key) const { return j_.contains(key); }
  const json& raw(const char* key) const { return j_.at(key); }
  std::string path(const char* key) const { return join(path_, key); }

  void get(const char* key, double& out) const {
    if (!has(key)) return;
    const json& v = j_.at(key);
    if (!v.is_number()) fail(path(key), "expected a number");
    out = v.get<double>();
  }
  void get(const char* key, int& out) const {
    if (!has(key)) return;
    const json& v = j_.at(key);
    if (!v.is_number_integer()) fail(path(key), "expected an integer");
    out = v.get<int>();
  }
  void get(const char* key, std::uint64_t& out) const {
    if (!has(key)) return;
    const json& v = j_.at(key);
    if (!v.is_number_unsigned()) fail(path(key), "expected a non-negative integer");
    out = v.get<std::uint64_t>();
  }
  void get(const char* key, bool& out) const {
    if (!has(key)) return;
    const json& v = j_.at(key);
    if (!v.is_boolean()) fail(path(key), "expected true or false");
    out = v.get<bool>();
  }
  void get(const char* key, std::string& out) const {
    if (!has(key)) return;
    const json& v = j_.at(key);
    if (!v.is_string()) fail(path(key), "expected a string");
    out = v.get<std::string>();
  }
  void get(const char* key, std::vector<double>& out) const {
    if (!has(key)) return;
    const json& v = j_.at(key);
    if (!v.is_array()) fail(path(key), "expected an array of numbers");
    out.clear();
    for (const auto& e : v) {
      if (!e.is_number()) fail(path(key), "expected an array of numbers");
      out.push_back(e.get<double>());
    }
  }

 private:
  const json& j_;
  std::string path_;
};

template <class E>
E parse_enum(const Reader& r, const char* key, E fallback, std::initializer_list<std::pair<const char*, E>> names) {
  std::string s;
  r.get(key, s);
  if (s.empty() && !r.has(key)) return fallback;
  for (const auto& [n, e] : names)
    if (s == n) return e;
  std::string opts;
  for (const auto& [n, e] : names) opts += std::string(opts.empty() ? "" : ", ") + n;
  fail(r.path(key), "expected one of " + opts);
}

template <class E>
const char* enum_name(E e, std::initializer_list<std::pair<const char*, E>> names) {
  for (const auto& [n, v] : names)
    if (v == e) return n;
  return "?";
}

const std::initializer_list<std::pair<const char*, Domain>> kDomains = {{"box", Domain::PeriodicBox},
                                                                         {"half_space", Domain::HalfSpace}};
const std::initializer_list<std::pair<const char*, BoundaryKind>> kBcs = {
    {"none", BoundaryKind::None}, {"dirichlet", BoundaryKind::Dirichlet}, {"neumann", BoundaryKind::Neumann}};
const std::initializer_list<std::pair<const char*, Dealias>> kDealias = {{"two_thirds", Dealias::TwoThirds},
                                                                          {"none", Dealias::None}};
const std::initializer_list<std::pair<const char*, Factor::Kind>> kFactors = {
    {"const", Factor::Kind::Const},
    {"cos", Factor::Kind::Cos},
    {"gauss", Factor::Kind::Gauss},
    {"gauss_cos", Factor::Kind::GaussCos}};

Factor parse_factor(const json& j, const std::string& path) {
  Reader r(j, path, {"kind", "mode", "phase", "center", "sigma"});
  Factor f;
  f.kind = parse_enum(r, "kind", Factor::Kind::Const, kFactors);
  r.get("mode", f.mode);
  r.get("phase", f.phase);
  r.get("center", f.center);
  r.get("sigma", f.sigma);
  if (!(f.sigma > 0.0)) fail(join(path, "sigma"), "must be > 0");
  return f;
}

json factor_json(const Factor& f) {
  return {{"kind", enum_name(f.kind, kFactors)},
          {"mode", f.mode},
          {"phase", f.phase},
          {"center", f.center},
          {"sigma", f.sigma}};
}

ForcingSpec parse_forcing(const json& j, const std::string& path) {
  Reader r(j, path, {"terms", "random"});
  ForcingSpec fs;
  if (r.has("terms")) {
    const json& terms = r.raw("terms");
    if (!terms.is_array()) fail(r.path("terms"), "expected an array");
    for (std::size_t n = 0; n < terms.size(); ++n) {
      const std::string tp = r.path("terms") + "[" + std::to_string(n) + "]";
      Reader t(terms[n], tp, {"amplitude", "t", "x1", "x2", "x3"});
      SeparableTerm term;
      t.get("amplitude", term.amplitude);
      if (t.has("t")) term.t = parse_factor(t.raw("t"), t.path("t"));
      if (t.has("x1")) term.x1 = parse_factor(t.raw("x1"), t.path("x1"));
      if (t.has("x2")) term.x2 = parse_factor(t.raw("x2"), t.path("x2"));
      if (t.has("x3")) term.x3 = parse_factor(t.raw("x3"), t.path("x3"));
      fs.closed_form.terms.push_back(term);
    }
  }
  if (r.has("random")) {
    Reader c(r.raw("random"), r.path("random"),
             {"seed", "kt_max", "kx_max", "time_mean_free", "space_mean_free", "amplitude"});
    CorpusSpec cs;
    c.get("seed", cs.seed);
    c.get("kt_max", cs.kt_max);
    c.get("kx_max", cs.kx_max);
    c.get("time_mean_free", cs.time_mean_free);
    c.get("space_mean_free", cs.space_mean_free);
    c.get("amplitude", cs.amplitude);
    fs.random = cs;
  }
  return fs;
}

json forcing_json(const ForcingSpec& fs) {
  json terms = json::array();
  for (const auto& t : fs.closed_form.terms) {
    terms.push_back({{"amplitude", t.amplitude},
                     {"t", factor_json(t.t)},
                     {"x1", factor_json(t.x1)},
                     {"x2", factor_json(t.x2)},
                     {"x3", factor_json(t.x3)}});
  }
  json j = {{"terms", terms}};
  if (fs.random) {
    const auto& c = *fs.random;
    j["random"] = {{"seed", c.seed},
                   {"kt_max", c.kt_max},
                   {"kx_max", c.kx_max},
                   {"time_mean_free", c.time_mean_free},
                   {"space_mean_free", c.space_mean_free},
                   {"amplitude", c.amplitude}};
  }
  return j;
}

}  // namespace

Field ForcingSpec::build(const GridSpec& grid) const {
  Field f = closed_form.sample(grid);
  if (random) f = f + random_field(grid, *random);
  return f;
}

void RunConfig::validate() const {
  try {
    grid.validate();
    model().validate();
    solver.fixed_point.validate();
  } catch (const Error& e) {
    throw Error(ErrorKind::Config, e.what());
  }
  if (problem.domain == Domain::PeriodicBox && (problem.bc != BoundaryKind::None || problem.boundary)) {
    throw Error(ErrorKind::Config, "'problem.bc': the periodic box takes no boundary condition");
  }
  if (problem.domain == Domain::HalfSpace && problem.bc == BoundaryKind::None) {
    throw Error(ErrorKind::Config, "'problem.bc': the half-space needs dirichlet or neumann");
  }
}

ProblemSpec RunConfig::build_problem() const {
  validate();
  ProblemSpec spec;
  spec.domain = problem.domain;
  spec.bc = problem.bc;
  spec.params = model();
  spec.grid = grid;
  spec.forcing = problem.forcing.build(grid);
  if (problem.boundary) {
    const auto& b = *problem.boundary;
    spec.boundary_data = separable_boundary_data(grid, b.amplitude, b.time_mode, b.m1, b.m2);
  }
  return spec;
}

RunConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Config, std::string("malformed JSON: ") + e.what());
  }
  Reader root(j, "", {"grid", "model", "problem", "solver", "output", "sweep"});
  RunConfig cfg;
  if (root.has("grid")) {
    Reader g(root.raw("grid"), "grid", {"n_t", "n_x", "box_len", "period"});
    g.get("n_t", cfg.grid.n_t);
    g.get("n_x", cfg.grid.n_x);
    g.get("box_len", cfg.grid.box_len);
    g.get("period", cfg.grid.period);
  }
  if (root.has("model")) {
    Reader m(root.raw("model"), "model", {"lambda", "gamma"});
    m.get("lambda", cfg.lambda);
    m.get("gamma", cfg.gamma);
  }
  if (root.has("problem")) {
    Reader p(root.raw("problem"), "problem", {"domain", "bc", "forcing", "boundary"});
    cfg.problem.domain = parse_enum(p, "domain", Domain::PeriodicBox, kDomains);
    cfg.problem.bc = parse_enum(p, "bc", BoundaryKind::None, kBcs);
    if (p.has("forcing")) cfg.problem.forcing = parse_forcing(p.raw("forcing"), p.path("forcing"));
    if (p.has("boundary")) {
      Reader b(p.raw("boundary"), p.path("boundary"), {"amplitude", "time_mode", "m1", "m2"});
      BoundarySpec bs;
      b.get("amplitude", bs.amplitude);
      b.get("time_mode", bs.time_mode);
      b.get("m1", bs.m1);
      b.get("m2", bs.m2);
      cfg.problem.boundary = bs;
    }
  }
  if (root.has("solver")) {
    Reader s(root.raw("solver"), "solver",
             {"rho", "tol", "max_iter", "p", "dealias", "auto_scale", "strict_p", "drop_zero_mode"});
    auto& fp = cfg.solver.fixed_point;
    s.get("rho", fp.rho);
    s.get("tol", fp.tol);
    s.get("max_iter", fp.max_iter);
    s.get("p", fp.p);
    fp.dealias = parse_enum(s, "dealias", Dealias::TwoThirds, kDealias);
    s.get("auto_scale", fp.auto_scale);
    s.get("strict_p", fp.strict_p);
    s.get("drop_zero_mode", cfg.solver.drop_zero_mode);
  }
  if (root.has("output")) {
    Reader o(root.raw("output"), "output", {"dir", "write_fields", "write_tables"});
    o.get("dir", cfg.output.dir);
    o.get("write_fields", cfg.output.write_fields);
    o.get("write_tables", cfg.output.write_tables);
  }
  if (root.has("sweep")) {
    Reader w(root.raw("sweep"), "sweep", {"lambda", "period", "amplitude"});
    SweepConfig sw;
    w.get("lambda", sw.lambda);
    w.get("period", sw.period);
    w.get("amplitude", sw.amplitude);
    cfg.sweep = sw;
  }
  cfg.validate();
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open config " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string to_json(const RunConfig& cfg) {
  const auto& fp = cfg.solver.fixed_point;
  json j = {
      {"grid", {{"n_t", cfg.grid.n_t}, {"n_x", cfg.grid.n_x}, {"box_len", cfg.grid.box_len}, {"period", cfg.grid.period}}},
      {"model", {{"lambda", cfg.lambda}, {"gamma", cfg.gamma}}},
      {"problem",
       {{"domain", enum_name(cfg.problem.domain, kDomains)},
        {"bc", enum_name(cfg.problem.bc, kBcs)},
        {"forcing", forcing_json(cfg.problem.forcing)}}},
      {"solver",
       {{"rho", fp.rho},
        {"tol", fp.tol},
        {"max_iter", fp.max_iter},
        {"p", fp.p},
        {"dealias", enum_name(fp.dealias, kDealias)},
        {"auto_scale", fp.auto_scale},
        {"strict_p", fp.strict_p},
        {"drop_zero_mode", cfg.solver.drop_zero_mode}}},
      {"output",
       {{"dir", cfg.output.dir}, {"write_fields", cfg.output.write_fields}, {"write_tables", cfg.output.write_tables}}},
  };
  if (cfg.problem.boundary) {
    const auto& b = *cfg.problem.boundary;
    j["problem"]["boundary"] = {{"amplitude", b.amplitude}, {"time_mode", b.time_mode}, {"m1", b.m1}, {"m2", b.m2}};
  }
  if (cfg.sweep) {
    j["sweep"] = {{"lambda", cfg.sweep->lambda}, {"period", cfg.sweep->period}, {"amplitude", cfg.sweep->amplitude}};
  }
  return j.dump(2);
}

}  // namespace tpwave
