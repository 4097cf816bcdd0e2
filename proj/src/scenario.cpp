#include "l0kit/scenario.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>

#include "l0kit/oracle.hpp"

namespace l0kit {

Exit exit_for(Errc code) noexcept {
  switch (code) {
    case Errc::Unsupported: return Exit::Unsupported;
    case Errc::NoConvergence:
    case Errc::NotSelfMap:
    case Errc::HypothesisViolation:
    case Errc::CertificateViolation:
    case Errc::OutsideEnlargement:
    case Errc::PrefixExhausted: return Exit::Failed;
    default: return Exit::BadInput;
  }
}

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::BadValue, "scenario: " + what); }

void require(bool ok, const std::string& what) {
  if (!ok) bad(what);
}

const Json& field(const Json& j, const char* key) {
  require(j.is_object() && j.contains(key), std::string("missing field '") + key + "'");
  return j.at(key);
}

double number(const Json& j, const std::string& what) {
  require(j.is_number(), what + " must be a number");
  return j.get<double>();
}

// signed integer literals count as well, as long as they are nonnegative
bool is_count(const Json& j) {
  return j.is_number_unsigned() || (j.is_number_integer() && j.get<std::int64_t>() >= 0);
}

bool is_flat(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& v : j)
    if (!v.is_number()) return false;
  return true;
}

Vec vector_of(const Json& j, std::size_t dim, const std::string& what) {
  require(is_flat(j) && j.size() == dim, what + " must be a list of " + std::to_string(dim) + " numbers");
  return j.get<Vec>();
}

// A flat list is shared by every atom; a list of lists gives one per atom.
RandomPoint point_of(const Json& j, const SpacePtr& space, std::size_t dim, const std::string& what) {
  if (is_flat(j)) return RandomPoint::constant(space, vector_of(j, dim, what));
  require(j.is_array() && j.size() == space->size(), what + " needs one vector per atom");
  std::vector<Vec> coords;
  for (const auto& v : j) coords.push_back(vector_of(v, dim, what));
  return RandomPoint(space, dim, std::move(coords));
}

RandomScalar scalar_of(const Json& j, const SpacePtr& space, const std::string& what) {
  if (j.is_number()) return RandomScalar::constant(space, j.get<double>());
  require(is_flat(j) && j.size() == space->size(), what + " must be a number or one number per atom");
  return RandomScalar(space, j.get<std::vector<double>>());
}

std::vector<Vec> vertex_list(const Json& j, std::size_t dim) {
  require(j.is_array() && !j.empty(), "vertices must be a nonempty list");
  std::vector<Vec> out;
  for (const auto& v : j) out.push_back(vector_of(v, dim, "vertex"));
  return out;
}

SetSpec parse_set(const Json& j, const SpacePtr& space, std::size_t dim) {
  const std::string kind = field(j, "kind").get<std::string>();
  if (kind == "polytope") {
    if (j.contains("per_atom_vertices")) {
      const Json& per = j.at("per_atom_vertices");
      require(per.is_array() && per.size() == space->size(), "per_atom_vertices needs one list per atom");
      std::vector<std::vector<Vec>> verts;
      for (const auto& v : per) verts.push_back(vertex_list(v, dim));
      return AtomwisePolytope(space, dim, std::move(verts));
    }
    return AtomwisePolytope::uniform(space, vertex_list(field(j, "vertices"), dim));
  }
  if (kind == "sigma_hull") {
    const Json& gens = field(j, "generators");
    require(gens.is_array() && !gens.empty(), "generators must be a nonempty list");
    std::vector<RandomPoint> pts;
    for (const auto& g : gens) pts.push_back(point_of(g, space, dim, "generator"));
    return FiniteSigmaHull(std::move(pts));
  }
  if (kind == "ball")
    return EpsilonBall(RandomBall(point_of(field(j, "center"), space, dim, "center"),
                                  scalar_of(field(j, "radius"), space, "radius")));
  bad("unknown set kind '" + kind + "'");
}

std::vector<AtomMap> parse_maps(const Json& j, const SpacePtr& space, std::size_t dim) {
  if (j.is_object() && j.contains("per_atom")) {
    const Json& per = j.at("per_atom");
    require(per.is_array() && per.size() == space->size(), "per_atom maps need one entry per atom");
    std::vector<AtomMap> out;
    for (const auto& m : per) out.push_back(make_family_map(m, dim));
    return out;
  }
  return std::vector<AtomMap>(space->size(), make_family_map(j, dim));
}

std::vector<RandomScalar> parse_schedule(const Json& j, const SpacePtr& space) {
  if (j.is_object() && j.contains("harmonic")) {
    const Json& k = j.at("harmonic");
    require(is_count(k) && k.get<std::size_t>() > 0, "harmonic schedule length must be positive");
    return harmonic_schedule(space, k.get<std::size_t>());
  }
  if (j.is_object() && j.contains("geometric")) {
    const Json& g = j.at("geometric");
    const Json& count = field(g, "count");
    require(is_count(count) && count.get<std::size_t>() > 0, "geometric count must be positive");
    return geometric_schedule(space, number(field(g, "start"), "start"), number(field(g, "ratio"), "ratio"),
                              count.get<std::size_t>());
  }
  require(j.is_array() && !j.empty(), "eps_schedule must be {harmonic}, {geometric} or a nonempty list");
  std::vector<RandomScalar> out;
  for (const auto& e : j) out.push_back(scalar_of(e, space, "schedule entry"));
  return out;
}

void require_positive_eps(const RandomScalar& e) {
  std::vector<std::size_t> bad_atoms;
  for (std::size_t a = 0; a < e.size(); ++a)
    if (!(e[a] > 0.0)) bad_atoms.push_back(a);
  if (!bad_atoms.empty()) throw Error(Errc::BadEpsilon, "epsilon must be positive at every atom", bad_atoms);
}

}  // namespace

AtomMap make_family_map(const Json& params, std::size_t dim) {
  require(params.is_object(), "map must be an object");
  const std::string family = field(params, "family").get<std::string>();
  if (family == "identity") return [](VecView x) { return Vec(x.begin(), x.end()); };
  if (family == "constant") {
    Vec c = vector_of(field(params, "value"), dim, "constant value");
    return [c](VecView) { return c; };
  }
  if (family == "affine") {
    const Json& A = field(params, "A");
    require(A.is_array() && A.size() == dim, "affine A must have dim rows");
    std::vector<Vec> rows;
    for (const auto& r : A) rows.push_back(vector_of(r, dim, "affine row"));
    Vec b = params.contains("b") ? vector_of(params.at("b"), dim, "affine b") : Vec(dim, 0.0);
    return [rows, b](VecView x) {
      Vec y = b;
      for (std::size_t i = 0; i < y.size(); ++i) y[i] += classical::dot(rows[i], x);
      return y;
    };
  }
  if (family == "damped_rotation") {
    const double angle = number(field(params, "angle"), "angle");
    const double scale = number(field(params, "scale"), "scale");
    require(scale >= 0.0, "scale must be nonnegative");
    Vec c = params.contains("center") ? vector_of(params.at("center"), dim, "center") : Vec(dim, 0.0);
    const double cs = scale * std::cos(angle), sn = scale * std::sin(angle);
    return [c, cs, sn, scale](VecView x) {
      Vec y(x.size());
      for (std::size_t i = 0; i < y.size(); ++i) y[i] = c[i] + scale * (x[i] - c[i]);
      if (y.size() >= 2) {
        const double u = x[0] - c[0], v = x[1] - c[1];
        y[0] = c[0] + cs * u - sn * v;
        y[1] = c[1] + sn * u + cs * v;
      }
      return y;
    };
  }
  if (family == "polynomial") {
    // coefficients in increasing degree, shared or one list per coordinate
    const Json& cj = field(params, "coeffs");
    std::vector<Vec> coeffs;
    if (is_flat(cj)) {
      require(!cj.empty(), "polynomial needs coefficients");
      coeffs.assign(dim, cj.get<Vec>());
    } else {
      require(cj.is_array() && cj.size() == dim, "polynomial coeffs must be one list or one list per coordinate");
      for (const auto& c : cj) {
        require(is_flat(c) && !c.empty(), "polynomial needs coefficients");
        coeffs.push_back(c.get<Vec>());
      }
    }
    return [coeffs](VecView x) {
      Vec y(x.size());
      for (std::size_t i = 0; i < y.size(); ++i) {
        double acc = 0.0;
        for (auto it = coeffs[i].rbegin(); it != coeffs[i].rend(); ++it) acc = acc * x[i] + *it;
        y[i] = acc;
      }
      return y;
    };
  }
  bad("unknown map family '" + family + "'");
}

namespace {

Scenario parse_document(const Json& doc) {
  require(doc.is_object(), "top level must be an object");
  const Json& version = field(doc, "schema_version");
  require(version.is_number_integer() && version.get<int>() == kSchemaVersion, "schema_version must be 1");

  Scenario sc;
  sc.name = doc.value("name", std::string("unnamed"));
  const Json& weights = field(field(doc, "space"), "weights");
  require(is_flat(weights), "space.weights must be a list of numbers");
  const auto w = weights.get<std::vector<double>>();
  sc.space = make_space(w);
  const Json& dim = field(doc, "dim");
  require(is_count(dim) && dim.get<std::size_t>() > 0, "dim must be a positive integer");
  sc.dim = dim.get<std::size_t>();
  const std::size_t d = sc.dim;

  if (doc.contains("set")) sc.set = parse_set(doc.at("set"), sc.space, d);
  sc.solver = field(doc, "solver").get<std::string>();
  const bool known = sc.solver == "contraction" || sc.solver == "schauder_approx" || sc.solver == "schauder" ||
                     sc.solver == "krasnoselskii" || sc.solver == "random_operator" || sc.solver == "net";
  require(known, "unknown solver '" + sc.solver + "'");

  if (doc.contains("map")) sc.T = parse_maps(doc.at("map"), sc.space, d);
  if (doc.contains("contraction")) {
    const Json& c = doc.at("contraction");
    sc.S = parse_maps(field(c, "map"), sc.space, d);
    sc.alpha = scalar_of(field(c, "alpha"), sc.space, "alpha");
  }
  if (doc.contains("shift")) sc.shift = point_of(doc.at("shift"), sc.space, d, "shift");
  if (doc.contains("x0")) sc.x0 = point_of(doc.at("x0"), sc.space, d, "x0");

  if (doc.contains("eps_schedule"))
    sc.schedule = parse_schedule(doc.at("eps_schedule"), sc.space);
  else if (doc.contains("eps"))
    sc.schedule = {scalar_of(doc.at("eps"), sc.space, "eps")};
  else
    sc.schedule = harmonic_schedule(sc.space);
  for (const auto& e : sc.schedule) require_positive_eps(e);
  if (doc.contains("net") && doc.at("net").contains("eps"))
    sc.net_eps = scalar_of(doc.at("net").at("eps"), sc.space, "net.eps");
  else if (doc.contains("eps"))
    sc.net_eps = scalar_of(doc.at("eps"), sc.space, "eps");

  sc.tol = doc.contains("tol") ? scalar_of(doc.at("tol"), sc.space, "tol") : RandomScalar::constant(sc.space, 1e-9);
  require_positive_eps(*sc.tol);
  if (doc.contains("seed")) {
    require(is_count(doc.at("seed")), "seed must be a nonnegative integer");
    sc.seed = doc.at("seed").get<std::uint64_t>();
  }
  if (doc.contains("max_iter")) {
    require(is_count(doc.at("max_iter")), "max_iter must be a nonnegative integer");
    sc.max_iter = doc.at("max_iter").get<std::size_t>();
  }

  if (sc.solver == "contraction") require(!sc.S.empty(), "contraction solver needs a 'contraction' block");
  if (sc.solver == "krasnoselskii") require(!sc.S.empty() && !sc.T.empty(), "splitting needs 'contraction' and 'map'");
  if (sc.solver == "schauder_approx" || sc.solver == "schauder" || sc.solver == "random_operator")
    require(!sc.T.empty(), "solver needs a 'map'");
  if (sc.solver != "contraction") require(sc.set.has_value(), "solver needs a 'set'");
  return sc;
}

}  // namespace

Scenario parse_scenario(const Json& doc) {
  try {
    return parse_document(doc);
  } catch (const Json::exception& e) {
    throw Error(Errc::BadValue, std::string("scenario: ") + e.what());
  }
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::BadValue, "scenario: cannot open '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(Errc::BadValue, std::string("scenario: ") + e.what());
  }
  return parse_scenario(doc);
}

// ---------------------------------------------------------------- reports

namespace {

Json points_json(const RandomPoint& x) { return x.coords(); }

Json stage_json(const StageRecord& s) {
  Json j{{"eps_max", s.eps_max},         {"eps_min", s.eps_min},       {"evaluations", s.evaluations},
         {"residual_max", s.residual_max}, {"net_kind", s.net_kind}, {"net_pieces", s.net_pieces},
         {"net_points", s.net_points}};
  j["step"] = s.step ? Json(*s.step) : Json(nullptr);
  return j;
}

Json header(const Scenario& sc, const char* command) {
  return Json{{"schema_version", kSchemaVersion}, {"command", command}, {"scenario", sc.name},
              {"solver", sc.solver},              {"seed", sc.seed}};
}

StableMapping mapping(const Scenario& sc, const std::vector<AtomMap>& maps) {
  return StableMapping(sc.space, sc.dim, maps);
}

const AtomwisePolytope& polytope_of(const Scenario& sc) {
  const auto* poly = std::get_if<AtomwisePolytope>(&*sc.set);
  if (!poly) throw Error(Errc::Unsupported, "fixed-point solvers need a polytope set");
  return *poly;
}

FixedPointReport solve(const Scenario& sc) {
  SchauderOptions opts;
  opts.seed = sc.seed;
  if (sc.solver == "contraction") {
    ContractionSpec spec(mapping(sc, sc.S), *sc.alpha);
    const RandomPoint zero = RandomPoint::zero(sc.space, sc.dim);
    return solve_contraction(spec, sc.shift.value_or(zero), sc.x0.value_or(zero), sc.tolerance(), sc.max_iter);
  }
  if (sc.solver == "schauder_approx") return solve_schauder_approx(mapping(sc, sc.T), *sc.set, sc.schedule.front(), opts);
  if (sc.solver == "schauder") return solve_schauder(mapping(sc, sc.T), *sc.set, sc.schedule, sc.tolerance().min(), opts);
  if (sc.solver == "krasnoselskii") {
    SplittingOptions so;
    so.schauder = opts;
    return solve_krasnoselskii(ContractionSpec(mapping(sc, sc.S), *sc.alpha), mapping(sc, sc.T), *sc.set,
                               sc.schedule, sc.tolerance().min(), so);
  }
  if (sc.solver == "random_operator") {
    const AtomwisePolytope& poly = polytope_of(sc);
    for (const auto& v : poly.all_vertices())
      if (v != poly.vertices(0)) throw Error(Errc::BadValue, "random operator needs one shared vertex set");
    return solve_random_operator(sc.space, sc.T, poly.vertices(0), sc.schedule, sc.tolerance().min(), opts);
  }
  throw Error(Errc::BadValue, "scenario: solver '" + sc.solver + "' does not produce a fixed point");
}

struct ModuleRun {
  Json report;
  Exit exit = Exit::Ok;
  std::optional<FixedPointReport> result;
  std::optional<Errc> error;
};

ModuleRun run_module(const Scenario& sc) {
  ModuleRun run;
  try {
    run.result = solve(sc);
    run.report = report_json(*run.result);
    const bool ok = run.result->bounds_hold();
    run.report["bounds_hold"] = ok;
    run.report["status"] = ok ? "ok" : "bounds_violated";
    run.exit = ok ? Exit::Ok : Exit::Failed;
  } catch (const NoConvergenceError& e) {
    run.report = report_json(e.partial());
    run.report["bounds_hold"] = false;
    run.report["status"] = "error";
    run.report["error"] = error_json(e);
    run.exit = Exit::Failed;
    run.error = e.code();
  } catch (const Error& e) {
    run.report = Json{{"status", "error"}, {"bounds_hold", false}, {"error", error_json(e)}};
    run.exit = exit_for(e.code());
    run.error = e.code();
  }
  return run;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<double> column(const std::vector<RandomScalar>& schedule, std::size_t atom) {
  std::vector<double> out;
  for (const auto& e : schedule) out.push_back(e[atom]);
  return out;
}

}  // namespace

Json report_json(const FixedPointReport& r) {
  Json j{{"point", points_json(r.point)},   {"residual", r.residual.values()}, {"bound", r.bound.values()},
         {"strict", r.strict},              {"iterations", r.iterations}};
  j["stages"] = Json::array();
  for (const auto& s : r.stages) j["stages"].push_back(stage_json(s));
  if (r.certificate)
    j["certificate"] = Json{{"epsilon", r.certificate->epsilon.values()},
                            {"partition", r.certificate->partition.labels()},
                            {"set_sizes", [&] {
                               std::vector<std::size_t> sizes;
                               for (const auto& s : r.certificate->finite_sets) sizes.push_back(s.size());
                               return sizes;
                             }()}};
  if (r.oracle_gap) j["oracle_gap"] = r.oracle_gap->values();
  return j;
}

Json error_json(const Error& e) {
  return Json{{"code", std::string(errc_name(e.code()))}, {"message", e.message()}, {"atoms", e.atoms()},
              {"residual", e.residual()}};
}

Outcome run_scenario(const Scenario& sc) {
  if (sc.solver == "net") return emit_net(sc, std::nullopt, 10000);
  const auto t0 = std::chrono::steady_clock::now();
  Json rep = header(sc, "run");
  ModuleRun run = run_module(sc);
  rep.update(run.report);
  rep["exit_code"] = static_cast<int>(run.exit);
  rep["timing"] = Json{{"seconds", seconds_since(t0)}};
  return {std::move(rep), run.exit};
}

Outcome compare_with_oracle(const Scenario& sc) {
  const auto t0 = std::chrono::steady_clock::now();
  Json rep = header(sc, "oracle");
  if (sc.solver == "net") {
    const Error err(Errc::BadValue, "scenario: oracle comparison needs a fixed-point solver");
    rep["status"] = "error";
    rep["error"] = error_json(err);
    rep["exit_code"] = static_cast<int>(Exit::BadInput);
    return {std::move(rep), Exit::BadInput};
  }
  ModuleRun run = run_module(sc);

  SchauderOptions opts;
  opts.seed = sc.seed;
  SplittingOptions so;
  so.schauder = opts;
  const std::size_t n = sc.space->size();
  const bool contraction = sc.solver == "contraction";
  const Vec zero(sc.dim, 0.0);

  Json atoms = Json::array();
  bool oracle_ok = true;
  std::vector<std::optional<Vec>> oracle_points(n);
  for (std::size_t a = 0; a < n; ++a) {
    Json entry;
    try {
      oracle::AtomAnswer ans;
      double bound = 0.0;
      bool strict = true;
      if (contraction) {
        ans = oracle::contraction_atom(sc.S[a], (*sc.alpha)[a], sc.shift ? (*sc.shift)[a] : zero,
                                       sc.x0 ? (*sc.x0)[a] : zero, sc.tolerance()[a], sc.max_iter);
        bound = sc.tolerance()[a];
        strict = false;
      } else {
        const std::vector<Vec>& verts = polytope_of(sc).vertices(a);
        if (sc.solver == "schauder_approx") {
          ans = oracle::approx_atom(sc.T[a], verts, sc.schedule.front()[a], opts);
        } else if (sc.solver == "krasnoselskii") {
          ans = oracle::krasnoselskii_atom(sc.S[a], (*sc.alpha)[a], sc.T[a], verts, column(sc.schedule, a),
                                           sc.tolerance().min(), so);
        } else {
          ans = oracle::schauder_atom(sc.T[a], verts, column(sc.schedule, a), sc.tolerance().min(), opts);
        }
        bound = sc.schedule[ans.stage][a];
      }
      const bool holds = strict ? ans.residual < bound : ans.residual <= bound;
      oracle_ok = oracle_ok && holds;
      oracle_points[a] = ans.point;
      entry = Json{{"point", ans.point}, {"residual", ans.residual}, {"bound", bound},
                   {"stage", ans.stage}, {"bound_holds", holds}};
    } catch (const Error& e) {
      oracle_ok = false;
      entry = Json{{"error", error_json(e)}};
    }
    atoms.push_back(std::move(entry));
  }

  Exit exit = run.exit;
  Json gap = nullptr;
  bool agree = true;
  if (run.result) {
    std::vector<double> g(n, 0.0);
    bool complete = true;
    for (std::size_t a = 0; a < n; ++a) {
      if (oracle_points[a])
        g[a] = classical::distance(run.result->point[a], *oracle_points[a]);
      else
        complete = false;
    }
    if (complete) {
      run.result->oracle_gap = RandomScalar(sc.space, g);
      run.report["oracle_gap"] = g;
      gap = g;
      if (contraction)
        for (std::size_t a = 0; a < n; ++a) agree = agree && g[a] <= 10.0 * sc.tolerance()[a];
    }
    if (!(run.exit == Exit::Ok && oracle_ok && agree && complete)) exit = Exit::Failed;
  }

  rep["module"] = run.report;
  rep["oracle"] = Json{{"atoms", atoms}, {"bounds_hold", oracle_ok}};
  rep["point_gap"] = gap;
  // fixed points are unique only for contractions; elsewhere only residual bounds are compared
  rep["points_compared"] = contraction;
  rep["agree"] = agree;
  rep["status"] = exit == Exit::Ok ? "ok" : "mismatch_or_error";
  rep["exit_code"] = static_cast<int>(exit);
  rep["timing"] = Json{{"seconds", seconds_since(t0)}};
  return {std::move(rep), exit};
}

Outcome emit_net(const Scenario& sc, std::optional<double> eps, std::size_t samples) {
  const auto t0 = std::chrono::steady_clock::now();
  Json rep = header(sc, "net");
  Exit exit = Exit::Ok;
  try {
    if (!sc.set) throw Error(Errc::BadValue, "scenario: net needs a 'set'");
    RandomScalar e = eps ? RandomScalar::constant(sc.space, *eps)
                         : sc.net_eps ? *sc.net_eps
                                      : throw Error(Errc::BadValue, "scenario: no epsilon for the net");
    const NetCertificate cert = build_net(*sc.set, e);
    const NetCheck check = verify_net(*sc.set, cert, samples, sc.seed);
    rep["set_kind"] = spec_kind(*sc.set);
    rep["epsilon"] = cert.epsilon.values();
    rep["partition"] = cert.partition.labels();
    Json sets = Json::array();
    for (const auto& s : cert.finite_sets) {
      Json pts = Json::array();
      for (const auto& p : s) pts.push_back(points_json(p));
      sets.push_back(std::move(pts));
    }
    rep["finite_sets"] = std::move(sets);
    rep["verify"] = Json{{"samples", check.samples},
                         {"violations", check.violations},
                         {"worst_margin", check.worst_margin},
                         {"violating_atoms", check.violating_atoms}};
    rep["status"] = check.passed() ? "ok" : "coverage_violated";
    exit = check.passed() ? Exit::Ok : Exit::Failed;
  } catch (const Error& err) {
    rep["status"] = "error";
    rep["error"] = error_json(err);
    exit = exit_for(err.code());
  }
  rep["exit_code"] = static_cast<int>(exit);
  rep["timing"] = Json{{"seconds", seconds_since(t0)}};
  return {std::move(rep), exit};
}

// ---------------------------------------------------------------- builtin suites

namespace {

Json scenario_base(const std::string& name, std::vector<double> weights, std::size_t dim) {
  return Json{{"schema_version", kSchemaVersion}, {"name", name}, {"space", {{"weights", weights}}}, {"dim", dim}};
}

const Json kSquare = Json::parse("[[0,0],[1,0],[1,1],[0,1]]");
const Json kTriangle = Json::parse("[[0,0],[1,0],[0,1]]");
const Json kCube = Json::parse("[[0,0,0],[1,0,0],[0,1,0],[1,1,0],[0,0,1],[1,0,1],[0,1,1],[1,1,1]]");
const Json kInterval = Json::parse("[[0],[1]]");
const Json kBox = Json::parse("[[-1,-1],[1,-1],[1,1],[-1,1]]");

Json polytope(const Json& vertices) { return Json{{"kind", "polytope"}, {"vertices", vertices}}; }

Json rotation(double angle, double scale, Json center) {
  return Json{{"family", "damped_rotation"}, {"angle", angle}, {"scale", scale}, {"center", std::move(center)}};
}

Json affine(Json A, Json b) { return Json{{"family", "affine"}, {"A", std::move(A)}, {"b", std::move(b)}}; }

Json constant(Json v) { return Json{{"family", "constant"}, {"value", std::move(v)}}; }

Json per_atom(std::vector<Json> maps) { return Json{{"per_atom", std::move(maps)}}; }

Json schauder(Json sc, Json set, Json map) {
  sc["set"] = std::move(set);
  sc["map"] = std::move(map);
  sc["solver"] = "schauder";
  sc["eps_schedule"] = Json{{"geometric", {{"start", 0.1}, {"ratio", 0.1}, {"count", 6}}}};
  sc["tol"] = 1e-6;
  sc["seed"] = 7;
  return sc;
}

}  // namespace

std::vector<Json> builtin_suite() {
  const double pi = std::acos(-1.0);
  const Json mid2 = {0.5, 0.5}, mid3 = {0.5, 0.5, 0.5};
  std::vector<Json> out;
  out.push_back(schauder(scenario_base("rotation_square_1atom", {1.0}, 2), polytope(kSquare), rotation(0.5, 0.7, mid2)));
  out.push_back(schauder(scenario_base("rotation_square_2atoms", {0.3, 0.7}, 2), polytope(kSquare),
                         per_atom({rotation(0.3, 0.6, mid2), rotation(1.2, 0.7, mid2)})));
  out.push_back(schauder(scenario_base("quarter_turn_square", {0.5, 0.5}, 2), polytope(kSquare),
                         per_atom({rotation(pi / 2, 1.0, mid2), rotation(-pi / 2, 1.0, mid2)})));
  out.push_back(schauder(scenario_base("rotation_cube_3atoms", {1, 2, 3}, 3), polytope(kCube),
                         per_atom({rotation(0.8, 0.5, mid3), rotation(-0.4, 0.5, mid3), rotation(2.0, 0.5, mid3)})));
  out.push_back(schauder(scenario_base("affine_square", {1.0}, 2), polytope(kSquare),
                         affine({{0.3, 0.2}, {0.1, 0.4}}, {0.2, 0.25})));
  out.push_back(schauder(scenario_base("affine_square_3atoms", {0.2, 0.3, 0.5}, 2), polytope(kSquare),
                         per_atom({affine({{0.5, -0.2}, {0.2, 0.5}}, {0.2, 0.3}),
                                   affine({{0.5, -0.2}, {0.2, 0.5}}, {0.5, 0.0}),
                                   affine({{0.5, -0.2}, {0.2, 0.5}}, {0.3, 0.15})})));
  out.push_back(schauder(scenario_base("affine_interval_4atoms", {1, 1, 1, 1}, 1), polytope(kInterval),
                         per_atom({affine({{-1.0}}, {1.0}), affine({{0.5}}, {0.25}), affine({{-0.9}}, {0.95}),
                                   affine({{0.99}}, {0.005})})));
  out.push_back(schauder(scenario_base("affine_triangle", {0.4, 0.6}, 2), polytope(kTriangle),
                         per_atom({affine({{0.5, 0.0}, {0.0, 0.5}}, {0.1, 0.1}),
                                   affine({{0.0, 0.5}, {0.5, 0.0}}, {0.2, 0.1})})));
  out.push_back(schauder(scenario_base("constant_square_2atoms", {0.5, 0.5}, 2), polytope(kSquare),
                         per_atom({constant({0.25, 0.75}), constant({0.6, 0.1})})));
  out.push_back(schauder(scenario_base("constant_cube_4atoms", {0.1, 0.2, 0.3, 0.4}, 3), polytope(kCube),
                         per_atom({constant({0.1, 0.2, 0.3}), constant({0.9, 0.9, 0.9}), constant({0.0, 0.0, 0.0}),
                                   constant({0.5, 1.0, 0.25})})));
  out.push_back(schauder(scenario_base("mixed_polytopes", {0.5, 0.5}, 2),
                         Json{{"kind", "polytope"}, {"per_atom_vertices", {kSquare, kTriangle}}},
                         per_atom({affine({{0.5, 0.0}, {0.0, 0.5}}, {0.25, 0.25}),
                                   affine({{0.5, 0.0}, {0.0, 0.5}}, {0.1, 0.1})})));
  out.push_back(schauder(scenario_base("mixed_families_4atoms", {0.25, 0.25, 0.25, 0.25}, 2), polytope(kSquare),
                         per_atom({Json{{"family", "identity"}}, constant({0.3, 0.3}), rotation(2.5, 0.4, mid2),
                                   affine({{0.0, 1.0}, {1.0, 0.0}}, {0.0, 0.0})})));
  return out;
}

std::vector<Json> builtin_contraction_suite() {
  auto make = [](Json sc, Json map, Json alpha, Json shift) {
    sc["solver"] = "contraction";
    sc["contraction"] = Json{{"map", std::move(map)}, {"alpha", std::move(alpha)}};
    sc["shift"] = std::move(shift);
    sc["tol"] = 1e-10;
    return sc;
  };
  std::vector<Json> out;
  out.push_back(make(scenario_base("contraction_scalar", {0.5, 0.5}, 1),
                     per_atom({affine({{0.5}}, {0.0}), affine({{0.9}}, {0.0})}), {0.5, 0.9}, {1.0}));
  out.push_back(make(scenario_base("contraction_plane", {1, 1, 1}, 2),
                     per_atom({affine({{0.2, 0.0}, {0.0, 0.2}}, {0, 0}), affine({{0.5, 0.0}, {0.0, 0.5}}, {0, 0}),
                               affine({{0.75, 0.0}, {0.0, 0.75}}, {0, 0})}),
                     {0.2, 0.5, 0.75}, {1.0, -2.0}));
  out.push_back(make(scenario_base("contraction_rotation", {1.0}, 2), rotation(1.0, 0.6, {0.0, 0.0}), 0.6,
                     {0.3, 0.4}));
  out.push_back(make(scenario_base("contraction_constant", {0.5, 0.5}, 2), constant({1.0, 2.0}), 0.0, {0.5, 0.5}));
  return out;
}

std::vector<Json> builtin_splitting_suite() {
  auto make = [](Json sc, Json set, Json S, Json alpha, Json T) {
    sc["solver"] = "krasnoselskii";
    sc["set"] = std::move(set);
    sc["contraction"] = Json{{"map", std::move(S)}, {"alpha", std::move(alpha)}};
    sc["map"] = std::move(T);
    sc["eps_schedule"] = Json{{"geometric", {{"start", 0.1}, {"ratio", 0.1}, {"count", 6}}}};
    sc["tol"] = 1e-6;
    sc["seed"] = 11;
    return sc;
  };
  auto diag = [](std::size_t d, double s) {
    Json A = Json::array();
    for (std::size_t i = 0; i < d; ++i) {
      Json row = Json::array();
      for (std::size_t k = 0; k < d; ++k) row.push_back(i == k ? s : 0.0);
      A.push_back(row);
    }
    return A;
  };
  std::vector<Json> out;
  out.push_back(make(scenario_base("split_scaled_identity", {1.0}, 2), polytope(kBox), affine(diag(2, 0.5), {0, 0}),
                     0.5, constant({0.25, -0.25})));
  out.push_back(make(scenario_base("split_rotation", {0.5, 0.5}, 2), polytope(kBox), rotation(0.7, 0.5, {0.0, 0.0}),
                     0.5, per_atom({affine(diag(2, 0.1), {0.1, -0.1}), affine(diag(2, -0.1), {-0.05, 0.1})})));
  out.push_back(make(scenario_base("split_alpha_09", {1.0}, 1), polytope(kInterval), affine({{0.9}}, {0.0}), 0.9,
                     affine({{-0.1}}, {0.1})));
  out.push_back(make(scenario_base("split_per_atom_alpha", {1, 1, 1}, 1), polytope(kInterval),
                     per_atom({affine({{0.2}}, {0.0}), affine({{0.6}}, {0.0}), affine({{0.9}}, {0.0})}),
                     {0.2, 0.6, 0.9},
                     per_atom({Json{{"family", "polynomial"}, {"coeffs", {0.0, 0.0, 0.8}}},
                               Json{{"family", "polynomial"}, {"coeffs", {0.0, 0.0, 0.4}}},
                               Json{{"family", "polynomial"}, {"coeffs", {0.0, 0.0, 0.1}}}})));
  out.push_back(make(scenario_base("split_cube", {0.5, 0.5}, 3), polytope(kCube), affine(diag(3, 0.3), {0, 0, 0}),
                     0.3, affine(diag(3, 0.35), {0.1, 0.2, 0.3})));
  out.push_back(make(scenario_base("split_T_zero", {1.0}, 2), polytope(kBox),
                     affine({{0.5 * std::cos(0.4), -0.5 * std::sin(0.4)}, {0.5 * std::sin(0.4), 0.5 * std::cos(0.4)}},
                            {0.2, 0.1}),
                     0.5, constant({0.0, 0.0})));
  return out;
}

}  // namespace l0kit
