#include "affschur/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "affschur/drinfeld.hpp"
#include "affschur/errors.hpp"
#include "affschur/schur_functor.hpp"
#include "affschur/suites.hpp"

namespace affschur {

namespace {

Param param_of(const RunConfig& c) {
  if (!c.v_rational) return Param::generic();
  mpq_class q;
  try {
    q = mpq_class(*c.v_rational);
  } catch (const std::invalid_argument&) {
    throw ParseError("--v-rational expects p/q, got '" + *c.v_rational + "'");
  }
  if (q.get_den() == 0) throw ParseError("--v-rational has a zero denominator");
  q.canonicalize();
  return Param::specialized(q);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Json parse_input(const std::string& text, const char* what) {
  std::string body = (!text.empty() && text[0] == '@') ? read_file(text.substr(1)) : text;
  try {
    return Json::parse(body);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string(what) + " is not valid JSON: " + e.what());
  }
}

std::vector<FieldElem> grid_of(const RunConfig& c, const Param& p) {
  if (!c.grid_file) return {};
  return grid_from_json(parse_input("@" + *c.grid_file, "grid"), p);
}

Json config_json(const RunConfig& c, const Param& p) {
  Json j{{"n", c.n}};
  j["r"] = c.r ? Json(*c.r) : Json(nullptr);
  j["N"] = c.N ? Json(*c.N) : Json(nullptr);
  j["tmax"] = c.tmax;
  j["window"] = c.window ? Json::array({c.window->first, c.window->second}) : Json(nullptr);
  j["seed"] = c.seed;
  j["v"] = p.describe();
  return j;
}

Json weights_json(const std::map<Composition, int>& w) {
  Json out = Json::array();
  for (const auto& [k, d] : w) out.push_back(Json{{"weight", to_json(k)}, {"dim", d}});
  return out;
}

void require_positive_n(const RunConfig& c) {
  if (c.n < 1) throw DomainError("--n must be at least 1");
  if (c.r && *c.r < 0) throw DomainError("--r must be non-negative");
  if (c.N && *c.N < c.n) throw DomainError("--N must be at least --n");
  if (c.tmax < 0) throw DomainError("--tmax must be non-negative");
}

}  // namespace

CommandResult cmd_dmap(const RunConfig& c) {
  require_positive_n(c);
  Param p = param_of(c);
  if (c.segments.has_value() == c.tuple.has_value())
    throw ParseError("dmap needs exactly one of --segments and --tuple");
  CommandResult res;
  Json& j = res.report;
  j["command"] = "dmap";
  if (c.segments) {
    Multisegment s = multisegment_from_json(parse_input(*c.segments, "--segments"), p);
    int r = c.r.value_or(s.total_length());
    DominantTuple q = pa(c.n, r, s, p);
    bool round = pa_inverse(c.n, r, q, p) == s;
    Json polys = Json::array();
    for (int i = 1; i <= q.n(); ++i) polys.push_back(to_json(q.poly(i)));
    j["direction"] = "forward";
    j["n"] = c.n;
    j["r"] = r;
    j["multisegment"] = to_json(s);
    j["tuple"] = to_json(q);
    j["polynomials"] = polys;
    j["dominant"] = is_dominant(q, p);
    j["round_trip"] = round;
    res.exit_code = round ? kExitOk : kExitCheckFailed;
  } else {
    DominantTuple q = tuple_from_json(parse_input(*c.tuple, "--tuple"), p);
    int r = c.r.value_or(q.total_degree());
    Multisegment s = pa_inverse(c.n, r, q, p);
    bool round = pa(c.n, r, s, p) == q;
    j["direction"] = "inverse";
    j["n"] = c.n;
    j["r"] = r;
    j["tuple"] = to_json(q);
    j["multisegment"] = to_json(s);
    j["round_trip"] = round;
    res.exit_code = round ? kExitOk : kExitCheckFailed;
  }
  return res;
}

CommandResult cmd_verify(const RunConfig& c) {
  require_positive_n(c);
  Param p = param_of(c);
  SuiteConfig sc;
  sc.n = c.n;
  sc.r = c.r.value_or(2);
  sc.N = c.N.value_or(std::max(3, c.n));
  sc.tmax = c.tmax;
  sc.window = c.window;
  sc.grid = grid_of(c, p);
  sc.seed = c.seed;
  sc.param = p;

  std::vector<std::string> names;
  if (c.suite == "all") {
    names = suite_names();
  } else {
    const auto& known = suite_names();
    if (std::find(known.begin(), known.end(), c.suite) == known.end())
      throw ParseError("unknown suite '" + c.suite + "'");
    names.push_back(c.suite);
  }
  CommandResult res;
  Json suites = Json::array();
  bool pass = true;
  for (const auto& name : names) {
    SuiteResult r = run_suite(name, sc);
    pass = pass && r.pass();
    suites.push_back(r.to_json());
  }
  Json cfg = config_json(c, p);
  cfg["r"] = sc.r;
  cfg["N"] = sc.N;
  res.report = Json{{"command", "verify"}, {"suite", c.suite}, {"config", cfg},
                    {"suites", suites}, {"pass", pass}};
  res.exit_code = pass ? kExitOk : kExitCheckFailed;
  return res;
}

CommandResult cmd_dims(const RunConfig& c) {
  require_positive_n(c);
  Param p = param_of(c);
  if (!c.segments) throw ParseError("dims needs --segments");
  Multisegment s = multisegment_from_json(parse_input(*c.segments, "--segments"), p);
  int r = s.total_length();
  if (c.r && *c.r != r)
    throw DomainError("--r " + std::to_string(*c.r) + " differs from |s| = " + std::to_string(r));

  CommandResult res;
  Json& j = res.report;
  j["command"] = "dims";
  j["n"] = c.n;
  j["r"] = r;
  j["multisegment"] = to_json(s);
  j["mu"] = to_json(s.wp());
  j["parameters"] = to_json(juxtapose(s, p));

  SchurModule w(c.n, s, p, c.tmax);
  bool ok = w.closed();
  j["dimension"] = w.dim();
  j["expected_dimension"] = expected_schur_dimension(c.n, s.wp().as_composition());
  j["closed"] = w.closed();
  auto weights = weight_dimension_report(w);
  j["weights"] = weights_json(weights);
  if (s.is_in_Srn(c.n)) {
    PseudoHWReport rep = product_drinfeld_check(w, s, c.tmax);
    j["hw_weight"] = to_json(rep.weight);
    j["hw_dim"] = rep.hw_dim;
    j["k_exponents"] = rep.k_exponents;
    j["central_series"] = to_json(rep.central_series);
    j["expected_product"] = to_json(rep.expected_product);
    j["match"] = rep.match;
    ok = ok && rep.match && rep.hw_dim == 1 && rep.k_matches;
  } else {
    j["hw_dim"] = 0;
  }

  if (c.N && *c.N > c.n) {
    SchurModule big(*c.N, s, p, c.tmax);
    GProjection g = g_projection(*c.N, c.n, big);
    bool equal = g.weights == weights && g.reencoded == w.basis();
    j["g_projection"] = Json{{"N", *c.N},
                             {"n", c.n},
                             {"big_dimension", big.dim()},
                             {"dimension", g.reencoded.dim()},
                             {"weights", weights_json(g.weights)},
                             {"idempotent", g.idempotent},
                             {"commutes", g.commutes},
                             {"contained", g.contained},
                             {"equal", equal}};
    ok = ok && equal && g.idempotent && g.commutes && g.contained;
  }
  res.exit_code = ok ? kExitOk : kExitCheckFailed;
  return res;
}

CommandResult cmd_enum(const RunConfig& c) {
  require_positive_n(c);
  Param p = param_of(c);
  int r = c.r.value_or(2);
  if (r > 8) throw ResourceError("enum needs r <= 8");
  auto grid = grid_of(c, p);
  if (grid.empty()) grid = default_schur_grid(p);

  Json comps = Json::array();
  for (const auto& x : compositions(c.n, r)) comps.push_back(to_json(x));
  Json parts = Json::array();
  for (const auto& x : partitions(r)) parts.push_back(to_json(x));
  Json segs = Json::array();
  for (const auto& s : enumerate_multisegments(r, c.n, grid)) segs.push_back(to_json(s));

  CommandResult res;
  res.report = Json{{"command", "enum"},
                    {"n", c.n},
                    {"r", r},
                    {"grid", to_json(grid)},
                    {"compositions", comps},
                    {"partitions", parts},
                    {"multisegments", segs},
                    {"counts",
                     Json{{"compositions", comps.size()},
                          {"partitions", parts.size()},
                          {"multisegments", segs.size()}}}};
  return res;
}

CommandResult run_command(const std::string& name, const RunConfig& config) {
  auto error = [&](const char* kind, const std::string& msg, int code) {
    CommandResult res;
    res.report = Json{{"command", name}, {"error", Json{{"kind", kind}, {"message", msg}}}};
    res.exit_code = code;
    return res;
  };
  try {
    if (name == "dmap") return cmd_dmap(config);
    if (name == "verify") return cmd_verify(config);
    if (name == "dims") return cmd_dims(config);
    if (name == "enum") return cmd_enum(config);
    return error("schema", "unknown command '" + name + "'", kExitSchema);
  } catch (const ParseError& e) {
    return error("schema", e.what(), kExitSchema);
  } catch (const nlohmann::json::exception& e) {
    return error("schema", e.what(), kExitSchema);
  } catch (const DomainError& e) {
    return error("domain", e.what(), kExitDomain);
  } catch (const ResourceError& e) {
    return error("resource", e.what(), kExitResource);
  }
}

namespace {

void print_summary(const Json& report, std::ostream& out) {
  if (report.contains("error")) {
    out << report["command"].get<std::string>() << ": " << report["error"]["kind"].get<std::string>()
        << " error: " << report["error"]["message"].get<std::string>() << "\n";
    return;
  }
  if (report["command"] == "verify") {
    for (const auto& s : report["suites"])
      for (const auto& ch : s["checks"])
        out << (ch["pass"].get<bool>() ? "PASS " : "FAIL ") << s["suite"].get<std::string>() << ": "
            << ch["name"].get<std::string>() << " (" << ch["count"].get<std::size_t>() << ")\n";
    return;
  }
  for (const auto& [key, value] : report.items()) {
    if (key == "command") continue;
    out << key << ": " << value.dump() << "\n";
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Affine Hecke algebras, affine Schur functors and Drinfeld polynomials"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string window;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "window size n");
    sub->add_option("--r", cfg.r, "tensor rank r");
    sub->add_option("--N", cfg.N, "larger window N for the G projection");
    sub->add_option("--suite", cfg.suite, "suite name or 'all'");
    sub->add_option("--tmax", cfg.tmax, "highest loop index / series order");
    sub->add_option("--window", window, "tensor window lo,hi");
    sub->add_option("--grid", cfg.grid_file, "JSON file with segment centers");
    sub->add_option("--seed", cfg.seed, "seed for randomized checks");
    sub->add_option("--v-rational", cfg.v_rational, "specialize v to a rational p/q");
    sub->add_option("--out", cfg.out, "also write the JSON report to this file");
    sub->add_flag("--json", cfg.json, "print the JSON report");
    sub->add_option("--segments", cfg.segments, "multisegment JSON (or @file)");
    sub->add_option("--tuple", cfg.tuple, "dominant tuple JSON (or @file)");
  };
  for (const char* name : {"dmap", "verify", "dims", "enum"}) add_common(app.add_subcommand(name));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << e.what() << "\n";
    return kExitSchema;
  }

  std::string name = app.get_subcommands().front()->get_name();
  CommandResult res;
  if (!window.empty()) {
    auto comma = window.find(',');
    try {
      if (comma == std::string::npos) throw std::invalid_argument("no comma");
      std::size_t used = 0;
      int lo = std::stoi(window.substr(0, comma), &used);
      if (used != comma) throw std::invalid_argument("trailing text");
      std::string rest = window.substr(comma + 1);
      int hi = std::stoi(rest, &used);
      if (used != rest.size()) throw std::invalid_argument("trailing text");
      cfg.window = std::make_pair(lo, hi);
    } catch (const std::exception&) {
      res.report = Json{{"command", name},
                        {"error", Json{{"kind", "schema"}, {"message", "--window expects lo,hi"}}}};
      res.exit_code = kExitSchema;
    }
  }
  if (!res.report.contains("error")) res = run_command(name, cfg);

  if (cfg.json)
    out << res.report.dump(2) << "\n";
  else
    print_summary(res.report, res.exit_code == kExitOk ? out : err);
  if (cfg.out) {
    std::ofstream f(*cfg.out);
    if (!f) {
      err << "cannot write '" << *cfg.out << "'\n";
      return kExitSchema;
    }
    f << res.report.dump(2) << "\n";
  }
  return res.exit_code;
}

}  // namespace affschur
