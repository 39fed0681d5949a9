#include "astoric/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "astoric/errors.hpp"
#include "astoric/json_io.hpp"

namespace astoric::cli {

namespace {

using io::Json;

struct Options {
  std::optional<std::uint32_t> p, e;
  std::optional<std::string> window;
  std::optional<std::int64_t> box;
  std::string format = "json";
  std::string input;
  std::vector<std::string> m;
  std::optional<std::string> x, y;
};

struct Result {
  Json echo;
  Json output;
};

Window parse_window(const std::string& text) {
  const auto sep = text.find_first_of(",:");
  if (sep == std::string::npos) throw InvalidInput("window is written lo,hi");
  try {
    std::size_t used_lo = 0, used_hi = 0;
    const std::string lo = text.substr(0, sep), hi = text.substr(sep + 1);
    Window w{std::stoll(lo, &used_lo), std::stoll(hi, &used_hi)};
    if (used_lo != lo.size() || used_hi != hi.size()) throw InvalidInput("window is written lo,hi");
    return w;
  } catch (const std::logic_error&) {
    throw InvalidInput("window is written lo,hi with integer bounds");
  }
}

std::int64_t parse_box(const std::string& text) {
  try {
    std::size_t used = 0;
    const std::int64_t b = std::stoll(text, &used);
    if (used != text.size() || b < 0) throw InvalidInput("box must be a nonnegative integer");
    return b;
  } catch (const std::logic_error&) {
    throw InvalidInput("box must be a nonnegative integer");
  }
}

io::Defaults defaults_from(const Options& o) {
  io::Defaults d;
  if (const char* w = std::getenv("ASTORIC_WINDOW"); w && *w) d.window = parse_window(w);
  if (const char* b = std::getenv("ASTORIC_BOX"); b && *b) d.box = parse_box(b);
  d.p = o.p;
  d.e = o.e;
  if (o.window) d.window = parse_window(*o.window);
  if (o.box) {
    if (*o.box < 0) throw InvalidInput("box must be a nonnegative integer");
    d.box = *o.box;
  }
  return d;
}

Json load(const std::string& source, bool optional = false) {
  if (source.empty()) {
    if (optional) return Json::object();
    throw InvalidInput("missing input document (inline JSON, a file path, or - for stdin)");
  }
  std::string text;
  if (source.front() == '{' || source.front() == '[') {
    text = source;
  } else if (source == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream f(source);
    if (!f) throw InvalidInput("cannot read input file " + source);
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  Json j = Json::parse(text);
  if (!j.is_object()) throw InvalidInput("input document must be a JSON object");
  return j;
}

const Json& field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw InvalidInput(std::string("missing field '") + key + "'");
  return *it;
}

// the field header shared by documents that carry a cone rather than a series
Json field_header(const FiniteField& f) { return Json{{"p", f.p()}, {"e", f.e()}}; }

std::vector<Cone> cones_from(const Json& j) {
  if (!j.is_array()) throw InvalidInput("expected an array of cones");
  std::vector<Cone> out;
  for (const auto& c : j) out.push_back(io::cone_from(c));
  return out;
}

Json cones_json(const std::vector<Cone>& cones) {
  Json out = Json::array();
  for (const auto& c : cones) out.push_back(io::to_json(c));
  return out;
}

Result cmd_reduce_as(const Json& in, const io::Defaults& d, const Options&) {
  const LaurentSeries a = io::series_from(in, d);
  Json out = io::to_json(as_reduce(a));
  return {io::to_json(a), std::move(out)};
}

Result cmd_break(const Json& in, const io::Defaults& d, const Options&) {
  const LaurentSeries a = io::series_from(in, d);
  Json out{{"m", io::to_json(as_break(a))}};
  return {io::to_json(a), std::move(out)};
}

Result cmd_tower2_break(const Json& in, const io::Defaults& d, const Options&) {
  const ExtElem b = io::ext_from(in, d);
  const LaurentSeries& a = b.base()->parameter();
  Json out{{"base_break", io::to_json(as_break(a))}, {"break", io::to_json(tower2_break(a, b))}};
  return {io::to_json(b), std::move(out)};
}

Result cmd_phi(const Json& in, const io::Defaults& d, const Options& o) {
  std::optional<std::uint32_t> p = d.p;
  if (in.contains("p")) p = io::field_from(in, d).p();
  if (!p) throw InvalidInput("the characteristic p is not given");
  RationalVector ms;
  if (in.contains("m")) ms = io::rational_vector_from(in["m"]);
  else
    for (const auto& s : o.m) ms.push_back(Rational::parse(s));
  std::optional<Rational> x, y;
  if (in.contains("x")) x = io::rational_from(in["x"]);
  else if (o.x) x = Rational::parse(*o.x);
  if (in.contains("y")) y = io::rational_from(in["y"]);
  else if (o.y) y = Rational::parse(*o.y);

  // phi of the tower whose successive single-step breaks are listed base first
  HerbrandFunction f = HerbrandFunction::identity(*p);
  for (const auto& m : ms) {
    if (m.sign() <= 0) throw InvalidInput("breaks must be positive");
    f = phi_compose(f, phi_single(m, *p));
  }
  Json echo{{"p", *p}, {"m", io::to_json(ms)}};
  Json out{{"phi", io::to_json(f)}};
  if (x) {
    if (x->sign() < 0) throw InvalidInput("phi is defined on [0, inf)");
    echo["x"] = io::to_json(*x);
    out["value"] = io::to_json(f.phi(*x));
  }
  if (y) {
    echo["y"] = io::to_json(*y);
    out["psi"] = io::to_json(f.psi(*y));
  }
  return {echo, out};
}

Result cmd_coker_nf(const Json& in, const io::Defaults& d, const Options&) {
  const ToricDatum x = io::toric_from(in, d);
  const ToricNormalForm nf = coker_normal_form(x);
  Json out{{"reduced", io::to_json(nf.reduced)}, {"witness", io::to_json(nf.witness)}};
  return {io::to_json(x), std::move(out)};
}

Result cmd_coker_basis(const Json& in, const io::Defaults& d, const Options&) {
  const FiniteField& f = io::field_from(in, d);
  const Cone sigma = io::cone_from(field(in, "cone"));
  const std::int64_t box = in.contains("box") ? in["box"].get<std::int64_t>() : d.box;
  Json echo = field_header(f);
  echo["cone"] = io::to_json(sigma);
  echo["box"] = box;
  Json out = io::to_json(coker_basis_bounded(sigma, box, f, Exec::parallel));
  return {std::move(echo), std::move(out)};
}

Result cmd_restrict(const Json& in, const io::Defaults& d, const Options&) {
  const ToricDatum x = io::toric_from(field(in, "datum"), d);
  const Cone tau = io::cone_from(field(in, "tau"));
  Json out = io::to_json(restrict_as(x, tau));
  return {Json{{"datum", io::to_json(x)}, {"tau", io::to_json(tau)}}, std::move(out)};
}

Result cmd_vlambda(const Json& in, const io::Defaults& d, const Options&) {
  const ToricDatum x = io::toric_from(field(in, "datum"), d);
  const LinearFunctional lambda = io::functional_from(field(in, "lambda"));
  Json out{{"value", io::to_json(v_lambda(x, lambda))}};
  return {Json{{"datum", io::to_json(x)}, {"lambda", io::to_json(lambda)}}, std::move(out)};
}

Result cmd_heights(const Json& in, const io::Defaults& d, const Options&) {
  const ToricDatum x = io::toric_from(field(in, "datum"), d);
  const LinearFunctional lambda = io::functional_from(field(in, "lambda"));
  Json echo{{"datum", io::to_json(x)}, {"lambda", io::to_json(lambda)}};
  Json out{{"h_lambda", io::to_json(h_lambda_as(x, lambda))}};
  if (in.contains("vertices")) {
    std::vector<LinearFunctional> us;
    if (!in["vertices"].is_array()) throw InvalidInput("vertices must be an array");
    for (const auto& v : in["vertices"]) us.push_back(io::functional_from(v));
    Json vs = Json::array();
    for (const auto& u : us) vs.push_back(io::to_json(u));
    echo["vertices"] = vs;
    out["h_U"] = io::to_json(h_U_as(x, us));
  }
  if (x.cone().is_linear()) {
    const LatticeIndex index = lattice_index(lambda, x.cone(), x.field().p());
    out["c_lambda"] = io::to_json(c_lambda_linear(x, lambda));
    out["m_lambda"] = io::to_json(m_lambda(lambda));
    out["d"] = index.d;
    out["d_prime"] = index.d_prime;
  }
  if (in.contains("rays")) {
    const std::vector<Cone> rays = cones_from(in["rays"]);
    echo["rays"] = cones_json(rays);
    out["split"] = io::to_json(height_splits_check(x, lambda, rays));
  }
  return {echo, out};
}

Result cmd_check_plimit(const Json& in, const io::Defaults& d, const Options&) {
  const FiniteField& f = io::field_from(in, d);
  const ConeDiagram diagram = io::diagram_from(in);
  const std::int64_t box = in.contains("box") ? in["box"].get<std::int64_t>() : d.box;
  Json echo = field_header(f);
  const Json body = io::to_json(diagram);
  for (const auto& [k, v] : body.items()) echo[k] = v;
  echo["box"] = box;
  Json out = io::to_json(check_p_limit_bounded(diagram, box, f));
  return {std::move(echo), std::move(out)};
}

Result cmd_check_map(const Json& in, const io::Defaults& d, const Options&) {
  const FiniteField& f = io::field_from(in, d);
  const MapDescriptor map = io::map_from(field(in, "map"));
  const std::int64_t box = in.contains("box") ? in["box"].get<std::int64_t>() : d.box;
  Json echo = field_header(f);
  echo["map"] = io::to_json(map);
  echo["box"] = box;
  Json out = io::to_json(check_map_p_properties(map, box, f));
  return {std::move(echo), std::move(out)};
}

constexpr std::uint64_t kMaxListedRows = 1u << 16;

Result cmd_census(const Json& in, const io::Defaults& d, const Options&) {
  const FiniteField& f = io::field_from(in, d);
  const Cone sigma = io::cone_from(field(in, "cone"));
  const std::int64_t box = in.contains("box") ? in["box"].get<std::int64_t>() : d.box;
  std::optional<LinearFunctional> lambda;
  if (in.contains("lambda")) lambda = io::functional_from(in["lambda"]);
  Json echo = field_header(f);
  echo["cone"] = io::to_json(sigma);
  echo["box"] = box;
  if (lambda) echo["lambda"] = io::to_json(*lambda);

  const ClassEnumerator classes(sigma, box, f, Exec::parallel);
  Json out{{"basis_points", classes.exponent()}};
  std::uint64_t count = 0;
  try {
    count = classes.count();
  } catch (const ArithmeticOverflow&) {
    out["count"] = std::to_string(f.p()) + "*" + std::to_string(f.q()) + "^" + std::to_string(classes.exponent());
    out["rows"] = nullptr;
    return {echo, out};
  }
  out["count"] = count;
  if (count > kMaxListedRows) {
    out["rows"] = nullptr;
    return {echo, out};
  }
  Json rows = Json::array();
  for (const auto& row : census_report(classes, lambda, Exec::parallel)) rows.push_back(io::to_json(row));
  out["rows"] = rows;
  return {echo, out};
}

Result cmd_splits2_check(const Json& in, const io::Defaults& d, const Options&) {
  const ToricDatum x = io::toric_from(field(in, "datum"), d);
  const std::vector<Cone> rays = in.contains("rays") ? cones_from(in["rays"]) : rays_through_support(x);
  Json out{{"holds", verify_splits2_torsor(x, rays)}};
  return {Json{{"datum", io::to_json(x)}, {"rays", cones_json(rays)}}, std::move(out)};
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) out += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

void write_census_csv(const Json& output, std::ostream& out) {
  out << "index,terms,rays,height\n";
  if (output["rows"].is_null()) return;
  for (const auto& row : output["rows"]) {
    out << row["index"].get<std::uint64_t>() << ',' << csv_quote(row["terms"].dump()) << ','
        << csv_quote(row["rays"].dump()) << ',' << (row.contains("height") ? row["height"].get<std::string>() : "")
        << '\n';
  }
}

using Handler = std::function<Result(const Json&, const io::Defaults&, const Options&)>;

const std::map<std::string, std::pair<Handler, std::string>>& commands() {
  static const std::map<std::string, std::pair<Handler, std::string>> table{
      {"reduce-as", {cmd_reduce_as, "Artin-Schreier normal form of a Laurent series"}},
      {"break", {cmd_break, "highest break of k((t))[z]/(z^p - z - a)"}},
      {"tower2-break", {cmd_tower2_break, "highest break of a depth-2 Artin-Schreier tower"}},
      {"phi", {cmd_phi, "Herbrand function of single-step breaks (--m, repeatable), at --x / inverse at --y"}},
      {"coker-nf", {cmd_coker_nf, "normal form of a toric datum modulo F - 1"}},
      {"coker-basis", {cmd_coker_basis, "bounded basis of coker(F - 1) over a cone"}},
      {"restrict", {cmd_restrict, "restriction of a toric datum to a subcone"}},
      {"vlambda", {cmd_vlambda, "lambda-valuation of a toric datum"}},
      {"heights", {cmd_heights, "height functions of an Artin-Schreier datum"}},
      {"check-plimit", {cmd_check_plimit, "bounded p-limit check for a cone diagram"}},
      {"check-map", {cmd_check_map, "p-injective / p-surjective / p-faithful on bounded bases"}},
      {"census", {cmd_census, "enumerate torsor classes with bounded support"}},
      {"splits2-check", {cmd_splits2_check, "reconstruct a torsor from its ray restrictions"}},
  };
  return table;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Artin-Schreier covers over Laurent series and toric charts", "astoric"};
  app.fallthrough();
  app.require_subcommand(1, 1);
  Options o;
  app.add_option("--p", o.p, "characteristic");
  app.add_option("--e", o.e, "extension degree, q = p^e");
  app.add_option("--window", o.window, "default precision window lo,hi");
  app.add_option("--box", o.box, "default coordinate bound for toric data");
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv"}));

  for (const auto& [name, entry] : commands()) {
    CLI::App* sub = app.add_subcommand(name, entry.second);
    sub->add_option("input", o.input, "inline JSON, a file path, or - for stdin");
    if (name == "phi") {
      sub->add_option("--m", o.m, "single-step break, repeatable, base first");
      sub->add_option("--x", o.x, "evaluate phi here");
      sub->add_option("--y", o.y, "evaluate psi here");
    }
  }

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::RequiredError& e) {
    err << "astoric: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const CLI::ExtrasError& e) {
    if (app.get_subcommands().empty()) {
      err << "astoric: unknown subcommand\n" << app.help();
      return kExitUsage;
    }
    err << "astoric: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const CLI::ParseError& e) {
    err << "astoric: " << e.what() << "\n";
    return kExitInvalidInput;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    const io::Defaults defaults = defaults_from(o);
    const Json input = load(o.input, name == "phi");
    const Result r = commands().at(name).first(input, defaults, o);
    const Json doc{{"command", name}, {"input", r.echo}, {"output", r.output}};
    if (o.format == "csv") {
      if (name != "census") throw InvalidInput("csv output is only available for census");
      write_census_csv(r.output, out);
    } else {
      out << doc.dump(2) << "\n";
    }
    return kExitOk;
  } catch (const PrecisionExhausted& e) {
    err << "astoric: precision exhausted: " << e.what() << "\n";
    return kExitPrecision;
  } catch (const InvalidInput& e) {
    err << "astoric: invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const ArithmeticOverflow& e) {
    err << "astoric: invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const nlohmann::json::exception& e) {
    err << "astoric: invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  }
}

}  // namespace astoric::cli
