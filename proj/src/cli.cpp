#include "paraharm/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "paraharm/charts.hpp"
#include "paraharm/checks.hpp"
#include "paraharm/coefficients.hpp"
#include "paraharm/dual_orbits.hpp"
#include "paraharm/errors.hpp"
#include "paraharm/plancherel.hpp"
#include "paraharm/representations.hpp"
#include "paraharm/sampling.hpp"
#include "paraharm/verdicts.hpp"

namespace paraharm::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr double kWitnessTol = 1e-10;

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t next = std::min(text.find(',', pos), text.size());
    const std::string item = text.substr(pos, next - pos);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size() || !std::isfinite(value)) {
      throw DomainError("cannot parse '" + item + "' as a number in '" + text + "'");
    }
    out.push_back(value);
    pos = next + 1;
  }
  return out;
}

json to_json(const AlgebraElement& x) {
  json a = json::array();
  for (double c : x.coeffs()) a.push_back(c == 0.0 ? 0.0 : c);
  return a;
}

json to_json(const FVector& v) {
  json a = json::array();
  for (const AlgebraElement& e : v.entries()) a.push_back(to_json(e));
  return a;
}

json to_json(const MAElement& g) {
  json rows = json::array();
  for (std::size_t r = 0; r < g.u.size(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < g.u.size(); ++c) row.push_back(to_json(g.u(r, c)));
    rows.push_back(row);
  }
  return {{"u", rows}, {"beta", to_json(g.beta)}, {"alpha", g.alpha}};
}

json to_json(const P0Element& p) { return {{"lambda", p.lambda}, {"a", p.a}}; }

json to_json(const DualPoint& p) {
  if (const auto* nu = std::get_if<N0Char>(&p)) return {{"kind", "n0-char"}, {"s", nu->s}, {"t", nu->t}};
  if (const auto* v = std::get_if<CharParam>(&p)) return {{"kind", "char"}, {"v", to_json(v->v)}};
  return {{"kind", "central"}, {"m", to_json(std::get<CentralParam>(p).m)}};
}

json to_json(const MeasureClass& m) { return {{"class", std::string(to_string(m.value))}, {"reason", m.reason}}; }

/// P3x3: (s, t). Characters: d (n-1) real coefficients of v. Central: the
/// d-1 imaginary coefficients of m.
DualPoint parse_point(const FamilySpec& family, const std::string& kind, const std::string& text) {
  const std::vector<double> c = parse_list(text);
  if (family.family == Family::P3x3) {
    if (c.size() != 2) throw DomainError("P3x3 points are s,t");
    return N0Char{c[0], c[1]};
  }
  const NGroupSpec spec = family.n_spec();
  const std::size_t d = dimension(spec.tag);
  if (kind == "char") {
    if (c.size() != d * spec.w_length()) {
      throw DomainError("a character of " + family.name() + " needs " + std::to_string(d * spec.w_length()) +
                        " coefficients");
    }
    return CharParam{FVector::from_coefficients(spec.tag, c)};
  }
  if (kind != "central") throw DomainError("--kind must be char or central");
  if (d == 1) throw DomainError("N is abelian over R; there are no central parameters");
  if (c.size() != d - 1) throw DomainError("a central parameter of " + family.name() + " needs " + std::to_string(d - 1) + " imaginary coefficients");
  AlgebraElement m(spec.tag);
  for (std::size_t i = 0; i < c.size(); ++i) m[i + 1] = c[i];
  return CentralParam{m};
}

ActingGroup acting_on_dual(const FamilySpec& family) {
  return family.family == Family::P3x3 ? ActingGroup::P0 : ActingGroup::MA;
}

struct Selection {
  std::string family = "SU";
  int n = 2;
  std::string kind = "char";
  std::string point;
};

void add_selection(CLI::App* cmd, Selection& s, const std::string& point_flag, const std::string& point_help) {
  cmd->add_option("--family", s.family, "P3x3, SO0, SU, Sp or F4")->capture_default_str();
  cmd->add_option("--n", s.n, "n of the rank-one family (ignored for P3x3 and F4)")->capture_default_str();
  cmd->add_option("--kind", s.kind, "char or central (rank-one families)")->capture_default_str();
  cmd->add_option(point_flag, s.point, point_help)->required();
}

FamilySpec family_of(const Selection& s) { return make_family(parse_family(s.family), s.n); }

json input_json(const FamilySpec& family, const DualPoint& p) {
  return {{"family", family.name()}, {"point", to_json(p)}};
}

int cmd_orbits(const Selection& s, double tol, std::ostream& out) {
  const FamilySpec family = family_of(s);
  const DualPoint p = parse_point(family, s.kind, s.point);
  const OrbitId id{family, acting_on_dual(family), classify_orbit(family, p, tol)};
  json j;
  j["input"] = input_json(family, p);
  j["orbit"] = id.label();
  j["acting"] = std::string(to_string(id.acting));
  j["representative"] = to_json(orbit_representative(id));
  j["measure"] = to_json(orbit_measure_class(id));
  out << j.dump() << '\n';
  return kExitOk;
}

std::string stabilizer_description(const FamilySpec& family, const DualPoint& p, OrbitType type) {
  if (const auto* nu = std::get_if<N0Char>(&p)) {
    if (nu->s == 0.0 && nu->t == 0.0) return "P0";
    if (nu->s == 0.0) return "P1 = {lambda = 1}";
    return "trivial";
  }
  if (type == OrbitType::Trivial) return "MA";
  if (std::holds_alternative<CharParam>(p)) {
    return family.algebra() == AlgebraTag::Octonion ? "alpha = 1" : "alpha = 1, beta v_i = sum_j v_j u_ji";
  }
  return family.algebra() == AlgebraTag::Octonion ? "alpha = 1" : "alpha = 1, beta in R + R m";
}

int cmd_stabilizer(const Selection& s, int samples, std::uint64_t seed, double tol, std::ostream& out) {
  const FamilySpec family = family_of(s);
  const DualPoint p = parse_point(family, s.kind, s.point);
  const OrbitType type = classify_orbit(family, p, tol);
  Rng rng(seed);
  std::size_t members = 0, disagreements = 0;
  for (int e = 0; e < samples; ++e) {
    bool fixed = false, algebraic = false;
    if (const auto* nu = std::get_if<N0Char>(&p)) {
      const P0Element g = e % 2 ? random_p0(rng) : random_p0_stabilizer_element(rng, *nu);
      fixed = p0_stabilizer_fixed_point(g, *nu, tol);
      algebraic = p0_stabilizer_algebraic(g, *nu, tol);
    } else {
      const NGroupSpec spec = family.n_spec();
      const MAElement g = e % 2 ? random_ma(rng, spec, e % 4 == 1 ? 0.0 : 0.7) : random_stabilizer_element(rng, family, p);
      fixed = stabilizer_membership(g, p, tol);
      algebraic = stabilizer_algebraic(g, p, tol);
    }
    if (fixed) ++members;
    if (fixed != algebraic) ++disagreements;
  }
  json j;
  j["input"] = input_json(family, p);
  j["orbit"] = OrbitId{family, acting_on_dual(family), type}.label();
  j["stabilizer"] = stabilizer_description(family, p, type);
  j["samples"] = samples;
  j["members"] = members;
  j["disagreements"] = disagreements;
  j["tolerance"] = tol;
  out << j.dump() << '\n';
  return disagreements == 0 ? kExitOk : kExitCheckFailed;
}

int cmd_witness(const Selection& s, const std::string& source_text, std::ostream& out) {
  const FamilySpec family = family_of(s);
  const DualPoint target = parse_point(family, s.kind, s.point);
  std::optional<DualPoint> source;
  if (!source_text.empty()) source = parse_point(family, s.kind, source_text);
  const OrbitId id{family, acting_on_dual(family), classify_orbit(family, target)};
  json j;
  j["input"] = input_json(family, target);
  if (source) j["input"]["source"] = to_json(*source);
  j["orbit"] = id.label();
  const DualPoint from = source ? *source : orbit_representative(id);
  j["representative"] = to_json(from);
  double residual = 0.0;
  bool valid = true;
  if (const auto* nu = std::get_if<N0Char>(&target)) {
    const std::optional<N0Char> src = source ? std::optional<N0Char>(std::get<N0Char>(*source)) : std::nullopt;
    const P0Element p = p0_transitivity_witness(*nu, src);
    residual = distance(DualPoint{p0_dual_act(p, std::get<N0Char>(from))}, target);
    valid = p.lambda > 0.0;
    j["witness"] = to_json(p);
  } else {
    const MAElement g = transitivity_witness(family, target, source);
    const DualPoint moved = std::holds_alternative<CharParam>(from)
                                ? DualPoint{dual_char_act(g, std::get<CharParam>(from))}
                                : DualPoint{dual_central_act(g, std::get<CentralParam>(from))};
    residual = distance(moved, target);
    valid = is_valid(family.n_spec(), g);
    j["witness"] = to_json(g);
  }
  j["residual"] = residual;
  j["constraint_valid"] = valid;
  out << j.dump() << '\n';
  return residual <= kWitnessTol && valid ? kExitOk : kExitCheckFailed;
}

struct CoefficientArgs {
  std::string group = "N:C:2";
  std::string rep = "chi";
  std::string param;
  std::size_t axis = 0;
  std::string range;
  int grid = 11;
  std::string format = "csv";
};

CoefficientFn build_coefficient(const GroupChart& chart, const CoefficientArgs& a) {
  const GroupDescriptor& g = chart.group();
  if (a.rep == "regular") return default_regular_coefficient(chart);
  if (g.kind != GroupKind::N) throw UnsupportedError("--rep " + a.rep + " lives on N descriptors; use --rep regular");
  const NGroupSpec spec = g.n_spec();
  if (a.rep == "chi") {
    FVector v(spec.tag, spec.w_length());
    if (a.param.empty()) v[0] = AlgebraElement::one(spec.tag);
    else {
      const std::vector<double> c = parse_list(a.param);
      if (c.size() != dimension(spec.tag) * spec.w_length()) throw DomainError("--param needs the coefficients of v");
      v = FVector::from_coefficients(spec.tag, c);
    }
    return character_coefficient(spec, {v});
  }
  if (a.rep == "gauss") {
    const double mu = a.param.empty() ? 1.0 : parse_list(a.param).at(0);
    return gaussian_coefficient_fn(spec, {from_complex(spec.tag, {0.0, mu})});
  }
  throw DomainError("--rep must be chi, gauss or regular");
}

void write_number(std::ostream& out, double x) {
  std::ostringstream os;
  os << std::setprecision(17) << (x == 0.0 ? 0.0 : x);
  out << os.str();
}

int cmd_coefficient(const CoefficientArgs& a, std::ostream& out) {
  const GroupDescriptor g = GroupDescriptor::parse(a.group);
  const GroupChart chart(g);
  if (a.axis >= chart.dimension()) throw DomainError("--axis out of range for " + g.to_string());
  if (a.grid < 1) throw DomainError("--grid must be positive");
  const bool positive = chart.is_positive(a.axis);
  std::vector<double> range = a.range.empty() ? (positive ? std::vector<double>{0.25, 4.0} : std::vector<double>{-3.0, 3.0})
                                              : parse_list(a.range);
  if (range.size() != 2 || !(range[1] >= range[0])) throw DomainError("--range must be lo,hi with lo <= hi");
  if (positive && range[0] <= 0.0) throw DomainError("axis " + std::to_string(a.axis) + " of " + g.to_string() + " is positive");
  const CoefficientFn phi = build_coefficient(chart, a);
  std::vector<Point> points;
  std::vector<std::complex<double>> values;
  for (int k = 0; k < a.grid; ++k) {
    Point x = chart.identity();
    x[a.axis] = a.grid == 1 ? range[0] : range[0] + (range[1] - range[0]) * k / (a.grid - 1);
    values.push_back(phi(x));
    points.push_back(std::move(x));
  }
  if (a.format == "json") {
    json rows = json::array();
    for (std::size_t i = 0; i < points.size(); ++i) {
      rows.push_back({{"x", points[i]}, {"re", values[i].real()}, {"im", values[i].imag()}});
    }
    out << json{{"group", g.to_string()}, {"rep", phi.provenance}, {"values", rows}}.dump() << '\n';
    return kExitOk;
  }
  if (a.format != "csv") throw DomainError("--format must be csv or json");
  for (std::size_t k = 0; k < chart.dimension(); ++k) out << 'x' << k << ',';
  out << "re,im\n";
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (double c : points[i]) {
      write_number(out, c);
      out << ',';
    }
    write_number(out, values[i].real());
    out << ',';
    write_number(out, values[i].imag());
    out << '\n';
  }
  return kExitOk;
}

struct DecayArgs {
  std::string group = "P3x3";
  double epsilon = 1e-6;
  double r0 = 1.0;
  double r_max = 128.0;
  std::size_t samples = 6;
};

int cmd_decay(const DecayArgs& a, std::uint64_t seed, std::ostream& out) {
  const GroupDescriptor g = GroupDescriptor::parse(a.group);
  const GroupChart chart(g);
  CoefficientArgs ca;
  ca.rep = "regular";
  const CoefficientFn phi = build_coefficient(chart, ca);
  Rng rng(seed);
  const DecayReport rep = decay_radius(phi, chart, a.epsilon, rng, a.r0, a.r_max, a.samples);
  json levels = json::array();
  for (const DecayLevel& l : rep.levels) levels.push_back({{"radius", l.radius}, {"max_abs", l.max_abs}, {"samples", l.samples}});
  json j;
  j["group"] = g.to_string();
  j["coefficient"] = phi.provenance;
  j["epsilon"] = rep.epsilon;
  j["found"] = rep.found;
  j["radius"] = rep.found ? json(rep.radius) : json(nullptr);
  j["levels"] = levels;
  out << j.dump() << '\n';
  return rep.found ? kExitOk : kExitCheckFailed;
}

int cmd_plancherel(const std::string& family_text, int n, double upper, int points, std::ostream& out) {
  const FamilySpec family = make_family(parse_family(family_text), n);
  if (family.family != Family::SU) throw UnsupportedError("the Plancherel density table is modeled for SU(n,1) only");
  if (!(upper > 0.0)) throw DomainError("--upper must be positive");
  if (points < 1) throw DomainError("--points must be positive");
  const NGroupSpec spec = family.n_spec();
  out << "m,density,mass_quadrature,mass_exact\n";
  double last_error = 0.0;
  for (int k = 1; k <= points; ++k) {
    const double m = upper * k / points;
    write_number(out, m);
    out << ',';
    write_number(out, plancherel_density(spec, {from_complex(spec.tag, {0.0, m})}));
    out << ',';
    const PlancherelMass pm = plancherel_mass(spec, m);
    last_error = pm.relative_error;
    write_number(out, pm.quadrature);
    out << ',';
    write_number(out, pm.exact);
    out << '\n';
  }
  return last_error < 1e-8 ? kExitOk : kExitCheckFailed;
}

int cmd_verdict(const std::string& family_text, int n, const std::string& subgroup_text, bool as_json,
                std::ostream& out) {
  const FamilySpec family = make_family(parse_family(family_text), n);
  const Verdict v = verdict(family, parse_subgroup(subgroup_text));
  if (as_json) {
    json j;
    j["family"] = std::string(to_string(family.family));
    j["subgroup"] = std::string(to_string(v.subgroup));
    j["n"] = family.family == Family::P3x3 ? json(nullptr) : json(family.n);
    j["group"] = family.name();
    j["answer"] = std::string(to_string(v.answer));
    j["reasons"] = v.reasons;
    j["witness"] = v.witness ? json(std::string(to_string(*v.witness))) : json(nullptr);
    out << j.dump() << '\n';
    return kExitOk;
  }
  out << family.name() << ' ' << to_string(v.subgroup) << ": " << to_string(v.answer);
  for (std::size_t i = 0; i < v.reasons.size(); ++i) out << (i ? ", " : " (") << v.reasons[i];
  out << (v.reasons.empty() ? "" : ")") << '\n';
  return kExitOk;
}

int cmd_selftest(const std::vector<int>& only, std::uint64_t seed, bool as_json, std::ostream& out) {
  std::vector<int> ids = only;
  if (ids.empty()) {
    for (int i = 1; i <= checks::kCheckCount; ++i) ids.push_back(i);
  }
  for (int id : ids) checks::check_name(id);
  int passed = 0;
  json results = json::array();
  double total = 0.0;
  for (int id : ids) {
    const checks::CheckResult r = checks::run_check(id, seed);
    total += r.seconds;
    if (r.pass) ++passed;
    if (as_json) {
      results.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    } else {
      out << (r.pass ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << ": " << r.detail << '\n';
    }
  }
  if (as_json) {
    out << json{{"seed", seed}, {"passed", passed}, {"total", ids.size()}, {"results", results}}.dump() << '\n';
  } else {
    out << "selftest: " << passed << '/' << ids.size() << " passed (seed " << seed << ", " << std::fixed
        << std::setprecision(1) << total << " s)\n";
  }
  return passed == static_cast<int>(ids.size()) ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Parabolic subgroups: dual orbits, representation models, Plancherel data and Fourier-algebra verdicts",
               "paraharm"};
  app.require_subcommand(1);
  app.fallthrough();
  std::optional<std::uint64_t> seed_opt;
  double tol = 1e-10;
  app.add_option("--seed", seed_opt, "RNG seed (default: $PARAHARM_SEED, else " + std::to_string(kDefaultSeed) + ")");
  app.add_option("--tol", tol, "comparison tolerance")->capture_default_str();

  Selection orbit_sel, stab_sel, wit_sel;
  auto* orbits = app.add_subcommand("orbits", "classify a dual point (JSON)");
  add_selection(orbits, orbit_sel, "--point", "s,t for P3x3; coefficients of v or of Im m otherwise");

  int stab_samples = 1000;
  auto* stabilizer = app.add_subcommand("stabilizer", "compare algebraic and fixed-point stabilizer membership (JSON)");
  add_selection(stabilizer, stab_sel, "--point", "the dual point whose stabilizer is sampled");
  stabilizer->add_option("--samples", stab_samples, "number of sampled group elements")->capture_default_str();

  std::string wit_source;
  auto* witness = app.add_subcommand("witness", "group element moving the orbit representative (or --source) to --target (JSON)");
  add_selection(witness, wit_sel, "--target", "target dual point");
  witness->add_option("--source", wit_source, "source dual point (default: orbit representative)");

  CoefficientArgs coef;
  auto* coefficient = app.add_subcommand("coefficient", "matrix coefficient along one chart axis (CSV)");
  coefficient->add_option("--group", coef.group, "descriptor: P3x3, AXB, N:<R|C|H|O>:<n> or AN:<tag>:<n>")->capture_default_str();
  coefficient->add_option("--rep", coef.rep, "chi, gauss or regular")->capture_default_str();
  coefficient->add_option("--param", coef.param, "v coefficients (chi) or mu for m = i mu (gauss)");
  coefficient->add_option("--axis", coef.axis, "chart coordinate swept")->capture_default_str();
  coefficient->add_option("--range", coef.range, "lo,hi along the axis");
  coefficient->add_option("--grid", coef.grid, "number of grid points")->capture_default_str();
  coefficient->add_option("--format", coef.format, "csv or json")->capture_default_str();

  DecayArgs dec;
  auto* decay = app.add_subcommand("decay", "decay radius of a regular-representation coefficient (JSON)");
  decay->add_option("--group", dec.group, "group descriptor")->capture_default_str();
  decay->add_option("--epsilon", dec.epsilon, "decay threshold")->capture_default_str();
  decay->add_option("--r0", dec.r0, "first swept radius")->capture_default_str();
  decay->add_option("--rmax", dec.r_max, "largest swept radius")->capture_default_str();
  decay->add_option("--samples", dec.samples, "directions per radius")->capture_default_str();

  std::string pl_family = "SU";
  int pl_n = 2, pl_points = 10;
  double pl_upper = 1.0;
  auto* plancherel = app.add_subcommand("plancherel", "Plancherel density table along the central parameter (CSV)");
  plancherel->add_option("--family", pl_family, "family (SU)")->capture_default_str();
  plancherel->add_option("--n", pl_n, "n")->capture_default_str();
  plancherel->add_option("--upper", pl_upper, "upper limit M")->capture_default_str();
  plancherel->add_option("--points", pl_points, "table rows")->capture_default_str();

  std::string v_family = "SU", v_subgroup = "P";
  int v_n = 2;
  bool v_json = false;
  auto* verdict_cmd = app.add_subcommand("verdict", "decide A(H) = B(H) n C0(H)");
  verdict_cmd->add_option("--family", v_family, "P3x3, SO0, SU, Sp or F4")->required();
  verdict_cmd->add_option("--subgroup", v_subgroup, "N, MN, AN or P")->required();
  verdict_cmd->add_option("--n", v_n, "n of the rank-one family")->capture_default_str();
  verdict_cmd->add_flag("--json", v_json, "JSON output");

  std::vector<int> only;
  bool st_json = false;
  auto* selftest = app.add_subcommand("selftest", "run the acceptance suites");
  selftest->add_option("--only", only, "suite ids 1..10")->delimiter(',');
  selftest->add_flag("--json", st_json, "JSON output");

  std::vector<std::string> argv_store{"paraharm"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& s : argv_store) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  const std::uint64_t seed = seed_opt ? *seed_opt : seed_from_environment().value_or(kDefaultSeed);
  try {
    if (orbits->parsed()) return cmd_orbits(orbit_sel, tol, out);
    if (stabilizer->parsed()) return cmd_stabilizer(stab_sel, stab_samples, seed, tol, out);
    if (witness->parsed()) return cmd_witness(wit_sel, wit_source, out);
    if (coefficient->parsed()) return cmd_coefficient(coef, out);
    if (decay->parsed()) return cmd_decay(dec, seed, out);
    if (plancherel->parsed()) return cmd_plancherel(pl_family, pl_n, pl_upper, pl_points, out);
    if (verdict_cmd->parsed()) return cmd_verdict(v_family, v_n, v_subgroup, v_json, out);
    if (selftest->parsed()) return cmd_selftest(only, seed, st_json, out);
  } catch (const OrbitError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const QuadratureError& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace paraharm::cli
