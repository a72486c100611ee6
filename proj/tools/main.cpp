// mdyn command-line front end. Every exit path prints JSON on stdout:
// 0 success, 1 verification failure, 2 usage or parse error, 3 internal.
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mdyn/census.hpp"
#include "mdyn/error.hpp"
#include "mdyn/families.hpp"
#include "mdyn/mahler.hpp"
#include "mdyn/orbit.hpp"
#include "mdyn/verify.hpp"

using namespace mdyn;
using nlohmann::json;

namespace {

constexpr int kSchema = 1;

bool g_compact = false;

void emit(json j) {
  j["schema_version"] = kSchema;
  std::cout << (g_compact ? j.dump() : j.dump(2)) << std::endl;
}

int fail(int code, const std::string& kind, const std::string& message, json extra = json::object()) {
  json e = {{"kind", kind}, {"message", message}};
  for (auto& [k, v] : extra.items()) e[k] = v;
  emit({{"error", e}, {"exit_code", code}});
  return code;
}

struct PolyInput {
  std::string poly, coeffs;
  int root = 0;

  IntPolynomial get() const {
    if (poly.empty() == coeffs.empty())
      throw Error(ErrorKind::ParameterOutOfRange, "give exactly one of --poly and --coeffs");
    return parse_polynomial(poly.empty() ? coeffs : poly);
  }
  std::string text() const { return poly.empty() ? coeffs : poly; }
};

void add_poly_options(CLI::App* cmd, PolyInput& in) {
  cmd->add_option("--poly", in.poly, "polynomial in x, e.g. x^4+5x^2+x-1");
  cmd->add_option("--coeffs", in.coeffs, "ascending coefficient list, e.g. -1,1,5,0,1");
  cmd->add_option("--root", in.root, "root index in descending-modulus order")->capture_default_str();
}

// Runs fn on each irreducible factor; budget failures stay inside the
// factor's JSON.
template <class Fn>
json per_factor(const IntPolynomial& f, const Budget& b, Fn fn) {
  json out = json::array();
  for (const auto& fc : factor(f, b.recombination_cap)) {
    json j = {{"factor", format(fc.poly)}, {"multiplicity", fc.multiplicity}};
    try {
      fn(fc.poly, j);
    } catch (const Error& e) {
      switch (e.kind()) {
        case ErrorKind::BudgetExhausted:
        case ErrorKind::CombinatorialBudgetExceeded:
        case ErrorKind::DegreeCapExceeded:
          j["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}};
          break;
        default:
          throw;
      }
    }
    out.push_back(j);
  }
  return out;
}

int root_for(const IntPolynomial& g, int root) {
  if (root < 0) throw Error(ErrorKind::ParameterOutOfRange, "--root must be >= 0");
  return root < g.degree() ? root : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mahler measure dynamics on algebraic numbers"};
  app.require_subcommand(1);
  app.fallthrough();
  Budget budget;
  int max_iter = 24;
  app.add_option("--precision-ceiling", budget.precision_ceiling, "bits")->capture_default_str();
  app.add_option("--max-iter", max_iter, "orbit iteration limit")->capture_default_str();
  app.add_option("--degree-cap", budget.degree_cap, "identification degree cap")->capture_default_str();
  app.add_option("--subset-cap", budget.subset_cap, "cap on C(d, k) subset products")->capture_default_str();
  app.add_flag("--json", g_compact, "compact one-line JSON");

  PolyInput measure_in, classify_in, orbit_in;
  auto* measure = app.add_subcommand("measure", "Mahler measure of a root of each irreducible factor");
  add_poly_options(measure, measure_in);
  auto* classify_cmd = app.add_subcommand("classify", "integer / root of unity / Pisot / Salem / Perron");
  add_poly_options(classify_cmd, classify_in);
  auto* orbit = app.add_subcommand("orbit", "iterate M until a fixed point, a certificate or a budget");
  add_poly_options(orbit, orbit_in);
  int after_certificate = 0;
  bool no_relations = false;
  orbit->add_option("--after-certificate", after_certificate, "iterations recorded after a certificate");
  orbit->add_flag("--no-square-relations", no_relations);

  auto* family = app.add_subcommand("family", "generate a family instance");
  std::string family_name;
  FamilySpec fs;
  bool family_iterate = false;
  family->add_option("name", family_name, "pisot_anynorm | orbit2 | cubic_orbit4 | cubic_orbit3 | "
                                          "quartic_orbit4 | sparse_orbit3 | thm_st | deg12")
      ->required();
  family->add_option("--d", fs.d);
  family->add_option("--l", fs.l);
  family->add_option("--c", fs.c);
  family->add_option("--k", fs.k);
  family->add_option("--S", fs.S);
  family->add_flag("--iterate", family_iterate, "also run the orbit");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  VerifyOptions vo;
  std::string vd, vl, vc, vS, vfd, vfl;
  verify->add_option("suite", suite, "lehmer | families | thm1 | rootloc | prop4 | thm2 | census | zhang | "
                                     "deg6 | thm4 | deg12 | properties")
      ->required();
  verify->add_option("--d", vd, "degree range a..b (thm1, prop4, rootloc)");
  verify->add_option("--l", vl, "norm range");
  verify->add_option("--c", vc, "c range");
  verify->add_option("--family-d", vfd, "degree range for families");
  verify->add_option("--family-l", vfl, "norm range for families");
  verify->add_option("--k", vo.k);
  verify->add_option("--S", vS, "S range for deg12");
  verify->add_option("--degree", vo.census_degree, "census degree (thm2)");
  verify->add_option("--height", vo.census_height, "census height (thm2)");
  verify->add_option("--jobs", vo.jobs);
  verify->add_option("--samples", vo.samples, "properties sample count");
  verify->add_option("--seed", vo.seed);
  verify->add_option("--deg12-precision-ceiling", vo.deg12_precision_ceiling);

  auto* census = app.add_subcommand("census", "enumerate irreducible polynomials and classify orbits");
  CensusTask task;
  std::string degrees = "2";
  census->add_option("--degree", degrees, "degree or range a..b")->capture_default_str();
  census->add_option("--height", task.height, "coefficient bound")->capture_default_str();
  census->add_flag("--unit-only", task.unit_only);
  census->add_option("--jobs", task.jobs)->capture_default_str();
  census->add_option("--out", task.out_path, "JSON-lines output; stdout when omitted");
  census->add_option("--checkpoint", task.checkpoint_path);
  census->add_option("--checkpoint-every", task.checkpoint_every)->capture_default_str();
  census->add_option("--shards", task.shards);
  census->add_option("--stop-after", task.stop_after, "stop after this many records (resume later)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    emit({{"help", app.help()}});
    return 0;
  } catch (const CLI::ParseError& e) {
    return fail(2, "UsageError", e.what());
  }

  OrbitOptions oo;
  oo.max_iter = max_iter;
  oo.budget = budget;

  try {
    if (*measure) {
      IntPolynomial f = measure_in.get();
      json factors = per_factor(f, budget, [&](const IntPolynomial& g, json& j) {
        AlgebraicNumber a = make_algebraic(g, root_for(g, measure_in.root), budget);
        MeasureResult m = mahler_measure(a, budget);
        NumberClass c = classify(a, budget);
        j["alpha"] = to_json(a);
        j["value"] = to_json(m.value);
        j["approx"] = approx(m.value, -64, budget).re.str(20);
        j["outside_count"] = m.outside_count;
        j["class"] = to_string(c.tag);
        j["fixed"] = algebraic_equals(m.value, a, budget);
      });
      emit({{"command", "measure"}, {"input", measure_in.text()}, {"factors", factors}});
      return 0;
    }
    if (*classify_cmd) {
      IntPolynomial f = classify_in.get();
      json factors = per_factor(f, budget, [&](const IntPolynomial& g, json& j) {
        AlgebraicNumber a = make_algebraic(g, root_for(g, classify_in.root), budget);
        j["alpha"] = to_json(a);
        j["classification"] = to_json(classify(a, budget));
        j["unit"] = is_unit(a);
        j["fixed"] = is_fixed_point(a, budget);
      });
      emit({{"command", "classify"}, {"input", classify_in.text()}, {"factors", factors}});
      return 0;
    }
    if (*orbit) {
      IntPolynomial f = orbit_in.get();
      oo.after_certificate = after_certificate;
      oo.find_square_relations = !no_relations;
      json factors = per_factor(f, budget, [&](const IntPolynomial& g, json& j) {
        OrbitRecord r = iterate(make_algebraic(g, root_for(g, orbit_in.root), budget), oo);
        j["orbit"] = to_json(r);
      });
      emit({{"command", "orbit"}, {"input", orbit_in.text()}, {"factors", factors}});
      return 0;
    }
    if (*family) {
      fs.name = family_from_string(family_name);
      json out = {{"command", "family"}, {"family", family_name}};
      if (fs.name == FamilyName::Deg12) {
        LargeOrbitUnit u = build_large_orbit_unit(fs.k, fs.S, budget);
        out["instance"] = to_json(u);
        if (family_iterate) out["orbit"] = to_json(iterate(u.value, oo));
      } else {
        FamilyInstance fi = family_polynomial(fs);
        out["instance"] = to_json(fi);
        if (fs.name == FamilyName::ThmSt) out["predicted_orbit_size"] = predict_orbit_size_prop4(fi.poly, budget);
        if (family_iterate) out["orbit"] = to_json(iterate(make_algebraic(fi.poly, fi.root_index, budget), oo));
      }
      emit(out);
      return 0;
    }
    if (*verify) {
      vo.budget = budget;
      vo.max_iter = max_iter;
      if (!vd.empty()) vo.d = parse_range(vd);
      if (!vl.empty()) vo.l = parse_range(vl);
      if (!vc.empty()) vo.c = parse_range(vc);
      if (!vfd.empty()) vo.family_d = parse_range(vfd);
      if (!vfl.empty()) vo.family_l = parse_range(vfl);
      if (!vS.empty()) vo.S = parse_range(vS);
      SuiteReport r;
      try {
        r = run_suite(suite, vo);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::ParameterOutOfRange) throw;
        // A suite that cannot finish under the budget counts as failed.
        r.suite = suite;
        r.check(false, {{"kind", to_string(e.kind())}, {"message", e.what()}});
      }
      json out = to_json(r);
      out["command"] = "verify";
      emit(out);
      return r.passed ? 0 : 1;
    }
    if (*census) {
      Range dr = parse_range(degrees);
      task.degree_min = static_cast<int>(dr.lo);
      task.degree_max = static_cast<int>(dr.hi);
      task.orbit = oo;
      std::function<void(const json&)> sink;
      if (task.out_path.empty()) sink = [](const json& rec) { std::cout << rec.dump() << '\n'; };
      CensusSummary s = run_census(task, sink);
      json out = {{"command", "census"}, {"summary", to_json(s)}};
      if (!task.out_path.empty()) out["out"] = task.out_path;
      // Summary stays on one line so the stream remains JSON lines.
      if (task.out_path.empty()) g_compact = true;
      emit(out);
      return 0;
    }
  } catch (const ParseError& e) {
    return fail(2, "ParseError", e.what(), {{"position", e.position()}});
  } catch (const Error& e) {
    switch (e.kind()) {
      case ErrorKind::ParameterOutOfRange:
      case ErrorKind::InvalidPolynomial:
      case ErrorKind::ReducibleInput:
      case ErrorKind::HypothesisViolated:
      case ErrorKind::CatalogMissingDegree:
      case ErrorKind::NotApplicable:
        return fail(2, to_string(e.kind()), e.what());
      default:
        return fail(3, to_string(e.kind()), e.what());
    }
  } catch (const std::exception& e) {
    return fail(3, "InternalError", e.what());
  }
  return fail(2, "UsageError", "no subcommand");
}
