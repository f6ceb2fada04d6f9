#include "plurikit/cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "plurikit/asymptotics.hpp"
#include "plurikit/bernstein.hpp"
#include "plurikit/circular.hpp"
#include "plurikit/csv.hpp"
#include "plurikit/errors.hpp"
#include "plurikit/extremal.hpp"
#include "plurikit/minimax.hpp"
#include "plurikit/orthopoly.hpp"
#include "plurikit/parallel.hpp"
#include "plurikit/quadrature.hpp"
#include "plurikit/tolerances.hpp"
#include "plurikit/version.hpp"

namespace plurikit::tol {

std::vector<std::pair<const char*, double>> all_guards() {
  return {
      {"lambda_grouping_rel", kLambdaGroupingRel},
      {"complex_halfplanes", static_cast<double>(kComplexHalfplanes)},
      {"complex_certificate_factor", 1.0 / std::cos(std::numbers::pi / kComplexHalfplanes)},
      {"qr_diag_guard_rel", kQrDiagGuardRel},
      {"green_dmax_default", static_cast<double>(kGreenDmaxDefault)},
      {"quad_doubling_rel", kQuadDoublingRel},
      {"contact_tol_default", kContactTolDefault},
      {"tail_budget_default", kTailBudgetDefault},
      {"weierstrass_max_fit_degree", static_cast<double>(kWeierstrassMaxFitDegree)},
      {"weierstrass_max_exp_terms", static_cast<double>(kWeierstrassMaxExpTerms)},
      {"robin_scale_max", kRobinScales[2]},
      {"simplex_pivot_tol", kSimplexPivotTol},
      {"simplex_enter_tol", kSimplexEnterTol},
      {"simplex_max_iter", static_cast<double>(kSimplexMaxIter)},
  };
}

}  // namespace plurikit::tol

namespace plurikit {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

double to_double(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw input_error(std::string("cannot parse number '") + s + "' in " + what);
  }
}

int to_int(const std::string& s, const char* what) {
  const double v = to_double(s, what);
  const int i = static_cast<int>(v);
  if (static_cast<double>(i) != v)
    throw input_error(std::string("expected integer in ") + what + ", got '" + s + "'");
  return i;
}

DomainSpec parse_domain(const std::string& spec) {
  const auto head = spec.substr(0, spec.find(':'));
  if (head == "interval") {
    const auto parts = split(spec.substr(spec.find(':') + 1), ',');
    if (spec.find(':') == std::string::npos || parts.size() != 2)
      throw input_error("domain interval needs 'interval:a,b'");
    return IntervalDomain{to_double(parts[0], "domain"), to_double(parts[1], "domain")};
  }
  if (head == "box") {
    const auto parts = split(spec.substr(spec.find(':') + 1), ',');
    if (parts.size() % 2 != 0 || parts.empty())
      throw input_error("domain box needs 'box:a1,b1[,a2,b2[,a3,b3]]'");
    BoxDomain box;
    for (std::size_t k = 0; k + 1 < parts.size(); k += 2)
      box.axes.emplace_back(to_double(parts[k], "domain"), to_double(parts[k + 1], "domain"));
    if (box.axes.size() > 3) throw input_error("domain box supports at most 3 axes");
    return box;
  }
  if (head == "circle") return CircleDomain{};
  if (head == "torus") {
    int dim = 2;
    if (spec.find(':') != std::string::npos) dim = to_int(spec.substr(spec.find(':') + 1), "domain");
    if (dim < 1 || dim > 3) throw input_error("torus dimension must be 1..3");
    return TorusDomain{dim};
  }
  throw input_error("unknown domain '" + spec +
                    "'; valid: interval:a,b, box:a1,b1,..., circle, torus[:dim]");
}

WeightFn parse_weight(const std::string& spec) {
  const auto colon = spec.find(':');
  const auto head = spec.substr(0, colon);
  if (head == "const") {
    if (colon == std::string::npos) throw input_error("weight const needs 'const:c'");
    const double c = to_double(spec.substr(colon + 1), "weight");
    return [c](const PointC&) { return c; };
  }
  if (head == "gauss") {
    if (colon == std::string::npos) throw input_error("weight gauss needs 'gauss:sigma'");
    const double sigma = to_double(spec.substr(colon + 1), "weight");
    if (!(sigma > 0.0)) throw input_error("weight gauss: sigma must be > 0");
    return [sigma](const PointC& z) {
      double n2 = 0.0;
      for (const Complex& c : z) n2 += std::norm(c);
      return std::exp(-n2 / (2.0 * sigma * sigma));
    };
  }
  if (head == "exp-poly") {
    if (colon == std::string::npos)
      throw input_error("weight exp-poly needs 'exp-poly:c0,c1,...'");
    std::vector<double> coef;
    for (const std::string& c : split(spec.substr(colon + 1), ','))
      coef.push_back(to_double(c, "weight"));
    // w = exp( sum over coordinates of Re g(z_j) ), g(z) = sum c_k z^k.
    return [coef](const PointC& z) {
      double s = 0.0;
      for (const Complex& zj : z) {
        Complex g(0.0, 0.0), p(1.0, 0.0);
        for (double ck : coef) {
          g += ck * p;
          p *= zj;
        }
        s += g.real();
      }
      return std::exp(s);
    };
  }
  throw input_error("unknown weight spec '" + spec +
                    "'; valid builtins: const:c, gauss:sigma, exp-poly:c0,c1,...");
}

Direction parse_theta(const std::string& spec, int dim) {
  std::vector<double> theta;
  for (const std::string& p : split(spec, ',')) theta.push_back(to_double(p, "theta"));
  if (static_cast<int>(theta.size()) != dim)
    throw input_error("theta needs one entry per domain dimension");
  return Direction::create(std::move(theta));
}

std::vector<int> parse_int_list(const std::string& spec, const char* what) {
  std::vector<int> out;
  for (const std::string& p : split(spec, ',')) out.push_back(to_int(p, what));
  if (out.empty()) throw input_error(std::string(what) + ": empty list");
  return out;
}

std::vector<PointC> parse_probes(const std::string& spec, int dim) {
  std::vector<PointC> out;
  for (const std::string& pt : split(spec, ';')) {
    if (pt.empty()) continue;
    const auto parts = split(pt, ',');
    PointC p(static_cast<std::size_t>(dim));
    if (static_cast<int>(parts.size()) == dim) {
      for (int j = 0; j < dim; ++j) p[static_cast<std::size_t>(j)] = Complex(to_double(parts[static_cast<std::size_t>(j)], "probe"), 0.0);
    } else if (static_cast<int>(parts.size()) == 2 * dim) {
      for (int j = 0; j < dim; ++j)
        p[static_cast<std::size_t>(j)] = Complex(to_double(parts[static_cast<std::size_t>(2 * j)], "probe"),
                                                 to_double(parts[static_cast<std::size_t>(2 * j + 1)], "probe"));
    } else {
      throw input_error("probe points need dim (real) or 2*dim (re,im) coordinates");
    }
    out.push_back(std::move(p));
  }
  if (out.empty()) throw input_error("no probe points parsed");
  return out;
}

struct Options {
  std::string domain = "interval:-1,1";
  int resolution = 201;
  std::string weight = "const:1";
  std::string measure = "uniform";
  std::string theta = "1";
  std::string js = "4,8,16";
  std::string degrees = "2,4,8";
  std::string family = "orthonormal";
  std::string freud;
  std::string probes;
  std::string output;
  int d = 4;
  int dmax = tol::kGreenDmaxDefault;
  int m = 0;
  int quad_nodes = 64;
  double tail_budget = tol::kTailBudgetDefault;
  std::uint64_t seed = 1;
};

struct Manifest {
  nlohmann::json j;

  Manifest(const std::string& subcommand, const Options& o) {
    j["subcommand"] = subcommand;
    j["library_version"] = kVersion;
    j["seed"] = o.seed;
    j["threads"] = worker_count();
    nlohmann::json cfg;
    cfg["domain"] = o.domain;
    cfg["resolution"] = o.resolution;
    cfg["weight"] = o.weight;
    cfg["measure"] = o.measure;
    cfg["theta"] = o.theta;
    cfg["js"] = o.js;
    cfg["degrees"] = o.degrees;
    cfg["family"] = o.family;
    cfg["freud"] = o.freud;
    cfg["probes"] = o.probes;
    cfg["d"] = o.d;
    cfg["dmax"] = o.dmax;
    cfg["m"] = o.m;
    cfg["quad_nodes"] = o.quad_nodes;
    cfg["tail_budget"] = o.tail_budget;
    j["config"] = cfg;
    nlohmann::json guards;
    for (const auto& [name, value] : tol::all_guards()) guards[name] = value;
    j["tolerances"] = guards;
  }

  void finish(const std::string& csv_path, std::size_t rows, double seconds,
              const std::string& partial = "") {
    j["outputs"] = {{"csv", csv_path}, {"rows", rows}};
    j["timing_seconds"] = seconds;
    if (!partial.empty()) j["partial_reason"] = partial;
    std::ofstream out(csv_path + ".manifest.json");
    out << j.dump(2) << "\n";
  }
};

WeightedSampleSet make_set(const Options& o) {
  return build_grid_set(parse_domain(o.domain), {o.resolution}, parse_weight(o.weight));
}

// "uniform" keeps the grid with equal masses; "gl:n" swaps in Gauss-Legendre
// nodes/weights on the interval/box (E and mu share the nodes).
std::pair<WeightedSampleSet, DiscreteMeasure> make_set_and_measure(const Options& o) {
  const DomainSpec dom = parse_domain(o.domain);
  const WeightFn wf = parse_weight(o.weight);
  if (o.measure == "uniform") {
    WeightedSampleSet set = build_grid_set(dom, {o.resolution}, wf);
    DiscreteMeasure mu = uniform_measure(set);
    return {std::move(set), std::move(mu)};
  }
  if (o.measure.rfind("gl:", 0) == 0) {
    const int nodes = to_int(o.measure.substr(3), "measure");
    std::vector<std::pair<double, double>> box;
    if (const auto* iv = std::get_if<IntervalDomain>(&dom)) {
      box.push_back({iv->a, iv->b});
    } else if (const auto* bx = std::get_if<BoxDomain>(&dom)) {
      box = bx->axes;
    } else {
      throw input_error("measure gl:<nodes> requires an interval or box domain");
    }
    DiscreteMeasure mu = tensor_gauss_legendre(box, nodes, nullptr);
    std::vector<double> weights;
    weights.reserve(mu.size());
    for (const PointC& p : mu.points) weights.push_back(wf(p));
    WeightedSampleSet set =
        WeightedSampleSet::create(mu.dim, mu.points, std::move(weights));
    return {std::move(set), std::move(mu)};
  }
  throw input_error("unknown measure spec '" + o.measure + "'; valid: uniform, gl:<nodes>");
}

int run_tcheby(const Options& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const WeightedSampleSet set = make_set(o);
  const Direction theta = parse_theta(o.theta, set.dim);
  const std::vector<int> js = parse_int_list(o.js, "js");
  int prev = 0;
  for (int j : js) {
    if (j < 1 || j <= prev) throw input_error("js must be ascending and >= 1");
    prev = j;
  }

  std::vector<TchebyshevResult> results(js.size());
  parallel_for_ordered(js.size(), [&](std::size_t k) {
    results[k] = solve_minimax(set, direction_sequence(theta, js[k]));
  });

  Manifest man("tcheby", o);
  const std::string path = o.output.empty() ? "plurikit_tcheby.csv" : o.output;
  std::ofstream out(path);
  if (!out) throw input_error("cannot open output file " + path);
  CsvWriter csv(out, {"j", "d", "minimax_value", "dth_root", "status", "certificate_factor"});
  for (std::size_t k = 0; k < js.size(); ++k) {
    const TchebyshevResult& r = results[k];
    csv.row({std::to_string(js[k]), std::to_string(r.alpha.degree()),
             format_double(r.minimax_value), format_double(r.dth_root), to_string(r.status),
             format_double(r.certificate_factor)});
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  man.finish(path, csv.rows(), secs);
  std::cout << "tcheby: wrote " << csv.rows() << " rows to " << path << "\n";
  return 0;
}

int run_ortho(const Options& o) {
  const auto t0 = std::chrono::steady_clock::now();
  auto [set, mu] = make_set_and_measure(o);
  if (o.d < 1) throw input_error("ortho: --d must be >= 1");
  const OrthoResult r = orthonormalize(set, mu, o.d);

  Manifest man("ortho", o);
  const std::string path = o.output.empty() ? "plurikit_ortho.csv" : o.output;
  std::ofstream out(path);
  if (!out) throw input_error("cannot open output file " + path);
  CsvWriter csv(out, {"alpha", "d", "leading", "l2_min", "sup_of_q", "condition_estimate"});
  for (const auto& [alpha, lead] : r.leading) {
    csv.row({alpha.to_string(), std::to_string(o.d), format_double(lead),
             format_double(r.l2_minima.at(alpha)),
             format_double(l2_optimal_sup_norm(set, r, alpha)),
             format_double(r.condition_estimate)});
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  man.finish(path, csv.rows(), secs);
  std::cout << "ortho: wrote " << csv.rows() << " rows to " << path << "\n";
  return 0;
}

int run_green(const Options& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const WeightedSampleSet set = make_set(o);
  const DiscreteMeasure mu = uniform_measure(set);
  const GreenApprox g = green_weighted(set, mu, o.dmax);

  std::vector<PointC> probes;
  if (!o.probes.empty()) {
    probes = parse_probes(o.probes, set.dim);
  } else {
    const std::size_t stride = std::max<std::size_t>(1, set.size() / 16);
    for (std::size_t i = 0; i < set.size(); i += stride) {
      PointC p = set.points[i];
      for (Complex& c : p) c *= 1.5;
      probes.push_back(std::move(p));
    }
  }

  Manifest man("green", o);
  const std::string path = o.output.empty() ? "plurikit_green.csv" : o.output;
  std::ofstream out(path);
  if (!out) throw input_error("cannot open output file " + path);
  std::vector<std::string> header;
  for (int j = 1; j <= set.dim; ++j) {
    header.push_back("re(z" + std::to_string(j) + ")");
    header.push_back("im(z" + std::to_string(j) + ")");
  }
  header.push_back("value");
  header.push_back("argmax_d");
  CsvWriter csv(out, header);
  for (const PointC& z : probes) {
    const auto [v, arg] = g.value_with_argmax(z);
    std::vector<std::string> cells;
    for (const Complex& c : z) {
      cells.push_back(format_double(c.real()));
      cells.push_back(format_double(c.imag()));
    }
    cells.push_back(format_double(v));
    cells.push_back(std::to_string(arg));
    csv.row(cells);
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  man.finish(path, csv.rows(), secs);
  std::cout << "green: wrote " << csv.rows() << " rows to " << path << "\n";
  return 0;
}

int run_bm(const Options& o) {
  const auto t0 = std::chrono::steady_clock::now();
  auto [set, mu] = make_set_and_measure(o);
  BMFamily family;
  if (o.family == "orthonormal") {
    family = BMFamily::orthonormal;
  } else if (o.family == "tchebyshev") {
    family = BMFamily::tchebyshev;
  } else if (o.family == "random-monic") {
    family = BMFamily::random_monic;
  } else {
    throw input_error("unknown family '" + o.family +
                      "'; valid: orthonormal, tchebyshev, random-monic");
  }
  const BMTrace trace = bm_trace(set, mu, parse_int_list(o.degrees, "degrees"), family, o.seed);

  Manifest man("bm", o);
  const std::string path = o.output.empty() ? "plurikit_bm.csv" : o.output;
  std::ofstream out(path);
  if (!out) throw input_error("cannot open output file " + path);
  CsvWriter csv(out, {"d", "ratio", "dth_root", "family"});
  for (std::size_t k = 0; k < trace.degrees.size(); ++k) {
    csv.row({std::to_string(trace.degrees[k]), format_double(trace.ratios[k]),
             format_double(trace.dth_roots[k]), to_string(trace.family)});
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  man.finish(path, csv.rows(), secs);
  std::cout << "bm: wrote " << csv.rows() << " rows to " << path << "\n";
  return 0;
}

int run_lift_check(const Options& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const WeightedSampleSet set = make_set(o);
  const DiscreteMeasure mu = uniform_measure(set);
  const int dmax = o.dmax;
  const int m = o.m > 0 ? o.m : 2 * dmax + 1;
  const CircularSample z = lift_circular(set, m);
  const DiscreteMeasure nu = product_measure(set, mu, m);

  Manifest man("lift-check", o);
  man.j["config"]["m"] = m;
  const std::string path = o.output.empty() ? "plurikit_liftcheck.csv" : o.output;
  std::ofstream out(path);
  if (!out) throw input_error("cannot open output file " + path);
  CsvWriter csv(out, {"check", "d", "max_residual"});

  for (int d = 1; d <= dmax; ++d) {
    const OrthoResult r = orthonormalize(set, mu, d);
    double r_sup = 0.0, r_l2 = 0.0;
    for (const MultiIndex& alpha : r.basis_order) {
      const Poly p = orthonormal_polynomial(r, alpha);
      const double nrm_e = weighted_sup_norm(set, p, d);
      const HomogeneousPoly ph = homogenize(p, d);
      double nrm_z = 0.0;
      double l2_nu_sq = 0.0;
      for (std::size_t s = 0; s < z.samples.size(); ++s) {
        const double av = std::abs(eval_homogeneous(ph, z.samples[s]));
        nrm_z = std::max(nrm_z, av);
        l2_nu_sq += nu.masses[s] * av * av;
      }
      r_sup = std::max(r_sup, std::abs(nrm_e - nrm_z) / nrm_e);
      const double l2_mu = weighted_l2_norm(set, mu, p, d);  // 1 by construction
      r_l2 = std::max(r_l2, std::abs(std::sqrt(l2_nu_sq) - l2_mu) / l2_mu);
    }
    csv.row({"sup-norm", std::to_string(d), format_double(r_sup)});
    csv.row({"l2-norm", std::to_string(d), format_double(r_l2)});
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  man.finish(path, csv.rows(), secs);
  std::cout << "lift-check: wrote " << csv.rows() << " rows to " << path << "\n";
  return 0;
}

int run_asym(const Options& o) {
  const auto t0 = std::chrono::steady_clock::now();
  AsymptoticsReport rep;
  if (!o.freud.empty()) {
    const FreudProblem fp = FreudProblem::create(parse_freud_polynomial(o.freud));
    const Direction theta = parse_theta(o.theta, fp.h.dim);
    GridSpec grid;
    grid.resolution = o.resolution;
    grid.quad_nodes_initial = o.quad_nodes;
    grid.tail_budget = o.tail_budget;
    rep = exponential_weight_trace(fp, theta, parse_int_list(o.js, "js"), grid);
  } else {
    auto [set, mu] = make_set_and_measure(o);
    const Direction theta = parse_theta(o.theta, set.dim);
    rep = leading_coefficient_trace(set, mu, theta, parse_int_list(o.js, "js"));
  }
  if (rep.js.empty())
    throw numeric_error("asym: no j completed (" + rep.partial_reason + ")");

  Manifest man("asym", o);
  const std::string path = o.output.empty() ? "plurikit_asym.csv" : o.output;
  std::ofstream out(path);
  if (!out) throw input_error("cannot open output file " + path);
  CsvWriter csv(out, {"j", "d", "lhs", "rhs", "gap", "R", "condition_estimate"});
  for (std::size_t k = 0; k < rep.js.size(); ++k) {
    csv.row({std::to_string(rep.js[k]), std::to_string(rep.js[k]), format_double(rep.lhs[k]),
             format_double(rep.rhs[k]), format_double(rep.gap[k]), format_double(rep.radii[k]),
             format_double(rep.condition_estimates[k])});
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  man.finish(path, csv.rows(), secs, rep.partial_reason);
  std::cout << "asym: wrote " << csv.rows() << " rows to " << path << "\n";
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"plurikit: weighted polynomial extremal problems at desk scale"};

  Options o;
  std::string chosen;
  std::string config_file;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_file, "key = value config file; flags override");
    sub->add_option("--domain", o.domain, "interval:a,b | box:a1,b1,... | circle | torus[:dim]");
    sub->add_option("--resolution", o.resolution, "grid points per axis");
    sub->add_option("--weight", o.weight, "const:c | gauss:sigma | exp-poly:c0,c1,...");
    sub->add_option("--seed", o.seed, "seed for randomized checks");
    sub->add_option("-o,--output", o.output, "CSV output path");
    sub->callback([&chosen, sub]() { chosen = sub->get_name(); });
  };

  CLI::App* tch = app.add_subcommand("tcheby", "directional Tchebyshev d-th-root trace");
  add_common(tch);
  tch->add_option("--theta", o.theta, "direction, comma separated, sums to 1");
  tch->add_option("--js", o.js, "ascending degrees, comma separated");

  CLI::App* ort = app.add_subcommand("ortho", "orthonormal leading coefficients");
  add_common(ort);
  ort->add_option("--d", o.d, "degree");
  ort->add_option("--measure", o.measure, "uniform | gl:<nodes>");

  CLI::App* grn = app.add_subcommand("green", "Green-function approximant values");
  add_common(grn);
  grn->add_option("--dmax", o.dmax, "family degree cap");
  grn->add_option("--probe", o.probes, "probe points 're,im,...;...' (or dim reals each)");

  CLI::App* bm = app.add_subcommand("bm", "Bernstein-Markov ratio trace");
  add_common(bm);
  bm->add_option("--degrees", o.degrees, "ascending degrees, comma separated");
  bm->add_option("--family", o.family, "orthonormal | tchebyshev | random-monic");
  bm->add_option("--measure", o.measure, "uniform | gl:<nodes>");

  CLI::App* lift = app.add_subcommand("lift-check", "circular-lift norm identities");
  add_common(lift);
  lift->add_option("--dmax", o.dmax, "degree cap");
  lift->add_option("--m", o.m, "circle sample count (default 2*dmax+1)");

  CLI::App* asym = app.add_subcommand("asym", "leading-coefficient asymptotics");
  add_common(asym);
  asym->add_option("--freud", o.freud, "homogeneous H, e.g. x^2 or x1^4+x2^4");
  asym->add_option("--theta", o.theta, "direction");
  asym->add_option("--js", o.js, "ascending j values");
  asym->add_option("--quad-nodes", o.quad_nodes, "initial quadrature nodes per axis");
  asym->add_option("--tail-budget", o.tail_budget, "truncation tail budget");
  asym->add_option("--measure", o.measure, "uniform | gl:<nodes> (non-freud runs)");

  app.require_subcommand(0, 1);

  // Line-based "key = value" config: keys become --key flags spliced in
  // right after the subcommand, skipping any key already given on the
  // command line (flags override the file).
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  try {
    std::string cfg_path;
    std::size_t sub_pos = args.size();
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (sub_pos == args.size() && !args[i].empty() && args[i][0] != '-') sub_pos = i;
      if (args[i] == "--config" && i + 1 < args.size()) cfg_path = args[i + 1];
      if (args[i].rfind("--config=", 0) == 0) cfg_path = args[i].substr(9);
    }
    if (!cfg_path.empty()) {
      std::ifstream file(cfg_path);
      if (!file) throw input_error("cannot open config file " + cfg_path);
      std::vector<std::string> extra;
      std::string line;
      auto trim = [](std::string s) {
        const auto a = s.find_first_not_of(" \t\r");
        const auto b = s.find_last_not_of(" \t\r");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
      };
      while (std::getline(file, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
          throw input_error("config file lines must be 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
          value = value.substr(1, value.size() - 2);
        if (key.empty()) throw input_error("config file: empty key");
        const std::string flag = "--" + key;
        bool on_cmdline = false;
        for (const std::string& a : args) {
          if (a == flag || a.rfind(flag + "=", 0) == 0) on_cmdline = true;
        }
        if (!on_cmdline) {
          extra.push_back(flag);
          extra.push_back(value);
        }
      }
      const auto at = args.begin() + static_cast<std::ptrdiff_t>(
                                         sub_pos == args.size() ? args.size() : sub_pos + 1);
      args.insert(at, extra.begin(), extra.end());
    }
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }

  std::vector<const char*> cargs;
  cargs.push_back(argv[0]);
  for (const std::string& a : args) cargs.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(cargs.size()), cargs.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (chosen == "tcheby") return run_tcheby(o);
    if (chosen == "ortho") return run_ortho(o);
    if (chosen == "green") return run_green(o);
    if (chosen == "bm") return run_bm(o);
    if (chosen == "lift-check") return run_lift_check(o);
    if (chosen == "asym") return run_asym(o);
    std::cerr << app.help();
    return 2;
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const numeric_error& e) {
    std::cerr << "numerical guard: " << e.what();
    if (e.condition_estimate > 0.0)
      std::cerr << " (condition estimate " << format_double(e.condition_estimate) << ")";
    std::cerr << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace plurikit
