#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <stdexcept>

#include "berezin/analysis.hpp"
#include "berezin/closed_form.hpp"
#include "berezin/geometry.hpp"
#include "berezin/inequality.hpp"
#include "berezin/io.hpp"
#include "berezin/matrix_oracle.hpp"
#include "berezin/random.hpp"

namespace berezin::cli {

namespace {

using Checks = std::vector<CheckResult>;

CheckResult within(std::string name, double deviation, double tolerance, std::string detail = "") {
  return {std::move(name), deviation, tolerance, deviation <= tolerance, std::move(detail)};
}

CheckResult holds(std::string name, bool ok, std::string detail = "") {
  return {std::move(name), ok ? 0.0 : 1.0, 0.0, ok, std::move(detail)};
}

std::string verdict_counts(const std::vector<SweepEntry>& entries) {
  int mismatches = 0;
  std::string first;
  for (const auto& e : entries) {
    if (e.expected && *e.expected != e.report.verdict) {
      if (mismatches++ == 0) first = " first at " + format_complex(e.parameter);
    }
  }
  return std::to_string(entries.size()) + " parameters, " + std::to_string(mismatches) +
         " mismatches" + first;
}

std::vector<Complex> real_alphas() {
  std::vector<Complex> out;
  for (int k = 0; k <= 20; ++k) out.emplace_back(-1.0 + 0.1 * k, 0.0);
  out[10] = 0.0;
  return out;
}

std::vector<Complex> nonreal_alphas() {
  return {{0.25, 0.25}, {0.0, 0.5}, {-0.5, 0.5}, {0.5, -0.3}, {0.1, 0.9}, {-0.7, -0.1}, {0.0, -1.0}, {0.6, 0.8}};
}

double max_abs_deviation(const RangeSample& s, Complex target) {
  return (s.values.array() - target).abs().maxCoeff();
}

double theta_spread(const RangeSample& s) {
  double dev = 0.0;
  for (Eigen::Index i = 0; i < s.values.rows(); ++i) {
    for (Eigen::Index j = 1; j < s.values.cols(); ++j) {
      dev = std::max(dev, std::abs(s.values(i, j) - s.values(i, 0)));
    }
  }
  return dev;
}

Checks elliptic_suite(const SpaceSpec& space) {
  Checks out;
  const PolarGrid grid = PolarGrid::default_grid();
  const auto s1 = sample_range(space, Symbol::elliptic(1.0), grid);
  out.push_back(within("alpha = 1 gives the constant range {1}", max_abs_deviation(s1, 1.0), 1e-12));

  const auto s2 = sample_range(space, Symbol::elliptic(-0.5), grid);
  const double max_im = s2.values.imag().cwiseAbs().maxCoeff();
  const double min_re = s2.values.real().minCoeff();
  const double max_re = s2.values.real().maxCoeff();
  out.push_back(within("alpha = -0.5 samples are real", max_im, 1e-12));
  out.push_back(holds("alpha = -0.5 samples lie in (0, 1]", min_re > 0.0 && max_re <= 1.0 + 1e-15,
                      "min " + format_double(min_re) + ", max " + format_double(max_re)));

  double spread = 0.0;
  for (Complex a : {Complex(0.25, 0.25), Complex(-0.5, 0.0), Complex(0.0, 0.7), Complex(0.6, -0.8)}) {
    spread = std::max(spread, theta_spread(sample_range(space, Symbol::elliptic(a), grid)));
  }
  out.push_back(within("transform independent of theta", spread, 1e-12));

  if (space.kind == SpaceSpec::Kind::Bergman) {
    double dev = 0.0;
    for (Complex a : {Complex(0.25, 0.25), Complex(-0.5, 0.0), Complex(0.0, 1.0)}) {
      const Symbol sym = Symbol::elliptic(a);
      for (const double r : {0.0, 0.3, 0.7, 0.95}) {
        for (const double t : {0.0, 1.0, 4.0}) {
          const DiskPoint z = DiskPoint::polar(r, t);
          dev = std::max(dev, std::abs(bergman_transform(sym, z) - std::pow(hardy_transform(sym, z), 2)));
        }
      }
    }
    out.push_back(within("Bergman transform is the square of the Hardy transform", dev, 1e-12));
  }

  const auto real_sweep = run_sweep(space, SweepFamily::Elliptic, real_alphas());
  out.push_back(holds("real alpha in [-1, 1] gives CONVEX", sweep_matches(real_sweep),
                      verdict_counts(real_sweep)));
  const auto complex_sweep = run_sweep(space, SweepFamily::Elliptic, nonreal_alphas());
  out.push_back(holds("non-real alpha gives NOT_CONVEX", sweep_matches(complex_sweep),
                      verdict_counts(complex_sweep)));
  const auto circle = run_sweep(space, SweepFamily::Elliptic, unit_circle_lattice(8));
  out.push_back(holds("|alpha| = 1 is CONVEX only at alpha = 1, -1", sweep_matches(circle),
                      verdict_counts(circle)));
  return out;
}

Checks blaschke_suite() {
  Checks out;
  const SpaceSpec bergman = SpaceSpec::bergman();
  Rng rng(derive_seed(42, 7));

  double lemma_dev = 0.0;
  double conj_dev = 0.0;
  const PolarGrid grid = PolarGrid::uniform_r(50, 50, 0.99);
  for (int k = 0; k < 20; ++k) {
    const Complex alpha = std::polar(std::sqrt(uniform_real(rng, 0.0, 0.9)), uniform_real(rng, 0.0, kTwoPi));
    const Symbol sym = Symbol::blaschke(alpha);
    for (const double r : grid.r_values) {
      for (const double t : grid.theta_values) {
        const DiskPoint z = DiskPoint::polar(r, t);
        const Complex direct = bergman_transform(sym, z);
        const auto [re, im] = blaschke_real_imag(alpha, z);
        lemma_dev = std::max(lemma_dev, std::abs(Complex(re, im) - direct));
        const Complex mirrored = bergman_transform(sym, conjugation_partner(sym, z));
        conj_dev = std::max(conj_dev, std::abs(mirrored - std::conj(direct)));
      }
    }
  }
  out.push_back(within("real/imaginary decomposition matches direct evaluation", lemma_dev, 1e-12,
                       "50x50 grid, 20 random alpha"));
  out.push_back(within("conjugation symmetry across the line through alpha", conj_dev, 1e-12));

  double squared_dev = 0.0;
  double printed_dev = 0.0;
  for (Complex alpha : {Complex(0.3, 0.0), Complex(0.5, 0.0), Complex(0.0, 0.7)}) {
    const Symbol sym = Symbol::blaschke(alpha);
    const double m = std::abs(alpha);
    for (int k = 0; k < 50; ++k) {
      const double r = (-1.0 + 2.0 * k / 49.0) * 0.98 / m;
      const Complex w = r * alpha;
      const Complex c = bergman_transform(sym, DiskPoint::cartesian(w));
      const double base = 1.0 - r * m * m;
      squared_dev = std::max(squared_dev, std::abs(c - base * base));
      printed_dev = std::max(printed_dev, std::abs(c - std::pow(base, 4)));
    }
  }
  out.push_back(within("real-axis identity (1 - r|alpha|^2)^2", squared_dev, 1e-12));
  out.push_back(within("real-axis identity (1 - r|alpha|^2)^4 as printed", printed_dev, 1e-12,
                       "the fourth power does not match the transform"));

  const auto s0 = sample_range(bergman, Symbol::blaschke(0.0), PolarGrid::default_grid());
  out.push_back(within("alpha = 0 gives the constant range {1}", max_abs_deviation(s0, 1.0), 1e-12));

  double generic_dev = 0.0;
  double fixed_dev = 0.0;
  bool converged = true;
  for (Complex alpha : {Complex(0.5, 0.0), Complex(0.3, -0.4), Complex(0.0, 0.7)}) {
    const Symbol sym = Symbol::blaschke(alpha);
    const double psi = std::arg(alpha);
    for (const double offset : {0.5, 1.3, 2.0, 3.9, 5.5}) {
      const BoundaryLimit lim = boundary_limit(bergman, sym, psi + offset);
      generic_dev = std::max(generic_dev, std::abs(lim.value));
      converged = converged && lim.converged;
    }
    const double m = std::abs(alpha);
    const BoundaryLimit at_psi = boundary_limit(bergman, sym, psi);
    const BoundaryLimit at_opposite = boundary_limit(bergman, sym, psi + kPi);
    fixed_dev = std::max({fixed_dev, std::abs(at_psi.value - (1 - m) * (1 - m)),
                          std::abs(at_opposite.value - (1 + m) * (1 + m))});
  }
  out.push_back(within("boundary limit 0 for alpha != 0 off the fixed-point directions", generic_dev, 1e-3));
  out.push_back(holds("boundary sequences converge", converged));
  out.push_back(within("boundary limit (1 -+ |alpha|)^2 along the fixed-point directions", fixed_dev, 1e-3));
  double zero_dev = 0.0;
  for (const double t : {0.0, 1.0, 2.5, 4.0}) {
    zero_dev = std::max(zero_dev, std::abs(boundary_limit(bergman, Symbol::blaschke(0.0), t).value - 1.0));
  }
  out.push_back(within("boundary limit 1 for alpha = 0", zero_dev, 1e-3));

  const auto s5 = sample_range(bergman, Symbol::blaschke(0.5), PolarGrid::default_grid());
  const ConvexityReport rep = range_report(s5);
  out.push_back(holds("alpha = 0.5 range is NOT_CONVEX", rep.verdict == Verdict::NotConvex,
                      "coverage " + format_double(rep.coverage_ratio)));
  return out;
}

Checks automorphism_suite() {
  Checks out;
  for (const SpaceSpec space : {SpaceSpec::hardy(), SpaceSpec::bergman()}) {
    const auto entries = run_sweep(space, SweepFamily::AutomorphismB0, unit_circle_lattice(16));
    out.push_back(holds(space.name() + ": b = 0 range CONVEX exactly at a = 1, -1, i, -i",
                        sweep_matches(entries), verdict_counts(entries)));
  }
  double dev = 0.0;
  for (const Complex a : unit_circle_lattice(16)) {
    const Symbol aut = Symbol::automorphism(a, 0.0);
    const Symbol ell = Symbol::elliptic(a * a);
    for (const double r : {0.2, 0.6, 0.9}) {
      const DiskPoint z = DiskPoint::polar(r, 0.7);
      dev = std::max(dev, std::abs(hardy_transform(aut, z) - hardy_transform(ell, z)));
    }
  }
  out.push_back(within("b = 0 automorphism acts as the rotation by a^2", dev, 1e-12));
  return out;
}

Checks model_suite() {
  Checks out;
  const PolarGrid grid = PolarGrid::uniform_r2(400, 64, 0.9999);
  double worst = 0.0;
  std::string detail;
  for (int n = 2; n <= 8; ++n) {
    const double target = (n - 1.0) / n;
    const double ber = berezin_number(model_berezin_range(n, grid));
    const double dev = ber > target ? ber - target : (target - ber <= 2e-3 ? 0.0 : target - ber);
    worst = std::max(worst, dev);
    char buf[64];
    std::snprintf(buf, sizeof(buf), "n=%d: %.6f ", n, ber);
    detail += buf;
  }
  out.push_back(within("sampled Berezin number in [(n-1)/n - 2e-3, (n-1)/n], n = 2..8", worst, 0.0, detail));
  const auto one = model_berezin_range(1, grid);
  out.push_back(within("n = 1 range is {0}", one.max_modulus(), 0.0));

  const auto two = model_berezin_range(2, grid);
  const auto hull = convex_hull(two.points());
  std::vector<PlanarPoint> circle;
  for (int k = 0; k < 4096; ++k) circle.push_back({0.5 * std::cos(kTwoPi * k / 4096), 0.5 * std::sin(kTwoPi * k / 4096)});
  const double h = hausdorff_distance(densify_polygon(hull, 1e-3), circle);
  out.push_back(within("n = 2 range hull within 1e-2 of the disk of radius 1/2", h, 1e-2));

  double formula = 0.0;
  for (const double r : {0.0, 0.3, 0.6, 0.9}) {
    const DiskPoint l = DiskPoint::polar(r, 1.1);
    const Complex v = berezin_from_matrix(model_operator_matrix(2), SpaceSpec::model(2), l);
    formula = std::max(formula, std::abs(v - l.z() / (1.0 + r * r)));
  }
  out.push_back(within("n = 2 transform equals lambda / (1 + |lambda|^2)", formula, 1e-15));
  return out;
}

Checks matrix_diag_suite() {
  Checks out;
  const std::vector<Complex> a_diag{1.0, 2.0};
  CMatrix c(2, 2);
  c << 1.5, 0.5, 0.5, 1.5;
  const std::vector<Complex> c_diag{c(0, 0), c(1, 1)};
  const auto ber_a = l2_berezin_set(a_diag);
  const auto ber_c = l2_berezin_set(c_diag);
  out.push_back(holds("Ber(diag(1,2)) = {1, 2}", ber_a.size() == 2 && ber_a[0] == 1.0 && ber_a[1] == 2.0));
  out.push_back(holds("Ber((1/2)[[3,1],[1,3]]) = {3/2}", ber_c.size() == 1 && ber_c[0] == 1.5));

  auto to_points = [](const std::vector<Complex>& v) {
    std::vector<PlanarPoint> p;
    for (const Complex z : v) p.push_back({z.real(), z.imag()});
    return p;
  };
  out.push_back(holds("exact-finite verdicts: {1,2} NOT_CONVEX, {3/2} CONVEX",
                      convexity_report(to_points(ber_a), 1e-9, true).verdict == Verdict::NotConvex &&
                          convexity_report(to_points(ber_c), 1e-9, true).verdict == Verdict::Convex));

  Rng rng(derive_seed(42, 3));
  int mismatches = 0;
  for (int t = 0; t < 100; ++t) {
    const int d = uniform_int(rng, 1, 6);
    CMatrix m = random_complex_gaussian(d, d, rng);
    const bool constant = t % 2 == 0;
    if (constant) m.diagonal().setConstant(m(0, 0));
    std::vector<Complex> diag;
    for (int i = 0; i < d; ++i) diag.push_back(m(i, i));
    const auto rep = convexity_report(to_points(l2_berezin_set(diag)), 1e-9, true);
    const bool predicted = constant || d == 1;
    if ((rep.verdict == Verdict::Convex) != predicted) ++mismatches;
  }
  out.push_back(holds("100 random matrices: CONVEX iff constant diagonal", mismatches == 0,
                      std::to_string(mismatches) + " mismatches"));
  return out;
}

std::vector<Symbol> catalog() {
  return {Symbol::elliptic(0.5),          Symbol::elliptic(-0.5),
          Symbol::elliptic({0.25, 0.25}), Symbol::elliptic({0.0, 1.0}),
          Symbol::automorphism(1.25, 0.75), Symbol::automorphism({0.0, 1.25}, {0.45, 0.6}),
          Symbol::automorphism({0.0, 1.0}, 0.0),
          Symbol::blaschke(0.0),          Symbol::blaschke(0.5),
          Symbol::blaschke({0.3, -0.4}),  Symbol::blaschke({0.0, -0.7})};
}

Checks oracle_suite() {
  Checks out;
  Rng rng(derive_seed(42, 5));
  std::vector<DiskPoint> points;
  for (int k = 0; k < 100; ++k) {
    points.push_back(DiskPoint::polar(0.8 * std::sqrt(uniform_real(rng, 0.0, 1.0)), uniform_real(rng, 0.0, kTwoPi)));
  }
  double err256 = 0.0;
  double growth = 0.0;
  for (const SpaceSpec space : {SpaceSpec::hardy(), SpaceSpec::bergman()}) {
    for (const Symbol& sym : catalog()) {
      const OperatorMatrix m256 = composition_matrix(space, sym, 256);
      const OperatorMatrix m512 = composition_matrix(space, sym, 512);
      for (const DiskPoint& w : points) {
        const Complex exact = closed_form_transform(space, sym, w);
        const double e1 = std::abs(berezin_from_matrix(m256, space, w) - exact);
        const double e2 = std::abs(berezin_from_matrix(m512, space, w) - exact);
        err256 = std::max(err256, e1);
        growth = std::max(growth, e2 - e1);
      }
    }
  }
  out.push_back(within("closed form vs matrix oracle at N = 256, |w| <= 0.8", err256, 1e-8));
  out.push_back(within("error at N = 512 no larger than at N = 256", growth, 1e-14));

  std::size_t outside = 0;
  std::size_t total = 0;
  for (const SpaceSpec space : {SpaceSpec::hardy(), SpaceSpec::bergman()}) {
    for (const Symbol& sym : catalog()) {
      const OperatorMatrix m = composition_matrix(space, sym, 64);
      const auto hull = convex_hull(numerical_range_boundary(m, 180));
      for (const DiskPoint& w : points) {
        const Complex v = truncated_berezin(m, space, w);
        ++total;
        if (!hull_contains(hull, {v.real(), v.imag()}, 1e-6)) ++outside;
      }
    }
  }
  out.push_back(holds("Berezin samples inside the numerical-range hull + 1e-6", outside == 0,
                      std::to_string(outside) + " of " + std::to_string(total) + " outside"));
  return out;
}

TrialReport trials(ScalarFunction f, MapFamily map, InequalityCheck check, int count,
                   bool diag_only = false) {
  TrialConfig c;
  c.function = f;
  c.map = map;
  c.check = check;
  c.trials = count;
  c.diag_only = diag_only;
  return run_trials(c);
}

Checks inequalities_suite() {
  Checks out;
  const auto p2 = ScalarFunction::power(2.0);
  const auto p3 = ScalarFunction::power(3.0);
  const auto nc = ScalarFunction::neg_const();
  const std::vector<MapFamily> maps{MapFamily::Identity, MapFamily::Pinching, MapFamily::Compression};

  for (const auto& f : {p2, p3, nc}) {
    const auto r = trials(f, MapFamily::Identity, InequalityCheck::Pointwise, 100);
    out.push_back(within("superquadratic inequality, " + f.name(), std::max(0.0, -r.min_slack),
                         kPointwiseTolerance));
  }

  Rng rng(derive_seed(42, 11));
  double popoviciu = 0.0;
  double linear = 0.0;
  const auto lin = ScalarFunction::power(1.0);
  for (int k = 0; k < 10000; ++k) {
    const double x = uniform_real(rng, 0, 4), y = uniform_real(rng, 0, 4), z = uniform_real(rng, 0, 4);
    for (const auto& f : {p2, p3}) popoviciu = std::max(popoviciu, -scalar_popoviciu_check(f, x, y, z));
    linear = std::max(linear, std::abs(scalar_popoviciu_check(lin, x, y, z)));
  }
  out.push_back(within("scalar three-point inequality", std::max(0.0, popoviciu), 1e-12));
  out.push_back(within("scalar three-point equality for f(t) = t", linear, 1e-12));

  double c1 = 0.0;
  double props = 0.0;
  double op = 0.0;
  for (const auto& f : {p2, p3}) {
    for (const MapFamily m : maps) {
      c1 = std::max(c1, -trials(f, m, InequalityCheck::CorollaryC1, 200).min_slack);
      props = std::max(props, -trials(f, m, InequalityCheck::Propositions, 200).min_slack);
      op = std::max(op, -trials(f, m, InequalityCheck::Popoviciu, 200).min_slack);
    }
  }
  out.push_back(within("corollary bound over random trials", std::max(0.0, c1), kOperatorSlackTolerance));
  out.push_back(within("Berezin-number bounds over random trials", std::max(0.0, props), kOperatorSlackTolerance));
  out.push_back(within("operator three-point inequality as printed", std::max(0.0, op), kOperatorSlackTolerance,
                       "fails already for scalars: f = t^2, (0, 0, 3)"));

  double reduction = 0.0;
  Rng rr(derive_seed(42, 13));
  for (int k = 0; k < 100; ++k) {
    const int d = uniform_int(rr, 2, 8);
    const HermitianOperator a = random_psd(d, rr);
    const PositiveMap phi = PositiveMap::compression(random_isometry(d, uniform_int(rr, 1, d), rr));
    const auto s4 = popoviciu_operator_slacks(p3, phi, a, a, a);
    const auto s16 = corollary_c1_slacks(p3, phi, a);
    for (std::size_t i = 0; i < s4.size(); ++i) reduction = std::max(reduction, std::abs(s4[i] - s16[i]));
  }
  out.push_back(within("three equal operators reduce to the corollary", reduction, 1e-10));

  double mapping = 0.0;
  bool asserted = true;
  Rng rm(derive_seed(42, 17));
  for (const auto& f : {p2, p3}) {
    for (int k = 0; k < 100; ++k) {
      const int d = uniform_int(rm, 2, 8);
      const MappingReport r = berezin_mapping_check(f, PositiveMap::singletons(d), random_diagonal_psd(d, rm));
      asserted = asserted && r.identity_asserted && r.identity_holds;
      mapping = std::max(mapping, r.max_abs_difference);
    }
  }
  out.push_back(within("set mapping identity for diagonal A", mapping, kMappingTolerance));
  out.push_back(holds("mapping hypothesis holds for diagonal A", asserted));

  CMatrix counter(2, 2);
  counter << 2.0, 1.0, 1.0, 2.0;
  const MappingReport cr = berezin_mapping_check(p2, PositiveMap::singletons(2), HermitianOperator(counter));
  out.push_back(holds("[[2,1],[1,2]]: mapping hypothesis fails at index 0",
                      !cr.condition_holds && !cr.condition_failures.empty() && cr.condition_failures[0] == 0 &&
                          !cr.identity_asserted));
  return out;
}

const std::map<std::string, std::function<Checks()>, std::less<>>& registry() {
  static const std::map<std::string, std::function<Checks()>, std::less<>> suites{
      {"hardy-elliptic", [] { return elliptic_suite(SpaceSpec::hardy()); }},
      {"bergman-elliptic", [] { return elliptic_suite(SpaceSpec::bergman()); }},
      {"blaschke", blaschke_suite},
      {"automorphism-b0", automorphism_suite},
      {"model", model_suite},
      {"matrix-diag", matrix_diag_suite},
      {"oracle", oracle_suite},
      {"inequalities", inequalities_suite},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"hardy-elliptic", "bergman-elliptic", "blaschke",
                                              "automorphism-b0", "model", "matrix-diag",
                                              "oracle", "inequalities"};
  return names;
}

std::vector<CheckResult> run_suite(std::string_view suite) {
  const auto& r = registry();
  const auto it = r.find(suite);
  if (it == r.end()) throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
  return it->second();
}

nlohmann::json to_json(const CheckResult& check) {
  nlohmann::json j = {{"name", check.name},
                      {"deviation", check.deviation},
                      {"tolerance", check.tolerance},
                      {"passed", check.passed}};
  if (!check.detail.empty()) j["detail"] = check.detail;
  return j;
}

}  // namespace berezin::cli
