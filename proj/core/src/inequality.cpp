#include "berezin/inequality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "berezin/closed_form.hpp"
#include "berezin/random.hpp"

namespace berezin {

// ScalarFunction -------------------------------------------------------------

namespace {

constexpr double kNegativeInputTolerance = 1e-9;

double clamp_domain(double t) {
  if (t >= 0.0) return t;
  if (t >= -kNegativeInputTolerance) return 0.0;
  throw std::domain_error("argument outside [0, inf): " + std::to_string(t));
}

}  // namespace

ScalarFunction ScalarFunction::power(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw std::invalid_argument("power requires p >= 1");
  return ScalarFunction(Kind::Power, p);
}

ScalarFunction ScalarFunction::neg_const(double c) {
  if (!(c >= 1.0 && c <= 2.0)) throw std::invalid_argument("neg-const requires c in [1, 2]");
  return ScalarFunction(Kind::NegConst, c);
}

ScalarFunction ScalarFunction::custom(std::vector<std::pair<double, double>> knots) {
  if (knots.size() < 2) throw std::invalid_argument("custom function needs >= 2 knots");
  std::sort(knots.begin(), knots.end());
  if (knots.front().first != 0.0) throw std::invalid_argument("custom table must start at x = 0");
  for (std::size_t i = 1; i < knots.size(); ++i) {
    if (!(knots[i].first > knots[i - 1].first)) {
      throw std::invalid_argument("custom table abscissae must be distinct");
    }
  }
  ScalarFunction f(Kind::Custom, 0.0);
  f.knots_ = std::move(knots);
  return f;
}

ScalarFunction ScalarFunction::parse(std::string_view spec) {
  auto value_after = [&](std::string_view prefix) -> std::optional<double> {
    if (spec.size() <= prefix.size()) return std::nullopt;
    const std::string rest(spec.substr(prefix.size()));
    std::size_t used = 0;
    const double v = std::stod(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("malformed function: " + std::string(spec));
    return v;
  };
  try {
    if (spec == "linear") return power(1.0);
    if (spec.starts_with("power:")) {
      const auto p = value_after("power:");
      if (!p) throw std::invalid_argument("power needs an exponent");
      return power(*p);
    }
    if (spec == "neg-const") return neg_const();
    if (spec.starts_with("neg-const:")) return neg_const(*value_after("neg-const:"));
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("unknown function '" + std::string(spec) +
                              "' (expected power:<p>, neg-const[:<c>] or linear)");
}

double ScalarFunction::operator()(double t) const {
  switch (kind_) {
    case Kind::Power: {
      const double x = clamp_domain(t);
      if (param_ == 1.0) return x;
      if (param_ == 2.0) return x * x;
      if (param_ == 3.0) return x * x * x;
      return std::pow(x, param_);
    }
    case Kind::NegConst:
      return -param_;
    case Kind::Custom: {
      const double x = clamp_domain(t);
      std::size_t i = 1;
      while (i + 1 < knots_.size() && knots_[i].first < x) ++i;
      const auto& [x0, y0] = knots_[i - 1];
      const auto& [x1, y1] = knots_[i];
      return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
    }
  }
  return 0.0;
}

double ScalarFunction::derivative(double t) const {
  switch (kind_) {
    case Kind::Power: {
      const double x = clamp_domain(t);
      if (param_ == 1.0) return 1.0;
      return param_ * std::pow(x, param_ - 1.0);
    }
    case Kind::NegConst:
      return 0.0;
    case Kind::Custom: {
      // right derivative
      const double x = clamp_domain(t);
      std::size_t i = 1;
      while (i + 1 < knots_.size() && knots_[i].first <= x) ++i;
      const auto& [x0, y0] = knots_[i - 1];
      const auto& [x1, y1] = knots_[i];
      return (y1 - y0) / (x1 - x0);
    }
  }
  return 0.0;
}

double ScalarFunction::chooser(double x) const {
  // C_x = f'(x) for f(0) = f'(0) = 0; C_x = 0 for the bounded negative case.
  return kind_ == Kind::NegConst ? 0.0 : derivative(x);
}

bool ScalarFunction::is_superquadratic() const {
  switch (kind_) {
    case Kind::Power: return param_ >= 2.0;
    case Kind::NegConst: return true;
    case Kind::Custom: return false;
  }
  return false;
}

bool ScalarFunction::is_nonnegative() const {
  switch (kind_) {
    case Kind::Power: return true;
    case Kind::NegConst: return false;
    case Kind::Custom:
      return std::all_of(knots_.begin(), knots_.end(), [](const auto& k) { return k.second >= 0; }) &&
             derivative(knots_.back().first) >= 0.0;
  }
  return false;
}

bool ScalarFunction::is_convex() const {
  switch (kind_) {
    case Kind::Power: return param_ >= 1.0;
    case Kind::NegConst: return true;
    case Kind::Custom: {
      double prev = -std::numeric_limits<double>::infinity();
      for (std::size_t i = 1; i < knots_.size(); ++i) {
        const double slope = (knots_[i].second - knots_[i - 1].second) /
                             (knots_[i].first - knots_[i - 1].first);
        if (slope < prev) return false;
        prev = slope;
      }
      return true;
    }
  }
  return false;
}

bool ScalarFunction::derivative_is_convex() const {
  return kind_ == Kind::Power ? param_ >= 2.0 : kind_ == Kind::NegConst;
}

std::string ScalarFunction::name() const {
  char buf[64];
  switch (kind_) {
    case Kind::Power:
      std::snprintf(buf, sizeof(buf), "power:%g", param_);
      return buf;
    case Kind::NegConst:
      std::snprintf(buf, sizeof(buf), "neg-const:%g", param_);
      return buf;
    case Kind::Custom:
      return "custom(" + std::to_string(knots_.size()) + " knots)";
  }
  return "?";
}

// PositiveMap ------------------------------------------------------------------

PositiveMap PositiveMap::identity() { return PositiveMap(Kind::Identity); }

PositiveMap PositiveMap::pinching(std::vector<std::vector<int>> blocks) {
  std::vector<int> seen;
  for (const auto& b : blocks) {
    if (b.empty()) throw std::invalid_argument("pinching block is empty");
    seen.insert(seen.end(), b.begin(), b.end());
  }
  std::sort(seen.begin(), seen.end());
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (seen[i] != static_cast<int>(i)) {
      throw std::invalid_argument("pinching blocks must partition 0..d-1");
    }
  }
  PositiveMap m(Kind::Pinching);
  m.blocks_ = std::move(blocks);
  return m;
}

PositiveMap PositiveMap::singletons(int dim) {
  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < dim; ++i) blocks.push_back({i});
  return pinching(std::move(blocks));
}

PositiveMap PositiveMap::compression(CMatrix v) {
  if (v.cols() < 1 || v.cols() > v.rows()) {
    throw std::invalid_argument("compression needs a d x m matrix with m <= d");
  }
  PositiveMap m(Kind::Compression);
  m.v_ = std::move(v);
  return m;
}

bool PositiveMap::is_unital() const {
  if (kind_ != Kind::Compression) return true;
  const CMatrix gram = v_.adjoint() * v_;
  return (gram - CMatrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff() <=
         kUnitalTolerance;
}

void PositiveMap::check_input(int dim) const {
  switch (kind_) {
    case Kind::Identity: return;
    case Kind::Pinching: {
      std::size_t total = 0;
      for (const auto& b : blocks_) total += b.size();
      if (static_cast<int>(total) != dim) throw std::invalid_argument("pinching dimension mismatch");
      return;
    }
    case Kind::Compression:
      if (v_.rows() != dim) throw std::invalid_argument("compression dimension mismatch");
      return;
  }
}

int PositiveMap::output_dim(int input_dim) const {
  check_input(input_dim);
  return kind_ == Kind::Compression ? static_cast<int>(v_.cols()) : input_dim;
}

HermitianOperator PositiveMap::apply(const HermitianOperator& a) const {
  check_input(a.dim());
  switch (kind_) {
    case Kind::Identity:
      return a;
    case Kind::Pinching: {
      const CMatrix& m = a.matrix();
      CMatrix out = CMatrix::Zero(m.rows(), m.cols());
      for (const auto& b : blocks_) {
        for (int i : b) {
          for (int j : b) out(i, j) = m(i, j);
        }
      }
      return HermitianOperator(out);
    }
    case Kind::Compression: {
      const CMatrix out = v_.adjoint() * a.matrix() * v_;
      return HermitianOperator(0.5 * (out + out.adjoint()));
    }
  }
  return a;
}

std::string PositiveMap::name() const {
  switch (kind_) {
    case Kind::Identity: return "identity";
    case Kind::Pinching: return "pinching(" + std::to_string(blocks_.size()) + " blocks)";
    case Kind::Compression:
      return "compression(" + std::to_string(v_.rows()) + "x" + std::to_string(v_.cols()) + ")";
  }
  return "?";
}

// Scalar checks ----------------------------------------------------------------

double superquadratic_pointwise_check(const ScalarFunction& f, double x, double y) {
  if (x < 0.0 || y < 0.0) throw std::invalid_argument("superquadratic check needs x, y >= 0");
  return f(y) - f(x) - f.chooser(x) * (y - x) - f(std::abs(y - x));
}

double scalar_popoviciu_check(const ScalarFunction& f, double x, double y, double z) {
  const double lhs = (2.0 / 3.0) * (f((x + z) / 2.0) + f((y + z) / 2.0) + f((x + y) / 2.0));
  const double rhs = f((x + y + z) / 3.0) + (f(x) + f(y) + f(z)) / 3.0;
  return rhs - lhs;
}

// Operator checks --------------------------------------------------------------

HermitianOperator functional_calculus(const HermitianOperator& a, const ScalarFunction& f) {
  if (a.min_eigenvalue() < -kPositivityTolerance) throw std::domain_error("operator not positive");
  return a.apply([&f](double t) { return f(std::max(t, 0.0)); });
}

HermitianOperator f_of_abs_shift(const HermitianOperator& x, double s, const ScalarFunction& f) {
  return x.apply([&f, s](double t) { return f(std::abs(t - s)); });
}

double berezin_at(const HermitianOperator& op, int mu) {
  if (mu < 0 || mu >= op.dim()) throw std::out_of_range("Berezin index out of range");
  return op.matrix()(mu, mu).real();
}

namespace {

void require_unital(const PositiveMap& phi) {
  if (!phi.is_unital()) throw std::invalid_argument("positive map is not unital");
}

void require_same_dims(const HermitianOperator& a, const HermitianOperator& b,
                       const HermitianOperator& c) {
  if (a.dim() != b.dim() || a.dim() != c.dim()) throw std::invalid_argument("dimension mismatch");
}

}  // namespace

std::vector<double> popoviciu_operator_slacks(const ScalarFunction& f, const PositiveMap& phi,
                                              const HermitianOperator& a,
                                              const HermitianOperator& b,
                                              const HermitianOperator& c) {
  require_same_dims(a, b, c);
  require_unital(phi);
  const HermitianOperator fa = functional_calculus(a, f);
  const HermitianOperator fb = functional_calculus(b, f);
  const HermitianOperator fc = functional_calculus(c, f);
  const HermitianOperator mean_f = phi.apply((1.0 / 3.0) * (fa + fb + fc));
  const HermitianOperator mean = phi.apply((1.0 / 3.0) * (a + b + c));
  const HermitianOperator ab = phi.apply(0.5 * (a + b));
  const HermitianOperator bc = phi.apply(0.5 * (b + c));
  const HermitianOperator ac = phi.apply(0.5 * (a + c));
  const HermitianOperator da = phi.apply((1.0 / 6.0) * (2.0 * a - b - c));
  const HermitianOperator dc = phi.apply((1.0 / 6.0) * (2.0 * c - a - b));
  const HermitianOperator db = phi.apply((1.0 / 6.0) * (2.0 * b - a - c));

  const int out_dim = mean.dim();
  std::vector<double> slacks(static_cast<std::size_t>(out_dim));
  for (int mu = 0; mu < out_dim; ++mu) {
    const double x_ab = berezin_at(ab, mu);
    const double x_bc = berezin_at(bc, mu);
    const double x_ac = berezin_at(ac, mu);
    const double lhs = berezin_at(mean_f, mu) + f(berezin_at(mean, mu));
    const double midpoints = (2.0 / 3.0) * (f(x_ab) + f(x_bc) + f(x_ac));
    const double corrections =
        berezin_at(phi.apply(f_of_abs_shift(a, x_bc, f)), mu) +
        f(std::abs(berezin_at(da, mu))) +
        berezin_at(phi.apply(f_of_abs_shift(c, x_ab, f)), mu) +
        f(std::abs(berezin_at(dc, mu))) +
        berezin_at(phi.apply(f_of_abs_shift(b, x_ac, f)), mu) +
        f(std::abs(berezin_at(db, mu)));
    slacks[static_cast<std::size_t>(mu)] = lhs - (midpoints + corrections / 3.0);
  }
  return slacks;
}

double popoviciu_operator_check(const ScalarFunction& f, const PositiveMap& phi,
                                const HermitianOperator& a, const HermitianOperator& b,
                                const HermitianOperator& c, int mu) {
  const auto s = popoviciu_operator_slacks(f, phi, a, b, c);
  if (mu < 0 || mu >= static_cast<int>(s.size())) throw std::out_of_range("Berezin index out of range");
  return s[static_cast<std::size_t>(mu)];
}

namespace {

// Bracket of the corollary at every index: f(s) - Phi(f(A))~ + Phi(f|A - s|)~.
std::vector<double> corollary_brackets(const ScalarFunction& f, const PositiveMap& phi,
                                       const HermitianOperator& a) {
  require_unital(phi);
  const HermitianOperator pa = phi.apply(a);
  const HermitianOperator pfa = phi.apply(functional_calculus(a, f));
  std::vector<double> out(static_cast<std::size_t>(pa.dim()));
  for (int mu = 0; mu < pa.dim(); ++mu) {
    const double s = berezin_at(pa, mu);
    out[static_cast<std::size_t>(mu)] =
        f(s) - berezin_at(pfa, mu) + berezin_at(phi.apply(f_of_abs_shift(a, s, f)), mu);
  }
  return out;
}

}  // namespace

std::vector<double> corollary_c1_slacks(const ScalarFunction& f, const PositiveMap& phi,
                                        const HermitianOperator& a) {
  auto brackets = corollary_brackets(f, phi, a);
  const double bound = -f(0.0);
  for (auto& v : brackets) v = bound - v;
  return brackets;
}

double corollary_c1_check(const ScalarFunction& f, const PositiveMap& phi,
                          const HermitianOperator& a, int mu) {
  const auto s = corollary_c1_slacks(f, phi, a);
  if (mu < 0 || mu >= static_cast<int>(s.size())) throw std::out_of_range("Berezin index out of range");
  return s[static_cast<std::size_t>(mu)];
}

double corollary_c1_supremum_slack(const ScalarFunction& f, const PositiveMap& phi,
                                   const HermitianOperator& a) {
  const auto brackets = corollary_brackets(f, phi, a);
  return -f(0.0) - *std::max_element(brackets.begin(), brackets.end());
}

std::vector<double> tangent_bound_slacks(const ScalarFunction& f, const PositiveMap& phi,
                                         const HermitianOperator& t, double x) {
  require_unital(phi);
  const HermitianOperator pft = phi.apply(functional_calculus(t, f));
  const HermitianOperator pshift = phi.apply(t.shifted(x));
  const HermitianOperator pabs = phi.apply(f_of_abs_shift(t, x, f));
  std::vector<double> out(static_cast<std::size_t>(pft.dim()));
  for (int mu = 0; mu < pft.dim(); ++mu) {
    out[static_cast<std::size_t>(mu)] = berezin_at(pft, mu) - f(x) -
                                        f.chooser(x) * berezin_at(pshift, mu) -
                                        berezin_at(pabs, mu);
  }
  return out;
}

MappingReport berezin_mapping_check(const ScalarFunction& f, const PositiveMap& phi,
                                    const HermitianOperator& a) {
  require_unital(phi);
  MappingReport r;
  const HermitianOperator pa = phi.apply(a);
  const HermitianOperator pfa = phi.apply(functional_calculus(a, f));
  for (int mu = 0; mu < pa.dim(); ++mu) {
    const double s = berezin_at(pa, mu);
    const double lhs = f(s);
    const double rhs = berezin_at(pfa, mu);
    r.berezin_of_map.push_back(s);
    r.f_of_berezin.push_back(lhs);
    r.berezin_of_map_of_f.push_back(rhs);
    if (lhs < rhs - kMappingTolerance) r.condition_failures.push_back(mu);
  }
  r.condition_holds = r.condition_failures.empty();
  if (!r.condition_holds) return r;

  r.identity_asserted = true;
  for (std::size_t i = 0; i < r.f_of_berezin.size(); ++i) {
    r.max_abs_difference =
        std::max(r.max_abs_difference, std::abs(r.f_of_berezin[i] - r.berezin_of_map_of_f[i]));
  }
  auto lhs = r.f_of_berezin;
  auto rhs = r.berezin_of_map_of_f;
  std::sort(lhs.begin(), lhs.end());
  std::sort(rhs.begin(), rhs.end());
  bool sets_equal = true;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    sets_equal = sets_equal && std::abs(lhs[i] - rhs[i]) <= kMappingTolerance;
  }
  r.identity_holds = sets_equal && r.max_abs_difference <= kMappingTolerance;
  return r;
}

double berezin_number(const HermitianOperator& op) {
  return op.matrix().diagonal().cwiseAbs().maxCoeff();
}

double berezin_number(const RangeSample& sample) {
  if (sample.values.size() == 0) throw std::invalid_argument("empty range sample");
  return sample.max_modulus();
}

PropositionReport proposition_checks(const ScalarFunction& f, const PositiveMap& phi,
                                     const HermitianOperator& a) {
  require_unital(phi);
  PropositionReport r;
  const HermitianOperator pa = phi.apply(a);
  auto sup_over = [&](auto&& g) {
    double best = -std::numeric_limits<double>::infinity();
    for (int mu = 0; mu < pa.dim(); ++mu) best = std::max(best, g(berezin_at(pa, mu)));
    return best;
  };
  const double f0 = f(0.0);

  if (f.is_superquadratic() && f.is_nonnegative()) {
    const double ber = berezin_number(phi.apply(functional_calculus(a, f)));
    r.lower_bound_slack = ber - sup_over([&](double s) { return f(s); });
  } else {
    r.rejected.push_back("lower bound needs a nonnegative superquadratic function");
  }

  if (f.is_differentiable() && f0 == 0.0 && f.derivative(0.0) == 0.0 && f.derivative_is_convex()) {
    const HermitianOperator fprime =
        a.apply([&f](double t) { return f.derivative(std::max(t, 0.0)); });
    r.derivative_slack =
        berezin_number(phi.apply(fprime)) - sup_over([&](double s) { return f.derivative(s); });
  } else {
    r.rejected.push_back("derivative bound needs f(0) = f'(0) = 0 with f' convex");
  }

  const bool concave = f.kind() == ScalarFunction::Kind::Power && f.parameter() == 1.0;
  if (f0 == 0.0 && (f.is_convex() || concave)) {
    const double ber = berezin_number(phi.apply(functional_calculus(a, f)));
    const double sup = sup_over([&](double s) { return f(s); });
    if (f.is_convex()) r.convex_slack = ber - sup;
    if (concave) r.concave_slack = sup - ber;
  } else {
    r.rejected.push_back("convex/concave bound needs f(0) = 0");
  }
  return r;
}

// Harness ----------------------------------------------------------------------

std::string_view to_string(InequalityCheck check) {
  switch (check) {
    case InequalityCheck::Pointwise: return "pointwise";
    case InequalityCheck::Popoviciu: return "popoviciu";
    case InequalityCheck::CorollaryC1: return "corollary";
    case InequalityCheck::Propositions: return "propositions";
    case InequalityCheck::Mapping: return "mapping";
  }
  return "?";
}

InequalityCheck parse_check(std::string_view name) {
  for (auto c : {InequalityCheck::Pointwise, InequalityCheck::Popoviciu,
                 InequalityCheck::CorollaryC1, InequalityCheck::Propositions,
                 InequalityCheck::Mapping}) {
    if (to_string(c) == name) return c;
  }
  throw std::invalid_argument("unknown check '" + std::string(name) + "'");
}

std::string_view to_string(MapFamily family) {
  switch (family) {
    case MapFamily::Identity: return "identity";
    case MapFamily::Pinching: return "pinching";
    case MapFamily::Compression: return "compression";
  }
  return "?";
}

MapFamily parse_map_family(std::string_view name) {
  for (auto m : {MapFamily::Identity, MapFamily::Pinching, MapFamily::Compression}) {
    if (to_string(m) == name) return m;
  }
  throw std::invalid_argument("unknown map '" + std::string(name) + "'");
}

void require_hypotheses(const ScalarFunction& f, InequalityCheck check) {
  switch (check) {
    case InequalityCheck::Pointwise:
    case InequalityCheck::Popoviciu:
    case InequalityCheck::CorollaryC1:
      if (!f.is_superquadratic()) {
        throw std::invalid_argument(f.name() + " is not superquadratic");
      }
      return;
    case InequalityCheck::Mapping:
      if (!f.is_superquadratic() || !f.is_nonnegative()) {
        throw std::invalid_argument(f.name() + " is not a nonnegative superquadratic function");
      }
      return;
    case InequalityCheck::Propositions: {
      const bool any = (f.is_superquadratic() && f.is_nonnegative()) ||
                       (f.vanishes_at_zero() && f.is_convex());
      if (!any) {
        throw std::invalid_argument(f.name() +
                                    " satisfies no Berezin-number bound hypothesis (needs f(0) = 0)");
      }
      return;
    }
  }
}

namespace {

PositiveMap random_map(MapFamily family, int dim, Rng& rng) {
  switch (family) {
    case MapFamily::Identity: return PositiveMap::identity();
    case MapFamily::Pinching: return PositiveMap::pinching(random_partition(dim, rng));
    case MapFamily::Compression:
      return PositiveMap::compression(random_isometry(dim, uniform_int(rng, 1, dim), rng));
  }
  return PositiveMap::identity();
}

double min_of(const std::vector<double>& v) { return *std::min_element(v.begin(), v.end()); }

}  // namespace

TrialReport run_trials(const TrialConfig& config) {
  if (config.trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (config.dim_min < 1 || config.dim_max < config.dim_min) {
    throw std::invalid_argument("invalid dimension range");
  }
  require_hypotheses(config.function, config.check);
  const ScalarFunction& f = config.function;

  TrialReport report;
  report.seed = config.seed;
  report.dim_min = config.dim_min;
  report.dim_max = config.dim_max;
  report.function = f.name();
  report.map = std::string(to_string(config.map));
  report.check = std::string(to_string(config.check));
  report.trials = config.trials;
  report.tolerance = config.check == InequalityCheck::Pointwise ? kPointwiseTolerance
                     : config.check == InequalityCheck::Mapping ? kMappingTolerance
                                                                : kOperatorSlackTolerance;
  report.min_slack = std::numeric_limits<double>::infinity();
  int condition_passes = 0;

  for (int trial = 0; trial < config.trials; ++trial) {
    Rng rng(derive_seed(config.seed, static_cast<std::uint64_t>(trial)));
    double slack = std::numeric_limits<double>::infinity();

    if (config.check == InequalityCheck::Pointwise) {
      constexpr int kPairsPerTrial = 100;
      for (int k = 0; k < kPairsPerTrial; ++k) {
        const double x = uniform_real(rng, 0.0, 10.0);
        const double y = uniform_real(rng, 0.0, 10.0);
        slack = std::min(slack, superquadratic_pointwise_check(f, x, y));
      }
      ++condition_passes;
    } else {
      const int dim = uniform_int(rng, config.dim_min, config.dim_max);
      auto draw = [&] { return config.diag_only ? random_diagonal_psd(dim, rng) : random_psd(dim, rng); };
      const HermitianOperator a = draw();
      const PositiveMap phi = random_map(config.map, dim, rng);
      const bool nonneg = f.is_nonnegative();
      const MappingReport mapping = nonneg ? berezin_mapping_check(f, phi, a) : MappingReport{};
      if (nonneg && mapping.condition_holds) ++condition_passes;

      switch (config.check) {
        case InequalityCheck::Popoviciu: {
          const HermitianOperator b = draw();
          const HermitianOperator c = draw();
          slack = min_of(popoviciu_operator_slacks(f, phi, a, b, c));
          break;
        }
        case InequalityCheck::CorollaryC1:
          slack = min_of(corollary_c1_slacks(f, phi, a));
          break;
        case InequalityCheck::Propositions: {
          const PropositionReport p = proposition_checks(f, phi, a);
          for (const auto& s : {p.lower_bound_slack, p.derivative_slack, p.convex_slack, p.concave_slack}) {
            if (s) slack = std::min(slack, *s);
          }
          break;
        }
        case InequalityCheck::Mapping:
          if (mapping.identity_asserted) {
            report.max_mapping_error = std::max(report.max_mapping_error, mapping.max_abs_difference);
            slack = 0.0 - mapping.max_abs_difference;
          }
          break;
        case InequalityCheck::Pointwise:
          break;
      }
    }
    if (slack < report.min_slack) {
      report.min_slack = slack;
      report.argmin_trial = trial;
    }
  }
  if (report.argmin_trial < 0) {
    // Mapping check with the hypothesis failing in every trial.
    report.min_slack = 0.0;
  }
  report.condition18_pass_rate = static_cast<double>(condition_passes) / config.trials;
  report.passed = config.check == InequalityCheck::Mapping
                      ? report.max_mapping_error <= kMappingTolerance
                      : report.min_slack >= -report.tolerance;
  return report;
}

}  // namespace berezin
