#pragma once

// Superquadratic functions, unital positive maps and Berezin-transform
// inequalities on finite-dimensional l^2 spaces. Every Berezin transform
// here is a diagonal entry (the standard basis is the kernel family).

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "berezin/hermitian.hpp"
#include "berezin/types.hpp"

namespace berezin {

struct RangeSample;

class ScalarFunction {
 public:
  enum class Kind { Power, NegConst, Custom };

  /// t^p on [0, inf), p >= 1.
  static ScalarFunction power(double p);
  /// The constant -c, c in [1, 2].
  static ScalarFunction neg_const(double c = 1.5);
  /// Piecewise-linear interpolation of (x, f(x)) knots starting at x = 0,
  /// extended linearly past the last knot.
  static ScalarFunction custom(std::vector<std::pair<double, double>> knots);
  /// "power:<p>", "neg-const", "neg-const:<c>", "linear".
  static ScalarFunction parse(std::string_view spec);

  Kind kind() const { return kind_; }
  double parameter() const { return param_; }

  double operator()(double t) const;
  double derivative(double t) const;
  /// The constant C_x of the superquadratic inequality.
  double chooser(double x) const;

  bool is_superquadratic() const;
  bool is_nonnegative() const;
  bool is_convex() const;
  bool is_differentiable() const { return kind_ != Kind::Custom; }
  bool derivative_is_convex() const;
  bool vanishes_at_zero() const { return (*this)(0.0) == 0.0; }

  std::string name() const;

 private:
  ScalarFunction(Kind kind, double param) : kind_(kind), param_(param) {}

  Kind kind_;
  double param_;
  std::vector<std::pair<double, double>> knots_;
};

class PositiveMap {
 public:
  enum class Kind { Identity, Pinching, Compression };

  static PositiveMap identity();
  /// Block-diagonal truncation; blocks must partition {0, ..., d-1}.
  static PositiveMap pinching(std::vector<std::vector<int>> blocks);
  static PositiveMap singletons(int dim);
  /// A -> V* A V for a d x m matrix V.
  static PositiveMap compression(CMatrix v);

  Kind kind() const { return kind_; }
  bool is_unital() const;
  int output_dim(int input_dim) const;
  HermitianOperator apply(const HermitianOperator& a) const;
  std::string name() const;

 private:
  explicit PositiveMap(Kind kind) : kind_(kind) {}
  void check_input(int dim) const;

  Kind kind_;
  std::vector<std::vector<int>> blocks_;
  CMatrix v_;
};

inline constexpr double kPointwiseTolerance = 1e-12;
inline constexpr double kOperatorSlackTolerance = 1e-9;
inline constexpr double kMappingTolerance = 1e-10;
inline constexpr double kUnitalTolerance = 1e-12;

/// f(y) - f(x) - C_x (y - x) - f(|y - x|).
double superquadratic_pointwise_check(const ScalarFunction& f, double x, double y);

/// Three-point convexity slack: RHS - LHS of
///   (2/3)[f((x+z)/2) + f((y+z)/2) + f((x+y)/2)]
///     <= f((x+y+z)/3) + (f(x)+f(y)+f(z))/3.
double scalar_popoviciu_check(const ScalarFunction& f, double x, double y, double z);

/// f(A) for positive A. Eigenvalues >= -1e-12 are clamped to zero; lower
/// ones raise std::domain_error("operator not positive").
HermitianOperator functional_calculus(const HermitianOperator& a, const ScalarFunction& f);

/// f(|X - s I|) for Hermitian X.
HermitianOperator f_of_abs_shift(const HermitianOperator& x, double s, const ScalarFunction& f);

inline HermitianOperator apply_map(const PositiveMap& phi, const HermitianOperator& a) {
  return phi.apply(a);
}

/// Diagonal entry (mu, mu).
double berezin_at(const HermitianOperator& op, int mu);

/// LHS - RHS of the operator Popoviciu inequality for superquadratic f, a
/// unital positive map and positive A, B, C, at every output index.
std::vector<double> popoviciu_operator_slacks(const ScalarFunction& f, const PositiveMap& phi,
                                              const HermitianOperator& a,
                                              const HermitianOperator& b,
                                              const HermitianOperator& c);
double popoviciu_operator_check(const ScalarFunction& f, const PositiveMap& phi,
                                const HermitianOperator& a, const HermitianOperator& b,
                                const HermitianOperator& c, int mu);

/// -f(0) - [f(s) - Phi(f(A))~(mu) + Phi(f(|A - s I|))~(mu)], s = Phi(A)~(mu).
std::vector<double> corollary_c1_slacks(const ScalarFunction& f, const PositiveMap& phi,
                                        const HermitianOperator& a);
double corollary_c1_check(const ScalarFunction& f, const PositiveMap& phi,
                          const HermitianOperator& a, int mu);
/// Same bound against the supremum over mu of the bracket.
double corollary_c1_supremum_slack(const ScalarFunction& f, const PositiveMap& phi,
                                   const HermitianOperator& a);

/// Pointwise operator bound behind the Popoviciu inequality:
///   Phi(f(T))~ - f(x) - C_x Phi(T - xI)~ - Phi(f(|T - xI|))~ at every mu.
std::vector<double> tangent_bound_slacks(const ScalarFunction& f, const PositiveMap& phi,
                                         const HermitianOperator& t, double x);

struct MappingReport {
  std::vector<double> berezin_of_map;       // Phi(A)~(mu)
  std::vector<double> f_of_berezin;         // f(Phi(A)~(mu))
  std::vector<double> berezin_of_map_of_f;  // Phi(f(A))~(mu)
  std::vector<int> condition_failures;      // indices where f(s) < Phi(f(A))~
  bool condition_holds = false;
  bool identity_asserted = false;
  bool identity_holds = false;
  double max_abs_difference = 0.0;
};

/// Checks the hypothesis f(Phi(A)~(mu)) >= Phi(f(A))~(mu) at every mu and,
/// only where it holds everywhere, compares f(Ber(Phi(A))) with
/// Ber(Phi(f(A))) as multisets.
MappingReport berezin_mapping_check(const ScalarFunction& f, const PositiveMap& phi,
                                    const HermitianOperator& a);

/// sup |diagonal|.
double berezin_number(const HermitianOperator& op);
/// sup |sampled value|.
double berezin_number(const RangeSample& sample);

struct PropositionReport {
  // ber(Phi(f(A))) - sup f(Phi(A)~), for nonnegative superquadratic f.
  std::optional<double> lower_bound_slack;
  // ber(Phi(f'(A))) - sup f'(Phi(A)~), f(0) = f'(0) = 0 and f' convex.
  std::optional<double> derivative_slack;
  // ber(Phi(f(A))) - sup f(Phi(A)~), f convex with f(0) = 0.
  std::optional<double> convex_slack;
  // sup f(Phi(A)~) - ber(Phi(f(A))), f concave with f(0) = 0.
  std::optional<double> concave_slack;
  std::vector<std::string> rejected;
};

PropositionReport proposition_checks(const ScalarFunction& f, const PositiveMap& phi,
                                     const HermitianOperator& a);

// Randomized harness.

enum class InequalityCheck { Pointwise, Popoviciu, CorollaryC1, Propositions, Mapping };

std::string_view to_string(InequalityCheck check);
InequalityCheck parse_check(std::string_view name);

enum class MapFamily { Identity, Pinching, Compression };

std::string_view to_string(MapFamily family);
MapFamily parse_map_family(std::string_view name);

struct TrialConfig {
  std::uint64_t seed = 42;
  int trials = 100;
  int dim_min = 2;
  int dim_max = 8;
  ScalarFunction function = ScalarFunction::power(2.0);
  MapFamily map = MapFamily::Identity;
  InequalityCheck check = InequalityCheck::Popoviciu;
  bool diag_only = false;
};

struct TrialReport {
  std::uint64_t seed = 0;
  int dim_min = 0;
  int dim_max = 0;
  std::string function;
  std::string map;
  std::string check;
  int trials = 0;
  double min_slack = 0.0;
  int argmin_trial = -1;
  double condition18_pass_rate = 0.0;
  double max_mapping_error = 0.0;  // over trials where the hypothesis held
  double tolerance = 0.0;
  bool passed = false;
};

/// Throws std::invalid_argument naming the violated hypothesis when the
/// function does not meet the requirements of the check.
void require_hypotheses(const ScalarFunction& f, InequalityCheck check);

TrialReport run_trials(const TrialConfig& config);

}  // namespace berezin
