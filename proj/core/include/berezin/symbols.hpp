#pragma once

// Holomorphic self-maps of the disk used as composition symbols.

#include <string>
#include <string_view>

#include "berezin/kernels.hpp"
#include "berezin/types.hpp"

namespace berezin {

class Symbol {
 public:
  enum class Kind { Elliptic, Automorphism, Blaschke };

  /// phi(z) = alpha z with |alpha| <= 1.
  static Symbol elliptic(Complex alpha);
  /// phi(z) = (a z + b) / (conj(b) z + conj(a)) with |a|^2 - |b|^2 = 1.
  static Symbol automorphism(Complex a, Complex b);
  /// phi(z) = (z - alpha) / (1 - conj(alpha) z) with |alpha| < 1.
  static Symbol blaschke(Complex alpha);

  Kind kind() const { return kind_; }
  // alpha for Elliptic/Blaschke, a for Automorphism.
  Complex alpha() const { return p0_; }
  Complex a() const { return p0_; }
  Complex b() const { return p1_; }

  Complex apply(Complex z) const;
  Complex apply(const DiskPoint& z) const { return apply(z.z()); }

  /// First N Taylor coefficients of phi at 0.
  CVector series(int truncation) const;

  /// First N Taylor coefficients of phi(z)^power.
  CVector taylor_coeffs(int power, int truncation) const;

  std::string describe() const;

 private:
  Symbol(Kind kind, Complex p0, Complex p1);

  Kind kind_;
  Complex p0_;
  Complex p1_;
  // phi(z) = (scale z + shift) / (1 - ratio z)
  Complex scale_{1.0, 0.0};
  Complex shift_{0.0, 0.0};
  Complex ratio_{0.0, 0.0};
};

inline constexpr double kAutomorphismTolerance = 1e-12;

/// Truncated Cauchy product of two coefficient vectors.
CVector multiply_series(const CVector& lhs, const CVector& rhs, int truncation);

/// Parses "a+bi", "a-bi", "bi", "a", "i", "-i" with optional whitespace.
/// Throws std::invalid_argument on malformed input.
Complex parse_complex(std::string_view text);

std::string format_complex(Complex z);

}  // namespace berezin
