#include "berezin/symbols.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace berezin {

Symbol::Symbol(Kind kind, Complex p0, Complex p1) : kind_(kind), p0_(p0), p1_(p1) {
  switch (kind) {
    case Kind::Elliptic:
      scale_ = p0;
      break;
    case Kind::Blaschke:
      shift_ = -p0;
      ratio_ = std::conj(p0);
      break;
    case Kind::Automorphism: {
      const Complex abar = std::conj(p0);
      scale_ = p0 / abar;
      shift_ = p1 / abar;
      ratio_ = -std::conj(p1) / abar;
      break;
    }
  }
}

Symbol Symbol::elliptic(Complex alpha) {
  if (!std::isfinite(std::abs(alpha)) || std::abs(alpha) > 1.0 + 1e-15) {
    throw std::invalid_argument("elliptic symbol requires |alpha| <= 1");
  }
  return Symbol(Kind::Elliptic, alpha, 0.0);
}

Symbol Symbol::automorphism(Complex a, Complex b) {
  const double defect = std::norm(a) - std::norm(b) - 1.0;
  if (!std::isfinite(defect) || std::abs(defect) > kAutomorphismTolerance) {
    throw std::invalid_argument("automorphism requires |a|^2 - |b|^2 = 1");
  }
  return Symbol(Kind::Automorphism, a, b);
}

Symbol Symbol::blaschke(Complex alpha) {
  if (!std::isfinite(std::abs(alpha)) || std::abs(alpha) >= 1.0) {
    throw std::invalid_argument("Blaschke factor requires |alpha| < 1");
  }
  return Symbol(Kind::Blaschke, alpha, 0.0);
}

Complex Symbol::apply(Complex z) const {
  switch (kind_) {
    case Kind::Elliptic:
      return p0_ * z;
    case Kind::Automorphism:
      return (p0_ * z + p1_) / (std::conj(p1_) * z + std::conj(p0_));
    case Kind::Blaschke:
      return (z - p0_) / (1.0 - std::conj(p0_) * z);
  }
  return z;
}

CVector Symbol::series(int truncation) const {
  if (truncation < 1) throw std::invalid_argument("truncation must be >= 1");
  // (scale z + shift) * sum_n ratio^n z^n
  CVector c(truncation);
  Complex ratio_pow{1.0, 0.0};
  c[0] = shift_;
  for (int n = 1; n < truncation; ++n) {
    const Complex prev = ratio_pow;
    ratio_pow *= ratio_;
    c[n] = scale_ * prev + shift_ * ratio_pow;
  }
  return c;
}

CVector multiply_series(const CVector& lhs, const CVector& rhs, int truncation) {
  CVector out = CVector::Zero(truncation);
  const int nl = std::min<int>(truncation, static_cast<int>(lhs.size()));
  const int nr = static_cast<int>(rhs.size());
  for (int i = 0; i < nl; ++i) {
    const Complex a = lhs[i];
    if (a == Complex{}) continue;
    const int upto = std::min(nr, truncation - i);
    for (int j = 0; j < upto; ++j) out[i + j] += a * rhs[j];
  }
  return out;
}

CVector Symbol::taylor_coeffs(int power, int truncation) const {
  if (power < 0) throw std::invalid_argument("power must be >= 0");
  if (truncation < 1) throw std::invalid_argument("truncation must be >= 1");
  CVector result = CVector::Zero(truncation);
  result[0] = 1.0;
  if (power == 0) return result;
  const CVector phi = series(truncation);
  for (int k = 0; k < power; ++k) result = multiply_series(result, phi, truncation);
  return result;
}

std::string Symbol::describe() const {
  switch (kind_) {
    case Kind::Elliptic: return "elliptic(alpha=" + format_complex(p0_) + ")";
    case Kind::Blaschke: return "blaschke(alpha=" + format_complex(p0_) + ")";
    case Kind::Automorphism:
      return "automorphism(a=" + format_complex(p0_) + ", b=" + format_complex(p1_) + ")";
  }
  return "?";
}

namespace {

double parse_number(std::string_view s, std::string_view whole) {
  std::string_view body = s;
  if (body.front() == '+') body.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
  if (ec != std::errc{} || ptr != body.data() + body.size() || !std::isfinite(value)) {
    throw std::invalid_argument("malformed complex number: '" + std::string(whole) + "'");
  }
  return value;
}

// Imaginary coefficient: a bare sign means +-1.
double parse_coefficient(std::string_view s, std::string_view whole) {
  if (s.empty() || s == "+") return 1.0;
  if (s == "-") return -1.0;
  return parse_number(s, whole);
}

}  // namespace

Complex parse_complex(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw std::invalid_argument("empty complex number");
  if (s.back() != 'i' && s.back() != 'j') {
    return {parse_number(s, text), 0.0};
  }
  s.pop_back();
  // Split at the last sign that is not the leading one or an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) {
    return {0.0, parse_coefficient(s, text)};
  }
  const std::string_view sv(s);
  const std::string_view re_part = sv.substr(0, split);
  return {parse_number(re_part, text), parse_coefficient(sv.substr(split), text)};
}

std::string format_complex(Complex z) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

}  // namespace berezin
