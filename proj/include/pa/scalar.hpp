#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace pa {

class ModeMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Mode { symbolic, rational, floating };

std::string to_string(Mode m);

/// Absolute/relative tolerance used by every float-mode comparison.
inline constexpr double kFloatTolerance = 1e-9;

/// Laurent polynomial in the loop value with rational coefficients.
/// Terms are sorted by exponent and carry no zero coefficients.
struct Laurent {
  std::vector<std::pair<int, mpq_class>> terms;

  bool operator==(const Laurent& o) const { return terms == o.terms; }
};

struct RationalAt {
  mpq_class value;
  mpq_class delta;
};

struct FloatAt {
  double value = 0.0;
  double delta = 0.0;
};

class Scalar;

/// The coefficient ring: symbolic in delta, or delta fixed to a rational or
/// a double. Every Scalar produced by a Ring carries the same mode and delta.
class Ring {
 public:
  static Ring symbolic();
  static Ring rational(const mpq_class& delta);
  static Ring floating(double delta);

  Mode mode() const { return mode_; }
  const mpq_class& rational_delta() const { return delta_q_; }
  double float_delta() const { return delta_f_; }
  /// Numeric value of delta; throws in symbolic mode.
  double delta_value() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar integer(long v) const;
  Scalar from_rational(const mpq_class& q) const;
  /// delta^e. Always defined since delta is invertible.
  Scalar delta_pow(int e) const;

  bool operator==(const Ring& o) const;
  bool operator!=(const Ring& o) const { return !(*this == o); }

  std::string describe() const;

 private:
  Mode mode_ = Mode::symbolic;
  mpq_class delta_q_{0};
  double delta_f_ = 0.0;
};

class Scalar {
 public:
  Scalar() = default;  // symbolic zero
  explicit Scalar(Laurent p);
  Scalar(RationalAt r);
  Scalar(FloatAt f);

  /// Monomial c * delta^e in symbolic mode.
  static Scalar monomial(const mpq_class& c, int e);

  Mode mode() const;
  bool is_zero() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);

  /// Multiplies by delta^e using the delta carried by this scalar.
  Scalar times_delta_pow(int e) const;

  /// Exact in symbolic/rational modes, within kFloatTolerance in float mode.
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Evaluates a symbolic scalar at a rational delta (exact).
  Scalar specialize(const mpq_class& delta) const;
  /// Evaluates a symbolic scalar at a real delta.
  Scalar specialize(double delta) const;

  const Laurent& laurent() const;
  const RationalAt& rational() const;
  const FloatAt& floating() const;

  /// Numeric value (rational converted to double); throws for symbolic.
  double to_double() const;
  /// |x - y| for numeric scalars; used to report residuals.
  static double distance(const Scalar& a, const Scalar& b);

  std::string str() const;

 private:
  std::variant<Laurent, RationalAt, FloatAt> v_;
};

mpq_class parse_rational(const std::string& s);
std::string rational_str(const mpq_class& q);

}  // namespace pa
