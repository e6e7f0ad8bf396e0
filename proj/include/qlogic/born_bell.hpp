#pragma once

// Born-rule probabilities for finite projection-valued measures, the classical
// Bell-type inequality
//
//   P(A1 & B1) <= P(A1 & B2) + P(A2 & B1) + P(!A2 & !B2)
//
// for probability models over the 16 truth assignments, and its violation by
// the spin singlet. Unlike the rest of the library this is binary64 arithmetic.

#include <qlogic/complex_rational.hpp>
#include <qlogic/error.hpp>

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

namespace qlogic::bell {

using Complex = std::complex<double>;

inline constexpr double kIdentityTolerance = 1e-12;
inline constexpr double kIdempotenceTolerance = 1e-10;

class StateVector {
 public:
  explicit StateVector(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
    double norm = 0;
    for (const auto& z : amplitudes_) norm += std::norm(z);
    if (amplitudes_.empty() || std::abs(norm - 1.0) > kIdentityTolerance)
      throw std::invalid_argument("state vector must have unit norm");
  }

  std::size_t dim() const { return amplitudes_.size(); }
  const Complex& operator[](std::size_t k) const { return amplitudes_[k]; }

 private:
  std::vector<Complex> amplitudes_;
};

/// Square complex matrix, row-major.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

  std::size_t dim() const { return dim_; }
  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a.dim_, b.dim_);
    ComplexMatrix out(a.dim_);
    for (std::size_t i = 0; i < a.dim_; ++i)
      for (std::size_t k = 0; k < a.dim_; ++k)
        for (std::size_t j = 0; j < a.dim_; ++j) out(i, j) += a(i, k) * b(k, j);
    return out;
  }

  friend ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.dim_ * b.dim_);
    for (std::size_t i = 0; i < a.dim_; ++i)
      for (std::size_t j = 0; j < a.dim_; ++j)
        for (std::size_t k = 0; k < b.dim_; ++k)
          for (std::size_t l = 0; l < b.dim_; ++l) out(i * b.dim_ + k, j * b.dim_ + l) = a(i, j) * b(k, l);
    return out;
  }

 private:
  std::size_t dim_;
  std::vector<Complex> entries_;
};

/// Orthogonal projector; validated Hermitian and idempotent.
class Projector {
 public:
  explicit Projector(ComplexMatrix m) : m_(std::move(m)) {
    const ComplexMatrix sq = m_ * m_;
    for (std::size_t i = 0; i < m_.dim(); ++i)
      for (std::size_t j = 0; j < m_.dim(); ++j) {
        if (std::abs(m_(i, j) - std::conj(m_(j, i))) > kIdentityTolerance)
          throw std::invalid_argument("projector is not Hermitian");
        if (std::abs(sq(i, j) - m_(i, j)) > kIdempotenceTolerance)
          throw std::invalid_argument("projector is not idempotent");
      }
  }

  std::size_t dim() const { return m_.dim(); }
  const ComplexMatrix& matrix() const { return m_; }

  friend Projector tensor(const Projector& a, const Projector& b) { return Projector(kron(a.m_, b.m_)); }

 private:
  ComplexMatrix m_;
};

/// Unit vector in R^3.
class Direction {
 public:
  Direction(double x, double y, double z) : v_{x, y, z} {
    if (std::abs(std::sqrt(x * x + y * y + z * z) - 1.0) > kIdentityTolerance)
      throw std::invalid_argument("direction must be a unit vector");
  }

  /// Axis at `radians` from +z towards +x, in the x-z plane.
  static Direction in_plane(double radians) { return {std::sin(radians), 0.0, std::cos(radians)}; }
  static Direction in_plane_degrees(double degrees) { return in_plane(degrees * std::numbers::pi / 180.0); }

  double x() const { return v_[0]; }
  double y() const { return v_[1]; }
  double z() const { return v_[2]; }

  friend double dot(const Direction& a, const Direction& b) {
    return a.v_[0] * b.v_[0] + a.v_[1] * b.v_[1] + a.v_[2] * b.v_[2];
  }

 private:
  std::array<double, 3> v_;
};

/// (I + sign * n.sigma) / 2: the projector onto spin `sign` along n.
inline Projector spin_projector(const Direction& n, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("spin sign must be +1 or -1");
  const double s = sign;
  ComplexMatrix m(2);
  m(0, 0) = 0.5 * (1 + s * n.z());
  m(1, 1) = 0.5 * (1 - s * n.z());
  m(0, 1) = 0.5 * s * Complex(n.x(), -n.y());
  m(1, 0) = 0.5 * s * Complex(n.x(), n.y());
  return Projector(std::move(m));
}

/// <psi| P |psi>.
inline double born_prob(const StateVector& psi, const Projector& p) {
  require_same_dim(psi.dim(), p.dim());
  Complex acc = 0;
  for (std::size_t i = 0; i < psi.dim(); ++i) {
    Complex row = 0;
    for (std::size_t j = 0; j < psi.dim(); ++j) row += p.matrix()(i, j) * psi[j];
    acc += std::conj(psi[i]) * row;
  }
  return acc.real();
}

/// (|01> - |10>) / sqrt(2) in the basis |00>, |01>, |10>, |11>.
inline StateVector singlet() {
  const double h = 1.0 / std::numbers::sqrt2;
  return StateVector({0.0, h, -h, 0.0});
}

/// <psi| P_sa(na) ⊗ P_sb(nb) |psi> on C^2 ⊗ C^2.
inline double joint_prob(const StateVector& psi, const Direction& na, int sa, const Direction& nb, int sb) {
  require_same_dim(psi.dim(), 4);
  return born_prob(psi, tensor(spin_projector(na, sa), spin_projector(nb, sb)));
}

enum class SideA { kA1, kA2 };
enum class SideB { kB1, kB2 };

struct BellConfig {
  Direction a1, a2, b1, b2;

  /// Coplanar axes given as angles in degrees.
  static BellConfig in_plane_degrees(double a1, double a2, double b1, double b2) {
    return {Direction::in_plane_degrees(a1), Direction::in_plane_degrees(a2),
            Direction::in_plane_degrees(b1), Direction::in_plane_degrees(b2)};
  }
};

/// Joint outcome probabilities Born-computed from the singlet. "A1" is the +1
/// outcome along a1, "!A2" the -1 outcome along a2.
class SingletSource {
 public:
  explicit SingletSource(BellConfig cfg) : cfg_(std::move(cfg)), psi_(singlet()) {}

  double joint(SideA a, bool a_positive, SideB b, bool b_positive) const {
    const Direction& na = a == SideA::kA1 ? cfg_.a1 : cfg_.a2;
    const Direction& nb = b == SideB::kB1 ? cfg_.b1 : cfg_.b2;
    return joint_prob(psi_, na, a_positive ? 1 : -1, nb, b_positive ? 1 : -1);
  }

 private:
  BellConfig cfg_;
  StateVector psi_;
};

/// Probability distribution over the 16 truth assignments to (A1, A2, B1, B2).
/// Assignment index bits: 0 = A1, 1 = A2, 2 = B1, 3 = B2.
class ClassicalModel {
 public:
  explicit ClassicalModel(std::array<Rational, 16> weights) : weights_(std::move(weights)) {
    Rational total = 0;
    for (const auto& w : weights_) {
      if (sgn(w) < 0) throw std::invalid_argument("classical model weights must be nonnegative");
      total += w;
    }
    if (total != 1) throw std::invalid_argument("classical model weights must sum to 1");
  }

  /// All mass on one assignment.
  static ClassicalModel vertex(std::size_t assignment) {
    if (assignment >= 16) throw std::out_of_range("assignment index must be < 16");
    std::array<Rational, 16> w;
    w.fill(0);
    w[assignment] = 1;
    return ClassicalModel(std::move(w));
  }

  static ClassicalModel uniform() {
    std::array<Rational, 16> w;
    w.fill(Rational(1, 16));
    return ClassicalModel(std::move(w));
  }

  /// Integer weights in [0, max_weight] normalized by their sum.
  template <class Rng>
  static ClassicalModel random(Rng& rng, unsigned max_weight = 1000) {
    std::uniform_int_distribution<unsigned> pick(0, max_weight);
    std::array<unsigned, 16> raw;
    unsigned total = 0;
    do {
      total = 0;
      for (auto& r : raw) total += (r = pick(rng));
    } while (total == 0);
    std::array<Rational, 16> w;
    for (std::size_t k = 0; k < 16; ++k) {
      w[k] = Rational(raw[k], total);
      w[k].canonicalize();
    }
    return ClassicalModel(std::move(w));
  }

  const std::array<Rational, 16>& weights() const { return weights_; }

  Rational joint(SideA a, bool a_positive, SideB b, bool b_positive) const {
    const unsigned a_bit = a == SideA::kA1 ? 0 : 1;
    const unsigned b_bit = b == SideB::kB1 ? 2 : 3;
    Rational p = 0;
    for (unsigned k = 0; k < 16; ++k)
      if (bool(k >> a_bit & 1) == a_positive && bool(k >> b_bit & 1) == b_positive) p += weights_[k];
    return p;
  }

 private:
  std::array<Rational, 16> weights_;
};

template <class T>
struct BellSides {
  T lhs;  // P(A1 & B1)
  T rhs;  // P(A1 & B2) + P(A2 & B1) + P(!A2 & !B2)
  T margin() const { return lhs - rhs; }
  bool satisfied() const { return lhs <= rhs; }
};

template <class Source>
auto bell_sides(const Source& src) {
  using T = decltype(src.joint(SideA::kA1, true, SideB::kB1, true));
  T lhs = src.joint(SideA::kA1, true, SideB::kB1, true);
  T rhs = src.joint(SideA::kA1, true, SideB::kB2, true);
  rhs += src.joint(SideA::kA2, true, SideB::kB1, true);
  rhs += src.joint(SideA::kA2, false, SideB::kB2, false);
  return BellSides<T>{std::move(lhs), std::move(rhs)};
}

/// Exact evaluation of the inequality for a classical model.
inline bool classical_satisfies(const ClassicalModel& model) { return bell_sides(model).satisfied(); }

struct ScanResult {
  std::array<double, 4> degrees;  // a1, a2, b1, b2
  double margin;
};

/// Grid search over coplanar axes at angles k * 180 / resolution degrees,
/// k = 0 .. resolution-1, maximizing lhs - rhs for the singlet. The joint
/// probabilities of every axis pair are Born-computed once and tabulated.
inline ScanResult scan_violation(std::size_t resolution) {
  if (resolution < 4) throw std::invalid_argument("scan resolution must be >= 4");
  const std::size_t n = resolution;
  const double step = 180.0 / static_cast<double>(n);
  const StateVector psi = singlet();
  std::vector<Direction> axes;
  for (std::size_t k = 0; k < n; ++k) axes.push_back(Direction::in_plane_degrees(step * k));
  std::vector<double> pp(n * n), mm(n * n);  // (+,+) and (-,-) at (a, b)
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      pp[a * n + b] = joint_prob(psi, axes[a], 1, axes[b], 1);
      mm[a * n + b] = joint_prob(psi, axes[a], -1, axes[b], -1);
    }

  ScanResult best{{0, 0, 0, 0}, -std::numeric_limits<double>::infinity()};
  for (std::size_t a1 = 0; a1 < n; ++a1)
    for (std::size_t b1 = 0; b1 < n; ++b1) {
      const double lhs = pp[a1 * n + b1];
      if (lhs <= best.margin) continue;
      const double* a1_row = &pp[a1 * n];
      for (std::size_t a2 = 0; a2 < n; ++a2) {
        const double partial = lhs - pp[a2 * n + b1];
        const double* mm_row = &mm[a2 * n];
        for (std::size_t b2 = 0; b2 < n; ++b2) {
          const double margin = partial - a1_row[b2] - mm_row[b2];
          if (margin > best.margin) best = {{step * a1, step * a2, step * b1, step * b2}, margin};
        }
      }
    }
  return best;
}

}  // namespace qlogic::bell
