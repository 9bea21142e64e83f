#pragma once

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hypertrees/quadratic.hpp"
#include "hypertrees/schlafli.hpp"

namespace hypertrees {

/// Exact numbers of non-root (A) and root (B) vertices on one layer.
struct LayerCounts {
  std::size_t level = 0;
  mpz_class a;
  mpz_class b;

  mpz_class total() const { return a + b; }
  friend bool operator==(const LayerCounts&, const LayerCounts&) = default;
};

/// Which of the three count sequences a closed form or ratio refers to.
enum class Sequence { A, B, AB };

std::string to_string(Sequence s);

/// The 2x2 matrix mapping (a_i, b_i) to (a_{i+1}, b_{i+1}) for i >= 1.
struct RecursionMatrix {
  std::int64_t aa;  // a_{i+1} from a_i: q-3
  std::int64_t ab;  // a_{i+1} from b_i: q-2
  std::int64_t ba;  // b_{i+1} from a_i: (q-3)(p-3)-1
  std::int64_t bb;  // b_{i+1} from b_i: (q-2)(p-3)-1

  std::int64_t determinant() const { return aa * bb - ab * ba; }
  std::int64_t trace() const { return aa + bb; }
};

RecursionMatrix recursion_matrix(const SchlafliSymbol& pq);

/// Levels 0..n: (0, 1) at level 0, (q, q(p-3)) at level 1, then the matrix
/// recursion. Requires p, q >= 4 and a non-spherical symbol.
std::vector<LayerCounts> layer_counts(const SchlafliSymbol& pq, std::size_t n);

/// Eigen-decomposition data for a hyperbolic symbol, held exactly in
/// Q(sqrt(c^2 - 4)).
struct SpectralConstants {
  struct Coefficients {
    QuadraticNumber first;   // multiplies z1^i
    QuadraticNumber second;  // multiplies z2^i
  };

  SchlafliSymbol symbol{4, 5};
  std::int64_t c = 0;
  QuadraticNumber z1;
  QuadraticNumber z2;
  Coefficients a;
  Coefficients b;
  Coefficients ab;
  mpq_class h;
  QuadraticNumber L;
  QuadraticNumber K;
  QuadraticNumber M;
  int precision = 30;

  const Coefficients& coefficients(Sequence s) const;

  /// Limit of b_i over the cumulative root count: (z1 - 1) / z1.
  QuadraticNumber root_share_limit() const;

  std::string decimal(const QuadraticNumber& v) const { return v.to_decimal(precision); }

  struct Named {
    std::string name;
    QuadraticNumber value;
  };
  /// Every constant in a fixed order, for reports.
  std::vector<Named> named() const;
};

/// Throws RepeatedEigenvalue for Euclidean symbols.
SpectralConstants spectral_constants(const SchlafliSymbol& pq, int precision = 30);

/// g1*z1^i + g2*z2^i evaluated exactly; i >= 1.
mpz_class closed_form_count(const SpectralConstants& consts, std::size_t i, Sequence which);

/// r_{i+1} / r_i for i >= 1.
mpq_class growth_ratio(const SchlafliSymbol& pq, std::size_t i, Sequence which);

/// |r_{i+1}/r_i - z1|, exact.
QuadraticNumber ratio_error(const SpectralConstants& consts, std::size_t i, Sequence which);

/// b_i / (b_0 + ... + b_i) for i >= 1.
mpq_class cumulative_root_ratio(const SchlafliSymbol& pq, std::size_t i);

/// Counts on layer i >= 1 of {4,4}: a = 8i - 4, b = 4.
LayerCounts euclidean_counts(std::size_t i);

}  // namespace hypertrees
