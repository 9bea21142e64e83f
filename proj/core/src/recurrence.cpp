#include "hypertrees/recurrence.hpp"

#include "hypertrees/errors.hpp"

namespace hypertrees {

std::string to_string(Sequence s) {
  switch (s) {
    case Sequence::A:
      return "A";
    case Sequence::B:
      return "B";
    case Sequence::AB:
      return "AB";
  }
  return "?";
}

RecursionMatrix recursion_matrix(const SchlafliSymbol& pq) {
  const std::int64_t p = pq.p();
  const std::int64_t q = pq.q();
  return {q - 3, q - 2, (q - 3) * (p - 3) - 1, (q - 2) * (p - 3) - 1};
}

std::vector<LayerCounts> layer_counts(const SchlafliSymbol& pq, std::size_t n) {
  require_tree_symbol(pq);
  const RecursionMatrix m = recursion_matrix(pq);
  std::vector<LayerCounts> out;
  out.reserve(n + 1);
  out.push_back({0, 0, 1});
  if (n == 0) return out;
  out.push_back({1, pq.q(), static_cast<long>(pq.q()) * (pq.p() - 3)});
  for (std::size_t i = 1; i < n; ++i) {
    const auto& cur = out.back();
    LayerCounts next{i + 1, m.aa * cur.a + m.ab * cur.b, m.ba * cur.a + m.bb * cur.b};
    out.push_back(std::move(next));
  }
  return out;
}

namespace {

// First two terms of a sequence, used by the coefficient formulas.
std::array<mpz_class, 2> first_terms(const std::vector<LayerCounts>& counts, Sequence which) {
  std::array<mpz_class, 2> r;
  for (std::size_t k = 0; k < 2; ++k) {
    const auto& lc = counts[k + 1];
    r[k] = which == Sequence::A ? lc.a : which == Sequence::B ? lc.b : lc.total();
  }
  return r;
}

SpectralConstants::Coefficients coefficients_for(const QuadraticNumber& z1,
                                                 const QuadraticNumber& z2,
                                                 const std::array<mpz_class, 2>& r) {
  const QuadraticNumber r1(r[0]);
  const QuadraticNumber r2(r[1]);
  const QuadraticNumber gap = z1 - z2;
  return {(r2 - z2 * r1) / (z1 * gap), (z1 * r1 - r2) / (z2 * gap)};
}

mpz_class term(const LayerCounts& lc, Sequence which) {
  switch (which) {
    case Sequence::A:
      return lc.a;
    case Sequence::B:
      return lc.b;
    case Sequence::AB:
      return lc.total();
  }
  return 0;
}

}  // namespace

const SpectralConstants::Coefficients& SpectralConstants::coefficients(Sequence s) const {
  switch (s) {
    case Sequence::A:
      return a;
    case Sequence::B:
      return b;
    case Sequence::AB:
      return ab;
  }
  return ab;
}

QuadraticNumber SpectralConstants::root_share_limit() const { return (z1 - QuadraticNumber(1L)) / z1; }

std::vector<SpectralConstants::Named> SpectralConstants::named() const {
  return {
      {"c", QuadraticNumber(static_cast<long>(c))},
      {"z1", z1},
      {"z2", z2},
      {"gA1", a.first},
      {"gA2", a.second},
      {"gB1", b.first},
      {"gB2", b.second},
      {"gAB1", ab.first},
      {"gAB2", ab.second},
      {"h", QuadraticNumber(h)},
      {"L", L},
      {"K", K},
      {"M", M},
      {"root_share_limit", root_share_limit()},
  };
}

SpectralConstants spectral_constants(const SchlafliSymbol& pq, int precision) {
  require_tree_symbol(pq);
  if (pq.is_euclidean()) {
    throw RepeatedEigenvalue(pq.to_string() +
                             " is Euclidean: the recursion matrix has the repeated eigenvalue 1; "
                             "use euclidean_counts for the closed form");
  }
  if (precision < 1) throw PreconditionError("precision must be at least 1 digit");

  SpectralConstants k;
  k.symbol = pq;
  k.precision = precision;
  k.c = pq.trace();

  const mpz_class c(static_cast<long>(k.c));
  const QuadraticNumber root = QuadraticNumber::sqrt(c * c - 4);
  if (root.is_rational()) {
    throw InvariantViolation("c^2 - 4 is a perfect square for c = " + c.get_str());
  }
  const QuadraticNumber half(mpq_class(1, 2));
  k.z1 = (QuadraticNumber(c) + root) * half;
  k.z2 = (QuadraticNumber(c) - root) * half;

  const auto counts = layer_counts(pq, 2);
  k.a = coefficients_for(k.z1, k.z2, first_terms(counts, Sequence::A));
  k.b = coefficients_for(k.z1, k.z2, first_terms(counts, Sequence::B));
  k.ab = coefficients_for(k.z1, k.z2, first_terms(counts, Sequence::AB));

  k.h = mpq_class(pq.q() - 2, pq.q() - 3);
  k.h.canonicalize();
  const QuadraticNumber one(1L);
  k.L = k.b.first / k.a.first;
  k.K = k.L / (one + k.L);
  const QuadraticNumber hL = QuadraticNumber(k.h) * k.L;
  k.M = hL / (one + hL);
  return k;
}

mpz_class closed_form_count(const SpectralConstants& consts, std::size_t i, Sequence which) {
  if (i < 1) throw PreconditionError("closed form holds for levels i >= 1");
  const auto& g = consts.coefficients(which);
  const auto e = static_cast<unsigned>(i);
  const QuadraticNumber value = g.first * consts.z1.pow(e) + g.second * consts.z2.pow(e);
  if (!value.is_integer()) {
    throw InvariantViolation("closed form for " + consts.symbol.to_string() + " at level " +
                             std::to_string(i) + " is not an integer: " + value.to_string());
  }
  return value.as_integer();
}

mpq_class growth_ratio(const SchlafliSymbol& pq, std::size_t i, Sequence which) {
  if (i < 1) throw PreconditionError("growth ratio is defined for levels i >= 1");
  const auto counts = layer_counts(pq, i + 1);
  mpq_class r(term(counts[i + 1], which), term(counts[i], which));
  r.canonicalize();
  return r;
}

QuadraticNumber ratio_error(const SpectralConstants& consts, std::size_t i, Sequence which) {
  return (QuadraticNumber(growth_ratio(consts.symbol, i, which)) - consts.z1).abs();
}

mpq_class cumulative_root_ratio(const SchlafliSymbol& pq, std::size_t i) {
  if (i < 1) throw PreconditionError("cumulative root ratio is defined for levels i >= 1");
  const auto counts = layer_counts(pq, i);
  mpz_class sum = 0;
  for (const auto& lc : counts) sum += lc.b;
  mpq_class r(counts[i].b, sum);
  r.canonicalize();
  return r;
}

LayerCounts euclidean_counts(std::size_t i) {
  if (i < 1) throw PreconditionError("the {4,4} formula holds for levels i >= 1");
  const mpz_class level(static_cast<unsigned long>(i));
  return {i, 8 * level - 4, 4};
}

}  // namespace hypertrees
