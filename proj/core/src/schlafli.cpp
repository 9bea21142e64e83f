#include "hypertrees/schlafli.hpp"

#include <charconv>

#include "hypertrees/errors.hpp"

namespace hypertrees {

std::string to_string(Geometry g) {
  switch (g) {
    case Geometry::Spherical:
      return "spherical";
    case Geometry::Euclidean:
      return "euclidean";
    case Geometry::Hyperbolic:
      return "hyperbolic";
  }
  return "unknown";
}

SchlafliSymbol::SchlafliSymbol(int p, int q) : p_(p), q_(q) {
  if (p < 3 || q < 3) {
    throw InvalidSymbol("Schläfli symbol {" + std::to_string(p) + "," + std::to_string(q) +
                        "} requires p >= 3 and q >= 3");
  }
}

Geometry SchlafliSymbol::geometry() const noexcept {
  const std::int64_t k = static_cast<std::int64_t>(p_ - 2) * (q_ - 2);
  if (k < 4) return Geometry::Spherical;
  if (k == 4) return Geometry::Euclidean;
  return Geometry::Hyperbolic;
}

std::int64_t SchlafliSymbol::trace() const noexcept {
  return static_cast<std::int64_t>(p_ - 2) * (q_ - 2) - 2;
}

std::string SchlafliSymbol::to_string() const {
  return "{" + std::to_string(p_) + "," + std::to_string(q_) + "}";
}

void require_tree_symbol(const SchlafliSymbol& pq) {
  if (pq.q() == 3) {
    throw DegenerateSymbol(pq.to_string() +
                           ": q = 3 leaves a single edge between layers, no trees exist");
  }
  if (pq.p() == 3) {
    throw DegenerateSymbol(pq.to_string() +
                           ": p = 3 produces no roots besides the main root; the recursion "
                           "needs p >= 4");
  }
  if (pq.geometry() == Geometry::Spherical) {
    throw SphericalSymbol(pq.to_string() + " is spherical; its belts terminate");
  }
}

namespace {

int parse_int(std::string_view s, const std::string& whole) {
  int value = 0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw PreconditionError("cannot parse Schläfli symbol '" + whole + "'");
  }
  return value;
}

}  // namespace

SchlafliSymbol parse_symbol(const std::string& text) {
  std::string_view s = text;
  if (s.size() >= 2 && s.front() == '{' && s.back() == '}') {
    s = s.substr(1, s.size() - 2);
  }
  const auto sep = s.find_first_of(":,");
  if (sep == std::string_view::npos) {
    throw PreconditionError("cannot parse Schläfli symbol '" + text + "' (expected p:q)");
  }
  return SchlafliSymbol(parse_int(s.substr(0, sep), text), parse_int(s.substr(sep + 1), text));
}

}  // namespace hypertrees
