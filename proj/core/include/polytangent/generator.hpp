#ifndef POLYTANGENT_GENERATOR_HPP
#define POLYTANGENT_GENERATOR_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string_view>
#include <utility>

#include "polytangent/polygon.hpp"

// Seeded test-instance construction.
//
// Random streams come from std::mt19937_64, whose output sequence is fixed by
// the C++ standard. Ranges are reduced with our own rejection sampler instead
// of std::uniform_int_distribution (implementation-defined), so star polygons
// are bit-identical across standard libraries. Star polygons use integer
// arithmetic only; the crescent template calls std::cos/std::sin and is
// reproducible on any libm that rounds them identically.

namespace polytangent::gen {

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Regime {
  kDisjointHulls,
  kIntersectingHulls,
  kNestedHulls,
  kDisjointPolygonsOverlappingHulls,
};

[[nodiscard]] std::string_view to_string(Regime r);
[[nodiscard]] std::optional<Regime> parse_regime(std::string_view name);

/// Above this many corners in total, collinearity is not screened (the check
/// is cubic). Simplicity holds by construction regardless.
inline constexpr std::int64_t kGeneralPositionCheckLimit = 256;

struct GenSpec {
  std::uint64_t seed = 1;
  std::int64_t n0 = 16;
  std::int64_t n1 = 16;
  Regime regime = Regime::kDisjointHulls;
  // Outer radius of P0; other lengths derive from it.
  std::int64_t coordinate_scale = std::int64_t{1} << 20;
};

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  /// Uniform in [0, 1).
  double unit();
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer; derives independent stream seeds from one seed.
[[nodiscard]] std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// n corners with strictly increasing angle around `center`, each at a random
/// integer offset with r_min <= |offset| <= r_max, listed counterclockwise
/// starting from the first corner at or after angle 0. Every angular gap is
/// below pi, so the polygon is star-shaped about `center` and simple. For
/// n <= kGeneralPositionCheckLimit no three corners are collinear.
[[nodiscard]] Polygon random_star_polygon(std::uint64_t seed, std::int64_t n, Point center,
                                          std::int64_t r_min, std::int64_t r_max);

/// Two counterclockwise polygons in the requested regime, in general position
/// when n0 + n1 <= kGeneralPositionCheckLimit. The crescent regime needs
/// n0 >= 10.
[[nodiscard]] std::pair<Polygon, Polygon> generate_pair(const GenSpec& spec);

}  // namespace polytangent::gen

#endif  // POLYTANGENT_GENERATOR_HPP
