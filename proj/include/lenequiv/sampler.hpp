#pragma once

// Certified Schottky representations of free surface groups. These stand in
// for "a hyperbolic structure on the surface": each one is discrete, free and
// purely hyperbolic, certified by a ping-pong configuration of boundary arcs.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lenequiv/sl2.hpp"
#include "lenequiv/word.hpp"

namespace lenequiv {

struct SurfaceSpec {
  int genus = 0;
  int boundary_components = 0;
  int punctures = 0;

  int ends() const { return boundary_components + punctures; }
  int euler_characteristic() const { return 2 - 2 * genus - ends(); }
  int rank() const { return 2 * genus + ends() - 1; }
  // Throws ConfigError unless chi < 0, at least one end, and rank >= 2.
  void validate() const;
  std::string str() const;
  bool operator==(const SurfaceSpec&) const = default;
};

// Closed arc of the boundary circle, traversed counterclockwise
// (increasing x on the real line) from start to end.
struct BoundaryArc {
  BoundaryPoint start;
  BoundaryPoint end;

  double length() const;
  bool contains(const BoundaryPoint& p, double tol = 0) const;
};

// Signed generator l owns arc slot 2*(|l|-1) + (l < 0).
inline std::size_t arc_slot(Letter l) {
  return static_cast<std::size_t>(2 * ((l < 0 ? -l : l) - 1) + (l < 0 ? 1 : 0));
}

struct PingPongCertificate {
  // Dirichlet arcs seen from the base point i, one per signed generator.
  std::vector<BoundaryArc> arcs;
  // Counterclockwise cyclic order of the arcs, rotated to start at letter +1.
  std::vector<Letter> arrangement;
  // Smallest angular gap between two distinct arcs.
  double min_gap = 0;
};

struct Perturbation {
  std::uint64_t seed = 0;
  double magnitude = 0;
};

struct Representation {
  SurfaceSpec surface;
  std::vector<Mat2> generators;
  std::uint64_t seed = 0;
  double spread = 0;
  std::optional<PingPongCertificate> certificate;
  std::vector<Perturbation> perturbations;

  int rank() const { return static_cast<int>(generators.size()); }
};

inline constexpr double kMinSpread = 1.5;
inline constexpr int kSamplerRetries = 24;
inline constexpr int kSpotCheckLength = 6;

// Deterministic in (surface, seed, spread). Seed 0 gives the symmetric layout;
// on the one-holed torus that is a = diag(t, 1/t) and b with axis -1 -> 1,
// t = spread. When the layout cannot be certified the spread is increased
// geometrically (kSamplerRetries attempts) before throwing SamplerError.
Representation sample_representation(const SurfaceSpec& surface, std::uint64_t seed, double spread);

// Computes and checks the ping-pong certificate: pairwise disjoint arcs, each
// generator mapping the complement of its inverse's arc into its own arc, and
// every reduced word of length <= kSpotCheckLength away from +-I. Throws
// SamplerError on failure.
PingPongCertificate certify_ping_pong(const Representation& rep);

// Moves every generator by exp(magnitude * X) with X a random traceless
// matrix, halving the magnitude until the result certifies with the same
// arrangement. magnitude == 0 returns rep unchanged.
Representation perturb(const Representation& rep, std::uint64_t seed, double magnitude);

Mat2 evaluate(const Word& w, const Representation& rep);

// Translation length of the cyclic reduction of w. Conjugation does not change
// the length, and the cyclic core avoids the cancellation a conjugated product
// suffers when its entries far exceed its trace.
double geodesic_length(const Word& w, const Representation& rep);

// Cyclic order of arcs realizing the surface's topology: one interleaved
// block (x, Y, X, y) per handle, then a non-interleaved pair per extra end.
std::vector<Letter> surface_arrangement(const SurfaceSpec& surface);

// Conjugacy classes of the boundary curves of the convex core, read off as
// the face cycles of the one-vertex ribbon graph given by the arrangement.
std::vector<Word> boundary_words(std::span<const Letter> arrangement);

// True when w is conjugate to a power of a boundary word or of its inverse.
bool is_peripheral(const Word& w, std::span<const Word> boundary);

// Uniform double in [0, 1) from the top 53 bits of a 64-bit engine draw.
double unit_uniform(std::uint64_t bits);

}  // namespace lenequiv
