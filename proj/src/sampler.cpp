#include "lenequiv/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "lenequiv/errors.hpp"

namespace lenequiv {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kArcTolerance = 1e-9;
constexpr double kFreenessFloor = 1e-6;

double wrap_2pi(double t) {
  t = std::fmod(t, 2 * kPi);
  return t < 0 ? t + 2 * kPi : t;
}

// Elliptic element fixing i that rotates the boundary circle by phi
// counterclockwise (infinity -> -cot(phi/2)).
Mat2 rotation(double phi) {
  const double c = std::cos(phi / 2), s = std::sin(phi / 2);
  return {c, s, -s, c};
}

// Boundary arc of the points closer (in the horocyclic sense) to q than to i.
BoundaryArc dirichlet_arc(const HPoint& q) {
  auto closer_to_q = [&](double x) {
    const double dx = x - q.x;
    return (dx * dx + q.y * q.y) / q.y < x * x + 1;
  };
  const double qa = q.y - 1, qb = 2 * q.x, qc = q.y - q.x * q.x - q.y * q.y;
  if (std::abs(qa) < 1e-14) {
    const double e = -qc / qb;
    if (closer_to_q(e + 1)) return {BoundaryPoint::at(e), BoundaryPoint::infinity()};
    return {BoundaryPoint::infinity(), BoundaryPoint::at(e)};
  }
  const double disc = std::sqrt(std::max(0.0, qb * qb - 4 * qa * qc));
  const double t = -(qb + std::copysign(disc, qb)) / 2;
  double e1 = t / qa, e2 = qc / t;
  if (e1 > e2) std::swap(e1, e2);
  if (closer_to_q((e1 + e2) / 2)) return {BoundaryPoint::at(e1), BoundaryPoint::at(e2)};
  return {BoundaryPoint::at(e2), BoundaryPoint::at(e1)};
}

bool arcs_disjoint(const BoundaryArc& x, const BoundaryArc& y, double margin) {
  auto inside = [margin](const BoundaryArc& arc, const BoundaryPoint& p) {
    const double off = wrap_2pi(p.angle() - arc.start.angle());
    return off <= arc.length() + margin || off >= 2 * kPi - margin;
  };
  return !inside(x, y.start) && !inside(y, x.start);
}

// Every reduced word of length 1..max_len away from +-I.
bool spot_check_free(std::span<const Mat2> gens, int max_len) {
  const int rank = static_cast<int>(gens.size());
  std::vector<Mat2> letters;  // slot order
  for (int g = 1; g <= rank; ++g) {
    letters.push_back(gens[g - 1]);
    letters.push_back(gens[g - 1].inverse());
  }
  struct Frame {
    Mat2 m;
    Letter last;
    int depth;
  };
  std::vector<Frame> stack{{Mat2::identity(), 0, 0}};
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    if (f.depth > 0 && distance_from_identity(f.m) < kFreenessFloor) return false;
    if (f.depth == max_len) continue;
    for (int g = 1; g <= rank; ++g) {
      for (Letter l : {g, -g}) {
        if (l == -f.last) continue;
        stack.push_back({renormalize(f.m * letters[arc_slot(l)]), l, f.depth + 1});
      }
    }
  }
  return true;
}

struct Rng {
  std::mt19937_64 engine;
  double uniform() { return unit_uniform(engine()); }
};

}  // namespace

double unit_uniform(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

void SurfaceSpec::validate() const {
  if (genus < 0 || boundary_components < 0 || punctures < 0)
    throw ConfigError("surface counts must be nonnegative: " + str());
  if (euler_characteristic() >= 0) throw ConfigError("surface must have negative Euler characteristic: " + str());
  if (ends() < 1) throw ConfigError("surface needs a boundary component or puncture (free fundamental group): " + str());
  if (rank() < 2) throw ConfigError("surface group rank must be at least 2: " + str());
  if (rank() > kMaxRank) throw ConfigError("surface group rank exceeds the alphabet: " + str());
}

std::string SurfaceSpec::str() const {
  return "genus=" + std::to_string(genus) + " boundary=" + std::to_string(boundary_components) +
         " punctures=" + std::to_string(punctures);
}

double BoundaryArc::length() const { return wrap_2pi(end.angle() - start.angle()); }

bool BoundaryArc::contains(const BoundaryPoint& p, double tol) const {
  const double off = wrap_2pi(p.angle() - start.angle());
  return off <= length() + tol || off >= 2 * kPi - tol;
}

std::vector<Letter> surface_arrangement(const SurfaceSpec& surface) {
  surface.validate();
  std::vector<Letter> out;
  for (int k = 0; k < surface.genus; ++k) {
    const Letter x = 2 * k + 1, y = 2 * k + 2;
    out.insert(out.end(), {x, -y, -x, y});
  }
  for (int j = 0; j + 1 < surface.ends(); ++j) {
    const Letter z = 2 * surface.genus + j + 1;
    if (j % 2 == 0)
      out.insert(out.end(), {z, -z});
    else
      out.insert(out.end(), {-z, z});
  }
  return out;
}

std::vector<Word> boundary_words(std::span<const Letter> arrangement) {
  const std::size_t n = arrangement.size();
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[arc_slot(arrangement[i])] = i;
  auto next = [&](Letter l) { return arrangement[(pos[arc_slot(l)] + 1) % n]; };

  std::vector<bool> seen(n, false);
  std::vector<Word> out;
  for (Letter start : arrangement) {
    if (seen[arc_slot(start)]) continue;
    std::vector<Letter> letters;
    for (Letter l = start; !seen[arc_slot(l)]; l = -next(l)) {
      seen[arc_slot(l)] = true;
      letters.push_back(next(l));
    }
    out.push_back(Word(std::span<const Letter>(letters)));
  }
  return out;
}

bool is_peripheral(const Word& w, std::span<const Word> boundary) {
  if (w.empty()) return false;
  const CyclicWord root = cyclic_normal_form(is_proper_power(w).root);
  for (const Word& b : boundary) {
    const Word broot = is_proper_power(b).root;
    if (root == cyclic_normal_form(broot) || root == cyclic_normal_form(invert(broot))) return true;
  }
  return false;
}

Mat2 evaluate(const Word& w, const Representation& rep) { return evaluate(w, rep.generators); }

PingPongCertificate certify_ping_pong(const Representation& rep) {
  const int rank = rep.rank();
  if (rank < 1) throw SamplerError("representation has no generators");
  PingPongCertificate cert;
  cert.arcs.resize(2 * static_cast<std::size_t>(rank));
  for (int g = 1; g <= rank; ++g) {
    const Mat2& m = rep.generators[g - 1];
    if (classify(m) != IsometryType::hyperbolic)
      throw SamplerError("generator " + std::string(1, letter_char(g)) + " is not hyperbolic");
    cert.arcs[arc_slot(g)] = dirichlet_arc(apply(m, HPoint{0, 1}));
    cert.arcs[arc_slot(-g)] = dirichlet_arc(apply(m.inverse(), HPoint{0, 1}));
  }

  cert.min_gap = 2 * kPi;
  for (std::size_t i = 0; i < cert.arcs.size(); ++i) {
    for (std::size_t j = i + 1; j < cert.arcs.size(); ++j) {
      if (!arcs_disjoint(cert.arcs[i], cert.arcs[j], kArcTolerance))
        throw SamplerError("ping-pong arcs overlap; not certifiable at this spread");
      for (const auto& [p, q] : {std::pair{cert.arcs[i].end, cert.arcs[j].start},
                                 std::pair{cert.arcs[j].end, cert.arcs[i].start}})
        cert.min_gap = std::min(cert.min_gap, wrap_2pi(q.angle() - p.angle()));
    }
  }

  for (int g = 1; g <= rank; ++g) {
    const Mat2& m = rep.generators[g - 1];
    const BoundaryArc& inv = cert.arcs[arc_slot(-g)];
    const BoundaryArc& own = cert.arcs[arc_slot(g)];
    // The complement of inv runs from inv.end to inv.start.
    const BoundaryArc image{apply(m, inv.end), apply(m, inv.start)};
    const double off = wrap_2pi(image.start.angle() - own.start.angle());
    const bool inside = own.contains(image.start, kArcTolerance) &&
                        (off >= 2 * kPi - kArcTolerance || off + image.length() <= own.length() + kArcTolerance);
    if (!inside)
      throw SamplerError("generator " + std::string(1, letter_char(g)) +
                         " does not map the complement of its inverse arc into its own arc");
  }

  std::vector<Letter> order;
  for (int g = 1; g <= rank; ++g) order.insert(order.end(), {g, -g});
  std::sort(order.begin(), order.end(), [&](Letter x, Letter y) {
    return wrap_2pi(cert.arcs[arc_slot(x)].start.angle() - cert.arcs[arc_slot(1)].start.angle()) <
           wrap_2pi(cert.arcs[arc_slot(y)].start.angle() - cert.arcs[arc_slot(1)].start.angle());
  });
  cert.arrangement = std::move(order);

  if (!spot_check_free(rep.generators, kSpotCheckLength))
    throw SamplerError("a short reduced word evaluates to the identity");
  return cert;
}

double geodesic_length(const Word& w, const Representation& rep) {
  return translation_length(evaluate(cyclic_reduction(w).core, rep));
}

Representation sample_representation(const SurfaceSpec& surface, std::uint64_t seed, double spread) {
  surface.validate();
  if (!(spread >= kMinSpread))
    throw ConfigError("spread must be at least " + std::to_string(kMinSpread));
  const std::vector<Letter> layout = surface_arrangement(surface);
  const int rank = surface.rank();
  const std::size_t slots = layout.size();
  const double spacing = 2 * kPi / static_cast<double>(slots);

  double t = spread;
  for (int attempt = 0; attempt < kSamplerRetries; ++attempt, t *= 1.25) {
    Rng rng{std::mt19937_64(seed)};
    const bool symmetric = seed == 0;
    const double turn = symmetric ? 0.0 : 2 * kPi * rng.uniform();

    // Multiplier lambda_g > 1 of each generator; its Dirichlet arcs have
    // half-width acos(tanh(log lambda)).
    std::vector<double> lambda(rank);
    for (double& l : lambda) l = symmetric ? t : std::pow(t, 1.0 + 0.3 * rng.uniform());
    auto half_width = [&](Letter l) {
      return std::acos(std::tanh(std::log(lambda[std::abs(l) - 1])));
    };

    double slack = spacing;
    for (std::size_t k = 0; k < slots; ++k)
      slack = std::min(slack, spacing - half_width(layout[k]) - half_width(layout[(k + 1) % slots]));
    if (slack <= 0) continue;

    std::vector<double> centre(slots);
    for (std::size_t k = 0; k < slots; ++k) {
      const double jitter = symmetric ? 0.0 : 0.45 * slack * (rng.uniform() - 0.5);
      centre[arc_slot(layout[k])] = static_cast<double>(k) * spacing + turn + jitter;
    }

    Representation rep;
    rep.surface = surface;
    rep.seed = seed;
    rep.spread = t;
    for (int g = 1; g <= rank; ++g) {
      const double l = lambda[g - 1];
      const Mat2 translate{l, 0, 0, 1 / l};
      const Mat2 m = rotation(centre[arc_slot(g)]) * translate * rotation(kPi - centre[arc_slot(-g)]);
      rep.generators.push_back(m.normalized().projective_form());
    }
    try {
      rep.certificate = certify_ping_pong(rep);
    } catch (const SamplerError&) {
      continue;
    }
    return rep;
  }
  throw SamplerError("could not certify a representation for " + surface.str() + " seed " +
                     std::to_string(seed));
}

Representation perturb(const Representation& rep, std::uint64_t seed, double magnitude) {
  if (magnitude == 0) return rep;
  if (!(magnitude > 0)) throw ConfigError("perturbation magnitude must be nonnegative");
  const std::vector<Letter> before =
      rep.certificate ? rep.certificate->arrangement : certify_ping_pong(rep).arrangement;

  double m = magnitude;
  for (int attempt = 0; attempt < 12; ++attempt, m /= 2) {
    Rng rng{std::mt19937_64(seed ^ 0x9e3779b97f4a7c15ULL)};
    Representation out = rep;
    out.perturbations.push_back({seed, m});
    for (Mat2& g : out.generators) {
      const double x = 2 * rng.uniform() - 1, y = 2 * rng.uniform() - 1, z = 2 * rng.uniform() - 1;
      // exp of the traceless matrix m*[[x, y], [z, -x]]
      const double delta = m * m * (x * x + y * z);
      double ch, sh;
      if (delta > 0) {
        const double r = std::sqrt(delta);
        ch = std::cosh(r);
        sh = std::sinh(r) / r;
      } else if (delta < 0) {
        const double r = std::sqrt(-delta);
        ch = std::cos(r);
        sh = std::sin(r) / r;
      } else {
        ch = 1;
        sh = 1;
      }
      const Mat2 e{ch + sh * m * x, sh * m * y, sh * m * z, ch - sh * m * x};
      g = (e * g).normalized().projective_form();
    }
    try {
      out.certificate = certify_ping_pong(out);
    } catch (const SamplerError&) {
      continue;
    }
    if (out.certificate->arrangement != before) continue;
    return out;
  }
  throw SamplerError("perturbation could not be certified after shrinking");
}

}  // namespace lenequiv
