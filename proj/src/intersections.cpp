#include "lenequiv/intersections.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>

#include <omp.h>

#include "lenequiv/errors.hpp"

namespace lenequiv {

std::vector<Word> reduced_words_up_to(int rank, int max_len) {
  std::vector<Word> out{Word{}};
  std::vector<std::vector<Letter>> frontier{{}};
  std::vector<Letter> alphabet;
  for (int g = 1; g <= rank; ++g) {
    alphabet.push_back(g);
    alphabet.push_back(-g);
  }
  std::sort(alphabet.begin(), alphabet.end(),
            [](Letter x, Letter y) { return letter_key(x) < letter_key(y); });
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<Letter>> next;
    for (const auto& w : frontier) {
      for (Letter l : alphabet) {
        if (!w.empty() && w.back() == -l) continue;
        auto v = w;
        v.push_back(l);
        out.emplace_back(std::span<const Letter>(v));
        next.push_back(std::move(v));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

Word double_coset_representative(const Word& h, const Word& left, const Word& right) {
  const std::size_t shortest = std::max<std::size_t>(1, std::min(left.size(), right.size()));
  int window = static_cast<int>(h.size() / shortest) + 2;
  auto search = [&](int k) {
    Word best = h;
    for (int i = -k; i <= k; ++i) {
      const Word lh = compose(power(left, i), h);
      for (int j = -k; j <= k; ++j) best = std::min(best, compose(lh, power(right, j)));
    }
    return best;
  };
  Word best = search(window);
  for (;;) {
    Word wider = search(window + 1);
    if (wider == best) return best;
    best = std::move(wider);
    ++window;
  }
}

namespace {

struct Setup {
  ProperPower alpha_root;
  ProperPower beta_root;
  Mat2 normalize;                 // A_alpha root axis -> imaginary axis
  std::vector<Mat2> normalized;   // conjugated generators, slot 2(g-1) + (inverse)
  BoundaryPoint beta_repelling;   // root axis of beta, normalized coordinates
  BoundaryPoint beta_attracting;
  double tau_root = 0;
  Word alpha_inverse_root;
};

void check_cyclically_reduced(const Word& w, const char* name) {
  if (w.empty()) throw DegenerateInputError(std::string(name) + " is the identity");
  if (!cyclic_reduction(w).conjugator.empty())
    throw DegenerateInputError(std::string(name) + " is not cyclically reduced: " + w.str());
}

Setup make_setup(const Word& alpha, const Word& beta, const Representation& rep) {
  check_cyclically_reduced(alpha, "alpha");
  check_cyclically_reduced(beta, "beta");
  if (!rep.certificate) throw SamplerError("representation is not certified");
  if (alpha.max_generator() > rep.rank() || beta.max_generator() > rep.rank())
    throw AlphabetError("word uses a generator beyond the representation's rank");

  Setup s;
  s.alpha_root = is_proper_power(alpha);
  s.beta_root = is_proper_power(beta);
  const Mat2 ma = evaluate(s.alpha_root.root, rep);
  const Axis aa = axis(ma);
  s.tau_root = aa.translation_length;
  s.normalize = normalizing_map(aa);
  const Mat2 back = s.normalize.inverse();
  for (const Mat2& g : rep.generators) {
    const Mat2 n = s.normalize * g.normalized() * back;
    s.normalized.push_back(n);
    s.normalized.push_back(n.inverse());
  }
  const Axis ab = apply(s.normalize, axis(evaluate(s.beta_root.root, rep)));
  s.beta_repelling = ab.repelling;
  s.beta_attracting = ab.attracting;
  s.alpha_inverse_root = invert(s.alpha_root.root);
  return s;
}

Mat2 product(const Setup& s, const Word& w) {
  Mat2 m = Mat2::identity();
  for (Letter l : w.letters()) m = renormalize(m * s.normalized[arc_slot(l)]);
  return m;
}

// Boundary-circle angular distance from p to the fixed points 0 and infinity.
double separation_from_axis_ends(const BoundaryPoint& p) {
  if (p.infinite) return 0;
  const double t = 2 * std::atan(std::abs(p.x));
  return std::min(t, M_PI - t);
}

struct RawCrossing {
  Word h;  // translated so that its crossing lies in [0, tau_root)
  double coordinate = 0;
  double height = 0;  // crossing is i * height in normalized coordinates
  int sign = 0;
  double angle = 0;
};

bool scan_candidate(const Setup& s, const Word& h, RawCrossing& out, std::string& error,
                    bool retry = true);

// Crossing of the imaginary axis with h * A_beta, or nothing. Sets `error`
// instead of throwing so that it can run inside a parallel region.
bool scan_candidate(const Setup& s, const Word& h, RawCrossing& out, std::string& error, bool retry) {
  const Word root_b = s.beta_root.root;
  const Word conj = compose(compose(h, root_b), invert(h));
  if (conj == s.alpha_root.root || conj == s.alpha_inverse_root) return false;

  const Mat2 m = product(s, h);
  const BoundaryPoint u = apply(m, s.beta_repelling);
  const BoundaryPoint v = apply(m, s.beta_attracting);
  if (std::min(separation_from_axis_ends(u), separation_from_axis_ends(v)) < kBoundarySeparation) {
    // Crossing is a double-coset invariant. Words like alpha^k x push the
    // translate towards the axis ends, so decide with the least representative.
    if (retry) {
      const Word least = double_coset_representative(h, s.alpha_root.root, root_b);
      if (least != h) return scan_candidate(s, least, out, error, false);
    }
    error = "translate by " + h.str() + " has an endpoint within tolerance of the axis ends";
    return false;
  }
  if (u.x * v.x >= 0) return false;

  const double height = std::sqrt(-u.x * v.x);
  double coordinate = std::log(height);
  const long k = static_cast<long>(std::floor(coordinate / s.tau_root));
  out.h = compose(power(s.alpha_root.root, -k), h);
  coordinate -= static_cast<double>(k) * s.tau_root;
  // Guard the half-open window against rounding at its right end.
  if (coordinate >= s.tau_root) coordinate -= s.tau_root;
  if (coordinate < 0) coordinate = 0;
  out.coordinate = coordinate;
  out.height = std::exp(coordinate);
  // The imaginary axis points up; h A_beta runs from u to v.
  out.sign = v.x > u.x ? -1 : 1;
  const double centre = 0.5 * (u.x + v.x);
  const double radius = 0.5 * std::abs(v.x - u.x);
  out.angle = std::acos(std::clamp((v.x > u.x ? 1.0 : -1.0) * centre / radius, -1.0, 1.0));
  return true;
}

struct CandidateSpace {
  std::vector<Word> prefixes_a;
  std::vector<Word> prefixes_b_inv;
  std::vector<Word> middles;

  std::size_t size() const { return prefixes_a.size() * prefixes_b_inv.size() * middles.size(); }
  Word at(std::size_t idx) const {
    const std::size_t m = idx % middles.size();
    idx /= middles.size();
    const std::size_t q = idx % prefixes_b_inv.size();
    const std::size_t p = idx / prefixes_b_inv.size();
    return compose(compose(prefixes_a[p], middles[m]), prefixes_b_inv[q]);
  }
};

CandidateSpace make_candidates(const Setup& s, int rank, int word_bound) {
  CandidateSpace c;
  auto prefixes = [](const Word& w) {
    std::vector<Word> out;
    for (std::size_t k = 0; k < w.size(); ++k)
      out.emplace_back(w.letters().subspan(0, k));
    return out;
  };
  c.prefixes_a = prefixes(s.alpha_root.root);
  for (const Word& q : prefixes(s.beta_root.root)) c.prefixes_b_inv.push_back(invert(q));
  c.middles = reduced_words_up_to(rank, word_bound);
  return c;
}

std::vector<RawCrossing> scan_serial(const Setup& s, const CandidateSpace& c) {
  std::vector<RawCrossing> found;
  std::string error;
  for (std::size_t i = 0; i < c.size(); ++i) {
    RawCrossing rc;
    if (scan_candidate(s, c.at(i), rc, error)) found.push_back(std::move(rc));
    if (!error.empty()) throw DegeneracyError(error);
  }
  return found;
}

std::vector<RawCrossing> scan_parallel(const Setup& s, const CandidateSpace& c) {
  std::vector<std::vector<RawCrossing>> per_thread(static_cast<std::size_t>(omp_get_max_threads()));
  std::string first_error;
  const long total = static_cast<long>(c.size());
#pragma omp parallel
  {
    auto& local = per_thread[static_cast<std::size_t>(omp_get_thread_num())];
    std::string error;
#pragma omp for schedule(dynamic, 256)
    for (long i = 0; i < total; ++i) {
      if (!error.empty()) continue;
      RawCrossing rc;
      if (scan_candidate(s, c.at(static_cast<std::size_t>(i)), rc, error)) local.push_back(std::move(rc));
    }
    if (!error.empty()) {
#pragma omp critical(lenequiv_scan_error)
      if (first_error.empty()) first_error = error;
    }
  }
  if (!first_error.empty()) throw DegeneracyError(first_error);
  std::vector<RawCrossing> found;
  for (auto& v : per_thread) std::move(v.begin(), v.end(), std::back_inserter(found));
  return found;
}

// One crossing per root-level double coset, keyed by its least element. The
// crossing is a coset invariant, so it is re-decided with that least element:
// long representatives have translates crowded near the boundary where a
// rounding error can fake a crossing.
std::map<Word, RawCrossing> distinct_root_cosets(const Setup& s, std::vector<RawCrossing> raw) {
  std::sort(raw.begin(), raw.end(), [](const RawCrossing& x, const RawCrossing& y) { return x.h < y.h; });
  raw.erase(std::unique(raw.begin(), raw.end(),
                        [](const RawCrossing& x, const RawCrossing& y) { return x.h == y.h; }),
            raw.end());
  std::map<Word, RawCrossing> cosets;
  std::set<Word> rejected;
  for (const auto& rc : raw) {
    Word key = double_coset_representative(rc.h, s.alpha_root.root, s.beta_root.root);
    if (cosets.count(key) || rejected.count(key)) continue;
    RawCrossing confirmed;
    std::string error;
    const bool hit = scan_candidate(s, key, confirmed, error, false);
    if (!error.empty()) throw DegeneracyError(error);
    if (hit)
      cosets.emplace(std::move(key), std::move(confirmed));
    else
      rejected.insert(std::move(key));
  }
  return cosets;
}

IntersectionRecord make_record(const Setup& s, const Word& witness, double coordinate, double height,
                               int sign, double angle) {
  IntersectionRecord r;
  r.witness = witness;
  r.coset_key = witness.str();
  r.axis_coordinate = coordinate;
  r.point = apply(s.normalize.inverse(), HPoint{0, height});
  r.sign = sign;
  r.angle = angle;
  return r;
}

std::vector<IntersectionRecord> expand_powers(const Setup& s, const Word& alpha, const Word& beta,
                                              const std::map<Word, RawCrossing>& cosets) {
  std::vector<IntersectionRecord> out;
  const long na = s.alpha_root.exponent;
  const long nb = s.beta_root.exponent;
  for (const auto& [key, rc] : cosets) {
    for (long ka = 0; ka < na; ++ka) {
      const Word shifted = compose(power(s.alpha_root.root, ka), rc.h);
      const double coordinate = rc.coordinate + static_cast<double>(ka) * s.tau_root;
      for (long kb = 0; kb < nb; ++kb) {
        const Word w = compose(shifted, power(s.beta_root.root, kb));
        const Word witness = (na == 1 && nb == 1) ? key : double_coset_representative(w, alpha, beta);
        out.push_back(make_record(s, witness, coordinate, std::exp(coordinate), rc.sign, rc.angle));
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const IntersectionRecord& x, const IntersectionRecord& y) { return x.witness < y.witness; });
  return out;
}

std::vector<RawCrossing> scan(const Setup& s, int rank, int word_bound, Execution exec) {
  if (word_bound < 0) throw DegenerateInputError("word bound must be nonnegative");
  const CandidateSpace c = make_candidates(s, rank, word_bound);
  return exec == Execution::serial ? scan_serial(s, c) : scan_parallel(s, c);
}

}  // namespace

std::vector<IntersectionRecord> mutual_intersections(const Word& alpha, const Word& beta,
                                                     const Representation& rep, int word_bound,
                                                     Execution exec) {
  const Setup s = make_setup(alpha, beta, rep);
  const auto cosets = distinct_root_cosets(s, scan(s, rep.rank(), word_bound, exec));
  return expand_powers(s, alpha, beta, cosets);
}

std::vector<IntersectionRecord> self_intersections(const Word& alpha, const Representation& rep,
                                                   int word_bound, Execution exec) {
  const Setup s = make_setup(alpha, alpha, rep);
  if (s.alpha_root.is_power)
    throw DegenerateInputError("self-intersections need a primitive word, got " + alpha.str());
  const auto cosets = distinct_root_cosets(s, scan(s, rep.rank(), word_bound, exec));

  // g and g^-1 are the two branches through one point; keep the smaller key.
  std::vector<IntersectionRecord> out;
  for (const auto& [key, rc] : cosets) {
    const Word partner = double_coset_representative(invert(key), alpha, alpha);
    if (partner < key && cosets.count(partner)) continue;
    out.push_back(make_record(s, key, rc.coordinate, rc.height, rc.sign, rc.angle));
  }
  return out;
}

std::optional<IntersectionRecord> crossing_for(const Word& alpha, const Word& beta, const Word& h,
                                               const Representation& rep) {
  const Setup s = make_setup(alpha, beta, rep);
  RawCrossing rc;
  std::string error;
  const bool hit = scan_candidate(s, h, rc, error);
  if (!error.empty()) throw DegeneracyError(error);
  if (!hit) return std::nullopt;
  return make_record(s, double_coset_representative(h, alpha, beta), rc.coordinate, rc.height,
                     rc.sign, rc.angle);
}

StabilizedCount stabilized_count(const Word& alpha, const Word& beta, const Representation& rep,
                                 int start_bound, int hard_cap) {
  // The count is symmetric; fixing the longer word keeps the candidate set small.
  const bool swap = beta.size() > alpha.size();
  const Word& fixed = swap ? beta : alpha;
  const Word& moving = swap ? alpha : beta;
  StabilizedCount out;
  out.hard_cap = hard_cap;
  for (int w = start_bound; w <= hard_cap; ++w) {
    out.history.push_back(static_cast<int>(mutual_intersections(fixed, moving, rep, w).size()));
    const std::size_t n = out.history.size();
    if (n >= 2 && out.history[n - 1] == out.history[n - 2]) {
      out.count = out.history.back();
      out.bound = w - 1;
      return out;
    }
  }
  throw InconclusiveError("intersection count of " + alpha.str() + " and " + beta.str() +
                          " did not stabilize by word bound " + std::to_string(hard_cap));
}

}  // namespace lenequiv
