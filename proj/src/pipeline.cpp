#include "lenequiv/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "lenequiv/errors.hpp"
#include "lenequiv/trace_poly.hpp"

namespace lenequiv {

namespace {

void require_positive(int n) {
  if (n < 1) throw DegenerateInputError("pair exponent must be >= 1, got " + std::to_string(n));
}

double relative_gap(double x, double y) {
  const double scale = std::max({std::abs(x), std::abs(y), 1e-300});
  return std::abs(x - y) / scale;
}

}  // namespace

CurvePair build_pair_self(const Word& alpha, const Word& g, int n) {
  require_positive(n);
  CurvePair p;
  p.kind = PairKind::self;
  p.n = n;
  p.alpha = alpha;
  p.beta = alpha;
  p.g = g;
  const Word ag = conjugate(alpha, g);
  p.left = compose(power(alpha, n), ag);
  p.right = compose(power(ag, n), alpha);
  return p;
}

CurvePair build_pair_self(const Word& alpha, const IntersectionRecord& record, int n) {
  return build_pair_self(alpha, record.witness, n);
}

CurvePair build_pair_general(const Word& alpha, const Word& beta, const Word& g, const Word& h,
                             int n) {
  require_positive(n);
  if (!are_conjugate(compose(alpha, conjugate(beta, g)), compose(alpha, conjugate(beta, h))))
    throw HypothesisError("loop products at " + g.str() + " and " + h.str() + " are not conjugate");
  const Word ca = cyclic_reduction(alpha).core;
  const Word cb = cyclic_reduction(beta).core;
  if (g == h || double_coset_representative(g, ca, cb) == double_coset_representative(h, ca, cb))
    throw HypothesisError(g.str() + " and " + h.str() + " name the same intersection point");
  CurvePair p;
  p.kind = PairKind::general;
  p.n = n;
  p.alpha = alpha;
  p.beta = beta;
  p.g = g;
  p.h = h;
  const Word an = power(alpha, n);
  p.left = compose(an, conjugate(beta, g));
  p.right = compose(an, conjugate(beta, h));
  return p;
}

LengthCheck check_equal_length(const CurvePair& pair, const std::vector<Representation>& reps,
                               double tol) {
  LengthCheck out;
  const std::size_t m = reps.size();
  out.tau_left.assign(m, 0);
  out.tau_right.assign(m, 0);
  std::vector<double> deviation(m, 0);
  std::vector<char> trace_ok(m, 1);
  std::string failure;

  const Word bg = conjugate(pair.beta, pair.g), bh = conjugate(pair.beta, pair.h);
  const Word abg = compose(pair.alpha, bg), abh = compose(pair.alpha, bh);

#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(m); ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      if (!reps[k].certificate) throw SamplerError("representation is not certified");
      out.tau_left[k] = geodesic_length(pair.left, reps[k]);
      out.tau_right[k] = geodesic_length(pair.right, reps[k]);
      deviation[k] = relative_gap(out.tau_left[k], out.tau_right[k]);
      if (pair.kind == PairKind::general) {
        const double d1 = relative_gap(evaluate(bg, reps[k]).trace(), evaluate(bh, reps[k]).trace());
        const double d2 =
            relative_gap(std::abs(evaluate(abg, reps[k]).trace()), std::abs(evaluate(abh, reps[k]).trace()));
        trace_ok[k] = d1 <= tol && d2 <= tol;
      }
    } catch (const Error& e) {
#pragma omp critical(lenequiv_length_error)
      if (failure.empty()) failure = e.what();
    }
  }
  if (!failure.empty()) throw VerificationError("equal-length check failed: " + failure);

  out.max_deviation = m == 0 ? 0 : *std::max_element(deviation.begin(), deviation.end());
  out.numeric = m > 0 && out.max_deviation <= tol &&
                std::all_of(trace_ok.begin(), trace_ok.end(), [](char c) { return c != 0; });

  if (pair.kind == PairKind::self) {
    out.symbolic = verify_trace_identity(pair.n);
  } else {
    out.symbolic = are_conjugate(bg, bh) && are_conjugate(abg, abh);
  }
  return out;
}

ConjugacyCheck check_nonconjugate(const CurvePair& pair) {
  return {!are_conjugate(pair.left, pair.right), !is_conjugate_to_inverse(pair.left, pair.right)};
}

ThresholdScan find_min_N(const Word& alpha, const Word& g, int n_max) {
  ThresholdScan scan;
  scan.n_max = n_max;
  for (int n = 1; n <= n_max; ++n)
    scan.table.push_back({n, check_nonconjugate(build_pair_self(alpha, g, n))});
  if (n_max < 2) return scan;
  // Walk down from n_max while rows pass; N is the last failing n.
  int N = n_max;
  while (N >= 1) {
    const auto& c = scan.table[static_cast<std::size_t>(N - 1)].check;
    if (!(c.nonconjugate && c.not_conjugate_to_inverse)) break;
    --N;
  }
  if (N < n_max) scan.N = N;
  return scan;
}

const char* to_string(Filling f) {
  switch (f) {
    case Filling::yes: return "yes";
    case Filling::no: return "no";
    case Filling::inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

bool is_pair_of_pants(const SurfaceSpec& s) { return s.genus == 0 && s.ends() == 3; }

std::vector<Word> boundary_of(const Representation& rep) {
  if (!rep.certificate) throw SamplerError("representation is not certified");
  return boundary_words(rep.certificate->arrangement);
}

// Self-intersection count at stabilization.
int stable_self_count(const Word& z, const Representation& rep) {
  int previous = -1;
  for (int w = kStabilizationStart; w <= kStabilizationCap; ++w) {
    const int c = static_cast<int>(self_intersections(z, rep, w).size());
    if (c == previous) return c;
    previous = c;
  }
  throw InconclusiveError("self-intersection count of " + z.str() + " did not stabilize");
}

}  // namespace

std::vector<Word> simple_candidates(const Representation& rep, int bound) {
  const std::vector<Word> boundary = boundary_of(rep);
  std::set<CyclicWord> seen;
  std::vector<Word> out;
  for (const Word& w : reduced_words_up_to(rep.rank(), bound)) {
    if (w.empty() || !cyclic_reduction(w).conjugator.empty()) continue;
    const CyclicWord c = cyclic_normal_form(w);
    const CyclicWord ci = cyclic_normal_form(invert(w));
    const CyclicWord& key = std::min(c, ci);
    if (!seen.insert(key).second) continue;
    const Word z = key.as_word();
    if (is_proper_power(z).is_power || is_peripheral(z, boundary)) continue;
    if (stable_self_count(z, rep) != 0) continue;
    out.push_back(z);
  }
  return out;
}

FillingVerdict is_filling(const Word& w_in, const Representation& rep, int scc_word_bound) {
  if (w_in.empty()) throw DegenerateInputError("filling test needs a nontrivial word");
  const Word w = cyclic_reduction(w_in).core;
  FillingVerdict v;
  v.bound = scc_word_bound;

  if (is_peripheral(w, boundary_of(rep))) {
    v.verdict = Filling::no;
    v.exact = true;
    v.basis = "peripheral";
    return v;
  }
  if (is_pair_of_pants(rep.surface)) {
    v.verdict = Filling::yes;
    v.exact = true;
    v.basis = "pair of pants: every non-peripheral curve fills";
    return v;
  }

  try {
    // A simple curve is disjoint from itself, whatever its length.
    const Word root = is_proper_power(w).root;
    if (stable_self_count(root, rep) == 0) {
      v.verdict = Filling::no;
      v.witness = cyclic_normal_form(root).as_word();
      v.basis = "simple curve";
      return v;
    }
    const std::vector<Word> at_bound = simple_candidates(rep, scc_word_bound);
    for (const Word& z : at_bound) {
      const int i = stabilized_count(z, w, rep).count;
      v.candidates.push_back({z, i});
      if (i == 0) {
        v.verdict = Filling::no;
        v.witness = z;
        v.exact = false;
        v.basis = "disjoint simple closed curve";
        return v;
      }
    }
    const bool nonempty_below = scc_word_bound >= 2 && !simple_candidates(rep, scc_word_bound - 1).empty();
    if (!at_bound.empty() && nonempty_below) {
      v.verdict = Filling::yes;
      v.basis = "every simple candidate up to the bound intersects";
    } else {
      v.basis = "no simple candidates at two successive bounds";
    }
  } catch (const InconclusiveError& e) {
    v.verdict = Filling::inconclusive;
    v.basis = e.what();
  }
  return v;
}

FillingTable verify_filling_pairs(const Word& alpha, const Word& g, int n_lo, int n_hi,
                                  const Representation& rep, int scc_word_bound) {
  FillingTable t;
  t.alpha = is_filling(alpha, rep, scc_word_bound);
  if (t.alpha.verdict != Filling::yes)
    throw HypothesisError(alpha.str() + " is not known to be filling (" + to_string(t.alpha.verdict) + ")");
  for (const auto& c : t.alpha.candidates) t.context.push_back({c.z, 2 * c.intersection});
  for (int n = std::max(n_lo, 1); n <= n_hi; ++n) {
    const CurvePair p = build_pair_self(alpha, g, n);
    t.rows.push_back({n, is_filling(p.left, rep, scc_word_bound), is_filling(p.right, rep, scc_word_bound)});
  }
  return t;
}

CosineRuleCheck cosine_rule_check(const Word& alpha, const Word& g, int n, const Representation& rep) {
  require_positive(n);
  const auto crossing = crossing_for(alpha, alpha, g, rep);
  if (!crossing) throw HypothesisError(g.str() + " does not witness a self-intersection of " + alpha.str());
  const double tau = geodesic_length(alpha, rep);
  const CurvePair p = build_pair_self(alpha, g, n);
  CosineRuleCheck c;
  c.angle = M_PI - crossing->angle;
  c.measured_half_length = geodesic_length(p.left, rep) / 2;
  c.predicted_half_length = hyperbolic_cosine_rule(n * tau / 2, tau / 2, c.angle);
  c.relative_error = relative_gap(c.predicted_half_length, c.measured_half_length);
  return c;
}

EquivalenceVerdict evaluate_pair(const CurvePair& pair, const std::vector<Representation>& reps,
                                 double tol, std::optional<int> filling_bound) {
  EquivalenceVerdict v;
  v.pair = pair;
  v.length = check_equal_length(pair, reps, tol);
  v.conjugacy = check_nonconjugate(pair);
  if (filling_bound && !reps.empty()) {
    v.filling_left = is_filling(pair.left, reps.front(), *filling_bound);
    v.filling_right = is_filling(pair.right, reps.front(), *filling_bound);
  }
  return v;
}

}  // namespace lenequiv
