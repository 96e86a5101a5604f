#include "lenequiv/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "lenequiv/bracket.hpp"
#include "lenequiv/errors.hpp"
#include "lenequiv/intersections.hpp"
#include "lenequiv/pipeline.hpp"
#include "lenequiv/trace_poly.hpp"

namespace lenequiv {

namespace {

struct TaskName {
  Task task;
  const char* name;
};
constexpr TaskName kTasks[] = {
    {Task::bracket, "bracket"}, {Task::bracket_self, "bracket-self"}, {Task::pairs, "pairs"},
    {Task::verify, "verify"},   {Task::trace_id, "trace-id"},         {Task::filling, "filling"},
    {Task::sample_reps, "sample-reps"},
};

}  // namespace

const char* to_string(Task t) {
  for (const auto& [task, name] : kTasks)
    if (task == t) return name;
  return "?";
}

Task parse_task(const std::string& name) {
  for (const auto& [task, n] : kTasks)
    if (name == n) return task;
  throw ConfigError("unknown task '" + name + "'");
}

Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "text") return Format::text;
  throw ConfigError("unknown format '" + name + "' (json, csv or text)");
}

double round_sig(double x, int digits) {
  if (x == 0 || !std::isfinite(x)) return x == 0 ? 0.0 : x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return std::strtod(buf, nullptr);
}

// ---------------------------------------------------------------- config

namespace {

template <typename T>
T get_as(const Json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config field '") + key + "': " + e.what());
  }
}

std::vector<std::uint64_t> parse_seeds(const Json& s) {
  std::vector<std::uint64_t> out;
  if (s.is_array()) {
    for (const auto& v : s) {
      if (!v.is_number_unsigned()) throw ConfigError("seeds must be nonnegative integers");
      out.push_back(v.get<std::uint64_t>());
    }
  } else if (s.is_object()) {
    const auto first = get_as<std::uint64_t>(s, "first");
    const auto count = get_as<std::uint64_t>(s, "count");
    for (std::uint64_t k = 0; k < count; ++k) out.push_back(first + k);
  } else {
    throw ConfigError("seeds must be a list or {\"first\", \"count\"}");
  }
  return out;
}

}  // namespace

RunConfig parse_config(const Json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  static const std::set<std::string> known = {
      "surface", "words",         "task",           "seeds",   "spread",        "word_bound",
      "n_range", "tol",           "output_path",    "scc_word_bound", "threshold_n_max", "perturb",
      "include_timing"};
  for (const auto& [key, value] : j.items())
    if (!known.count(key)) throw ConfigError("unknown config field '" + key + "'");

  RunConfig c;
  if (j.contains("surface")) {
    const Json& s = j.at("surface");
    static const std::set<std::string> surface_keys = {"genus", "boundary_components", "punctures"};
    for (const auto& [key, value] : s.items())
      if (!surface_keys.count(key)) throw ConfigError("unknown surface field '" + key + "'");
    c.surface.genus = s.value("genus", 0);
    c.surface.boundary_components = s.value("boundary_components", 0);
    c.surface.punctures = s.value("punctures", 0);
  }
  if (j.contains("words")) {
    if (!j.at("words").is_object()) throw ConfigError("words must map names to word strings");
    for (const auto& [name, text] : j.at("words").items()) {
      if (!text.is_string()) throw ConfigError("word '" + name + "' must be a string");
      c.words[name] = text.get<std::string>();
    }
  }
  if (j.contains("task")) c.task = parse_task(get_as<std::string>(j, "task"));
  if (j.contains("seeds")) c.seeds = parse_seeds(j.at("seeds"));
  if (j.contains("spread")) c.spread = get_as<double>(j, "spread");
  if (j.contains("word_bound")) c.word_bound = get_as<int>(j, "word_bound");
  if (j.contains("n_range")) {
    const auto r = get_as<std::vector<int>>(j, "n_range");
    if (r.size() != 2) throw ConfigError("n_range must be [lo, hi]");
    c.n_lo = r[0];
    c.n_hi = r[1];
  }
  if (j.contains("tol")) c.tol = get_as<double>(j, "tol");
  if (j.contains("output_path")) c.output_path = get_as<std::string>(j, "output_path");
  if (j.contains("scc_word_bound") && !j.at("scc_word_bound").is_null())
    c.scc_word_bound = get_as<int>(j, "scc_word_bound");
  if (j.contains("threshold_n_max")) c.threshold_n_max = get_as<int>(j, "threshold_n_max");
  if (j.contains("perturb")) {
    const Json& p = j.at("perturb");
    c.perturb_count = p.value("count", 0);
    c.perturb_magnitude = p.value("magnitude", 0.05);
  }
  if (j.contains("include_timing")) c.include_timing = get_as<bool>(j, "include_timing");
  validate(c);
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config '" + path + "' is not valid JSON: " + e.what());
  }
  return parse_config(j);
}

namespace {

std::vector<std::string> required_words(Task t) {
  switch (t) {
    case Task::bracket: return {"alpha", "beta"};
    case Task::verify: return {"alpha", "beta"};
    case Task::bracket_self:
    case Task::pairs:
    case Task::filling: return {"alpha"};
    case Task::trace_id:
    case Task::sample_reps: return {};
  }
  return {};
}

}  // namespace

void validate(const RunConfig& c) {
  try {
    c.surface.validate();
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
  for (const auto& name : required_words(c.task))
    if (!c.words.count(name))
      throw ConfigError(std::string("task ") + to_string(c.task) + " needs word '" + name + "'");
  for (const auto& [name, text] : c.words) {
    try {
      if (Word::parse(text, c.surface.rank()).empty()) throw ConfigError("word '" + name + "' is the identity");
    } catch (const AlphabetError& e) {
      throw ConfigError("word '" + name + "': " + e.what());
    }
  }
  if (c.seeds.empty()) throw ConfigError("seeds must not be empty");
  if (!(c.spread >= kMinSpread)) throw ConfigError("spread must be >= 1.5");
  if (c.word_bound < 1) throw ConfigError("word_bound must be positive");
  if (c.n_lo < 1 || c.n_hi < c.n_lo) throw ConfigError("n_range must satisfy 1 <= lo <= hi");
  if (!(c.tol > 0 && c.tol <= 1e-3)) throw ConfigError("tol must lie in (0, 1e-3]");
  if (c.scc_word_bound && *c.scc_word_bound < 1) throw ConfigError("scc_word_bound must be positive");
  if (c.threshold_n_max < 0) throw ConfigError("threshold_n_max must be nonnegative");
  if (c.perturb_count < 0 || !(c.perturb_magnitude >= 0))
    throw ConfigError("perturb count and magnitude must be nonnegative");
}

Json config_to_json(const RunConfig& c) {
  Json j;
  j["surface"] = {{"genus", c.surface.genus},
                  {"boundary_components", c.surface.boundary_components},
                  {"punctures", c.surface.punctures}};
  Json words = Json::object();
  for (const auto& [name, text] : c.words) words[name] = text;
  j["words"] = words;
  j["task"] = to_string(c.task);
  j["seeds"] = c.seeds;
  j["spread"] = round_sig(c.spread);
  j["word_bound"] = c.word_bound;
  j["n_range"] = {c.n_lo, c.n_hi};
  j["tol"] = round_sig(c.tol);
  j["output_path"] = c.output_path;
  j["scc_word_bound"] = c.scc_word_bound ? Json(*c.scc_word_bound) : Json(nullptr);
  j["threshold_n_max"] = c.threshold_n_max;
  j["perturb"] = {{"count", c.perturb_count}, {"magnitude", round_sig(c.perturb_magnitude)}};
  j["include_timing"] = c.include_timing;
  return j;
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ConfigError*>(&e)) return kExitConfig;
  if (dynamic_cast<const InconclusiveError*>(&e)) return kExitInconclusive;
  if (dynamic_cast<const VerificationError*>(&e)) return kExitVerification;
  if (dynamic_cast<const SamplerError*>(&e)) return kExitSampler;
  return kExitOther;
}

std::vector<Representation> sample_representations(const RunConfig& config) {
  std::vector<Representation> reps;
  for (std::uint64_t seed : config.seeds) {
    reps.push_back(sample_representation(config.surface, seed, config.spread));
    const Representation base = reps.back();
    for (int k = 1; k <= config.perturb_count; ++k)
      reps.push_back(perturb(base, seed * 1000003ULL + static_cast<std::uint64_t>(k), config.perturb_magnitude));
  }
  return reps;
}

// ---------------------------------------------------------------- helpers

namespace {

double round_fixed(double x, double scale) {
  const double r = std::round(x * scale) / scale;
  return r == 0 ? 0.0 : r;
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

Json boundary_json(const BoundaryPoint& p) { return p.infinite ? Json("inf") : Json(round_sig(p.x)); }

Json representation_json(const Representation& rep) {
  Json j;
  j["surface"] = rep.surface.str();
  j["seed"] = rep.seed;
  j["spread"] = round_sig(rep.spread);
  Json mats = Json::array();
  for (const Mat2& m : rep.generators)
    mats.push_back({round_sig(m.a), round_sig(m.b), round_sig(m.c), round_sig(m.d)});
  j["matrices"] = mats;
  if (rep.certificate) {
    Json arcs = Json::array();
    for (const auto& a : rep.certificate->arcs) arcs.push_back({boundary_json(a.start), boundary_json(a.end)});
    std::string arrangement;
    for (Letter l : rep.certificate->arrangement) arrangement += letter_char(l);
    j["certificate"] = {{"arcs", arcs},
                        {"arrangement", arrangement},
                        {"min_gap", round_sig(rep.certificate->min_gap)}};
  } else {
    j["certificate"] = nullptr;
  }
  Json perturbations = Json::array();
  for (const auto& p : rep.perturbations)
    perturbations.push_back({{"seed", p.seed}, {"magnitude", round_sig(p.magnitude)}});
  j["perturbations"] = perturbations;
  return j;
}

std::string rep_label(const Representation& rep) {
  std::string s = std::to_string(rep.seed);
  if (!rep.perturbations.empty()) s += ".p" + std::to_string(rep.perturbations.back().seed % 1000003ULL);
  return s;
}

Json record_json(const IntersectionRecord& r) {
  return {{"witness", r.witness.str()},
          {"point", {round_fixed(r.point.x, 1e6), round_fixed(r.point.y, 1e6)}},
          {"sign", r.sign},
          {"coset_key", r.coset_key},
          {"axis_coordinate", round_fixed(r.axis_coordinate, 1e6)},
          {"angle", round_fixed(r.angle, 1e6)}};
}

Json sum_json(const FormalSum& s) {
  Json terms = Json::array();
  for (const auto& [cls, k] : s.terms()) terms.push_back({{"class", cls.str()}, {"coefficient", k}});
  return terms;
}

Json filling_json(const FillingVerdict& v) {
  Json cands = Json::array();
  for (const auto& c : v.candidates) cands.push_back({{"z", c.z.str()}, {"intersection", c.intersection}});
  return {{"verdict", to_string(v.verdict)},
          {"witness", v.witness ? Json(v.witness->str()) : Json(nullptr)},
          {"exact", v.exact},
          {"bound", v.bound},
          {"basis", v.basis},
          {"candidates", cands}};
}

Word word_of(const RunConfig& c, const std::string& name) {
  return cyclic_reduction(Word::parse(c.words.at(name), c.surface.rank())).core;
}

// The witness of the first self-intersection unless the config names one.
Word self_witness(const RunConfig& c, const Word& alpha, const Representation& rep) {
  if (c.words.count("g")) return Word::parse(c.words.at("g"), c.surface.rank());
  const auto records = self_intersections(alpha, rep, c.word_bound);
  if (records.empty())
    throw HypothesisError(alpha.str() + " has no self-intersection up to word bound " + std::to_string(c.word_bound));
  return records.front().witness;
}

void pair_rows(Report& r, const std::vector<Representation>& reps, const std::vector<EquivalenceVerdict>& verdicts,
               Json& rows) {
  r.csv_header = {"seed", "n", "tau_left", "tau_right", "rel_dev", "nonconjugate", "filling_left", "filling_right"};
  for (const auto& v : verdicts) {
    const char* fl = v.filling_left ? to_string(v.filling_left->verdict) : "skipped";
    const char* fr = v.filling_right ? to_string(v.filling_right->verdict) : "skipped";
    rows.push_back({{"n", v.pair.n},
                    {"left", v.pair.left.str()},
                    {"right", v.pair.right.str()},
                    {"equal_length_numeric", v.length.numeric},
                    {"max_deviation", round_sig(v.length.max_deviation)},
                    {"equal_length_symbolic", v.length.symbolic},
                    {"nonconjugate", v.conjugacy.nonconjugate},
                    {"not_conjugate_to_inverse", v.conjugacy.not_conjugate_to_inverse},
                    {"filling_left", v.filling_left ? filling_json(*v.filling_left) : Json(nullptr)},
                    {"filling_right", v.filling_right ? filling_json(*v.filling_right) : Json(nullptr)},
                    {"length_equivalent", v.length_equivalent()}});
    for (std::size_t k = 0; k < reps.size(); ++k) {
      const double tl = v.length.tau_left[k], tr = v.length.tau_right[k];
      const double dev = std::abs(tl - tr) / std::max(std::abs(tl), 1e-300);
      r.csv_rows.push_back({rep_label(reps[k]), std::to_string(v.pair.n), fmt(tl), fmt(tr), fmt(dev),
                            v.conjugacy.nonconjugate ? "true" : "false", fl, fr});
    }
    if (!v.length.numeric || !v.length.symbolic) r.status = kExitVerification;
  }
}

Json threshold_json(const ThresholdScan& scan) {
  Json table = Json::array();
  for (const auto& row : scan.table)
    table.push_back({{"n", row.n},
                     {"nonconjugate", row.check.nonconjugate},
                     {"not_conjugate_to_inverse", row.check.not_conjugate_to_inverse}});
  return {{"N", scan.N ? Json(*scan.N) : Json(nullptr)}, {"n_max", scan.n_max}, {"table", table}};
}

void threshold_text(Report& r, const ThresholdScan& scan) {
  r.text_lines.push_back("observed N: " + (scan.N ? std::to_string(*scan.N) : std::string("not found")) +
                         " (scanned n = 1.." + std::to_string(scan.n_max) + ")");
}

void verdict_text(Report& r, const std::vector<EquivalenceVerdict>& verdicts) {
  r.text_lines.push_back("   n  numeric  symbolic  nonconj  not-inv  fill-L        fill-R        max-dev");
  for (const auto& v : verdicts) {
    char line[256];
    std::snprintf(line, sizeof line, "%4d  %-7s  %-8s  %-7s  %-7s  %-12s  %-12s  %.3g", v.pair.n,
                  yes_no(v.length.numeric), yes_no(v.length.symbolic), yes_no(v.conjugacy.nonconjugate),
                  yes_no(v.conjugacy.not_conjugate_to_inverse),
                  v.filling_left ? to_string(v.filling_left->verdict) : "-",
                  v.filling_right ? to_string(v.filling_right->verdict) : "-", v.length.max_deviation);
    r.text_lines.push_back(line);
  }
}

// ---------------------------------------------------------------- tasks

Json task_bracket(const RunConfig& c, Report& r) {
  const Word alpha = word_of(c, "alpha"), beta = word_of(c, "beta");
  const auto reps = sample_representations(c);
  const BracketResult b = bracket_terms(alpha, beta, reps.front(), c.word_bound);
  bool independent = true;
  for (std::size_t k = 1; k < reps.size(); ++k)
    independent = independent && bracket(alpha, beta, reps[k], c.word_bound) == b.sum;
  const StabilizedCount st = stabilized_count(alpha, beta, reps.front());
  if (!independent) r.status = kExitVerification;

  Json records = Json::array();
  for (const auto& rec : b.records) records.push_back(record_json(rec));
  r.csv_header = {"class", "coefficient"};
  for (const auto& [cls, k] : b.sum.terms()) r.csv_rows.push_back({cls.str(), std::to_string(k)});
  r.text_lines.push_back("[" + alpha.str() + ", " + beta.str() + "] = " + b.sum.str());
  r.text_lines.push_back("intersection points: " + std::to_string(b.records.size()) + ", stabilized count " +
                         std::to_string(st.count) + " at word bound " + std::to_string(st.bound));
  r.text_lines.push_back(std::string("metric independent over ") + std::to_string(reps.size()) +
                         " representations: " + yes_no(independent));
  return {{"alpha", alpha.str()},
          {"beta", beta.str()},
          {"word_bound", c.word_bound},
          {"records", records},
          {"terms", sum_json(b.sum)},
          {"sum", b.sum.str()},
          {"term_count", b.sum.term_count()},
          {"stabilization",
           {{"count", st.count}, {"bound", st.bound}, {"hard_cap", st.hard_cap}, {"history", st.history}}},
          {"metric_independent", independent},
          {"representations_checked", reps.size()}};
}

Json task_bracket_self(const RunConfig& c, Report& r) {
  const Word alpha = word_of(c, "alpha");
  const auto reps = sample_representations(c);
  const BracketResult b = bracket_self_terms(alpha, reps.front(), c.word_bound);
  auto keys = [&](const Representation& rep) {
    std::vector<std::string> k;
    for (const auto& rec : self_intersections(alpha, rep, c.word_bound)) k.push_back(rec.coset_key);
    return k;
  };
  const auto reference = keys(reps.front());
  bool independent = true;
  for (std::size_t k = 1; k < reps.size(); ++k) independent = independent && keys(reps[k]) == reference;
  if (!independent || !b.sum.is_zero()) r.status = kExitVerification;

  Json raw = Json::array();
  for (const auto& t : b.raw_terms)
    raw.push_back({{"witness", t.witness.str()}, {"class", t.cls.str()}, {"sign", t.sign}});
  Json records = Json::array();
  for (const auto& rec : b.records) records.push_back(record_json(rec));
  r.csv_header = {"witness", "class", "sign"};
  for (const auto& t : b.raw_terms) r.csv_rows.push_back({t.witness.str(), t.cls.str(), std::to_string(t.sign)});
  r.text_lines.push_back("[" + alpha.str() + ", " + alpha.str() + "] = " + b.sum.str());
  r.text_lines.push_back("self-intersections: " + std::to_string(b.records.size()) +
                         ", pre-cancellation terms: " + std::to_string(b.raw_terms.size()));
  for (const auto& t : b.raw_terms)
    r.text_lines.push_back("  " + std::string(t.sign > 0 ? "+" : "-") + "<" + t.cls.str() + ">  at " + t.witness.str());
  return {{"alpha", alpha.str()},
          {"word_bound", c.word_bound},
          {"records", records},
          {"pre_cancellation", raw},
          {"terms", sum_json(b.sum)},
          {"sum", b.sum.str()},
          {"is_zero", b.sum.is_zero()},
          {"metric_independent", independent},
          {"representations_checked", reps.size()}};
}

Json task_pairs(const RunConfig& c, Report& r) {
  const Word alpha = word_of(c, "alpha");
  const auto reps = sample_representations(c);
  const Word g = self_witness(c, alpha, reps.front());

  std::vector<EquivalenceVerdict> verdicts;
  double cosine_worst = 0;
  int cosine_cases = 0;
  for (int n = c.n_lo; n <= c.n_hi; ++n) {
    verdicts.push_back(evaluate_pair(build_pair_self(alpha, g, n), reps, c.tol, c.scc_word_bound));
    for (const auto& rep : reps) {
      cosine_worst = std::max(cosine_worst, cosine_rule_check(alpha, g, n, rep).relative_error);
      ++cosine_cases;
    }
  }
  const ThresholdScan scan = find_min_N(alpha, g, c.threshold_n_max > 0 ? c.threshold_n_max : c.n_hi);

  Json rows = Json::array();
  pair_rows(r, reps, verdicts, rows);
  r.text_lines.push_back("self pairs for alpha = " + alpha.str() + ", g = " + g.str() + " over " +
                         std::to_string(reps.size()) + " representations");
  threshold_text(r, scan);
  verdict_text(r, verdicts);
  r.text_lines.push_back("cosine rule: max relative error " + fmt(cosine_worst) + " over " +
                         std::to_string(cosine_cases) + " cases");
  return {{"alpha", alpha.str()},
          {"g", g.str()},
          {"representations_checked", reps.size()},
          {"rows", rows},
          {"threshold", threshold_json(scan)},
          {"cosine_rule", {{"max_relative_error", round_sig(cosine_worst)}, {"cases", cosine_cases}}}};
}

Json task_verify(const RunConfig& c, Report& r) {
  const Word alpha = word_of(c, "alpha"), beta = word_of(c, "beta");
  const auto reps = sample_representations(c);
  Word g, h;
  if (c.words.count("g") && c.words.count("h")) {
    g = Word::parse(c.words.at("g"), c.surface.rank());
    h = Word::parse(c.words.at("h"), c.surface.rank());
  } else {
    const auto pairs = equal_term_pairs(alpha, beta, reps.front(), c.word_bound);
    if (pairs.empty()) throw HypothesisError("no two intersection points with conjugate loop products");
    std::tie(g, h) = pairs.front();
  }

  std::vector<EquivalenceVerdict> verdicts;
  for (int n = c.n_lo; n <= c.n_hi; ++n)
    verdicts.push_back(evaluate_pair(build_pair_general(alpha, beta, g, h, n), reps, c.tol, c.scc_word_bound));

  ThresholdScan scan;
  scan.n_max = c.threshold_n_max > 0 ? c.threshold_n_max : c.n_hi;
  for (int n = 1; n <= scan.n_max; ++n)
    scan.table.push_back({n, check_nonconjugate(build_pair_general(alpha, beta, g, h, n))});
  for (int N = scan.n_max; N >= 1; --N) {
    const auto& ck = scan.table[static_cast<std::size_t>(N - 1)].check;
    if (!(ck.nonconjugate && ck.not_conjugate_to_inverse)) {
      if (N < scan.n_max) scan.N = N;
      break;
    }
    if (N == 1) scan.N = 0;
  }

  Json rows = Json::array();
  pair_rows(r, reps, verdicts, rows);
  r.text_lines.push_back("general pairs for alpha = " + alpha.str() + ", beta = " + beta.str() + ", g = " + g.str() +
                         ", h = " + h.str());
  threshold_text(r, scan);
  verdict_text(r, verdicts);
  return {{"alpha", alpha.str()}, {"beta", beta.str()}, {"g", g.str()},  {"h", h.str()},
          {"representations_checked", reps.size()}, {"rows", rows}, {"threshold", threshold_json(scan)}};
}

Json task_trace_id(const RunConfig& c, Report& r) {
  TraceReducer reducer;
  Json rows = Json::array();
  r.csv_header = {"n", "holds"};
  for (int n = c.n_lo; n <= c.n_hi; ++n) {
    const TracePolynomial left = reducer.trace(compose(power(Word{1}, n), Word{2}));
    const TracePolynomial right = reducer.trace(compose(power(Word{2}, n), Word{1}));
    const bool holds = verify_trace_identity(n);
    if (!holds) r.status = kExitVerification;
    rows.push_back({{"n", n}, {"holds", holds}, {"left", left.str()}, {"right", right.str()},
                    {"left_with_y_equal_x", left.with_y_equal_x().str()}});
    r.csv_rows.push_back({std::to_string(n), holds ? "true" : "false"});
    r.text_lines.push_back("n = " + std::to_string(n) + ": tr(A^n B) = tr(B^n A) when tr A = tr B: " +
                           (holds ? "true" : "false"));
  }
  return {{"rows", rows}};
}

Json task_filling(const RunConfig& c, Report& r) {
  const Word alpha = word_of(c, "alpha");
  const int bound = c.scc_word_bound.value_or(4);
  const auto reps = sample_representations(c);
  const FillingVerdict fv = is_filling(alpha, reps.front(), bound);
  if (fv.verdict == Filling::inconclusive)
    throw InconclusiveError("filling test for " + alpha.str() + " is inconclusive: " + fv.basis);
  Json out = {{"alpha", alpha.str()}, {"filling", filling_json(fv)}};
  r.text_lines.push_back(alpha.str() + " filling: " + to_string(fv.verdict) +
                         (fv.witness ? " (disjoint from " + fv.witness->str() + ")" : "") + " [" + fv.basis + "]");
  r.csv_header = {"n", "left", "right", "filling_left", "filling_right"};
  if (fv.verdict != Filling::yes) {
    out["pairs"] = nullptr;
    return out;
  }
  const Word g = self_witness(c, alpha, reps.front());
  const FillingTable t = verify_filling_pairs(alpha, g, c.n_lo, c.n_hi, reps.front(), bound);
  Json context = Json::array();
  for (const auto& z : t.context) context.push_back({{"z", z.z.str()}, {"two_i", z.intersection}});
  Json rows = Json::array();
  for (const auto& row : t.rows) {
    const CurvePair p = build_pair_self(alpha, g, row.n);
    rows.push_back({{"n", row.n}, {"left", p.left.str()}, {"right", p.right.str()},
                    {"filling_left", filling_json(row.left)}, {"filling_right", filling_json(row.right)}});
    r.csv_rows.push_back({std::to_string(row.n), p.left.str(), p.right.str(), to_string(row.left.verdict),
                          to_string(row.right.verdict)});
    r.text_lines.push_back("  n = " + std::to_string(row.n) + ": left " + to_string(row.left.verdict) + ", right " +
                           to_string(row.right.verdict));
  }
  out["pairs"] = {{"g", g.str()}, {"context", context}, {"rows", rows}};
  return out;
}

Json task_sample_reps(const RunConfig& c, Report& r) {
  const auto reps = sample_representations(c);
  Json list = Json::array();
  r.csv_header = {"seed", "generator", "a", "b", "c", "d"};
  for (const auto& rep : reps) {
    list.push_back(representation_json(rep));
    for (std::size_t k = 0; k < rep.generators.size(); ++k) {
      const Mat2& m = rep.generators[k];
      r.csv_rows.push_back({rep_label(rep), std::string(1, letter_char(static_cast<Letter>(k + 1))), fmt(m.a),
                            fmt(m.b), fmt(m.c), fmt(m.d)});
    }
    r.text_lines.push_back("seed " + rep_label(rep) + ": spread " + fmt(rep.spread) + ", arrangement " +
                           list.back()["certificate"]["arrangement"].get<std::string>());
  }
  return {{"representations", list}};
}

}  // namespace

Report run(const RunConfig& config) {
  validate(config);
  Report r;
  const auto start = std::chrono::steady_clock::now();
  Json result;
  switch (config.task) {
    case Task::bracket: result = task_bracket(config, r); break;
    case Task::bracket_self: result = task_bracket_self(config, r); break;
    case Task::pairs: result = task_pairs(config, r); break;
    case Task::verify: result = task_verify(config, r); break;
    case Task::trace_id: result = task_trace_id(config, r); break;
    case Task::filling: result = task_filling(config, r); break;
    case Task::sample_reps: result = task_sample_reps(config, r); break;
  }
  r.doc["tool"] = {{"name", "lenequiv"}, {"version", kToolVersion}};
  r.doc["config"] = config_to_json(config);
  r.doc["task"] = to_string(config.task);
  r.doc["status"] = r.status;
  r.doc["result"] = std::move(result);
  if (config.include_timing) {
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.doc["timing"] = {{"wall_seconds", round_sig(secs, 4)}};
  }
  r.text_lines.insert(r.text_lines.begin(), std::string("lenequiv ") + kToolVersion + "  task " +
                                                to_string(config.task) + "  surface " + config.surface.str());
  return r;
}

std::string emit(const Report& report, Format format) {
  switch (format) {
    case Format::json: return report.doc.dump(2) + "\n";
    case Format::csv: {
      std::ostringstream out;
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
        out << '\n';
      };
      line(report.csv_header);
      for (const auto& row : report.csv_rows) line(row);
      return out.str();
    }
    case Format::text: {
      std::string out;
      for (const auto& l : report.text_lines) out += l + "\n";
      return out;
    }
  }
  return {};
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write output file '" + path + "'");
  out << bytes;
  if (!out) throw Error("failed while writing '" + path + "'");
}

}  // namespace lenequiv
