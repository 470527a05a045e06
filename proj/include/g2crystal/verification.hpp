#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "g2crystal/expression_json.hpp"

namespace g2crystal {

struct Config {
  std::uint64_t seed = 0;
  std::size_t samples = 100;
  std::uint64_t coeff_bound = 1000;
  std::size_t term_budget = 2'000'000;
  unsigned threads = 0;  // 0: hardware concurrency
};

enum class Mode { symbolic, sampled };

inline std::string_view to_string(Mode m) { return m == Mode::symbolic ? "symbolic" : "sampled"; }

struct Counterexample {
  Json point;
  std::string lhs;
  std::string rhs;
};

/// Outcome of one identity check. `passed()` holds exactly when no
/// counterexample was recorded; `failures` counts all of them even when the
/// stored list is capped.
class VerificationReport {
 public:
  static constexpr std::size_t kMaxStoredCounterexamples = 8;

  VerificationReport(std::string identity, Mode mode, std::size_t samples, std::uint64_t seed)
      : identity_(std::move(identity)), mode_(mode), samples_(samples), seed_(seed) {}

  const std::string& identity() const noexcept { return identity_; }
  Mode mode() const noexcept { return mode_; }
  std::size_t samples() const noexcept { return samples_; }
  std::uint64_t seed() const noexcept { return seed_; }
  bool passed() const noexcept { return counterexamples_.empty(); }
  std::size_t failures() const noexcept { return failures_; }
  const std::vector<Counterexample>& counterexamples() const noexcept { return counterexamples_; }

  void set_mode(Mode m) { mode_ = m; }
  void set_samples(std::size_t n) { samples_ = n; }

  void fail(Counterexample c) {
    ++failures_;
    if (counterexamples_.size() < kMaxStoredCounterexamples) counterexamples_.push_back(std::move(c));
  }

  /// Informational reports are emitted but never gate the exit status.
  void set_informational(bool v = true) { informational_ = v; }
  bool informational() const noexcept { return informational_; }

  Json& details() noexcept { return details_; }
  const Json& details() const noexcept { return details_; }

  /// Documented discrepancies between a printed formula and the certified one.
  void add_finding(Json f) { findings_.push_back(std::move(f)); }
  const Json& findings() const noexcept { return findings_; }

  void merge_failures(const VerificationReport& other) {
    for (const auto& c : other.counterexamples_) fail(c);
    failures_ += other.failures_ - other.counterexamples_.size();
  }

  Json to_json() const {
    Json ces = Json::array();
    for (const auto& c : counterexamples_) {
      ces.push_back(Json{{"point", c.point}, {"lhs", c.lhs}, {"rhs", c.rhs}});
    }
    Json j{{"identity", identity_},
           {"mode", std::string(to_string(mode_))},
           {"samples", samples_},
           {"seed", seed_},
           {"passed", passed()},
           {"failures", failures_},
           {"counterexamples", std::move(ces)}};
    if (informational_) j["informational"] = true;
    if (!details_.is_null()) j["details"] = details_;
    if (!findings_.empty()) j["findings"] = findings_;
    return j;
  }

 private:
  std::string identity_;
  Mode mode_;
  std::size_t samples_;
  std::uint64_t seed_;
  std::size_t failures_ = 0;
  std::vector<Counterexample> counterexamples_;
  bool informational_ = false;
  Json details_;
  Json findings_ = Json::array();
};

/// Deterministic per-sample random source: sample k of stream s under seed
/// n is a pure function of (n, s, k), independent of worker scheduling.
class PointSampler {
 public:
  PointSampler(std::uint64_t seed, std::string_view stream, std::uint64_t coeff_bound)
      : seed_(seed), stream_(fnv1a(stream)), bound_(coeff_bound) {
    if (bound_ == 0) throw std::invalid_argument("PointSampler: coeff_bound must be positive");
  }

  std::mt19937_64 engine(std::uint64_t index) const {
    std::seed_seq seq{static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32),
                      static_cast<std::uint32_t>(stream_), static_cast<std::uint32_t>(stream_ >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return std::mt19937_64(seq);
  }

  /// p/q with 1 <= p, q <= coeff_bound.
  static BigRational positive_rational(std::mt19937_64& g, std::uint64_t bound) {
    const auto p = static_cast<long>(1 + g() % bound);
    const auto q = static_cast<long>(1 + g() % bound);
    return BigRational(p, q);
  }

  static long integer_in(std::mt19937_64& g, long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(g() % span);
  }

  std::vector<BigRational> positive_point(std::uint64_t index, std::size_t dims) const {
    auto g = engine(index);
    std::vector<BigRational> out;
    out.reserve(dims);
    for (std::size_t i = 0; i < dims; ++i) out.push_back(positive_rational(g, bound_));
    return out;
  }

  std::vector<long> integer_point(std::uint64_t index, std::size_t dims, long lo, long hi) const {
    auto g = engine(index);
    std::vector<long> out;
    out.reserve(dims);
    for (std::size_t i = 0; i < dims; ++i) out.push_back(integer_in(g, lo, hi));
    return out;
  }

  std::uint64_t coeff_bound() const noexcept { return bound_; }

  static std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 1099511628211ULL;
    }
    return h;
  }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t bound_;
};

inline unsigned worker_count(const Config& cfg, std::size_t jobs) {
  unsigned n = cfg.threads ? cfg.threads : std::max(1U, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(jobs, 1)));
}

/// Runs fn(k) for k in [0, count) on a worker pool and returns the results
/// in index order. An exception in fn(k) is rethrown after all workers
/// finish (the lowest failing index wins).
template <class R>
std::vector<R> parallel_map(const Config& cfg, std::size_t count, const std::function<R(std::size_t)>& fn) {
  std::vector<std::optional<R>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < count; k = next++) {
      try {
        slots[k].emplace(fn(k));
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const unsigned n = worker_count(cfg, count);
  if (n <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n);
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<R> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

/// Sampled check driver: fn(k) returns the counterexamples found at sample k.
/// Results are merged in sample order.
inline void run_samples(VerificationReport& report, const Config& cfg, std::size_t count,
                        const std::function<std::vector<Counterexample>(std::size_t)>& fn) {
  auto per_sample = parallel_map<std::vector<Counterexample>>(cfg, count, [&](std::size_t k) {
    try {
      return fn(k);
    } catch (const std::exception& e) {
      return std::vector<Counterexample>{{Json{{"sample", k}}, std::string("exception: ") + e.what(), ""}};
    }
  });
  for (auto& list : per_sample) {
    for (auto& c : list) report.fail(std::move(c));
  }
  report.set_samples(count);
}

inline Json point_json(std::span<const BigRational> values, const std::vector<std::string>& names) {
  Json j = Json::object();
  for (std::size_t i = 0; i < values.size() && i < names.size(); ++i) j[names[i]] = values[i].str();
  return j;
}

/// Decides lhs == rhs: symbolically when the cross-multiplied product fits
/// the term budget (or when forced), otherwise by exact evaluation at
/// positive rational sample points.
inline VerificationReport check_identity(const std::string& name, const RationalFunction& lhs,
                                         const RationalFunction& rhs, const Config& cfg,
                                         std::optional<Mode> force = std::nullopt) {
  require_same_table(lhs.vars(), rhs.vars(), "check_identity");
  const double estimate = RationalFunction::difference_cost(lhs, rhs);
  const Mode mode =
      force.value_or(estimate <= static_cast<double>(cfg.term_budget) ? Mode::symbolic : Mode::sampled);
  VerificationReport report(name, mode, 0, cfg.seed);
  report.details()["term_estimate"] = estimate;
  if (mode == Mode::symbolic) {
    if (!rf_equal(lhs, rhs)) {
      report.fail({Json("symbolic"), "lhs - rhs is not the zero function", "0"});
    }
    return report;
  }
  const int degree = lhs.num_degree() + lhs.den_degree() + rhs.num_degree() + rhs.den_degree();
  report.details()["degree_bound"] = degree;
  report.details()["coeff_bound"] = cfg.coeff_bound;
  report.details()["per_sample_false_pass_bound"] =
      BigRational(degree, static_cast<long>(cfg.coeff_bound)).str();
  const PointSampler sampler(cfg.seed, name, cfg.coeff_bound);
  const auto& names = lhs.vars()->names();
  run_samples(report, cfg, cfg.samples, [&](std::size_t k) {
    const auto p = sampler.positive_point(k, names.size());
    const BigRational l = lhs.evaluate(p);
    const BigRational r = rhs.evaluate(p);
    if (l == r) return std::vector<Counterexample>{};
    return std::vector<Counterexample>{{point_json(p, names), l.str(), r.str()}};
  });
  return report;
}

}  // namespace g2crystal
