#pragma once

// Exhaustive sweeps over the order box [-B, B]^r for a fixed degree vector.
//
// Workers handle contiguous lex ranges of each batch; a single writer emits
// records in lex order, so the output and the summary do not depend on the
// worker count.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "artin/conditions.hpp"
#include "artin/report_io.hpp"

namespace artin {

inline constexpr std::int64_t kDefaultInstanceCap = 10'000'000;

/// The (2B+1)^r order vectors of [-B, B]^r, addressable by lex rank.
class OrderBox {
 public:
  OrderBox(std::size_t rank, std::int64_t bound, std::int64_t instance_cap = kDefaultInstanceCap);

  std::size_t rank() const noexcept { return rank_; }
  std::int64_t bound() const noexcept { return bound_; }
  std::int64_t size() const noexcept { return size_; }
  OrderVector at(std::int64_t index) const;

 private:
  std::size_t rank_;
  std::int64_t bound_;
  std::int64_t size_;
};

std::vector<OrderVector> enumerate_order_vectors(std::size_t r, std::int64_t bound,
                                                 std::int64_t instance_cap = kDefaultInstanceCap);

struct SweepPlan {
  DegreeVector degrees;
  std::int64_t order_bound = 1;
  InstanceFlags flags;
  std::size_t workers = 1;
  std::optional<std::filesystem::path> output;
  std::int64_t instance_cap = kDefaultInstanceCap;
};

// Condition counts cover admissible instances; the histogram covers every
// instance, admissible or not.
struct SweepSummary {
  std::size_t rank = 0;
  std::vector<std::int64_t> degrees;
  InstanceFlags flags;
  std::int64_t total = 0;
  std::int64_t admissible = 0;
  std::int64_t inadmissible = 0;
  std::int64_t cond_i_true = 0;
  std::int64_t cond_i_false = 0;
  std::int64_t factorial_not_i = 0;
  std::map<std::size_t, std::int64_t> hilbert_histogram;
  std::vector<OrderVector> counterexamples;  // lex order
  std::chrono::milliseconds wall_time{0};

  /// Equal in everything except wall time.
  bool same_counts(const SweepSummary& other) const;
};

/// Incremental form of summarize(); rejects reports from a different plan.
class SummaryBuilder {
 public:
  void add(const ConditionReport& report);
  SweepSummary finish() const;

 private:
  SweepSummary summary_;
  bool seeded_ = false;
};

SweepSummary summarize(const std::vector<ConditionReport>& records);

using RecordSink = std::function<void(const ConditionReport&)>;

/// Runs check_instance on every vector of the box. Records reach `on_record`
/// (and the output file) in lex order from a single thread.
SweepSummary run_sweep(const SweepPlan& plan, const RecordSink& on_record = {});

Json summary_to_json(const SweepSummary& summary);
/// Rows "hilbert_size,instances" per histogram bucket, then a totals row.
std::string summary_to_csv(const SweepSummary& summary);

}  // namespace artin
