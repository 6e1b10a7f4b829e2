#include "artin/sweep.hpp"

#include <algorithm>
#include <exception>
#include <fstream>
#include <sstream>
#include <thread>

#include "artin/checked.hpp"

namespace artin {

namespace {

constexpr std::int64_t kBatchSize = 4096;

std::string describe(const OrderVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

}  // namespace

OrderBox::OrderBox(std::size_t rank, std::int64_t bound, std::int64_t instance_cap)
    : rank_(rank), bound_(bound), size_(1) {
  if (rank < 1) throw Error(Errc::InvalidValue, "rank must be >= 1");
  if (bound < 1) throw Error(Errc::InvalidValue, "order bound must be >= 1");
  const std::int64_t side = checked::add(checked::mul(2, bound), 1);
  try {
    for (std::size_t i = 0; i < rank; ++i) size_ = checked::mul(size_, side);
    if (checked::mul(static_cast<std::int64_t>(rank), size_) > instance_cap) {
      throw Error(Errc::CapExceeded, "r * (2B+1)^r exceeds the instance cap " +
                                         std::to_string(instance_cap));
    }
  } catch (const Error& e) {
    if (e.code() == Errc::ArithmeticOverflow) throw Error(Errc::CapExceeded, "order box too large");
    throw;
  }
}

OrderVector OrderBox::at(std::int64_t index) const {
  if (index < 0 || index >= size_) throw Error(Errc::IndexOutOfRange, "order box index");
  const std::int64_t side = 2 * bound_ + 1;
  std::vector<std::int64_t> v(rank_);
  for (std::size_t i = rank_; i-- > 0;) {
    v[i] = index % side - bound_;
    index /= side;
  }
  return OrderVector(std::move(v));
}

std::vector<OrderVector> enumerate_order_vectors(std::size_t r, std::int64_t bound,
                                                 std::int64_t instance_cap) {
  OrderBox box(r, bound, instance_cap);
  std::vector<OrderVector> out;
  out.reserve(static_cast<std::size_t>(box.size()));
  for (std::int64_t i = 0; i < box.size(); ++i) out.push_back(box.at(i));
  return out;
}

bool SweepSummary::same_counts(const SweepSummary& other) const {
  return rank == other.rank && degrees == other.degrees && flags == other.flags &&
         total == other.total && admissible == other.admissible &&
         inadmissible == other.inadmissible && cond_i_true == other.cond_i_true &&
         cond_i_false == other.cond_i_false && factorial_not_i == other.factorial_not_i &&
         hilbert_histogram == other.hilbert_histogram && counterexamples == other.counterexamples;
}

void SummaryBuilder::add(const ConditionReport& report) {
  const Instance& inst = report.instance;
  std::vector<std::int64_t> degrees(inst.degrees.entries().begin(), inst.degrees.entries().end());
  if (!seeded_) {
    summary_.rank = inst.rank();
    summary_.degrees = degrees;
    summary_.flags = inst.flags;
    seeded_ = true;
  } else if (summary_.rank != inst.rank() || summary_.degrees != degrees ||
             !(summary_.flags == inst.flags)) {
    throw Error(Errc::MixedPlans, "records disagree on (r, degrees, flags)");
  }

  ++summary_.total;
  ++summary_.hilbert_histogram[report.basis.size()];
  if (!report.admissible.ok) {
    ++summary_.inadmissible;
    return;
  }
  ++summary_.admissible;
  if (report.cond_i) {
    ++summary_.cond_i_true;
  } else {
    ++summary_.cond_i_false;
    if (report.factorial) ++summary_.factorial_not_i;
  }
  if (report.equivalence_ok == false) summary_.counterexamples.push_back(inst.orders);
}

SweepSummary SummaryBuilder::finish() const {
  SweepSummary out = summary_;
  std::sort(out.counterexamples.begin(), out.counterexamples.end());
  return out;
}

SweepSummary summarize(const std::vector<ConditionReport>& records) {
  SummaryBuilder builder;
  for (const auto& r : records) builder.add(r);
  return builder.finish();
}

SweepSummary run_sweep(const SweepPlan& plan, const RecordSink& on_record) {
  const auto started = std::chrono::steady_clock::now();
  if (plan.workers < 1) throw Error(Errc::InvalidValue, "worker count must be >= 1");
  OrderBox box(plan.degrees.size(), plan.order_bound, plan.instance_cap);

  std::ofstream file;
  if (plan.output) {
    file.open(*plan.output, std::ios::out | std::ios::trunc | std::ios::binary);
    if (!file) throw Error(Errc::IoError, "cannot open " + plan.output->string());
  }

  SummaryBuilder builder;
  // Every batch is split into contiguous ranges, one per worker.
  for (std::int64_t begin = 0; begin < box.size(); begin += kBatchSize) {
    const std::int64_t end = std::min(box.size(), begin + kBatchSize);
    const auto count = static_cast<std::size_t>(end - begin);
    std::vector<std::optional<ConditionReport>> reports(count);
    std::vector<std::exception_ptr> failures(plan.workers);

    auto work = [&](std::size_t worker) {
      const std::size_t lo = count * worker / plan.workers;
      const std::size_t hi = count * (worker + 1) / plan.workers;
      for (std::size_t i = lo; i < hi; ++i) {
        OrderVector v = box.at(begin + static_cast<std::int64_t>(i));
        try {
          reports[i] = check_instance(Instance(plan.degrees, v, plan.flags));
        } catch (const Error& e) {
          failures[worker] = std::make_exception_ptr(
              Error(e.code(), std::string(e.what()) + " at orders " + describe(v)));
          return;
        } catch (...) {
          failures[worker] = std::current_exception();
          return;
        }
      }
    };

    if (plan.workers == 1) {
      work(0);
    } else {
      std::vector<std::jthread> threads;
      threads.reserve(plan.workers);
      for (std::size_t w = 0; w < plan.workers; ++w) threads.emplace_back(work, w);
    }
    for (const auto& failure : failures) {
      if (failure) std::rethrow_exception(failure);
    }

    for (const auto& report : reports) {
      builder.add(*report);
      if (file.is_open()) {
        file << emit_sweep_record(*report);
        if (!file) throw Error(Errc::IoError, "write failed on " + plan.output->string());
      }
      if (on_record) on_record(*report);
    }
  }

  SweepSummary summary = builder.finish();
  if (summary.total == 0) {
    summary.rank = plan.degrees.size();
    summary.degrees.assign(plan.degrees.entries().begin(), plan.degrees.entries().end());
    summary.flags = plan.flags;
  }
  summary.wall_time = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  return summary;
}

Json summary_to_json(const SweepSummary& summary) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["r"] = summary.rank;
  doc["degrees"] = summary.degrees;
  doc["flags"]["require_dedekind"] = summary.flags.require_dedekind;
  doc["flags"]["require_trivial_nonneg"] = summary.flags.require_trivial_nonneg;
  doc["total"] = summary.total;
  doc["admissible"] = summary.admissible;
  doc["inadmissible"] = summary.inadmissible;
  doc["cond_i_true"] = summary.cond_i_true;
  doc["cond_i_false"] = summary.cond_i_false;
  doc["factorial_not_i"] = summary.factorial_not_i;
  Json histogram = Json::array();
  for (const auto& [size, count] : summary.hilbert_histogram) {
    histogram.push_back(Json{{"size", size}, {"count", count}});
  }
  doc["hilbert_histogram"] = std::move(histogram);
  Json counterexamples = Json::array();
  for (const auto& v : summary.counterexamples) counterexamples.push_back(vector_json(v.entries()));
  doc["counterexamples"] = std::move(counterexamples);
  return doc;
}

std::string summary_to_csv(const SweepSummary& summary) {
  std::ostringstream out;
  out << "hilbert_size,instances\n";
  for (const auto& [size, count] : summary.hilbert_histogram) out << size << "," << count << "\n";
  out << "total," << summary.total << "\n";
  return out.str();
}

}  // namespace artin
