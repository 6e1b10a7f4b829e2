#include "artin/report_io.hpp"

#include <sstream>

namespace artin {

namespace {

std::vector<std::int64_t> int_vector(const Json& node) {
  return node.get<std::vector<std::int64_t>>();
}

Json optional_vector(const std::optional<ExponentVector>& k) {
  return k ? vector_json(k->entries()) : Json(nullptr);
}

Json subset_json(const SubsetSelector& s) {
  Json out = Json::array();
  for (auto i : s.indices()) out.push_back(i + 1);
  return out;
}

SubsetSelector subset_from_json(const Json& node, std::size_t rank) {
  std::vector<std::size_t> indices;
  for (const auto& i : node) indices.push_back(i.get<std::size_t>() - 1);
  return SubsetSelector(std::move(indices), rank);
}

template <typename T>
Json optional_value(const std::optional<T>& value) {
  return value ? Json(*value) : Json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const Json& node) {
  if (node.is_null()) return std::nullopt;
  return node.get<T>();
}

std::string join(std::span<const std::int64_t> entries) {
  std::string out = "(";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(entries[i]);
  }
  return out + ")";
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

Json vector_json(std::span<const std::int64_t> entries) {
  Json out = Json::array();
  for (auto e : entries) out.push_back(e);
  return out;
}

Json basis_json(const HilbertBasis& basis) {
  Json out = Json::array();
  for (const auto& h : basis.elements) out.push_back(vector_json(h.entries()));
  return out;
}

Json report_to_json(const ConditionReport& report) {
  const Instance& inst = report.instance;
  Json doc;
  doc["schema_version"] = kSchemaVersion;

  Json& instance = doc["instance"];
  instance["r"] = inst.rank();
  instance["degrees"] = vector_json(inst.degrees.entries());
  instance["orders"] = vector_json(inst.orders.entries());
  instance["flags"]["require_dedekind"] = inst.flags.require_dedekind;
  instance["flags"]["require_trivial_nonneg"] = inst.flags.require_trivial_nonneg;
  instance["labels"]["group"] = optional_value(inst.degrees.group_name());
  instance["labels"]["group_order"] = optional_value(inst.degrees.group_order());
  instance["labels"]["s0"] = optional_value(inst.s0_label);

  doc["admissible"]["ok"] = report.admissible.ok;
  doc["admissible"]["reasons"] = report.admissible.reasons;

  doc["hilbert"]["size"] = report.basis.size();
  doc["hilbert"]["elements"] = basis_json(report.basis);
  doc["hilbert"]["engine_agreement"] = report.engine_agreement;

  Json& conditions = doc["conditions"];
  conditions["i"] = report.cond_i;
  conditions["ii"]["ok"] = report.cond_ii.ok;
  Json pairs = Json::array();
  for (const auto& p : report.cond_ii.pairs) {
    Json pair;
    pair["k"] = p.k + 1;
    pair["l"] = p.l + 1;
    pair["witness"] = optional_vector(p.witness);
    pairs.push_back(std::move(pair));
  }
  conditions["ii"]["pairs"] = std::move(pairs);
  conditions["iii"]["ok"] = report.cond_iii.ok;
  conditions["iii"]["m"] = optional_value(report.cond_iii.m);
  if (report.cond_ii_prime) {
    conditions["ii_prime"]["ok"] = report.cond_ii_prime->ok;
    conditions["ii_prime"]["failing_subset"] =
        report.cond_ii_prime->failing_subset ? subset_json(*report.cond_ii_prime->failing_subset)
                                             : Json(nullptr);
  } else {
    conditions["ii_prime"] = nullptr;
  }

  doc["factorial"] = report.factorial;
  doc["equivalence_ok"] = optional_value(report.equivalence_ok);
  return doc;
}

ConditionReport report_from_json(const Json& doc) {
  try {
    if (doc.at("schema_version") != kSchemaVersion) {
      throw Error(Errc::InvalidValue, "unsupported schema_version");
    }
    const Json& instance = doc.at("instance");
    const Json& labels = instance.at("labels");
    DegreeVector degrees(int_vector(instance.at("degrees")),
                         optional_from<std::int64_t>(labels.at("group_order")),
                         optional_from<std::string>(labels.at("group")));
    InstanceFlags flags{instance.at("flags").at("require_dedekind").get<bool>(),
                        instance.at("flags").at("require_trivial_nonneg").get<bool>()};
    Instance inst(std::move(degrees), OrderVector(int_vector(instance.at("orders"))), flags,
                  optional_from<std::string>(labels.at("s0")));
    const std::size_t r = inst.rank();
    if (instance.at("r").get<std::size_t>() != r) {
      throw Error(Errc::LengthMismatch, "instance r disagrees with vector lengths");
    }

    Admissibility admissible{doc.at("admissible").at("ok").get<bool>(),
                             doc.at("admissible").at("reasons").get<std::vector<std::string>>()};
    HilbertBasis basis{inst.orders, {}, HilbertEngine::Oracle};
    for (const auto& e : doc.at("hilbert").at("elements")) basis.elements.emplace_back(int_vector(e));

    ConditionReport report{
        .instance = inst, .admissible = std::move(admissible), .basis = std::move(basis)};
    report.engine_agreement = doc.at("hilbert").at("engine_agreement").get<bool>();
    report.factorial = doc.at("factorial").get<bool>();

    const Json& conditions = doc.at("conditions");
    report.cond_i = conditions.at("i").get<bool>();
    report.cond_ii.ok = conditions.at("ii").at("ok").get<bool>();
    for (const auto& p : conditions.at("ii").at("pairs")) {
      PairResult pair;
      pair.k = p.at("k").get<std::size_t>() - 1;
      pair.l = p.at("l").get<std::size_t>() - 1;
      if (!p.at("witness").is_null()) pair.witness = ExponentVector(int_vector(p.at("witness")));
      report.cond_ii.pairs.push_back(std::move(pair));
    }
    report.cond_iii.ok = conditions.at("iii").at("ok").get<bool>();
    report.cond_iii.m = optional_from<std::size_t>(conditions.at("iii").at("m"));
    const Json& prime = conditions.at("ii_prime");
    if (!prime.is_null()) {
      CondIIPrimeResult result;
      result.ok = prime.at("ok").get<bool>();
      if (!prime.at("failing_subset").is_null()) {
        result.failing_subset = subset_from_json(prime.at("failing_subset"), r);
      }
      report.cond_ii_prime = std::move(result);
    }
    report.equivalence_ok = optional_from<bool>(doc.at("equivalence_ok"));
    return report;
  } catch (const Json::exception& e) {
    throw Error(Errc::InvalidValue, std::string("malformed report: ") + e.what());
  }
}

std::string emit_report_json(const ConditionReport& report) { return report_to_json(report).dump(); }

std::string emit_sweep_record(const ConditionReport& report) {
  return report_to_json(report).dump() + "\n";
}

std::string emit_report_text(const ConditionReport& report) {
  const Instance& inst = report.instance;
  std::ostringstream out;
  out << "instance     r=" << inst.rank() << " degrees=" << join(inst.degrees.entries())
      << " orders=" << join(inst.orders.entries());
  if (inst.degrees.group_name()) out << " group=" << *inst.degrees.group_name();
  if (inst.s0_label) out << " s0=" << *inst.s0_label;
  out << "\n";
  out << "admissible   " << yes_no(report.admissible.ok);
  for (const auto& reason : report.admissible.reasons) out << "  [" << reason << "]";
  out << "\n";
  out << "hilbert      size=" << report.basis.size() << " {";
  for (std::size_t i = 0; i < report.basis.size(); ++i) {
    out << (i ? ", " : "") << join(report.basis.elements[i].entries());
  }
  out << "}\n";
  out << "factorial    " << yes_no(report.factorial) << "\n";
  out << "cond i       " << yes_no(report.cond_i) << "\n";
  out << "cond ii      " << yes_no(report.cond_ii.ok) << "\n";
  for (const auto& p : report.cond_ii.pairs) {
    out << "  (k=" << p.k + 1 << ", l=" << p.l + 1 << ")  "
        << (p.witness ? join(p.witness->entries()) : std::string("no witness")) << "\n";
  }
  out << "cond iii     " << yes_no(report.cond_iii.ok);
  if (report.cond_iii.m) out << " m=" << *report.cond_iii.m;
  out << "\n";
  if (report.cond_ii_prime) {
    out << "cond ii'     " << yes_no(report.cond_ii_prime->ok);
    if (report.cond_ii_prime->failing_subset) {
      out << " failing I={";
      const auto& idx = report.cond_ii_prime->failing_subset->indices();
      for (std::size_t i = 0; i < idx.size(); ++i) out << (i ? "," : "") << idx[i] + 1;
      out << "}";
    }
    out << "\n";
  }
  out << "equivalence  "
      << (report.equivalence_ok ? yes_no(*report.equivalence_ok) : "not asserted") << "\n";
  return out.str();
}

int report_exit_code(const ConditionReport& report) {
  return report.equivalence_ok.value_or(true) ? 0 : 1;
}

}  // namespace artin
