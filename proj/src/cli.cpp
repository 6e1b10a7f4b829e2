#include "artin/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "artin/catalog.hpp"
#include "artin/conditions.hpp"
#include "artin/report_io.hpp"

namespace artin::cli {

namespace {

struct HelpRequested {
  std::string text;
};

[[noreturn]] void usage(const std::string& what) { throw Error(Errc::UsageError, what); }

DegreeVector resolve_degrees(const std::string& degrees, const std::string& group,
                             std::optional<std::string> synthetic_label) {
  if (!group.empty()) {
    auto entry = find_group(group);
    if (!entry) usage("unknown group '" + group + "'");
    return entry->degree_vector();
  }
  return DegreeVector(parse_int_list(degrees), std::nullopt, std::move(synthetic_label));
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream file(path, std::ios::out | std::ios::trunc | std::ios::binary);
  if (!file) throw Error(Errc::IoError, "cannot open " + path.string());
  file << text;
  if (!file) throw Error(Errc::IoError, "write failed on " + path.string());
}

Json group_json(const GroupEntry& g) {
  Json out;
  out["name"] = g.name;
  out["order"] = g.order;
  out["degrees"] = g.degrees;
  out["class_count"] = g.class_count;
  return out;
}

int run(const CheckCommand& cmd, std::ostream& out) {
  ConditionReport report = check_instance(Instance(cmd.degrees, cmd.orders, cmd.flags, cmd.s0));
  if (cmd.json) {
    out << emit_report_json(report) << "\n";
  } else {
    out << emit_report_text(report);
  }
  return report_exit_code(report);
}

int run(const HilbertCommand& cmd, std::ostream& out, std::ostream& err) {
  HilbertBasis basis = cmd.engine == HilbertEngine::Oracle ? hilbert_basis_oracle(cmd.orders)
                                                           : hilbert_basis_frontier(cmd.orders);
  std::optional<bool> verified;
  if (cmd.oracle_verify) {
    HilbertBasis other = cmd.engine == HilbertEngine::Oracle ? hilbert_basis_frontier(cmd.orders)
                                                             : hilbert_basis_oracle(cmd.orders);
    verified = same_elements(basis, other);
  }
  const std::size_t r = cmd.orders.size();
  if (cmd.json) {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["orders"] = vector_json(cmd.orders.entries());
    doc["engine"] = std::string(to_string(basis.source));
    doc["size"] = basis.size();
    doc["elements"] = basis_json(basis);
    doc["factorial"] = is_factorial(basis, r);
    doc["lattice_full"] = lattice_is_full(basis, r);
    doc["engine_agreement"] = verified ? Json(*verified) : Json(nullptr);
    out << doc.dump() << "\n";
  } else {
    out << "engine " << to_string(basis.source) << ", size " << basis.size() << "\n";
    for (const auto& h : basis.elements) out << "  " << vector_json(h.entries()).dump() << "\n";
    out << "factorial " << (is_factorial(basis, r) ? "yes" : "no") << ", lattice "
        << (lattice_is_full(basis, r) ? "full" : "not full") << "\n";
    if (verified) out << "engines " << (*verified ? "agree" : "DISAGREE") << "\n";
  }
  if (verified == false) {
    err << "oracle and frontier engines disagree\n";
    return kExitFailure;
  }
  return kExitOk;
}

int run(const FactorizeCommand& cmd, std::ostream& out) {
  if (cmd.element.size() != cmd.orders.size()) usage("--element and --orders lengths differ");
  HilbertBasis basis = hilbert_basis_oracle(cmd.orders);
  FactorizationCount counted = count_factorizations(cmd.element, basis, cmd.cap);
  if (cmd.json) {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["orders"] = vector_json(cmd.orders.entries());
    doc["element"] = vector_json(cmd.element.entries());
    doc["basis"] = basis_json(basis);
    doc["cap"] = cmd.cap;
    doc["count"] = counted.count;
    doc["witnesses"] = counted.witnesses;
    out << doc.dump() << "\n";
  } else {
    out << "basis " << basis_json(basis).dump() << "\n";
    out << "factorizations " << counted.count << (counted.count >= cmd.cap ? " (capped)" : "")
        << "\n";
    for (const auto& w : counted.witnesses) out << "  coefficients " << Json(w).dump() << "\n";
  }
  return kExitOk;
}

int run(const SweepCommand& cmd, std::ostream& out) {
  SweepSummary summary = run_sweep(cmd.plan);
  if (cmd.summary_json) write_file(*cmd.summary_json, summary_to_json(summary).dump() + "\n");
  if (cmd.summary_csv) write_file(*cmd.summary_csv, summary_to_csv(summary));

  out << "instances        " << summary.total << "\n"
      << "admissible       " << summary.admissible << "\n"
      << "inadmissible     " << summary.inadmissible << "\n"
      << "cond i true      " << summary.cond_i_true << "\n"
      << "cond i false     " << summary.cond_i_false << "\n"
      << "factorial, not i " << summary.factorial_not_i << "\n"
      << "hilbert sizes   ";
  for (const auto& [size, count] : summary.hilbert_histogram) out << " " << size << ":" << count;
  out << "\ncounterexamples  " << summary.counterexamples.size() << "\n";
  for (const auto& v : summary.counterexamples) out << "  " << vector_json(v.entries()).dump() << "\n";
  out << "wall time        " << summary.wall_time.count() << " ms\n";
  return summary.counterexamples.empty() ? kExitOk : kExitFailure;
}

int run(const CatalogCommand& cmd, std::ostream& out) {
  if (cmd.show) {
    auto entry = find_group(*cmd.show);
    if (!entry) usage("unknown group '" + *cmd.show + "'");
    out << group_json(*entry).dump() << "\n";
    return kExitOk;
  }
  Json list = Json::array();
  for (const auto& g : catalog_groups()) list.push_back(group_json(g));
  out << list.dump() << "\n";
  return kExitOk;
}

bool is_input_error(Errc code) {
  switch (code) {
    case Errc::UsageError:
    case Errc::InvalidValue:
    case Errc::LengthMismatch:
    case Errc::CapExceeded:
    case Errc::IndexOutOfRange:
    case Errc::NotInHol:
      return true;
    default:
      return false;
  }
}

}  // namespace

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string token =
        text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    std::int64_t value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc() || ptr != last) {
      usage("malformed integer '" + token + "' in '" + text + "'");
    }
    out.push_back(value);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

CliCommand parse_command(const std::vector<std::string>& args) {
  CLI::App app{"Holomorphy semigroups of Artin L-function models", "artin"};
  app.require_subcommand(1);

  std::string degrees, group, orders, element, engine = "enum", s0;
  bool no_dedekind = false, trivial_nonneg = false, json = false, oracle_verify = false;
  std::int64_t cap = 2, order_bound = 0;
  std::size_t workers = 1;
  std::string out_path, summary_json, summary_csv, show_name;

  auto add_flags = [&](CLI::App* sub) {
    sub->add_flag("--no-dedekind", no_dedekind, "Do not require <d,v> >= 0");
    sub->add_flag("--require-trivial-nonneg", trivial_nonneg, "Require v_1 >= 0");
  };
  auto add_degrees = [&](CLI::App* sub) {
    auto* d = sub->add_option("--degrees", degrees, "Character degrees, e.g. 1,1,2");
    auto* g = sub->add_option("--group", group, "Catalog group name, e.g. S3");
    d->excludes(g);
    g->excludes(d);
  };

  auto* check = app.add_subcommand("check", "Report every condition for one instance");
  add_degrees(check);
  check->add_option("--orders", orders, "Order vector, e.g. 1,-1,0")->required();
  add_flags(check);
  check->add_option("--s0", s0, "Opaque label for the point s0");
  check->add_flag("--json", json, "Emit the JSON report");

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert basis of Hol for an order vector");
  hilbert->add_option("--orders", orders, "Order vector")->required();
  hilbert->add_option("--engine", engine, "enum (box oracle) or frontier")
      ->check(CLI::IsMember({"enum", "frontier"}));
  hilbert->add_flag("--oracle-verify", oracle_verify, "Cross-check against the other engine");
  hilbert->add_flag("--json", json, "Emit JSON");

  auto* factorize = app.add_subcommand("factorize", "Count factorizations of an element");
  factorize->add_option("--orders", orders, "Order vector")->required();
  factorize->add_option("--element", element, "Exponent vector")->required();
  factorize->add_option("--cap", cap, "Stop counting at this many")->check(CLI::Range(1, 1 << 30));
  factorize->add_flag("--json", json, "Emit JSON");

  auto* sweep = app.add_subcommand("sweep", "Check every order vector in [-B,B]^r");
  add_degrees(sweep);
  sweep->add_option("--order-bound", order_bound, "B")->required()->check(CLI::Range(1, 1000));
  add_flags(sweep);
  sweep->add_option("--out", out_path, "JSON-lines record file");
  sweep->add_option("--workers", workers, "Worker threads")->check(CLI::Range(1, 1024));
  sweep->add_option("--summary-json", summary_json, "Summary JSON file");
  sweep->add_option("--summary-csv", summary_csv, "Summary CSV file");

  auto* catalog = app.add_subcommand("catalog", "Built-in character-degree table");
  catalog->require_subcommand(1);
  catalog->add_subcommand("list", "List all groups");
  auto* show = catalog->add_subcommand("show", "Show one group");
  show->add_option("name", show_name, "Group name")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    usage(e.what());
  }

  const InstanceFlags flags{!no_dedekind, trivial_nonneg};
  auto need_degrees = [&](CLI::App* sub) {
    if (degrees.empty() && group.empty()) usage(sub->get_name() + " needs --degrees or --group");
  };

  try {
    if (check->parsed()) {
      need_degrees(check);
      CheckCommand cmd{resolve_degrees(degrees, group, std::nullopt),
                       OrderVector(parse_int_list(orders)), flags,
                       s0.empty() ? std::nullopt : std::optional(s0), json};
      if (cmd.degrees.size() != cmd.orders.size()) usage("--degrees and --orders lengths differ");
      return cmd;
    }
    if (hilbert->parsed()) {
      return HilbertCommand{OrderVector(parse_int_list(orders)),
                            engine == "frontier" ? HilbertEngine::Frontier : HilbertEngine::Oracle,
                            oracle_verify, json};
    }
    if (factorize->parsed()) {
      FactorizeCommand cmd{OrderVector(parse_int_list(orders)),
                           ExponentVector(parse_int_list(element)), cap, json};
      if (cmd.element.size() != cmd.orders.size()) usage("--element and --orders lengths differ");
      return cmd;
    }
    if (sweep->parsed()) {
      need_degrees(sweep);
      SweepCommand cmd;
      cmd.plan.degrees = resolve_degrees(degrees, group, "synthetic");
      cmd.plan.order_bound = order_bound;
      cmd.plan.flags = flags;
      cmd.plan.workers = workers;
      if (!out_path.empty()) cmd.plan.output = out_path;
      if (!summary_json.empty()) cmd.summary_json = summary_json;
      if (!summary_csv.empty()) cmd.summary_csv = summary_csv;
      OrderBox(cmd.plan.degrees.size(), cmd.plan.order_bound, cmd.plan.instance_cap);
      return cmd;
    }
    if (show->parsed()) return CatalogCommand{show_name};
    return CatalogCommand{};
  } catch (const Error& e) {
    if (e.code() == Errc::UsageError) throw;
    usage(e.what());
  }
}

int run_command(const CliCommand& command, std::ostream& out, std::ostream& err) {
  return std::visit(
      [&](const auto& cmd) -> int {
        using T = std::decay_t<decltype(cmd)>;
        if constexpr (std::is_same_v<T, HilbertCommand>) {
          return run(cmd, out, err);
        } else {
          return run(cmd, out);
        }
      },
      command);
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliCommand command = CatalogCommand{};
  try {
    command = parse_command(args);
  } catch (const HelpRequested& help) {
    out << help.text;
    return kExitOk;
  } catch (const Error& e) {
    err << "artin: " << e.what() << "\n";
    return kExitUsage;
  }
  try {
    return run_command(command, out, err);
  } catch (const Error& e) {
    err << "artin: " << e.what() << "\n";
    return is_input_error(e.code()) ? kExitUsage : kExitFailure;
  } catch (const std::exception& e) {
    err << "artin: internal error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace artin::cli
