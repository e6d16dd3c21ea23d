#include "qcorr/report.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <thread>

namespace qcorr {

namespace {

int parse_int(std::string_view text, std::size_t offset) {
  int value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    const auto bad = text.empty() ? 0 : static_cast<std::size_t>(ptr - first);
    throw ParseError("expected an integer", offset + bad);
  }
  return value;
}

// One comma-free token: a run of letters (each a qubit) or a single index.
std::vector<int> parse_token(std::string_view token, std::size_t offset, int n_qubits) {
  std::vector<int> out;
  if (token.empty()) return out;
  if (std::isdigit(static_cast<unsigned char>(token.front()))) {
    out.push_back(parse_int(token, offset));
  } else {
    for (std::size_t i = 0; i < token.size(); ++i) {
      const char c = token[i];
      if (c < 'a' || c > 'z') throw ParseError(std::string("unexpected character '") + c + "'", offset + i);
      out.push_back(c - 'a');
    }
  }
  for (int q : out) {
    if (q >= n_qubits) {
      throw ParseError("qubit " + std::to_string(q) + " outside a " + std::to_string(n_qubits) + "-qubit register", offset);
    }
  }
  return out;
}

void append(std::vector<int>& to, const std::vector<int>& from) { to.insert(to.end(), from.begin(), from.end()); }

// Runs fn(i) for i in [0, count) across the available hardware threads.
template <typename Fn>
void parallel_for(std::size_t count, Fn fn) {
  const std::size_t workers = std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

ReportEntry evaluate_cut(const DensityOperator& rho, const Partition& part) {
  const auto cut = analyze_cut(rho, part);
  ReportEntry entry{part, cut.decomposition, Region::Classical, Region::Classical, Region::Classical, false, {}};
  const auto& d = cut.decomposition;
  const double side_max[] = {part.alpha().size() * kLn2, part.beta().size() * kLn2};
  entry.external_region = classify_region(d.external, side_max);
  const std::vector<double> alpha_max(part.alpha().size(), kLn2);
  const std::vector<double> beta_max(part.beta().size(), kLn2);
  entry.internal_alpha_region = classify_region(d.internal_alpha, alpha_max);
  entry.internal_beta_region = classify_region(d.internal_beta, beta_max);
  entry.product_across = is_product_across(rho, part);
  entry.araki_lieb = araki_lieb_from_entropies(cut.entropy_whole, cut.entropy_alpha, cut.entropy_beta);
  return entry;
}

nlohmann::json decomposition_json(const Decomposition& d, double scale) {
  return {{"internal_alpha", round_significant(d.internal_alpha * scale)},
          {"internal_beta", round_significant(d.internal_beta * scale)},
          {"external", round_significant(d.external * scale)},
          {"total", round_significant(d.total * scale)}};
}

}  // namespace

StateSpec parse_state_spec(std::string_view text) {
  if (text.empty()) throw ParseError("empty state spec", 0);
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("expected KIND:PARAMETER", text.size());
  const auto kind = text.substr(0, colon);
  const auto rest = text.substr(colon + 1);

  StateSpec spec;
  spec.text = std::string(text);
  if (kind == "file") {
    if (rest.empty()) throw ParseError("missing file path", colon + 1);
    spec.kind = StateKind::File;
    spec.path = std::string(rest);
    return spec;
  }
  if (kind == "ghz") {
    spec.kind = StateKind::Ghz;
  } else if (kind == "ue") {
    spec.kind = StateKind::UniformEntangled;
  } else if (kind == "bellpairs") {
    spec.kind = StateKind::BellPairs;
  } else if (kind == "ghzblocks") {
    spec.kind = StateKind::GhzBlocks;
  } else {
    throw ParseError("unknown state kind '" + std::string(kind) + "'", 0);
  }
  spec.parameter = parse_int(rest, colon + 1);
  if (spec.parameter < 1) throw ArgumentError("state parameter must be positive");
  if (spec.kind == StateKind::UniformEntangled && spec.parameter % 2 != 0) {
    throw ArgumentError("ue needs an even total qubit count, got " + std::to_string(spec.parameter));
  }
  return spec;
}

PureState build_state(const StateSpec& spec, int max_qubits) {
  switch (spec.kind) {
    case StateKind::Ghz:
      return ghz(spec.parameter, max_qubits);
    case StateKind::UniformEntangled:
      return uniform_entangled(spec.parameter / 2, max_qubits);
    case StateKind::BellPairs:
      return bell_product(spec.parameter, max_qubits);
    case StateKind::GhzBlocks:
      return ghz_block_product(spec.parameter, max_qubits);
    case StateKind::File:
      return load_state_file(spec.path, max_qubits);
  }
  throw ArgumentError("unhandled state kind");
}

PureState state_from_json(const nlohmann::json& doc, int max_qubits) {
  if (!doc.is_object()) throw SchemaError("state file must hold an object");
  if (!doc.contains("n_qubits") || !doc["n_qubits"].is_number_integer()) {
    throw SchemaError("state file needs an integer n_qubits");
  }
  if (!doc.contains("amplitudes") || !doc["amplitudes"].is_array()) {
    throw SchemaError("state file needs an amplitudes array");
  }
  const auto n = doc["n_qubits"].get<long long>();
  if (n < 1 || n > 30) throw SchemaError("n_qubits out of range");
  require_qubit_cap(static_cast<int>(n), max_qubits);
  const auto& list = doc["amplitudes"];
  const auto dim = detail::pow2(static_cast<int>(n));
  if (static_cast<Eigen::Index>(list.size()) != dim) {
    throw SchemaError("expected " + std::to_string(dim) + " amplitudes, found " + std::to_string(list.size()));
  }
  ComplexVector amps(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const auto& pair = list[static_cast<std::size_t>(i)];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      throw SchemaError("amplitude " + std::to_string(i) + " is not a [re, im] pair");
    }
    amps(i) = {pair[0].get<double>(), pair[1].get<double>()};
  }
  return PureState(static_cast<int>(n), std::move(amps), 1e-8);
}

PureState load_state_file(const std::filesystem::path& path, int max_qubits) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open state file " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("state file is not valid JSON: ") + e.what());
  }
  return state_from_json(doc, max_qubits);
}

nlohmann::json state_to_json(const PureState& s) {
  nlohmann::json amps = nlohmann::json::array();
  for (Eigen::Index i = 0; i < s.dim(); ++i) amps.push_back({s[i].real(), s[i].imag()});
  return {{"n_qubits", s.n_qubits()}, {"amplitudes", std::move(amps)}};
}

void save_state_file(const PureState& s, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ArgumentError("cannot write state file " + path.string());
  out << state_to_json(s).dump(1) << '\n';
}

std::vector<int> parse_qubit_set(std::string_view text, int n_qubits) {
  if (text.empty()) throw ParseError("empty qubit set", 0);
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = std::min(text.find(',', start), text.size());
    const auto token = text.substr(start, comma - start);
    if (token.empty()) throw ParseError("empty qubit token", start);
    append(out, parse_token(token, start, n_qubits));
    start = comma + 1;
  }
  auto sorted = out;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw ParseError("qubit listed twice", 0);
  return out;
}

std::vector<Partition> parse_partition_list(std::string_view text, int n_qubits) {
  if (text.empty()) throw ParseError("empty partition list", 0);
  std::vector<Partition> out;
  std::vector<int> alpha;
  std::vector<int> beta;
  bool on_beta = false;
  std::size_t part_start = 0;

  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = std::min(text.find(',', start), text.size());
    const auto token = text.substr(start, comma - start);
    if (token.empty()) throw ParseError("empty partition token", start);
    const auto bar = token.find('|');
    if (bar == std::string_view::npos) {
      append(on_beta ? beta : alpha, parse_token(token, start, n_qubits));
    } else {
      if (on_beta || token.find('|', bar + 1) != std::string_view::npos) {
        throw ParseError("a partition has exactly one '|'", start + bar);
      }
      append(alpha, parse_token(token.substr(0, bar), start, n_qubits));
      on_beta = true;
      append(beta, parse_token(token.substr(bar + 1), start + bar + 1, n_qubits));
    }
    const auto named = alpha.size() + beta.size();
    if (named > static_cast<std::size_t>(n_qubits)) {
      throw ParseError("partition names more than " + std::to_string(n_qubits) + " qubits", part_start);
    }
    if (named == static_cast<std::size_t>(n_qubits)) {
      if (!on_beta) throw ParseError("partition is missing its '|'", part_start);
      out.push_back(Partition(std::move(alpha), std::move(beta)));
      alpha.clear();
      beta.clear();
      on_beta = false;
      part_start = comma + 1;
    }
    start = comma + 1;
  }
  if (!alpha.empty() || !beta.empty() || on_beta) {
    throw ParseError("partition does not cover all " + std::to_string(n_qubits) + " qubits", part_start);
  }
  return out;
}

Partition parse_partition(std::string_view text, int n_qubits) {
  auto parts = parse_partition_list(text, n_qubits);
  if (parts.size() != 1) throw ParseError("expected exactly one partition", 0);
  return std::move(parts.front());
}

std::string_view to_string(Units units) { return units == Units::Bits ? "bits" : "nats"; }

Units parse_units(std::string_view text) {
  if (text == "nats") return Units::Nats;
  if (text == "bits") return Units::Bits;
  throw ParseError("units must be nats or bits", 0);
}

CorrelationReport analyze(const DensityOperator& rho, std::span<const Partition> partitions, Units units,
                          std::string state_label) {
  CorrelationReport report;
  report.state = std::move(state_label);
  report.n_qubits = rho.n_qubits();
  report.units = units;
  report.total_nats = total_correlation(rho);
  report.single_qubit_entropies = single_qubit_entropies(rho);
  report.bounds = correlation_bounds(report.single_qubit_entropies);

  for (const auto& p : partitions) {
    if (p.n_qubits() != rho.n_qubits()) throw PartitionError("partition " + p.to_string() + " does not match the state");
  }
  std::vector<std::optional<ReportEntry>> slots(partitions.size());
  parallel_for(partitions.size(), [&](std::size_t i) { slots[i] = evaluate_cut(rho, partitions[i]); });
  for (auto& slot : slots) report.entries.push_back(std::move(*slot));

  if (!report.entries.empty()) {
    report.bounds.araki_lieb_ok =
        std::all_of(report.entries.begin(), report.entries.end(), [](const ReportEntry& e) { return e.araki_lieb.holds; });
  }
  return report;
}

CorrelationReport analyze(const StateSpec& spec, const std::optional<std::vector<Partition>>& partitions, Units units,
                          int max_qubits) {
  const auto state = build_state(spec, max_qubits);
  const auto rho = to_density(state);
  const auto cuts = partitions ? *partitions : enumerate_bipartitions(state.n_qubits());
  return analyze(rho, cuts, units, spec.text);
}

CorrelationReport sweep(const StateSpec& spec, std::optional<int> size_alpha, Units units, int max_qubits) {
  const auto state = build_state(spec, max_qubits);
  const auto cuts = enumerate_bipartitions(state.n_qubits(), size_alpha);
  return analyze(to_density(state), cuts, units, spec.text);
}

double round_significant(double value, int digits) {
  if (value == 0.0 || !std::isfinite(value)) return value;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return std::strtod(buf, nullptr);
}

nlohmann::json to_json(const CorrelationReport& report) {
  const bool bits = report.units == Units::Bits;
  nlohmann::json j;
  j["state"] = report.state;
  j["n_qubits"] = report.n_qubits;
  j["units"] = std::string(to_string(report.units));
  j["total"] = round_significant(report.total_nats);
  if (bits) j["total_bits"] = round_significant(nats_to_bits(report.total_nats));
  nlohmann::json singles = nlohmann::json::array();
  for (double s : report.single_qubit_entropies) singles.push_back(round_significant(s));
  j["single_qubit_entropies"] = std::move(singles);

  nlohmann::json bounds = {{"classical_upper", round_significant(report.bounds.classical_upper)},
                           {"quantum_upper", round_significant(report.bounds.quantum_upper)},
                           {"gap_bound", round_significant(report.bounds.gap_bound)}};
  bounds["araki_lieb_ok"] = report.bounds.araki_lieb_ok ? nlohmann::json(*report.bounds.araki_lieb_ok) : nlohmann::json();
  j["bounds"] = std::move(bounds);

  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : report.entries) {
    auto entry = decomposition_json(e.decomposition, 1.0);
    entry["partition"] = e.partition.to_string();
    entry["regions"] = {{"external", to_string(e.external_region)},
                        {"internal_alpha", to_string(e.internal_alpha_region)},
                        {"internal_beta", to_string(e.internal_beta_region)}};
    entry["product_across"] = e.product_across;
    entry["araki_lieb"] = {{"holds", e.araki_lieb.holds},
                           {"lower_slack", round_significant(e.araki_lieb.lower_slack)},
                           {"upper_slack", round_significant(e.araki_lieb.upper_slack)}};
    if (bits) entry["bits"] = decomposition_json(e.decomposition, 1.0 / kLn2);
    entries.push_back(std::move(entry));
  }
  j["entries"] = std::move(entries);
  return j;
}

void print_table(std::ostream& os, const CorrelationReport& report) {
  const double scale = report.units == Units::Bits ? 1.0 / kLn2 : 1.0;
  const auto unit = to_string(report.units);
  const auto flags = os.flags();
  os << std::fixed << std::setprecision(6);
  os << "state " << report.state << "  (" << report.n_qubits << " qubits)\n";
  os << "total correlation  " << report.total_nats * scale << ' ' << unit << '\n';
  os << "bounds             classical <= " << report.bounds.classical_upper * scale << ", quantum <= "
     << report.bounds.quantum_upper * scale << ", gap <= " << report.bounds.gap_bound * scale << '\n';
  if (report.bounds.araki_lieb_ok) os << "araki-lieb         " << (*report.bounds.araki_lieb_ok ? "ok" : "VIOLATED") << '\n';
  if (report.entries.empty()) {
    os.flags(flags);
    return;
  }
  os << '\n'
     << std::left << std::setw(14) << "partition" << std::right << std::setw(12) << "int(alpha)" << std::setw(12)
     << "int(beta)" << std::setw(12) << "external" << "  " << std::left << std::setw(13) << "ext region"
     << std::setw(13) << "int(a) reg" << std::setw(13) << "int(b) reg" << "product\n";
  for (const auto& e : report.entries) {
    const auto& d = e.decomposition;
    os << std::left << std::setw(14) << e.partition.to_string() << std::right << std::setw(12)
       << d.internal_alpha * scale << std::setw(12) << d.internal_beta * scale << std::setw(12) << d.external * scale
       << "  " << std::left << std::setw(13) << to_string(e.external_region) << std::setw(13)
       << to_string(e.internal_alpha_region) << std::setw(13) << to_string(e.internal_beta_region)
       << (e.product_across ? "yes" : "no") << '\n';
  }
  os.flags(flags);
}

}  // namespace qcorr
