#include "membank/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include <json.hpp>

#include "membank/fft.hpp"
#include "membank/reference_tables.hpp"

namespace membank {

namespace {

using ordered_json = nlohmann::ordered_json;

double round_to(double v, int decimals) {
  double scale = std::pow(10.0, decimals);
  return std::round(v * scale) / scale;
}

KernelTrace generate(const KernelSpec& spec, GenMode mode) {
  return spec.kind == KernelKind::Transpose ? gen_transpose(spec.size, mode)
                                            : gen_fft(spec.radix, spec.size, mode);
}

std::vector<MemArchitecture> table_archs(bool with_vb) {
  std::vector<MemArchitecture> archs;
  archs.push_back(MemArchitecture::multiport_4r1w());
  archs.push_back(MemArchitecture::multiport_4r2w());
  if (with_vb) archs.push_back(MemArchitecture::multiport_4r1w_vb());
  for (uint32_t banks : {16u, 8u, 4u}) {
    uint32_t width = banks == 4 ? 2 : (banks == 8 ? 3 : 4);
    archs.push_back(MemArchitecture::make_banked(banks, BankMapping::lsb(width)));
    archs.push_back(
        MemArchitecture::make_banked(banks, BankMapping::bit_slice(2, width)));
  }
  return archs;
}

}  // namespace

std::vector<Scenario> default_matrix(GenMode mode, uint32_t mem_kb) {
  std::vector<Scenario> scenarios;
  for (uint32_t n : {32u, 64u, 128u})
    for (const auto& arch : table_archs(false))
      scenarios.push_back({{KernelKind::Transpose, n, 0}, arch, mem_kb, mode});
  for (uint32_t radix : {4u, 8u, 16u})
    for (const auto& arch : table_archs(true))
      scenarios.push_back({{KernelKind::Fft, 4096, radix}, arch, mem_kb, mode});
  return scenarios;
}

Report run_matrix(const std::vector<Scenario>& scenarios, const TimingParams& params) {
  Report report;
  report.rows.reserve(scenarios.size());

  // Traces are immutable; share one per (kernel, mode) across architectures.
  std::map<std::pair<std::string, int>, KernelTrace> traces;

  for (const Scenario& s : scenarios) {
    ReportRow row;
    row.scenario = s;
    try {
      auto key = std::make_pair(s.kernel.name() + "/" + std::to_string(s.kernel.size),
                                int(s.mode));
      auto it = traces.find(key);
      if (it == traces.end())
        it = traces.emplace(key, generate(s.kernel, s.mode)).first;
      row.metrics = run(it->second, s.arch, params, s.mem_kb);
      row.footprint = footprint_estimate(s.arch, s.mem_kb);
      row.ok = true;
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    report.rows.push_back(std::move(row));
  }

  // Slowest scenario of each kernel group defines normalized performance 1.0.
  std::map<std::string, double> slowest;
  for (const ReportRow& row : report.rows)
    if (row.ok) {
      double& t = slowest[row.scenario.kernel.name()];
      t = std::max(t, row.metrics.time_us);
    }
  for (ReportRow& row : report.rows)
    if (row.ok && slowest[row.scenario.kernel.name()] > 0)
      row.normalized_performance =
          row.metrics.time_us / slowest[row.scenario.kernel.name()];
  return report;
}

namespace {

struct CellSpec {
  const char* field;
  double sim;
  double ref;
  bool is_eff;
  bool is_time;
};

DeltaClass classify(const Scenario& s, const std::string& field) {
  // Only calibrated runs claim comparability; native compute counts are ours.
  if (s.mode == GenMode::Native) return DeltaClass::Informational;
  bool banked = s.arch.is_banked();
  bool offset = banked && s.arch.banked->mapping.kind == MapKind::BitSlice &&
                s.arch.banked->mapping.shift != 0;
  if (s.kernel.kind == KernelKind::Transpose) {
    if (!banked) return DeltaClass::Exact;
    if (offset) return DeltaClass::Informational;
    // The LSB-banked store stream is reproducible; the profiled kernel's
    // read blocking is not.
    if (field == "store_cycles" || field == "write_bank_eff")
      return DeltaClass::Approx;
    return DeltaClass::Informational;
  }
  // FFT rows: only the deterministic multi-port accesses are comparable.
  if (!banked) {
    if (s.arch.kind == ArchKind::MultiPort4R1W_VB &&
        (field == "store_cycles" || field == "total_cycles" || field == "time_us" ||
         field == "compute_eff"))
      return DeltaClass::Informational;
    return DeltaClass::Approx;
  }
  return DeltaClass::Informational;
}

bool delta_within(DeltaClass cls, const CellSpec& cell) {
  double d = std::abs(cell.sim - cell.ref);
  switch (cls) {
    case DeltaClass::Exact:
      if (cell.is_time) return d <= 0.0100001;
      if (cell.is_eff) return d <= 0.05;
      return cell.sim == cell.ref;
    case DeltaClass::Approx:
      if (cell.is_eff) return d <= 1.0;
      return cell.ref == 0 ? cell.sim == 0 : d / std::abs(cell.ref) <= 0.03;
    case DeltaClass::Informational:
      return true;
  }
  return true;
}

}  // namespace

Comparison compare_to_reference(const Report& report) {
  Comparison cmp;
  for (const ReportRow& row : report.rows) {
    if (!row.ok) continue;
    const std::string kernel = row.scenario.kernel.name();
    const std::string arch = row.scenario.arch.slug();
    const ReferenceRow* ref = find_reference(kernel, arch);
    if (!ref) {
      cmp.unmatched.push_back(kernel + "/" + arch);
      continue;
    }
    const SimMetrics& m = row.metrics;
    std::vector<CellSpec> cells = {
        {"load_cycles", double(m.load_cycles), double(ref->load_cycles), false, false},
        {"store_cycles", double(m.store_cycles), double(ref->store_cycles), false, false},
        {"total_cycles", double(m.total_cycles), double(ref->total_cycles), false, false},
        {"time_us", round_to(m.time_us, 2), ref->time_us, false, true},
    };
    if (ref->twiddle_cycles)
      cells.push_back({"twiddle_cycles", double(m.twiddle_load_cycles),
                       double(ref->twiddle_cycles), false, false});
    if (ref->read_eff_pct && m.read_bank_efficiency)
      cells.push_back({"read_bank_eff", round_to(*m.read_bank_efficiency, 1),
                       *ref->read_eff_pct, true, false});
    if (ref->write_eff_pct && m.write_bank_efficiency)
      cells.push_back({"write_bank_eff", round_to(*m.write_bank_efficiency, 1),
                       *ref->write_eff_pct, true, false});
    if (ref->twiddle_eff_pct && m.twiddle_bank_efficiency)
      cells.push_back({"twiddle_bank_eff", round_to(*m.twiddle_bank_efficiency, 1),
                       *ref->twiddle_eff_pct, true, false});
    if (ref->compute_eff_pct && m.compute_efficiency_pct)
      cells.push_back({"compute_eff", round_to(*m.compute_efficiency_pct, 1),
                       *ref->compute_eff_pct, true, false});

    for (const CellSpec& cell : cells) {
      CellDelta delta;
      delta.kernel = kernel;
      delta.arch = arch;
      delta.field = cell.field;
      delta.simulated = cell.sim;
      delta.reference = cell.ref;
      delta.cls = classify(row.scenario, cell.field);
      delta.within = delta_within(delta.cls, cell);
      switch (delta.cls) {
        case DeltaClass::Exact:
          cmp.exact_total++;
          cmp.exact_ok += delta.within ? 1 : 0;
          break;
        case DeltaClass::Approx:
          cmp.approx_total++;
          cmp.approx_ok += delta.within ? 1 : 0;
          break;
        case DeltaClass::Informational:
          cmp.info_total++;
          break;
      }
      cmp.cells.push_back(std::move(delta));
    }
  }
  return cmp;
}

namespace {

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string fmt_opt(const std::optional<double>& v, int decimals) {
  if (!v) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, *v);
  return buf;
}

std::string fmt(double v, int decimals) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

ordered_json row_to_json(const ReportRow& row) {
  ordered_json j;
  j["kernel"] = row.scenario.kernel.name();
  j["size"] = row.scenario.kernel.size;
  if (row.scenario.kernel.kind == KernelKind::Fft)
    j["radix"] = row.scenario.kernel.radix;
  j["arch"] = row.scenario.arch.slug();
  j["mode"] = row.scenario.mode == GenMode::Calibrated ? "calibrated" : "native";
  j["mem_kb"] = row.scenario.mem_kb;
  if (!row.ok) {
    j["status"] = "error";
    j["error"] = row.error;
    return j;
  }
  j["status"] = "ok";
  const SimMetrics& m = row.metrics;
  j["ops"] = {{"load", m.load_ops},
              {"store", m.store_ops},
              {"twiddle_load", m.twiddle_load_ops}};
  j["cycles"] = {{"fp", m.fp_cycles},
                 {"int", m.int_cycles},
                 {"immediate", m.immediate_cycles},
                 {"other", m.other_cycles},
                 {"load", m.load_cycles},
                 {"twiddle_load", m.twiddle_load_cycles},
                 {"store", m.store_cycles},
                 {"overlap_credit", m.overlap_credit},
                 {"total", m.total_cycles}};
  j["time_us"] = round_to(m.time_us, 2);
  ordered_json eff;
  eff["read_bank"] = m.read_bank_efficiency
                         ? ordered_json(round_to(*m.read_bank_efficiency, 1))
                         : ordered_json(nullptr);
  eff["write_bank"] = m.write_bank_efficiency
                          ? ordered_json(round_to(*m.write_bank_efficiency, 1))
                          : ordered_json(nullptr);
  eff["twiddle_bank"] = m.twiddle_bank_efficiency
                            ? ordered_json(round_to(*m.twiddle_bank_efficiency, 1))
                            : ordered_json(nullptr);
  eff["compute"] = m.compute_efficiency_pct
                       ? ordered_json(round_to(*m.compute_efficiency_pct, 1))
                       : ordered_json(nullptr);
  j["efficiencies"] = eff;
  j["checksum"] = m.functional_checksum;
  j["normalized_performance"] = round_to(row.normalized_performance, 4);
  j["footprint"] = {{"memory_alm", round_to(row.footprint.memory_alm, 1)},
                    {"with_core_alm", round_to(row.footprint.with_core_alm, 1)},
                    {"sectors", round_to(row.footprint.sectors, 4)}};
  return j;
}

std::string emit_json(const Report& report) {
  ordered_json j;
  j["schema_version"] = 1;
  j["rows"] = ordered_json::array();
  for (const ReportRow& row : report.rows) j["rows"].push_back(row_to_json(row));
  return j.dump(2) + "\n";
}

const char* kCsvHeader =
    "kernel,arch,mode,mem_kb,status,load_ops,store_ops,twiddle_ops,"
    "fp_cycles,int_cycles,immediate_cycles,other_cycles,load_cycles,"
    "twiddle_load_cycles,store_cycles,overlap_credit,total_cycles,time_us,"
    "read_bank_eff,write_bank_eff,twiddle_bank_eff,compute_eff,"
    "normalized_performance,footprint_alm,footprint_with_core_alm,checksum,error";

std::string emit_csv(const Report& report) {
  std::ostringstream out;
  out << kCsvHeader << "\n";
  for (const ReportRow& row : report.rows) {
    const SimMetrics& m = row.metrics;
    out << csv_quote(row.scenario.kernel.name()) << ','
        << csv_quote(row.scenario.arch.slug()) << ','
        << (row.scenario.mode == GenMode::Calibrated ? "calibrated" : "native") << ','
        << row.scenario.mem_kb << ',' << (row.ok ? "ok" : "error") << ',';
    if (row.ok) {
      out << m.load_ops << ',' << m.store_ops << ',' << m.twiddle_load_ops << ','
          << m.fp_cycles << ',' << m.int_cycles << ',' << m.immediate_cycles << ','
          << m.other_cycles << ',' << m.load_cycles << ',' << m.twiddle_load_cycles
          << ',' << m.store_cycles << ',' << m.overlap_credit << ',' << m.total_cycles
          << ',' << fmt(round_to(m.time_us, 2), 2) << ','
          << fmt_opt(m.read_bank_efficiency, 1) << ','
          << fmt_opt(m.write_bank_efficiency, 1) << ','
          << fmt_opt(m.twiddle_bank_efficiency, 1) << ','
          << fmt_opt(m.compute_efficiency_pct, 1) << ','
          << fmt(row.normalized_performance, 4) << ','
          << fmt(row.footprint.memory_alm, 1) << ','
          << fmt(row.footprint.with_core_alm, 1) << ','
          << csv_quote(m.functional_checksum) << ',';
    } else {
      for (int i = 0; i < 21; ++i) out << ',';
    }
    out << csv_quote(row.error) << "\n";
  }
  return out.str();
}

std::string emit_table(const Report& report) {
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof line,
                "%-14s %-17s %5s %10s %10s %10s %10s %9s %6s %6s %6s %6s %6s\n",
                "kernel", "arch", "mem", "load_cyc", "tw_cyc", "store_cyc", "total",
                "time_us", "r_eff", "w_eff", "tw_eff", "c_eff", "norm");
  out << line;
  for (const ReportRow& row : report.rows) {
    if (!row.ok) {
      std::snprintf(line, sizeof line, "%-14s %-17s %5u  error: %s\n",
                    row.scenario.kernel.name().c_str(),
                    row.scenario.arch.slug().c_str(), row.scenario.mem_kb,
                    row.error.c_str());
      out << line;
      continue;
    }
    const SimMetrics& m = row.metrics;
    std::snprintf(line, sizeof line,
                  "%-14s %-17s %5u %10llu %10llu %10llu %10llu %9.2f %6s %6s %6s %6s "
                  "%6.3f\n",
                  row.scenario.kernel.name().c_str(), row.scenario.arch.slug().c_str(),
                  row.scenario.mem_kb, (unsigned long long)m.load_cycles,
                  (unsigned long long)m.twiddle_load_cycles,
                  (unsigned long long)m.store_cycles, (unsigned long long)m.total_cycles,
                  m.time_us, fmt_opt(m.read_bank_efficiency, 1).c_str(),
                  fmt_opt(m.write_bank_efficiency, 1).c_str(),
                  fmt_opt(m.twiddle_bank_efficiency, 1).c_str(),
                  fmt_opt(m.compute_efficiency_pct, 1).c_str(),
                  row.normalized_performance);
    out << line;
  }
  return out.str();
}

const char* class_name(DeltaClass c) {
  switch (c) {
    case DeltaClass::Exact: return "exact";
    case DeltaClass::Approx: return "approx";
    case DeltaClass::Informational: return "info";
  }
  return "?";
}

}  // namespace

std::string emit(const Report& report, EmitFormat format) {
  switch (format) {
    case EmitFormat::Json: return emit_json(report);
    case EmitFormat::Csv: return emit_csv(report);
    case EmitFormat::Table: return emit_table(report);
  }
  throw std::invalid_argument("unknown report format");
}

namespace {

ordered_json comparison_to_json(const Comparison& cmp) {
  ordered_json j;
  j["summary"] = {{"exact_ok", cmp.exact_ok},       {"exact_total", cmp.exact_total},
                  {"approx_ok", cmp.approx_ok},     {"approx_total", cmp.approx_total},
                  {"informational", cmp.info_total}};
  j["unmatched"] = cmp.unmatched;
  j["cells"] = ordered_json::array();
  for (const CellDelta& c : cmp.cells) {
    double delta = c.simulated - c.reference;
    j["cells"].push_back({{"kernel", c.kernel},
                          {"arch", c.arch},
                          {"field", c.field},
                          {"simulated", c.simulated},
                          {"reference", c.reference},
                          {"delta", round_to(delta, 4)},
                          {"delta_pct", c.reference != 0
                                            ? round_to(100.0 * delta / c.reference, 2)
                                            : 0.0},
                          {"class", class_name(c.cls)},
                          {"within", c.within}});
  }
  return j;
}

}  // namespace

std::string emit_comparison(const Comparison& cmp, EmitFormat format) {
  if (format == EmitFormat::Json) {
    ordered_json j;
    j["schema_version"] = 1;
    j.update(comparison_to_json(cmp));
    return j.dump(2) + "\n";
  }

  std::ostringstream out;
  char line[256];
  if (format == EmitFormat::Csv) {
    out << "kernel,arch,field,simulated,reference,delta,delta_pct,class,within\n";
    for (const CellDelta& c : cmp.cells) {
      double delta = c.simulated - c.reference;
      out << c.kernel << ',' << c.arch << ',' << c.field << ',' << fmt(c.simulated, 2)
          << ',' << fmt(c.reference, 2) << ',' << fmt(delta, 2) << ','
          << (c.reference != 0 ? fmt(100.0 * delta / c.reference, 2) : "") << ','
          << class_name(c.cls) << ',' << (c.within ? "yes" : "no") << "\n";
    }
    return out.str();
  }

  std::snprintf(line, sizeof line, "%-14s %-17s %-17s %12s %12s %8s %7s %6s\n",
                "kernel", "arch", "field", "simulated", "reference", "delta%",
                "class", "ok");
  out << line;
  for (const CellDelta& c : cmp.cells) {
    double pct = c.reference != 0 ? 100.0 * (c.simulated - c.reference) / c.reference
                                  : 0.0;
    std::snprintf(line, sizeof line, "%-14s %-17s %-17s %12.2f %12.2f %8.2f %7s %6s\n",
                  c.kernel.c_str(), c.arch.c_str(), c.field.c_str(), c.simulated,
                  c.reference, pct, class_name(c.cls), c.within ? "yes" : "NO");
    out << line;
  }
  std::snprintf(line, sizeof line,
                "summary: exact %zu/%zu  approx(<=3%%) %zu/%zu  informational %zu  "
                "unmatched %zu\n",
                cmp.exact_ok, cmp.exact_total, cmp.approx_ok, cmp.approx_total,
                cmp.info_total, cmp.unmatched.size());
  out << line;
  return out.str();
}

std::string emit_with_comparison(const Report& report, const Comparison& cmp,
                                 EmitFormat format) {
  if (format == EmitFormat::Json) {
    ordered_json j;
    j["schema_version"] = 1;
    j["rows"] = ordered_json::array();
    for (const ReportRow& row : report.rows) j["rows"].push_back(row_to_json(row));
    j["comparison"] = comparison_to_json(cmp);
    return j.dump(2) + "\n";
  }
  return emit(report, format) + "\n" + emit_comparison(cmp, format);
}

Report parse_report_json(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  Report report;
  for (const auto& rj : j.at("rows")) {
    ReportRow row;
    std::string kernel = rj.at("kernel");
    row.scenario.kernel.kind = kernel.rfind("fft", 0) == 0 ? KernelKind::Fft
                                                           : KernelKind::Transpose;
    row.scenario.kernel.size = rj.at("size");
    if (rj.contains("radix")) row.scenario.kernel.radix = rj.at("radix");
    auto arch = MemArchitecture::from_slug(rj.at("arch"));
    if (!arch) throw std::invalid_argument("unknown arch slug in report");
    row.scenario.arch = *arch;
    row.scenario.mode =
        rj.at("mode") == "calibrated" ? GenMode::Calibrated : GenMode::Native;
    row.scenario.mem_kb = rj.at("mem_kb");
    row.ok = rj.at("status") == "ok";
    if (!row.ok) {
      row.error = rj.value("error", "");
      report.rows.push_back(std::move(row));
      continue;
    }
    SimMetrics& m = row.metrics;
    m.kernel = kernel;
    m.arch = rj.at("arch");
    const auto& ops = rj.at("ops");
    m.load_ops = ops.at("load");
    m.store_ops = ops.at("store");
    m.twiddle_load_ops = ops.at("twiddle_load");
    const auto& cy = rj.at("cycles");
    m.fp_cycles = cy.at("fp");
    m.int_cycles = cy.at("int");
    m.immediate_cycles = cy.at("immediate");
    m.other_cycles = cy.at("other");
    m.load_cycles = cy.at("load");
    m.twiddle_load_cycles = cy.at("twiddle_load");
    m.store_cycles = cy.at("store");
    m.overlap_credit = cy.at("overlap_credit");
    m.total_cycles = cy.at("total");
    m.time_us = rj.at("time_us");
    const auto& eff = rj.at("efficiencies");
    if (!eff.at("read_bank").is_null()) m.read_bank_efficiency = eff.at("read_bank");
    if (!eff.at("write_bank").is_null()) m.write_bank_efficiency = eff.at("write_bank");
    if (!eff.at("twiddle_bank").is_null())
      m.twiddle_bank_efficiency = eff.at("twiddle_bank");
    if (!eff.at("compute").is_null()) m.compute_efficiency_pct = eff.at("compute");
    m.functional_checksum = rj.at("checksum");
    row.normalized_performance = rj.at("normalized_performance");
    row.footprint.memory_alm = rj.at("footprint").at("memory_alm");
    row.footprint.with_core_alm = rj.at("footprint").at("with_core_alm");
    row.footprint.sectors = rj.at("footprint").at("sectors");
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace membank
