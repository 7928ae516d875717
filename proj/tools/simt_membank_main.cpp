// simt-membank: runs the transpose/FFT benchmark kernels against the nine
// shared-memory architectures and reports cycles, efficiencies, footprints
// and diffs against the published profiling tables.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "membank/config_file.hpp"
#include "membank/fft.hpp"
#include "membank/report.hpp"
#include "membank/trace_io.hpp"

using namespace membank;

namespace {

struct ArchFlags {
  std::string arch;
  uint32_t banks = 16;
  std::string mapping = "lsb";
};

BankMapping parse_mapping(const std::string& text, uint32_t width) {
  if (text == "lsb") return BankMapping::lsb(width);
  if (text.rfind("offset:", 0) == 0) {
    uint32_t shift = 0;
    try {
      shift = uint32_t(std::stoul(text.substr(7)));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--mapping", "offset shift must be an integer");
    }
    BankMapping m = BankMapping::bit_slice(shift, width);
    if (!m.valid())
      throw CLI::ValidationError("--mapping", "offset shift leaves no room for " +
                                                  std::to_string(width) + " index bits");
    return m;
  }
  throw CLI::ValidationError("--mapping", "expected lsb or offset:<shift>");
}

MemArchitecture parse_arch(const ArchFlags& flags) {
  if (flags.arch == "4r1w") return MemArchitecture::multiport_4r1w();
  if (flags.arch == "4r2w") return MemArchitecture::multiport_4r2w();
  if (flags.arch == "4r1w-vb") {
    // For VB the mapping selects the 4 write sub-memories.
    if (flags.mapping == "lsb") return MemArchitecture::multiport_4r1w_vb();
    return MemArchitecture::multiport_4r1w_vb(parse_mapping(flags.mapping, 2));
  }
  if (flags.arch == "banked") {
    if (flags.banks != 4 && flags.banks != 8 && flags.banks != 16)
      throw CLI::ValidationError("--banks", "bank count must be 4, 8 or 16");
    uint32_t width = flags.banks == 4 ? 2 : (flags.banks == 8 ? 3 : 4);
    return MemArchitecture::make_banked(flags.banks, parse_mapping(flags.mapping, width));
  }
  throw CLI::ValidationError("--arch", "expected 4r1w, 4r2w, 4r1w-vb or banked");
}

EmitFormat parse_format(const std::string& f) {
  if (f == "table") return EmitFormat::Table;
  if (f == "csv") return EmitFormat::Csv;
  if (f == "json") return EmitFormat::Json;
  throw CLI::ValidationError("--format", "expected table, csv or json");
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"soft-SIMT shared-memory architecture simulator"};
  app.require_subcommand(1);

  std::string config_path;
  TimingParams params;
  double overhead_read = -1, overhead_write = -1;
  app.add_option("--config", config_path, "timing config file (key = value lines)");
  app.add_option("--overhead-read", overhead_read,
                 "per-instruction read overhead cycles");
  app.add_option("--overhead-write", overhead_write,
                 "per-instruction write overhead cycles");

  // run -----------------------------------------------------------------
  auto* cmd_run = app.add_subcommand("run", "simulate one kernel on one architecture");
  std::string kernel = "transpose";
  uint32_t size = 32, radix = 16, points = 4096, mem_kb = 64;
  std::string mode = "calibrated", format = "table", out_path;
  ArchFlags arch_flags;
  cmd_run->add_option("--kernel", kernel, "transpose or fft")->required();
  cmd_run->add_option("--size", size, "matrix dimension (transpose)");
  cmd_run->add_option("--radix", radix, "fft radix: 4, 8 or 16");
  cmd_run->add_option("--points", points, "fft length (default 4096)");
  cmd_run->add_option("--arch", arch_flags.arch, "4r1w, 4r2w, 4r1w-vb or banked")
      ->required();
  cmd_run->add_option("--banks", arch_flags.banks, "bank count for --arch banked");
  cmd_run->add_option("--mapping", arch_flags.mapping, "lsb or offset:<shift>");
  cmd_run->add_option("--mode", mode, "native or calibrated");
  cmd_run->add_option("--mem-kb", mem_kb, "shared memory size in KB");
  cmd_run->add_option("--format", format, "table, csv or json");
  cmd_run->add_option("--out", out_path, "output path (default stdout)");

  // matrix --------------------------------------------------------------
  auto* cmd_matrix = app.add_subcommand("matrix", "run the 51-scenario study");
  bool use_default = false, compare_paper = false;
  cmd_matrix->add_flag("--default", use_default, "the 51 profiled combinations");
  cmd_matrix->add_flag("--compare-paper", compare_paper,
                       "diff against the published reference tables");
  cmd_matrix->add_option("--mode", mode, "native or calibrated");
  cmd_matrix->add_option("--mem-kb", mem_kb, "shared memory size in KB");
  cmd_matrix->add_option("--format", format, "table, csv or json");
  cmd_matrix->add_option("--out", out_path, "output path (default stdout)");

  // footprint -----------------------------------------------------------
  auto* cmd_fp = app.add_subcommand("footprint", "ALM-equivalent footprint estimate");
  ArchFlags fp_flags;
  uint32_t fp_mem_kb = 64;
  cmd_fp->add_option("--arch", fp_flags.arch, "4r1w, 4r2w, 4r1w-vb or banked")
      ->required();
  cmd_fp->add_option("--banks", fp_flags.banks, "bank count for --arch banked");
  cmd_fp->add_option("--mapping", fp_flags.mapping, "lsb or offset:<shift>");
  cmd_fp->add_option("--mem-kb", fp_mem_kb, "shared memory size in KB")->required();

  // trace ---------------------------------------------------------------
  auto* cmd_trace = app.add_subcommand("trace", "export a kernel trace as JSON lines");
  std::string trace_kernel = "transpose";
  uint32_t trace_size = 32, trace_radix = 16, trace_points = 4096;
  std::string trace_mode = "native", trace_out;
  cmd_trace->add_option("--kernel", trace_kernel, "transpose or fft")->required();
  cmd_trace->add_option("--size", trace_size, "matrix dimension (transpose)");
  cmd_trace->add_option("--radix", trace_radix, "fft radix: 4, 8 or 16");
  cmd_trace->add_option("--points", trace_points, "fft length (default 4096)");
  cmd_trace->add_option("--mode", trace_mode, "native or calibrated");
  cmd_trace->add_option("--out", trace_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (!config_path.empty()) apply_config_file(config_path, params);
    if (overhead_read >= 0) params.per_instruction_overhead_read = overhead_read;
    if (overhead_write >= 0) params.per_instruction_overhead_write = overhead_write;
    params.validate();

    auto parse_mode = [](const std::string& m) {
      if (m == "native") return GenMode::Native;
      if (m == "calibrated") return GenMode::Calibrated;
      throw CLI::ValidationError("--mode", "expected native or calibrated");
    };

    if (cmd_run->parsed()) {
      Scenario s;
      if (kernel == "transpose") {
        s.kernel = {KernelKind::Transpose, size, 0};
        gen_transpose(size, parse_mode(mode));  // bad parameters are usage errors
      } else if (kernel == "fft") {
        s.kernel = {KernelKind::Fft, points, radix};
        gen_fft(radix, points, parse_mode(mode));
      } else {
        throw CLI::ValidationError("--kernel", "expected transpose or fft");
      }
      s.arch = parse_arch(arch_flags);
      s.mem_kb = mem_kb;
      s.mode = parse_mode(mode);
      Report report = run_matrix({s}, params);
      write_output(emit(report, parse_format(format)), out_path);
      return report.rows[0].ok ? 0 : 1;
    }

    if (cmd_matrix->parsed()) {
      if (!use_default)
        throw CLI::ValidationError("matrix", "pass --default for the 51-scenario study");
      Report report = run_matrix(default_matrix(parse_mode(mode), mem_kb), params);
      std::string text =
          compare_paper
              ? emit_with_comparison(report, compare_to_reference(report),
                                     parse_format(format))
              : emit(report, parse_format(format));
      write_output(text, out_path);
      for (const ReportRow& row : report.rows)
        if (!row.ok) return 1;
      return 0;
    }

    if (cmd_fp->parsed()) {
      MemArchitecture arch = parse_arch(fp_flags);
      FootprintEstimate est = footprint_estimate(arch, fp_mem_kb);
      std::printf("%-18s %4u KB  memory %.1f ALM  with core %.1f ALM  %.4f sectors\n",
                  arch.slug().c_str(), fp_mem_kb, est.memory_alm, est.with_core_alm,
                  est.sectors);
      return 0;
    }

    if (cmd_trace->parsed()) {
      KernelTrace t = trace_kernel == "fft"
                          ? gen_fft(trace_radix, trace_points, parse_mode(trace_mode))
                          : gen_transpose(trace_size, parse_mode(trace_mode));
      std::ostringstream buf;
      write_trace_jsonl(buf, t);
      write_output(buf.str(), trace_out);
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
