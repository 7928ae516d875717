#include "membank/config_file.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace membank {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

void apply_config_text(const std::string& text, TimingParams& params) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    lineno++;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    try {
      if (key == "read_issue_latency")
        params.read_issue_latency = uint32_t(std::stoul(value));
      else if (key == "bank_latency")
        params.bank_latency = uint32_t(std::stoul(value));
      else if (key == "per_instruction_overhead_read")
        params.per_instruction_overhead_read = std::stod(value);
      else if (key == "per_instruction_overhead_write")
        params.per_instruction_overhead_write = std::stod(value);
      else if (key == "ops_per_instruction")
        params.ops_per_instruction = uint32_t(std::stoul(value));
      else
        throw std::invalid_argument("unknown key '" + key + "'");
    } catch (const std::invalid_argument&) {
      throw;
    } catch (const std::exception&) {
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": bad value for '" + key + "'");
    }
  }
  params.validate();
}

void apply_config_file(const std::string& path, TimingParams& params) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  apply_config_text(buf.str(), params);
}

}  // namespace membank
