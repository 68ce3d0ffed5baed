#include "ultralip/report.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

namespace ultralip {

bool Report::all_pass() const {
  for (const auto& [name, ok] : verdicts)
    if (!ok) return false;
  return true;
}

void Report::print_text(std::ostream& out) const {
  out << "# " << command << "\n";
  if (!digest.empty()) out << "# input " << digest << "\n";
  for (const auto& [k, v] : params) out << "# " << k << " = " << v << "\n";
  if (!header.empty()) {
    for (std::size_t i = 0; i < header.size(); ++i)
      out << (i ? "  " : "") << header[i];
    out << "\n";
  }
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "  " : "") << row[i];
    out << "\n";
  }
  for (const auto& [name, ok] : verdicts)
    out << (ok ? "PASS " : "FAIL ") << name << "\n";
}

void Report::print_tsv(std::ostream& out) const {
  out << "command\t" << command << "\n";
  if (!digest.empty()) out << "input\t" << digest << "\n";
  for (const auto& [k, v] : params) out << "param\t" << k << "\t" << v << "\n";
  if (!header.empty()) {
    out << "header";
    for (const auto& h : header) out << "\t" << h;
    out << "\n";
  }
  for (const auto& row : rows) {
    out << "row";
    for (const auto& cell : row) out << "\t" << cell;
    out << "\n";
  }
  for (const auto& [name, ok] : verdicts)
    out << "verdict\t" << name << "\t" << (ok ? "pass" : "fail") << "\n";
}

std::uint64_t fnv1a(std::string_view data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex64(std::uint64_t value) {
  std::ostringstream out;
  out << std::hex << std::setfill('0') << std::setw(16) << value;
  return out.str();
}

}  // namespace ultralip
