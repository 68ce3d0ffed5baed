#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ultralip {

// Machine-readable command report: parameters echoed, rationals printed in
// lowest terms, byte-stable for fixed inputs.
struct Report {
  std::string command;
  std::string digest;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::pair<std::string, bool>> verdicts;

  bool all_pass() const;
  void print_text(std::ostream& out) const;
  void print_tsv(std::ostream& out) const;
};

std::uint64_t fnv1a(std::string_view data);
std::string hex64(std::uint64_t value);

}  // namespace ultralip
