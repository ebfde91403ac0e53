#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "rotlabel/geom.hpp"
#include "rotlabel/labeling.hpp"

namespace rotlabel {

inline constexpr int kSchemaVersion = 1;

/// Malformed input. `where()` is a JSON pointer ("/labels/3/anchor") or a
/// byte offset ("byte 120") for syntax errors.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

/// {"schema": 1, "labels": [{"id", "anchor": [x, y], "extents": [wl, wr, hb, ht]}]}
Instance parse_instance(const std::string& text);
std::string dump_instance(const Instance& inst);

struct RunReport {
  std::string algorithm;
  std::map<std::string, double> parameters;
  double max_total = 0.0;
  double max_min = 0.0;
  double wall_time_s = 0.0;
  std::vector<RangeRecord> ranges;
  std::size_t violations = 0;
};

RunReport make_report(const Instance& inst, const ActiveRangeAssignment& phi, double wall_time_s,
                      std::size_t violations);

/// Parses a report. Objective values and the violation count are recomputed
/// against `inst` instead of being trusted; `phi` receives the assignment.
RunReport parse_report(const std::string& text, const Instance& inst, ActiveRangeAssignment& phi);
std::string dump_report(const RunReport& report);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace rotlabel
