#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rotlabel/circular.hpp"
#include "rotlabel/conflicts.hpp"
#include "rotlabel/geom.hpp"

namespace rotlabel {

/// One active range per label, indexed like Instance::labels. An absent entry
/// means the label is never shown; zero-length ranges are stored as absent.
///
/// For validity a range is taken without its endpoints, so neighbouring
/// labels may hand over at a shared conflict angle.
class ActiveRangeAssignment {
 public:
  ActiveRangeAssignment() = default;
  explicit ActiveRangeAssignment(std::size_t n) : ranges_(n) {}

  std::size_t size() const { return ranges_.size(); }
  const std::optional<CircularInterval>& operator[](std::size_t i) const { return ranges_[i]; }
  const std::vector<std::optional<CircularInterval>>& ranges() const { return ranges_; }

  void set(std::size_t i, const CircularInterval& range);
  void clear(std::size_t i) { ranges_[i].reset(); }

  std::string algorithm;
  std::map<std::string, double> parameters;

 private:
  std::vector<std::optional<CircularInterval>> ranges_;
};

struct Violation {
  enum class Kind { SoftOverlap, HardOverlap, Malformed };
  Kind kind = Kind::Malformed;
  std::size_t label = 0;
  std::size_t other = 0;  // partner label, or owner of the covered anchor
  double witness = 0.0;   // an angle exhibiting the violation
  std::string detail;
};

std::string to_string(Violation::Kind kind);

/// Empty iff `phi` is valid and consistent for `inst`.
std::vector<Violation> validate_assignment(const Instance& inst, const ConflictGraph& graph,
                                           const ActiveRangeAssignment& phi);

/// Per-label record as exchanged in files: absent extent means never active.
struct RangeRecord {
  std::string id;
  double start = 0.0;
  std::optional<double> extent;
};

/// Resolves records by label id. Unknown, duplicate or non-finite records are
/// reported as Malformed; labels without a record stay absent.
ActiveRangeAssignment assignment_from_records(const Instance& inst, const std::vector<RangeRecord>& records,
                                              std::vector<Violation>& problems);

std::vector<RangeRecord> assignment_to_records(const Instance& inst, const ActiveRangeAssignment& phi);

/// Labels active at `alpha` (strictly inside their range).
std::vector<std::size_t> active_at(const ActiveRangeAssignment& phi, double alpha);

double max_total(const ActiveRangeAssignment& phi);
double max_min(const ActiveRangeAssignment& phi);

}  // namespace rotlabel
