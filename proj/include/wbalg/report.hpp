#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace wbalg {

enum class Status { holds, fails, not_applicable };

std::string to_string(Status s);

/// Where an identity fails: basis indices (of H, of a module, or of a
/// tensor coordinate; `detail` says which) plus a free-form description.
struct Witness {
  std::vector<std::size_t> indices;
  std::string detail;
};

struct ReportEntry {
  std::string id;          // stable identifier, e.g. "eq 1.1.3"
  Status status = Status::holds;
  std::string hypothesis;  // "", "rm", "lm|lc", "iff rm", ...
  std::optional<Witness> witness;
  std::string note;
};

/// Ordered collection of identity checks. A failing entry always carries a
/// witness; a not-applicable entry records the hypothesis that was false.
class VerificationReport {
 public:
  void add(ReportEntry entry);
  /// Records holds (no witness) or fails (with the witness).
  void check(std::string id, std::string hypothesis, std::optional<Witness> failure, std::string note = {});
  void not_applicable(std::string id, std::string hypothesis, std::string note = {});
  /// Appends every entry of `other`, suffixing ids with " [context]".
  void merge(const VerificationReport& other, const std::string& context = {});

  const std::vector<ReportEntry>& entries() const { return entries_; }
  const ReportEntry* find(const std::string& id) const;
  /// Status of an exact id; throws std::out_of_range if absent.
  Status status(const std::string& id) const;
  bool holds(const std::string& id) const { return status(id) == Status::holds; }

  std::size_t count(Status s) const;
  bool all_hold() const { return count(Status::fails) == 0; }
  std::vector<const ReportEntry*> failures() const;

 private:
  std::vector<ReportEntry> entries_;
};

}  // namespace wbalg
