#include "wbalg/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace wbalg {

std::string to_string(Status s) {
  switch (s) {
    case Status::holds: return "holds";
    case Status::fails: return "fails";
    case Status::not_applicable: return "not-applicable";
  }
  return "unknown";
}

void VerificationReport::add(ReportEntry entry) {
  if (entry.status == Status::fails && !entry.witness) {
    throw std::logic_error("failing report entry '" + entry.id + "' has no witness");
  }
  if (find(entry.id) != nullptr) throw std::logic_error("duplicate report entry '" + entry.id + "'");
  entries_.push_back(std::move(entry));
}

void VerificationReport::check(std::string id, std::string hypothesis, std::optional<Witness> failure,
                               std::string note) {
  ReportEntry e;
  e.id = std::move(id);
  e.hypothesis = std::move(hypothesis);
  e.status = failure ? Status::fails : Status::holds;
  e.witness = std::move(failure);
  e.note = std::move(note);
  add(std::move(e));
}

void VerificationReport::not_applicable(std::string id, std::string hypothesis, std::string note) {
  ReportEntry e;
  e.id = std::move(id);
  e.hypothesis = std::move(hypothesis);
  e.status = Status::not_applicable;
  e.note = std::move(note);
  add(std::move(e));
}

void VerificationReport::merge(const VerificationReport& other, const std::string& context) {
  for (ReportEntry e : other.entries_) {
    if (!context.empty()) e.id += " [" + context + "]";
    add(std::move(e));
  }
}

const ReportEntry* VerificationReport::find(const std::string& id) const {
  auto it = std::find_if(entries_.begin(), entries_.end(), [&](const ReportEntry& e) { return e.id == id; });
  return it == entries_.end() ? nullptr : &*it;
}

Status VerificationReport::status(const std::string& id) const {
  const ReportEntry* e = find(id);
  if (e == nullptr) throw std::out_of_range("no report entry '" + id + "'");
  return e->status;
}

std::size_t VerificationReport::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [s](const ReportEntry& e) { return e.status == s; }));
}

std::vector<const ReportEntry*> VerificationReport::failures() const {
  std::vector<const ReportEntry*> out;
  for (const auto& e : entries_)
    if (e.status == Status::fails) out.push_back(&e);
  return out;
}

}  // namespace wbalg
