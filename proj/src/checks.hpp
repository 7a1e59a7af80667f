#pragma once

// Small helpers shared by the verifiers.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wbalg/prebialgebra.hpp"

namespace wbalg::detail {

using Check = std::function<std::optional<Witness>()>;

inline std::optional<Witness> differ(const Mat& a, const Mat& b, const std::string& what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return Witness{{}, what + ": shapes differ"};
  if (auto c = first_differing_column(a, b)) return Witness{{*c}, what + " differs on column " + std::to_string(*c)};
  return std::nullopt;
}

inline std::optional<Witness> fails_if(bool bad, const std::string& what) {
  if (bad) return Witness{{}, what};
  return std::nullopt;
}

inline std::optional<Witness> first_failure(std::initializer_list<Check> checks) {
  for (const auto& c : checks)
    if (auto w = c()) return w;
  return std::nullopt;
}

inline void gated(VerificationReport& r, const AxiomFlags& flags, const std::string& id, const std::string& hyp,
                  const Check& run, const std::string& note = {}) {
  if (!hypothesis_holds(flags, hyp)) {
    r.not_applicable(id, hyp, note);
    return;
  }
  r.check(id, hyp, run(), note);
}

// Checked when the hypothesis holds; otherwise not applicable, with the
// outcome recorded in the note.
inline void empirical(VerificationReport& r, const AxiomFlags& flags, const std::string& id, const std::string& hyp,
                      const std::optional<Witness>& w) {
  if (hypothesis_holds(flags, hyp)) {
    r.check(id, hyp, w);
  } else {
    r.not_applicable(id, hyp, std::string("empirically ") + (w ? "fails: " + w->detail : "holds"));
  }
}

// [a_0 | a_1 | ...]
inline Mat hcat(const std::vector<Mat>& blocks, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& b : blocks) cols += b.cols();
  Mat out(rows, cols);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (sgn(b(i, j)) != 0) out(i, off + j) = b(i, j);
    off += b.cols();
  }
  return out;
}

inline Mat restrict_to(const Subspace& s, const Mat& a) { return s.coordinates() * a * s.embedding(); }

}  // namespace wbalg::detail
