#include "wbalg/dualization.hpp"

namespace wbalg {

namespace {

std::string dual_label(const std::string& s) {
  if (!s.empty() && s.back() == '*') return s.substr(0, s.size() - 1);
  return s + "*";
}

std::string dual_name(const std::string& s) {
  if (s.empty()) return s;
  if (s.rfind("dual(", 0) == 0 && s.back() == ')') return s.substr(5, s.size() - 6);
  return "dual(" + s + ")";
}

}  // namespace

StructureConstants dual_constants(const StructureConstants& sc) {
  const std::size_t n = sc.dim;
  StructureConstants d(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t i = 0; i < n; ++i) {
        d.mu(a, b, i) = sc.delta(i, b, a);
        d.delta(i, a, b) = sc.mu(b, a, i);
      }
  d.unit = sc.counit;
  d.counit = sc.unit;
  d.name = dual_name(sc.name);
  for (const auto& l : sc.basis) d.basis.push_back(dual_label(l));
  return d;
}

Prebialgebra dual(const Prebialgebra& p) { return Prebialgebra(dual_constants(p.constants())); }

Prebialgebra convolution_dual(const Prebialgebra& p) {
  StructureConstants d = dual_constants(p.constants());
  StructureConstants out = d;
  const std::size_t n = d.dim;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t i = 0; i < n; ++i) {
        out.mu(a, b, i) = d.mu(b, a, i);
        out.delta(i, a, b) = d.delta(i, b, a);
      }
  out.name = p.name().empty() ? "" : "convolution-dual(" + p.name() + ")";
  return Prebialgebra(std::move(out));
}

VerificationReport verify_lemma_00(const Prebialgebra& p) {
  const AxiomDecision h = decide_axioms(p);
  const AxiomDecision d = decide_axioms(dual(p));
  VerificationReport r;
  auto entry = [&r](const std::string& id, bool mine, const std::optional<Witness>& mine_w, bool theirs,
                    const std::optional<Witness>& theirs_w, const std::string& text) {
    std::optional<Witness> w;
    if (mine != theirs) {
      const auto& src = mine_w ? mine_w : theirs_w;
      w = Witness{src ? src->indices : std::vector<std::size_t>{}, text};
    }
    r.check(id, "", w);
  };
  entry("Lemma 00 lm", h.flags.lm, h.lm_witness, d.flags.lc, d.lc_witness, "(lm) of H differs from (lc) of H*");
  entry("Lemma 00 rm", h.flags.rm, h.rm_witness, d.flags.rc, d.rc_witness, "(rm) of H differs from (rc) of H*");
  entry("Lemma 00 lc", h.flags.lc, h.lc_witness, d.flags.lm, d.lm_witness, "(lc) of H differs from (lm) of H*");
  entry("Lemma 00 rc", h.flags.rc, h.rc_witness, d.flags.rm, d.rm_witness, "(rc) of H differs from (rm) of H*");
  return r;
}

bool double_dual_identity(const Prebialgebra& p) {
  const StructureConstants dd = dual_constants(dual_constants(p.constants()));
  const StructureConstants& sc = p.constants();
  return dd.mult == sc.mult && dd.comult == sc.comult && dd.unit == sc.unit && dd.counit == sc.counit;
}

VerificationReport verify_duality(const Prebialgebra& p) {
  VerificationReport r;
  r.check("double dual", "", double_dual_identity(p) ? std::nullopt
                                                     : std::optional<Witness>(Witness{{}, "dual(dual(H)) differs from H"}));
  const Prebialgebra d = dual(p);
  const CanonicalMaps mh = canonical_maps(p);
  const CanonicalMaps md = canonical_maps(d);
  auto eq = [](const Mat& a, const Mat& b, const std::string& text) -> std::optional<Witness> {
    if (auto col = first_differing_column(a, b)) return Witness{{*col}, text + " differs on basis element " + std::to_string(*col)};
    return std::nullopt;
  };
  r.check("f_{H*} = g_H", "", eq(md.f, mh.g, "f_{H*} vs g_H"));
  r.check("f'_{H*} = g'_H", "", eq(md.f_prime, mh.g_prime, "f'_{H*} vs g'_H"));
  r.merge(verify_lemma_00(p));
  return r;
}

}  // namespace wbalg
