#pragma once

// Finite-dimensional prebialgebras given by exact structure constants.
//
// Basis e_0 .. e_{n-1}.  Multiplication e_i e_j = sum_k mult(i,j,k) e_k,
// comultiplication Delta(e_i) = sum_{j,k} comult(i,j,k) e_j (x) e_k where
// j is the Sweedler "(1)" leg (the major index of the flattened tensor),
// unit 1 = sum_i unit[i] e_i, counit eps(e_i) = counit[i].
//
// Functionals on H are coordinate vectors in the dual basis e^a, so the
// pairing <phi, h> is dot(phi, h).

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wbalg/exactlin.hpp"
#include "wbalg/report.hpp"

namespace wbalg {

/// Raw structure constants; not necessarily satisfying any law.
struct StructureConstants {
  std::size_t dim = 0;
  std::vector<Rational> mult;    // dim^3, index (i*dim + j)*dim + k
  std::vector<Rational> comult;  // dim^3, index (i*dim + j)*dim + k
  Vec unit;                      // dim
  Vec counit;                    // dim
  std::string name;
  std::vector<std::string> basis;  // optional basis labels

  explicit StructureConstants(std::size_t n = 0);

  Rational& mu(std::size_t i, std::size_t j, std::size_t k) { return mult[(i * dim + j) * dim + k]; }
  const Rational& mu(std::size_t i, std::size_t j, std::size_t k) const { return mult[(i * dim + j) * dim + k]; }
  Rational& delta(std::size_t i, std::size_t j, std::size_t k) { return comult[(i * dim + j) * dim + k]; }
  const Rational& delta(std::size_t i, std::size_t j, std::size_t k) const {
    return comult[(i * dim + j) * dim + k];
  }

  std::string label(std::size_t i) const;

  friend bool operator==(const StructureConstants&, const StructureConstants&) = default;
};

/// Checks associativity, unitality, coassociativity, counitality and
/// multiplicativity of Delta on all basis pairs/triples.
/// Entry ids: "shape", "associativity", "unit", "coassociativity", "counit",
/// "multiplicativity".
VerificationReport validate(const StructureConstants& sc);

class StructureLawError : public std::invalid_argument {
 public:
  StructureLawError(const std::string& what, VerificationReport report)
      : std::invalid_argument(what), report_(std::move(report)) {}
  const VerificationReport& report() const { return report_; }

 private:
  VerificationReport report_;
};

/// A validated prebialgebra. Immutable; the only constructor validates.
class Prebialgebra {
 public:
  /// Throws StructureLawError unless validate(sc) passes.
  explicit Prebialgebra(StructureConstants sc);

  std::size_t dim() const { return sc_.dim; }
  const StructureConstants& constants() const { return sc_; }
  const std::string& name() const { return sc_.name; }
  std::string label(std::size_t i) const { return sc_.label(i); }

  const Vec& one() const { return sc_.unit; }
  const Vec& counit() const { return sc_.counit; }
  /// Delta(1) as a vector of H (x) H.
  const Vec& delta_one() const { return delta_one_; }

  /// Left multiplication by e_i (n x n).
  const Mat& left_mult(std::size_t i) const { return left_[i]; }
  /// Right multiplication by e_i (n x n).
  const Mat& right_mult(std::size_t i) const { return right_[i]; }
  /// Delta as an (n^2 x n) matrix.
  const Mat& comult_matrix() const { return comult_; }
  /// Multiplication H (x) H -> H as an (n x n^2) matrix.
  const Mat& mult_matrix() const { return mult_; }

  Vec mul(const Vec& a, const Vec& b) const;
  Vec comul(const Vec& a) const { return comult_ * a; }
  Rational eps(const Vec& a) const { return dot(sc_.counit, a); }
  /// eps(e_i e_j).
  const Rational& eps2(std::size_t i, std::size_t j) const { return eps2_(i, j); }
  /// Left multiplication by an arbitrary element.
  Mat left_mult(const Vec& a) const;
  Mat right_mult(const Vec& a) const;

  /// Componentwise product in H (x) H.
  Vec mul2(const Vec& x, const Vec& y) const;

 private:
  StructureConstants sc_;
  std::vector<Mat> left_;
  std::vector<Mat> right_;
  Mat comult_;
  Mat mult_;
  Mat eps2_;
  Vec delta_one_;
};

/// Product in H* under the opposite convolution,
/// <phi psi, h> = <phi, h_(2)> <psi, h_(1)>.
Vec dual_mul(const Prebialgebra& p, const Vec& phi, const Vec& psi);

struct AxiomFlags {
  bool lm = false;
  bool rm = false;
  bool lc = false;
  bool rc = false;

  bool monoidal() const { return lm && rm; }
  bool comonoidal() const { return lc && rc; }
  bool weak_bialgebra() const { return lm && rm && lc && rc; }
  friend bool operator==(const AxiomFlags&, const AxiomFlags&) = default;
};

struct AxiomDecision {
  AxiomFlags flags;
  /// First failing basis triple (h,k,l) for (lm)/(rm); first failing
  /// coordinate (a,b,c) of H(x)H(x)H for (lc)/(rc).
  std::optional<Witness> lm_witness, rm_witness, lc_witness, rc_witness;
};

AxiomDecision decide_axioms(const Prebialgebra& p);
AxiomFlags check_axioms(const Prebialgebra& p);

/// Evaluates a hypothesis expression such as "rm", "lm|lc", "m", "c",
/// "weak"; the empty string is always true.
bool hypothesis_holds(const AxiomFlags& flags, const std::string& hypothesis);
std::string describe(const AxiomFlags& flags);

/// The sixteen canonical maps. f, f' : H* -> H; g, g' : H -> H*; the rest
/// are endomorphisms of H or H*.
struct CanonicalMaps {
  Mat f, f_prime, g, g_prime;
  Mat eps_t, eps_s, eps_t_bar, eps_s_bar;
  Mat eps_t_star, eps_s_star, eps_t_bar_star, eps_s_bar_star;
};

CanonicalMaps canonical_maps(const Prebialgebra& p);

/// Same maps evaluated from their elementwise formulas
/// (eps_t(h) = <eps, 1_(1) h> 1_(2), ...), without composing matrices.
CanonicalMaps canonical_maps_explicit(const Prebialgebra& p);

struct SubspaceCatalog {
  // Subspaces of H.
  Subspace H_L, H_R, H_t, H_s, H_t_bar, H_s_bar, I_t, I_s, I_t_bar, I_s_bar;
  // Subspaces of H*.
  Subspace Hst_L, Hst_R, Hst_t, Hst_s, Hst_t_bar, Hst_s_bar, Ist_t, Ist_s, Ist_t_bar, Ist_s_bar;
};

SubspaceCatalog subspace_catalog(const Prebialgebra& p);

/// The comultiplications of the target/source (co)algebras, each given by
/// its defining formula on all of H (resp. H*) as an (n^2 x n) matrix, e.g.
/// Delta_t(z) = eps_t(1_(1) z) (x) eps_t(1_(2)). They are coalgebra
/// structures on the corresponding subspaces under the relevant axioms.
struct SubspaceComultiplications {
  Mat t, s, t_bar, s_bar, t_star, s_star, t_bar_star, s_bar_star;
};

SubspaceComultiplications subspace_comultiplications(const Prebialgebra& p);

/// Checks every identity about the target/source maps, their images, and the
/// (co)algebra structures they carry, over all basis elements. Identities
/// whose hypothesis flag is false are reported as not applicable.
VerificationReport verify_section1(const Prebialgebra& p);

}  // namespace wbalg
