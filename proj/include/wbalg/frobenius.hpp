#pragma once

// Frobenius systems on algebras and coalgebras, the module/comodule
// correspondence they induce, and the separable projection pi.

#include <cstdint>
#include <string>
#include <vector>

#include "wbalg/hcomodules.hpp"
#include "wbalg/hmodules.hpp"
#include "wbalg/prebialgebra.hpp"

namespace wbalg {

struct AlgebraConstants {
  std::size_t dim = 0;
  std::vector<Rational> mult;  // (i*dim + j)*dim + k
  Vec unit;

  explicit AlgebraConstants(std::size_t n = 0);
  Rational& mu(std::size_t i, std::size_t j, std::size_t k) { return mult[(i * dim + j) * dim + k]; }
  const Rational& mu(std::size_t i, std::size_t j, std::size_t k) const { return mult[(i * dim + j) * dim + k]; }
  Vec mul(const Vec& a, const Vec& b) const;
  friend bool operator==(const AlgebraConstants&, const AlgebraConstants&) = default;
};

struct CoalgebraConstants {
  std::size_t dim = 0;
  std::vector<Rational> comult;  // (i*dim + j)*dim + k
  Vec counit;

  explicit CoalgebraConstants(std::size_t n = 0);
  Rational& delta(std::size_t i, std::size_t j, std::size_t k) { return comult[(i * dim + j) * dim + k]; }
  const Rational& delta(std::size_t i, std::size_t j, std::size_t k) const { return comult[(i * dim + j) * dim + k]; }
  /// Delta as a (dim^2 x dim) matrix.
  Mat matrix() const;
  friend bool operator==(const CoalgebraConstants&, const CoalgebraConstants&) = default;
};

struct FrobeniusSystem {
  AlgebraConstants algebra;
  Vec e;    // in A (x) A
  Vec eps;  // on A
  bool separable = false;
  friend bool operator==(const FrobeniusSystem&, const FrobeniusSystem&) = default;
};

struct FrobCoalgebraSystem {
  CoalgebraConstants coalgebra;
  Vec theta;  // theta(a (x) b) = theta[a*dim + b]
  Vec one;
  bool coseparable = false;
  friend bool operator==(const FrobCoalgebraSystem&, const FrobCoalgebraSystem&) = default;
};

/// e^<1> e^<2> = 1.
bool is_separable(const FrobeniusSystem& sys);
/// theta o Delta = eps.
bool is_coseparable(const FrobCoalgebraSystem& sys);

/// "algebra laws", "Frobenius e central", "Frobenius normalization",
/// "separable flag".
VerificationReport check_frobenius(const FrobeniusSystem& sys);
/// "coalgebra laws", "eq coalg2.1", "Frobenius unit laws", "coseparable flag".
VerificationReport check_frob_coalgebra(const FrobCoalgebraSystem& sys);

/// Delta(a) = ae, counit eps, theta(a (x) b) = eps(ab), one = 1.
FrobCoalgebraSystem to_coalgebra(const FrobeniusSystem& sys);
/// ab = theta(a (x) b_(1)) b_(2), unit one, e = Delta(one).
FrobeniusSystem from_coalgebra(const FrobCoalgebraSystem& sys);

/// A right or left module over an algebra given by structure constants:
/// action[i] is m -> m.e_i (right) or m -> e_i.m (left).
struct AModule {
  std::size_t dim = 0;
  std::vector<Mat> action;
};

/// Right coaction: (dim*n) x dim, comodule leg major. Left coaction:
/// (n*dim) x dim, coalgebra leg major.
struct ACoModule {
  std::size_t dim = 0;
  Mat coaction;
};

std::optional<Witness> check_right_module(const AlgebraConstants& a, const AModule& m);
std::optional<Witness> check_left_module(const AlgebraConstants& a, const AModule& m);
std::optional<Witness> check_right_comodule(const CoalgebraConstants& c, const ACoModule& m);
std::optional<Witness> check_left_comodule(const CoalgebraConstants& c, const ACoModule& m);

/// rho(m) = m e^<1> (x) e^<2>.
ACoModule right_module_to_comodule(const FrobeniusSystem& sys, const AModule& m);
/// m.a = m_[0] eps(m_[1] a).
AModule right_comodule_to_module(const FrobeniusSystem& sys, const ACoModule& m);
/// lambda(n) = e^<1> (x) e^<2> n.
ACoModule left_module_to_comodule(const FrobeniusSystem& sys, const AModule& n);
/// a.n = eps(a n_[-1]) n_[0].
AModule left_comodule_to_module(const FrobeniusSystem& sys, const ACoModule& n);

/// Both conversions for the right module m and left module n, their
/// validity and round trips.
VerificationReport module_comodule_bridge(const FrobeniusSystem& sys, const AModule& m, const AModule& n);

/// pi(m (x) n) = m e^<1> (x) e^<2> n. Throws std::invalid_argument unless sys
/// is separable.
Mat frobenius_pi_matrix(const FrobeniusSystem& sys, const AModule& m, const AModule& n);
/// Idempotency, Im(pi) = cotensor, Ker(pi) = balancing relations, and the
/// isomorphism Im(pi) -> (M (x) N)/Ker(pi).
VerificationReport frobenius_pi(const FrobeniusSystem& sys, const AModule& m, const AModule& n);

/// Small standalone systems: k, k^2 with the idempotent basis, the 2x2
/// matrix algebra with e = (1/2) sum E_ij (x) E_ji and eps = 2 trace, and
/// the non-separable k[x]/(x^2) with e = 1 (x) x + x (x) 1, eps(x) = 1.
std::vector<std::pair<std::string, FrobeniusSystem>> frobenius_examples();

struct TargetSourceFrobenius {
  Subspace ht, hs;
  FrobeniusSystem t, s;  // intrinsic coordinates of the RREF bases
  VerificationReport report;
};

/// e_t, e_s and their Frobenius systems, compared with Delta_t / Delta_s.
/// Throws std::invalid_argument unless p is a weak bialgebra.
TargetSourceFrobenius ht_hs_frobenius(const Prebialgebra& p);

/// H_t acting on a left H-module: m <| z = epsbar_s(z).m and z |> m = z.m.
AModule ht_right_action(const TargetSourceFrobenius& f, const LeftModule& m);
AModule ht_left_action(const TargetSourceFrobenius& f, const LeftModule& m);
/// H_s acting on a right H-comodule: m <| y = <eps, m_[1] y> m_[0] and
/// y |> m = <eps, y m_[1]> m_[0].
AModule hs_right_action(const TargetSourceFrobenius& f, const RightComodule& m);
AModule hs_left_action(const TargetSourceFrobenius& f, const RightComodule& m);

/// The Frobenius checks above on H_t, H_s and the standalone examples, and
/// the comparison of the Frobenius pi with the module and comodule pi.
VerificationReport verify_section4(const Prebialgebra& p, std::uint64_t seed = 1);

}  // namespace wbalg
