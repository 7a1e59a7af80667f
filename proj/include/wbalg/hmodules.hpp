#pragma once

// Left H-modules and the monoidal structure (x)^l on them.
//
// A module over p is a dimension m and matrices rho(e_i) (m x m). Tensor
// products M (x) N carry the non-unital action h.(m (x) n) = h_(1)m (x) h_(2)n;
// pi = action of 1 is idempotent and its image is M (x)^l N.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wbalg/prebialgebra.hpp"

namespace wbalg {

struct LeftModule {
  const Prebialgebra* base = nullptr;  // not owned
  std::size_t dim = 0;
  std::vector<Mat> action;  // action[i] = rho(e_i)
  std::string name;

  /// rho(h) for an arbitrary element h.
  Mat act(const Vec& h) const;
};

/// Unit and associativity laws of the action.
std::optional<Witness> check_module(const LeftModule& m);
/// f: M -> N commutes with every rho(e_i).
std::optional<Witness> check_module_map(const LeftModule& m, const LeftModule& n, const Mat& f);

LeftModule regular_module(const Prebialgebra& p);
/// The action restricted to an invariant subspace, in basis coordinates.
/// Throws std::invalid_argument if the subspace is not invariant.
LeftModule submodule(const LeftModule& m, const Subspace& s, const std::string& name = {});
/// H.v as a submodule.
LeftModule cyclic_submodule(const LeftModule& m, const Vec& v, const std::string& name = {});
/// Cyclic submodules of the regular module and of H (x)^l H, generated by
/// vectors with small integer entries drawn from a fixed-seed generator.
std::vector<LeftModule> random_modules(const Prebialgebra& p, std::size_t count, std::uint64_t seed);

/// rho(e_i) on M (x) N, not restricted.
std::vector<Mat> tensor_actions(const LeftModule& m, const LeftModule& n);
/// The projection pi(m (x) n) = 1_(1)m (x) 1_(2)n.
Mat pi_l(const LeftModule& m, const LeftModule& n);

struct TensorL {
  LeftModule module;  // action on carrier coordinates
  Subspace carrier;   // Im(pi) inside M (x) N
  Mat section;        // carrier coordinates -> M (x) N
  Mat retraction;     // M (x) N -> carrier coordinates
  Mat pi;
};

/// M (x)^l N. Throws std::invalid_argument unless the base is monoidal.
TensorL tensor_l(const LeftModule& m, const LeftModule& n);

struct TensorLQuotient {
  LeftModule module;  // (M (x) N)/Ker(pi) on quotient coordinates
  Quotient quotient;
  Mat pi_bar;         // quotient coordinates -> carrier coordinates of tensor_l
  Mat pi_bar_inverse;
};

/// M (x)_l N as the quotient of M (x) N by Ker(pi) = Im(id - pi).
TensorLQuotient tensor_l_quot(const LeftModule& m, const LeftModule& n);

struct UnitObject {
  Subspace carrier;   // H_L^* = Im(g) inside H*
  LeftModule module;  // (k.phi)(l) = phi(lk), on carrier coordinates
};

UnitObject unit_object(const Prebialgebra& p);
/// H_t with h.z = eps_t(hz), on coordinates of the RREF basis of H_t.
LeftModule transported_unit(const Prebialgebra& p);
/// "unit object invariant", "unit object g linear", "unit object f intertwines".
VerificationReport verify_unit_object(const Prebialgebra& p);

/// The four unit maps for a module M, with the unit object in carrier
/// coordinates: l: U (x) M -> M, l_bar: M -> U (x) M, r: M (x) U -> M,
/// r_bar: M -> M (x) U.
struct UnitConstraints {
  Mat l, l_bar, r, r_bar;
};

UnitConstraints unit_constraints(const UnitObject& u, const LeftModule& m);
/// "eq 2.0.1", "Prop 2.3 left", "Prop 2.3 right"; the Prop 2.3 entries
/// require a monoidal base.
VerificationReport verify_units(const LeftModule& m);
/// Naturality of l, l_bar, r, r_bar along a module map phi: M -> N.
VerificationReport verify_naturality(const LeftModule& m, const LeftModule& n, const Mat& phi);

/// Condition (3) and H-linearity of l_bar_H / r_bar_H against (lm) / (rm).
VerificationReport verify_prop_2_1(const Prebialgebra& p);

/// "Thm 2.4 triangle", "Thm 2.4 associativity", "Thm 2.4 tensor module".
VerificationReport verify_monoidal(const LeftModule& m, const LeftModule& n, const LeftModule& p);

/// H_t-bimodule and bicomodule structures on M and N, the S-maps between
/// M (x)_{H_t} N and M (x)^l N, and the comparison with the cotensor product.
VerificationReport forgetful_structures(const LeftModule& m, const LeftModule& n);

/// pi idempotent, Im(pi) = Ker(id - pi), and pi_bar a module isomorphism.
VerificationReport verify_tensor_l(const LeftModule& m, const LeftModule& n);

/// All module-category checks on the regular module, the unit object, H_t
/// and a few seeded random modules.
VerificationReport verify_section2(const Prebialgebra& p, std::uint64_t seed = 1);

}  // namespace wbalg
