#pragma once

// Right H-comodules and the monoidal structure (x)^r on them.
//
// A coaction on k^m is an (m*n) x m matrix; in the output the comodule leg
// "[0]" is major and the H leg "[1]" is minor. M (x) N carries
// m (x) n -> m_[0] (x) n_[0] (x) m_[1] n_[1], and pi = the action of the
// counit projects onto M (x)^r N.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wbalg/hmodules.hpp"
#include "wbalg/prebialgebra.hpp"

namespace wbalg {

struct RightComodule {
  const Prebialgebra* base = nullptr;  // not owned
  std::size_t dim = 0;
  Mat coaction;
  std::string name;

  /// m -> <phi, m_[1]> m_[0].
  Mat act(const Vec& phi) const;
};

std::optional<Witness> check_comodule(const RightComodule& m);
/// f: M -> N is colinear.
std::optional<Witness> check_comodule_map(const RightComodule& m, const RightComodule& n, const Mat& f);

RightComodule regular_comodule(const Prebialgebra& p);
/// H_s with y -> 1_(1) (x) y 1_(2), on coordinates of the RREF basis of H_s.
/// Throws std::invalid_argument unless the base is comonoidal.
RightComodule hs_comodule(const Prebialgebra& p);
/// Throws std::invalid_argument unless s (x) H contains the coaction of s.
RightComodule subcomodule(const RightComodule& m, const Subspace& s, const std::string& name = {});
/// The smallest subcomodule containing v.
RightComodule cyclic_subcomodule(const RightComodule& m, const Vec& v, const std::string& name = {});
/// Cyclic subcomodules of H and of H (x)^r H from a fixed-seed generator.
std::vector<RightComodule> random_comodules(const Prebialgebra& p, std::size_t count, std::uint64_t seed);

/// The coaction of M (x) N, not restricted.
Mat tensor_coaction(const RightComodule& m, const RightComodule& n);
/// pi(m (x) n) = <eps, m_[1] n_[1]> m_[0] (x) n_[0].
Mat pi_r(const RightComodule& m, const RightComodule& n);

struct TensorR {
  RightComodule comodule;  // on carrier coordinates
  Subspace carrier;
  Mat section;
  Mat retraction;
  Mat pi;
};

/// M (x)^r N. Throws std::invalid_argument unless the base is comonoidal.
TensorR tensor_r(const RightComodule& m, const RightComodule& n);

struct TensorRQuotient {
  RightComodule comodule;
  Quotient quotient;
  Mat pi_bar;
  Mat pi_bar_inverse;
};

/// M (x)_r N = (M (x) N)/Ker(pi).
TensorRQuotient tensor_r_quot(const RightComodule& m, const RightComodule& n);

/// l: H_s (x) M -> M, l_bar: M -> H_s (x) M, r: M (x) H_s -> M,
/// r_bar: M -> M (x) H_s, with H_s in RREF basis coordinates.
struct CoUnitConstraints {
  Mat l, l_bar, r, r_bar;
};

CoUnitConstraints co_unit_constraints(const RightComodule& m);

/// Unit maps, triangle and associativity for comodules.
VerificationReport verify_thm_3_1(const RightComodule& m, const RightComodule& n, const RightComodule& p);
VerificationReport verify_co_naturality(const RightComodule& m, const RightComodule& n, const Mat& phi);
/// pi idempotent, its image a counital subcomodule, pi_bar a colinear isomorphism.
VerificationReport verify_tensor_r(const RightComodule& m, const RightComodule& n);

/// H_s-bimodule and bicomodule structures, the S-maps and the cotensor
/// product. The essential-strength entries need lm|rm; without it they are
/// not applicable and their note records what actually happens.
VerificationReport forgetful_structures_co(const RightComodule& m, const RightComodule& n);

/// The left module over q = convolution_dual(p) given by h*.m = <h*, m_[1]> m_[0].
LeftModule as_dual_module(const RightComodule& m, const Prebialgebra& q);
/// Module laws of the bridge and pi_r = pi_l over the convolution dual.
VerificationReport verify_bridge(const RightComodule& m, const RightComodule& n, const Prebialgebra& q);

VerificationReport verify_section3(const Prebialgebra& p, std::uint64_t seed = 1);

}  // namespace wbalg
