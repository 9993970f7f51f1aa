#pragma once

#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "ample/bisection.hpp"
#include "ample/cohomology.hpp"
#include "ample/convolution.hpp"
#include "ample/norms.hpp"

namespace ample {

// Structure-preserving permutation of arrows: theta[x] is the image of x.
// Same representation as UnitPermutation, so compose() and inverse() apply.
using GroupoidAut = std::vector<ArrowId>;
static_assert(std::is_same_v<GroupoidAut, UnitPermutation>);

bool is_automorphism(const FiniteGroupoid& g, const GroupoidAut& theta);
GroupoidAut identity_aut(const FiniteGroupoid& g);
UnitPermutation on_units(const FiniteGroupoid& g, const GroupoidAut& theta);
Bisection image(const FiniteGroupoid& g, const GroupoidAut& theta, const Bisection& b);
std::string format_aut(const GroupoidAut& theta);

inline constexpr std::size_t kDefaultAutLimit = 100'000;

// Every automorphism, lexicographic. Throws SizeLimitExceeded past `limit`.
std::vector<GroupoidAut> aut_group(const FiniteGroupoid& g, std::size_t limit = kDefaultAutLimit);

// ad(B)(x) = B x B^-1 for a full bisection B.
GroupoidAut ad(const FiniteGroupoid& g, const Bisection& b);

// Linear map on C_c(G) in the arrow basis: column z holds the image of delta_z.
template <typename Scalar>
using LinearMap = Matrix<Scalar>;
using ExactMap = LinearMap<Cyclotomic>;

ExactMap identity_map(const FiniteGroupoid& g);
// (a o b), skipping zero entries.
ExactMap compose(const ExactMap& a, const ExactMap& b);
ExactElement apply(const ExactMap& alpha, const ExactElement& a);

// Gamma(xi)(f)(x) = xi(x) f(x). Throws NotACocycle.
ExactMap gamma(const FiniteGroupoid& g, const Cocycle& xi);
// alpha_theta(f) = f o theta^-1.
ExactMap lift(const FiniteGroupoid& g, const GroupoidAut& theta);
// a -> u^-1 * a * u. Throws NotFullBisection.
ExactMap inner(const GroupoidPtr& g, const LampertiElement& u);

// alpha(delta_w) = delta_{Upsilon(w)} on units. Throws DiagonalNotPreserved.
UnitPermutation upsilon(const FiniteGroupoid& g, const ExactMap& alpha);
// sigma(alpha(1_B)). Throws NotSpatial.
Bisection phi(const GroupoidPtr& g, const ExactMap& alpha, const Bisection& b);
// Omega_alpha(x) = the arrow of Phi_alpha(B) with range Upsilon_alpha(r(x)),
// compared across {x} and a maximal bisection containing x.
// Throws NotWellDefined, or NotAutomorphism when the images do not form one.
GroupoidAut omega(const GroupoidPtr& g, const ExactMap& alpha);

struct AutDecomposition {
  Cocycle xi;
  GroupoidAut theta;
};

// alpha = gamma(xi) o lift(theta). Throws NotAutomorphism with the first
// basis element on which the reconstruction differs.
AutDecomposition decompose_aut(const GroupoidPtr& g, const ExactMap& alpha);

struct MapCheck {
  bool ok = true;
  std::string failure;
};

// Exact structural test: unital, multiplicative on the arrow basis,
// preserving the diagonal.
MapCheck validate_linear_map(const GroupoidPtr& g, const ExactMap& alpha);

// When alpha = inner(f 1_B), some such (f, B).
std::optional<LampertiElement> inner_witness(const GroupoidPtr& g, const CocycleGroup& z,
                                             const std::vector<Bisection>& full,
                                             const ExactMap& alpha);

}  // namespace ample
