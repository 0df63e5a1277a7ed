#pragma once

#include <cstddef>
#include <vector>

#include "hamstab/su2rep.hpp"

namespace hamstab {

/// A finite subgroup of SU(2), enumerated explicitly and closed under products.
class FiniteSubgroup {
public:
    const std::vector<GroupElement>& elements() const { return elements_; }
    const std::vector<GroupElement>& generators() const { return generators_; }
    std::size_t order() const { return elements_.size(); }
    bool contains(const GroupElement& g) const;
    /// Position of g in elements(); throws std::out_of_range if absent.
    std::size_t index_of(const GroupElement& g) const;

private:
    friend FiniteSubgroup close_generators(const std::vector<GroupElement>&, std::size_t);
    std::vector<GroupElement> elements_;
    std::vector<GroupElement> generators_;
};

inline constexpr std::size_t kDefaultClosureCap = 256;

/// Smallest product-closed set containing gens, their inverses and the
/// identity. Elements are listed in breadth-first discovery order starting
/// from the identity. Throws ConfigError if more than `cap` elements appear.
FiniteSubgroup close_generators(const std::vector<GroupElement>& gens,
                                std::size_t cap = kDefaultClosureCap);

/// The order-12 group generated by a and b.
FiniteSubgroup paper_isotropy();

/// For each element g (in F's order) the scalar with rho(g) p = scalar * p.
/// Throws InvariantViolation naming the first element that moves [p].
std::vector<CycNum> projective_stabilizer_check(const FiniteSubgroup& f, const BinaryForm& p);

/// Certificate for the splitting su(2) = V1 + V2, V1 = span(X1),
/// V2 = span(X2, X3), under Ad(F).
struct IsotropySplitting {
    std::vector<std::size_t> v1_basis{0};
    std::vector<std::size_t> v2_basis{1, 2};
    /// Ad(g) restricted to V1 (+1 or -1), per element of F.
    std::vector<CycNum> v1_action;
    /// Index in F of an element acting by -1 on V1.
    std::size_t sign_flip_witness = 0;
    /// Index in F of an element acting on V2 without a real eigenline.
    std::size_t rotation_witness = 0;
};

/// Throws InvariantViolation if some Ad(g) mixes V1 and V2, if Ad(g^2) is not
/// the identity on V1, if F acts trivially on V1, or if V2 is reducible.
IsotropySplitting isotropy_splitting(const FiniteSubgroup& f);

struct FixedSubspace {
    unsigned k = 0;
    std::vector<BinaryForm> basis;
    std::size_t dim() const { return basis.size(); }
};

/// {v : rho_k(g) v = v for every generator g}, as an exact nullspace.
FixedSubspace fixed_subspace(const FiniteSubgroup& f, unsigned k);

/// (1/|F|) sum_g chi_k(g). Throws InvariantViolation unless it is a
/// non-negative integer.
std::size_t fixed_dim_oracle(const FiniteSubgroup& f, unsigned k);

}  // namespace hamstab
