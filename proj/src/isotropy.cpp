#include "hamstab/isotropy.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "hamstab/errors.hpp"

namespace hamstab {

bool FiniteSubgroup::contains(const GroupElement& g) const {
    return std::find(elements_.begin(), elements_.end(), g) != elements_.end();
}

std::size_t FiniteSubgroup::index_of(const GroupElement& g) const {
    auto it = std::find(elements_.begin(), elements_.end(), g);
    if (it == elements_.end()) throw std::out_of_range("element not in subgroup");
    return static_cast<std::size_t>(it - elements_.begin());
}

FiniteSubgroup close_generators(const std::vector<GroupElement>& gens, std::size_t cap) {
    FiniteSubgroup f;
    f.generators_ = gens;
    std::vector<GroupElement> seeds;
    for (const auto& g : gens) {
        seeds.push_back(g);
        seeds.push_back(g.inverse());
    }
    f.elements_.push_back(GroupElement::identity());
    std::deque<std::size_t> frontier{0};
    while (!frontier.empty()) {
        const GroupElement current = f.elements_[frontier.front()];
        frontier.pop_front();
        for (const auto& s : seeds) {
            GroupElement next = current * s;
            if (f.contains(next)) continue;
            if (f.elements_.size() >= cap)
                throw ConfigError("generators do not close to a group of order <= " + std::to_string(cap));
            f.elements_.push_back(std::move(next));
            frontier.push_back(f.elements_.size() - 1);
        }
    }
    return f;
}

FiniteSubgroup paper_isotropy() { return close_generators({su2::generator_a(), su2::generator_b()}); }

std::vector<CycNum> projective_stabilizer_check(const FiniteSubgroup& f, const BinaryForm& p) {
    if (p.is_zero()) throw std::invalid_argument("projective_stabilizer_check: p = 0");
    std::size_t lead = 0;
    while (p[lead].is_zero()) ++lead;
    std::vector<CycNum> scalars;
    scalars.reserve(f.order());
    for (std::size_t n = 0; n < f.order(); ++n) {
        const GroupElement& g = f.elements()[n];
        const CycVector image = apply(su2::sym_power(g, p.degree()), p);
        const CycNum lambda = image[lead] / p[lead];
        if (image != scaled(p.coeffs(), lambda))
            throw InvariantViolation("not a stabilizer: element #" + std::to_string(n) + " [" +
                                     g.matrix()(0, 0).to_string() + ", " + g.matrix()(0, 1).to_string() +
                                     "; " + g.matrix()(1, 0).to_string() + ", " +
                                     g.matrix()(1, 1).to_string() + "] moves [p]");
        scalars.push_back(lambda);
    }
    return scalars;
}

IsotropySplitting isotropy_splitting(const FiniteSubgroup& f) {
    IsotropySplitting out;
    bool have_flip = false, have_rotation = false;
    for (std::size_t n = 0; n < f.order(); ++n) {
        const CycMatrix ad = su2::adjoint_matrix(f.elements()[n]);
        for (std::size_t j : {1u, 2u})
            if (!ad(0, j).is_zero() || !ad(j, 0).is_zero())
                throw InvariantViolation("isotropy splitting: Ad(element #" + std::to_string(n) +
                                         ") mixes V1 and V2");
        const CycNum on_v1 = ad(0, 0);
        if (on_v1 * on_v1 != CycNum(1))
            throw InvariantViolation("isotropy splitting: Ad(g^2) != Id on V1 for element #" +
                                     std::to_string(n));
        out.v1_action.push_back(on_v1);
        if (!have_flip && on_v1 == CycNum(-1)) {
            have_flip = true;
            out.sign_flip_witness = n;
        }
        // An orthogonal 2x2 block has a real eigenline iff it is symmetric.
        if (!have_rotation && ad(1, 2) != ad(2, 1)) {
            have_rotation = true;
            out.rotation_witness = n;
        }
    }
    if (!have_flip)
        throw InvariantViolation("isotropy splitting: no element acts as -1 on V1 = span(X1)");
    if (!have_rotation)
        throw InvariantViolation("isotropy splitting: V2 = span(X2, X3) is reducible under Ad(F)");
    return out;
}

FixedSubspace fixed_subspace(const FiniteSubgroup& f, unsigned k) {
    const std::size_t n = k + 1;
    CycMatrix system(0, n);
    for (const auto& g : f.generators())
        system = CycMatrix::stack(system, su2::sym_power(g, k) - CycMatrix::identity(n));
    FixedSubspace out;
    out.k = k;
    for (auto& v : nullspace(system)) out.basis.emplace_back(std::move(v));
    return out;
}

std::size_t fixed_dim_oracle(const FiniteSubgroup& f, unsigned k) {
    CycNum sum;
    for (const auto& g : f.elements()) sum += su2::character(g, k);
    const CycNum avg = sum.scaled(Rational(1) / Rational(static_cast<long>(f.order())));
    const auto q = avg.as_rational();
    if (!q || !q->is_integer() || q->sign() < 0)
        throw InvariantViolation("character average for k = " + std::to_string(k) +
                                 " is not a non-negative integer: " + avg.to_string());
    return static_cast<std::size_t>(*q->to_long());
}

}  // namespace hamstab
