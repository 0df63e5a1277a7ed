#include <doctest.h>

#include "hamstab/errors.hpp"
#include "hamstab/isotropy.hpp"
#include "oracles.hpp"

using namespace hamstab;

namespace {

const FiniteSubgroup& group() {
    static const FiniteSubgroup f = paper_isotropy();
    return f;
}

}  // namespace

TEST_CASE("group and algebra elements validate their invariants") {
    CHECK_NOTHROW(su2::generator_a());
    CHECK_NOTHROW(su2::generator_b());
    CHECK_THROWS_AS(GroupElement(CycMatrix{{2, 0}, {0, Rational(1, 2)}}), ConfigError);  // det 1, not unitary
    CHECK_THROWS_AS(GroupElement(CycMatrix{{0, 1}, {1, 0}}), ConfigError);                // det -1
    CHECK_THROWS_AS(AlgebraElement(CycMatrix{{1, 0}, {0, -1}}), ConfigError);             // Hermitian
    CHECK_THROWS_AS(AlgebraElement(CycMatrix{{CycNum::i(), 0}, {0, CycNum::i()}}), ConfigError);  // trace
}

TEST_CASE("killing_form") {
    CHECK(su2::killing_form(su2::H(), su2::H()) == CycNum(-8));
    CHECK(su2::killing_form(su2::H(), su2::X()) == CycNum(0));
    const auto basis = su2::orthonormal_basis();
    CHECK(-su2::killing_form(basis[0], basis[0]) == CycNum(1));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(su2::killing_form(basis[i], basis[j]) == su2::killing_form(basis[j], basis[i]));
            CHECK(-su2::killing_form(basis[i], basis[j]) == CycNum(i == j ? 1 : 0));
        }
}

TEST_CASE("2x2 brackets: [H,X] = 2Y, [X,Y] = 2H, [Y,H] = 2X") {
    const CycMatrix h = su2::H().matrix(), x = su2::X().matrix(), y = su2::Y().matrix();
    CHECK(commutator(h, x) == y.scaled(CycNum(2)));
    CHECK(commutator(x, y) == h.scaled(CycNum(2)));
    CHECK(commutator(y, h) == x.scaled(CycNum(2)));
}

TEST_CASE("sym_power examples") {
    for (unsigned k : {0u, 3u, 7u}) CHECK(su2::sym_power(GroupElement::identity(), k) == CycMatrix::identity(k + 1));
    const BinaryForm p(CycVector{1, 0, 0, 1});
    CHECK(apply(su2::sym_power(su2::generator_a(), 3), p) == scaled(p.coeffs(), CycNum(-1)));
    // b swaps z1^(k-j) z2^j with z1^j z2^(k-j) up to (-i)^k
    for (unsigned k = 0; k <= 6; ++k) {
        const CycMatrix rb = su2::sym_power(su2::generator_b(), k);
        for (unsigned j = 0; j <= k; ++j) {
            const CycVector img = apply(rb, BinaryForm::monomial(k, j));
            CycVector expect(k + 1);
            expect[k - j] = (-CycNum::i()).pow(k);
            CHECK(img == expect);
        }
    }
}

TEST_CASE("sym_power is a unitary homomorphism on F, k <= 12") {
    const auto& els = group().elements();
    for (unsigned k = 0; k <= 12; ++k) {
        std::vector<CycMatrix> rho;
        for (const auto& g : els) rho.push_back(su2::sym_power(g, k));
        const CycMatrix w = su2::invariant_form(k);
        for (std::size_t i = 0; i < els.size(); ++i) {
            CHECK(rho[i].conj_transpose() * w * rho[i] == w);
            for (std::size_t j = 0; j < els.size(); ++j)
                CHECK(rho[group().index_of(els[i] * els[j])] == rho[i] * rho[j]);
        }
    }
}

TEST_CASE("character") {
    CHECK(su2::character(GroupElement::identity(), 8) == CycNum(9));
    CHECK(su2::character(su2::generator_b(), 8) == CycNum(1));
    const GroupElement minus_one(CycMatrix::identity(2).scaled(CycNum(-1)));
    for (unsigned k = 0; k <= 9; ++k)
        CHECK(su2::character(minus_one, k) == CycNum((k % 2 ? -1 : 1) * static_cast<long>(k + 1)));
    // trace of sym_power agrees with the Clebsch-Gordan recurrence on all of F
    for (const auto& g : group().elements())
        for (unsigned k = 0; k <= 16; ++k) CHECK(su2::character(g, k) == oracle::character_recurrence(g.matrix(), k));
}

TEST_CASE("algebra_action") {
    for (const auto& xi : su2::orthonormal_basis()) CHECK(su2::algebra_action(xi, 0).is_zero());

    SUBCASE("d rho(H) is diagonal with entries in iZ squaring to -(2l - k)^2") {
        for (unsigned k = 0; k <= 12; ++k) {
            const CycMatrix dh = su2::algebra_action(su2::H(), k);
            CHECK(dh.is_diagonal());
            const CycMatrix d2 = dh * dh;
            for (unsigned j = 0; j <= k; ++j) {
                CHECK(dh(j, j).real_part().is_zero());
                const long l = static_cast<long>(k - j);
                CHECK(d2(j, j) == CycNum(-(2 * l - static_cast<long>(k)) * (2 * l - static_cast<long>(k))));
            }
        }
    }
    SUBCASE("bracket compatibility, k <= 12") {
        const AlgebraElement h = su2::H(), x = su2::X(), y = su2::Y();
        for (unsigned k = 0; k <= 12; ++k) {
            const CycMatrix dh = su2::algebra_action(h, k), dx = su2::algebra_action(x, k),
                            dy = su2::algebra_action(y, k);
            CHECK(commutator(dh, dx) == dy.scaled(CycNum(2)));
            CHECK(commutator(dx, dy) == dh.scaled(CycNum(2)));
            CHECK(commutator(dy, dh) == dx.scaled(CycNum(2)));
        }
    }
    SUBCASE("d rho is anti-Hermitian for the invariant form") {
        for (unsigned k = 0; k <= 8; ++k) {
            const CycMatrix w = su2::invariant_form(k);
            for (const auto& xi : su2::orthonormal_basis()) {
                const CycMatrix d = su2::algebra_action(xi, k);
                CHECK(d.conj_transpose() * w + w * d == CycMatrix(k + 1, k + 1));
            }
        }
    }
    SUBCASE("derivative of sym_power along a one-parameter subgroup") {
        // exp(t H) at t = pi/3 is a; d rho(H) must generate rho(a) on monomials:
        // rho(a) m_j = exp((pi/3) * d rho(H)_jj) m_j.
        for (unsigned k = 0; k <= 6; ++k) {
            const CycMatrix dh = su2::algebra_action(su2::H(), k), ra = su2::sym_power(su2::generator_a(), k);
            for (unsigned j = 0; j <= k; ++j) {
                const oracle::cd expect = std::exp(oracle::evaluate(dh(j, j)) * (std::numbers::pi / 3));
                CHECK(oracle::near(oracle::evaluate(ra(j, j)), expect));
            }
        }
    }
}

TEST_CASE("Casimir: sum d rho(X_i)^2 = -(k/4 + k^2/8) I, k <= 14") {
    const auto basis = su2::orthonormal_basis();
    for (unsigned k = 0; k <= 14; ++k) {
        CycMatrix sum(k + 1, k + 1);
        for (const auto& x : basis) {
            const CycMatrix d = su2::algebra_action(x, k);
            sum += d * d;
        }
        CHECK(sum == CycMatrix::identity(k + 1).scaled(CycNum(-su2::casimir_closed_form(k))));
    }
    CHECK(su2::casimir_closed_form(4) == Rational(3));
}

TEST_CASE("casimir_eigenvalue from weights and the Killing form") {
    CHECK(su2::positive_root_on_H() == CycNum(2) * CycNum::i());
    CHECK(su2::highest_weight_on_H(5) == CycNum(5) * CycNum::i());
    CHECK(su2::casimir_eigenvalue(0) == Rational(0));
    CHECK(su2::casimir_eigenvalue(4) == Rational(3));
    CHECK(su2::casimir_eigenvalue(6) == Rational(6));
    for (unsigned k = 0; k <= 20; ++k) CHECK(su2::casimir_eigenvalue(k) == su2::casimir_closed_form(k));
}

TEST_CASE("adjoint action") {
    const CycMatrix ad_a = su2::adjoint_matrix(su2::generator_a());
    const CycMatrix ad_b = su2::adjoint_matrix(su2::generator_b());
    CHECK(ad_a(0, 0) == CycNum(1));
    CHECK(ad_b(0, 0) == CycNum(-1));
    for (const auto& g : group().elements()) {
        const CycMatrix ad = su2::adjoint_matrix(g);
        CHECK(ad.transpose() * ad == CycMatrix::identity(3));
        CHECK(ad.determinant() == CycNum(1));
    }
    const CycMatrix a2 = su2::adjoint_matrix(su2::generator_b() * su2::generator_b());
    CHECK(a2 == CycMatrix::identity(3));
}
