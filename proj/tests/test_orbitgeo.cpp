#include <doctest.h>

#include "hamstab/errors.hpp"
#include "hamstab/orbitgeo.hpp"
#include "oracles.hpp"

using namespace hamstab;

namespace {

const BinaryForm& cubic() {
    static const BinaryForm p(CycVector{1, 0, 0, 1});
    return p;
}

const FiniteSubgroup& group() {
    static const FiniteSubgroup f = paper_isotropy();
    return f;
}

std::vector<ChartVector> frame() {
    const auto f = orbit_frame(cubic());
    return {f.begin(), f.end()};
}

CycMatrix rational_diag(Rational a, Rational b, Rational c) {
    return CycMatrix::diagonal({CycNum(a), CycNum(b), CycNum(c)});
}

ChartVector negated(const ChartVector& v) { return {scaled(v.a, -1), scaled(v.b, -1)}; }

std::vector<ChartVector> all_units(std::size_t n) {
    std::vector<ChartVector> out;
    for (std::size_t j = 1; j <= n; ++j) {
        out.push_back(ChartVector::unit(n, j, false));
        out.push_back(ChartVector::unit(n, j, true));
    }
    return out;
}

}  // namespace

TEST_CASE("metric model") {
    const MetricModel m(cubic(), Rational(1, 2));
    CHECK(m.basepoint_lift() == CycVector{1, 0, 0, 1});
    CHECK(m.weights() == std::vector<Rational>{Rational(1, 2), Rational(1, 6), Rational(1, 6), Rational(1, 2)});
    for (const Rational& u : {Rational(1, 2), Rational(1), Rational(2)}) {
        const MetricModel mu(cubic(), u);
        CHECK(mu.hermitian(mu.basepoint_lift(), mu.basepoint_lift()) == CycNum(1));
        const CycNum s = sqrt_rational(Rational(1) / (Rational(2) * u));
        CHECK(mu.basepoint_lift() == CycVector{s, 0, 0, s});
    }
    CHECK_THROWS_AS(MetricModel(cubic(), Rational(0)), ConfigError);
    CHECK_THROWS_AS(MetricModel(BinaryForm(CycVector{0, 1, 0, 1}), Rational(1)), ConfigError);
    CHECK_THROWS_AS(MetricModel(cubic(), Rational(5)), NotExpressible);
}

TEST_CASE("fundamental_field examples (up to the global sign of the action)") {
    const auto f = frame();
    const CycNum r2 = CycNum::sqrt2();
    ChartVector x1 = ChartVector::zero(3), x2 = x1, x3 = x1;
    x1.b[2] = CycNum(-3) / r2;
    x2.a[0] = CycNum(-3) / (CycNum(2) * r2);
    x2.a[1] = CycNum(3) / (CycNum(2) * r2);
    x3.b[0] = CycNum(3) / (CycNum(2) * r2);
    x3.b[1] = CycNum(3) / (CycNum(2) * r2);
    CHECK((f[0] == x1 || f[0] == negated(x1)));
    CHECK((f[1] == x2 || f[1] == negated(x2)));
    CHECK((f[2] == x3 || f[2] == negated(x3)));
    CHECK(fundamental_field(AlgebraElement(CycMatrix(2, 2)), cubic()) == ChartVector::zero(3));
    CHECK_THROWS_AS(fundamental_field(su2::H(), BinaryForm(CycVector{0, 1, 1, 0})), ConfigError);
}

TEST_CASE("fundamental fields agree with finite differences of the group action") {
    const std::vector<oracle::cd> p{1.0, 0.0, 0.0, 1.0};
    const auto basis = su2::orthonormal_basis();
    const auto f = frame();
    for (std::size_t i = 0; i < 3; ++i) {
        const auto numeric = oracle::numeric_fundamental_field(basis[i].matrix(), p);
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(oracle::evaluate(f[i].a[j]).real() == doctest::Approx(numeric[j]).epsilon(1e-6));
            CHECK(oracle::evaluate(f[i].b[j]).real() == doctest::Approx(numeric[3 + j]).epsilon(1e-6));
        }
    }
    // a generic form and algebra element too
    const BinaryForm q(CycVector{2, CycNum::i(), CycNum(Rational(1, 3)), CycNum::sqrt2()});
    const std::vector<oracle::cd> qn{2.0, {0.0, 1.0}, 1.0 / 3.0, std::sqrt(2.0)};
    const AlgebraElement xi = su2::from_coordinates({CycNum(1), CycNum(Rational(-2, 3)), CycNum::sqrt3()});
    const ChartVector v = fundamental_field(xi, q);
    const auto numeric = oracle::numeric_fundamental_field(xi.matrix(), qn);
    for (std::size_t j = 0; j < 3; ++j) {
        CHECK(oracle::evaluate(v.a[j]).real() == doctest::Approx(numeric[j]).epsilon(1e-6));
        CHECK(oracle::evaluate(v.b[j]).real() == doctest::Approx(numeric[3 + j]).epsilon(1e-6));
    }
}

TEST_CASE("horizontal_lift examples") {
    const MetricModel m(cubic(), Rational(1, 2));
    CHECK(is_zero(horizontal_lift(ChartVector::zero(3), m)));
    // d/dy3 -> (1/2)(-d/dy~0 + d/dy~3) at u = 1/2
    const CycNum half_i = CycNum::i() * CycNum(Rational(1, 2));
    CHECK(horizontal_lift(ChartVector::unit(3, 3, true), m) == CycVector{-half_i, 0, 0, half_i});
    // d/dx1 -> (1/2)(2 d/dx~1)
    CHECK(horizontal_lift(ChartVector::unit(3, 1, false), m) == CycVector{0, 1, 0, 0});
    const MetricModel m2(cubic(), Rational(2));
    CHECK(horizontal_lift(ChartVector::unit(3, 1, false), m2) == CycVector{0, CycNum(Rational(1, 2)), 0, 0});
}

TEST_CASE("horizontal lift matches the displayed formula, is horizontal and projects back") {
    for (const Rational& u : {Rational(1, 2), Rational(1), Rational(2)}) {
        const MetricModel m(cubic(), u);
        const CycVector& base = m.basepoint_lift();
        const CycVector ibase = scaled(base, CycNum::i());
        auto vectors = all_units(3);
        for (const auto& v : frame()) vectors.push_back(v);
        for (const auto& v : vectors) {
            const CycVector lift = horizontal_lift(v, m);
            CHECK(m.hermitian(lift, base).real_part().is_zero());
            CHECK(m.hermitian(lift, ibase).real_part().is_zero());
            CHECK(chart_projection(lift, m) == v);

            std::vector<double> a, b;
            for (std::size_t j = 0; j < 3; ++j) {
                a.push_back(oracle::evaluate(v.a[j]).real());
                b.push_back(oracle::evaluate(v.b[j]).real());
            }
            const auto shown = oracle::displayed_lift(a, b, u.to_double());
            for (std::size_t j = 0; j < 4; ++j) CHECK(oracle::near(oracle::evaluate(lift[j]), shown[j]));
        }
    }
}

TEST_CASE("induced_gram") {
    const CycMatrix g = induced_gram(frame(), MetricModel(cubic(), Rational(1, 2)));
    CHECK(g == rational_diag(Rational(9, 8), Rational(3, 8), Rational(3, 8)));
    for (const Rational& u : {Rational(1), Rational(2)}) CHECK(induced_gram(frame(), MetricModel(cubic(), u)) == g);
    // d/dx1 lifts to (0, 1, 0, 0) at u = 1/2, of h-norm^2 u/3 = 1/6
    const CycMatrix single = induced_gram({ChartVector::unit(3, 1, false)}, MetricModel(cubic(), Rational(1, 2)));
    CHECK(single(0, 0) == CycNum(Rational(1, 6)));
}

TEST_CASE("induced Gram is Ad(F)-equivariant") {
    const MetricModel m(cubic(), Rational(1, 2));
    const CycMatrix g = induced_gram(frame(), m);
    const auto basis = su2::orthonormal_basis();
    for (const auto& el : group().elements()) {
        const CycMatrix ad = su2::adjoint_matrix(el);
        std::vector<ChartVector> pushed;
        for (const auto& x : basis)
            pushed.push_back(fundamental_field(
                AlgebraElement(el.matrix() * x.matrix() * el.inverse().matrix()), cubic()));
        const CycMatrix gp = induced_gram(pushed, m);
        CHECK(gp == ad.transpose() * g * ad);
        CHECK(gp == g);
    }
}

TEST_CASE("lagrangian_check") {
    const MetricModel m(cubic(), Rational(1, 2));
    const auto cert = lagrangian_check(frame(), m);
    CHECK(cert.lagrangian);
    CHECK(cert.rank == 3);
    CHECK(cert.kahler_pairings.is_zero());

    const auto f = frame();
    ChartVector twice{scaled(f[1].a, 2), scaled(f[1].b, 2)};
    const auto dup = lagrangian_check({f[0], f[1], twice}, m);
    CHECK_FALSE(dup.lagrangian);
    CHECK(dup.rank == 2);
    CHECK_FALSE(dup.offending_pair.has_value());

    const auto bad = lagrangian_check(
        {ChartVector::unit(3, 1, false), ChartVector::unit(3, 1, true), ChartVector::unit(3, 2, false)}, m);
    CHECK_FALSE(bad.lagrangian);
    REQUIRE(bad.offending_pair.has_value());
    CHECK(*bad.offending_pair == std::make_pair(std::size_t{0}, std::size_t{1}));
}

TEST_CASE("laplace_decomposition examples") {
    SUBCASE("orbit metric") {
        const auto d = laplace_decomposition(rational_diag(Rational(9, 8), Rational(3, 8), Rational(3, 8)), group());
        CHECK(d.q == rational_diag(Rational(8, 9), Rational(8, 3), Rational(8, 3)));
        CHECK(d.c_cas == Rational(8, 3));
        CHECK(d.r == rational_diag(Rational(-16, 9), Rational(0), Rational(0)));
        CHECK(d.q * d.gram == CycMatrix::identity(3));
        CHECK(CycMatrix::identity(3).scaled(CycNum(d.c_cas)) + d.r == d.q);
        for (const auto& g : {su2::generator_a(), su2::generator_b()}) {
            const CycMatrix ad = su2::adjoint_matrix(g);
            CHECK(ad * d.r * ad.transpose() == d.r);
            CHECK(ad.transpose() * d.gram * ad == d.gram);
        }
    }
    SUBCASE("round metric") {
        const auto d = laplace_decomposition(CycMatrix::identity(3), group());
        CHECK(d.q == CycMatrix::identity(3));
        CHECK(d.c_cas == Rational(1));
        CHECK(d.r.is_zero());
    }
    SUBCASE("uniform scaling") {
        const auto d = laplace_decomposition(rational_diag(Rational(2), Rational(2), Rational(2)), group());
        CHECK(d.c_cas == Rational(1, 2));
        CHECK(d.r.is_zero());
    }
    SUBCASE("metric not invariant under F") {
        CHECK_THROWS_AS(laplace_decomposition(rational_diag(Rational(1), Rational(2), Rational(3)), group()),
                        InvariantViolation);
    }
    SUBCASE("non-diagonal Q falls back to trace/3") {
        const CycMatrix g{{2, 1, 0}, {1, 2, 0}, {0, 0, 1}};
        const auto d = laplace_decomposition(g, close_generators({}));
        CHECK(d.q * g == CycMatrix::identity(3));
        CHECK(d.c_cas == d.q.trace().coeff(0) / Rational(3));
        CHECK(CycMatrix::identity(3).scaled(CycNum(d.c_cas)) + d.r == d.q);
    }
}
