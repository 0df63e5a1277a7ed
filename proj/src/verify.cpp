#include "hamstab/verify.hpp"

#include <functional>
#include <sstream>

#include "hamstab/errors.hpp"

namespace hamstab {

std::vector<BinaryForm> family_generators(unsigned k) {
    std::vector<BinaryForm> out;
    if (k % 2) return out;
    static constexpr unsigned kOffset[6] = {0, 1, 2, 0, 1, 2};  // k mod 12 = 0, 2, ..., 10
    const unsigned offset = kOffset[(k % 12) / 2];
    if (offset > k) return out;
    const CycNum sign(k % 4 == 0 ? 1 : -1);
    for (long l = static_cast<long>(k - offset); 2 * l >= static_cast<long>(k); l -= 3) {
        // z1^l z2^(k-l) sits at index k - l.
        CycVector c(k + 1);
        c[k - static_cast<unsigned>(l)] += CycNum(1);
        c[static_cast<unsigned>(l)] += sign;
        BinaryForm f(std::move(c));
        if (!f.is_zero()) out.push_back(std::move(f));
    }
    return out;
}

std::optional<Rational> closed_form_lambda(unsigned k) {
    const Rational kk(static_cast<long>(k));
    switch (k % 6) {
        case 0:
            if (k == 0) return std::nullopt;
            return Rational(2, 3) * kk + kk * kk / Rational(9);
        case 2:
            if (k < 8) return std::nullopt;
            return (kk * kk + Rational(14) * kk - Rational(8)) / Rational(9);
        case 4:
            return (kk * kk + Rational(22) * kk - Rational(32)) / Rational(9);
        default:
            return std::nullopt;
    }
}

bool VerifyResult::all_passed() const {
    if (refused) return false;
    for (const auto& l : lines)
        if (!l.passed) return false;
    return true;
}

namespace {

struct Harness {
    std::vector<CheckLine> lines;

    void run(std::string name, const std::function<std::string()>& body) {
        CheckLine line{std::move(name), false, {}};
        try {
            line.detail = body();
            line.passed = line.detail.empty();
            if (line.passed) line.detail = "ok";
        } catch (const std::exception& e) {
            line.detail = std::string("exception: ") + e.what();
        }
        lines.push_back(std::move(line));
    }
};

CycMatrix rational_diag(std::initializer_list<Rational> d) {
    CycVector v;
    for (const auto& x : d) v.emplace_back(x);
    return CycMatrix::diagonal(v);
}

std::string mismatch(const std::string& what, const CycMatrix& got) {
    return what + " mismatch, got " + matrix_literal(got);
}

}  // namespace

VerifyResult verify_paper(const VerifyOptions& options) {
    VerifyResult result;
    const FiniteSubgroup group = paper_isotropy();
    const BinaryForm p = RunConfig::default_form();
    const GroupElement a = su2::generator_a(), b = su2::generator_b();

    const auto frame_arr = orbit_frame(p);
    const std::vector<ChartVector> frame(frame_arr.begin(), frame_arr.end());
    const CycMatrix computed_gram = induced_gram(frame, MetricModel(p, Rational(1, 2)));
    const CycMatrix gram = options.gram_override.value_or(computed_gram);

    std::optional<LaplaceDecomposition> dec;
    std::string dec_error;
    try {
        dec = laplace_decomposition(gram, group);
    } catch (const std::exception& e) {
        dec_error = e.what();
    }
    auto need_dec = [&]() -> const LaplaceDecomposition& {
        if (!dec) throw InvariantViolation("no Laplace decomposition: " + dec_error);
        return *dec;
    };

    if (options.max_k && dec) {
        SearchOptions so;
        so.max_k = options.max_k;
        so.threads = options.threads;
        const SearchResult probe = lambda1_search(*dec, group, so);
        if (!probe.certified) {
            result.refused = true;
            result.refusal = "horizon k <= " + std::to_string(*options.max_k) +
                             " is below the certified stop index" +
                             (probe.stop_index ? " " + std::to_string(*probe.stop_index) : std::string());
            return result;
        }
    }

    Harness h;
    h.run("isotropy group: |F| = 12, a^6 = I, b^2 = -I, b a b^-1 = a^-1", [&]() -> std::string {
        if (group.order() != 12) return "order " + std::to_string(group.order());
        GroupElement a6 = GroupElement::identity();
        for (int n = 0; n < 6; ++n) a6 = a6 * a;
        if (!(a6 == GroupElement::identity())) return "a^6 != I";
        if (!((b * b).matrix() == CycMatrix::identity(2).scaled(CycNum(-1)))) return "b^2 != -I";
        if (!(b * a * b.inverse() == a.inverse())) return "b a b^-1 != a^-1";
        return "";
    });
    h.run("stabilizer of [z1^3 + z2^3]: rho(a) p = -p, scalars are 4th/6th roots of unity", [&]() -> std::string {
        const auto scalars = projective_stabilizer_check(group, p);
        if (scalars[group.index_of(a)] != CycNum(-1)) return "scalar of a is " + scalars[group.index_of(a)].to_string();
        for (const auto& s : scalars)
            if (s.pow(4) != CycNum(1) && s.pow(6) != CycNum(1)) return "scalar " + s.to_string();
        return "";
    });
    h.run("isotropy splitting: Ad(a)H = H, Ad(b)H = -H, V1 + V2 invariant", [&]() -> std::string {
        const auto split = isotropy_splitting(group);
        (void)split;
        const CycMatrix hm = su2::H().matrix();
        if (a.matrix() * hm * a.inverse().matrix() != hm) return "Ad(a)H != H";
        if (b.matrix() * hm * b.inverse().matrix() != hm.scaled(CycNum(-1))) return "Ad(b)H != -H";
        return "";
    });
    h.run("Killing form: B(H,H) = -8, X_i orthonormal for -B", [&]() -> std::string {
        if (su2::killing_form(su2::H(), su2::H()) != CycNum(-8)) return "B(H,H) != -8";
        const auto basis = su2::orthonormal_basis();
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                if (-su2::killing_form(basis[i], basis[j]) != CycNum(i == j ? 1 : 0)) return "-B not identity";
        return "";
    });
    h.run("fundamental fields at p match the displayed X1, X2, X3 up to sign", [&]() -> std::string {
        const CycNum r2 = CycNum::sqrt2();
        const CycNum big = CycNum(-3) / r2, small = CycNum(3) / (CycNum(2) * r2);
        ChartVector x1 = ChartVector::zero(3), x2 = x1, x3 = x1;
        x1.b[2] = big;
        x2.a[0] = -small;
        x2.a[1] = small;
        x3.b[0] = small;
        x3.b[1] = small;
        const std::array<ChartVector, 3> expected{x1, x2, x3};
        for (std::size_t i = 0; i < 3; ++i) {
            ChartVector neg{scaled(expected[i].a, -1), scaled(expected[i].b, -1)};
            if (!(frame[i] == expected[i]) && !(frame[i] == neg)) return "X" + std::to_string(i + 1) + " differs";
        }
        return "";
    });
    h.run("Lagrangian: Im h vanishes on the frame, rank 3", [&]() -> std::string {
        const auto cert = lagrangian_check(frame, MetricModel(p, Rational(1, 2)));
        return cert.lagrangian ? "" : cert.reason;
    });
    h.run("induced Gram = diag(9/8, 3/8, 3/8), same for u = 1/2, 1, 2", [&]() -> std::string {
        if (gram != rational_diag({Rational(9, 8), Rational(3, 8), Rational(3, 8)})) return mismatch("Gram", gram);
        for (const Rational& u : {Rational(1), Rational(2)})
            if (induced_gram(frame, MetricModel(p, u)) != computed_gram) return "Gram depends on u = " + u.to_string();
        return "";
    });
    h.run("g-orthonormal frame: scalings 2sqrt2/3, 2sqrt2/sqrt3, 2sqrt2/sqrt3", [&]() -> std::string {
        const auto& d = need_dec();
        const CycNum r2 = CycNum::sqrt2(), r3 = CycNum::sqrt3();
        const std::array<CycNum, 3> expect{CycNum(2) * r2 / CycNum(3), CycNum(2) * r2 / r3, CycNum(2) * r2 / r3};
        for (std::size_t i = 0; i < 3; ++i) {
            CycVector e(3);
            e[i] = expect[i];
            if (d.orthonormal_frame[i] != e) return "Y" + std::to_string(i + 1) + " scaling differs";
        }
        return "";
    });
    h.run("Q = diag(8/9, 8/3, 8/3) = (8/3) I + diag(-16/9, 0, 0)", [&]() -> std::string {
        const auto& d = need_dec();
        if (d.q != rational_diag({Rational(8, 9), Rational(8, 3), Rational(8, 3)})) return mismatch("Q", d.q);
        if (d.c_cas != Rational(8, 3)) return "c_cas = " + d.c_cas.to_string();
        if (d.r != rational_diag({Rational(-16, 9), Rational(0), Rational(0)})) return mismatch("R", d.r);
        return "";
    });
    h.run("Casimir: sum d rho(X_i)^2 = -(k/4 + k^2/8) I and (mu + alpha+, mu) = k/4 + k^2/8, k <= 14",
          [&]() -> std::string {
              const auto basis = su2::orthonormal_basis();
              for (unsigned k = 0; k <= 14; ++k) {
                  CycMatrix sum(k + 1, k + 1);
                  for (const auto& x : basis) {
                      const CycMatrix d = su2::algebra_action(x, k);
                      sum += d * d;
                  }
                  const Rational cas = su2::casimir_closed_form(k);
                  if (sum != CycMatrix::identity(k + 1).scaled(CycNum(-cas))) return "k = " + std::to_string(k);
                  if (su2::casimir_eigenvalue(k) != cas) return "Freudenthal value at k = " + std::to_string(k);
              }
              return "";
          });
    h.run("d rho(H)^2 z1^l z2^(k-l) = -(2l - k)^2 z1^l z2^(k-l), k <= 14", [&]() -> std::string {
        for (unsigned k = 0; k <= 14; ++k) {
            const CycMatrix dh = su2::algebra_action(su2::H(), k);
            const CycMatrix d2 = dh * dh;
            CycVector expect(k + 1);
            for (unsigned j = 0; j <= k; ++j) {
                const long l = static_cast<long>(k - j);  // exponent of z1
                const long m = 2 * l - static_cast<long>(k);
                expect[j] = CycNum(-m * m);
            }
            if (d2 != CycMatrix::diagonal(expect)) return "k = " + std::to_string(k);
        }
        return "";
    });
    h.run("fixed spaces, k <= 18: odd k trivial, even k spanned by the k mod 12 families", [&]() -> std::string {
        for (unsigned k = 0; k <= 18; ++k) {
            const FixedSubspace fs = fixed_subspace(group, k);
            std::vector<CycVector> got;
            for (const auto& f : fs.basis) got.push_back(f.coeffs());
            std::vector<CycVector> expect;
            if (k == 0) expect.push_back(CycVector{1});
            for (const auto& f : family_generators(k)) expect.push_back(f.coeffs());
            if (got.size() != rank(from_columns(expect, k + 1)) || !same_span(got, expect, k + 1))
                return "span mismatch at k = " + std::to_string(k);
        }
        const FixedSubspace six = fixed_subspace(group, 6);
        CycVector z16_minus_z26(7);
        z16_minus_z26[0] = CycNum(1);
        z16_minus_z26[6] = CycNum(-1);
        if (six.dim() != 1 || !same_span({six.basis[0].coeffs()}, {z16_minus_z26}, 7)) return "k = 6 basis";
        return "";
    });
    h.run("closed-form minimal eigenvalue per k, k <= 30", [&]() -> std::string {
        const auto& d = need_dec();
        for (unsigned k = 1; k <= 30; ++k) {
            const auto lines = spectrum_for_k(k, d, group);
            const auto expect = closed_form_lambda(k);
            if (lines.empty() != !expect) return "fixed-space presence differs at k = " + std::to_string(k);
            if (expect && lines.front().laplace_eigenvalue != *expect)
                return "k = " + std::to_string(k) + ": " + lines.front().laplace_eigenvalue.to_string() +
                       " vs " + expect->to_string();
        }
        return "";
    });
    h.run("lambda1 = kappa = 8, attained at k = 4 and 6, HamiltonianStable", [&]() -> std::string {
        const auto& d = need_dec();
        SearchOptions so;
        so.max_k = options.max_k;
        so.threads = options.threads;
        const SearchResult s = lambda1_search(d, group, so);
        const StabilityReport rep = stability_verdict(s.lambda1, Rational(4), 3, s.certified);
        if (!s.lambda1 || *s.lambda1 != Rational(8)) return "lambda1 = " + (s.lambda1 ? s.lambda1->to_string() : "none");
        if (rep.kappa != Rational(8)) return "kappa = " + rep.kappa.to_string();
        if (s.attaining_k != std::vector<unsigned>{4, 6}) return "attained at a different set of k";
        if (rep.verdict != Verdict::HamiltonianStable || rep.ono_contradiction) return "verdict " + to_string(rep.verdict);
        return "";
    });
    result.lines = std::move(h.lines);
    return result;
}

std::string verify_text(const VerifyResult& r) {
    std::ostringstream os;
    if (r.refused) {
        os << "REFUSED  " << r.refusal << "\n";
        return os.str();
    }
    for (const auto& l : r.lines) {
        os << (l.passed ? "PASS  " : "FAIL  ") << l.name;
        if (!l.passed) os << "  [" << l.detail << "]";
        os << "\n";
    }
    std::size_t passed = 0;
    for (const auto& l : r.lines) passed += l.passed;
    os << passed << "/" << r.lines.size() << " checks passed\n";
    return os.str();
}

ordered_json verify_json(const VerifyResult& r) {
    ordered_json j;
    j["refused"] = r.refused;
    if (r.refused) j["refusal"] = r.refusal;
    ordered_json lines = ordered_json::array();
    for (const auto& l : r.lines) {
        ordered_json x;
        x["check"] = l.name;
        x["passed"] = l.passed;
        x["detail"] = l.detail;
        lines.push_back(std::move(x));
    }
    j["lines"] = std::move(lines);
    j["all_passed"] = r.all_passed();
    return j;
}

}  // namespace hamstab
