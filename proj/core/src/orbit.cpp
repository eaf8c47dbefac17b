#include "syzlab/orbit.hpp"

namespace syzlab {

OrbitStats orbit_stats(const Module& m) {
    OrbitStats s;
    s.dim = m.dim();
    s.end_dim = hom_basis(m, m).size();
    s.orbit_dim = s.dim * s.dim - s.end_dim;
    if (s.dim == 1) {
        s.certificate = OrbitCertificate::OpenSimpleBasic;
    } else if (ext_dim(m, m, 1) == 0) {
        s.certificate = OrbitCertificate::OpenExtVanishing;
    } else {
        s.certificate = OrbitCertificate::Unknown;
    }
    return s;
}

DegenerationVerdict degeneration_obstruction(
    const Module& m, const Module& n,
    const std::vector<std::pair<std::string, Module>>& tests) {
    if (m.algebra() != n.algebra()) throw AlgebraMismatch();
    if (m.dim() != n.dim())
        throw DimensionMismatch("degeneration candidates must share a dimension");

    std::vector<std::pair<std::string, Module>> suite = tests;
    if (suite.empty()) {
        const AlgebraPtr& a = m.algebra();
        for (std::size_t i = 0; i < a->idempotents().size(); ++i)
            suite.emplace_back("simple_" + std::to_string(i), simple_module(a, i));
        for (std::size_t i = 0; i < a->idempotents().size(); ++i)
            suite.emplace_back("projective_" + std::to_string(i), indecomposable_projective(a, i));
        suite.emplace_back("source", m);
        suite.emplace_back("target", n);
    }

    DegenerationVerdict verdict;
    for (const auto& [label, x] : suite) {
        const std::size_t to_m = hom_basis(x, m).size();
        const std::size_t to_n = hom_basis(x, n).size();
        if (to_n < to_m) {
            verdict.obstruction = DegenerationObstruction{label, to_m, to_n};
            return verdict;
        }
        ++verdict.passed_tests;
    }
    return verdict;
}

std::optional<Automorphism> twist_recognize(const Bimodule& m, std::uint64_t seed) {
    if (m.left != m.right) throw AlgebraMismatch();
    const AlgebraPtr& a = m.left;
    if (m.carrier.dim() != a->dim())
        throw DimensionMismatch("twist recognition needs a carrier of dimension dim A");
    const Field& field = a->field();
    const std::size_t n = a->dim();

    auto phi = is_isomorphic(regular_module(a), m.right_restriction(), seed);
    if (!phi) return std::nullopt;
    auto psi = is_isomorphic(regular_module(a->opposite()), m.left_restriction(), seed);
    if (!psi) return std::nullopt;

    // Transport the left action through phi: with m0 = phi(1), the element
    // tau(a) defined by a . m0 = m0 . tau(a) is an anti-twist; the bimodule is
    // the twisted bimodule of its inverse.
    const Matrix& f = phi->matrix;
    auto finv = inverse(f);
    if (!finv) return std::nullopt;
    Vec m0 = f.apply_row(a->unit());
    Matrix tau(field, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        // Left action of e_i on the carrier.
        Vec w(n * n, Rat(0));
        const Vec& u = a->unit();
        for (std::size_t j = 0; j < n; ++j)
            if (sgn(u[j]) != 0) w[pair_index(i, j, n)] = u[j];
        Vec img = m.carrier.action_of(w).apply_row(m0);
        tau.set_row(i, finv->apply_row(img));
    }

    Automorphism sigma{nullptr, Matrix()};
    try {
        sigma = Automorphism::checked(a, tau).inverse();
    } catch (const InvalidAutomorphism&) {
        return std::nullopt;
    }

    // Confirm: chi(x) = phi(tau(x)) intertwines the sigma-twisted bimodule
    // with m over the carrier algebra.
    Bimodule tw = twisted_bimodule(a, sigma);
    Matrix chi = tau * f;
    if (rank(chi) != n) return std::nullopt;
    for (const Vec& g : m.carrier.algebra()->generating_set()) {
        if (tw.carrier.action_of(g) * chi != chi * m.carrier.action_of(g))
            throw Error("internal: recognized twist fails to intertwine");
    }
    return sigma;
}

RegularDegenerationReport regular_degeneration_check(
    const AlgebraPtr& a, const std::vector<std::pair<std::string, Bimodule>>& candidates,
    std::uint64_t seed) {
    if (!a->is_self_injective()) throw NotSelfInjective();
    RegularDegenerationReport report;
    Bimodule reg = regular_bimodule(a);
    OrbitStats reg_stats = orbit_stats(reg.carrier);
    report.regular_orbit_dim = reg_stats.orbit_dim;

    for (const auto& [label, cand] : candidates) {
        RegularDegenerationEntry e;
        e.label = label;
        if (cand.left != a || cand.right != a) throw AlgebraMismatch();

        if (cand.carrier.dim() == a->dim()) {
            e.right_restriction_regular =
                is_isomorphic(regular_module(a), cand.right_restriction(), seed).has_value();
            e.left_restriction_regular =
                is_isomorphic(regular_module(a->opposite()), cand.left_restriction(), seed)
                    .has_value();
        }
        if (!e.right_restriction_regular || !e.left_restriction_regular) {
            e.verdict = "restriction-not-regular";
            report.entries.push_back(std::move(e));
            continue;
        }
        e.twist = twist_recognize(cand, seed);
        OrbitStats s = orbit_stats(cand.carrier);
        e.orbit_dim = s.orbit_dim;
        e.orbit_dims_equal = s.orbit_dim == reg_stats.orbit_dim;
        e.isomorphic_to_regular = is_isomorphic(cand.carrier, reg.carrier, seed).has_value();
        if (e.isomorphic_to_regular) {
            e.verdict = "improper-isomorphic";
        } else if (e.twist && e.orbit_dims_equal) {
            e.verdict = "not-a-proper-degeneration";
        } else {
            e.verdict = "inconclusive";
        }
        report.entries.push_back(std::move(e));
    }
    return report;
}

} // namespace syzlab
