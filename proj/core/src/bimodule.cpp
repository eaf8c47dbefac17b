#include "syzlab/bimodule.hpp"

namespace syzlab {

Automorphism Automorphism::checked(AlgebraPtr algebra, Matrix matrix) {
    const std::size_t n = algebra->dim();
    if (matrix.rows() != n || matrix.cols() != n)
        throw InvalidAutomorphism("matrix shape does not match the algebra dimension");
    if (matrix.field() != algebra->field()) throw InvalidAutomorphism("field mismatch");
    if (rank(matrix) != n) throw InvalidAutomorphism("matrix is singular");
    Automorphism s{std::move(algebra), std::move(matrix)};
    if (s.apply(s.algebra->unit()) != s.algebra->unit())
        throw InvalidAutomorphism("unit is not fixed");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec lhs = s.apply(s.algebra->table(i, j));
            Vec rhs = s.algebra->multiply(s.matrix.row(i), s.matrix.row(j));
            if (lhs != rhs)
                throw InvalidAutomorphism("not multiplicative at basis pair (" + std::to_string(i) +
                                          ", " + std::to_string(j) + ")");
        }
    return s;
}

Automorphism Automorphism::identity(const AlgebraPtr& algebra) {
    return Automorphism{algebra, Matrix::identity(algebra->field(), algebra->dim())};
}

Automorphism Automorphism::compose_after(const Automorphism& inner) const {
    if (algebra != inner.algebra) throw AlgebraMismatch();
    return Automorphism{algebra, inner.matrix * matrix};
}

Automorphism Automorphism::inverse() const {
    auto inv = syzlab::inverse(matrix);
    if (!inv) throw InvalidAutomorphism("matrix is singular");
    return Automorphism{algebra, *inv};
}

bool Automorphism::is_identity() const {
    return matrix == Matrix::identity(algebra->field(), algebra->dim());
}

Module Bimodule::right_restriction() const {
    const std::size_t n = left->dim(), mm = right->dim();
    std::vector<Matrix> action;
    action.reserve(mm);
    const Vec& ul = left->unit();
    for (std::size_t j = 0; j < mm; ++j) {
        Vec w(n * mm, Rat(0));
        for (std::size_t i = 0; i < n; ++i) w[pair_index(i, j, mm)] = ul[i];
        action.push_back(carrier.action_of(w));
    }
    return Module::unchecked(right, carrier.dim(), std::move(action));
}

Module Bimodule::left_restriction() const {
    const std::size_t n = left->dim(), mm = right->dim();
    std::vector<Matrix> action;
    action.reserve(n);
    const Vec& ur = right->unit();
    for (std::size_t i = 0; i < n; ++i) {
        Vec w(n * mm, Rat(0));
        for (std::size_t j = 0; j < mm; ++j) w[pair_index(i, j, mm)] = ur[j];
        action.push_back(carrier.action_of(w));
    }
    return Module::unchecked(left->opposite(), carrier.dim(), std::move(action));
}

bool Bimodule::left_right_projective() const {
    return is_projective(left_restriction()) && is_projective(right_restriction());
}

Bimodule regular_bimodule(const AlgebraPtr& a) {
    AlgebraPtr env = a->enveloping();
    const std::size_t n = a->dim();
    std::vector<Matrix> action;
    action.reserve(n * n);
    std::vector<Matrix> lmul, rmul;
    for (std::size_t i = 0; i < n; ++i) {
        lmul.push_back(a->left_mult(unit_vec(n, i)));
        rmul.push_back(a->right_mult(unit_vec(n, i)));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) action.push_back(lmul[i] * rmul[j]);
    return Bimodule{a, a, Module::unchecked(env, n, std::move(action))};
}

Bimodule twisted_bimodule(const AlgebraPtr& a, const Automorphism& sigma) {
    if (sigma.algebra != a) throw InvalidAutomorphism("automorphism belongs to a different algebra");
    // Re-validate: twisted actions are only multiplicative for genuine automorphisms.
    Automorphism checked = Automorphism::checked(sigma.algebra, sigma.matrix);
    AlgebraPtr env = a->enveloping();
    const std::size_t n = a->dim();
    std::vector<Matrix> action;
    action.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        Matrix li = a->left_mult(unit_vec(n, i));
        for (std::size_t j = 0; j < n; ++j)
            action.push_back(li * a->right_mult(checked.matrix.row(j)));
    }
    return Bimodule{a, a, Module::unchecked(env, n, std::move(action))};
}

bool is_inner(const Automorphism& sigma, std::uint64_t seed) {
    Bimodule tw = twisted_bimodule(sigma.algebra, sigma);
    Bimodule reg = regular_bimodule(sigma.algebra);
    return is_isomorphic(tw.carrier, reg.carrier, seed).has_value();
}

std::optional<std::size_t> out_order(const Automorphism& sigma, std::size_t bound,
                                     std::uint64_t seed) {
    if (bound < 1) throw ValidationError("out_order needs bound >= 1");
    Automorphism power = sigma;
    for (std::size_t m = 1; m <= bound; ++m) {
        if (is_inner(power, seed)) return m;
        power = power.compose_after(sigma);
    }
    return std::nullopt;
}

Bimodule bimodule_syzygy(const AlgebraPtr& a, std::size_t n) {
    if (n < 1) throw ValidationError("bimodule syzygy needs n >= 1");
    if (!a->is_self_injective()) throw NotSelfInjective();
    Module carrier = regular_bimodule(a).carrier;
    for (std::size_t i = 0; i < n; ++i) carrier = syzygy(carrier);
    Bimodule out{a, a, std::move(carrier)};
    if (!out.left_right_projective())
        throw Error("internal: bimodule syzygy is not left-right projective");
    return out;
}

Bimodule bimodule_cosyzygy(const AlgebraPtr& a, std::size_t n) {
    if (n < 1) throw ValidationError("bimodule cosyzygy needs n >= 1");
    if (!a->is_self_injective()) throw NotSelfInjective();
    Module carrier = regular_bimodule(a).carrier;
    for (std::size_t i = 0; i < n; ++i) carrier = cosyzygy(carrier);
    Bimodule out{a, a, std::move(carrier)};
    if (!out.left_right_projective())
        throw Error("internal: bimodule cosyzygy is not left-right projective");
    return out;
}

Module tensor_with_bimodule(const Module& m, const Bimodule& x) {
    if (m.algebra() != x.left) throw AlgebraMismatch();
    const AlgebraPtr& a = x.left;
    const AlgebraPtr& b = x.right;
    const Field& field = a->field();
    const std::size_t dm = m.dim(), dx = x.carrier.dim();
    const std::size_t full = dm * dx;
    const std::size_t nb = b->dim();
    auto idx = [&](std::size_t mm, std::size_t xx) { return mm * dx + xx; };

    // Left action of an algebra element on the carrier.
    auto left_act = [&](const Vec& g) {
        Vec w(a->dim() * nb, Rat(0));
        const Vec& ub = b->unit();
        for (std::size_t i = 0; i < a->dim(); ++i) {
            if (sgn(g[i]) == 0) continue;
            for (std::size_t j = 0; j < nb; ++j)
                if (sgn(ub[j]) != 0) w[pair_index(i, j, nb)] = field.mul(g[i], ub[j]);
        }
        return x.carrier.action_of(w);
    };

    // Balancedness relations (m g) (x) v - m (x) (g v) over the generating set.
    std::vector<Vec> rows;
    for (const Vec& g : a->generating_set()) {
        Matrix xg = m.action_of(g);
        Matrix lg = left_act(g);
        for (std::size_t mm = 0; mm < dm; ++mm) {
            for (std::size_t xx = 0; xx < dx; ++xx) {
                Vec row(full, Rat(0));
                for (std::size_t k = 0; k < dm; ++k)
                    if (sgn(xg.at(mm, k)) != 0) row[idx(k, xx)] += xg.at(mm, k);
                for (std::size_t l = 0; l < dx; ++l)
                    if (sgn(lg.at(xx, l)) != 0) row[idx(mm, l)] -= lg.at(xx, l);
                for (Rat& v : row) v = field.normalize(v);
                if (!vec_is_zero(row)) rows.push_back(std::move(row));
            }
        }
    }
    QuotientSpace q(field, full, rows);

    std::vector<Matrix> action;
    action.reserve(nb);
    for (std::size_t j = 0; j < nb; ++j) {
        Vec w(a->dim() * nb, Rat(0));
        const Vec& ua = a->unit();
        for (std::size_t i = 0; i < a->dim(); ++i)
            if (sgn(ua[i]) != 0) w[pair_index(i, j, nb)] = ua[i];
        Matrix rj = x.carrier.action_of(w);
        Matrix y(field, q.dim(), q.dim());
        for (std::size_t c = 0; c < q.dim(); ++c) {
            const std::size_t rep = q.coset_basis()[c];
            const std::size_t mm = rep / dx, xx = rep % dx;
            Vec img(full, Rat(0));
            for (std::size_t l = 0; l < dx; ++l)
                if (sgn(rj.at(xx, l)) != 0) img[idx(mm, l)] = rj.at(xx, l);
            y.set_row(c, q.project(img));
        }
        action.push_back(std::move(y));
    }
    return Module::unchecked(b, q.dim(), std::move(action));
}

Bimodule tensor_bimodules(const Bimodule& x, const Bimodule& y) {
    if (x.right != y.left) throw AlgebraMismatch();
    const AlgebraPtr& a = x.left;
    const AlgebraPtr& b = x.right;
    const AlgebraPtr& c = y.right;
    const Field& field = a->field();
    const std::size_t dx = x.carrier.dim(), dy = y.carrier.dim();
    const std::size_t full = dx * dy;
    auto idx = [&](std::size_t xx, std::size_t yy) { return xx * dy + yy; };

    auto act_pair = [&](const Bimodule& bm, const Vec& lft, const Vec& rgt) {
        const std::size_t nl = bm.left->dim(), nr = bm.right->dim();
        Vec w(nl * nr, Rat(0));
        for (std::size_t i = 0; i < nl; ++i) {
            if (sgn(lft[i]) == 0) continue;
            for (std::size_t j = 0; j < nr; ++j)
                if (sgn(rgt[j]) != 0) w[pair_index(i, j, nr)] = field.mul(lft[i], rgt[j]);
        }
        return bm.carrier.action_of(w);
    };

    // Middle balancedness: (x g) (x) v - x (x) (g v) for generators g of B.
    std::vector<Vec> rows;
    for (const Vec& g : b->generating_set()) {
        Matrix rg = act_pair(x, a->unit(), g); // right action of g on x
        Matrix lg = act_pair(y, g, c->unit()); // left action of g on y
        for (std::size_t xx = 0; xx < dx; ++xx) {
            for (std::size_t yy = 0; yy < dy; ++yy) {
                Vec row(full, Rat(0));
                for (std::size_t k = 0; k < dx; ++k)
                    if (sgn(rg.at(xx, k)) != 0) row[idx(k, yy)] += rg.at(xx, k);
                for (std::size_t l = 0; l < dy; ++l)
                    if (sgn(lg.at(yy, l)) != 0) row[idx(xx, l)] -= lg.at(yy, l);
                for (Rat& v : row) v = field.normalize(v);
                if (!vec_is_zero(row)) rows.push_back(std::move(row));
            }
        }
    }
    QuotientSpace q(field, full, rows);

    AlgebraPtr tensor_alg = (a == c) ? a->enveloping() : tensor_product_algebra(a->opposite(), c);
    const std::size_t na = a->dim(), nc = c->dim();
    std::vector<Matrix> action(na * nc);
    for (std::size_t i = 0; i < na; ++i) {
        Matrix li = act_pair(x, unit_vec(na, i), b->unit()); // left action of e_i on x
        for (std::size_t cc = 0; cc < nc; ++cc) {
            Matrix rc = act_pair(y, b->unit(), unit_vec(nc, cc)); // right action of e_cc on y
            Matrix m(field, q.dim(), q.dim());
            for (std::size_t cls = 0; cls < q.dim(); ++cls) {
                const std::size_t rep = q.coset_basis()[cls];
                const std::size_t xx = rep / dy, yy = rep % dy;
                Vec img(full, Rat(0));
                for (std::size_t k = 0; k < dx; ++k) {
                    if (sgn(li.at(xx, k)) == 0) continue;
                    for (std::size_t l = 0; l < dy; ++l)
                        if (sgn(rc.at(yy, l)) != 0)
                            img[idx(k, l)] = field.add(img[idx(k, l)], li.at(xx, k) * rc.at(yy, l));
                }
                m.set_row(cls, q.project(img));
            }
            action[pair_index(i, cc, nc)] = std::move(m);
        }
    }
    return Bimodule{a, c, Module::unchecked(tensor_alg, q.dim(), std::move(action))};
}

namespace {

StableMoritaClause product_clause(const Bimodule& product, const AlgebraPtr& algebra,
                                  std::uint64_t seed) {
    StableMoritaClause clause;
    clause.product_dim = product.carrier.dim();
    Bimodule reg = regular_bimodule(algebra);
    StripResult prod_strip = strip_projectives(product.carrier);
    StripResult reg_strip = strip_projectives(reg.carrier);

    bool cores_match = prod_strip.core.dim() == reg_strip.core.dim() &&
                       is_isomorphic(prod_strip.core, reg_strip.core, seed).has_value();
    bool mults_cover = true;
    clause.complement_multiplicities.resize(prod_strip.stripped.size(), 0);
    for (std::size_t i = 0; i < prod_strip.stripped.size(); ++i) {
        if (prod_strip.stripped[i] < reg_strip.stripped[i]) mults_cover = false;
        else clause.complement_multiplicities[i] = prod_strip.stripped[i] - reg_strip.stripped[i];
    }
    clause.regular_summand = cores_match && mults_cover;
    if (!clause.regular_summand) return clause;

    // By Krull-Schmidt the complement is the sum of the extra projectives.
    std::vector<Module> parts;
    for (std::size_t i = 0; i < clause.complement_multiplicities.size(); ++i)
        for (std::size_t k = 0; k < clause.complement_multiplicities[i]; ++k)
            parts.push_back(indecomposable_projective(product.carrier_algebra(), i));
    clause.complement_projective = is_projective(direct_sum(product.carrier_algebra(), parts));
    return clause;
}

} // namespace

StableMoritaReport stable_morita_check(const Bimodule& x, const Bimodule& y, std::uint64_t seed) {
    if (x.right != y.left || y.right != x.left) throw AlgebraMismatch();
    StableMoritaReport report;
    report.x_left_right_projective = x.left_right_projective();
    report.y_left_right_projective = y.left_right_projective();
    report.xy = product_clause(tensor_bimodules(x, y), x.left, seed);
    report.yx = product_clause(tensor_bimodules(y, x), y.left, seed);
    return report;
}

} // namespace syzlab
