#include "syzlab/module.hpp"

#include <algorithm>
#include <random>

namespace syzlab {

// Per-algebra cache for the module layer: indecomposable projectives with
// their basis elements and socle generators, and the self-injectivity bit.
struct ModuleLayerCache {
    std::once_flag proj_flag;
    std::vector<Module> projectives;
    std::vector<std::vector<Vec>> proj_basis_elements; ///< basis of e_i A as algebra elements
    std::once_flag socle_flag;
    std::vector<Vec> socle_elements; ///< a socle generator of each e_i A, as an algebra element
    std::once_flag selfinj_flag;
    bool self_injective = false;
};

ModuleLayerCache& Algebra::module_cache() const {
    std::call_once(module_cache_flag_, [this] { module_cache_ = std::make_shared<ModuleLayerCache>(); });
    return *module_cache_;
}

Module Module::unchecked(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> action) {
    if (action.size() != algebra->dim()) throw ValidationError("one action matrix per basis element required");
    for (const Matrix& x : action)
        if (x.rows() != dim || x.cols() != dim) throw ValidationError("action matrices must be dim x dim");
    Module m;
    m.algebra_ = std::move(algebra);
    m.dim_ = dim;
    m.action_ = std::move(action);
    return m;
}

Module Module::checked(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> action) {
    Module m = unchecked(std::move(algebra), dim, std::move(action));
    m.validate();
    return m;
}

Matrix Module::action_of(const Vec& element) const {
    Matrix r(algebra_->field(), dim_, dim_);
    for (std::size_t i = 0; i < element.size(); ++i) {
        if (sgn(element[i]) == 0) continue;
        for (std::size_t a = 0; a < dim_; ++a)
            for (std::size_t b = 0; b < dim_; ++b) {
                const Rat& x = action_[i].at(a, b);
                if (sgn(x) != 0) r.set(a, b, r.at(a, b) + element[i] * x);
            }
    }
    return r;
}

void Module::validate() const {
    const std::size_t n = algebra_->dim();
    if (action_of(algebra_->unit()) != Matrix::identity(algebra_->field(), dim_))
        throw ValidationError("unit does not act as the identity");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (action_[i] * action_[j] != action_of(algebra_->table(i, j)))
                throw ValidationError("action is not multiplicative at basis pair (" +
                                      std::to_string(i) + ", " + std::to_string(j) + ")");
}

bool ModuleMap::is_intertwiner() const {
    for (const Vec& g : source.algebra()->generating_set())
        if (source.action_of(g) * matrix != matrix * target.action_of(g)) return false;
    return true;
}

Module zero_module(const AlgebraPtr& a) {
    return Module::unchecked(a, 0, std::vector<Matrix>(a->dim(), Matrix(a->field(), 0, 0)));
}

Module regular_module(const AlgebraPtr& a) {
    std::vector<Matrix> action;
    action.reserve(a->dim());
    for (std::size_t j = 0; j < a->dim(); ++j) action.push_back(a->right_mult(unit_vec(a->dim(), j)));
    return Module::unchecked(a, a->dim(), std::move(action));
}

Module simple_module(const AlgebraPtr& a, std::size_t idx) {
    const std::size_t n = a->dim();
    const auto& idems = a->idempotents();
    if (idx >= idems.size()) throw ValidationError("idempotent index out of range");
    // Write e_j = sum_a t_a eps_a (mod rad); e_j then acts on the i-th simple as t_i.
    const RadicalInfo& rad = a->radical();
    Matrix cols(a->field(), n, idems.size() + rad.basis.size());
    for (std::size_t c = 0; c < idems.size(); ++c)
        for (std::size_t r = 0; r < n; ++r) cols.set(r, c, idems[c][r]);
    for (std::size_t c = 0; c < rad.basis.size(); ++c)
        for (std::size_t r = 0; r < n; ++r) cols.set(r, idems.size() + c, rad.basis[c][r]);
    std::vector<Matrix> action;
    action.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        SolveResult s = solve(cols, unit_vec(n, j));
        if (!s.particular) throw ValidationError("idempotents and radical do not span the algebra");
        Matrix x(a->field(), 1, 1);
        x.set(0, 0, (*s.particular)[idx]);
        action.push_back(std::move(x));
    }
    return Module::unchecked(a, 1, std::move(action));
}

Module direct_sum(const Module& m, const Module& n) {
    if (m.algebra() != n.algebra()) throw AlgebraMismatch();
    const std::size_t d = m.dim() + n.dim();
    std::vector<Matrix> action;
    action.reserve(m.algebra()->dim());
    for (std::size_t i = 0; i < m.algebra()->dim(); ++i) {
        Matrix x(m.algebra()->field(), d, d);
        for (std::size_t a = 0; a < m.dim(); ++a)
            for (std::size_t b = 0; b < m.dim(); ++b) x.set(a, b, m.action(i).at(a, b));
        for (std::size_t a = 0; a < n.dim(); ++a)
            for (std::size_t b = 0; b < n.dim(); ++b)
                x.set(m.dim() + a, m.dim() + b, n.action(i).at(a, b));
        action.push_back(std::move(x));
    }
    return Module::unchecked(m.algebra(), d, std::move(action));
}

Module direct_sum(const AlgebraPtr& a, const std::vector<Module>& parts) {
    Module acc = zero_module(a);
    for (const Module& p : parts) acc = direct_sum(acc, p);
    return acc;
}

namespace {

// Rows of an RREF basis of a subspace, with the induced right-module
// structure on the row coordinates.
Module induced_on_span(const Module& m, const Matrix& basis_rows,
                       const std::vector<std::size_t>& pivots) {
    const std::size_t r = basis_rows.rows();
    std::vector<Matrix> action;
    action.reserve(m.algebra()->dim());
    for (std::size_t i = 0; i < m.algebra()->dim(); ++i) {
        Matrix y(m.algebra()->field(), r, r);
        for (std::size_t k = 0; k < r; ++k) {
            Vec img = m.action(i).apply_row(basis_rows.row(k));
            auto coords = coordinates_in_rref_span(basis_rows, pivots, img);
            if (!coords) throw Error("internal: span is not closed under the action");
            y.set_row(k, *coords);
        }
        action.push_back(std::move(y));
    }
    return Module::unchecked(m.algebra(), r, std::move(action));
}

SubmoduleResult submodule_from_rows(const Module& m, const std::vector<Vec>& rows) {
    RrefResult r = rref(Matrix::from_rows(m.algebra()->field(), rows, m.dim()));
    Matrix basis(m.algebra()->field(), r.rank, m.dim());
    for (std::size_t i = 0; i < r.rank; ++i) basis.set_row(i, r.reduced.row(i));
    Module sub = induced_on_span(m, basis, r.pivots);
    return SubmoduleResult{sub, ModuleMap{sub, m, basis}};
}

} // namespace

SubmoduleResult submodule_span(const Module& m, const std::vector<Vec>& generators) {
    const Field& field = m.algebra()->field();
    std::vector<Vec> rows;
    for (const Vec& g : generators) {
        if (g.size() != m.dim()) throw DimensionMismatch("generator length must equal module dimension");
        if (!vec_is_zero(g)) rows.push_back(g);
    }
    // Close the span under the algebra's generating set.
    RrefResult cur = rref(Matrix::from_rows(field, rows, m.dim()));
    std::vector<Matrix> gen_actions;
    for (const Vec& g : m.algebra()->generating_set()) gen_actions.push_back(m.action_of(g));
    while (true) {
        std::vector<Vec> next;
        for (std::size_t i = 0; i < cur.rank; ++i) {
            next.push_back(cur.reduced.row(i));
            for (const Matrix& ga : gen_actions) {
                Vec w = ga.apply_row(cur.reduced.row(i));
                if (!vec_is_zero(w)) next.push_back(std::move(w));
            }
        }
        RrefResult grown = rref(Matrix::from_rows(field, next, m.dim()));
        if (grown.rank == cur.rank) break;
        cur = std::move(grown);
    }
    std::vector<Vec> basis_rows;
    for (std::size_t i = 0; i < cur.rank; ++i) basis_rows.push_back(cur.reduced.row(i));
    return submodule_from_rows(m, basis_rows);
}

SubmoduleResult radical_submodule(const Module& m) {
    std::vector<Vec> rows;
    for (const Vec& r : m.algebra()->radical().basis) {
        Matrix x = m.action_of(r);
        for (std::size_t k = 0; k < m.dim(); ++k) {
            Vec row = x.row(k);
            if (!vec_is_zero(row)) rows.push_back(std::move(row));
        }
    }
    return submodule_from_rows(m, rows);
}

SubmoduleResult socle_submodule(const Module& m) {
    const auto& rad = m.algebra()->radical().basis;
    Matrix stacked(m.algebra()->field(), m.dim(), 0);
    for (const Vec& r : rad) stacked = stacked.hstack(m.action_of(r));
    Matrix ker = rad.empty() ? Matrix::identity(m.algebra()->field(), m.dim()) : left_nullspace(stacked);
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < ker.rows(); ++i) rows.push_back(ker.row(i));
    return submodule_from_rows(m, rows);
}

std::vector<Matrix> hom_basis(const Module& m, const Module& n) {
    if (m.algebra() != n.algebra()) throw AlgebraMismatch();
    const Field& field = m.algebra()->field();
    const std::size_t dm = m.dim(), dn = n.dim();
    if (dm == 0 || dn == 0) return {};
    const auto& gens = m.algebra()->generating_set();

    Matrix sys(field, gens.size() * dm * dn, dm * dn);
    std::size_t row = 0;
    for (const Vec& g : gens) {
        Matrix x = m.action_of(g), y = n.action_of(g);
        for (std::size_t a = 0; a < dm; ++a) {
            for (std::size_t b = 0; b < dn; ++b) {
                // (X F - F Y)[a][b] = 0
                for (std::size_t r = 0; r < dm; ++r)
                    if (sgn(x.at(a, r)) != 0) sys.set(row, r * dn + b, sys.at(row, r * dn + b) + x.at(a, r));
                for (std::size_t c = 0; c < dn; ++c)
                    if (sgn(y.at(c, b)) != 0) sys.set(row, a * dn + c, sys.at(row, a * dn + c) - y.at(c, b));
                ++row;
            }
        }
    }
    Matrix ns = nullspace(sys);
    std::vector<Matrix> basis;
    basis.reserve(ns.rows());
    for (std::size_t i = 0; i < ns.rows(); ++i) {
        Matrix f(field, dm, dn);
        for (std::size_t a = 0; a < dm; ++a)
            for (std::size_t b = 0; b < dn; ++b) f.set(a, b, ns.at(i, a * dn + b));
        basis.push_back(std::move(f));
    }
    return basis;
}

namespace {

Matrix combine(const std::vector<Matrix>& basis, const std::vector<Rat>& t) {
    Matrix acc(basis.front().field(), basis.front().rows(), basis.front().cols());
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (sgn(t[i]) != 0) acc = acc + basis[i].scaled(t[i]);
    return acc;
}

} // namespace

std::optional<Matrix> search_rank_combination(const std::vector<Matrix>& basis,
                                              std::size_t target_rank, std::uint64_t seed) {
    if (basis.empty()) return std::nullopt;
    const Field& field = basis.front().field();
    const std::size_t h = basis.size();

    auto try_point = [&](const std::vector<Rat>& t) -> std::optional<Matrix> {
        bool zero = true;
        for (const Rat& x : t)
            if (sgn(x) != 0) { zero = false; break; }
        if (zero) return std::nullopt;
        Matrix c = combine(basis, t);
        if (rank(c) == target_rank) return c;
        return std::nullopt;
    };

    // Cheap deterministic candidates first.
    for (std::size_t i = 0; i < h; ++i) {
        std::vector<Rat> t(h, Rat(0));
        t[i] = 1;
        if (auto w = try_point(t)) return w;
    }
    {
        std::vector<Rat> ones(h, Rat(1));
        if (auto w = try_point(ones)) return w;
    }

    if (field.is_rationals()) {
        // Full grid {0..target_rank}^h: decisive for rank conditions, since every
        // maximal minor of the combination has degree <= target_rank.
        const std::size_t side = target_rank + 1;
        const double bound = 4e6;
        double points = 1;
        for (std::size_t i = 0; i < h && points <= bound; ++i) points *= static_cast<double>(side);
        if (points <= bound) {
            std::vector<std::size_t> digits(h, 0);
            while (true) {
                std::size_t pos = 0;
                while (pos < h && digits[pos] + 1 == side) digits[pos++] = 0;
                if (pos == h) break;
                ++digits[pos];
                std::vector<Rat> t(h);
                for (std::size_t i = 0; i < h; ++i) t[i] = Rat(static_cast<long>(digits[i]));
                if (auto w = try_point(t)) return w;
            }
            return std::nullopt;
        }
        // Grid too large: seeded sampling can still certify a witness, but
        // absence is not a certificate.
        std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
        std::uniform_int_distribution<long> dist(0, static_cast<long>(target_rank));
        for (int trial = 0; trial < 512; ++trial) {
            std::vector<Rat> t(h);
            for (std::size_t i = 0; i < h; ++i) t[i] = Rat(dist(rng));
            if (auto w = try_point(t)) return w;
        }
        throw SearchSpaceExceeded("rational combination grid of " + std::to_string(h) +
                                  " dimensions is too large to certify a negative answer");
    }

    // Prime field: seeded random draws, then exhaustive enumeration when feasible.
    const mpz_class& p = field.characteristic();
    if (p.fits_ulong_p()) {
        const unsigned long pl = p.get_ui();
        std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
        std::uniform_int_distribution<unsigned long> dist(0, pl - 1);
        for (int trial = 0; trial < 64; ++trial) {
            std::vector<Rat> t(h);
            for (std::size_t i = 0; i < h; ++i) t[i] = Rat(static_cast<long>(dist(rng)));
            if (auto w = try_point(t)) return w;
        }
        double points = 1;
        for (std::size_t i = 0; i < h && points <= double(1 << 20); ++i) points *= double(pl);
        if (points <= double(1 << 20)) {
            std::vector<unsigned long> digits(h, 0);
            while (true) {
                std::size_t pos = 0;
                while (pos < h && digits[pos] + 1 == pl) digits[pos++] = 0;
                if (pos == h) break;
                ++digits[pos];
                std::vector<Rat> t(h);
                for (std::size_t i = 0; i < h; ++i) t[i] = Rat(static_cast<long>(digits[i]));
                if (auto w = try_point(t)) return w;
            }
            return std::nullopt;
        }
    }
    throw FiniteFieldInconclusive("invertible-combination search over F_" + p.get_str() +
                                  " exhausted without certificate");
}

std::optional<ModuleMap> is_isomorphic(const Module& m, const Module& n, std::uint64_t seed) {
    if (m.algebra() != n.algebra()) throw AlgebraMismatch();
    if (m.dim() != n.dim()) return std::nullopt;
    if (m.dim() == 0) return ModuleMap{m, n, Matrix(m.algebra()->field(), 0, 0)};
    std::vector<Matrix> basis = hom_basis(m, n);
    if (basis.empty()) return std::nullopt;
    auto w = search_rank_combination(basis, m.dim(), seed);
    if (!w) return std::nullopt;
    return ModuleMap{m, n, *w};
}

// ---------------------------------------------------------------------------
// Projectives, covers, stripping

namespace {

struct ProjectiveTable {
    const std::vector<Module>* modules;
    const std::vector<std::vector<Vec>>* basis_elements;
};

ProjectiveTable projective_table(const AlgebraPtr& a) {
    ModuleLayerCache& cache = a->module_cache();
    std::call_once(cache.proj_flag, [&] {
        Module reg = regular_module(a);
        for (const Vec& idem : a->idempotents()) {
            Matrix l = a->left_mult(idem);
            std::vector<Vec> gens;
            for (std::size_t k = 0; k < a->dim(); ++k) {
                Vec row = l.row(k);
                if (!vec_is_zero(row)) gens.push_back(std::move(row));
            }
            SubmoduleResult sub = submodule_span(reg, gens);
            std::vector<Vec> basis_elems;
            for (std::size_t k = 0; k < sub.module.dim(); ++k)
                basis_elems.push_back(sub.inclusion.matrix.row(k));
            cache.projectives.push_back(sub.module);
            cache.proj_basis_elements.push_back(std::move(basis_elems));
        }
    });
    return ProjectiveTable{&cache.projectives, &cache.proj_basis_elements};
}

// Socle generator of e_i A as an algebra element.  For a basic self-injective
// algebra the socle of e_i A is simple, hence 1-dimensional.
const std::vector<Vec>& socle_elements(const AlgebraPtr& a) {
    ModuleLayerCache& cache = a->module_cache();
    std::call_once(cache.socle_flag, [&] {
        ProjectiveTable table = projective_table(a);
        for (std::size_t i = 0; i < table.modules->size(); ++i) {
            const Module& p = (*table.modules)[i];
            SubmoduleResult soc = socle_submodule(p);
            if (soc.module.dim() != 1)
                throw Error("socle of indecomposable projective " + std::to_string(i) +
                            " is not simple; algebra is not self-injective");
            Vec in_p = soc.inclusion.matrix.row(0);
            Vec elem(a->dim(), Rat(0));
            for (std::size_t k = 0; k < p.dim(); ++k)
                if (sgn(in_p[k]) != 0)
                    elem = vec_add(a->field(), elem,
                                   vec_scaled(a->field(), (*table.basis_elements)[i][k], in_p[k]));
            cache.socle_elements.push_back(std::move(elem));
        }
    });
    return cache.socle_elements;
}

} // namespace

Module indecomposable_projective(const AlgebraPtr& a, std::size_t i) {
    if (i >= a->idempotents().size()) throw ValidationError("idempotent index out of range");
    return (*projective_table(a).modules)[i];
}

CoverData projective_cover(const Module& m) {
    const AlgebraPtr& a = m.algebra();
    const Field& field = a->field();
    SubmoduleResult rad_m = radical_submodule(m);
    std::vector<Vec> rad_rows;
    for (std::size_t i = 0; i < rad_m.module.dim(); ++i) rad_rows.push_back(rad_m.inclusion.matrix.row(i));
    QuotientSpace top(field, m.dim(), rad_rows);

    ProjectiveTable table = projective_table(a);
    const std::size_t ni = a->idempotents().size();
    std::vector<std::size_t> mult(ni, 0);
    std::vector<std::pair<std::size_t, Vec>> lifts; // (idempotent index, generator in m)
    std::vector<Vec> top_acc;
    std::size_t top_rank = 0;
    for (std::size_t i = 0; i < ni; ++i) {
        Matrix e = m.action_of(a->idempotents()[i]);
        for (std::size_t k = 0; k < m.dim(); ++k) {
            Vec w = e.row(k);
            if (vec_is_zero(w)) continue;
            Vec t = top.project(w);
            if (vec_is_zero(t)) continue;
            top_acc.push_back(t);
            std::size_t r = rank(Matrix::from_rows(field, top_acc, top.dim()));
            if (r > top_rank) {
                top_rank = r;
                ++mult[i];
                lifts.emplace_back(i, std::move(w));
            } else {
                top_acc.pop_back();
            }
        }
    }
    if (top_rank != top.dim()) throw Error("internal: projective cover does not reach the top");

    std::vector<Module> blocks;
    std::vector<Vec> cover_rows;
    for (const auto& [i, w] : lifts) {
        blocks.push_back((*table.modules)[i]);
        for (const Vec& p : (*table.basis_elements)[i])
            cover_rows.push_back(m.action_of(p).apply_row(w));
    }
    Module projective = direct_sum(a, blocks);
    Matrix cover = Matrix::from_rows(field, cover_rows, m.dim());
    if (rank(cover) != m.dim()) throw Error("internal: projective cover is not surjective");

    RrefResult ker = rref(left_nullspace(cover));
    Matrix ker_rows(field, ker.rank, projective.dim());
    for (std::size_t i = 0; i < ker.rank; ++i) ker_rows.set_row(i, ker.reduced.row(i));
    Module kernel = induced_on_span(projective, ker_rows, ker.pivots);

    // Minimality: the kernel must lie inside projective * rad.
    SubmoduleResult rad_p = radical_submodule(projective);
    std::vector<Vec> span_rows;
    for (std::size_t i = 0; i < rad_p.module.dim(); ++i) span_rows.push_back(rad_p.inclusion.matrix.row(i));
    const std::size_t rad_rank = span_rows.size();
    for (std::size_t i = 0; i < ker_rows.rows(); ++i) span_rows.push_back(ker_rows.row(i));
    if (rank(Matrix::from_rows(field, span_rows, projective.dim())) != rad_rank)
        throw Error("internal: cover kernel escapes the radical (cover not minimal)");

    CoverData out;
    out.projective = projective;
    out.multiplicities = std::move(mult);
    out.cover_map = ModuleMap{projective, m, cover};
    out.kernel = kernel;
    out.kernel_inclusion = ModuleMap{kernel, projective, ker_rows};
    return out;
}

bool is_projective(const Module& m) { return projective_cover(m).kernel.dim() == 0; }

Module dual_module(const Module& m) {
    AlgebraPtr op = m.algebra()->opposite();
    std::vector<Matrix> action;
    action.reserve(op->dim());
    for (std::size_t i = 0; i < op->dim(); ++i) action.push_back(m.action(i).transpose());
    return Module::unchecked(op, m.dim(), std::move(action));
}

bool Algebra::is_self_injective() const {
    ModuleLayerCache& cache = module_cache();
    std::call_once(cache.selfinj_flag, [&] {
        // Dual of the left regular module, as a right module over this algebra.
        Module d = dual_module(regular_module(opposite()));
        cache.self_injective = is_projective(d);
    });
    return cache.self_injective;
}

StripResult strip_projectives(const Module& m) {
    const AlgebraPtr& a = m.algebra();
    if (!a->is_self_injective()) throw NotSelfInjective();
    const Field& field = a->field();
    ProjectiveTable table = projective_table(a);
    const std::vector<Vec>& socles = socle_elements(a);
    const std::size_t ni = a->idempotents().size();

    Module core = m;
    std::vector<std::size_t> stripped(ni, 0);
    bool found = true;
    while (found) {
        found = false;
        for (std::size_t i = 0; i < ni && !found; ++i) {
            const Module& p = (*table.modules)[i];
            const std::size_t dp = p.dim();
            if (dp == 0 || dp > core.dim()) continue;
            Matrix e = core.action_of(a->idempotents()[i]);
            Matrix xs = core.action_of(socles[i]);
            for (std::size_t k = 0; k < core.dim() && !found; ++k) {
                Vec gen = e.row(k);
                if (vec_is_zero(gen)) continue;
                if (vec_is_zero(xs.apply_row(gen))) continue;
                // gen generates a free copy of e_i A: its annihilator in e_i A is a
                // submodule missing the (essential) socle, hence zero.
                std::vector<Vec> inj_rows;
                for (const Vec& b : (*table.basis_elements)[i])
                    inj_rows.push_back(core.action_of(b).apply_row(gen));
                Matrix inj = Matrix::from_rows(field, inj_rows, core.dim());
                if (rank(inj) != dp) throw Error("internal: socle test produced a non-injective map");

                // Retraction r with inj * r = id, solved together with the
                // intertwining constraints; it exists because e_i A is injective.
                const std::size_t dc = core.dim();
                const auto& gens = a->generating_set();
                const std::size_t unknowns = dc * dp;
                Matrix sys(field, gens.size() * unknowns + dp * dp, unknowns);
                Vec rhs(sys.rows(), Rat(0));
                std::size_t row = 0;
                for (const Vec& g : gens) {
                    Matrix xc = core.action_of(g), xp = p.action_of(g);
                    for (std::size_t s = 0; s < dc; ++s)
                        for (std::size_t t = 0; t < dp; ++t) {
                            for (std::size_t u = 0; u < dc; ++u)
                                if (sgn(xc.at(s, u)) != 0)
                                    sys.set(row, u * dp + t, sys.at(row, u * dp + t) + xc.at(s, u));
                            for (std::size_t v = 0; v < dp; ++v)
                                if (sgn(xp.at(v, t)) != 0)
                                    sys.set(row, s * dp + v, sys.at(row, s * dp + v) - xp.at(v, t));
                            ++row;
                        }
                }
                for (std::size_t s = 0; s < dp; ++s)
                    for (std::size_t t = 0; t < dp; ++t) {
                        for (std::size_t u = 0; u < dc; ++u)
                            if (sgn(inj.at(s, u)) != 0) sys.set(row, u * dp + t, inj.at(s, u));
                        rhs[row] = (s == t) ? field.one() : field.zero();
                        ++row;
                    }
                SolveResult sol = solve(sys, rhs);
                if (!sol.particular) throw Error("internal: split retraction system inconsistent");
                Matrix retr(field, dc, dp);
                for (std::size_t u = 0; u < dc; ++u)
                    for (std::size_t t = 0; t < dp; ++t) retr.set(u, t, (*sol.particular)[u * dp + t]);

                // Complement of the summand: kernel of the idempotent retr * inj.
                Matrix idem = retr * inj;
                RrefResult comp = rref(left_nullspace(idem));
                Matrix comp_rows(field, comp.rank, dc);
                for (std::size_t s = 0; s < comp.rank; ++s) comp_rows.set_row(s, comp.reduced.row(s));
                if (comp.rank + dp != dc) throw Error("internal: split complement has wrong dimension");
                core = induced_on_span(core, comp_rows, comp.pivots);
                ++stripped[i];
                found = true;
            }
        }
    }
    return StripResult{core, stripped};
}

std::pair<Module, ModuleMap> change_basis(const Module& m, const Matrix& s) {
    auto sinv = inverse(s);
    if (!sinv) throw ValidationError("change of basis requires an invertible matrix");
    std::vector<Matrix> action;
    action.reserve(m.algebra()->dim());
    for (std::size_t i = 0; i < m.algebra()->dim(); ++i) action.push_back(*sinv * m.action(i) * s);
    Module out = Module::unchecked(m.algebra(), m.dim(), std::move(action));
    return {out, ModuleMap{m, out, s}};
}

} // namespace syzlab
