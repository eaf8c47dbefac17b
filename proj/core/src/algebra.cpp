#include "syzlab/algebra.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace syzlab {

namespace {

// rad^{k+1} bases obtained by multiplying the previous power by rad.
std::vector<std::vector<Vec>> radical_power_chain(const Algebra& a, std::vector<Vec> basis) {
    std::vector<std::vector<Vec>> powers;
    if (basis.empty()) return powers;
    powers.push_back(std::move(basis));
    while (true) {
        std::vector<Vec> prods;
        for (const Vec& x : powers.back())
            for (const Vec& y : powers.front()) {
                Vec p = a.multiply(x, y);
                if (!vec_is_zero(p)) prods.push_back(std::move(p));
            }
        RrefResult r = rref(Matrix::from_rows(a.field(), prods, a.dim()));
        if (r.rank == 0) break;
        std::vector<Vec> next;
        for (std::size_t i = 0; i < r.rank; ++i) next.push_back(r.reduced.row(i));
        powers.push_back(std::move(next));
    }
    return powers;
}

std::vector<Vec> rref_rows(const Field& field, const std::vector<Vec>& rows, std::size_t dim) {
    RrefResult r = rref(Matrix::from_rows(field, rows, dim));
    std::vector<Vec> out;
    for (std::size_t i = 0; i < r.rank; ++i) out.push_back(r.reduced.row(i));
    return out;
}

} // namespace

std::shared_ptr<Algebra> Algebra::make(Field field, std::vector<std::string> labels,
                                       std::vector<std::vector<Vec>> table, Vec unit,
                                       std::vector<Vec> idempotents,
                                       std::optional<QuiverPresentation> pres) {
    auto a = std::shared_ptr<Algebra>(new Algebra());
    a->field_ = field;
    a->dim_ = labels.size();
    a->labels_ = std::move(labels);
    const std::size_t n = a->dim_;
    if (table.size() != n) throw ValidationError("structure constant table must have dim rows");
    a->table_.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (table[i].size() != n) throw ValidationError("structure constant table must be dim x dim");
        for (std::size_t j = 0; j < n; ++j) {
            Vec& v = table[i][j];
            if (v.size() != n) throw ValidationError("structure constant entries must have dim coefficients");
            for (Rat& x : v) x = field.normalize(x);
            a->table_.push_back(std::move(v));
        }
    }
    if (unit.size() != n) throw ValidationError("unit vector must have dim coefficients");
    for (Rat& x : unit) x = field.normalize(x);
    a->unit_ = std::move(unit);
    for (Vec& e : idempotents) {
        if (e.size() != n) throw ValidationError("idempotent vectors must have dim coefficients");
        for (Rat& x : e) x = field.normalize(x);
    }
    a->idempotents_ = std::move(idempotents);
    a->presentation_ = std::move(pres);
    return a;
}

AlgebraPtr Algebra::from_structure_constants(Field field, std::vector<std::string> labels,
                                             std::vector<std::vector<Vec>> table, Vec unit,
                                             std::vector<Vec> idempotents) {
    auto a = make(std::move(field), std::move(labels), std::move(table), std::move(unit),
                  std::move(idempotents), std::nullopt);
    a->validate();
    return a;
}

Vec Algebra::multiply(const Vec& a, const Vec& b) const {
    if (a.size() != dim_ || b.size() != dim_) throw DimensionMismatch("algebra multiply length mismatch");
    Vec r(dim_, Rat(0));
    for (std::size_t i = 0; i < dim_; ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (sgn(b[j]) == 0) continue;
            const Rat coef = a[i] * b[j];
            const Vec& t = table(i, j);
            for (std::size_t k = 0; k < dim_; ++k) {
                if (sgn(t[k]) == 0) continue;
                r[k] += coef * t[k];
            }
        }
    }
    for (Rat& x : r) x = field_.normalize(x);
    return r;
}

Matrix Algebra::left_mult(const Vec& a) const {
    Matrix l(field_, dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t m = 0; m < dim_; ++m) {
            const Vec& t = table(i, m);
            for (std::size_t k = 0; k < dim_; ++k) {
                if (sgn(t[k]) == 0) continue;
                l.set(m, k, l.at(m, k) + a[i] * t[k]);
            }
        }
    }
    return l;
}

Matrix Algebra::right_mult(const Vec& a) const {
    Matrix r(field_, dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        if (sgn(a[j]) == 0) continue;
        for (std::size_t m = 0; m < dim_; ++m) {
            const Vec& t = table(m, j);
            for (std::size_t k = 0; k < dim_; ++k) {
                if (sgn(t[k]) == 0) continue;
                r.set(m, k, r.at(m, k) + a[j] * t[k]);
            }
        }
    }
    return r;
}

void Algebra::validate() const {
    const std::size_t n = dim_;
    // Associativity: (e_i e_j) e_k = e_i (e_j e_k), expanded through the table.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Vec& v = table(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                Vec lhs(n, Rat(0));
                for (std::size_t m = 0; m < n; ++m) {
                    if (sgn(v[m]) == 0) continue;
                    const Vec& t = table(m, k);
                    for (std::size_t s = 0; s < n; ++s)
                        if (sgn(t[s]) != 0) lhs[s] += v[m] * t[s];
                }
                const Vec& w = table(j, k);
                Vec rhs(n, Rat(0));
                for (std::size_t m = 0; m < n; ++m) {
                    if (sgn(w[m]) == 0) continue;
                    const Vec& t = table(i, m);
                    for (std::size_t s = 0; s < n; ++s)
                        if (sgn(t[s]) != 0) rhs[s] += w[m] * t[s];
                }
                for (std::size_t s = 0; s < n; ++s)
                    if (field_.normalize(lhs[s]) != field_.normalize(rhs[s]))
                        throw AssociativityViolation(i, j, k);
            }
        }
    }
    // Unit law.
    for (std::size_t i = 0; i < n; ++i) {
        Vec basis = unit_vec(n, i);
        if (multiply(unit_, basis) != basis || multiply(basis, unit_) != basis)
            throw UnitViolation(i);
    }
    // Complete orthogonal idempotent family.
    const std::size_t m = idempotents_.size();
    Vec sum(n, Rat(0));
    for (std::size_t a = 0; a < m; ++a) {
        if (multiply(idempotents_[a], idempotents_[a]) != idempotents_[a])
            throw IdempotentViolation(a, a, "element is not idempotent");
        for (std::size_t b = 0; b < m; ++b) {
            if (a == b) continue;
            if (!vec_is_zero(multiply(idempotents_[a], idempotents_[b])))
                throw IdempotentViolation(a, b, "family is not orthogonal");
        }
        sum = vec_add(field_, sum, idempotents_[a]);
    }
    if (sum != unit_) throw IdempotentViolation(m, m, "family does not sum to the unit");

    // Basicness: dim e_a (A/rad) e_b = delta_ab.  Needs the radical; when it is
    // not computable for this field, record a warning instead of validating.
    const RadicalInfo* rad = nullptr;
    try {
        rad = &radical();
    } catch (const UnsupportedField& e) {
        emit_warning(std::string("basicness not verified: ") + e.what());
        return;
    }
    std::vector<Vec> rad_rows = rad->basis;
    const std::size_t rad_rank = rad_rows.size();
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            std::vector<Vec> rows = rad_rows;
            for (std::size_t k = 0; k < n; ++k) {
                Vec v = multiply(multiply(idempotents_[a], unit_vec(n, k)), idempotents_[b]);
                if (!vec_is_zero(v)) rows.push_back(std::move(v));
            }
            const std::size_t d = rank(Matrix::from_rows(field_, rows, n)) - rad_rank;
            if (d != (a == b ? 1u : 0u)) throw NotBasic(a, b, d);
        }
    }
}

void Algebra::compute_radical() const {
    try {
        std::vector<Vec> basis;
        if (presentation_) {
            // Arrow ideal: basis elements that are non-trivial paths.
            const std::size_t nv = presentation_->vertices.size();
            for (std::size_t k = nv; k < dim_; ++k) basis.push_back(unit_vec(dim_, k));
        } else if (field_.is_rationals()) {
            // Characteristic-zero trace-form criterion: x in rad iff
            // trace(L_{x e_j}) = 0 for every j.
            Vec trl(dim_, Rat(0));
            for (std::size_t k = 0; k < dim_; ++k) {
                for (std::size_t mm = 0; mm < dim_; ++mm) trl[k] += table(k, mm)[mm];
            }
            Matrix sys(field_, dim_, dim_);
            for (std::size_t j = 0; j < dim_; ++j)
                for (std::size_t i = 0; i < dim_; ++i) {
                    Rat g(0);
                    const Vec& t = table(i, j);
                    for (std::size_t k = 0; k < dim_; ++k)
                        if (sgn(t[k]) != 0 && sgn(trl[k]) != 0) g += t[k] * trl[k];
                    sys.set(j, i, g);
                }
            Matrix ns = nullspace(sys);
            for (std::size_t i = 0; i < ns.rows(); ++i) basis.push_back(ns.row(i));
        } else {
            throw UnsupportedField(
                "radical of a structure-constant algebra over a prime field is not supported; "
                "provide a quiver presentation");
        }
        RadicalInfo info;
        info.basis = rref_rows(field_, basis, dim_);
        info.powers = radical_power_chain(*this, info.basis);
        radical_ = std::move(info);
    } catch (const UnsupportedField& e) {
        radical_error_ = e.what();
    }
}

const RadicalInfo& Algebra::radical() const {
    std::call_once(radical_flag_, [this] { compute_radical(); });
    if (radical_error_) throw UnsupportedField(*radical_error_);
    return *radical_;
}

const std::vector<Vec>& Algebra::center_basis() const {
    std::call_once(center_flag_, [this] {
        // [z, e_i] = 0 for all i, as a linear system in the coordinates of z.
        Matrix sys(field_, dim_ * dim_, dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t k = 0; k < dim_; ++k)
                for (std::size_t j = 0; j < dim_; ++j)
                    sys.set(i * dim_ + k, j, table(j, i)[k] - table(i, j)[k]);
        Matrix ns = nullspace(sys);
        std::vector<Vec> rows;
        for (std::size_t i = 0; i < ns.rows(); ++i) rows.push_back(ns.row(i));
        center_ = rref_rows(field_, rows, dim_);
    });
    return center_;
}

AlgebraPtr Algebra::opposite() const {
    if (auto back = opposite_back_.lock()) return back;
    std::call_once(opposite_flag_, [this] {
        const std::size_t n = dim_;
        std::vector<std::vector<Vec>> table(n, std::vector<Vec>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) table[i][j] = this->table(j, i);
        auto op = make(field_, labels_, std::move(table), unit_, idempotents_, std::nullopt);
        // The radical, center and generating set are the same subspaces.
        std::call_once(op->radical_flag_, [&] {
            try {
                const RadicalInfo& r = radical();
                op->radical_ = r;
            } catch (const UnsupportedField& e) {
                op->radical_error_ = e.what();
            }
        });
        op->opposite_back_ = shared_from_this();
        op->validate();
        opposite_ = op;
    });
    return opposite_;
}

AlgebraPtr Algebra::enveloping() const {
    std::call_once(enveloping_flag_, [this] {
        enveloping_ = tensor_product_algebra(opposite(), shared_from_this());
    });
    return enveloping_;
}

const std::vector<Vec>& Algebra::generating_set() const {
    std::call_once(generators_flag_, [this] {
        generators_ = idempotents_;
        std::vector<Vec> rad_basis, rad_sq;
        try {
            const RadicalInfo& r = radical();
            rad_basis = r.basis;
            if (r.powers.size() >= 2) rad_sq = r.powers[1];
        } catch (const UnsupportedField&) {
            // No radical: fall back to the full basis as a generating set.
            for (std::size_t k = 0; k < dim_; ++k) generators_.push_back(unit_vec(dim_, k));
            return;
        }
        // Lifts of a basis of rad/rad^2.
        std::vector<Vec> acc = rad_sq;
        std::size_t r0 = rank(Matrix::from_rows(field_, acc, dim_));
        for (const Vec& v : rad_basis) {
            acc.push_back(v);
            const std::size_t r1 = rank(Matrix::from_rows(field_, acc, dim_));
            if (r1 > r0) {
                generators_.push_back(v);
                r0 = r1;
            } else {
                acc.pop_back();
            }
        }
    });
    return generators_;
}

AlgebraPtr tensor_product_algebra(const AlgebraPtr& left, const AlgebraPtr& right) {
    if (left->field() != right->field()) throw AlgebraMismatch();
    const std::size_t n = left->dim(), m = right->dim(), nm = n * m;
    const Field field = left->field();

    std::vector<std::string> labels(nm);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            labels[pair_index(i, j, m)] = left->basis_labels()[i] + "⊗" + right->basis_labels()[j];

    auto tensor_vec = [&](const Vec& a, const Vec& b) {
        Vec v(nm, Rat(0));
        for (std::size_t i = 0; i < n; ++i) {
            if (sgn(a[i]) == 0) continue;
            for (std::size_t j = 0; j < m; ++j) {
                if (sgn(b[j]) == 0) continue;
                v[pair_index(i, j, m)] = field.mul(a[i], b[j]);
            }
        }
        return v;
    };

    std::vector<std::vector<Vec>> table(nm, std::vector<Vec>(nm));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < m; ++l)
                    table[pair_index(i, j, m)][pair_index(k, l, m)] =
                        tensor_vec(left->table(i, k), right->table(j, l));

    Vec unit = tensor_vec(left->unit(), right->unit());
    std::vector<Vec> idems;
    for (const Vec& ea : left->idempotents())
        for (const Vec& eb : right->idempotents()) idems.push_back(tensor_vec(ea, eb));

    auto t = Algebra::make(field, std::move(labels), std::move(table), std::move(unit),
                           std::move(idems), std::nullopt);

    // rad(L (x) R) = rad(L) (x) R + L (x) rad(R) for split basic factors.
    std::call_once(t->radical_flag_, [&] {
        try {
            const RadicalInfo& rl = left->radical();
            const RadicalInfo& rr = right->radical();
            std::vector<Vec> rows;
            for (const Vec& r : rl.basis)
                for (std::size_t j = 0; j < m; ++j) rows.push_back(tensor_vec(r, unit_vec(m, j)));
            for (std::size_t i = 0; i < n; ++i)
                for (const Vec& r : rr.basis) rows.push_back(tensor_vec(unit_vec(n, i), r));
            RadicalInfo info;
            info.basis = rref_rows(field, rows, nm);
            info.powers = radical_power_chain(*t, info.basis);
            t->radical_ = std::move(info);
        } catch (const UnsupportedField& e) {
            t->radical_error_ = e.what();
        }
    });
    t->validate();
    return t;
}

// ---------------------------------------------------------------------------
// Quiver presentations

namespace {

struct PathRec {
    std::size_t src, tgt;
    std::vector<std::size_t> arrows;
    std::size_t length() const { return arrows.size(); }
};

void check_name(const std::string& name) {
    if (name.empty()) throw ValidationError("vertex/arrow names must be nonempty");
    if (name.find('*') != std::string::npos || name.find("⊗") != std::string::npos)
        throw ValidationError("name '" + name + "' contains a reserved character");
}

} // namespace

AlgebraPtr Algebra::from_quiver(const QuiverPresentation& q, Field field) {
    if (q.nilpotency_bound < 2) throw ValidationError("nilpotency bound must be at least 2");
    if (q.vertices.empty()) throw ValidationError("quiver needs at least one vertex");

    std::map<std::string, std::size_t> vertex_index, arrow_index;
    std::set<std::string> names;
    for (std::size_t v = 0; v < q.vertices.size(); ++v) {
        check_name(q.vertices[v]);
        if (!names.insert(q.vertices[v]).second)
            throw ValidationError("duplicate name '" + q.vertices[v] + "'");
        vertex_index[q.vertices[v]] = v;
    }
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        const QuiverArrow& ar = q.arrows[a];
        check_name(ar.name);
        if (!names.insert(ar.name).second) throw ValidationError("duplicate name '" + ar.name + "'");
        if (!vertex_index.count(ar.source) || !vertex_index.count(ar.target))
            throw ValidationError("arrow '" + ar.name + "' references an undeclared vertex");
        arrow_index[ar.name] = a;
    }

    // Relations: resolve arrow names, check composability and parallelism.
    struct TermRec {
        std::vector<std::size_t> arrows;
        Rat coeff;
    };
    std::vector<std::vector<TermRec>> relations;
    for (const Relation& rel : q.relations) {
        if (rel.empty()) throw ValidationError("empty relation");
        std::vector<TermRec> terms;
        std::optional<std::pair<std::size_t, std::size_t>> ends;
        for (const RelationTerm& term : rel) {
            if (term.path.empty()) throw ValidationError("relation terms must be nonempty paths");
            TermRec t;
            t.coeff = field.normalize(term.coeff);
            std::size_t cur = 0;
            for (std::size_t s = 0; s < term.path.size(); ++s) {
                auto it = arrow_index.find(term.path[s]);
                if (it == arrow_index.end())
                    throw ValidationError("relation references unknown arrow '" + term.path[s] + "'");
                const QuiverArrow& ar = q.arrows[it->second];
                const std::size_t src = vertex_index[ar.source];
                if (s > 0 && src != cur)
                    throw ValidationError("relation path is not composable at arrow '" + term.path[s] + "'");
                cur = vertex_index[ar.target];
                t.arrows.push_back(it->second);
            }
            const std::size_t head = vertex_index[q.arrows[t.arrows.front()].source];
            if (!ends) ends = {head, cur};
            else if (ends->first != head || ends->second != cur)
                throw ValidationError("relation mixes non-parallel paths");
            terms.push_back(std::move(t));
        }
        relations.push_back(std::move(terms));
    }

    // Paths of length < N, ordered by length then lexicographically by arrow
    // index sequence.  Trivial paths come first, in vertex order.
    std::vector<PathRec> paths;
    for (std::size_t v = 0; v < q.vertices.size(); ++v) paths.push_back({v, v, {}});
    std::size_t layer_begin = 0, layer_end = paths.size();
    for (unsigned len = 1; len < q.nilpotency_bound; ++len) {
        for (std::size_t p = layer_begin; p < layer_end; ++p) {
            for (std::size_t a = 0; a < q.arrows.size(); ++a) {
                if (vertex_index[q.arrows[a].source] != paths[p].tgt) continue;
                PathRec np = paths[p];
                np.arrows.push_back(a);
                np.tgt = vertex_index[q.arrows[a].target];
                paths.push_back(std::move(np));
            }
        }
        layer_begin = layer_end;
        layer_end = paths.size();
        if (layer_begin == layer_end) break;
    }
    const std::size_t np = paths.size();
    std::map<std::vector<std::size_t>, std::size_t> path_of_seq;
    for (std::size_t p = 0; p < np; ++p)
        if (paths[p].length() > 0) path_of_seq[paths[p].arrows] = p;

    // Span of p * rho * q over all padding paths, with coordinates reversed so
    // that the RREF eliminates the largest path of each relation.
    std::vector<Vec> span_rows;
    for (const auto& rel : relations) {
        const std::size_t rel_src = vertex_index[q.arrows[rel.front().arrows.front()].source];
        const std::size_t rel_tgt = [&] {
            const auto& arrows = rel.front().arrows;
            return vertex_index[q.arrows[arrows.back()].target];
        }();
        for (std::size_t pl = 0; pl < np; ++pl) {
            if (paths[pl].tgt != rel_src) continue;
            for (std::size_t pr = 0; pr < np; ++pr) {
                if (paths[pr].src != rel_tgt) continue;
                Vec row(np, Rat(0));
                for (const TermRec& term : rel) {
                    const std::size_t total =
                        paths[pl].length() + term.arrows.size() + paths[pr].length();
                    if (total >= q.nilpotency_bound) continue;
                    std::vector<std::size_t> seq = paths[pl].arrows;
                    seq.insert(seq.end(), term.arrows.begin(), term.arrows.end());
                    seq.insert(seq.end(), paths[pr].arrows.begin(), paths[pr].arrows.end());
                    row[path_of_seq.at(seq)] += term.coeff;
                }
                for (Rat& x : row) x = field.normalize(x);
                if (!vec_is_zero(row)) {
                    std::reverse(row.begin(), row.end());
                    span_rows.push_back(std::move(row));
                }
            }
        }
    }
    QuotientSpace quotient(field, np, span_rows);

    // Surviving paths, ascending in the original path order.
    std::vector<std::size_t> basis_paths;
    for (std::size_t k = quotient.dim(); k-- > 0;)
        basis_paths.push_back(np - 1 - quotient.coset_basis()[k]);
    std::vector<std::ptrdiff_t> basis_pos(np, -1);
    for (std::size_t b = 0; b < basis_paths.size(); ++b) basis_pos[basis_paths[b]] = b;
    for (std::size_t v = 0; v < q.vertices.size(); ++v)
        if (basis_pos[v] < 0) throw InconsistentRelations(q.vertices[v]);

    const std::size_t dim = basis_paths.size();
    auto class_of_path = [&](std::size_t path_idx) {
        Vec rev(np, Rat(0));
        rev[np - 1 - path_idx] = 1;
        Vec qc = quotient.project(rev);
        Vec out(dim, Rat(0));
        for (std::size_t k = 0; k < dim; ++k) out[k] = qc[dim - 1 - k];
        return out;
    };

    std::vector<std::vector<Vec>> table(dim, std::vector<Vec>(dim, Vec(dim, Rat(0))));
    for (std::size_t bi = 0; bi < dim; ++bi) {
        const PathRec& pi = paths[basis_paths[bi]];
        for (std::size_t bj = 0; bj < dim; ++bj) {
            const PathRec& pj = paths[basis_paths[bj]];
            if (pi.tgt != pj.src) continue;
            if (pi.length() + pj.length() >= q.nilpotency_bound) continue;
            if (pi.length() + pj.length() == 0) {
                if (basis_paths[bi] == basis_paths[bj]) table[bi][bj][bi] = 1;
                continue;
            }
            std::vector<std::size_t> seq = pi.arrows;
            seq.insert(seq.end(), pj.arrows.begin(), pj.arrows.end());
            table[bi][bj] = class_of_path(path_of_seq.at(seq));
        }
    }

    std::vector<std::string> labels(dim);
    for (std::size_t b = 0; b < dim; ++b) {
        const PathRec& p = paths[basis_paths[b]];
        if (p.length() == 0) {
            labels[b] = q.vertices[p.src];
        } else {
            std::string s = q.arrows[p.arrows[0]].name;
            for (std::size_t k = 1; k < p.arrows.size(); ++k) s += "*" + q.arrows[p.arrows[k]].name;
            labels[b] = s;
        }
    }

    Vec unit(dim, Rat(0));
    std::vector<Vec> idems;
    for (std::size_t v = 0; v < q.vertices.size(); ++v) {
        unit[v] = 1;
        idems.push_back(unit_vec(dim, v));
    }

    auto a = make(field, std::move(labels), std::move(table), std::move(unit), std::move(idems), q);
    a->validate();
    return a;
}

} // namespace syzlab
