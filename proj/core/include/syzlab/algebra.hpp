#ifndef SYZLAB_ALGEBRA_HPP
#define SYZLAB_ALGEBRA_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "syzlab/matrix.hpp"

namespace syzlab {

struct QuiverArrow {
    std::string name;
    std::string source;
    std::string target;
};

struct RelationTerm {
    std::vector<std::string> path; ///< arrow names, composed left to right
    Rat coeff;
};

/// A relation is a linear combination of parallel paths (same source, same target).
using Relation = std::vector<RelationTerm>;

struct QuiverPresentation {
    std::vector<std::string> vertices;
    std::vector<QuiverArrow> arrows;
    std::vector<Relation> relations;
    /// All paths of length >= nilpotency_bound lie in the ideal.  Guarantees a
    /// finite-dimensional quotient regardless of the relation list.
    unsigned nilpotency_bound = 2;
};

struct RadicalInfo {
    std::vector<Vec> basis;               ///< basis of rad(A), canonical RREF rows
    std::vector<std::vector<Vec>> powers; ///< powers[k] = basis of rad^{k+1}; trailing entry nonzero
    /// Least m with rad^m = 0.
    std::size_t nilpotency_index() const { return powers.size() + 1; }
};

struct ModuleLayerCache; // owned by the module layer (module.cpp)

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// A finite-dimensional basic algebra given by structure constants over an
/// exact field, together with its unit and a complete family of orthogonal
/// primitive idempotents.  Immutable after construction; derived data
/// (radical, center, opposite, enveloping algebra, ...) is computed lazily
/// behind single-assignment slots that are safe for concurrent reads.
class Algebra : public std::enable_shared_from_this<Algebra> {
public:
    /// Validates everything eagerly: table shape, associativity, unit law,
    /// idempotent family, and basicness (the latter when the radical is
    /// computable for this field; otherwise a warning is emitted).
    static AlgebraPtr from_structure_constants(Field field, std::vector<std::string> labels,
                                               std::vector<std::vector<Vec>> table, Vec unit,
                                               std::vector<Vec> idempotents);

    /// Path-algebra quotient: basis = representatives of paths of length
    /// < nilpotency_bound modulo the span of all padded relations, reduced by
    /// eliminating the largest path (degree, then lexicographic) of each
    /// relation.  Trivial paths become the idempotents.
    static AlgebraPtr from_quiver(const QuiverPresentation& q, Field field);

    const Field& field() const { return field_; }
    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& basis_labels() const { return labels_; }
    const Vec& unit() const { return unit_; }
    const std::vector<Vec>& idempotents() const { return idempotents_; }
    /// Coefficient vector of e_i * e_j.
    const Vec& table(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
    const std::optional<QuiverPresentation>& presentation() const { return presentation_; }

    Vec multiply(const Vec& a, const Vec& b) const;
    /// coords(a * x) = coords(x) * left_mult(a)   (row-vector convention)
    Matrix left_mult(const Vec& a) const;
    /// coords(x * a) = coords(x) * right_mult(a)
    Matrix right_mult(const Vec& a) const;

    /// Jacobson radical with its power filtration.  Quiver-presented algebras
    /// use the arrow ideal; structure-constant algebras over the rationals use
    /// the characteristic-zero trace-form criterion.  Throws UnsupportedField
    /// for structure-constant algebras over a prime field.
    const RadicalInfo& radical() const;
    bool is_semisimple() const { return radical().basis.empty(); }

    /// Basis of the center, found by solving [z, e_i] = 0 for all i.
    const std::vector<Vec>& center_basis() const;

    /// Opposite algebra (transposed table).  Involutive on the nose:
    /// a->opposite()->opposite() is `a` again.
    AlgebraPtr opposite() const;

    /// Enveloping algebra opposite() (x) *this, with basis pairs indexed by
    /// pair_index(i, j, dim()).
    AlgebraPtr enveloping() const;

    /// Idempotents plus lifts of a basis of rad/rad^2; generates the algebra.
    const std::vector<Vec>& generating_set() const;

    /// True when the dual of the left regular module is projective.
    /// Implemented in the module layer.
    bool is_self_injective() const;

    ModuleLayerCache& module_cache() const;

private:
    Algebra() = default;
    void validate() const;
    void compute_radical() const;
    static std::shared_ptr<Algebra> make(Field field, std::vector<std::string> labels,
                                         std::vector<std::vector<Vec>> table, Vec unit,
                                         std::vector<Vec> idempotents,
                                         std::optional<QuiverPresentation> pres);

    friend AlgebraPtr tensor_product_algebra(const AlgebraPtr&, const AlgebraPtr&);

    Field field_;
    std::size_t dim_ = 0;
    std::vector<std::string> labels_;
    std::vector<Vec> table_; ///< table_[i * dim + j] = e_i * e_j
    Vec unit_;
    std::vector<Vec> idempotents_;
    std::optional<QuiverPresentation> presentation_;

    mutable std::once_flag radical_flag_;
    mutable std::optional<RadicalInfo> radical_;
    mutable std::optional<std::string> radical_error_;

    mutable std::once_flag center_flag_;
    mutable std::vector<Vec> center_;

    mutable std::once_flag opposite_flag_;
    mutable AlgebraPtr opposite_;
    mutable std::weak_ptr<const Algebra> opposite_back_;

    mutable std::once_flag enveloping_flag_;
    mutable AlgebraPtr enveloping_;

    mutable std::once_flag generators_flag_;
    mutable std::vector<Vec> generators_;

    mutable std::once_flag module_cache_flag_;
    mutable std::shared_ptr<ModuleLayerCache> module_cache_;
};

/// left (x)_k right with the pair basis (i, j) -> i * right->dim() + j.
/// The radical is seeded as rad(L) (x) R + L (x) rad(R) whenever both factor
/// radicals are available (valid for split basic algebras).
AlgebraPtr tensor_product_algebra(const AlgebraPtr& left, const AlgebraPtr& right);

inline std::size_t pair_index(std::size_t i, std::size_t j, std::size_t right_dim) {
    return i * right_dim + j;
}

} // namespace syzlab

#endif
