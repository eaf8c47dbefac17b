#ifndef SYZLAB_MODULE_HPP
#define SYZLAB_MODULE_HPP

#include <cstdint>
#include <functional>
#include <optional>

#include "syzlab/algebra.hpp"

namespace syzlab {

/// A right module over a basic algebra, given by one action matrix per
/// algebra basis element in the row-vector convention: v |-> v * X_i.
/// The zero module (dim 0, empty matrices) is a first-class value.
class Module {
public:
    Module() = default;

    /// Validates the unit law and full multiplicativity; for untrusted input.
    static Module checked(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> action);
    /// For internal constructions that are correct by construction.
    static Module unchecked(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> action);

    const AlgebraPtr& algebra() const { return algebra_; }
    std::size_t dim() const { return dim_; }
    const Matrix& action(std::size_t i) const { return action_[i]; }
    /// Action of an arbitrary algebra element (coefficient vector).
    Matrix action_of(const Vec& element) const;

    /// Unit acts as identity; X_i X_j = sum_k c_ij^k X_k for all pairs.
    void validate() const;

    bool is_zero_module() const { return dim_ == 0; }

private:
    AlgebraPtr algebra_;
    std::size_t dim_ = 0;
    std::vector<Matrix> action_;
};

/// A homomorphism of right modules, as a (source dim) x (target dim) matrix
/// acting on row vectors.
struct ModuleMap {
    Module source;
    Module target;
    Matrix matrix;

    /// X_i^source F = F X_i^target for every algebra generator.
    bool is_intertwiner() const;
};

Module zero_module(const AlgebraPtr& a);
Module regular_module(const AlgebraPtr& a);
/// 1-dimensional top of the i-th projective: e_i acts as 1, the radical as 0.
Module simple_module(const AlgebraPtr& a, std::size_t i);
/// e_i A, realized inside the regular module (cached per algebra).
Module indecomposable_projective(const AlgebraPtr& a, std::size_t i);

Module direct_sum(const Module& m, const Module& n);
Module direct_sum(const AlgebraPtr& a, const std::vector<Module>& parts);

struct SubmoduleResult {
    Module module;
    ModuleMap inclusion;
};

/// Smallest submodule containing the given vectors; basis rows are the RREF
/// of the closure (first-pivot-first tie-breaking).
SubmoduleResult submodule_span(const Module& m, const std::vector<Vec>& generators);
SubmoduleResult radical_submodule(const Module& m);
SubmoduleResult socle_submodule(const Module& m);

/// Basis of Hom_A(m, n), solved from the intertwining constraints against the
/// algebra's generating set.  Deterministic RREF-ordered basis.
std::vector<Matrix> hom_basis(const Module& m, const Module& n);

/// Searches sum_i t_i basis[i] for a combination of rank `target_rank`.
/// Over the rationals a full grid of side target_rank + 1 is decisive (a
/// nonzero polynomial of degree <= target_rank cannot vanish on the grid);
/// unit vectors and the all-ones point are tried first.  Over F_p, 64 seeded
/// random draws are followed by exhaustive enumeration when p^h <= 2^20,
/// otherwise FiniteFieldInconclusive; absence over an infeasibly large
/// rational grid raises SearchSpaceExceeded after seeded sampling.
std::optional<Matrix> search_rank_combination(const std::vector<Matrix>& basis,
                                              std::size_t target_rank, std::uint64_t seed);

/// Invertible intertwiner if one exists; std::nullopt otherwise.
std::optional<ModuleMap> is_isomorphic(const Module& m, const Module& n, std::uint64_t seed = 0);

/// One step of a minimal projective resolution.
struct CoverData {
    Module projective;                      ///< direct sum of e_i A, grouped by i
    std::vector<std::size_t> multiplicities;
    ModuleMap cover_map;                    ///< projective ->> m
    Module kernel;
    ModuleMap kernel_inclusion;             ///< kernel -> projective, lands in rad
};

CoverData projective_cover(const Module& m);

bool is_projective(const Module& m);

struct StripResult {
    Module core;                        ///< no projective direct summands remain
    std::vector<std::size_t> stripped;  ///< copies of e_i A split off, per i
};

/// Splits off projective (= injective) direct summands over a self-injective
/// algebra.  A copy of e_i A embeds splitly iff some element of M e_i is not
/// annihilated by the socle of e_i A; the split is realized by an explicit
/// retraction.
StripResult strip_projectives(const Module& m);

/// k-linear dual as a right module over the opposite algebra.
Module dual_module(const Module& m);

/// Conjugated copy of m (s invertible); returns the module with action
/// s^-1 X s together with the isomorphism witness m -> result.
std::pair<Module, ModuleMap> change_basis(const Module& m, const Matrix& s);

} // namespace syzlab

#endif
