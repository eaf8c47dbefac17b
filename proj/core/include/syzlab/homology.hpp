#ifndef SYZLAB_HOMOLOGY_HPP
#define SYZLAB_HOMOLOGY_HPP

#include "syzlab/module.hpp"

namespace syzlab {

/// Minimal projective resolution data: steps[t] is the projective cover of
/// the t-th syzygy (with Omega^0 = base), so steps[t].kernel = Omega^{t+1}.
struct Resolution {
    Module base;
    std::size_t horizon = 0;
    std::vector<CoverData> steps;

    std::vector<std::size_t> projective_dims() const;
    /// dims of Omega^1 .. Omega^{horizon+1}
    std::vector<std::size_t> syzygy_dims() const;
};

/// Kernel of the projective cover.
Module syzygy(const Module& m);
/// Omega^{-1} via duality over the opposite algebra; requires a
/// self-injective algebra.  Validated by a stripped round trip.
Module cosyzygy(const Module& m);
/// Omega^n for any integer n (negative values through cosyzygy).
Module syzygy_power(const Module& m, long n);

Resolution resolve(const Module& m, std::size_t horizon);

/// dim Ext^n(m, n): stable homomorphisms from the n-th syzygy, i.e. the Hom
/// space modulo maps that lift through the projective cover of the target.
std::size_t ext_dim(const Module& m, const Module& n, std::size_t degree);

enum class ComplexityVerdict { FiniteProjDim, BoundedNonzero, PolynomialDegree, Inconclusive };

struct ComplexityEstimate {
    std::size_t horizon = 0;
    std::vector<std::size_t> dims; ///< dim P^t for t = 0..horizon
    ComplexityVerdict verdict = ComplexityVerdict::Inconclusive;
    /// FiniteProjDim: the projective dimension.  BoundedNonzero: the stable
    /// value.  PolynomialDegree: the fitted degree g (complexity ~ g + 1).
    std::size_t value = 0;
};

/// Window-based growth classification of the dimension sequence; the verdicts
/// are evidence over the computed horizon, never proofs.
ComplexityEstimate complexity_estimate(const Resolution& r);

enum class PeriodOutcome { Periodic, Projective, HorizonExhausted };

struct PeriodReport {
    PeriodOutcome outcome = PeriodOutcome::HorizonExhausted;
    std::size_t period = 0;            ///< Periodic: i - j
    std::size_t hit_i = 0, hit_j = 0;  ///< first isomorphic pair Omega^j = Omega^i, i > j
    std::optional<ModuleMap> witness;  ///< Omega^j -> Omega^i
    bool base_iso_verified = false;    ///< M = Omega^period M checked directly
    std::size_t distinct = 0;          ///< HorizonExhausted: pairwise non-isomorphic syzygies seen
    std::vector<std::size_t> syzygy_dims; ///< dims of the stripped Omega^0, Omega^1, ...
};

/// Iterates the syzygy of the projective-free part of m, comparing each new
/// syzygy against every earlier one of the same dimension (the pigeonhole
/// grouping).  On a hit the direct isomorphism M = Omega^{i-j} M is verified
/// as well.  Requires a self-injective algebra.
PeriodReport detect_period(const Module& m, std::size_t horizon, std::uint64_t seed = 0);

} // namespace syzlab

#endif
