#ifndef SYZLAB_BIMODULE_HPP
#define SYZLAB_BIMODULE_HPP

#include "syzlab/homology.hpp"

namespace syzlab {

/// Algebra automorphism, as its matrix on the basis (row i = image of e_i).
struct Automorphism {
    AlgebraPtr algebra;
    Matrix matrix;

    /// Validates invertibility, unit fixing and multiplicativity.
    static Automorphism checked(AlgebraPtr algebra, Matrix matrix);
    static Automorphism identity(const AlgebraPtr& algebra);

    Vec apply(const Vec& v) const { return matrix.apply_row(v); }
    /// (this o inner)(a) = this(inner(a))
    Automorphism compose_after(const Automorphism& inner) const;
    Automorphism inverse() const;
    bool is_identity() const;
};

/// An (A,B)-bimodule, realized as a right module over opposite(A) (x) B so
/// that the whole module layer applies unchanged.  For A = B the carrier
/// algebra is the enveloping algebra of A.
struct Bimodule {
    AlgebraPtr left;  ///< A
    AlgebraPtr right; ///< B
    Module carrier;   ///< over opposite(A) (x) B

    const AlgebraPtr& carrier_algebra() const { return carrier.algebra(); }
    /// x . b = x . (1 (x) b): right B-module.
    Module right_restriction() const;
    /// a . x = x . (a (x) 1): right module over opposite(A).
    Module left_restriction() const;
    bool left_right_projective() const;
};

/// A as an (A,A)-bimodule.
Bimodule regular_bimodule(const AlgebraPtr& a);
/// A with the right action twisted: a . x . b = a x sigma(b).
Bimodule twisted_bimodule(const AlgebraPtr& a, const Automorphism& sigma);

/// sigma is inner iff the sigma-twisted bimodule is isomorphic to the regular one.
bool is_inner(const Automorphism& sigma, std::uint64_t seed = 0);
/// Least m <= bound with sigma^m inner; nullopt when none.
std::optional<std::size_t> out_order(const Automorphism& sigma, std::size_t bound,
                                     std::uint64_t seed = 0);

/// Omega^n of the regular bimodule over the enveloping algebra (n >= 1);
/// left-right projectivity is asserted.
Bimodule bimodule_syzygy(const AlgebraPtr& a, std::size_t n);
/// Omega^{-n} of the regular bimodule (n >= 1).
Bimodule bimodule_cosyzygy(const AlgebraPtr& a, std::size_t n);

/// m (x)_A x as a right module over the right-hand algebra of x.
Module tensor_with_bimodule(const Module& m, const Bimodule& x);
/// x (x)_B y for x an (A,B)- and y a (B,C)-bimodule.
Bimodule tensor_bimodules(const Bimodule& x, const Bimodule& y);

struct StableMoritaClause {
    std::size_t product_dim = 0;
    bool regular_summand = false;       ///< the regular bimodule splits off
    bool complement_projective = false; ///< the Krull-Schmidt complement is projective
    std::vector<std::size_t> complement_multiplicities;
    bool passed() const { return regular_summand && complement_projective; }
};

struct StableMoritaReport {
    bool x_left_right_projective = false;
    bool y_left_right_projective = false;
    StableMoritaClause xy; ///< X (x)_B Y against the regular (A,A)-bimodule
    StableMoritaClause yx; ///< Y (x)_A X against the regular (B,B)-bimodule
    bool passed() const {
        return x_left_right_projective && y_left_right_projective && xy.passed() && yx.passed();
    }
};

/// Checks the defining clauses of a stable equivalence of Morita type for the
/// pair (x, y): left-right projectivity and both product decompositions
/// "regular plus projective".
StableMoritaReport stable_morita_check(const Bimodule& x, const Bimodule& y,
                                       std::uint64_t seed = 0);

} // namespace syzlab

#endif
