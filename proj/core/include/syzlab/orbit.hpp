#ifndef SYZLAB_ORBIT_HPP
#define SYZLAB_ORBIT_HPP

#include "syzlab/bimodule.hpp"

namespace syzlab {

enum class OrbitCertificate { OpenSimpleBasic, OpenExtVanishing, Unknown };

/// Conjugation-orbit statistics of a d-dimensional module: the orbit has
/// dimension d^2 - dim End(M).  Openness is only ever certified, never
/// refuted: d = 1 (simples over a basic algebra) and Ext^1(M, M) = 0 are the
/// two computable certificates.
struct OrbitStats {
    std::size_t dim = 0;
    std::size_t end_dim = 0;
    std::size_t orbit_dim = 0;
    OrbitCertificate certificate = OrbitCertificate::Unknown;
};

OrbitStats orbit_stats(const Module& m);

struct DegenerationObstruction {
    std::string test_label;
    std::size_t hom_to_source = 0; ///< dim Hom(X, M)
    std::size_t hom_to_target = 0; ///< dim Hom(X, N) — smaller, hence the obstruction
};

struct DegenerationVerdict {
    std::optional<DegenerationObstruction> obstruction;
    std::size_t passed_tests = 0;
};

/// Necessary-condition test for "M degenerates to N": upper semicontinuity
/// forces dim Hom(X, N) >= dim Hom(X, M) for every test module X.  The first
/// violation is returned as an obstruction; no positive claims are made.
/// With an empty test set the defaults are all simples, all indecomposable
/// projectives, M and N.
DegenerationVerdict degeneration_obstruction(
    const Module& m, const Module& n,
    const std::vector<std::pair<std::string, Module>>& tests = {});

/// Attempts to recognize a bimodule of dimension dim A as a twisted bimodule:
/// both restrictions must be regular; the left action is then transported
/// through a right-module isomorphism onto a validated automorphism sigma
/// with M isomorphic to the sigma-twisted bimodule.
std::optional<Automorphism> twist_recognize(const Bimodule& m, std::uint64_t seed = 0);

struct RegularDegenerationEntry {
    std::string label;
    bool right_restriction_regular = false;
    bool left_restriction_regular = false;
    std::optional<Automorphism> twist;
    std::size_t orbit_dim = 0;
    bool orbit_dims_equal = false;
    bool isomorphic_to_regular = false;
    std::string verdict; ///< restriction-not-regular | improper-isomorphic |
                         ///< not-a-proper-degeneration | inconclusive
};

struct RegularDegenerationReport {
    std::size_t regular_orbit_dim = 0;  ///< (dim A)^2 - dim Z(A)
    std::vector<RegularDegenerationEntry> entries;
};

/// Desk-scale verifier that the regular bimodule admits no proper
/// degeneration from the supplied candidates: (1) both restrictions regular,
/// (2) twisted-bimodule recognition, (3) orbit dimensions agree with
/// (dim A)^2 - dim Z(A), (4) isomorphism with the regular bimodule decides
/// proper versus improper.
RegularDegenerationReport regular_degeneration_check(
    const AlgebraPtr& a, const std::vector<std::pair<std::string, Bimodule>>& candidates,
    std::uint64_t seed = 0);

} // namespace syzlab

#endif
