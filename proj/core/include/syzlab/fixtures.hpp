#ifndef SYZLAB_FIXTURES_HPP
#define SYZLAB_FIXTURES_HPP

#include "syzlab/bimodule.hpp"

namespace syzlab {

/// k<x,y>/(x^2, y^2, q xy + yx), dim 4 with basis {e, x, y, x*y}.  The
/// parameter q must be a unit; the syzygy of the cyclic right module
/// generated by x + a y is generated by x + qa y.
AlgebraPtr quantum_exterior(const Field& field, const Rat& q);

/// k[x]/(x^n), dim n, basis {e, x, x*x, ...}.
AlgebraPtr truncated_polynomial(const Field& field, unsigned n);

/// Two vertices e1, e2 and one arrow a: e1 -> e2; hereditary of dimension 3.
AlgebraPtr two_point_hereditary(const Field& field);

/// x |-> t x on k[x]/(x^n), i.e. diag(1, t, t^2, ...) on the path basis.
Automorphism scaling_twist(const AlgebraPtr& a, const Rat& t);

/// Submodule of the regular module generated by one element.
Module cyclic_submodule(const AlgebraPtr& a, const Vec& generator);

/// Parses a linear combination of basis labels, e.g. "x+y", "x+2*y",
/// "x-1/2*x*y".  Coefficients are scalar literals; terms are separated by
/// top-level + and -.
Vec parse_element(const AlgebraPtr& a, const std::string& expr);

} // namespace syzlab

#endif
