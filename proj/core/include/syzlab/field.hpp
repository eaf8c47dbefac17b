#ifndef SYZLAB_FIELD_HPP
#define SYZLAB_FIELD_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "syzlab/errors.hpp"

namespace syzlab {

/// Exact scalar.  Over the rationals this is a reduced fraction with positive
/// denominator; over a prime field it is an integer residue in [0, p) with
/// denominator 1.  Normalization is the job of the owning Field.
using Rat = mpq_class;
using Vec = std::vector<Rat>;

enum class FieldKind { Rationals, PrimeField };

/// Arithmetic context: the rationals or a prime field F_p.
///
/// Value type, cheap to copy and compare.  All operations assume normalized
/// inputs and produce normalized outputs.
class Field {
public:
    Field() : kind_(FieldKind::Rationals), p_(0) {}

    static Field rationals() { return Field(); }

    /// Builds F_p.  Checks primality by trial division and warns (through the
    /// warning channel) when p <= 3, since the randomized invertibility search
    /// needs more than three field elements to be effective.
    static Field prime(const mpz_class& p);

    FieldKind kind() const { return kind_; }
    bool is_rationals() const { return kind_ == FieldKind::Rationals; }
    const mpz_class& characteristic() const { return p_; }

    bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    Rat normalize(Rat v) const;
    Rat add(const Rat& a, const Rat& b) const { return normalize(a + b); }
    Rat sub(const Rat& a, const Rat& b) const { return normalize(a - b); }
    Rat mul(const Rat& a, const Rat& b) const { return normalize(a * b); }
    Rat neg(const Rat& a) const { return normalize(-a); }
    Rat inv(const Rat& a) const;
    Rat div(const Rat& a, const Rat& b) const { return mul(a, inv(b)); }
    static bool is_zero(const Rat& a) { return sgn(a) == 0; }

    Rat zero() const { return Rat(0); }
    Rat one() const { return Rat(1); }
    Rat from_int(long v) const { return normalize(Rat(v)); }

    /// Parses "a" or "a/b".  Over F_p the value is reduced mod p, so both
    /// decimal residues and fractions with unit-invertible denominator parse.
    Rat parse(const std::string& text) const;
    std::string to_string(const Rat& v) const;

private:
    FieldKind kind_;
    mpz_class p_;
};

/// Warning channel: non-fatal diagnostics (e.g. tiny prime fields).  The
/// default handler writes to stderr; tests and embedders may replace it.
using WarningHandler = void (*)(const std::string&);
WarningHandler set_warning_handler(WarningHandler handler);
void emit_warning(const std::string& message);

} // namespace syzlab

#endif
