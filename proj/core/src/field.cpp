#include "syzlab/field.hpp"

#include <atomic>
#include <cctype>
#include <iostream>

namespace syzlab {

namespace {

void default_warning(const std::string& message) {
    std::cerr << "warning: " << message << "\n";
}

std::atomic<WarningHandler> g_warning_handler{&default_warning};

bool is_prime(const mpz_class& p) {
    if (p < 2) return false;
    if (p == 2) return true;
    if (mpz_even_p(p.get_mpz_t())) return false;
    mpz_class d = 3;
    while (d * d <= p) {
        if (p % d == 0) return false;
        d += 2;
    }
    return true;
}

bool valid_scalar_literal(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (s[i] == '-' || s[i] == '+') ++i;
    std::size_t digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) { ++i; ++digits; }
    if (digits == 0) return false;
    if (i == s.size()) return true;
    if (s[i] != '/') return false;
    ++i;
    digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) { ++i; ++digits; }
    return digits > 0 && i == s.size();
}

} // namespace

WarningHandler set_warning_handler(WarningHandler handler) {
    return g_warning_handler.exchange(handler ? handler : &default_warning);
}

void emit_warning(const std::string& message) {
    g_warning_handler.load()(message);
}

Field Field::prime(const mpz_class& p) {
    if (!is_prime(p)) {
        throw UnsupportedField("characteristic " + p.get_str() + " is not prime");
    }
    if (p <= 3) {
        emit_warning("prime field F_" + p.get_str() +
                     " has too few elements for the randomized invertibility search; "
                     "exhaustive fallbacks will be used");
    }
    Field f;
    f.kind_ = FieldKind::PrimeField;
    f.p_ = p;
    return f;
}

Rat Field::normalize(Rat v) const {
    v.canonicalize();
    if (kind_ == FieldKind::Rationals) return v;
    // Residue representative in [0, p) with denominator 1.
    mpz_class num = v.get_num();
    mpz_class den = v.get_den();
    if (den != 1) {
        mpz_class dinv;
        mpz_class dmod = den % p_;
        if (dmod < 0) dmod += p_;
        if (dmod == 0 || mpz_invert(dinv.get_mpz_t(), dmod.get_mpz_t(), p_.get_mpz_t()) == 0) {
            throw UnsupportedField("denominator " + den.get_str() + " is not invertible mod " +
                                   p_.get_str());
        }
        num *= dinv;
    }
    num %= p_;
    if (num < 0) num += p_;
    return Rat(num);
}

Rat Field::inv(const Rat& a) const {
    if (is_zero(a)) throw Error("division by zero");
    if (kind_ == FieldKind::Rationals) return Rat(1) / a;
    mpz_class r;
    mpz_class num = a.get_num();
    if (mpz_invert(r.get_mpz_t(), num.get_mpz_t(), p_.get_mpz_t()) == 0) {
        throw Error("element " + num.get_str() + " not invertible mod " + p_.get_str());
    }
    return Rat(r);
}

Rat Field::parse(const std::string& text) const {
    if (!valid_scalar_literal(text)) {
        throw ParseError("invalid scalar literal '" + text + "'");
    }
    Rat v;
    if (mpq_set_str(v.get_mpq_t(), text.c_str(), 10) != 0) {
        throw ParseError("invalid scalar literal '" + text + "'");
    }
    if (v.get_den() == 0) {
        throw ParseError("zero denominator in scalar literal '" + text + "'");
    }
    return normalize(v);
}

std::string Field::to_string(const Rat& v) const {
    if (kind_ == FieldKind::PrimeField) return v.get_num().get_str();
    return v.get_str();
}

} // namespace syzlab
