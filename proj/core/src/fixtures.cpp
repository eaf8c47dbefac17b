#include "syzlab/fixtures.hpp"

#include <cctype>

namespace syzlab {

AlgebraPtr quantum_exterior(const Field& field, const Rat& q) {
    Rat qn = field.normalize(q);
    if (sgn(qn) == 0) throw ValidationError("quantum exterior algebra needs an invertible parameter");
    QuiverPresentation p;
    p.vertices = {"e"};
    p.arrows = {{"x", "e", "e"}, {"y", "e", "e"}};
    p.relations = {
        {{{"x", "x"}, Rat(1)}},
        {{{"y", "y"}, Rat(1)}},
        {{{"x", "y"}, qn}, {{"y", "x"}, Rat(1)}},
    };
    p.nilpotency_bound = 3;
    return Algebra::from_quiver(p, field);
}

AlgebraPtr truncated_polynomial(const Field& field, unsigned n) {
    if (n < 2) throw ValidationError("truncated polynomial algebra needs n >= 2");
    QuiverPresentation p;
    p.vertices = {"e"};
    p.arrows = {{"x", "e", "e"}};
    p.nilpotency_bound = n;
    return Algebra::from_quiver(p, field);
}

AlgebraPtr two_point_hereditary(const Field& field) {
    QuiverPresentation p;
    p.vertices = {"e1", "e2"};
    p.arrows = {{"a", "e1", "e2"}};
    p.nilpotency_bound = 2;
    return Algebra::from_quiver(p, field);
}

Automorphism scaling_twist(const AlgebraPtr& a, const Rat& t) {
    const Field& field = a->field();
    Rat tn = field.normalize(t);
    if (sgn(tn) == 0) throw ValidationError("scaling twist needs an invertible parameter");
    Matrix m(field, a->dim(), a->dim());
    Rat power = field.one();
    for (std::size_t k = 0; k < a->dim(); ++k) {
        m.set(k, k, power);
        power = field.mul(power, tn);
    }
    return Automorphism::checked(a, std::move(m));
}

Module cyclic_submodule(const AlgebraPtr& a, const Vec& generator) {
    return submodule_span(regular_module(a), {generator}).module;
}

namespace {

std::string strip_spaces(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

} // namespace

Vec parse_element(const AlgebraPtr& a, const std::string& expr) {
    const Field& field = a->field();
    const std::string s = strip_spaces(expr);
    if (s.empty()) throw ParseError("empty element expression");
    Vec out(a->dim(), Rat(0));

    std::size_t pos = 0;
    while (pos < s.size()) {
        Rat sign(1);
        if (s[pos] == '+') {
            ++pos;
        } else if (s[pos] == '-') {
            sign = -1;
            ++pos;
        }
        std::size_t end = pos;
        while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
        std::string term = s.substr(pos, end - pos);
        if (term.empty()) throw ParseError("dangling sign in element expression '" + expr + "'");
        pos = end;

        // Optional leading "coefficient*": the prefix before the first '*' is a
        // coefficient only when it parses as a scalar literal ("2*x", "1/2*x*y").
        Rat coeff = field.one();
        std::string label = term;
        const std::size_t star = term.find('*');
        if (star != std::string::npos) {
            const std::string head = term.substr(0, star);
            try {
                coeff = field.parse(head);
                label = term.substr(star + 1);
            } catch (const ParseError&) {
                label = term;
            }
        }
        bool found = false;
        for (std::size_t k = 0; k < a->dim(); ++k) {
            if (a->basis_labels()[k] == label) {
                out[k] = field.add(out[k], field.mul(sign, coeff));
                found = true;
                break;
            }
        }
        if (!found) {
            // A bare scalar term is a multiple of the unit.
            try {
                Rat c = field.parse(label);
                Vec u = vec_scaled(field, a->unit(), field.mul(sign, c));
                out = vec_add(field, out, vec_scaled(field, u, coeff));
            } catch (const ParseError&) {
                throw ParseError("unknown basis label '" + label + "' in element expression '" +
                                 expr + "'");
            }
        }
    }
    return out;
}

} // namespace syzlab
