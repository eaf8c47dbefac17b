#include "syzlab/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace syzlab {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

json field_to_json(const Field& f) {
    if (f.is_rationals()) return json{{"type", "Q"}};
    return json{{"type", "Fp"}, {"p", f.characteristic().get_str()}};
}

Field field_from_json(const json& j) {
    if (!j.is_object() || !j.contains("type"))
        throw ParseError("field spec must be an object with a \"type\"");
    const std::string type = j.at("type").get<std::string>();
    if (type == "Q") return Field::rationals();
    if (type == "Fp") {
        if (!j.contains("p")) throw ParseError("prime field spec needs \"p\"");
        const json& p = j.at("p");
        mpz_class pz;
        if (p.is_string()) {
            pz = mpz_class(p.get<std::string>());
        } else if (p.is_number_integer()) {
            pz = mpz_class(std::to_string(p.get<long long>()));
        } else {
            throw ParseError("\"p\" must be an integer or a decimal string");
        }
        return Field::prime(pz);
    }
    throw ParseError("unknown field type '" + type + "'");
}

Rat parse_coeff(const Field& field, const std::string& text,
                const std::optional<std::string>& q_binding) {
    if (text == "q" || text == "-q" || text == "1/q" || text == "-1/q") {
        if (!q_binding)
            throw ParseError("coefficient '" + text + "' needs a value for q (pass --q)");
        Rat q = field.parse(*q_binding);
        if (sgn(q) == 0) throw ParseError("q must be invertible");
        if (text == "q") return q;
        if (text == "-q") return field.neg(q);
        if (text == "1/q") return field.inv(q);
        return field.neg(field.inv(q));
    }
    return field.parse(text);
}

Vec parse_vec(const Field& field, const json& j, std::size_t dim, const char* what) {
    if (!j.is_array() || j.size() != dim)
        throw ParseError(std::string(what) + " must be an array of " + std::to_string(dim) +
                         " scalars");
    Vec v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = field.parse(j[i].get<std::string>());
    return v;
}

json vec_to_json(const Field& field, const Vec& v) {
    json out = json::array();
    for (const Rat& x : v) out.push_back(field.to_string(x));
    return out;
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(vec_to_json(m.field(), m.row(i)));
    return rows;
}

Matrix matrix_from_json(const Field& field, const json& j, std::size_t rows, std::size_t cols,
                        const char* what) {
    if (!j.is_array() || j.size() != rows)
        throw ParseError(std::string(what) + " must have " + std::to_string(rows) + " rows");
    Matrix m(field, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) m.set_row(i, parse_vec(field, j[i], cols, what));
    return m;
}

json algebra_to_json(const AlgebraPtr& a) {
    json out;
    out["field"] = field_to_json(a->field());
    if (a->presentation()) {
        const QuiverPresentation& p = *a->presentation();
        json quiver;
        quiver["vertices"] = p.vertices;
        json arrows = json::array();
        for (const QuiverArrow& ar : p.arrows) arrows.push_back({ar.name, ar.source, ar.target});
        quiver["arrows"] = arrows;
        json relations = json::array();
        for (const Relation& rel : p.relations) {
            json terms = json::array();
            for (const RelationTerm& t : rel)
                terms.push_back({{"path", t.path}, {"coeff", a->field().to_string(t.coeff)}});
            relations.push_back(terms);
        }
        quiver["relations"] = relations;
        quiver["nilpotency"] = p.nilpotency_bound;
        out["quiver"] = quiver;
        return out;
    }
    out["basis"] = a->basis_labels();
    json table = json::array();
    for (std::size_t i = 0; i < a->dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < a->dim(); ++j) row.push_back(vec_to_json(a->field(), a->table(i, j)));
        table.push_back(row);
    }
    out["table"] = table;
    out["unit"] = vec_to_json(a->field(), a->unit());
    json idems = json::array();
    for (const Vec& e : a->idempotents()) idems.push_back(vec_to_json(a->field(), e));
    out["idempotents"] = idems;
    return out;
}

AlgebraPtr algebra_from_json(const json& j, const std::optional<std::string>& q_binding) {
    if (!j.is_object()) throw ParseError("algebra must be a JSON object");
    if (!j.contains("field")) throw ParseError("algebra needs a \"field\"");
    Field field = field_from_json(j.at("field"));

    if (j.contains("quiver")) {
        const json& q = j.at("quiver");
        QuiverPresentation p;
        if (!q.contains("vertices") || !q.at("vertices").is_array())
            throw ParseError("quiver needs a \"vertices\" array");
        p.vertices = q.at("vertices").get<std::vector<std::string>>();
        if (q.contains("arrows")) {
            for (const json& ar : q.at("arrows")) {
                if (!ar.is_array() || ar.size() != 3)
                    throw ParseError("each arrow must be [name, source, target]");
                p.arrows.push_back({ar[0].get<std::string>(), ar[1].get<std::string>(),
                                    ar[2].get<std::string>()});
            }
        }
        if (q.contains("relations")) {
            for (const json& rel : q.at("relations")) {
                Relation r;
                if (!rel.is_array()) throw ParseError("each relation must be an array of terms");
                for (const json& term : rel) {
                    if (!term.is_object() || !term.contains("path") || !term.contains("coeff"))
                        throw ParseError("relation terms need \"path\" and \"coeff\"");
                    RelationTerm t;
                    t.path = term.at("path").get<std::vector<std::string>>();
                    t.coeff = parse_coeff(field, term.at("coeff").get<std::string>(), q_binding);
                    r.push_back(std::move(t));
                }
                p.relations.push_back(std::move(r));
            }
        }
        if (!q.contains("nilpotency")) throw ParseError("quiver needs a \"nilpotency\" bound");
        p.nilpotency_bound = q.at("nilpotency").get<unsigned>();
        return Algebra::from_quiver(p, field);
    }

    for (const char* key : {"basis", "table", "unit", "idempotents"})
        if (!j.contains(key))
            throw ParseError("structure-constant algebra needs \"" + std::string(key) + "\"");
    auto labels = j.at("basis").get<std::vector<std::string>>();
    const std::size_t n = labels.size();
    const json& tj = j.at("table");
    if (!tj.is_array() || tj.size() != n) throw ParseError("table must have one row per basis element");
    std::vector<std::vector<Vec>> table(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!tj[i].is_array() || tj[i].size() != n)
            throw ParseError("table rows must have one entry per basis element");
        for (std::size_t k = 0; k < n; ++k)
            table[i].push_back(parse_vec(field, tj[i][k], n, "table entry"));
    }
    Vec unit = parse_vec(field, j.at("unit"), n, "unit");
    std::vector<Vec> idems;
    for (const json& e : j.at("idempotents")) idems.push_back(parse_vec(field, e, n, "idempotent"));
    return Algebra::from_structure_constants(field, std::move(labels), std::move(table),
                                             std::move(unit), std::move(idems));
}

AlgebraPtr resolve_algebra_ref(const json& j, AlgebraPtr override_algebra,
                               const std::string& base_dir) {
    if (override_algebra) return override_algebra;
    if (!j.contains("algebra")) throw ParseError("file needs an \"algebra\" reference");
    const json& a = j.at("algebra");
    if (a.is_string()) {
        std::filesystem::path p(a.get<std::string>());
        if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
        return load_algebra_file(p.string());
    }
    return algebra_from_json(a, std::nullopt);
}

} // namespace

std::string field_to_json_text(const Field& f) { return field_to_json(f).dump(); }

Field field_from_json_text(const std::string& text) { return field_from_json(parse_json(text)); }

std::string algebra_to_json_text(const AlgebraPtr& a) { return algebra_to_json(a).dump(2); }

AlgebraPtr parse_algebra_text(const std::string& text, const std::optional<std::string>& q_binding) {
    return algebra_from_json(parse_json(text), q_binding);
}

AlgebraPtr load_algebra_file(const std::string& path, const std::optional<std::string>& q_binding) {
    return parse_algebra_text(read_text_file(path), q_binding);
}

std::string module_to_json_text(const Module& m, const std::optional<std::string>& algebra_ref) {
    json out;
    if (algebra_ref) out["algebra"] = *algebra_ref;
    else out["algebra"] = algebra_to_json(m.algebra());
    out["dim"] = m.dim();
    json action;
    for (std::size_t i = 0; i < m.algebra()->dim(); ++i)
        action[m.algebra()->basis_labels()[i]] = matrix_to_json(m.action(i));
    out["action"] = action;
    return out.dump(2);
}

Module parse_module_text(const std::string& text, AlgebraPtr override_algebra,
                         const std::string& base_dir) {
    json j = parse_json(text);
    if (!j.is_object()) throw ParseError("module must be a JSON object");
    AlgebraPtr a = resolve_algebra_ref(j, std::move(override_algebra), base_dir);
    const Field& field = a->field();

    if (j.contains("submodule_of")) {
        if (j.at("submodule_of").get<std::string>() != "regular")
            throw ParseError("only \"regular\" is supported in \"submodule_of\"");
        if (!j.contains("generators")) throw ParseError("submodule shortcut needs \"generators\"");
        std::vector<Vec> gens;
        for (const json& g : j.at("generators")) {
            if (g.is_string()) gens.push_back(parse_element(a, g.get<std::string>()));
            else gens.push_back(parse_vec(field, g, a->dim(), "generator"));
        }
        return submodule_span(regular_module(a), gens).module;
    }

    if (!j.contains("dim") || !j.contains("action"))
        throw ParseError("module needs \"dim\" and \"action\"");
    const std::size_t d = j.at("dim").get<std::size_t>();
    std::vector<Matrix> action;
    for (std::size_t i = 0; i < a->dim(); ++i) {
        const std::string& label = a->basis_labels()[i];
        if (!j.at("action").contains(label))
            throw ParseError("module action is missing basis label '" + label + "'");
        action.push_back(matrix_from_json(field, j.at("action").at(label), d, d, "action matrix"));
    }
    return Module::checked(a, d, std::move(action));
}

Module load_module_file(const std::string& path, AlgebraPtr override_algebra) {
    return parse_module_text(read_text_file(path), std::move(override_algebra),
                             std::filesystem::path(path).parent_path().string());
}

std::string automorphism_to_json_text(const Automorphism& s,
                                      const std::optional<std::string>& algebra_ref) {
    json out;
    if (algebra_ref) out["algebra"] = *algebra_ref;
    else out["algebra"] = algebra_to_json(s.algebra);
    out["matrix"] = matrix_to_json(s.matrix);
    return out.dump(2);
}

Automorphism parse_automorphism_text(const std::string& text, AlgebraPtr override_algebra,
                                     const std::string& base_dir) {
    json j = parse_json(text);
    if (!j.is_object() || !j.contains("matrix"))
        throw ParseError("automorphism needs an \"algebra\" and a \"matrix\"");
    AlgebraPtr a = resolve_algebra_ref(j, std::move(override_algebra), base_dir);
    Matrix m = matrix_from_json(a->field(), j.at("matrix"), a->dim(), a->dim(), "matrix");
    return Automorphism::checked(a, std::move(m));
}

Automorphism load_automorphism_file(const std::string& path, AlgebraPtr override_algebra) {
    return parse_automorphism_text(read_text_file(path), std::move(override_algebra),
                                   std::filesystem::path(path).parent_path().string());
}

std::string resolution_to_json_text(const Resolution& r) {
    json out;
    out["base_dim"] = r.base.dim();
    out["horizon"] = r.horizon;
    out["projective_dims"] = r.projective_dims();
    out["syzygy_dims"] = r.syzygy_dims();
    json mults = json::array();
    for (const CoverData& s : r.steps) mults.push_back(s.multiplicities);
    out["multiplicities"] = mults;
    return out.dump(2);
}

std::string resolution_to_csv(const Resolution& r) {
    std::string csv = "t,projective_dim,syzygy_dim\n";
    const auto pd = r.projective_dims();
    const auto sd = r.syzygy_dims();
    for (std::size_t t = 0; t < pd.size(); ++t)
        csv += std::to_string(t) + "," + std::to_string(pd[t]) + "," + std::to_string(sd[t]) + "\n";
    return csv;
}

namespace {

const char* outcome_tag(PeriodOutcome o) {
    switch (o) {
        case PeriodOutcome::Periodic: return "periodic";
        case PeriodOutcome::Projective: return "projective";
        default: return "horizon-exhausted";
    }
}

} // namespace

std::string period_report_to_json_text(const PeriodReport& r) {
    json out;
    out["outcome"] = outcome_tag(r.outcome);
    out["syzygy_dims"] = r.syzygy_dims;
    if (r.outcome == PeriodOutcome::Periodic) {
        out["period"] = r.period;
        out["hit"] = {{"i", r.hit_i}, {"j", r.hit_j}};
        out["base_iso_verified"] = r.base_iso_verified;
        if (r.witness) out["witness"] = matrix_to_json(r.witness->matrix);
    }
    if (r.outcome == PeriodOutcome::HorizonExhausted) out["distinct"] = r.distinct;
    return out.dump(2);
}

std::string period_report_to_csv(const PeriodReport& r) {
    std::string csv = "i,syzygy_dim\n";
    for (std::size_t i = 0; i < r.syzygy_dims.size(); ++i)
        csv += std::to_string(i) + "," + std::to_string(r.syzygy_dims[i]) + "\n";
    return csv;
}

std::string complexity_to_json_text(const ComplexityEstimate& e) {
    json out;
    out["horizon"] = e.horizon;
    out["dims"] = e.dims;
    switch (e.verdict) {
        case ComplexityVerdict::FiniteProjDim:
            out["verdict"] = "finite-proj-dim";
            out["projective_dimension"] = e.value;
            break;
        case ComplexityVerdict::BoundedNonzero:
            out["verdict"] = "bounded-nonzero";
            out["stable_dim"] = e.value;
            break;
        case ComplexityVerdict::PolynomialDegree:
            out["verdict"] = "polynomial-degree";
            out["degree"] = e.value;
            break;
        default:
            out["verdict"] = "inconclusive";
    }
    return out.dump(2);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file '" + path + "'");
    out << content;
}

} // namespace syzlab
