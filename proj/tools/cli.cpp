#include "cli.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "syzlab/io.hpp"
#include "syzlab/orbit.hpp"

namespace syzlab::cli {

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class OutputMode { Text, Json, Csv };

struct Session {
    Field field = Field::rationals();
    std::size_t horizon = 25;
    std::uint64_t seed = 0;
    OutputMode mode = OutputMode::Text;
    std::optional<std::string> q_binding;

    std::uint64_t digest = 1469598103934665603ULL;
    void absorb(const std::string& s) {
        for (unsigned char c : s) {
            digest ^= c;
            digest *= 1099511628211ULL;
        }
    }

    AlgebraPtr load_algebra(const std::string& path) {
        std::string text = read_text_file(path);
        absorb(text);
        return parse_algebra_text(text, q_binding);
    }
    Module load_module(const std::string& path, AlgebraPtr algebra) {
        std::string text = read_text_file(path);
        absorb(text);
        return parse_module_text(text, std::move(algebra),
                                 std::filesystem::path(path).parent_path().string());
    }
    Automorphism load_automorphism(const std::string& path, AlgebraPtr algebra) {
        std::string text = read_text_file(path);
        absorb(text);
        return parse_automorphism_text(text, std::move(algebra),
                                       std::filesystem::path(path).parent_path().string());
    }
};

// Module selectors: "regular", "simple:<i>", "projective:<i>", "gen:<expr>",
// or a path to a module file.
Module module_from_spec(Session& session, const AlgebraPtr& a, const std::string& spec) {
    if (spec == "regular") return regular_module(a);
    if (spec.rfind("simple:", 0) == 0)
        return simple_module(a, std::stoul(spec.substr(7)));
    if (spec.rfind("projective:", 0) == 0)
        return indecomposable_projective(a, std::stoul(spec.substr(11)));
    if (spec.rfind("gen:", 0) == 0)
        return cyclic_submodule(a, parse_element(a, spec.substr(4)));
    return session.load_module(spec, a);
}

struct ModuleSelector {
    std::string module_spec, gen;
    long simple = -1, projective = -1;
    bool regular = false;

    void add_options(CLI::App* cmd, const std::string& prefix = "") {
        const std::string dash = prefix.empty() ? "--" : "--" + prefix + "-";
        cmd->add_option(dash + "module", module_spec,
                        "module spec: file path, regular, simple:<i>, projective:<i>, gen:<expr>");
        cmd->add_option(dash + "gen", gen, "generator expression for a cyclic submodule of the regular module");
        cmd->add_option(dash + "simple", simple, "index of a simple module");
        cmd->add_option(dash + "projective", projective, "index of an indecomposable projective");
        if (prefix.empty()) cmd->add_flag("--regular", regular, "the regular module");
    }

    Module resolve(Session& session, const AlgebraPtr& a, const std::string& what) const {
        int given = !module_spec.empty() + !gen.empty() + (simple >= 0) + (projective >= 0) + regular;
        if (given != 1)
            throw UsageError("select exactly one " + what +
                             " (via --module/--gen/--simple/--projective/--regular)");
        if (!module_spec.empty()) return module_from_spec(session, a, module_spec);
        if (!gen.empty()) return cyclic_submodule(a, parse_element(a, gen));
        if (simple >= 0) return simple_module(a, static_cast<std::size_t>(simple));
        if (projective >= 0) return indecomposable_projective(a, static_cast<std::size_t>(projective));
        return regular_module(a);
    }
};

json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.field().to_string(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

json vec_json(const Field& f, const Vec& v) {
    json out = json::array();
    for (const Rat& x : v) out.push_back(f.to_string(x));
    return out;
}

json automorphism_json(const Automorphism& s) {
    json out;
    out["matrix"] = matrix_json(s.matrix);
    json maps = json::array();
    for (std::size_t i = 0; i < s.algebra->dim(); ++i) {
        std::string img;
        const Vec row = s.matrix.row(i);
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (sgn(row[j]) == 0) continue;
            if (!img.empty()) img += " + ";
            img += s.algebra->field().to_string(row[j]) + "*" + s.algebra->basis_labels()[j];
        }
        maps.push_back(s.algebra->basis_labels()[i] + " -> " + (img.empty() ? "0" : img));
    }
    out["maps"] = maps;
    return out;
}

const char* certificate_tag(OrbitCertificate c) {
    switch (c) {
        case OrbitCertificate::OpenSimpleBasic: return "open-simple-basic";
        case OrbitCertificate::OpenExtVanishing: return "open-ext-vanishing";
        default: return "unknown";
    }
}

json orbit_stats_json(const OrbitStats& s) {
    return json{{"dim", s.dim},
                {"end_dim", s.end_dim},
                {"orbit_dim", s.orbit_dim},
                {"certificate", certificate_tag(s.certificate)}};
}

json stable_clause_json(const StableMoritaClause& c) {
    return json{{"product_dim", c.product_dim},
                {"regular_summand", c.regular_summand},
                {"complement_projective", c.complement_projective},
                {"complement_multiplicities", c.complement_multiplicities},
                {"passed", c.passed()}};
}

void render_text(std::ostream& out, const json& j, int indent) {
    const std::string pad(indent, ' ');
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (value.is_object() || (value.is_array() && !value.empty() && value[0].is_structured())) {
                out << pad << key << ":\n";
                render_text(out, value, indent + 2);
            } else {
                out << pad << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
                    << "\n";
            }
        }
    } else if (j.is_array()) {
        std::size_t i = 0;
        for (const auto& value : j) {
            if (value.is_structured()) {
                out << pad << "- [" << i << "]\n";
                render_text(out, value, indent + 2);
            } else {
                out << pad << "- " << (value.is_string() ? value.get<std::string>() : value.dump())
                    << "\n";
            }
            ++i;
        }
    } else {
        out << pad << j.dump() << "\n";
    }
}

struct Outcome {
    json payload;
    std::optional<std::string> csv;
};

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Session session;
    CLI::App app{"exact-arithmetic toolkit for finite-dimensional basic algebras"};
    app.name("syzlab");

    bool flag_json = false, flag_csv = false;
    std::string field_spec = "Q";
    std::string q_value;
    app.add_flag("--json", flag_json, "emit the full report as JSON");
    app.add_flag("--csv", flag_csv, "emit dimension sequences as CSV (resolve/period only)");
    app.add_option("--seed", session.seed, "seed for randomized searches (prime fields)");
    app.add_option("--horizon", session.horizon, "default horizon for resolutions and period search");
    app.add_option("--field", field_spec, "ground field: Q or Fp:<prime>");
    app.add_option("--q", q_value, "value bound to the symbolic coefficient q in algebra files");
    app.require_subcommand(1);

    std::function<Outcome()> action;

    // ----- algebra ---------------------------------------------------------
    auto* alg = app.add_subcommand("algebra", "inspect an algebra");
    alg->require_subcommand(1);
    {
        auto* check = alg->add_subcommand("check", "validate and classify");
        auto file = std::make_shared<std::string>();
        check->add_option("--file", *file, "algebra file")->required();
        check->callback([&, file] {
            action = [&, file]() -> Outcome {
                AlgebraPtr a = session.load_algebra(*file);
                json payload;
                payload["dim"] = a->dim();
                payload["basic"] = true; // construction validates basicness
                payload["idempotents"] = a->idempotents().size();
                try {
                    json dims = json::array();
                    for (const auto& p : a->radical().powers) dims.push_back(p.size());
                    payload["radical_dims"] = dims;
                    payload["self_injective"] = a->is_self_injective();
                } catch (const UnsupportedField& e) {
                    payload["self_injective"] = nullptr;
                    payload["note"] = e.what();
                }
                payload["center_dim"] = a->center_basis().size();
                return {payload, std::nullopt};
            };
        });

        auto* center = alg->add_subcommand("center", "basis of the center");
        auto cfile = std::make_shared<std::string>();
        center->add_option("--file", *cfile, "algebra file")->required();
        center->callback([&, cfile] {
            action = [&, cfile]() -> Outcome {
                AlgebraPtr a = session.load_algebra(*cfile);
                json payload;
                payload["dim"] = a->center_basis().size();
                json basis = json::array();
                for (const Vec& z : a->center_basis()) basis.push_back(vec_json(a->field(), z));
                payload["basis"] = basis;
                payload["labels"] = a->basis_labels();
                return {payload, std::nullopt};
            };
        });

        auto* radical = alg->add_subcommand("radical", "radical power filtration");
        auto rfile = std::make_shared<std::string>();
        radical->add_option("--file", *rfile, "algebra file")->required();
        radical->callback([&, rfile] {
            action = [&, rfile]() -> Outcome {
                AlgebraPtr a = session.load_algebra(*rfile);
                const RadicalInfo& rad = a->radical();
                json payload;
                json powers = json::array();
                for (const auto& p : rad.powers) {
                    json basis = json::array();
                    for (const Vec& v : p) basis.push_back(vec_json(a->field(), v));
                    powers.push_back(basis);
                }
                json dims = json::array();
                for (const auto& p : rad.powers) dims.push_back(p.size());
                payload["dims"] = dims;
                payload["nilpotency_index"] = rad.nilpotency_index();
                payload["powers"] = powers;
                return {payload, std::nullopt};
            };
        });
    }

    // ----- module ----------------------------------------------------------
    auto* mod = app.add_subcommand("module", "homological computations for one module");
    mod->require_subcommand(1);
    std::string mod_algebra;
    mod->add_option("--algebra", mod_algebra, "algebra file")->required();
    {
        auto* resolve_cmd = mod->add_subcommand("resolve", "minimal projective resolution");
        auto sel = std::make_shared<ModuleSelector>();
        sel->add_options(resolve_cmd);
        resolve_cmd->callback([&, sel] {
            action = [&, sel]() -> Outcome {
                AlgebraPtr a = session.load_algebra(mod_algebra);
                Module m = sel->resolve(session, a, "module");
                Resolution r = resolve(m, session.horizon);
                json payload = json::parse(resolution_to_json_text(r));
                if (session.horizon >= 8)
                    payload["complexity"] = json::parse(complexity_to_json_text(complexity_estimate(r)));
                return {payload, resolution_to_csv(r)};
            };
        });

        auto* period = mod->add_subcommand("period", "syzygy periodicity search");
        auto sel2 = std::make_shared<ModuleSelector>();
        sel2->add_options(period);
        period->callback([&, sel2] {
            action = [&, sel2]() -> Outcome {
                AlgebraPtr a = session.load_algebra(mod_algebra);
                Module m = sel2->resolve(session, a, "module");
                PeriodReport r = detect_period(m, session.horizon, session.seed);
                return {json::parse(period_report_to_json_text(r)), period_report_to_csv(r)};
            };
        });

        auto* iso = mod->add_subcommand("iso", "isomorphism test with witness");
        auto left = std::make_shared<ModuleSelector>();
        auto right = std::make_shared<ModuleSelector>();
        left->add_options(iso, "left");
        right->add_options(iso, "right");
        iso->callback([&, left, right] {
            action = [&, left, right]() -> Outcome {
                AlgebraPtr a = session.load_algebra(mod_algebra);
                Module m = left->resolve(session, a, "left module");
                Module n = right->resolve(session, a, "right module");
                auto w = is_isomorphic(m, n, session.seed);
                json payload;
                payload["isomorphic"] = w.has_value();
                payload["dims"] = {m.dim(), n.dim()};
                if (w) payload["witness"] = matrix_json(w->matrix);
                return {payload, std::nullopt};
            };
        });

        auto* ext = mod->add_subcommand("ext", "dimension of an Ext group");
        auto from = std::make_shared<ModuleSelector>();
        auto to = std::make_shared<ModuleSelector>();
        auto deg = std::make_shared<long>(1);
        from->add_options(ext, "from");
        to->add_options(ext, "to");
        ext->add_option("-n,--degree", *deg, "cohomological degree (>= 0)");
        ext->callback([&, from, to, deg] {
            action = [&, from, to, deg]() -> Outcome {
                if (*deg < 0) throw UsageError("degree must be >= 0");
                AlgebraPtr a = session.load_algebra(mod_algebra);
                Module m = from->resolve(session, a, "source module");
                Module n = to->resolve(session, a, "target module");
                json payload;
                payload["degree"] = *deg;
                payload["ext_dim"] = ext_dim(m, n, static_cast<std::size_t>(*deg));
                return {payload, std::nullopt};
            };
        });

        auto* strip = mod->add_subcommand("strip", "split off projective direct summands");
        auto sel3 = std::make_shared<ModuleSelector>();
        sel3->add_options(strip);
        strip->callback([&, sel3] {
            action = [&, sel3]() -> Outcome {
                AlgebraPtr a = session.load_algebra(mod_algebra);
                Module m = sel3->resolve(session, a, "module");
                StripResult r = strip_projectives(m);
                json payload;
                payload["input_dim"] = m.dim();
                payload["core_dim"] = r.core.dim();
                payload["stripped"] = r.stripped;
                return {payload, std::nullopt};
            };
        });
    }

    // ----- orbit -----------------------------------------------------------
    auto* orb = app.add_subcommand("orbit", "orbit statistics and degeneration tests");
    orb->require_subcommand(1);
    std::string orb_algebra;
    orb->add_option("--algebra", orb_algebra, "algebra file")->required();
    {
        auto* stats = orb->add_subcommand("stats", "orbit dimension and openness certificate");
        auto sel = std::make_shared<ModuleSelector>();
        auto twist = std::make_shared<std::string>();
        sel->add_options(stats);
        stats->add_option("--twist", *twist,
                          "report on the twisted bimodule for x -> t x instead of a module");
        stats->callback([&, sel, twist] {
            action = [&, sel, twist]() -> Outcome {
                AlgebraPtr a = session.load_algebra(orb_algebra);
                Module m = twist->empty()
                               ? sel->resolve(session, a, "module")
                               : twisted_bimodule(a, scaling_twist(a, a->field().parse(*twist))).carrier;
                json payload = orbit_stats_json(orbit_stats(m));
                if (!twist->empty()) payload["carrier"] = "twisted-bimodule";
                return {payload, std::nullopt};
            };
        });

        auto* degen = orb->add_subcommand("degeneration", "Hom-order obstruction test");
        auto from = std::make_shared<ModuleSelector>();
        auto to = std::make_shared<ModuleSelector>();
        from->add_options(degen, "from");
        to->add_options(degen, "to");
        degen->callback([&, from, to] {
            action = [&, from, to]() -> Outcome {
                AlgebraPtr a = session.load_algebra(orb_algebra);
                Module m = from->resolve(session, a, "source module");
                Module n = to->resolve(session, a, "target module");
                DegenerationVerdict v = degeneration_obstruction(m, n);
                json payload;
                payload["passed_tests"] = v.passed_tests;
                if (v.obstruction) {
                    payload["obstruction"] = {{"test", v.obstruction->test_label},
                                              {"hom_to_source", v.obstruction->hom_to_source},
                                              {"hom_to_target", v.obstruction->hom_to_target}};
                } else {
                    payload["obstruction"] = nullptr;
                }
                return {payload, std::nullopt};
            };
        });

        auto* regcheck = orb->add_subcommand("regular-check",
                                             "verify the regular bimodule admits no proper degeneration");
        auto twists = std::make_shared<std::vector<std::string>>();
        regcheck->add_option("--twist", *twists, "twist parameters t (repeatable)")->required();
        regcheck->callback([&, twists] {
            action = [&, twists]() -> Outcome {
                AlgebraPtr a = session.load_algebra(orb_algebra);
                std::vector<std::pair<std::string, Bimodule>> candidates;
                for (const std::string& t : *twists)
                    candidates.emplace_back(
                        "t=" + t, twisted_bimodule(a, scaling_twist(a, a->field().parse(t))));
                RegularDegenerationReport r = regular_degeneration_check(a, candidates, session.seed);
                json payload;
                payload["regular_orbit_dim"] = r.regular_orbit_dim;
                json entries = json::array();
                for (const auto& e : r.entries) {
                    json je;
                    je["label"] = e.label;
                    je["right_restriction_regular"] = e.right_restriction_regular;
                    je["left_restriction_regular"] = e.left_restriction_regular;
                    je["twist_recognized"] = e.twist.has_value();
                    if (e.twist) je["twist"] = automorphism_json(*e.twist);
                    je["orbit_dim"] = e.orbit_dim;
                    je["orbit_dims_equal"] = e.orbit_dims_equal;
                    je["isomorphic_to_regular"] = e.isomorphic_to_regular;
                    je["verdict"] = e.verdict;
                    entries.push_back(je);
                }
                payload["candidates"] = entries;
                return {payload, std::nullopt};
            };
        });
    }

    // ----- bimodule --------------------------------------------------------
    auto* bim = app.add_subcommand("bimodule", "enveloping-algebra computations");
    bim->require_subcommand(1);
    std::string bim_algebra;
    bim->add_option("--algebra", bim_algebra, "algebra file")->required();
    {
        auto* syz = bim->add_subcommand("syzygy", "syzygy of the regular bimodule");
        auto n = std::make_shared<long>(1);
        auto recognize = std::make_shared<bool>(false);
        syz->add_option("-n", *n, "syzygy index (negative for cosyzygies)");
        syz->add_flag("--recognize-twist", *recognize, "attempt to identify a twisted bimodule");
        syz->callback([&, n, recognize] {
            action = [&, n, recognize]() -> Outcome {
                if (*n == 0) throw UsageError("syzygy index must be nonzero");
                AlgebraPtr a = session.load_algebra(bim_algebra);
                Bimodule b = *n > 0 ? bimodule_syzygy(a, static_cast<std::size_t>(*n))
                                    : bimodule_cosyzygy(a, static_cast<std::size_t>(-*n));
                json payload;
                payload["n"] = *n;
                payload["dim"] = b.carrier.dim();
                payload["left_right_projective"] = true; // asserted during construction
                if (*recognize) {
                    auto tw = twist_recognize(b, session.seed);
                    payload["twist"] = tw ? automorphism_json(*tw) : json(nullptr);
                }
                return {payload, std::nullopt};
            };
        });

        auto* order = bim->add_subcommand("twist-order", "order of an automorphism in Out");
        auto t = std::make_shared<std::string>();
        auto file = std::make_shared<std::string>();
        auto bound = std::make_shared<std::size_t>(24);
        order->add_option("--t", *t, "scaling twist parameter");
        order->add_option("--twist-file", *file, "automorphism file");
        order->add_option("--bound", *bound, "search bound");
        order->callback([&, t, file, bound] {
            action = [&, t, file, bound]() -> Outcome {
                AlgebraPtr a = session.load_algebra(bim_algebra);
                if (t->empty() == file->empty())
                    throw UsageError("give exactly one of --t and --twist-file");
                Automorphism s = t->empty() ? session.load_automorphism(*file, a)
                                            : scaling_twist(a, a->field().parse(*t));
                auto m = out_order(s, *bound, session.seed);
                json payload;
                payload["bound"] = *bound;
                payload["order"] = m ? json(*m) : json(nullptr);
                payload["inner"] = m.has_value() && *m == 1;
                return {payload, std::nullopt};
            };
        });

        auto* stable = bim->add_subcommand("stable-check", "stable equivalence of Morita type");
        auto n2 = std::make_shared<std::size_t>(1);
        auto t2 = std::make_shared<std::string>();
        stable->add_option("-n", *n2, "check the pair (Omega^n, Omega^-n) of the regular bimodule");
        stable->add_option("--twist", *t2, "check the pair (1A_sigma, 1A_sigma^-1) for x -> t x instead");
        stable->callback([&, n2, t2] {
            action = [&, n2, t2]() -> Outcome {
                AlgebraPtr a = session.load_algebra(bim_algebra);
                Bimodule x = t2->empty()
                                 ? bimodule_syzygy(a, *n2)
                                 : twisted_bimodule(a, scaling_twist(a, a->field().parse(*t2)));
                Bimodule y = t2->empty()
                                 ? bimodule_cosyzygy(a, *n2)
                                 : twisted_bimodule(a, scaling_twist(a, a->field().parse(*t2)).inverse());
                StableMoritaReport r = stable_morita_check(x, y, session.seed);
                json payload;
                payload["x_left_right_projective"] = r.x_left_right_projective;
                payload["y_left_right_projective"] = r.y_left_right_projective;
                payload["xy"] = stable_clause_json(r.xy);
                payload["yx"] = stable_clause_json(r.yx);
                payload["passed"] = r.passed();
                return {payload, std::nullopt};
            };
        });
    }

    // ----- examples --------------------------------------------------------
    auto* examples = app.add_subcommand("examples", "write fixture files");
    {
        auto name = std::make_shared<std::string>();
        auto out_dir = std::make_shared<std::string>(".");
        auto n = std::make_shared<unsigned>(3);
        auto t = std::make_shared<std::string>("2");
        examples->add_option("name", *name, "liu-schulz | truncated-poly | kx2-twist | a2 | exterior")
            ->required();
        examples->add_option("--out", *out_dir, "output directory");
        examples->add_option("--n", *n, "truncation exponent for truncated-poly");
        examples->add_option("--t", *t, "twist parameter for kx2-twist");
        examples->callback([&, name, out_dir, n, t] {
            action = [&, name, out_dir, n, t]() -> Outcome {
                const Field& field = session.field;
                std::vector<std::string> files;
                auto emit = [&](const std::string& fname, const std::string& text) {
                    const std::string path = *out_dir + "/" + fname;
                    write_text_file(path, text);
                    session.absorb(text);
                    files.push_back(path);
                };
                if (*name == "liu-schulz" || *name == "exterior") {
                    const std::string qs = *name == "exterior" ? "-1" : (q_value.empty() ? "2" : q_value);
                    AlgebraPtr a = quantum_exterior(field, field.parse(qs));
                    const std::string afile = *name == "exterior" ? "exterior.json" : "lambda_q.json";
                    emit(afile, algebra_to_json_text(a));
                    emit("module_x_plus_y.json",
                         "{\n  \"algebra\": \"" + afile +
                             "\",\n  \"submodule_of\": \"regular\",\n  \"generators\": [\"x+y\"]\n}\n");
                } else if (*name == "truncated-poly") {
                    AlgebraPtr a = truncated_polynomial(field, *n);
                    const std::string afile = "kx" + std::to_string(*n) + ".json";
                    emit(afile, algebra_to_json_text(a));
                    emit("simple.json", module_to_json_text(simple_module(a, 0), afile));
                } else if (*name == "kx2-twist") {
                    AlgebraPtr a = truncated_polynomial(field, 2);
                    emit("kx2.json", algebra_to_json_text(a));
                    emit("sigma_t.json",
                         automorphism_to_json_text(scaling_twist(a, field.parse(*t)), "kx2.json"));
                } else if (*name == "a2") {
                    emit("a2.json", algebra_to_json_text(two_point_hereditary(field)));
                } else {
                    throw UnknownFixture(*name);
                }
                json payload;
                payload["fixture"] = *name;
                payload["files"] = files;
                return {payload, std::nullopt};
            };
        });
    }

    // ----- parse and dispatch ---------------------------------------------
    // Global options (--json, --seed, --q, ...) may appear after a subcommand.
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* cmd) {
        for (CLI::App* sub : cmd->get_subcommands([](const CLI::App*) { return true; })) {
            sub->fallthrough();
            enable_fallthrough(sub);
        }
    };
    enable_fallthrough(&app);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream dummy;
        const int code = app.exit(e, session.mode == OutputMode::Json ? dummy : out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (field_spec == "Q") {
            session.field = Field::rationals();
        } else if (field_spec.rfind("Fp:", 0) == 0) {
            session.field = Field::prime(mpz_class(field_spec.substr(3)));
        } else {
            throw UsageError("unknown field spec '" + field_spec + "' (use Q or Fp:<prime>)");
        }
        if (!q_value.empty()) session.q_binding = q_value;
        if (flag_json && flag_csv) throw UsageError("choose one of --json and --csv");
        if (flag_json) session.mode = OutputMode::Json;
        if (flag_csv) session.mode = OutputMode::Csv;

        std::string echo;
        for (const std::string& a : args) {
            if (!echo.empty()) echo += " ";
            echo += a;
        }
        session.absorb(echo);

        const auto t0 = std::chrono::steady_clock::now();
        Outcome outcome = action();
        const auto t1 = std::chrono::steady_clock::now();

        if (session.mode == OutputMode::Csv) {
            if (!outcome.csv) throw UsageError("CSV output is only available for dimension sequences");
            out << *outcome.csv;
            return 0;
        }
        if (session.mode == OutputMode::Json) {
            std::ostringstream digest_hex;
            digest_hex << std::hex << std::setw(16) << std::setfill('0') << session.digest;
            json envelope;
            envelope["command"] = echo;
            envelope["inputs_digest"] = digest_hex.str();
            envelope["seed"] = session.seed;
            envelope["timing_ms"] = std::chrono::duration<double, std::milli>(t1 - t0).count();
            envelope["result"] = outcome.payload;
            out << envelope.dump(2) << "\n";
            return 0;
        }
        render_text(out, outcome.payload, 0);
        return 0;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const UnknownFixture& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace syzlab::cli
