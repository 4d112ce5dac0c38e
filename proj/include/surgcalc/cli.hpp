#pragma once

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "surgcalc/surgcalc.hpp"

namespace surgcalc {
namespace cli {

using nlohmann::json;

// exit codes: 0 success, 1 validation/usage error, 2 mathematically
// meaningful negative result (not nullhomologous, infinite order, no bound)
inline constexpr int exit_ok = 0;
inline constexpr int exit_error = 1;
inline constexpr int exit_negative = 2;

namespace detail {

inline Rational parse_rational(const std::string& s, const std::string& what) {
    try {
        const auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(Int(s));
        return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw validation_error(what + ": not a rational: " + s);
    }
}

inline Int parse_int(const std::string& s, const std::string& what) {
    try {
        return Int(s);
    } catch (const std::exception&) {
        throw validation_error(what + ": not an integer: " + s);
    }
}

struct Output {
    bool machine = false;
    std::ostream& out;
    std::ostream& err;
    json report;

    explicit Output(bool machine_mode, std::ostream& o, std::ostream& e, std::string command)
        : machine(machine_mode), out(o), err(e) {
        report["command"] = std::move(command);
        report["warnings"] = json::array();
    }

    void input(const std::string& key, json value) { report["input"][key] = std::move(value); }
    void result(const std::string& key, json value) { report["results"][key] = std::move(value); }
    void warn(const std::string& message) {
        report["warnings"].push_back(message);
        if (!machine) err << "warning: " << message << "\n";
    }
    void human(const std::string& line) {
        if (!machine) out << line << "\n";
    }
    int finish(int code) {
        report["status"] = code == exit_ok ? "ok" : (code == exit_negative ? "negative" : "error");
        if (machine) out << report.dump(2) << "\n";
        return code;
    }
};

inline json group_to_json(const AbelianGroup& g) {
    json j;
    j["group"] = g.to_string();
    j["torsion"] = json::array();
    for (const Int& d : g.torsion) j["torsion"].push_back(io::int_to_json(d));
    j["free_rank"] = g.free_rank;
    return j;
}

inline const AuxKnot& require_aux(const io::DiagramFile& file, const char* command) {
    if (!file.aux)
        throw validation_error(std::string(command) + ": the diagram file has no \"aux\" knot");
    return *file.aux;
}

}  // namespace detail

/// Runs one CLI invocation. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using detail::Output;

    CLI::App app{"exact surgery calculus on Dehn surgery diagrams"};
    app.require_subcommand(1);
    bool machine = false;
    app.add_flag("--json", machine, "machine-readable report on stdout");

    std::string file_path;
    std::string opt_contact, opt_topological, opt_coefficient, opt_c1, opt_c2, opt_tb_str, opt_type;
    std::string opt_rot;
    long long opt_component = 0;
    std::string opt_twists, opt_p, opt_from, opt_to;

    CLI::App* cmd_homology = app.add_subcommand("homology", "first homology of the surgered manifold");
    cmd_homology->add_option("file", file_path, "diagram JSON file")->required();

    CLI::App* cmd_nullhomology =
        app.add_subcommand("nullhomology", "order and witness of the aux knot's homology class");
    cmd_nullhomology->add_option("file", file_path, "diagram JSON file")->required();

    CLI::App* cmd_tb = app.add_subcommand("tb", "Thurston-Bennequin number of the aux knot after surgery");
    cmd_tb->add_option("file", file_path, "diagram JSON file")->required();

    CLI::App* cmd_tbq = app.add_subcommand("tbq", "rational Thurston-Bennequin number after surgery");
    cmd_tbq->add_option("file", file_path, "diagram JSON file")->required();

    CLI::App* cmd_convert = app.add_subcommand("convert", "convert contact and topological coefficients");
    cmd_convert->add_option("--contact", opt_contact, "contact coefficient (p/q)");
    cmd_convert->add_option("--topological", opt_topological, "topological coefficient (p/q)");
    cmd_convert->add_option("--tb", opt_tb_str, "Thurston-Bennequin number")->required();

    CLI::App* cmd_rolfsen = app.add_subcommand("rolfsen", "Rolfsen twist along an unknot component");
    cmd_rolfsen->add_option("file", file_path, "diagram JSON file")->required();
    cmd_rolfsen->add_option("--component", opt_component, "component index (1-based)")->required();
    cmd_rolfsen->add_option("--twists", opt_twists, "number of twists (nonzero)")->required();

    CLI::App* cmd_contact_rolfsen =
        app.add_subcommand("contact-rolfsen", "contact Rolfsen twist: delete a 1+1/n unknot");
    cmd_contact_rolfsen->add_option("file", file_path, "diagram JSON file")->required();
    cmd_contact_rolfsen->add_option("--component", opt_component, "component index (1-based)")->required();

    CLI::App* cmd_lens = app.add_subcommand("lens", "lens space of an unknot surgery");
    cmd_lens->add_option("--coefficient", opt_coefficient, "topological coefficient (p/q or inf)")->required();

    CLI::App* cmd_cosmetic = app.add_subcommand("cosmetic-pair", "compare two contact unknot surgeries");
    cmd_cosmetic->add_option("--c1", opt_c1, "first contact coefficient")->required();
    cmd_cosmetic->add_option("--c2", opt_c2, "second contact coefficient")->required();
    cmd_cosmetic->add_option("--tb", opt_tb_str, "tb of the Legendrian unknot")->required();

    CLI::App* cmd_glue = app.add_subcommand("glue", "glue two standard neighborhoods to a lens space");
    cmd_glue->add_option("--tb", opt_tb_str, "tb of the Legendrian spine")->required();
    cmd_glue->add_option("--p", opt_p, "order p >= 2 of the resulting lens space")->required();

    CLI::App* cmd_bennequin = app.add_subcommand("bennequin", "Bennequin-inequality obstruction check");
    cmd_bennequin->add_option("--tb", opt_tb_str, "tb to test (rational)")->required();
    cmd_bennequin->add_option("--rot", opt_rot, "rotation number (optional)");
    cmd_bennequin->add_option("--type", opt_type, "asserted knot type")->required();

    CLI::App* cmd_scan =
        app.add_subcommand("scan-surgery-theorem", "Bennequin obstruction sweep over 1/n surgeries");
    cmd_scan->add_option("--from", opt_from, "range start")->required();
    cmd_scan->add_option("--to", opt_to, "range end")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? exit_ok : exit_error;
    }

    try {
        if (cmd_homology->parsed()) {
            Output o(machine, out, err, "homology");
            o.input("file", file_path);
            const auto file = io::load_diagram(file_path);
            const AbelianGroup h = first_homology(file.diagram);
            o.result("homology", detail::group_to_json(h));
            o.human("H_1 = " + h.to_string());
            return o.finish(exit_ok);
        }

        if (cmd_nullhomology->parsed()) {
            Output o(machine, out, err, "nullhomology");
            o.input("file", file_path);
            const auto file = io::load_diagram(file_path);
            const AuxKnot& aux = detail::require_aux(file, "nullhomology");
            const auto cert = nullhomology(file.diagram, aux);
            if (!cert) {
                o.result("order", "infinite");
                o.result("nullhomologous", false);
                o.human("the auxiliary knot has infinite order in H_1 (not rationally nullhomologous)");
                return o.finish(exit_negative);
            }
            o.result("order", io::int_to_json(cert->order));
            o.result("nullhomologous", cert->nullhomologous());
            o.result("witness", io::int_vector_to_json(cert->witness));
            json kernel = json::array();
            for (const auto& k : cert->kernel) kernel.push_back(io::int_vector_to_json(k));
            o.result("kernel", std::move(kernel));
            o.human(cert->nullhomologous()
                        ? "nullhomologous (order 1)"
                        : "rationally nullhomologous of order " + cert->order.str());
            return o.finish(exit_ok);
        }

        if (cmd_tb->parsed() || cmd_tbq->parsed()) {
            const bool rational_mode = cmd_tbq->parsed();
            Output o(machine, out, err, rational_mode ? "tbq" : "tb");
            o.input("file", file_path);
            const auto file = io::load_diagram(file_path);
            const AuxKnot& aux = detail::require_aux(file, rational_mode ? "tbq" : "tb");
            const auto cert = nullhomology(file.diagram, aux);
            if (!cert) {
                o.result("status", "infinite order");
                o.human("the auxiliary knot has infinite order in H_1; no (rational) tb is defined");
                return o.finish(exit_negative);
            }
            if (!rational_mode && !cert->nullhomologous()) {
                o.result("status", "not nullhomologous");
                o.result("order", io::int_to_json(cert->order));
                o.human("not nullhomologous (order " + cert->order.str() + "); use tbq");
                return o.finish(exit_negative);
            }
            const auto res = rational_mode ? tbq_after_surgery(file.diagram, aux)
                                           : tb_after_surgery(file.diagram, aux);
            o.result(rational_mode ? "tbq_new" : "tb_new", res->value.to_string());
            o.result("order", io::int_to_json(res->order));
            o.result("framing_correction", res->framing.to_string());
            o.result("tb_old", io::int_to_json(aux.tb_old));
            o.human((rational_mode ? "tb_Q,new = " : "tb_new = ") + res->value.to_string() +
                    "   (tb_old = " + aux.tb_old.str() + ", order k = " + res->order.str() +
                    ", framing correction = " + res->framing.to_string() + ")");
            return o.finish(exit_ok);
        }

        if (cmd_convert->parsed()) {
            Output o(machine, out, err, "convert");
            if (opt_contact.empty() == opt_topological.empty())
                throw validation_error("convert: give exactly one of --contact or --topological");
            const Int tb = detail::parse_int(opt_tb_str, "--tb");
            o.input("tb", io::int_to_json(tb));
            if (!opt_contact.empty()) {
                const Rational c = detail::parse_rational(opt_contact, "--contact");
                o.input("contact", c.to_string());
                const Rational r = contact_to_topological(c, tb);
                o.result("topological", r.to_string());
                o.human("topological = " + r.to_string());
            } else {
                const Rational r = detail::parse_rational(opt_topological, "--topological");
                o.input("topological", r.to_string());
                const Rational c = topological_to_contact(r, tb);
                o.result("contact", c.to_string());
                o.human("contact = " + c.to_string());
            }
            return o.finish(exit_ok);
        }

        if (cmd_rolfsen->parsed() || cmd_contact_rolfsen->parsed()) {
            const bool contact_mode = cmd_contact_rolfsen->parsed();
            Output o(machine, out, err, contact_mode ? "contact-rolfsen" : "rolfsen");
            o.input("file", file_path);
            o.input("component", opt_component);
            if (opt_component < 1) throw validation_error("--component is 1-based");
            const auto file = io::load_diagram(file_path);
            const std::size_t index = static_cast<std::size_t>(opt_component - 1);
            MoveResult moved = contact_mode
                                   ? contact_rolfsen(file.diagram, file.aux, index)
                                   : rolfsen_twist(file.diagram, file.aux,
                                                   TwistSpec{index, detail::parse_int(opt_twists, "--twists")});
            for (const std::string& w : moved.warnings) o.warn(w);
            const json dj = io::diagram_to_json(moved.diagram, moved.aux);
            o.result("diagram", dj);
            if (!machine) out << dj.dump(2) << "\n";
            return o.finish(exit_ok);
        }

        if (cmd_lens->parsed()) {
            Output o(machine, out, err, "lens");
            o.input("coefficient", opt_coefficient);
            const LensSpace lens =
                opt_coefficient == "inf"
                    ? LensSpace::s3()
                    : lens_from_unknot_surgery(detail::parse_rational(opt_coefficient, "--coefficient"));
            o.warn("convention: (-p/q)-surgery along the unknot yields L(p,q)");
            o.result("lens", lens.to_string());
            o.result("p", io::int_to_json(lens.p()));
            o.result("q", io::int_to_json(lens.q()));
            o.human(lens.to_string());
            return o.finish(exit_ok);
        }

        if (cmd_cosmetic->parsed()) {
            Output o(machine, out, err, "cosmetic-pair");
            const Rational c1 = detail::parse_rational(opt_c1, "--c1");
            const Rational c2 = detail::parse_rational(opt_c2, "--c2");
            const Int tb = detail::parse_int(opt_tb_str, "--tb");
            o.input("c1", c1.to_string());
            o.input("c2", c2.to_string());
            o.input("tb", io::int_to_json(tb));
            const CosmeticPairReport rep = cosmetic_pair_check(c1, c2, tb);
            o.warn("convention: (-p/q)-surgery along the unknot yields L(p,q)");
            o.result("topological", json::array({rep.topological1.to_string(), rep.topological2.to_string()}));
            o.result("lens", json::array({rep.lens1.to_string(), rep.lens2.to_string()}));
            o.result("oriented_homeomorphic", rep.oriented_homeomorphic);
            o.result("homeomorphic", rep.homeomorphic);
            o.human("topological coefficients " + rep.topological1.to_string() + " and " +
                    rep.topological2.to_string());
            o.human(rep.lens1.to_string() + " vs " + rep.lens2.to_string() + ": " +
                    (rep.oriented_homeomorphic
                         ? "orientation-preserving homeomorphic"
                         : (rep.homeomorphic ? "homeomorphic only after reversing orientation"
                                             : "not homeomorphic")));
            return o.finish(exit_ok);
        }

        if (cmd_glue->parsed()) {
            Output o(machine, out, err, "glue");
            const Int tb = detail::parse_int(opt_tb_str, "--tb");
            const Int p = detail::parse_int(opt_p, "--p");
            o.input("tb", io::int_to_json(tb));
            o.input("p", io::int_to_json(p));
            const GluingResult g = glue_standard_neighborhoods(tb, p);
            o.result("lens", g.lens.to_string());
            o.result("q", io::int_to_json(g.recovered_q));
            o.result("gluing",
                     json{{"mu_image", json::array({io::int_to_json(g.gluing.mu_image.mu),
                                                    io::int_to_json(g.gluing.mu_image.lambda)})},
                          {"lambda_image", json::array({io::int_to_json(g.gluing.lambda_image.mu),
                                                        io::int_to_json(g.gluing.lambda_image.lambda)})}});
            o.result("determinant", io::int_to_json(g.gluing.determinant()));
            o.result("tbq_spine1", g.tbq_spine1.to_string());
            o.result("tbq_spine2", g.tbq_spine2.to_string());
            o.human("lens space " + g.lens.to_string() + "  (q = " + g.recovered_q.str() + ")");
            o.human("mu_1 -> " + g.gluing.mu_image.to_string() + ", lambda_1 -> " +
                    g.gluing.lambda_image.to_string() + " in (mu_2, lambda_2)");
            o.human("tb_Q(spine 1) = " + g.tbq_spine1.to_string() + ", tb_Q(spine 2) = " +
                    g.tbq_spine2.to_string());
            return o.finish(exit_ok);
        }

        if (cmd_bennequin->parsed()) {
            Output o(machine, out, err, "bennequin");
            const Rational tb = detail::parse_rational(opt_tb_str, "--tb");
            std::optional<Int> rot;
            if (!opt_rot.empty()) rot = detail::parse_int(opt_rot, "--rot");
            o.input("tb", tb.to_string());
            o.input("type", opt_type);
            if (rot) o.input("rot", io::int_to_json(*rot));
            const auto bound = max_tb_bound(opt_type);
            if (!bound) {
                o.result("status", "no bound available");
                o.human("no maximal-tb bound available for knot type \"" + opt_type + "\"");
                return o.finish(exit_negative);
            }
            const ObstructionVerdict v = bennequin_check(tb, rot, *bound);
            o.result("violated", v.violated);
            o.result("bound", v.witness_bound.to_string());
            o.result("computed_tb", v.computed_tb.to_string());
            o.human(v.violated
                        ? "VIOLATED: " + v.computed_tb.to_string() + " > " + v.witness_bound.to_string() +
                              " cannot happen in a tight contact structure"
                        : "consistent: " + v.computed_tb.to_string() + " <= " + v.witness_bound.to_string());
            return o.finish(exit_ok);
        }

        if (cmd_scan->parsed()) {
            Output o(machine, out, err, "scan-surgery-theorem");
            const Int from = detail::parse_int(opt_from, "--from");
            const Int to = detail::parse_int(opt_to, "--to");
            o.input("from", io::int_to_json(from));
            o.input("to", io::int_to_json(to));
            const auto rows = surgery_theorem_scan(from, to);
            json jrows = json::array();
            bool all_violated = true;
            for (const ScanRow& r : rows) {
                jrows.push_back(json{{"n", io::int_to_json(r.n)},
                                     {"tb_new", io::int_to_json(r.tb_new)},
                                     {"type", r.knot_type},
                                     {"bound", r.bound.to_string()},
                                     {"violated", r.violated}});
                all_violated = all_violated && r.violated;
                o.human("n = " + r.n.str() + ": tb_new = " + r.tb_new.str() + ", type = " + r.knot_type +
                        ", bound = " + r.bound.to_string() +
                        (r.violated ? "  -> Bennequin violated" : "  -> consistent"));
            }
            o.result("rows", std::move(jrows));
            o.result("all_violated", all_violated);
            return o.finish(exit_ok);
        }
    } catch (const validation_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_error;
    }
    return exit_error;
}

}  // namespace cli
}  // namespace surgcalc
