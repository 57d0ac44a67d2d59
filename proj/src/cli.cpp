#include "webcalc/cli.hpp"

#include "webcalc/ckm.hpp"
#include "webcalc/invariant.hpp"
#include "webcalc/io.hpp"
#include "webcalc/relations.hpp"
#include "webcalc/render.hpp"
#include "webcalc/tableau.hpp"
#include "webcalc/uq.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <ostream>

namespace webcalc {

namespace {

WebGraph load_web(const std::string& path) {
    WebGraph g = web_from_json(read_json_file(path));
    require_valid(g);
    return g;
}

std::uint64_t env_seed() {
    const char* s = std::getenv("WEBCALC_SEED");
    if (s == nullptr || *s == '\0') return 0;
    return std::stoull(s);
}

std::pair<int, int> parse_flow(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("--flows expects i,j");
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
}

struct RelationArgs {
    std::string rule;
    bool all = false;
    int max_n = 4;
    int n = 0, k = 0, l = 0, m = 0, r = 0, s = 0;
    std::string report;
};

RelationInstance single_relation(const RelationArgs& a) {
    if (a.rule == "bigon") return make_bigon(a.n, a.k, a.l);
    if (a.rule == "ih") return make_IH(a.n, a.k, a.l, a.m);
    if (a.rule == "square-removal") return make_square_removal(a.n, a.k, a.l, a.r, a.s);
    if (a.rule == "square-switch") return make_square_switch_unit(a.n, a.k, a.l);
    if (a.rule == "square-switch-general") return make_square_switch_general(a.n, a.k, a.l, a.r, a.s);
    if (a.rule == "loop") return make_loop(a.n, a.k);
    if (a.rule == "circle") return make_circle(a.n, a.k);
    throw std::invalid_argument("unknown relation rule '" + a.rule + "'");
}

int run_relations(const RelationArgs& a, int jobs, std::ostream& out) {
    std::vector<RelationInstance> insts;
    if (a.all) {
        for (const auto& rule : relation_rules()) {
            auto g = relation_grid(rule, a.max_n);
            insts.insert(insts.end(), g.begin(), g.end());
        }
    } else if (a.n > 0) {
        insts.push_back(single_relation(a));
    } else {
        insts = relation_grid(a.rule, a.max_n);
    }
    const auto results = verify_all(insts, jobs);
    Json failures = Json::array();
    std::size_t passed = 0;
    for (const auto& r : results) {
        if (r.ok) {
            ++passed;
            continue;
        }
        out << "FAIL " << r.label << "\n";
        failures.push_back({{"instance", r.label}, {"residual", vector_to_json(r.residual)}});
    }
    if (results.size() == 1 && passed == 1) out << "PASS " << results[0].label << "\n";
    out << "relations: " << passed << "/" << results.size() << " verified\n";
    if (!failures.empty()) {
        if (a.report.empty())
            out << failures.dump(2) << "\n";
        else
            write_text_file(a.report, failures.dump(2) + "\n");
    }
    return failures.empty() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Web vectors of Fontaine webs over U_q(sl_n)", "webcalc"};
    app.require_subcommand(1);
    app.fallthrough();
    int jobs = 1;
    app.add_option("--jobs", jobs, "Worker threads for batch checks")->check(CLI::PositiveNumber);

    std::string file, output, format = "text", stranding_file, flow_text, word;
    bool count = false;
    int n = 0, m = 0, random = 0;
    RelationArgs rel;

    auto* validate_cmd = app.add_subcommand("validate", "Check a web file");
    validate_cmd->add_option("web", file)->required();

    auto* strandings_cmd = app.add_subcommand("strandings", "List or count strandings");
    strandings_cmd->add_option("web", file)->required();
    strandings_cmd->add_flag("--count", count);

    auto* vector_cmd = app.add_subcommand("vector", "Print the web vector");
    vector_cmd->add_option("web", file)->required();
    vector_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* inv_cmd = app.add_subcommand("check-invariance", "Apply E_i, F_i, K_i to the web vector");
    inv_cmd->add_option("web", file)->required();

    auto* base_cmd = app.add_subcommand("base-stranding", "Stranding from dual distances");
    base_cmd->add_option("web", file)->required();
    base_cmd->add_option("-o", output);

    auto* tab_cmd = app.add_subcommand("from-tableau", "Build the web of a standard tableau");
    tab_cmd->add_option("--n", n)->required();
    tab_cmd->add_option("--word", word, "Row of each entry, e.g. 12132344")->required();
    tab_cmd->add_option("-o", output);
    tab_cmd->add_option("--stranding", stranding_file);

    auto* oracle_cmd = app.add_subcommand("oracle-check", "Compare f with the CKM composition");
    oracle_cmd->add_option("program", file);
    oracle_cmd->add_option("--random", random, "Check this many random programs (seed from WEBCALC_SEED)");
    oracle_cmd->add_option("--n", n);

    auto* rel_cmd = app.add_subcommand("relations", "Verify web relations");
    rel_cmd->add_option("--rule", rel.rule)->check(CLI::IsMember(relation_rules()));
    rel_cmd->add_flag("--all", rel.all);
    rel_cmd->add_option("--max-n", rel.max_n);
    rel_cmd->add_option("--n", rel.n);
    rel_cmd->add_option("--k", rel.k);
    rel_cmd->add_option("--l", rel.l);
    rel_cmd->add_option("--m", rel.m);
    rel_cmd->add_option("--r", rel.r);
    rel_cmd->add_option("--s", rel.s);
    rel_cmd->add_option("--report", rel.report, "Write failure residuals here");

    auto* rank_cmd = app.add_subcommand("rank", "Rank of the tableau web vectors");
    rank_cmd->add_option("--n", n)->required();
    rank_cmd->add_option("--m", m)->required();

    auto* render_cmd = app.add_subcommand("render", "Draw a web as SVG");
    render_cmd->add_option("web", file)->required();
    render_cmd->add_option("-o", output)->required();
    render_cmd->add_option("--stranding", stranding_file);
    render_cmd->add_option("--flows", flow_text, "Highlight the (i,j) flow");

    std::vector<const char*> argv{"webcalc"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (*validate_cmd) {
            WebGraph g = web_from_json(read_json_file(file));
            ValidationReport rep = validate(g);
            out << (rep.ok() ? "valid\n" : rep.str() + "\n");
            return rep.ok() ? 0 : 1;
        }
        if (*strandings_cmd) {
            WebGraph g = load_web(file);
            auto all = enumerate_strandings(g);
            if (count) {
                out << all.size() << "\n";
            } else {
                Json j = Json::array();
                for (const auto& s : all) j.push_back(stranding_to_json(g, s));
                out << j.dump(2) << "\n";
            }
            return 0;
        }
        if (*vector_cmd) {
            WebVector v = web_vector(load_web(file));
            out << (format == "json" ? vector_to_json(v).dump(2) : vector_text(v)) << "\n";
            return 0;
        }
        if (*inv_cmd) {
            WebGraph g = load_web(file);
            bool ok = true;
            for (const auto& row : invariance_table(web_vector(g), g.n)) {
                out << row.generator << "_" << row.i << " " << (row.pass ? "pass" : "FAIL") << "\n";
                ok = ok && row.pass;
            }
            out << (ok ? "invariant\n" : "not invariant\n");
            return ok ? 0 : 1;
        }
        if (*base_cmd) {
            WebGraph g = load_web(file);
            Stranding s = base_stranding(g);
            Json j = stranding_to_json(g, s);
            if (output.empty())
                out << j.dump(2) << "\n";
            else
                write_text_file(output, j.dump(2) + "\n");
            out << "monomial " << monomial_str(boundary_monomial(g, s)) << "\n";
            return validate_stranding(g, s) ? 0 : 1;
        }
        if (*tab_cmd) {
            StandardTableau t = StandardTableau::from_word(n, word);
            if (!validate_tableau(t)) throw std::invalid_argument("not a standard tableau: " + word);
            TableauWeb tw = web_from_tableau(t);
            const std::string text = web_to_json(tw.web).dump(2) + "\n";
            if (output.empty())
                out << text;
            else
                write_text_file(output, text);
            if (!stranding_file.empty())
                write_text_file(stranding_file, stranding_to_json(tw.web, tw.stranding).dump(2) + "\n");
            return 0;
        }
        if (*oracle_cmd) {
            if (random > 0) {
                const std::uint64_t base = env_seed();
                int failed = 0;
                for (int i = 0; i < random; ++i) {
                    const std::uint64_t seed = base + static_cast<std::uint64_t>(i);
                    const int pn = n > 0 ? n : 2 + static_cast<int>(seed % 3);
                    Program p = random_program(pn, seed);
                    if (!compare_f_g(p)) {
                        ++failed;
                        out << "FAIL seed " << seed << " " << program_to_json(p).dump() << "\n";
                    }
                }
                out << "oracle: " << random - failed << "/" << random << " agree (base seed " << base << ")\n";
                return failed == 0 ? 0 : 1;
            }
            if (file.empty()) throw std::invalid_argument("oracle-check needs a program file or --random");
            Program p = program_from_json(read_json_file(file));
            bool ok = compare_f_g(p);
            out << "sgn " << program_sign(p) << "\n" << (ok ? "f = sgn g\n" : "f != sgn g\n");
            return ok ? 0 : 1;
        }
        if (*rel_cmd) {
            if (!rel.all && rel.rule.empty()) throw std::invalid_argument("relations needs --rule or --all");
            return run_relations(rel, jobs, out);
        }
        if (*rank_cmd) {
            RankReport r = basis_rank(n, m);
            out << "rank " << r.rank << " expected " << r.expected << "\n";
            return r.ok() ? 0 : 1;
        }
        if (*render_cmd) {
            WebGraph g = load_web(file);
            SvgOptions opt;
            Stranding s;
            if (!stranding_file.empty()) {
                s = stranding_from_json(g, read_json_file(stranding_file));
                opt.stranding = &s;
            }
            if (!flow_text.empty()) opt.flow = parse_flow(flow_text);
            write_text_file(output, render_svg(g, opt));
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace webcalc
