#include "assoc/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "assoc/deletion.hpp"
#include "assoc/distance.hpp"
#include "assoc/families.hpp"
#include "assoc/flipgraph.hpp"
#include "assoc/format.hpp"
#include "assoc/svg.hpp"
#include "assoc/verify.hpp"

namespace assoc::cli {

namespace {

// A spec names a family member ("A:8" is the minus member, "A:8:+" the plus
// one), a file holding a triangulation, or an inline text or JSON literal.
struct Spec {
    std::vector<Triangulation> members;  // two entries for a bare family name
};

bool looks_like_family(const std::string& s) {
    return s.size() >= 3 && s[1] == ':' && std::string_view("ZABCD").find(s[0]) != std::string_view::npos &&
           std::isdigit(static_cast<unsigned char>(s[2]));
}

Spec resolve(const std::string& text) {
    if (looks_like_family(text)) {
        std::string name = text;
        char member = 0;
        if (name.ends_with(":-") || name.ends_with(":+")) {
            member = name.back();
            name.resize(name.size() - 2);
        }
        const TriangulationPair p = family(parse_family(name));
        if (member == '-') return {{p.first}};
        if (member == '+') return {{p.second}};
        return {{p.first, p.second}};
    }
    std::error_code ec;
    if (std::filesystem::is_regular_file(text, ec)) {
        std::ifstream in(text);
        std::stringstream buffer;
        buffer << in.rdbuf();
        return {{parse_triangulation(buffer.str())}};
    }
    return {{parse_triangulation(text)}};
}

// Two specs give (first member of each); a single family spec gives its pair.
TriangulationPair resolve_pair(const std::vector<std::string>& specs) {
    if (specs.size() == 1) {
        const Spec s = resolve(specs[0]);
        if (s.members.size() != 2) throw InvalidInput("a single spec must name a family pair like A:8");
        return {s.members[0], s.members[1]};
    }
    if (specs.size() != 2) throw InvalidInput("expected one family pair or two triangulations");
    return {resolve(specs[0]).members.front(), resolve(specs[1]).members.front()};
}

std::vector<int> parse_vertices(const std::string& text) {
    std::vector<int> out;
    std::stringstream in(text);
    for (std::string item; std::getline(in, item, ',');) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw InvalidInput("malformed vertex list '" + text + "'");
        out.push_back(v);
    }
    if (out.empty()) throw InvalidInput("empty vertex list");
    return out;
}

std::vector<CheckResult> run_suites(const std::string& suite, const VerifyOptions& options) {
    using Job = std::function<std::vector<CheckResult>()>;
    std::vector<Job> jobs;
    if (suite == "small" || suite == "all") jobs.emplace_back([&] { return check_small_tables(options); });
    if (suite == "recursion" || suite == "all") {
        jobs.emplace_back([&] { return check_recursion(options.recursion_max_n, options); });
    }
    if (suite == "prop11" || suite == "all") {
        jobs.emplace_back([] {
            std::vector<CheckResult> r;
            for (int n : {20, 21, 22}) r.push_back(prop11_witness(n));
            return r;
        });
    }
    if (suite == "properties" || suite == "all") {
        jobs.emplace_back([&] { return property_suite(options.property_max_n, options.seed, options); });
    }

    std::vector<CheckResult> all;
    if (options.threads > 1) {
        std::vector<std::future<std::vector<CheckResult>>> running;
        for (const Job& job : jobs) running.push_back(std::async(std::launch::async, job));
        for (auto& f : running) {
            auto part = f.get();
            all.insert(all.end(), part.begin(), part.end());
        }
    } else {
        for (const Job& job : jobs) {
            auto part = job();
            all.insert(all.end(), part.begin(), part.end());
        }
    }
    return sorted(std::move(all));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Flip distances between triangulations of convex polygons"};
    app.require_subcommand(1);

    unsigned threads = 1;
    std::size_t max_nodes = Budget::from_env().max_nodes;
    app.add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--max-nodes", max_nodes, "Node budget for exhaustive and search routines")
        ->check(CLI::PositiveNumber);

    const std::string spec_help = "Family:n[:-|:+], a file, or an inline triangulation";

    auto* dist = app.add_subcommand("dist", "Exact flip distance with a witness");
    std::vector<std::string> dist_specs;
    std::string dist_format = "text";
    dist->add_option("spec", dist_specs, spec_help)->required()->expected(1, 2);
    dist->add_option("--format", dist_format)->check(CLI::IsMember({"text", "json"}));

    auto* fam = app.add_subcommand("family", "Print both members of a named pair");
    std::string fam_name;
    std::string fam_format = "text";
    fam->add_option("name", fam_name, "Z:n, A:n, B:n, C:n or D:n")->required();
    fam->add_option("--format", fam_format)->check(CLI::IsMember({"text", "json"}));

    auto* diam = app.add_subcommand("diameter", "Flip-graph diameters as CSV");
    int diam_min = 3;
    int diam_max = 12;
    diam->add_option("--min-n", diam_min)->check(CLI::Range(3, kMaxVertices));
    diam->add_option("--max-n", diam_max)->check(CLI::Range(3, kMaxVertices));

    auto* th = app.add_subcommand("theta", "Most flips incident to {a, a+1} along a geodesic");
    std::vector<std::string> th_args;
    th->add_option("args", th_args, "<spec> [<spec>] <vertex>")->required()->expected(2, 3);

    auto* del = app.add_subcommand("delete", "Delete vertices, named in the original labels");
    std::string del_spec;
    std::string del_vertices;
    del->add_option("spec", del_spec, spec_help)->required();
    del->add_option("vertices", del_vertices, "Comma separated labels")->required();

    auto* ver = app.add_subcommand("verify", "Recompute the tables, inequalities and properties");
    VerifyOptions vopt;
    std::string suite = "all";
    std::string report = "text";
    ver->add_option("--suite", suite)->check(CLI::IsMember({"all", "small", "recursion", "prop11", "properties"}));
    ver->add_option("--report", report)->check(CLI::IsMember({"text", "json"}));
    ver->add_option("--max-n", vopt.recursion_max_n, "Largest n for the recursion suite")->check(CLI::Range(8, 20));
    ver->add_option("--property-max-n", vopt.property_max_n)->check(CLI::Range(5, 11));
    ver->add_option("--seed", vopt.seed);
    ver->add_flag("--stretch", vopt.stretch, "Also compute diameters for n = 13..15");

    auto* ren = app.add_subcommand("render", "Draw a triangulation as SVG");
    std::string ren_spec;
    std::string ren_out;
    SvgStyle style;
    bool no_labels = false;
    ren->add_option("spec", ren_spec, spec_help)->required();
    ren->add_option("-o,--output", ren_out, "Output file (default stdout)");
    ren->add_option("--size", style.size)->check(CLI::Range(50.0, 5000.0));
    ren->add_flag("--no-labels", no_labels);

    auto* en = app.add_subcommand("enumerate", "Stream the canonical keys of every triangulation");
    int en_n = 0;
    std::string en_format = "key";
    en->add_option("n", en_n)->required()->check(CLI::Range(3, kMaxVertices));
    en->add_option("--format", en_format)->check(CLI::IsMember({"key", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    Budget budget;
    budget.max_nodes = max_nodes;

    try {
        if (*dist) {
            const TriangulationPair p = resolve_pair(dist_specs);
            SearchOptions options;
            options.budget = budget;
            const SearchReport r = flip_distance(p.first, p.second, options);
            out << (dist_format == "json" ? to_json(r) + "\n" : to_text(r));
        } else if (*fam) {
            const TriangulationPair p = family(parse_family(fam_name));
            if (fam_format == "json") {
                out << to_json(p.first) << '\n' << to_json(p.second) << '\n';
            } else {
                out << to_text(p.first) << '\n' << to_text(p.second) << '\n';
            }
        } else if (*diam) {
            DiameterOptions options;
            options.budget = budget;
            options.threads = threads;
            out << "n,count,diameter,d,2d-4\n";
            for (int n = diam_min; n <= diam_max; ++n) {
                const DiameterRow r = diameter(n, options);
                out << r.n << ',' << r.count << ',' << r.diameter << ',' << r.d << ',' << r.two_d_minus_4 << '\n';
                out.flush();
            }
        } else if (*th) {
            const std::vector<std::string> specs(th_args.begin(), th_args.end() - 1);
            const int a = parse_vertices(th_args.back()).front();
            out << theta(resolve_pair(specs), a, budget) << '\n';
        } else if (*del) {
            const Spec s = resolve(del_spec);
            const std::vector<int> vs = parse_vertices(del_vertices);
            for (const Triangulation& t : s.members) {
                LabeledTriangulation lt(t);
                for (int v : vs) lt = lt.deleted(v);
                out << to_text(lt.triangulation()) << '\n';
            }
        } else if (*ver) {
            vopt.budget = budget;
            vopt.threads = threads;
            const std::vector<CheckResult> results = run_suites(suite, vopt);
            out << (report == "json" ? report_json(results) + "\n" : report_text(results));
            return exit_code(results);
        } else if (*ren) {
            style.labels = !no_labels;
            const std::string svg = render_svg(resolve(ren_spec).members.front(), style);
            if (ren_out.empty()) {
                out << svg;
            } else {
                std::ofstream file(ren_out, std::ios::binary);
                if (!file) throw InvalidInput("cannot write '" + ren_out + "'");
                file << svg;
            }
        } else if (*en) {
            for (const Triangulation& t : enumerate(en_n, budget)) {
                out << (en_format == "text" ? to_text(t) : t.key().hex()) << '\n';
            }
        }
    } catch (const ResourceError& e) {
        err << "resource limit: " << e.what();
        if (e.lower_bound() || e.upper_bound()) {
            err << " (bracket " << (e.lower_bound() ? std::to_string(*e.lower_bound()) : "?") << ".."
                << (e.upper_bound() ? std::to_string(*e.upper_bound()) : "?") << ")";
        }
        err << '\n';
        return kExitResource;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const SizeError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return 0;
}

}  // namespace assoc::cli
