// edgeideal: command-line front end.
//
// Exit status: 0 on success or agreement, 1 when a census or --check finds a
// mismatch, 2 on usage, parse or precondition errors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <edgeideal/edgeideal.hpp>

#include "report.hpp"

namespace ei = edgeideal;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct GraphSource {
    std::string file;
    std::string edges;
    std::optional<int> vertices;

    void attach(CLI::App* cmd) {
        cmd->add_option("graph", file, "Graph file: 'n m' header, then m lines 'u v'");
        cmd->add_option("--edges", edges, "Inline edge list, e.g. 1-2,1-3,2-3");
        cmd->add_option("--vertices", vertices, "Vertex count for --edges (default: largest label)");
    }

    ei::SimpleGraph load() const {
        if (file.empty() == edges.empty()) throw CLI::ValidationError("give exactly one of a graph file or --edges");
        if (!edges.empty()) return ei::parse_edge_list(edges, vertices);
        std::ifstream in(file);
        if (!in) throw ei::ParseError("cannot open " + file);
        try {
            return ei::parse_graph(in);
        } catch (const ei::ParseError& e) {
            throw ei::ParseError(file + ": " + e.what());
        }
    }
};

struct Output {
    bool json = false;

    void attach(CLI::App* cmd) { cmd->add_flag("--json", json, "Print JSON instead of a table"); }

    void emit(const nlohmann::ordered_json& j, const std::string& text) const {
        if (json) {
            std::cout << j.dump(2) << '\n';
        } else {
            std::cout << text;
        }
    }
};

ei::ExponentVector exponents_for(const ei::SimpleGraph& g, const std::string& text) {
    auto a = ei::parse_exponents(text);
    if (a.size() != g.vertex_count()) {
        throw ei::ParseError("expected " + std::to_string(g.vertex_count()) + " exponents, got " +
                             std::to_string(a.size()));
    }
    return a;
}

std::vector<ei::report::PrimeRow> oracle_rows(const ei::SimpleGraph& g, int t) {
    if (g.vertex_count() > ei::oracle::kMaxVariables) {
        throw ei::OversizeError("oracle handles at most 8 vertices");
    }
    if (g.edge_count() == 0) {
        return {{ei::VertexSet{}, ei::PrimeKind::minimal, ei::WitnessEvidence{ei::ExponentVector(g.vertex_count())}, true}};
    }
    auto ideal = ei::oracle::power(ei::oracle::edge_ideal(g), t);
    return ei::report::rows_of_oracle(g, ei::oracle::ass_primes_oracle_with_witness(ideal));
}

std::vector<ei::report::PrimeRow> classified_rows(const ei::SimpleGraph& g, int t) {
    if (t == 1) return ei::report::rows_of(ei::ass_primes(g, 1));
    if (t == 2) return ei::report::rows_of(ei::ass_primes_2(g));
    if (t == 3) return ei::report::rows_of(ei::ass_primes_3(g));
    throw ei::UnsupportedParameter("classified method exists for t = 1, 2, 3 only");
}

std::vector<ei::VertexSet> sets_of(const std::vector<ei::report::PrimeRow>& rows) {
    std::vector<ei::VertexSet> out;
    for (const auto& r : rows) out.push_back(r.vertices);
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Powers, saturations and associated primes of graph edge ideals"};
    app.require_subcommand(1);
    int exit_code = 0;

    // nu ------------------------------------------------------------------
    auto* nu_cmd = app.add_subcommand("nu", "Weighted matching number of the graph with vertex weights a");
    GraphSource nu_graph;
    Output nu_out;
    std::string nu_weights;
    nu_graph.attach(nu_cmd);
    nu_out.attach(nu_cmd);
    nu_cmd->add_option("-w,--weights", nu_weights, "Comma-separated weights, one per vertex")->required();
    nu_cmd->callback([&] {
        auto g = nu_graph.load();
        auto h = ei::weighted_graph(g, exponents_for(g, nu_weights));
        auto r = ei::nu(h);
        nu_out.emit(ei::report::nu_json(h, r), ei::report::nu_text(h, r));
    });

    // sat -----------------------------------------------------------------
    auto* sat_cmd = app.add_subcommand("sat", "Membership of x^a in I^t and in its saturation");
    GraphSource sat_graph;
    Output sat_out;
    int sat_t = 0;
    std::string sat_a;
    sat_graph.attach(sat_cmd);
    sat_out.attach(sat_cmd);
    sat_cmd->add_option("-t,--power", sat_t, "Power t >= 1")->required();
    sat_cmd->add_option("-a,--exponents", sat_a, "Comma-separated exponents, one per vertex")->required();
    sat_cmd->callback([&] {
        auto g = sat_graph.load();
        auto a = exponents_for(g, sat_a);
        ei::report::SatResult r{sat_t, a, ei::in_power(g, a, sat_t), ei::in_saturation(g, a, sat_t)};
        sat_out.emit(ei::report::sat_json(r), ei::report::sat_text(r));
    });

    // ass / ass2 / ass3 ---------------------------------------------------
    auto* ass_cmd = app.add_subcommand("ass", "Associated primes of I^t");
    GraphSource ass_graph;
    Output ass_out;
    int ass_t = 0;
    std::string method = "formula";
    bool check = false;
    ass_graph.attach(ass_cmd);
    ass_out.attach(ass_cmd);
    ass_cmd->add_option("-t,--power", ass_t, "Power t >= 1")->required();
    ass_cmd->add_option("--method", method, "formula, oracle or classified")
        ->check(CLI::IsMember({"formula", "oracle", "classified"}));
    ass_cmd->add_flag("--check", check, "Also run the oracle and exit 1 if the answers differ");
    ass_cmd->callback([&] {
        auto g = ass_graph.load();
        if (ass_t < 1) throw ei::InvalidInput("power t must be >= 1");
        std::vector<ei::report::PrimeRow> rows;
        if (method == "formula") rows = ei::report::rows_of(ei::ass_primes(g, ass_t));
        if (method == "oracle") rows = oracle_rows(g, ass_t);
        if (method == "classified") rows = classified_rows(g, ass_t);
        ass_out.emit(ei::report::ass_json(ass_t, rows),
                     ei::report::ass_text(g, "Ass(I^" + std::to_string(ass_t) + "), " + method, rows));
        if (check && sets_of(rows) != sets_of(oracle_rows(g, ass_t))) {
            std::cerr << "mismatch: " << method << " and oracle disagree\n";
            exit_code = kExitMismatch;
        }
    });

    for (int t : {2, 3}) {
        auto* cmd = app.add_subcommand("ass" + std::to_string(t),
                                       "Associated primes of I^" + std::to_string(t) + " from the closed-form criterion");
        auto graph = std::make_shared<GraphSource>();
        auto out = std::make_shared<Output>();
        graph->attach(cmd);
        out->attach(cmd);
        cmd->callback([graph, out, t] {
            auto g = graph->load();
            auto rows = classified_rows(g, t);
            out->emit(ei::report::ass_json(t, rows), ei::report::ass_text(g, "Ass(I^" + std::to_string(t) + ")", rows));
        });
    }

    // ass-infinity / astab-bound / depth ----------------------------------
    auto* inf_cmd = app.add_subcommand("ass-infinity", "Associated primes of I^t for all large t");
    GraphSource inf_graph;
    Output inf_out;
    inf_graph.attach(inf_cmd);
    inf_out.attach(inf_cmd);
    inf_cmd->callback([&] {
        auto g = inf_graph.load();
        auto rows = ei::report::rows_of(ei::ass_infinity(g));
        inf_out.emit(ei::report::ass_json(std::nullopt, rows), ei::report::ass_text(g, "Ass^inf(I)", rows));
    });

    auto* astab_cmd = app.add_subcommand("astab-bound", "Upper bound s(G) on the index where Ass(I^t) stabilizes");
    GraphSource astab_graph;
    Output astab_out;
    astab_graph.attach(astab_cmd);
    astab_out.attach(astab_cmd);
    astab_cmd->callback([&] {
        int s = ei::s_gamma(astab_graph.load());
        astab_out.emit({{"astab_bound", s}}, "astab(I) <= " + std::to_string(s) + "\n");
    });

    auto* depth_cmd = app.add_subcommand("depth", "Whether depth R/I^t > 0 (t = 2 or 3)");
    GraphSource depth_graph;
    Output depth_out;
    int depth_t = 0;
    depth_graph.attach(depth_cmd);
    depth_out.attach(depth_cmd);
    depth_cmd->add_option("-t,--power", depth_t, "Power, 2 or 3")->required();
    depth_cmd->callback([&] {
        bool positive = ei::depth_positive(depth_graph.load(), depth_t);
        depth_out.emit({{"t", depth_t}, {"depth_positive", positive}},
                       std::string("depth R/I^") + std::to_string(depth_t) + (positive ? " > 0\n" : " = 0\n"));
    });

    // facets --------------------------------------------------------------
    auto* facets_cmd = app.add_subcommand("facets", "Facets of the degree complex of I^t at a signed degree a");
    GraphSource facets_graph;
    Output facets_out;
    int facets_t = 0;
    std::string facets_a;
    facets_graph.attach(facets_cmd);
    facets_out.attach(facets_cmd);
    facets_cmd->add_option("-t,--power", facets_t, "Power t >= 1")->required();
    facets_cmd->add_option("-a,--exponents", facets_a, "Comma-separated integer exponents, one per vertex")->required();
    facets_cmd->callback([&] {
        auto g = facets_graph.load();
        auto a = ei::parse_signed_exponents(facets_a);
        if (a.size() != g.vertex_count()) throw ei::ParseError("exponent count differs from vertex count");
        auto facets = ei::facets_delta(g, a, facets_t);
        nlohmann::ordered_json list = nlohmann::ordered_json::array();
        std::string text;
        for (auto f : facets) {
            list.push_back(ei::report::vertex_list(f));
            text += ei::format_set(f) + "\n";
        }
        if (facets.empty()) text = "(no facets)\n";
        facets_out.emit({{"t", facets_t}, {"exponents", a.values()}, {"facets", list}}, text);
    });

    // census --------------------------------------------------------------
    auto* census_cmd = app.add_subcommand("census", "Compare the graph criteria with the ideal oracle on labeled graphs");
    Output census_out;
    int census_n = 0, census_t = 0;
    std::optional<std::size_t> sample;
    std::uint64_t seed = 1;
    int threads = 1;
    bool timing = false;
    census_out.attach(census_cmd);
    census_cmd->add_option("-n,--vertices", census_n, "Number of vertices")->required();
    census_cmd->add_option("-t,--power", census_t, "Power t >= 1")->required();
    census_cmd->add_option("--sample", sample, "Check k random labeled graphs instead of all");
    census_cmd->add_option("--seed", seed, "Seed for --sample");
    census_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
    census_cmd->add_flag("--timing", timing, "Report elapsed time");
    census_cmd->callback([&] {
        auto r = ei::census::run_census(census_n, census_t, {sample, seed, threads});
        census_out.emit(ei::report::census_json(r, timing), ei::report::census_text(r, timing));
        if (!r.passed()) exit_code = kExitMismatch;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    } catch (const ei::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return exit_code;
}
