// Command-line front end: exact solves, lower-bound reports, constructive
// certificates, extremal-family checks, and CSV surveys.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "diss/bounds.hpp"
#include "diss/constructive.hpp"
#include "diss/cycles.hpp"
#include "diss/errors.hpp"
#include "diss/extremal.hpp"
#include "diss/generators.hpp"
#include "diss/graph_io.hpp"
#include "diss/solver.hpp"

using nlohmann::json;
using namespace diss;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInternal = 4;

bool log_enabled() {
    const char* lvl = std::getenv("DISS_LOG");
    return lvl && std::string(lvl) != "" && std::string(lvl) != "off";
}

void log_line(const std::string& msg) {
    if (log_enabled())
        std::cerr << "[diss] " << msg << "\n";
}

struct CommonOpts {
    std::string input;
    std::string format = "auto"; // auto | g6 | edges
    std::string out;
    long long budget_nodes = SolverLimits{}.node_limit;
    long long budget_ms = SolverLimits{}.time_limit_ms;
    std::size_t cycle_cap = kDefaultCycleCap;
    bool text = false;

    SolverLimits limits() const { return {budget_nodes, budget_ms}; }
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_input = true) {
    if (needs_input)
        cmd->add_option("input", o.input, "graph file ('-' for stdin)")->required();
    cmd->add_option("--format", o.format, "input format: auto, g6, edges")
        ->check(CLI::IsMember({"auto", "g6", "edges"}));
    cmd->add_option("--out", o.out, "write output to file instead of stdout");
    cmd->add_option("--budget-nodes", o.budget_nodes, "solver node limit")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--budget-ms", o.budget_ms, "solver time limit (ms)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--cycle-cap", o.cycle_cap, "chordless-cycle enumeration cap")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--text", o.text, "human-readable output instead of JSON");
}

std::vector<Graph> load_graphs(const CommonOpts& o) {
    std::string text;
    if (o.input == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(o.input);
        if (!in)
            throw InvalidInputError("cannot open input file: " + o.input);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    GraphFormat fmt;
    if (o.format == "g6")
        fmt = GraphFormat::Graph6;
    else if (o.format == "edges")
        fmt = GraphFormat::EdgeList;
    else
        fmt = sniff_format(text);
    auto graphs = parse_graph_file(text, fmt);
    log_line("parsed " + std::to_string(graphs.size()) + " graph(s) from " + o.input);
    return graphs;
}

void emit(const CommonOpts& o, const std::string& payload) {
    if (o.out.empty()) {
        std::cout << payload << "\n";
        return;
    }
    std::ofstream out(o.out);
    if (!out)
        throw InvalidInputError("cannot open output file: " + o.out);
    out << payload << "\n";
}

// Single object for one graph, array for batch input.
void emit_json(const CommonOpts& o, std::vector<json> rows) {
    if (rows.size() == 1)
        emit(o, rows[0].dump(2));
    else
        emit(o, json(rows).dump(2));
}

std::string pretty_rational(const Rational& r) {
    if (denominator(r) == 1)
        return rational_to_string(r);
    std::ostringstream ss;
    ss << rational_to_string(r) << " (~" << rational_to_double(r) << ")";
    return ss.str();
}

// ---------------------------------------------------------------- exact ----

int cmd_exact(const CommonOpts& o) {
    auto graphs = load_graphs(o);
    std::vector<json> rows;
    std::ostringstream text;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const Graph& g = graphs[i];
        auto t0 = std::chrono::steady_clock::now();
        DissociationCertificate cert = diss_exact(g, o.limits());
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        if (!is_dissociation_set(g, cert.vertices) ||
            static_cast<int>(cert.vertices.size()) != cert.size)
            throw InternalError("solver witness failed independent verification");
        rows.push_back({{"index", i},
                        {"n", g.order()},
                        {"m", g.size()},
                        {"diss", cert.size},
                        {"witness", cert.vertices},
                        {"optimal", cert.optimal}});
        text << "graph " << i << ": n=" << g.order() << " m=" << g.size()
             << " diss=" << cert.size << " elapsed=" << ms << "ms\n";
    }
    if (o.text)
        emit(o, text.str());
    else
        emit_json(o, std::move(rows));
    return kExitOk;
}

// ---------------------------------------------------------------- bound ----

json inequality_to_json(const InequalityCheck& chk) {
    return {{"bound", rational_to_json(chk.bound)},
            {"diss", chk.diss},
            {"slack", rational_to_json(chk.slack)},
            {"tight", chk.tight}};
}

int cmd_bound(const CommonOpts& o, bool all, bool packing, bool check) {
    auto graphs = load_graphs(o);
    std::vector<json> rows;
    std::ostringstream text;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const Graph& g = graphs[i];
        json row{{"index", i}, {"n", g.order()}, {"m", g.size()}};
        if (all) {
            BoundReport rep = bounds_report(g, o.cycle_cap);
            row.update(bound_report_to_json(rep));
            row["e1_pretty"] = pretty_rational(rep.e1);
            text << "graph " << i << ": e1 = " << pretty_rational(rep.e1)
                 << ", e1_packing = " << pretty_rational(rep.e1_packing) << "\n";
        } else {
            Rational e1 = bound_e1(g, o.cycle_cap);
            row["k"] = static_cast<int>(components(g).size());
            row["c1"] = c1_count(g, o.cycle_cap);
            row["e1"] = rational_to_json(e1);
            row["e1_pretty"] = pretty_rational(e1);
            text << "graph " << i << ": e1 = " << pretty_rational(e1) << "\n";
            if (packing) {
                int nu1 = max_disjoint_c1_packing(g, o.cycle_cap);
                Rational ep = Rational(g.order()) -
                              Rational(g.size() + static_cast<int>(components(g).size()) + nu1, 3);
                row["nu1"] = nu1;
                row["e1_packing"] = rational_to_json(ep);
                row["e1_packing_pretty"] = pretty_rational(ep);
                text << "graph " << i << ": e1_packing = " << pretty_rational(ep) << "\n";
            }
        }
        if (check) {
            InequalityCheck chk = check_inequality(g, o.limits(), o.cycle_cap);
            row["check"] = inequality_to_json(chk);
            text << "graph " << i << ": diss = " << chk.diss
                 << (chk.tight ? " (tight)" : " (slack)") << "\n";
        }
        rows.push_back(std::move(row));
    }
    if (o.text)
        emit(o, text.str());
    else
        emit_json(o, std::move(rows));
    return kExitOk;
}

// -------------------------------------------------------------- certify ----

int cmd_certify(const CommonOpts& o) {
    auto graphs = load_graphs(o);
    std::vector<json> rows;
    std::ostringstream text;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const Graph& g = graphs[i];
        Rational e1 = bound_e1(g, o.cycle_cap);
        Rational need = ceil_rational_as_int(e1);
        DissociationCertificate cert = certify_bound_set(g);
        const bool valid = is_dissociation_set(g, cert.vertices) &&
                           static_cast<int>(cert.vertices.size()) == cert.size;
        if (!valid || Rational(cert.size) < need)
            throw InternalError("constructive certificate failed verification");
        rows.push_back({{"index", i},
                        {"n", g.order()},
                        {"m", g.size()},
                        {"bound", rational_to_json(e1)},
                        {"bound_ceil", static_cast<long long>(numerator(need))},
                        {"witness", cert.vertices},
                        {"size", cert.size},
                        {"verified", true}});
        text << "graph " << i << ": bound " << pretty_rational(e1) << ", witness size "
             << cert.size << " (verified)\n";
    }
    if (o.text)
        emit(o, text.str());
    else
        emit_json(o, std::move(rows));
    return kExitOk;
}

// ------------------------------------------------------------- extremal ----

int cmd_extremal(const CommonOpts& o) {
    auto graphs = load_graphs(o);
    std::vector<json> rows;
    std::ostringstream text;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const Graph& g = graphs[i];
        json row{{"index", i}, {"n", g.order()}, {"m", g.size()}};
        const bool tree = is_tree(g);
        row["tree"] = tree;
        if (tree)
            row["extremal_tree"] = is_extremal_tree(g);
        InequalityCheck chk = check_inequality(g, o.limits(), o.cycle_cap);
        row["check"] = inequality_to_json(chk);
        bool extremal = chk.tight;
        if (is_connected(g) && is_cycle_disjoint(g)) {
            auto trace = membership_in_C(g);
            row["member"] = trace.has_value();
            row["trace"] = trace ? trace_to_json(*trace) : json(nullptr);
        } else {
            row["member"] = nullptr;
            row["trace"] = "not applicable - not connected cycle-disjoint";
        }
        row["extremal"] = extremal;
        text << "graph " << i << ": extremal=" << (extremal ? "true" : "false")
             << " tree=" << (tree ? "true" : "false") << "\n";
        rows.push_back(std::move(row));
    }
    if (o.text)
        emit(o, text.str());
    else
        emit_json(o, std::move(rows));
    return kExitOk;
}

// --------------------------------------------------------------- survey ----

struct SurveyOpts {
    std::string gen; // tree | gnp | cactus | member | exhaustive (or "" for file input)
    int n = 10;
    double p = 0.3;
    int count = 100;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::string family = "C";
    bool packing = true;
};

void csv_rational(std::ostringstream& row, const Rational& r) {
    row << "," << numerator(r) << "," << denominator(r) << "," << rational_to_double(r);
}

void csv_row_opt(std::ostringstream& row, const BoundRow& b) {
    if (b.applicable)
        csv_rational(row, b.value);
    else
        row << ",,,";
}

int cmd_survey(const CommonOpts& o, const SurveyOpts& s) {
    std::vector<Graph> graphs;
    if (s.gen.empty()) {
        graphs = load_graphs(o);
    } else if (s.gen == "exhaustive") {
        graphs = nonisomorphic_graphs(s.n);
    } else {
        if (!s.seed_set)
            throw InvalidInputError("--seed is required for randomized generation");
        for (int i = 0; i < s.count; ++i) {
            std::mt19937_64 rng(s.seed * 0x9e3779b97f4a7c15ULL + i);
            if (s.gen == "tree") {
                graphs.push_back(random_tree(s.n, rng));
            } else if (s.gen == "gnp") {
                graphs.push_back(random_gnp(s.n, s.p, rng));
            } else if (s.gen == "cactus") {
                graphs.push_back(random_cactus(s.n, rng));
            } else if (s.gen == "member") {
                Family fam = s.family == "T" ? Family::T : Family::C;
                graphs.push_back(random_member(fam, s.n, rng()).first);
            } else {
                throw InvalidInputError("unknown generator: " + s.gen);
            }
        }
    }
    log_line("survey over " + std::to_string(graphs.size()) + " graph(s)");

    std::ostringstream out;
    out << "index,n,m,k,c1,nu1,diss"
        << ",e1_num,e1_den,e1"
        << ",e1_packing_num,e1_packing_den,e1_packing"
        << ",e0_degree_num,e0_degree_den,e0_degree"
        << ",e0_inverse_degree_num,e0_inverse_degree_den,e0_inverse_degree"
        << ",e0_goharasc_num,e0_goharasc_den,e0_goharasc"
        << ",e0_tree_num,e0_tree_den,e0_tree"
        << ",e0_density_num,e0_density_den,e0_density"
        << ",e0_two_thirds_num,e0_two_thirds_den,e0_two_thirds"
        << ",slack_num,slack_den,slack,tight\n";
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const Graph& g = graphs[i];
        BoundReport rep = bounds_report(g, o.cycle_cap);
        DissociationCertificate cert = diss_exact(g, o.limits());
        Rational slack = Rational(cert.size) - rep.e1;
        if (slack < 0)
            throw InternalError("dissociation number fell below the lower bound");
        std::ostringstream row;
        row << i << "," << rep.n << "," << rep.m << "," << rep.k << "," << rep.c1 << ","
            << rep.nu1 << "," << cert.size;
        csv_rational(row, rep.e1);
        csv_rational(row, rep.e1_packing);
        csv_row_opt(row, rep.e0_degree);
        csv_row_opt(row, rep.e0_inverse_degree);
        csv_row_opt(row, rep.e0_goharasc);
        csv_row_opt(row, rep.e0_tree);
        csv_row_opt(row, rep.e0_density);
        csv_row_opt(row, rep.e0_two_thirds);
        csv_rational(row, slack);
        row << "," << (slack == 0 ? 1 : 0);
        out << row.str() << "\n";
    }
    std::string payload = out.str();
    payload.pop_back(); // emit() appends the trailing newline
    emit(o, payload);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and certified toolkit for the dissociation number of graphs"};
    app.require_subcommand(1);

    CommonOpts exact_o, bound_o, certify_o, extremal_o, survey_o;
    bool bound_all = false, bound_packing = false, bound_check = false;
    SurveyOpts survey_s;

    auto* exact = app.add_subcommand("exact", "maximum dissociation set, exact");
    add_common(exact, exact_o);

    auto* bound = app.add_subcommand("bound", "certified lower bounds");
    add_common(bound, bound_o);
    bound->add_flag("--all", bound_all, "emit the full bound report");
    bound->add_flag("--packing", bound_packing, "also emit the disjoint-cycle packing variant");
    bound->add_flag("--check", bound_check, "solve exactly and report slack/tightness");

    auto* certify = app.add_subcommand("certify", "constructive certificate for the main bound");
    add_common(certify, certify_o);

    auto* extremal = app.add_subcommand("extremal", "tightness and extremal-family membership");
    add_common(extremal, extremal_o);

    auto* survey = app.add_subcommand("survey", "CSV sweep over an ensemble of graphs");
    add_common(survey, survey_o, false);
    survey->add_option("input", survey_o.input, "graph file (omit when using --gen)");
    survey->add_option("--gen", survey_s.gen, "generator: tree, gnp, cactus, member, exhaustive")
        ->check(CLI::IsMember({"tree", "gnp", "cactus", "member", "exhaustive"}));
    survey->add_option("--n", survey_s.n, "order / size budget for generated graphs");
    survey->add_option("--p", survey_s.p, "edge probability for gnp");
    survey->add_option("--count", survey_s.count, "number of generated graphs")
        ->check(CLI::PositiveNumber);
    survey->add_option("--seed", survey_s.seed, "RNG seed (required for random generators)")
        ->trigger_on_parse()
        ->each([&](const std::string&) { survey_s.seed_set = true; });
    survey->add_option("--family", survey_s.family, "member family: T or C")
        ->check(CLI::IsMember({"T", "C"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (exact->parsed())
            return cmd_exact(exact_o);
        if (bound->parsed())
            return cmd_bound(bound_o, bound_all, bound_packing, bound_check);
        if (certify->parsed())
            return cmd_certify(certify_o);
        if (extremal->parsed())
            return cmd_extremal(extremal_o);
        if (survey->parsed()) {
            if (survey_s.gen.empty() && survey_o.input.empty())
                throw InvalidInputError("survey needs an input file or --gen");
            return cmd_survey(survey_o, survey_s);
        }
    } catch (const BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << " (best dissociation set found so far: "
                  << e.incumbent.size << " vertices; raise --budget-nodes / --budget-ms)\n";
        return kExitBudget;
    } catch (const CycleCapExceededError& e) {
        std::cerr << "error: " << e.what() << " (raise --cycle-cap)\n";
        return kExitBudget;
    } catch (const SearchLimitExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
