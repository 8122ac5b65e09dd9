#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gcol/corpus.hpp"
#include "gcol/hardness.hpp"
#include "gcol/io.hpp"
#include "gcol/pipeline.hpp"

using nlohmann::json;

namespace {

constexpr int EXIT_COLORABLE = 0;
constexpr int EXIT_UNCOLORABLE = 1;
constexpr int EXIT_BUDGET = 2;
constexpr int EXIT_INPUT = 3;

gcol::Graph load_graph(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw gcol::ParseError("cannot open " + path);
    return gcol::parse_dimacs(in);
}

gcol::ListAssignment load_lists(const std::string& path, const gcol::Graph& g)
{
    if (path.empty())
        return gcol::ListAssignment::full(g);
    std::ifstream in(path);
    if (!in)
        throw gcol::ParseError("cannot open " + path);
    return gcol::parse_lists(in, g);
}

gcol::StageParams parse_params(const std::string& spec, int r)
{
    if (spec == "paper")
        return gcol::StageParams::paper(r);
    if (spec.rfind("cap:", 0) == 0)
        return gcol::StageParams::capped(r, std::stoull(spec.substr(4)));
    throw gcol::ParseError("--params expects `paper` or `cap:<K>`");
}

// pattern grammar: pT | p6+RpP3 | p5+p2
struct Pattern {
    std::vector<int> sizes;
};

Pattern parse_pattern(const std::string& s)
{
    Pattern p;
    std::size_t pos = 0;
    while (pos < s.size()) {
        if (s[pos] != 'p' && s[pos] != 'P')
            throw gcol::ParseError("bad pattern: " + s);
        ++pos;
        std::size_t end = pos;
        while (end < s.size() && std::isdigit(s[end]))
            ++end;
        if (end == pos)
            throw gcol::ParseError("bad pattern: " + s);
        int t = std::stoi(s.substr(pos, end - pos));
        pos = end;
        int rep = 1;
        if (pos < s.size() && s[pos] == '+') {
            ++pos;
            std::size_t rend = pos;
            while (rend < s.size() && std::isdigit(s[rend]))
                ++rend;
            if (rend > pos) { // p6+2p3 form: the repeat prefixes the next path
                rep = 1;
                p.sizes.push_back(t);
                int count = std::stoi(s.substr(pos, rend - pos));
                pos = rend;
                if (pos >= s.size() || (s[pos] != 'p' && s[pos] != 'P'))
                    throw gcol::ParseError("bad pattern: " + s);
                ++pos;
                std::size_t e2 = pos;
                while (e2 < s.size() && std::isdigit(s[e2]))
                    ++e2;
                int t2 = std::stoi(s.substr(pos, e2 - pos));
                pos = e2;
                for (int i = 0; i < count; ++i)
                    p.sizes.push_back(t2);
                continue;
            }
        }
        for (int i = 0; i < rep; ++i)
            p.sizes.push_back(t);
    }
    if (p.sizes.empty())
        throw gcol::ParseError("empty pattern");
    return p;
}

void print_stats(std::ostream& out, const gcol::StageStats& st, const std::string& format)
{
    if (format == "jsonl") {
        json j{{"branches", st.branches},
               {"stage1_members", st.stage1_members},
               {"stage2_members", st.stage2_members},
               {"stage3_members", st.stage3_members},
               {"seeds_tried", st.seeds_tried},
               {"max_seed_size", st.max_seed_size}};
        out << j.dump() << '\n';
    } else if (format == "tsv") {
        out << st.branches << '\t' << st.stage1_members << '\t' << st.stage2_members << '\t'
            << st.stage3_members << '\t' << st.seeds_tried << '\n';
    }
}

int cmd_solve(const std::string& graph_path, const std::string& lists_path, int r,
              const std::string& params_spec, std::uint64_t budget, const std::string& format,
              bool class_check, bool use_oracle)
{
    gcol::Graph g = load_graph(graph_path);
    gcol::ListAssignment l = load_lists(lists_path, g);

    if (use_oracle) {
        auto c = gcol::oracle_solve(g, l);
        if (c) {
            std::cout << "colorable\n";
            gcol::write_coloring(std::cout, *c);
            return EXIT_COLORABLE;
        }
        std::cout << "uncolorable\n";
        return EXIT_UNCOLORABLE;
    }

    gcol::StageParams params = parse_params(params_spec, r);
    gcol::SolveOptions opts;
    opts.budget = budget;
    opts.verify_class = class_check;
    gcol::SolveOutcome res = gcol::solve(g, l, r, params, opts);

    switch (res.status) {
    case gcol::SolveOutcome::Status::Colorable:
        std::cout << "colorable\n";
        gcol::write_coloring(std::cout, res.coloring);
        print_stats(std::cout, res.stats, format);
        return EXIT_COLORABLE;
    case gcol::SolveOutcome::Status::Uncolorable: {
        std::cout << "uncolorable " << (res.witness == "clique4" ? "clique 4" : res.witness);
        for (int v : res.witness_set)
            std::cout << ' ' << v + 1;
        std::cout << '\n';
        print_stats(std::cout, res.stats, format);
        return EXIT_UNCOLORABLE;
    }
    default:
        std::cout << "budget-exceeded\n";
        print_stats(std::cout, res.stats, format);
        return EXIT_BUDGET;
    }
}

int cmd_check_free(const std::string& graph_path, const std::string& pattern)
{
    gcol::Graph g = load_graph(graph_path);
    Pattern p = parse_pattern(pattern);
    auto found = gcol::find_induced_linear_forest(g, p.sizes);
    if (!found) {
        std::cout << "free\n";
        return EXIT_COLORABLE;
    }
    std::cout << "witness";
    for (auto& path : *found) {
        std::cout << " [";
        for (std::size_t i = 0; i < path.vertices.size(); ++i)
            std::cout << (i ? "-" : "") << path.vertices[i] + 1;
        std::cout << "]";
    }
    std::cout << '\n';
    return EXIT_UNCOLORABLE;
}

int cmd_gadget(const std::string& cnf_path, const std::string& out_path, bool verify,
               int odd_cycle)
{
    std::ifstream in(cnf_path);
    if (!in)
        throw gcol::ParseError("cannot open " + cnf_path);
    gcol::CnfInstance f = gcol::parse_cnf(in);
    gcol::NiceCriticalGraph h = odd_cycle > 0 ? gcol::odd_cycle_nice(odd_cycle) : gcol::h_star();
    gcol::GadgetGraph gg = gcol::build_gadget(h, f);

    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file)
            throw gcol::ParseError("cannot write " + out_path);
        out = &file;
    }
    gcol::write_dimacs(*out, gg.graph);
    for (auto& [v, role] : gg.roles) {
        char r = role == gcol::Role::X   ? 'X'
                 : role == gcol::Role::D ? 'D'
                 : role == gcol::Role::C ? 'C'
                                         : 'U';
        *out << "c role " << v + 1 << ' ' << r << '\n';
    }

    if (verify) {
        bool equiv = gcol::verify_reduction(h, f);
        bool free = gcol::check_p5p2_free(gg.graph);
        std::cout << (equiv ? "equivalence holds" : "equivalence FAILS") << ", "
                  << (free ? "(P5+P2)-free" : "NOT (P5+P2)-free") << '\n';
        if (!equiv || !free)
            return EXIT_UNCOLORABLE;
    }
    return EXIT_COLORABLE;
}

int cmd_hypergraph(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw gcol::ParseError("cannot open " + path);
    gcol::Hypergraph h = gcol::parse_hypergraph(in);
    int n = gcol::nu(h), t = gcol::tau(h), lam = gcol::lambda(h);
    std::cout << "nu " << n << "\ntau " << t << "\nlambda " << lam << "\ntau_bound "
              << gcol::tau_bound(std::max(lam, 2), n) << '\n';
    return EXIT_COLORABLE;
}

int cmd_corpus(int n, int count, std::uint64_t seed, int r, double edge_prob,
               const std::string& format)
{
    gcol::Rng rng(seed);
    auto corpus = gcol::make_corpus(rng, count, n, edge_prob, r);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& ins = corpus[i];
        if (format == "jsonl") {
            json j;
            j["instance"] = i;
            j["n"] = ins.g.num_vertices();
            j["edges"] = json::array();
            for (auto [u, v] : ins.g.edges())
                j["edges"].push_back({u + 1, v + 1});
            j["lists"] = json::object();
            for (auto& [v, m] : ins.lists.entries())
                j["lists"][std::to_string(v + 1)] = gcol::mask::colors(m);
            j["colorable"] = ins.colorable;
            std::cout << j.dump() << '\n';
        } else {
            std::cout << "c instance " << i << '\n';
            gcol::write_dimacs(std::cout, ins.g);
            gcol::write_lists(std::cout, ins.lists);
            std::cout << "c label " << (ins.colorable ? "colorable" : "uncolorable") << '\n';
        }
    }
    return EXIT_COLORABLE;
}

int cmd_verify(const std::string& graph_path, const std::string& lists_path,
               const std::string& coloring_path)
{
    gcol::Graph g = load_graph(graph_path);
    gcol::ListAssignment l = load_lists(lists_path, g);
    std::ifstream in(coloring_path);
    if (!in)
        throw gcol::ParseError("cannot open " + coloring_path);
    gcol::Coloring c = gcol::parse_coloring(in);
    if (gcol::verify_coloring(g, l, c)) {
        std::cout << "valid\n";
        return EXIT_COLORABLE;
    }
    std::cout << "invalid\n";
    return EXIT_UNCOLORABLE;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"list-3-coloring toolkit for (P6+rP3)-free graphs"};
    app.require_subcommand(1);

    std::string graph_path, lists_path, coloring_path, out_path;
    std::string params_spec = "cap:2", format = "text", pattern = "p6+1p3";
    int r = 1, n = 10, count = 100, odd_cycle = 0;
    std::uint64_t budget = 5'000'000, seed = 42;
    double edge_prob = 0.3;
    bool verify_flag = false, no_class_check = false;

    auto* solve = app.add_subcommand("solve", "staged list-3-coloring solver");
    solve->add_option("graph", graph_path)->required();
    solve->add_option("--lists", lists_path);
    solve->add_option("--r", r);
    solve->add_option("--params", params_spec, "paper or cap:<K>");
    solve->add_option("--budget", budget);
    solve->add_option("--format", format)->check(CLI::IsMember({"text", "tsv", "jsonl"}));
    solve->add_flag("--no-class-check", no_class_check);

    auto* oracle = app.add_subcommand("oracle", "exact backtracking solver");
    oracle->add_option("graph", graph_path)->required();
    oracle->add_option("--lists", lists_path);

    auto* check = app.add_subcommand("check-free", "induced-subgraph freeness check");
    check->add_option("graph", graph_path)->required();
    check->add_option("--pattern", pattern, "p<T>, p6+<R>p3, or p5+p2");

    auto* gadget = app.add_subcommand("gadget", "3-SAT coloring-hardness gadget");
    gadget->add_option("cnf", graph_path)->required();
    gadget->add_option("--out", out_path);
    gadget->add_option("--odd-cycle", odd_cycle, "use a nice 3-critical odd cycle instead of H*");
    gadget->add_flag("--verify", verify_flag);

    auto* hyper = app.add_subcommand("hypergraph", "nu/tau/lambda of a hypergraph");
    hyper->add_option("file", graph_path)->required();

    auto* corpus = app.add_subcommand("corpus", "labelled random instance generator");
    corpus->add_option("--n", n);
    corpus->add_option("--count", count);
    corpus->add_option("--seed", seed);
    corpus->add_option("--r", r);
    corpus->add_option("--edge-prob", edge_prob);
    corpus->add_option("--format", format)->check(CLI::IsMember({"text", "jsonl"}));

    auto* verify = app.add_subcommand("verify", "check a coloring file");
    verify->add_option("graph", graph_path)->required();
    verify->add_option("--lists", lists_path);
    verify->add_option("--coloring", coloring_path)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed())
            return cmd_solve(graph_path, lists_path, r, params_spec, budget, format,
                             !no_class_check, false);
        if (oracle->parsed())
            return cmd_solve(graph_path, lists_path, r, params_spec, budget, format, false, true);
        if (check->parsed())
            return cmd_check_free(graph_path, pattern);
        if (gadget->parsed())
            return cmd_gadget(graph_path, out_path, verify_flag, odd_cycle);
        if (hyper->parsed())
            return cmd_hypergraph(graph_path);
        if (corpus->parsed())
            return cmd_corpus(n, count, seed, r, edge_prob, format);
        if (verify->parsed())
            return cmd_verify(graph_path, lists_path, coloring_path);
    } catch (const gcol::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return EXIT_INPUT;
    } catch (const gcol::ContractError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return EXIT_INPUT;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return EXIT_INPUT;
    }
    return EXIT_INPUT;
}
