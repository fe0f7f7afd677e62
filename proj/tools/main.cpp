// Command-line front end: sorting, hook configurations, fertility, the
// sorting tree, extremal descent queries, claim verification, and counting
// sequences. One binary, one subcommand per area.
//
// Exit codes: 0 success (verification passed), 1 verification failure,
// 2 usage or domain error, 3 brute-force cap exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "stacksort/descents.hpp"
#include "stacksort/dynamics.hpp"
#include "stacksort/extremal.hpp"
#include "stacksort/hooks.hpp"
#include "stacksort/permutation.hpp"
#include "stacksort/stack_sort.hpp"
#include "stacksort/stats.hpp"
#include "stacksort/verify.hpp"

namespace {

using nlohmann::json;
using namespace stacksort;

struct Options {
    int cap = Dynamics::kDefaultCap;
    bool as_json = false;
    std::string out_path;

    std::string perm_text;
    int iterations = 1;
    bool show_trace = false;
    bool list_configs = false;
    bool list_preimages = false;
    int n = 0;
    int t = 0;
    std::string format = "json";
    bool count_only = false;
    bool witness = false;
    std::string claim = "all";
    int max_n = 7;
    std::string kind;
    int k = -1;
    int stat_n = -1;
    std::string stat_format = "csv";
};

json perm_json(const Permutation& p) { return json(p.entries()); }

json trace_json(const SortTrace& tr) {
    json steps = json::array();
    for (const SortStep& st : tr.steps) {
        steps.push_back({{"action", st.action == SortStep::Action::push ? "push" : "pop"},
                         {"entry", st.entry},
                         {"stack", st.stack},
                         {"output", st.output}});
    }
    return steps;
}

void print_trace_text(std::ostream& os, const SortTrace& tr) {
    for (const SortStep& st : tr.steps) {
        os << (st.action == SortStep::Action::push ? "push " : "pop  ") << st.entry
           << "   stack:";
        for (int e : st.stack) os << ' ' << e;
        os << "   output:";
        for (int e : st.output) os << ' ' << e;
        os << '\n';
    }
}

int cmd_sort(std::ostream& os, const Options& opt) {
    const Permutation p = Permutation::parse(opt.perm_text);
    if (opt.iterations < 0) throw std::invalid_argument("--iterations must be >= 0");
    const Permutation result = stack_sort_iter(p, opt.iterations);

    if (opt.as_json) {
        json out{{"input", perm_json(p)},
                 {"iterations", opt.iterations},
                 {"result", perm_json(result)}};
        if (opt.show_trace) {
            json passes = json::array();
            Permutation cur = p;
            for (int i = 1; i <= opt.iterations; ++i) {
                passes.push_back({{"pass", i}, {"steps", trace_json(trace(cur))}});
                cur = stack_sort(cur);
            }
            out["trace"] = std::move(passes);
        }
        os << out.dump(2) << '\n';
        return 0;
    }

    if (opt.show_trace) {
        Permutation cur = p;
        for (int i = 1; i <= opt.iterations; ++i) {
            if (opt.iterations > 1) os << "pass " << i << ":\n";
            print_trace_text(os, trace(cur));
            cur = stack_sort(cur);
        }
    }
    os << result.str() << '\n';
    return 0;
}

int cmd_vhc(std::ostream& os, const Options& opt) {
    const Permutation p = Permutation::parse(opt.perm_text);
    const auto configs = enumerate_vhcs(p);
    const bool sorted = !configs.empty();

    if (opt.as_json) {
        json out{{"permutation", perm_json(p)},
                 {"count", configs.size()},
                 {"sorted", sorted}};
        if (opt.list_configs) {
            json list = json::array();
            for (const auto& cfg : configs) list.push_back(json(cfg));
            out["configurations"] = std::move(list);
        }
        os << out.dump(2) << '\n';
        return 0;
    }

    os << "count " << configs.size() << '\n';
    os << "sorted: " << (sorted ? "true" : "false") << '\n';
    if (opt.list_configs) {
        for (const auto& cfg : configs) {
            bool first = true;
            for (const Hook& h : cfg.hooks) {
                os << (first ? "" : " ") << '(' << h.sw << ',' << h.ne << ')';
                first = false;
            }
            os << '\n';
        }
    }
    return 0;
}

int cmd_fertility(std::ostream& os, const Options& opt, Dynamics& dyn) {
    const Permutation p = Permutation::parse(opt.perm_text);
    const FertilityReport report = dyn.preimages(p, opt.list_preimages);

    if (opt.as_json) {
        json out{{"permutation", perm_json(report.target)},
                 {"fertility", report.fertility}};
        if (report.preimages) {
            json list = json::array();
            for (const Permutation& q : *report.preimages) list.push_back(perm_json(q));
            out["preimages"] = std::move(list);
        }
        os << out.dump(2) << '\n';
        return 0;
    }

    os << report.fertility << '\n';
    if (report.preimages) {
        for (const Permutation& q : *report.preimages) os << q.str() << '\n';
    }
    return 0;
}

int cmd_tree(std::ostream& os, const Options& opt, Dynamics& dyn) {
    if (opt.n < 1) throw std::invalid_argument("--n must be positive");
    const StackSortTree& tree = dyn.build_tree(opt.n);
    if (opt.format == "dot") {
        os << tree_to_dot(tree);
    } else {
        os << tree_to_json(tree).dump(2) << '\n';
    }
    return 0;
}

int cmd_extremal(std::ostream& os, const Options& opt, Dynamics& dyn) {
    const ExtremalQuery query(opt.n, opt.t);
    const bool same_parity = (query.n - query.t) % 2 == 0;
    const bool closed_form = same_parity && query.t >= 2;

    BigInt count;
    std::vector<Permutation> members;
    const bool need_members = !opt.count_only;
    if (closed_form) {
        count = double_factorial(query.n - query.t - 1);
        if (need_members) members = enumerate_extremal_pattern(query.n, query.t);
    } else {
        // No known formula: scan the t-fold image for the descent bound.
        for (const Permutation& p : dyn.image_of_iterate(query.n, query.t)) {
            if (count_descents(p) == query.bound) {
                ++count;
                if (need_members) members.push_back(p);
            }
        }
    }

    std::optional<LiftChain> chain;
    std::optional<Permutation> odd_witness;
    if (opt.witness) {
        if (closed_form) {
            chain = build_lift_chain(enumerate_extremal_pattern(query.n, query.t).front(),
                                     query.t);
        } else if (!same_parity) {
            odd_witness = odd_case_witness(dyn, query.n, query.t);
        }
        // same parity with t = 1 has no certificate construction here
    }

    if (opt.as_json) {
        json out{{"n", query.n}, {"t", query.t}, {"bound", query.bound},
                 {"count", count.str()}};
        if (!closed_form) out["note"] = "no closed form (open); counted by brute force";
        if (need_members) {
            json list = json::array();
            for (const Permutation& p : members) list.push_back(perm_json(p));
            out["permutations"] = std::move(list);
        }
        if (chain) {
            json stages = json::array();
            for (const Permutation& st : chain->stages) stages.push_back(perm_json(st));
            out["lift_chain"] = std::move(stages);
        }
        if (odd_witness) out["witness"] = perm_json(*odd_witness);
        os << out.dump(2) << '\n';
        return 0;
    }

    os << "bound " << query.bound << '\n';
    os << "count " << count.str();
    if (!closed_form) os << "   [no closed form (open); counted by brute force]";
    os << '\n';
    for (const Permutation& p : members) os << p.str() << '\n';
    if (chain) {
        os << "lift chain:\n";
        for (const Permutation& st : chain->stages) os << "  " << st.str() << '\n';
    }
    if (odd_witness) os << "witness: " << odd_witness->str() << '\n';
    return 0;
}

int cmd_verify(std::ostream& os, const Options& opt, Dynamics& dyn) {
    std::vector<Claim> claims;
    if (opt.claim == "all") {
        claims = all_claims();
    } else if (auto c = claim_from_name(opt.claim)) {
        claims.push_back(*c);
    } else {
        throw std::invalid_argument("unknown claim '" + opt.claim + "'");
    }

    bool all_pass = true;
    json results = json::array();
    for (Claim c : claims) {
        const VerificationResult r = run_claim(dyn, c, opt.max_n);
        all_pass &= r.pass;
        if (opt.as_json) {
            results.push_back(verification_json(r));
        } else {
            os << "claim " << r.claim << " [" << r.range << "] "
               << (r.pass ? "pass" : "FAIL");
            if (!r.pass) {
                if (r.counterexample) os << "  counterexample: " << r.counterexample->str();
                if (!r.detail.empty()) os << "  (" << r.detail << ')';
            }
            os << "  (" << r.elapsed_seconds << "s)\n";
        }
    }
    if (opt.as_json) os << results.dump(2) << '\n';
    return all_pass ? 0 : 1;
}

int cmd_stats(std::ostream& os, const Options& opt, Dynamics& dyn) {
    const auto need_k = [&]() {
        if (opt.k < 0) throw std::invalid_argument("--kind " + opt.kind + " requires --k");
        return opt.k;
    };
    const auto need_n = [&]() {
        if (opt.stat_n < 0) throw std::invalid_argument("--kind " + opt.kind + " requires --n");
        return opt.stat_n;
    };

    const auto emit_scalar = [&](const std::string& value, const char* param, int arg) {
        if (opt.as_json || opt.stat_format == "json") {
            os << json{{"kind", opt.kind}, {param, arg}, {"value", value}}.dump(2) << '\n';
        } else {
            os << value << '\n';
        }
    };
    const auto emit_distribution = [&](const Distribution& d, int arg) {
        if (opt.as_json || opt.stat_format == "json") {
            json out = distribution_json(d);
            out["k"] = arg;
            os << out.dump(2) << '\n';
        } else {
            os << distribution_csv(d);
        }
    };

    if (opt.kind == "lassalle") {
        emit_scalar(std::to_string(lassalle_brute(dyn, need_k())), "k", opt.k);
    } else if (opt.kind == "first-entry") {
        emit_distribution(first_entry_distribution(dyn, need_k()), opt.k);
    } else if (opt.kind == "hotspot") {
        emit_distribution(hotspot_distribution(dyn, need_k()), opt.k);
    } else if (opt.kind == "west") {
        emit_scalar(west_count(need_n()).str(), "n", opt.stat_n);
    } else if (opt.kind == "catalan") {
        emit_scalar(catalan(need_n()).str(), "n", opt.stat_n);
    } else {
        throw std::invalid_argument("unknown kind '" + opt.kind + "'");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stack-sorting dynamics: the map, its preimages, hook "
                 "configurations, descent extremes, and counting sequences"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--cap", opt.cap, "Brute-force cap on permutation length")
        ->check(CLI::Range(1, Dynamics::kMaxCap));
    app.add_flag("--json", opt.as_json, "Emit JSON instead of plain text");
    app.add_option("--out", opt.out_path, "Write output to this file instead of stdout");

    auto* sort_cmd = app.add_subcommand("sort", "Apply the stack-sorting map");
    sort_cmd->add_option("--perm", opt.perm_text, "Permutation (digits or separated entries)")
        ->required();
    sort_cmd->add_option("--iterations", opt.iterations, "Number of passes (default 1)");
    sort_cmd->add_flag("--trace", opt.show_trace, "Log every push and pop");

    auto* vhc_cmd = app.add_subcommand("vhc", "Count or list valid hook configurations");
    vhc_cmd->add_option("--perm", opt.perm_text, "Permutation")->required();
    vhc_cmd->add_flag("--list", opt.list_configs, "List every configuration");

    auto* fert_cmd = app.add_subcommand("fertility", "Count preimages under the map");
    fert_cmd->add_option("--perm", opt.perm_text, "Permutation")->required();
    fert_cmd->add_flag("--preimages", opt.list_preimages, "List the preimages");

    auto* tree_cmd = app.add_subcommand("tree", "Emit the sorting tree on all of S_n");
    tree_cmd->add_option("--n", opt.n, "Permutation length")->required();
    tree_cmd->add_option("--format", opt.format, "json or dot")
        ->check(CLI::IsMember({"json", "dot"}));

    auto* ext_cmd = app.add_subcommand("extremal", "Descent-maximizing t-sorted permutations");
    ext_cmd->add_option("--n", opt.n, "Permutation length")->required();
    ext_cmd->add_option("--t", opt.t, "Iterate count")->required();
    ext_cmd->add_flag("--count-only", opt.count_only, "Skip the permutation list");
    ext_cmd->add_flag("--witness", opt.witness, "Include a sortedness certificate");

    auto* verify_cmd = app.add_subcommand("verify", "Exhaustively check a structural claim");
    verify_cmd->add_option("--claim", opt.claim,
                           "thm1|thm2|thm3|thm4|cor1|claim1|west|catalan|symmetry|"
                           "hotspot-shift|all");
    verify_cmd->add_option("--max-n", opt.max_n, "Largest length to scan (default 7)");

    auto* stats_cmd = app.add_subcommand("stats", "Counting sequences and distributions");
    stats_cmd->add_option("--kind", opt.kind, "lassalle|first-entry|hotspot|west|catalan")
        ->required();
    stats_cmd->add_option("--k", opt.k, "Half-length parameter: scans S_{2k+1}");
    stats_cmd->add_option("--n", opt.stat_n, "Length parameter for west/catalan");
    stats_cmd->add_option("--format", opt.stat_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::ostringstream buffer;
    int exit_code = 0;
    try {
        Dynamics dyn(opt.cap);
        if (*sort_cmd) {
            exit_code = cmd_sort(buffer, opt);
        } else if (*vhc_cmd) {
            exit_code = cmd_vhc(buffer, opt);
        } else if (*fert_cmd) {
            exit_code = cmd_fertility(buffer, opt, dyn);
        } else if (*tree_cmd) {
            exit_code = cmd_tree(buffer, opt, dyn);
        } else if (*ext_cmd) {
            exit_code = cmd_extremal(buffer, opt, dyn);
        } else if (*verify_cmd) {
            exit_code = cmd_verify(buffer, opt, dyn);
        } else if (*stats_cmd) {
            exit_code = cmd_stats(buffer, opt, dyn);
        }
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }

    if (!opt.out_path.empty()) {
        std::ofstream file(opt.out_path);
        if (!file) {
            std::cerr << "error: cannot open '" << opt.out_path << "' for writing\n";
            return 2;
        }
        file << buffer.str();
    } else {
        std::cout << buffer.str();
    }
    return exit_code;
}
