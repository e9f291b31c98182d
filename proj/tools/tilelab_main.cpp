// tilelab: exact invariants, thresholds, constructions and tilings for
// k-uniform hypergraphs. Every subcommand prints a JSON envelope
// {status, data, timing_ms}; rationals are rendered as "p/q" strings.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "tilelab/constructions.hpp"
#include "tilelab/fractional.hpp"
#include "tilelab/json_io.hpp"
#include "tilelab/lattice.hpp"
#include "tilelab/partite.hpp"
#include "tilelab/thresholds.hpp"
#include "tilelab/tiling.hpp"

namespace {

using tilelab::Json;

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        try {
            out.push_back(std::stoi(item));
        } catch (const std::logic_error&) {
            tilelab::fail(tilelab::ErrorCode::parse,
                          "bad integer list entry: " + item);
        }
    return out;
}

std::vector<tilelab::IndexVector> parse_vector_list(const std::string& text) {
    std::vector<tilelab::IndexVector> out;
    std::stringstream ss(text);
    std::string group;
    while (std::getline(ss, group, ';')) {
        tilelab::IndexVector v;
        for (int x : parse_int_list(group)) v.push_back(x);
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<tilelab::Vertex> parse_vertex_list(const std::string& text) {
    std::vector<tilelab::Vertex> out;
    for (int x : parse_int_list(text)) out.push_back(x);
    return out;
}

Json hypergraph_json(const tilelab::Hypergraph& h) {
    return Json{{"k", h.k()}, {"n", h.n()}, {"edges", h.edges()}};
}

void print_table(const Json& j, const std::string& prefix, std::ostream& out) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items())
            print_table(value, prefix.empty() ? key : prefix + "." + key, out);
    } else {
        out << prefix << ": " << j.dump() << "\n";
    }
}

long long env_budget() {
    if (const char* raw = std::getenv("TILELAB_BUDGET")) {
        try {
            return std::stoll(raw);
        } catch (const std::logic_error&) {
            // fall through to the default on garbage input
        }
    }
    return tilelab::kDefaultBudget;
}

struct Options {
    std::string format = "json";
    long long budget = env_budget();

    // shared parameter slots, one per flag name
    std::string file, host, pattern, inner, base, out, tiling, generators,
        target, turan = "zero", profile_list, set_list, sigma, values;
    long long n = 0, q = 0;
    int k = 0, s = 0, t = 0, r = 0;
    bool set_given = false;

    tilelab::PartiteProfile profile() const {
        return tilelab::PartiteProfile(parse_int_list(profile_list));
    }
};

Json write_construction(const Options& opt, const tilelab::Hypergraph& h,
                        const Json& certificate) {
    std::vector<std::string> comments;
    if (!certificate.is_null())
        comments.push_back("#certificate " + certificate.dump());
    tilelab::write_hg_file(opt.out, h, comments);
    Json data{{"out", opt.out}, {"k", h.k()}, {"n", h.n()},
              {"edges", h.edge_count()}};
    if (!certificate.is_null()) data["certificate"] = certificate;
    return data;
}

tilelab::TuranFn make_turan_fn(const Options& opt,
                               const tilelab::Hypergraph& pattern) {
    int k = pattern.k();
    if (opt.turan == "zero") return [](long long) { return 0LL; };
    if (opt.turan == "pair-bound")
        return [k](long long x) {
            long long b = 1;
            for (int i = 0; i < k - 1; ++i) b = b * (x - i) / (i + 1);
            return b / k;
        };
    // exact brute force; slow, budget-gated
    long long budget = opt.budget;
    return [pattern, budget](long long x) {
        return tilelab::turan_brute(static_cast<int>(x), pattern, budget);
    };
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact analysis of tilings in k-uniform hypergraphs"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "table"}));
    app.add_option("--budget", opt.budget,
                   "search-node budget (or TILELAB_BUDGET)");

    std::function<Json()> action;

    auto* invariants = app.add_subcommand("invariants", "structural invariants");
    invariants->add_option("file", opt.file)->required();
    invariants->callback([&] {
        action = [&] {
            auto f = tilelab::read_hg_file(opt.file);
            return to_json(tilelab::structural_invariants(f, opt.budget));
        };
    });

    auto* realizations_cmd =
        app.add_subcommand("realizations", "all k-partite realizations");
    realizations_cmd->add_option("file", opt.file)->required();
    realizations_cmd->callback([&] {
        action = [&] {
            auto f = tilelab::read_hg_file(opt.file);
            auto rs = tilelab::realizations(f, opt.budget);
            Json list = Json::array();
            for (const auto& r : rs) list.push_back(r);
            return Json{{"count", rs.size()}, {"realizations", std::move(list)}};
        };
    });

    auto* tau_cmd = app.add_subcommand("tau", "vertex cover number");
    tau_cmd->add_option("file", opt.file)->required();
    tau_cmd->callback([&] {
        action = [&] {
            auto f = tilelab::read_hg_file(opt.file);
            return Json{{"tau", tilelab::vertex_cover_number(f, opt.budget)}};
        };
    });

    auto* frob = app.add_subcommand("frobenius", "Frobenius number");
    frob->add_option("values", opt.values, "comma-separated entries")->required();
    frob->callback([&] {
        action = [&] {
            std::vector<long long> b;
            for (int x : parse_int_list(opt.values)) b.push_back(x);
            return Json{{"value", tilelab::frobenius(b)}};
        };
    });

    auto* threshold = app.add_subcommand("threshold", "codegree thresholds");
    threshold->require_subcommand(1);
    auto* th_mycroft = threshold->add_subcommand("mycroft", "general formula");
    th_mycroft->add_option("--pattern", opt.pattern)->required();
    th_mycroft->add_option("--n", opt.n)->required();
    th_mycroft->callback([&] {
        action = [&] {
            auto f = tilelab::read_hg_file(opt.pattern);
            return to_json(tilelab::mycroft_threshold(f, opt.n, opt.budget));
        };
    });
    auto* th_k112 = threshold->add_subcommand("k112", "(1,...,1,2) threshold");
    th_k112->add_option("--k", opt.k)->required();
    th_k112->add_option("--n", opt.n)->required();
    th_k112->callback([&] {
        action = [&] {
            return Json{{"value", tilelab::k112_threshold(opt.k, opt.n)},
                        {"divisibility", tilelab::k112_divisibility(opt.k, opt.n)}};
        };
    });
    auto* th_cycle = threshold->add_subcommand("cycle", "loose-cycle threshold");
    th_cycle->add_option("--k", opt.k)->required();
    th_cycle->add_option("--s", opt.s)->required();
    th_cycle->add_option("--n", opt.n)->required();
    th_cycle->callback([&] {
        action = [&] {
            return Json{
                {"value", tilelab::cycle_threshold(opt.k, opt.s, opt.n).str()}};
        };
    });
    auto* th_bound = threshold->add_subcommand("bound", "Turan-term bound");
    th_bound->add_option("--profile", opt.profile_list)->required();
    th_bound->add_option("--n", opt.n)->required();
    th_bound->add_option("--turan", opt.turan)
        ->check(CLI::IsMember({"zero", "pair-bound", "brute"}));
    th_bound->callback([&] {
        action = [&] {
            auto profile = opt.profile();
            auto pattern = tilelab::complete_partite(profile);
            auto fn = make_turan_fn(opt, pattern);
            return Json{
                {"value", tilelab::degree_bound(profile, opt.n, fn).str()},
                {"constant", tilelab::profile_constant(profile)}};
        };
    });

    auto* construct = app.add_subcommand("construct", "lower-bound hosts");
    construct->require_subcommand(1);
    auto* c_space = construct->add_subcommand("space-barrier", "barrier host");
    c_space->add_option("--pattern", opt.pattern)->required();
    c_space->add_option("--n", opt.n)->required();
    c_space->add_option("-o,--out", opt.out)->required();
    c_space->callback([&] {
        action = [&] {
            auto f = tilelab::read_hg_file(opt.pattern);
            auto [h, cert] =
                tilelab::space_barrier(f, static_cast<int>(opt.n), opt.budget);
            return write_construction(opt, h, to_json(cert));
        };
    });
    auto* c_str = construct->add_subcommand("strengthened", "barrier plus inner");
    c_str->add_option("--profile", opt.profile_list)->required();
    c_str->add_option("--n", opt.n)->required();
    c_str->add_option("--inner", opt.inner)->required();
    c_str->add_option("-o,--out", opt.out)->required();
    c_str->callback([&] {
        action = [&] {
            auto inner = tilelab::read_hg_file(opt.inner);
            auto [h, cert] = tilelab::strengthened_barrier(
                opt.profile(), static_cast<int>(opt.n), inner);
            return write_construction(opt, h, to_json(cert));
        };
    });
    auto* c_mub = construct->add_subcommand("mubayi", "finite-field host");
    c_mub->add_option("--k", opt.k)->required();
    c_mub->add_option("--t", opt.t)->required();
    c_mub->add_option("--q", opt.q)->required();
    c_mub->add_option("-o,--out", opt.out)->required();
    c_mub->callback([&] {
        action = [&] {
            auto [h, cert] = tilelab::mubayi_graph(opt.k, opt.t, opt.q);
            return write_construction(opt, h, to_json(cert));
        };
    });
    auto* c_par = construct->add_subcommand("parity", "even-intersection host");
    c_par->add_option("--base", opt.base)->required();
    c_par->add_option("--set", opt.set_list, "vertices of A (may be empty)");
    c_par->add_option("-o,--out", opt.out)->required();
    c_par->callback([&] {
        action = [&] {
            auto g = tilelab::read_hg_file(opt.base);
            auto h = tilelab::parity_construction(g, parse_vertex_list(opt.set_list));
            return write_construction(opt, h, Json());
        };
    });

    auto* tile = app.add_subcommand("tile", "tilings of a host by a pattern");
    tile->require_subcommand(1);
    auto add_tile_opts = [&](CLI::App* cmd) {
        cmd->add_option("--host", opt.host)->required();
        cmd->add_option("--pattern", opt.pattern)->required();
    };
    auto* t_factor = tile->add_subcommand("factor", "perfect tiling");
    add_tile_opts(t_factor);
    t_factor->callback([&] {
        action = [&] {
            auto h = tilelab::read_hg_file(opt.host);
            auto f = tilelab::read_hg_file(opt.pattern);
            auto cert = tilelab::has_perfect_tiling(h, f, opt.budget);
            if (!cert.has_value()) return Json{{"perfect", false}};
            return Json{{"perfect", true}, {"certificate", to_json(*cert)}};
        };
    });
    auto* t_max = tile->add_subcommand("max", "maximum tiling");
    add_tile_opts(t_max);
    t_max->callback([&] {
        action = [&] {
            auto h = tilelab::read_hg_file(opt.host);
            auto f = tilelab::read_hg_file(opt.pattern);
            auto cert = tilelab::max_tiling(h, f, opt.budget);
            return Json{{"copies", cert.copies.size()},
                        {"covered", cert.covered},
                        {"certificate", to_json(cert)}};
        };
    });
    auto* t_free = tile->add_subcommand("free", "subgraph freeness");
    add_tile_opts(t_free);
    t_free->callback([&] {
        action = [&] {
            auto h = tilelab::read_hg_file(opt.host);
            auto f = tilelab::read_hg_file(opt.pattern);
            return Json{{"free", tilelab::is_subgraph_free(h, f, opt.budget)}};
        };
    });

    auto* turan = app.add_subcommand("turan", "exact extremal numbers");
    turan->require_subcommand(1);
    auto* tu_ex = turan->add_subcommand("ex", "Turan number");
    tu_ex->add_option("--n", opt.n)->required();
    tu_ex->add_option("--pattern", opt.pattern)->required();
    tu_ex->callback([&] {
        action = [&] {
            auto f = tilelab::read_hg_file(opt.pattern);
            return Json{{"value", tilelab::turan_brute(static_cast<int>(opt.n), f,
                                                       opt.budget)}};
        };
    });
    auto* tu_coex = turan->add_subcommand("coex", "codegree Turan number");
    tu_coex->add_option("--n", opt.n)->required();
    tu_coex->add_option("--pattern", opt.pattern)->required();
    tu_coex->callback([&] {
        action = [&] {
            auto f = tilelab::read_hg_file(opt.pattern);
            auto result =
                tilelab::coex_brute(static_cast<int>(opt.n), f, opt.budget);
            return Json{{"value", result.value},
                        {"witness", hypergraph_json(result.witness)}};
        };
    });

    auto* steiner = app.add_subcommand("steiner", "Steiner system check");
    steiner->add_option("--t", opt.t)->required();
    steiner->add_option("file", opt.file)->required();
    steiner->callback([&] {
        action = [&] {
            auto h = tilelab::read_hg_file(opt.file);
            return Json{{"steiner", tilelab::is_steiner_system(h, opt.t)},
                        {"t", opt.t}};
        };
    });

    auto* fractional = app.add_subcommand("fractional", "fractional tilings");
    fractional->require_subcommand(1);
    auto* f_val = fractional->add_subcommand("validate", "check an assignment");
    f_val->add_option("--host", opt.host)->required();
    f_val->add_option("--profile", opt.profile_list)->required();
    f_val->add_option("--tiling", opt.tiling)->required();
    f_val->callback([&] {
        action = [&] {
            auto l = tilelab::read_hg_file(opt.host);
            std::ifstream in(opt.tiling);
            if (!in)
                tilelab::fail(tilelab::ErrorCode::parse,
                              "cannot open " + opt.tiling);
            Json j = Json::parse(in, nullptr, false);
            if (j.is_discarded())
                tilelab::fail(tilelab::ErrorCode::parse,
                              "invalid JSON in " + opt.tiling);
            auto h = tilelab::fractional_from_json(j);
            return to_json(tilelab::validate(l, opt.profile(), h));
        };
    });
    auto* f_std = fractional->add_subcommand("standard", "per-edge weighting");
    f_std->add_option("--profile", opt.profile_list)->required();
    f_std->callback([&] {
        action = [&] {
            auto profile = opt.profile();
            auto h = tilelab::standard_weights(profile);
            auto l = tilelab::complete_partite(profile);
            auto report = tilelab::validate(l, profile, h);
            return Json{{"weight", report.weight.str()},
                        {"tiling", to_json(h)}};
        };
    });
    auto* f_ext = fractional->add_subcommand("extended", "extension weighting");
    f_ext->add_option("--profile", opt.profile_list)->required();
    f_ext->callback([&] {
        action = [&] {
            auto profile = opt.profile();
            auto h = tilelab::extended_weights(profile);
            auto l = tilelab::khat_extension(profile);
            auto report = tilelab::validate(l, profile, h);
            return Json{{"weight", report.weight.str()},
                        {"tiling", to_json(h)}};
        };
    });
    auto* f_max = fractional->add_subcommand("maximize", "exact optimum");
    f_max->add_option("--host", opt.host)->required();
    f_max->add_option("--profile", opt.profile_list)->required();
    f_max->callback([&] {
        action = [&] {
            auto l = tilelab::read_hg_file(opt.host);
            auto [h, w] = tilelab::maximize_small(l, opt.profile(), opt.budget);
            return Json{{"weight", w.str()}, {"tiling", to_json(h)}};
        };
    });

    auto* lattice = app.add_subcommand("lattice", "index-vector lattices");
    lattice->require_subcommand(1);
    auto* l_member = lattice->add_subcommand("member", "membership test");
    l_member->add_option("--generators", opt.generators,
                         "semicolon-separated vectors, e.g. 1,2;2,1")
        ->required();
    l_member->add_option("--target", opt.target)->required();
    l_member->callback([&] {
        action = [&] {
            tilelab::IndexVector target;
            for (int x : parse_int_list(opt.target)) target.push_back(x);
            return Json{{"member",
                         tilelab::lattice_contains(
                             parse_vector_list(opt.generators), target)}};
        };
    });
    auto* l_trans = lattice->add_subcommand("transferrals", "all unit differences");
    l_trans->add_option("--generators", opt.generators)->required();
    l_trans->add_option("--r", opt.r)->required();
    l_trans->callback([&] {
        action = [&] {
            return Json{{"complete",
                         tilelab::transferral_complete(
                             parse_vector_list(opt.generators), opt.r)}};
        };
    });

    auto* extremal = app.add_subcommand("extremal", "edge density deficit");
    extremal->add_option("--sigma", opt.sigma, "rational p/q")->required();
    auto* set_opt = extremal->add_option("--set", opt.set_list);
    extremal->add_option("file", opt.file)->required();
    extremal->callback([&] {
        opt.set_given = set_opt->count() > 0;
        action = [&] {
            auto h = tilelab::read_hg_file(opt.file);
            std::optional<std::vector<tilelab::Vertex>> b;
            if (opt.set_given) b = parse_vertex_list(opt.set_list);
            auto d = tilelab::extremal_deficit(h, tilelab::Rat::parse(opt.sigma),
                                               b, opt.budget);
            return Json{{"deficit", d.str()}};
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    auto start = std::chrono::steady_clock::now();
    Json envelope;
    int exit_code = 0;
    try {
        Json data = action();
        envelope = Json{{"status", "ok"}, {"data", std::move(data)}};
    } catch (const tilelab::Error& e) {
        envelope = Json{{"status", "error"},
                        {"code", tilelab::error_code_name(e.code())},
                        {"message", e.what()}};
        exit_code = 1;
    } catch (const std::exception& e) {
        envelope =
            Json{{"status", "error"}, {"code", "internal"}, {"message", e.what()}};
        exit_code = 1;
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    envelope["timing_ms"] = elapsed;

    if (opt.format == "table") {
        if (envelope["status"] == "error")
            std::cout << "status: error\ncode: " << envelope["code"].get<std::string>()
                      << "\nmessage: " << envelope["message"].get<std::string>()
                      << "\n";
        else
            print_table(envelope["data"], "", std::cout);
    } else {
        std::cout << envelope.dump(2) << "\n";
    }
    return exit_code;
}
