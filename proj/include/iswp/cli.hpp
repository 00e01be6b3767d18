#pragma once

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "iswp/color_coding.hpp"
#include "iswp/counting.hpp"
#include "iswp/dp.hpp"
#include "iswp/errors.hpp"
#include "iswp/exact.hpp"
#include "iswp/gadget.hpp"
#include "iswp/generators.hpp"
#include "iswp/graph.hpp"
#include "iswp/hash_family.hpp"
#include "iswp/iso.hpp"
#include "iswp/labelled.hpp"
#include "iswp/minimal.hpp"
#include "iswp/minor_map.hpp"
#include "iswp/property.hpp"
#include "iswp/ramsey.hpp"
#include "iswp/sampling.hpp"
#include "iswp/witness.hpp"

namespace iswp {

inline constexpr const char* kToolVersion = "iswp 0.1.0";

namespace detail {

using Json = nlohmann::ordered_json;

inline std::string fnv1a_digest(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream ss;
    ss << "fnv1a:" << std::hex << std::setfill('0') << std::setw(16) << h;
    return ss.str();
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot write '" + path + "'");
    out << content;
    out.flush();
    if (!out) throw input_error("write failed for '" + path + "'");
}

inline bool file_exists(const std::string& path) { return std::ifstream(path).good(); }

inline Json file_entry(const std::string& path, const std::string& bytes) {
    Json e;
    e["path"] = path;
    e["digest"] = fnv1a_digest(bytes);
    return e;
}

inline std::pair<Graph, Json> load_graph(const std::string& path) {
    std::string bytes = read_file(path);
    return {parse_graph(bytes), file_entry(path, bytes)};
}

inline std::pair<Colouring, Json> load_colouring(const std::string& path, int n) {
    std::string bytes = read_file(path);
    return {parse_colouring(bytes, n), file_entry(path, bytes)};
}

// A property is either a built-in name or a path to a truth-table file.
inline PropertyFamily resolve_property(const std::string& spec, const Limits& lim,
                                       Json& inputs) {
    for (const auto& phi : builtin_properties())
        if (phi.name == spec) return phi;
    if (!file_exists(spec)) return find_property(spec); // throws, listing built-ins
    std::string bytes = read_file(spec);
    inputs["property_file"] = file_entry(spec, bytes);
    return table_property(parse_truth_table(bytes), lim);
}

struct ResolvedPattern {
    Graph graph;
    MinorMap map;
};

// A pattern is either a path to a graph file (cell map file required) or a
// generator spec like "grid3"; generator-provided cell maps may be
// overridden by --map.
inline ResolvedPattern resolve_pattern(const std::string& spec, const std::string& map_path,
                                       int k, Json& inputs, Json& parameters) {
    ResolvedPattern rp;
    std::optional<MinorMap> builtin_map;
    if (file_exists(spec)) {
        std::string bytes = read_file(spec);
        inputs["pattern"] = file_entry(spec, bytes);
        rp.graph = parse_graph(bytes);
    } else {
        PatternResult pr = generate_pattern_by_name(spec);
        parameters["pattern"] = spec;
        rp.graph = pr.graph;
        builtin_map = pr.minor_map;
    }
    if (!map_path.empty()) {
        std::string bytes = read_file(map_path);
        inputs["map"] = file_entry(map_path, bytes);
        rp.map = parse_minor_map(bytes);
    } else if (builtin_map) {
        rp.map = *builtin_map;
    } else {
        throw input_error("pattern '" + spec + "' carries no cell map; provide --map");
    }
    if (rp.map.k != k)
        throw input_error("cell map is for k=" + std::to_string(rp.map.k) + ", requested k=" +
                          std::to_string(k));
    return rp;
}

inline Json count_value(const Count& c) {
    if (c >= std::numeric_limits<std::int64_t>::min() &&
        c <= std::numeric_limits<std::int64_t>::max())
        return Json(static_cast<std::int64_t>(c));
    return Json(c.str());
}

inline Json decision_json(const Decision& d) {
    Json r;
    r["answer"] = d.yes ? "yes" : "no";
    if (d.yes) r["witness"] = d.witness;
    if (!d.note.empty()) r["note"] = d.note;
    return r;
}

inline std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::istringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(token, &used));
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw input_error("bad vertex id '" + token + "' in list '" + text + "'");
        }
    }
    if (out.empty()) throw input_error("empty vertex list");
    return out;
}

} // namespace detail

// The whole command-line tool as a testable function: args exclude the
// program name; the JSON run report goes to `out`, a one-line human summary
// (and error messages) to `err`. Exit status 0 on success, 2 on input
// errors, 3 on budget refusals.
inline int run_cli(const std::vector<std::string>& args_in, std::ostream& out,
                   std::ostream& err) {
    using detail::Json;
    auto started = std::chrono::steady_clock::now();

    CLI::App app{"Parameterised subgraph counting toolkit: exact, approximate and decision "
                 "algorithms for tuple properties, plus the clique-counting gadget."};
    app.name("iswp");
    app.require_subcommand(1);

    std::uint64_t budget = Limits{}.node_budget;
    int threads = 1;
    std::uint64_t seed = 0;
    app.add_option("--budget", budget, "node budget before refusing an enumeration")
        ->capture_default_str();
    app.add_option("--threads", threads, "worker threads for sampling")
        ->envname("ISWP_THREADS")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "seed for randomized runs");

    std::string property, graph_path, colouring_path, mode = "exact";
    int k = 0;
    std::string epsilon = "1/4", delta = "1/10", gk, qn = "1";
    std::string cc_mode = "family", decider = "brute", cc_delta = "1/2", oracle = "exact";
    std::string pattern_spec, map_path, omega_path, out_prefix, copy_list;
    std::uint64_t trials = 1000;
    int fam_n = 0, fam_k = 0;
    bool fam_validate = false;
    std::string fam_out;

    std::string command;
    Json inputs = Json::object();
    Json parameters = Json::object();
    Json result = Json::object();
    std::optional<std::uint64_t> seed_used;
    std::string summary;

    Limits lim; // budget copied in after parsing

    auto resolve_gq = [&](const PropertyFamily& phi) {
        if (!gk.empty()) return parse_rational(gk);
        if (phi.name == "clique_or_is") return Rational(ramsey_promise_gq(k));
        return Rational(1);
    };

    // ---- count ----
    CLI::App* count_cmd =
        app.add_subcommand("count", "count satisfying tuples (exactly or approximately)");
    count_cmd->fallthrough();
    count_cmd->add_option("--property", property, "built-in property name or truth-table file")
        ->required();
    count_cmd->add_option("--graph", graph_path, "host graph file")->required();
    count_cmd->add_option("--colouring", colouring_path,
                          "colouring file; counts only colourful tuples");
    count_cmd->add_option("--k", k, "tuple arity")->required();
    count_cmd->add_option("--mode", mode, "exact | ie | dp | sample")
        ->check(CLI::IsMember({"exact", "ie", "dp", "sample"}))
        ->capture_default_str();
    count_cmd->add_option("--epsilon", epsilon, "sample mode: relative accuracy")
        ->capture_default_str();
    count_cmd->add_option("--delta", delta, "sample mode: failure probability")
        ->capture_default_str();
    count_cmd->add_option("--gk", gk, "sample mode: density promise factor g(k)");
    count_cmd->add_option("--qn", qn, "sample mode: density promise factor q(n)")
        ->capture_default_str();
    count_cmd->callback([&] {
        command = "count";
        lim.node_budget = budget;
        auto [g, gmeta] = detail::load_graph(graph_path);
        inputs["graph"] = gmeta;
        std::optional<Colouring> f;
        if (!colouring_path.empty()) {
            auto [col, cmeta] = detail::load_colouring(colouring_path, g.order());
            inputs["colouring"] = cmeta;
            f = col;
        }
        PropertyFamily phi = detail::resolve_property(property, lim, inputs);
        parameters["property"] = property;
        parameters["k"] = k;
        parameters["mode"] = mode;
        if (mode == "exact") {
            Count c = count_exact_bruteforce(phi, g, k, f, lim);
            result["count"] = detail::count_value(c);
            summary = "count = " + c.str();
        } else if (mode == "ie") {
            if (!f)
                throw input_error("inclusion-exclusion counts colourful tuples; provide "
                                  "--colouring");
            Count c = count_colourful_by_inclusion_exclusion(phi, g, k, *f, {}, lim);
            result["count"] = detail::count_value(c);
            summary = "count = " + c.str();
        } else if (mode == "dp") {
            if (!f)
                throw input_error("the decomposition engine counts colourful tuples; provide "
                                  "--colouring");
            if (!phi.monotone)
                throw input_error("dp mode needs a monotone property (count = copies of the "
                                  "unique minimal pattern)");
            auto minimal = enumerate_minimal_labelled(phi, k, lim);
            if (minimal.size() != 1)
                throw input_error("dp counting needs exactly one minimal labelled pattern at "
                                  "k=" + std::to_string(k) + "; this property has " +
                                  std::to_string(minimal.size()));
            result["pattern_mask"] = mask_to_hex(minimal.front().mask());
            Count c = count_colourful_copies_dp(minimal.front(), g, *f, lim);
            result["count"] = detail::count_value(c);
            summary = "count = " + c.str();
        } else { // sample
            Rational eps = parse_rational(epsilon);
            Rational del = parse_rational(delta);
            Rational gq_g = resolve_gq(phi);
            Rational gq_q = parse_rational(qn);
            parameters["epsilon"] = rational_to_string(eps);
            parameters["delta"] = rational_to_string(del);
            parameters["gk"] = rational_to_string(gq_g);
            parameters["qn"] = rational_to_string(gq_q);
            SampleEstimate est =
                approximate_count_sampling(phi, g, k, eps, del, gq_g, gq_q, seed, f, threads,
                                           lim);
            seed_used = seed;
            result["estimate"] = rational_to_string(est.estimate);
            result["samples"] = est.samples;
            result["hits"] = est.hits;
            summary = "estimate = " + rational_to_string(est.estimate) + " (" +
                      std::to_string(est.hits) + "/" + std::to_string(est.samples) + " hits)";
        }
    });

    // ---- decide ----
    CLI::App* decide_cmd =
        app.add_subcommand("decide", "decide whether any satisfying tuple exists");
    decide_cmd->fallthrough();
    decide_cmd->add_option("--property", property, "built-in property name or truth-table file")
        ->required();
    decide_cmd->add_option("--graph", graph_path, "host graph file")->required();
    decide_cmd->add_option("--colouring", colouring_path,
                           "colouring file; restricts to colourful tuples");
    decide_cmd->add_option("--k", k, "tuple arity")->required();
    decide_cmd->add_option("--mode", mode, "brute | colour-coding | witness | ramsey")
        ->check(CLI::IsMember({"brute", "colour-coding", "witness", "ramsey"}))
        ->required();
    decide_cmd->add_option("--cc-mode", cc_mode, "colour-coding: family | random")
        ->check(CLI::IsMember({"family", "random"}))
        ->capture_default_str();
    decide_cmd->add_option("--decider", decider, "colour-coding: brute | dp")
        ->check(CLI::IsMember({"brute", "dp"}))
        ->capture_default_str();
    decide_cmd->add_option("--delta", cc_delta, "colour-coding random mode: failure probability")
        ->capture_default_str();
    decide_cmd->add_option("--oracle", oracle, "witness mode: exact | sample")
        ->check(CLI::IsMember({"exact", "sample"}))
        ->capture_default_str();
    decide_cmd->add_option("--gk", gk, "witness sample oracle: density promise factor g(k)");
    decide_cmd->add_option("--qn", qn, "witness sample oracle: density promise factor q(n)")
        ->capture_default_str();
    decide_cmd->callback([&] {
        command = "decide";
        lim.node_budget = budget;
        auto [g, gmeta] = detail::load_graph(graph_path);
        inputs["graph"] = gmeta;
        std::optional<Colouring> f;
        if (!colouring_path.empty()) {
            auto [col, cmeta] = detail::load_colouring(colouring_path, g.order());
            inputs["colouring"] = cmeta;
            f = col;
        }
        PropertyFamily phi = detail::resolve_property(property, lim, inputs);
        parameters["property"] = property;
        parameters["k"] = k;
        parameters["mode"] = mode;
        if (mode == "brute") {
            Decision d = decide_exact_bruteforce(phi, g, k, f, lim);
            result = detail::decision_json(d);
            summary = std::string("decision: ") + (d.yes ? "YES" : "NO");
        } else if (mode == "colour-coding") {
            if (f)
                throw input_error("colour coding decides the uncoloured problem; drop "
                                  "--colouring");
            parameters["cc_mode"] = cc_mode;
            parameters["decider"] = decider;
            MulticolourDecider dec = decider == "dp" ? dp_multicolour_decider(lim)
                                                     : brute_force_multicolour_decider(lim);
            ColourCodingMode m =
                cc_mode == "family" ? ColourCodingMode::family : ColourCodingMode::random;
            Rational del = parse_rational(cc_delta);
            if (m == ColourCodingMode::random) {
                parameters["delta"] = rational_to_string(del);
                seed_used = seed;
            }
            ColourCodingResult r = decide_colour_coding(phi, g, k, m, dec, del, seed, lim);
            result["answer"] = r.yes ? "yes" : "no";
            result["colourings_tried"] = r.colourings_tried;
            summary = std::string("decision: ") + (r.yes ? "YES" : "NO") + " after " +
                      std::to_string(r.colourings_tried) + " colourings";
        } else if (mode == "witness") {
            parameters["oracle"] = oracle;
            NonzeroOracle orc;
            if (oracle == "exact") {
                orc = exact_nonzero_oracle(lim);
            } else {
                Rational gq_g = resolve_gq(phi);
                Rational gq_q = parse_rational(qn);
                parameters["gk"] = rational_to_string(gq_g);
                parameters["qn"] = rational_to_string(gq_q);
                orc = sampling_nonzero_oracle(gq_g, gq_q, g.order(), seed, threads, lim);
                seed_used = seed;
            }
            Decision d = decide_via_witness_search(orc, phi, g, k, f, lim);
            result = detail::decision_json(d);
            summary = std::string("decision: ") + (d.yes ? "YES" : "NO");
        } else { // ramsey
            if (phi.name != "clique_or_is")
                throw input_error("ramsey mode decides the clique_or_is property only");
            if (f) throw input_error("ramsey mode decides the uncoloured problem; drop "
                                     "--colouring");
            Decision d = decide_clique_or_is(g, k, lim);
            result = detail::decision_json(d);
            summary = std::string("decision: ") + (d.yes ? "YES" : "NO");
        }
    });

    // ---- props ----
    CLI::App* props_cmd = app.add_subcommand("props", "inspect tuple properties");
    props_cmd->fallthrough();
    props_cmd->require_subcommand(1);
    CLI::App* props_list = props_cmd->add_subcommand("list", "list built-in properties");
    props_list->fallthrough();
    props_list->callback([&] {
        command = "props list";
        lim.node_budget = budget;
        Json arr = Json::array();
        for (const auto& phi : builtin_properties()) {
            Json e;
            e["name"] = phi.name;
            e["symmetric"] = phi.symmetric;
            e["monotone"] = phi.monotone;
            e["uniformly_monotone"] = phi.uniformly_monotone;
            arr.push_back(e);
        }
        result["properties"] = arr;
        summary = std::to_string(arr.size()) + " built-in properties";
    });
    CLI::App* props_minimal =
        props_cmd->add_subcommand("minimal", "minimal satisfying elements at one arity");
    props_minimal->fallthrough();
    props_minimal->add_option("--property", property, "built-in name or truth-table file")
        ->required();
    props_minimal->add_option("--k", k, "arity")->required();
    props_minimal->callback([&] {
        command = "props minimal";
        lim.node_budget = budget;
        PropertyFamily phi = detail::resolve_property(property, lim, inputs);
        parameters["property"] = property;
        parameters["k"] = k;
        MinimalSet ms = compute_minimal_set(phi, k, lim);
        Json lab = Json::array();
        for (const auto& lg : ms.labelled_minimal) lab.push_back(mask_to_hex(lg.mask()));
        Json unlab = Json::array();
        for (const auto& gr : ms.unlabelled_minimal)
            unlab.push_back(mask_to_hex(canonical_mask(gr, lim)));
        result["k"] = k;
        result["labelled"] = lab;
        result["labelled_count"] = lab.size();
        result["unlabelled"] = unlab;
        result["unlabelled_count"] = unlab.size();
        summary = std::to_string(lab.size()) + " labelled / " + std::to_string(unlab.size()) +
                  " unlabelled minimal elements";
    });
    CLI::App* props_check =
        props_cmd->add_subcommand("check", "check monotonicity and uniformity at one arity");
    props_check->fallthrough();
    props_check->add_option("--property", property, "built-in name or truth-table file")
        ->required();
    props_check->add_option("--k", k, "arity")->required();
    props_check->callback([&] {
        command = "props check";
        lim.node_budget = budget;
        PropertyFamily phi = detail::resolve_property(property, lim, inputs);
        parameters["property"] = property;
        parameters["k"] = k;
        UniformityReport r = check_uniformly_monotone(phi, k, lim);
        result["monotone"] = r.monotone;
        result["uniformly_monotone"] = r.uniform;
        if (!r.witness.empty()) result["witness"] = r.witness;
        Json declared;
        declared["symmetric"] = phi.symmetric;
        declared["monotone"] = phi.monotone;
        declared["uniformly_monotone"] = phi.uniformly_monotone;
        result["declared"] = declared;
        summary = std::string("monotone: ") + (r.monotone ? "yes" : "no") +
                  ", uniformly monotone: " + (r.uniform ? "yes" : "no");
    });

    // ---- gadget ----
    CLI::App* gadget_cmd =
        app.add_subcommand("gadget", "clique-counting host construction and checks");
    gadget_cmd->fallthrough();
    gadget_cmd->require_subcommand(1);
    auto add_gadget_inputs = [&](CLI::App* sub) {
        sub->fallthrough();
        sub->add_option("--graph", graph_path, "source graph file")->required();
        sub->add_option("--k", k, "clique size")->required();
        sub->add_option("--pattern", pattern_spec, "pattern graph file or generator spec")
            ->required();
        sub->add_option("--map", map_path, "cell map file (overrides a generator's map)");
        sub->add_option("--omega", omega_path, "bijective pattern colouring file");
    };
    auto build_instance = [&]() {
        auto [g, gmeta] = detail::load_graph(graph_path);
        inputs["graph"] = gmeta;
        parameters["k"] = k;
        detail::ResolvedPattern rp =
            detail::resolve_pattern(pattern_spec, map_path, k, inputs, parameters);
        Colouring omega;
        if (omega_path.empty()) {
            omega = rainbow_colouring(rp.graph.order());
        } else {
            auto [col, ometa] = detail::load_colouring(omega_path, rp.graph.order());
            inputs["omega"] = ometa;
            omega = col;
        }
        return build_clique_gadget(g, k, rp.graph, rp.map, omega, lim);
    };

    CLI::App* gadget_build = gadget_cmd->add_subcommand(
        "build", "construct the host and write graph + colouring + provenance files");
    add_gadget_inputs(gadget_build);
    gadget_build->add_option("--out-prefix", out_prefix, "output path prefix")->required();
    gadget_build->callback([&] {
        command = "gadget build";
        lim.node_budget = budget;
        GadgetInstance gi = build_instance();
        parameters["out_prefix"] = out_prefix;
        detail::write_file(out_prefix + ".graph", serialize_graph(gi.host));
        detail::write_file(out_prefix + ".colouring", serialize_colouring(gi.colouring));
        Json sidecar;
        sidecar["k"] = gi.k;
        sidecar["host_order"] = gi.host.order();
        sidecar["pattern_order"] = gi.pattern.order();
        sidecar["residual"] = gi.residual;
        sidecar["h_vertex"] = gi.h_vertex;
        Json blocks = Json::array();
        for (const auto& b : gi.blocks) {
            Json e;
            e["cell"] = b.cell;
            e["v"] = b.v;
            e["eu"] = b.eu;
            e["ev"] = b.ev;
            e["start"] = b.start;
            e["size"] = b.size;
            blocks.push_back(e);
        }
        sidecar["blocks"] = blocks;
        detail::write_file(out_prefix + ".json", sidecar.dump(2) + "\n");
        result["host_order"] = gi.host.order();
        result["host_size"] = gi.host.size();
        result["blocks"] = gi.blocks.size();
        result["files"] = Json::array(
            {out_prefix + ".graph", out_prefix + ".colouring", out_prefix + ".json"});
        summary = "wrote host with " + std::to_string(gi.host.order()) + " vertices to " +
                  out_prefix + ".{graph,colouring,json}";
    });

    CLI::App* gadget_verify = gadget_cmd->add_subcommand(
        "verify", "check colourful pattern copies against source cliques");
    add_gadget_inputs(gadget_verify);
    gadget_verify->callback([&] {
        command = "gadget verify";
        lim.node_budget = budget;
        GadgetInstance gi = build_instance();
        GadgetVerification v = verify_gadget_identity(gi, lim);
        result["lhs"] = detail::count_value(v.lhs);
        result["rhs"] = detail::count_value(v.rhs);
        result["equal"] = v.equal;
        result["search_states"] = v.search_states;
        result["host_order"] = gi.host.order();
        summary = "copies = " + v.lhs.str() + ", cliques = " + v.rhs.str() +
                  (v.equal ? " (equal)" : " (MISMATCH)");
    });

    CLI::App* gadget_decode = gadget_cmd->add_subcommand(
        "decode", "map a colourful copy back to its source clique");
    add_gadget_inputs(gadget_decode);
    gadget_decode->add_option("--copy", copy_list, "comma-separated host vertex ids")
        ->required();
    gadget_decode->callback([&] {
        command = "gadget decode";
        lim.node_budget = budget;
        GadgetInstance gi = build_instance();
        parameters["copy"] = copy_list;
        std::vector<int> clique = decode_colourful_copy(gi, detail::parse_int_list(copy_list));
        result["clique"] = clique;
        std::string pretty;
        for (int v : clique) pretty += (pretty.empty() ? "" : ",") + std::to_string(v);
        summary = "decoded clique: " + pretty;
    });

    CLI::App* gadget_closure = gadget_cmd->add_subcommand(
        "closure-check", "sample colourful sets and verify they induce pattern subgraphs");
    add_gadget_inputs(gadget_closure);
    gadget_closure->add_option("--trials", trials, "number of sampled colourful sets")
        ->capture_default_str();
    gadget_closure->callback([&] {
        command = "gadget closure-check";
        lim.node_budget = budget;
        GadgetInstance gi = build_instance();
        parameters["trials"] = trials;
        ClosureReport r = check_subgraph_closure(gi, trials, seed);
        seed_used = seed;
        result["trials_requested"] = r.trials_requested;
        result["trials_run"] = r.trials_run;
        result["violations"] = r.violations;
        if (!r.note.empty()) result["note"] = r.note;
        summary = std::to_string(r.violations) + " violations in " +
                  std::to_string(r.trials_run) + " trials";
    });

    // ---- hash-family ----
    CLI::App* family_cmd = app.add_subcommand(
        "hash-family", "build a perfect hash family rainbowing every k-subset");
    family_cmd->fallthrough();
    family_cmd->add_option("--n", fam_n, "domain size")->required();
    family_cmd->add_option("--k", fam_k, "subset size / colour count")->required();
    family_cmd->add_flag("--validate", fam_validate, "re-run coverage validation and report");
    family_cmd->add_option("--out", fam_out, "write functions to this file, one per line");
    family_cmd->callback([&] {
        command = "hash-family";
        lim.node_budget = budget;
        parameters["n"] = fam_n;
        parameters["k"] = fam_k;
        HashFamily fam = build_k_perfect_family(fam_n, fam_k, lim);
        result["n"] = fam.n;
        result["k"] = fam.k;
        result["functions"] = fam.functions.size();
        result["construction"] =
            binomial(fam_n, fam_k) <= 100000 ? "greedy-cover" : "prime-composite";
        result["validation_mode"] = fam.validation_mode;
        if (fam_validate) {
            FamilyValidation val = validate_k_perfect_family(fam, lim);
            Json v;
            v["perfect"] = val.perfect;
            v["mode"] = val.mode;
            result["validation"] = v;
        }
        if (!fam_out.empty()) {
            std::ostringstream ss;
            ss << "family " << fam.n << " " << fam.k << " " << fam.functions.size() << "\n";
            for (const auto& fn : fam.functions) {
                for (int v = 0; v < fam.n; ++v) ss << (v ? " " : "") << fn[v];
                ss << "\n";
            }
            detail::write_file(fam_out, ss.str());
            result["files"] = Json::array({fam_out});
        }
        summary = std::to_string(fam.functions.size()) + " functions (" +
                  std::string(result["construction"]) + ", validation " + fam.validation_mode +
                  ")";
    });

    std::vector<std::string> args(args_in.rbegin(), args_in.rend());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const input_error& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const budget_error& e) {
        err << "budget error: " << e.what() << "\n";
        return 3;
    } catch (const internal_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 4;
    }

    parameters["budget"] = budget;
    parameters["threads"] = threads;
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - started)
                       .count();
    Json report;
    report["command"] = command;
    report["inputs"] = inputs;
    report["parameters"] = parameters;
    report["result"] = result;
    if (seed_used) report["seed"] = *seed_used;
    report["runtime_ms"] = elapsed;
    report["version"] = kToolVersion;
    out << report.dump(2) << "\n";
    if (!summary.empty()) err << summary << "\n";
    return 0;
}

} // namespace iswp
