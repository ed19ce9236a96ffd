#include "addspan/cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "addspan/error.hpp"
#include "addspan/io.hpp"
#include "addspan/random.hpp"
#include "addspan/report.hpp"

namespace addspan {

namespace {

struct Options {
    std::string format = "json";
    std::uint64_t seed = 0;
    std::int64_t max_group = std::int64_t{1} << 20;
    bool dedupe = false;

    std::string file;
    std::string strategy = "auto";
    std::vector<std::string> queries;
    std::size_t l = 0;
    std::string mode = "greedy";
    std::vector<double> p;
    std::string c;
    double l_const = 1.0;
    bool adaptive = true;
    bool require_cert = false;
    std::vector<double> p_prime;
    std::int64_t trials = 200;
    std::string kind;
    std::vector<std::int64_t> params;
    std::string out_path;
};

std::string read_text(const std::string& path) {
    if (path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SearchMode parse_mode(const std::string& s) { return s == "exact" ? SearchMode::Exact : SearchMode::Greedy; }

Rational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(s));
        return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw PreconditionError("--c expects <num>/<den>, got '" + s + "'");
    }
}

Element parse_element(const std::string& s, const GroupSpec& spec) {
    std::vector<std::int64_t> coords;
    std::stringstream ss(s);
    std::string field;
    while (std::getline(ss, field, ',')) {
        try {
            coords.push_back(std::stoll(field));
        } catch (const std::exception&) {
            throw PreconditionError("bad query element '" + s + "'");
        }
    }
    return canon(coords, spec);
}

void flatten(const json& j, const std::string& prefix, std::ostream& out) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array()) &&
               !(j.front().is_array() && j.front().size() <= 8 && j.front().front().is_number())) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
    } else {
        out << prefix << ": " << j.dump() << '\n';
    }
}

json input_block(const GSet& a) {
    return {{"digest", {{"algorithm", "fnv1a64"}, {"value", digest_fnv1a64(serialize_set_file(a))}}},
            {"group", a.spec().to_string()},
            {"size", a.size()}};
}

// Unshifted reduction into a torus large enough that no signed sum of the
// set wraps around, so dissociativity is preserved (translation would not
// preserve it).
GSet unshifted_torus_image(const GSet& a) {
    if (a.spec().fully_finite()) return a;
    std::vector<std::int64_t> moduli = a.spec().moduli();
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        if (!a.spec().is_unbounded(i)) continue;
        std::int64_t reach = 1;
        for (const auto& e : a) reach = std::max(reach, std::abs(e.coords[i]));
        moduli[i] = next_pow2_above(2 * (static_cast<std::int64_t>(a.size()) + 2) * reach);
    }
    GroupSpec torus(std::move(moduli));
    std::vector<Element> elems(a.begin(), a.end());
    return GSet(torus, std::move(elems));
}

double default_p(const GSet& a) { return 2.0 + std::log(static_cast<double>(std::max<std::size_t>(a.size(), 1))); }

json run_energy(const GSet& a) { return to_json(additive_energy(a)); }

json run_doubling(const GSet& a) {
    return {{"K", to_json(doubling(a))}, {"size", a.size()}, {"sumset_size", sumset(a, a).size()}};
}

json run_dissociate(const GSet& a, const Options& o) {
    DissociationStrategy strategy = DissociationStrategy::Auto;
    if (o.strategy == "brute") strategy = DissociationStrategy::Brute;
    if (o.strategy == "mitm") strategy = DissociationStrategy::Mitm;
    json out = to_json(is_dissociated(a, strategy));
    out["strategy"] = o.strategy;
    out["greedy_maximal"] = to_json(max_dissociated_greedy(a));
    return out;
}

json run_span(const GSet& a, const Options& o) {
    DissociationLimits limits;
    json out = {{"generators", a.size()}};
    if (a.size() <= limits.enumerate_cap) {
        GSet span = span_enumerate(a, limits);
        out["span_size"] = span.size();
        out["span"] = to_json(span);
    } else {
        out["span_size"] = nullptr;
        out["span"] = nullptr;
    }
    json queries = json::array();
    for (const auto& q : o.queries) {
        const Element x = parse_element(q, a.spec());
        auto sv = span_contains(a, x, limits);
        queries.push_back({{"element", to_json(x)}, {"witness", sv ? to_json(*sv) : json(nullptr)}});
    }
    out["queries"] = std::move(queries);
    return out;
}

json run_peel(const GSet& a, const Options& o, const FourierLimits& fourier) {
    if (o.l == 0) throw PreconditionError("peel needs --l >= 1");
    const PeelingTrace trace = bourgain_peel(a, o.l, parse_mode(o.mode));
    json out = {{"trace", to_json(trace)}};
    json norms = json::array();
    std::vector<double> ps = o.p;
    if (ps.empty()) ps = {4.0, default_p(a)};
    try {
        if (!a.empty()) {
            const auto emb = embed_to_torus(a, 1);
            require_transformable(emb.torus_spec, fourier);
            const PeelingTrace on_torus = a.spec().fully_finite() ? trace : embed_trace(trace, emb);
            for (double p : ps) {
                json entry = to_json(peel_error_norm(on_torus, p, fourier));
                entry["p"] = p;
                norms.push_back(std::move(entry));
            }
            out["torus"] = emb.torus_spec.to_string();
        }
    } catch (const ResourceError& e) {
        out["torus"] = nullptr;
        out["fourier_note"] = e.what();
    }
    out["error_norms"] = std::move(norms);
    return out;
}

json run_thm1(const GSet& a, const Options& o, const FourierLimits& fourier, bool& certified) {
    EnergyStructureOptions opts;
    if (!o.c.empty()) opts.c_override = parse_rational(o.c);
    opts.l_const = o.l_const;
    opts.adaptive = o.adaptive;
    opts.mode = parse_mode(o.mode);
    if (o.l > 0) opts.initial_l = o.l;
    opts.fourier = fourier;
    const StructureReport rep = energy_structure(a, opts);
    certified = rep.certified;
    return to_json(rep);
}

json run_thm2(const GSet& a, const Options& o, const FourierLimits& fourier) {
    json out = to_json(cover_structure(a, fourier));
    std::vector<double> pps = o.p_prime;
    if (pps.empty()) {
        const double p = default_p(a);
        pps = {1.25, 1.5, 2.0, p / (p - 1.0)};
    }
    json chains = json::array();
    try {
        for (double pp : pps) chains.push_back(to_json(thm2_chain_check(a, pp, fourier)));
    } catch (const ResourceError& e) {
        out["chain_note"] = e.what();
    }
    out["chains"] = std::move(chains);
    return out;
}

json run_fourier_check(const GSet& a, const Options& o, const FourierLimits& fourier) {
    if (a.empty()) throw EmptyInputError("fourier-check: empty set");
    const auto emb = embed_to_torus(a, 1);
    require_transformable(emb.torus_spec, fourier);
    const GSet& image = emb.image;
    const double p = o.p.empty() ? default_p(a) : o.p.front();

    json out = {{"torus", emb.torus_spec.to_string()}, {"p", p}, {"tolerance", kInequalityTolerance}};
    out["embedding"] = to_json(emb);
    out["parseval_residual"] = parseval_residual(
        [&] {
            ComplexMap f;
            for (const auto& x : image) f.emplace(x, Complex(1.0, 0.0));
            return f;
        }(),
        image.spec(), fourier);
    const auto cert = additive_energy(a);
    const double l4 = energy_via_l4(image, fourier);
    out["energy_exact"] = cert.energy;
    out["energy_via_l4"] = l4;
    out["energy_relative_error"] = std::abs(l4 - static_cast<double>(cert.energy)) / static_cast<double>(cert.energy);
    out["hausdorff_young"] = to_json(hausdorff_young_check(image, std::max(2.0, p), fourier));

    const DualFunction f = dft_indicator(image, fourier);
    json lc = json::array();
    lc.push_back(to_json(logconvexity_check(f, 1.0, 3.0, 0.5)));
    if (p > 4.0) lc.push_back(to_json(logconvexity_check(f, 2.0, p, p / (2.0 * (p - 2.0)))));
    out["log_convexity"] = std::move(lc);

    DissociationLimits limits;
    const GSet probe_set = unshifted_torus_image(a);
    if (a.size() <= limits.mitm_cap && is_dissociated(probe_set).dissociated) {
        json rudin = to_json(rudin_probe(probe_set, std::max(2.0, p), o.trials, o.seed, fourier));
        rudin["torus"] = probe_set.spec().to_string();
        rudin["seed"] = o.seed;
        rudin["rng"] = SplitMix64::kAlgorithm;
        out["rudin"] = std::move(rudin);
    } else {
        out["rudin"] = nullptr;
    }
    return out;
}

}  // namespace

int run_subcommand(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Dissociated spans, Bourgain peeling and Fourier certificates for finite sets in abelian groups",
                 "addspan"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--seed", o.seed, "Seed for generators and probes");
    app.add_option("--max-group", o.max_group, "DFT cap on |G|");
    app.add_flag("--dedupe", o.dedupe, "Merge duplicate elements in set files");

    auto with_file = [&](CLI::App* sub) {
        sub->add_option("setfile", o.file, "Set file ('-' for stdin)")->required();
        return sub;
    };
    auto mode_option = [&](CLI::App* sub) {
        sub->add_option("--mode", o.mode, "Dissociated-subset search")->check(CLI::IsMember({"greedy", "exact"}));
    };

    with_file(app.add_subcommand("energy", "Additive energy certificate"));
    with_file(app.add_subcommand("doubling", "Doubling constant |A+A|/|A|"));
    auto* dis = with_file(app.add_subcommand("dissociate", "Dissociativity verdict and greedy maximal subset"));
    dis->add_option("--strategy", o.strategy)->check(CLI::IsMember({"auto", "brute", "mitm"}));
    auto* span = with_file(app.add_subcommand("span", "Span enumeration and membership witnesses"));
    span->add_option("--query", o.queries, "Element to test, comma-separated coordinates");
    auto* peel = with_file(app.add_subcommand("peel", "Bourgain peeling trace"));
    peel->add_option("--l", o.l, "Layer size")->required();
    peel->add_option("--p", o.p, "Exponents for the error norm");
    mode_option(peel);
    auto* thm1 = with_file(app.add_subcommand("thm1", "Energy-to-span pipeline with certificate"));
    thm1->add_option("--l", o.l, "Initial layer size (default ceil(C ln|A| / c))");
    thm1->add_option("--c", o.c, "Energy constant override <num>/<den>");
    thm1->add_option("--l-const", o.l_const, "Constant C in the initial layer size");
    thm1->add_flag("--adaptive,!--no-adaptive", o.adaptive, "Double l until the error bound is met");
    thm1->add_flag("--require-cert", o.require_cert, "Exit 2 when the report is not certified");
    mode_option(thm1);
    auto* thm2 = with_file(app.add_subcommand("thm2", "Doubling-to-cover pipeline with diagnostics"));
    thm2->add_option("--p-prime", o.p_prime, "Dual exponents in (1, 2]");
    auto* fc = with_file(app.add_subcommand("fourier-check", "Parseval, L4 energy, Hausdorff-Young and Rudin probe"));
    fc->add_option("--p", o.p, "Exponent (default 2 + ln|A|)");
    fc->add_option("--trials", o.trials, "Rudin probe trials");
    auto* gen = app.add_subcommand("gen", "Generate a set file");
    gen->add_option("kind", o.kind, "ap | geo | box_random | sidon_greedy | subgroup_union")->required();
    gen->add_option("params", o.params, "Integer parameters");
    gen->add_option("--out", o.out_path, "Write the set file here");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, err, err);
        return kExitUsage;
    }

    const auto started = std::chrono::steady_clock::now();
    const std::string name = app.get_subcommands().front()->get_name();
    FourierLimits fourier;
    fourier.max_group = o.max_group;

    json parameters = {{"format", o.format}, {"max_group", o.max_group}};
    json result;
    json input = nullptr;
    int code = kExitOk;
    std::string text_override;

    try {
        if (name == "gen") {
            const GSet a = generate(o.kind, o.params, o.seed);
            const std::string text = serialize_set_file(a);
            parameters.update({{"kind", o.kind}, {"params", o.params}, {"seed", o.seed}, {"rng", SplitMix64::kAlgorithm}});
            result = {{"set", to_json(a)}, {"set_file", text}};
            if (!o.out_path.empty()) {
                std::ofstream f(o.out_path, std::ios::binary);
                if (!f) throw Error("cannot write '" + o.out_path + "'");
                f << text;
            }
            text_override = text;
            input = nullptr;
        } else {
            const GSet a = parse_set_file(read_text(o.file), ParseOptions{o.dedupe});
            input = input_block(a);
            if (name == "energy") {
                result = run_energy(a);
            } else if (name == "doubling") {
                result = run_doubling(a);
            } else if (name == "dissociate") {
                result = run_dissociate(a, o);
            } else if (name == "span") {
                parameters["queries"] = o.queries;
                result = run_span(a, o);
            } else if (name == "peel") {
                parameters.update({{"l", o.l}, {"mode", o.mode}, {"p", o.p}});
                result = run_peel(a, o, fourier);
            } else if (name == "thm1") {
                parameters.update({{"l", o.l},
                                   {"c", o.c},
                                   {"l_const", o.l_const},
                                   {"adaptive", o.adaptive},
                                   {"mode", o.mode},
                                   {"require_cert", o.require_cert}});
                bool certified = false;
                result = run_thm1(a, o, fourier, certified);
                if (o.require_cert && !certified) code = kExitCertificationFailure;
            } else if (name == "thm2") {
                parameters["p_prime"] = o.p_prime;
                result = run_thm2(a, o, fourier);
            } else if (name == "fourier-check") {
                parameters.update({{"p", o.p}, {"trials", o.trials}, {"seed", o.seed}});
                result = run_fourier_check(a, o, fourier);
            }
        }
    } catch (const std::exception& e) {
        err << "addspan " << name << ": " << e.what() << '\n';
        return kExitInputError;
    }

    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    json report = {{"schema_version", kReportSchemaVersion},
                   {"tool", {{"name", kToolName}, {"version", kToolVersion}}},
                   {"subcommand", name},
                   {"input", input},
                   {"parameters", parameters},
                   {"result", result},
                   {"timing", {{"wall_seconds", elapsed}}}};

    if (o.format == "text") {
        if (name == "gen") {
            out << text_override;
        } else {
            flatten(report, "", out);
        }
    } else {
        out << report.dump(2) << '\n';
    }
    return code;
}

}  // namespace addspan
