#include "addspan/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <optional>
#include <set>
#include <unordered_set>

#include "addspan/error.hpp"
#include "addspan/random.hpp"

namespace addspan {

namespace {

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

bool parse_int(std::string_view s, std::int64_t& out) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    if (s.empty()) return false;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) return out;
        start = pos + 1;
    }
}

void require(bool ok, const std::string& what) {
    if (!ok) throw PreconditionError(what);
}

}  // namespace

namespace {

std::optional<GroupSpec> try_parse_group_spec(std::string_view spec, std::string& error) {
    spec = trim(spec);
    if (spec.starts_with("Z^")) {
        std::int64_t d = 0;
        if (!parse_int(spec.substr(2), d) || d < 1) {
            error = "bad group dimension in '" + std::string(spec) + "'";
            return std::nullopt;
        }
        return GroupSpec::integers(static_cast<std::size_t>(d));
    }
    std::vector<std::int64_t> moduli;
    for (auto factor : split(spec, 'x')) {
        factor = trim(factor);
        if (factor == "Z") {
            moduli.push_back(kUnbounded);
            continue;
        }
        std::int64_t m = 0;
        if (!factor.starts_with("Z_") || !parse_int(factor.substr(2), m) || m < 2) {
            error = "bad group factor '" + std::string(factor) + "'";
            return std::nullopt;
        }
        moduli.push_back(m);
    }
    return GroupSpec(std::move(moduli));
}

}  // namespace

GroupSpec parse_group_spec(std::string_view spec) {
    std::string error;
    if (auto parsed = try_parse_group_spec(spec, error)) return *parsed;
    throw ParseError(error, 1);
}

GSet parse_set_file(std::string_view text, const ParseOptions& opts) {
    std::optional<GroupSpec> spec;
    std::vector<Element> elems;
    std::unordered_set<Element, ElementHash> seen;

    std::size_t line_no = 0;
    for (auto raw : split(text, '\n')) {
        ++line_no;
        auto line = raw;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        if (!spec) {
            if (!line.starts_with("group") || line.size() < 6 || (line[5] != ' ' && line[5] != '\t'))
                throw ParseError("expected header 'group <SPEC>'", line_no);
            std::string error;
            spec = try_parse_group_spec(line.substr(5), error);
            if (!spec) throw ParseError(error, line_no);
            continue;
        }

        const auto fields = split(line, ',');
        if (fields.size() != spec->dim())
            throw ParseError("expected " + std::to_string(spec->dim()) + " comma-separated integers", line_no);
        std::vector<std::int64_t> coords(fields.size());
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (!parse_int(fields[i], coords[i]))
                throw ParseError("not an integer: '" + std::string(trim(fields[i])) + "'", line_no);
        }
        Element e = canon(coords, *spec);
        if (!seen.insert(e).second) {
            if (!opts.dedupe) throw ParseError("duplicate element " + to_string(e) + " (pass --dedupe to merge)", line_no);
            continue;
        }
        elems.push_back(std::move(e));
    }
    if (!spec) throw ParseError("missing 'group' header", line_no);
    return GSet(*spec, std::move(elems));
}

std::string serialize_set_file(const GSet& a) {
    std::string out = "group " + a.spec().to_string() + "\n";
    for (const auto& e : a) {
        out += to_string(e);
        out += '\n';
    }
    return out;
}

std::string digest_fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

GSet gen_ap(std::int64_t n, std::int64_t step, std::int64_t start) {
    require(n >= 1, "ap: n must be >= 1");
    require(step != 0 || n == 1, "ap: step must be nonzero");
    std::vector<std::int64_t> v;
    for (std::int64_t i = 0; i < n; ++i) v.push_back(start + i * step);
    return GSet::of_integers(GroupSpec::integers(), v);
}

GSet gen_geo(std::int64_t n) {
    require(n >= 1 && n <= 62, "geo: n must lie in [1, 62]");
    std::vector<std::int64_t> v;
    for (std::int64_t i = 0; i < n; ++i) v.push_back(std::int64_t{1} << i);
    return GSet::of_integers(GroupSpec::integers(), v);
}

GSet gen_box_random(std::int64_t n, std::int64_t width, std::int64_t dim, std::uint64_t seed) {
    require(n >= 1 && width >= 1 && dim >= 1, "box_random: n, w and dim must be positive");
    double cells = 1;
    for (std::int64_t i = 0; i < dim; ++i) cells *= static_cast<double>(width);
    require(static_cast<double>(n) <= cells, "box_random: n exceeds w^dim");
    SplitMix64 rng(seed);
    std::set<Element> pts;
    while (pts.size() < static_cast<std::size_t>(n)) {
        Element e;
        for (std::int64_t i = 0; i < dim; ++i)
            e.coords.push_back(static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(width))));
        pts.insert(std::move(e));
    }
    return GSet(GroupSpec::integers(static_cast<std::size_t>(dim)), std::vector<Element>(pts.begin(), pts.end()));
}

GSet gen_sidon_greedy(std::int64_t n) {
    require(n >= 1, "sidon_greedy: n must be >= 1");
    std::vector<std::int64_t> set;
    std::unordered_set<std::int64_t> sums;
    for (std::int64_t x = 0; static_cast<std::int64_t>(set.size()) < n; ++x) {
        bool ok = !sums.contains(2 * x);
        for (auto y : set) ok = ok && !sums.contains(x + y);
        if (!ok) continue;
        for (auto y : set) sums.insert(x + y);
        sums.insert(2 * x);
        set.push_back(x);
    }
    return GSet::of_integers(GroupSpec::integers(), set);
}

GSet gen_subgroup_union(std::int64_t k, std::int64_t sub_dim, std::int64_t cosets, std::uint64_t seed) {
    require(k >= 1 && k <= 20, "subgroup_union: k must lie in [1, 20]");
    require(sub_dim >= 0 && sub_dim <= k, "subgroup_union: subgroup dimension must lie in [0, k]");
    require(cosets >= 1 && cosets <= (std::int64_t{1} << (k - sub_dim)),
            "subgroup_union: more cosets requested than exist");
    SplitMix64 rng(seed);
    std::set<std::int64_t> reps;
    while (static_cast<std::int64_t>(reps.size()) < cosets)
        reps.insert(static_cast<std::int64_t>(rng.below(std::uint64_t{1} << (k - sub_dim))));

    std::vector<Element> out;
    for (auto rep : reps) {
        for (std::int64_t h = 0; h < (std::int64_t{1} << sub_dim); ++h) {
            Element e;
            for (std::int64_t i = 0; i < k; ++i)
                e.coords.push_back(i < sub_dim ? (h >> i) & 1 : (rep >> (i - sub_dim)) & 1);
            out.push_back(std::move(e));
        }
    }
    return GSet(GroupSpec(std::vector<std::int64_t>(static_cast<std::size_t>(k), 2)), std::move(out));
}

GSet generate(std::string_view kind, const std::vector<std::int64_t>& params, std::uint64_t seed) {
    auto need = [&](std::size_t count, const char* usage) {
        if (params.size() != count) throw PreconditionError(std::string("usage: gen ") + usage);
    };
    if (kind == "ap") {
        need(3, "ap <n> <d> <s>");
        return gen_ap(params[0], params[1], params[2]);
    }
    if (kind == "geo") {
        need(1, "geo <n>");
        return gen_geo(params[0]);
    }
    if (kind == "box_random") {
        need(3, "box_random <n> <w> <dim>");
        return gen_box_random(params[0], params[1], params[2], seed);
    }
    if (kind == "sidon_greedy") {
        need(1, "sidon_greedy <n>");
        return gen_sidon_greedy(params[0]);
    }
    if (kind == "subgroup_union") {
        need(3, "subgroup_union <k> <subgroup-dim> <cosets>");
        return gen_subgroup_union(params[0], params[1], params[2], seed);
    }
    throw PreconditionError("unknown generator kind '" + std::string(kind) + "'");
}

}  // namespace addspan
