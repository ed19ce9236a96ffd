#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "addspan/gset.hpp"

namespace addspan {

struct ParseOptions {
    /// Merge repeated elements instead of failing.
    bool dedupe = false;
};

/// Set-file text format:
///
///     # comment
///     group Z_4 x Z_4
///     1,2
///     3,3
///
/// The header is `group <SPEC>` with SPEC `Z`, `Z^<d>`, or factors `Z` /
/// `Z_<m>` joined by `x`. Body lines are comma-separated integers. `#` starts
/// a comment; blank lines are ignored; LF and CRLF are accepted.
GSet parse_set_file(std::string_view text, const ParseOptions& opts = {});

GroupSpec parse_group_spec(std::string_view spec);

std::string serialize_set_file(const GSet& a);

/// 64-bit FNV-1a of the serialized set; reported as the input digest.
std::string digest_fnv1a64(std::string_view bytes);

/// Deterministic generators. Integer kinds live in Z (or Z^dim).
GSet gen_ap(std::int64_t n, std::int64_t step, std::int64_t start);
GSet gen_geo(std::int64_t n);
GSet gen_box_random(std::int64_t n, std::int64_t width, std::int64_t dim, std::uint64_t seed);
GSet gen_sidon_greedy(std::int64_t n);
/// Union of `cosets` distinct cosets of the subgroup spanned by the first
/// `sub_dim` unit vectors of Z_2^k; representatives drawn from the remaining
/// coordinates.
GSet gen_subgroup_union(std::int64_t k, std::int64_t sub_dim, std::int64_t cosets, std::uint64_t seed);

/// Dispatch by kind name with positional integer parameters.
GSet generate(std::string_view kind, const std::vector<std::int64_t>& params, std::uint64_t seed);

}  // namespace addspan
