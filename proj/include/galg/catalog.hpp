#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

#include "galg/group.hpp"

namespace galg {

FiniteGroup cyclic_group(std::size_t k);
/// Symmetries of a k-gon, order 2k: indices 0..k-1 are r^i, k..2k-1 are s r^i.
FiniteGroup dihedral_group(std::size_t k);
FiniteGroup quaternion_group();
/// All permutations of {0..k-1} in lexicographic order; k <= 5.
FiniteGroup symmetric_group(std::size_t k);
/// Upper unitriangular 3x3 matrices over Z/p for p in {2, 3}.
FiniteGroup unitriangular_group(std::size_t dim, std::size_t p);

/// Builds a group from a descriptor such as `symmetric(3)`, `quaternion8`,
/// `unitriangular(3,3)` or `direct_product(cyclic(2),cyclic(2))`.
/// Throws ParseError / InputError on malformed descriptors.
GroupPtr build_group(std::string_view descriptor);

/// Parses the explicit table format:
///
///     order N
///     <N lines of N space-separated indices>
///     names n0 n1 ...        (optional)
///
/// Errors carry the line number.
FiniteGroup parse_table(std::string_view text, std::string label = "table");
FiniteGroup load_table_file(const std::filesystem::path& path);

/// Renders a group in the explicit table format accepted by parse_table.
std::string format_table(const FiniteGroup& group);

}  // namespace galg
