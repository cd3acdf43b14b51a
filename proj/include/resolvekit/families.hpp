#pragma once

#include "resolvekit/graph.hpp"

#include <string>
#include <string_view>

namespace resolvekit {

enum class Family { prism, prism_allied, web, cycle, path, star };

auto to_string(Family f) -> std::string_view;
auto parse_family(std::string_view text) -> Family;

/// n together with its parity split n = 2*aleph (even) or 2*aleph + 1 (odd).
struct FamilyParams {
    Family family = Family::web;
    int n = 3;

    auto is_even() const noexcept -> bool { return n % 2 == 0; }
    auto aleph() const noexcept -> int { return n / 2; }
};

/// Reduces an index into 1..n, so n + 1 is 1 and 0 is n.
inline auto wrap_index(int index, int n) -> int { return ((index - 1) % n + n) % n + 1; }

// Vertex ids are laid out in class blocks: p_i -> i-1, q_i -> n+i-1,
// r_i -> 2n+i-1, s_i -> 3n+i-1.

/// Prism plus r_i joined to q_i and q_{i+1}, and a pendant s_i on each r_i.
/// 4n vertices, 6n edges.
auto prism_allied(int n) -> Graph;

/// Prism plus a pendant r_i on each q_i. 3n vertices, 4n edges.
auto web(int n) -> Graph;

/// Two n-cycles (p and q) joined by rungs p_i q_i.
auto prism(int n) -> Graph;

auto cycle(int n) -> Graph;

/// Path on k vertices.
auto path(int k) -> Graph;

/// Star with k leaves around centre 0.
auto star(int k) -> Graph;

auto make_family(Family f, int n) -> Graph;

/// Pendant class: s for prism_allied, r for web.
auto pendant_class(Family f) -> VertexClass;

} // namespace resolvekit
