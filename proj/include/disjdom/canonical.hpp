#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "disjdom/tree.hpp"

namespace disjdom {

// One or two vertices minimizing the largest component of T - v, ascending.
std::vector<int> centroids(const Tree& t);

// Rooted AHU encoding; ann, when present, prepends a per-vertex annotation
// inside that vertex's parenthesis pair.
std::string ahu_encode(const Tree& t, int root, const std::vector<std::string>* ann = nullptr);

// Centroid-rooted canonical string; equal iff the trees are isomorphic.
std::string canonical_form(const Tree& t);

// Status-aware variant; equal iff a status-preserving isomorphism exists.
// status must hold one of 'A', 'B', 'C', 'D' per vertex.
std::string labeled_canonical_form(const Tree& t, const std::vector<char>& status);

// Additionally marks the four basic-path vertices (canonical over the path's
// two orientations). Without a path this collapses to labeled_canonical_form.
std::string path_labeled_canonical_form(const Tree& t, const std::vector<char>& status,
                                        const std::optional<std::array<int, 4>>& basic_path);

}  // namespace disjdom
