#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chainmail/graph.hpp"

namespace chainmail {

/// Tree on 1..n from a Prüfer sequence of length n-2 over 1..n.
Tree prufer_decode(int n, const std::vector<int>& sequence);

/// Canonical string of the unlabeled tree: the smaller AHU encoding over the
/// (one or two) centers. Equal strings iff isomorphic trees.
std::string canonical_form(const Tree& T);

/// One tree per isomorphism class on exactly n vertices, labeled 1..n,
/// ordered by canonical form. Built by hanging a leaf on every vertex of the
/// (n-1)-vertex classes and keeping new canonical forms. n in 1..12.
std::vector<Tree> enumerate_trees(int n);

/// Uniform labeled tree on 1..n from a seeded Prüfer sequence.
Tree random_tree(int n, std::uint64_t seed);

} // namespace chainmail
