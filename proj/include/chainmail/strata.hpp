#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chainmail/complex.hpp"
#include "chainmail/graph.hpp"

namespace chainmail {

/// Ordered sequence of positive parts.
class Composition {
public:
    explicit Composition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }
    std::size_t length() const { return parts_.size(); }

    friend bool operator==(const Composition&, const Composition&) = default;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// Multiset of positive parts, stored weakly decreasing.
class Partition {
public:
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }
    std::size_t length() const { return parts_.size(); }

    /// (k, 1^t).
    static Partition hook(int k, int t);

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// Cut positions in {1, .., n-1}; bit c-1 set means a cut after position c.
/// Compositions of n correspond one to one with cut sets.
struct CutSet {
    int n = 0;
    Mask cuts = 0;

    friend bool operator==(const CutSet&, const CutSet&) = default;
};

CutSet cutset(const Composition& x);
Composition composition_of(const CutSet& s);

/// x ≤ y in the refinement order: y's consecutive blocks sum to x's parts.
bool refines(const Composition& x, const Composition& y);

/// Whether x lies below some composition of type λ.
bool can_refine_to_type(const Composition& x, const Partition& lambda);

/// δ_λ on cut positions {1, .., n-1}: faces are the cut sets of compositions
/// in D_λ, facets the cut sets of the orderings of λ.
SimplicialComplex delta_lambda(const Partition& lambda);

/// Distinct orderings of λ: l(λ)! / Π mult_j!.
std::uint64_t maximal_elements_count(const Partition& lambda);

/// D_k(T) on V(T̂): S is a face iff every leaf-to-leaf path of T̂ has k
/// consecutive vertices outside S.
SimplicialComplex disconnecting_complex(const Tree& T, int k,
                                        std::size_t max_vertices = max_disconnecting_vertices());

/// Parses "3,1,1" into parts.
std::vector<int> parse_parts(const std::string& text);

} // namespace chainmail
