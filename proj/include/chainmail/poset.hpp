#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chainmail/complex.hpp"

namespace chainmail {

/// Finite poset over integer labels; the strict order is stored
/// transitively closed as one "below" mask per element.
class Poset {
public:
    Poset() = default;

    /// `less` lists pairs (a, b) meaning a < b. The closure is taken;
    /// a cycle is an InputError.
    Poset(std::vector<int> elements, const std::vector<std::pair<int, int>>& less);

    const std::vector<int>& elements() const { return elements_; }
    bool less(int a, int b) const;
    bool comparable(int a, int b) const { return a != b && (less(a, b) || less(b, a)); }

    /// All pairs (a, b) with a < b, sorted.
    std::vector<std::pair<int, int>> relations() const;

    /// Cover pairs (a, b): a < b with nothing strictly between.
    std::vector<std::pair<int, int>> covers() const;

    friend bool operator==(const Poset&, const Poset&) = default;

private:
    std::size_t index_of(int label) const;

    std::vector<int> elements_;
    std::vector<Mask> below_;
};

/// Faces are the chains of P.
SimplicialComplex order_complex(const Poset& P);

/// P_t on 1..2t with y < x iff x - y >= 2.
Poset p_poset(int t);

/// A poset on K's vertices whose order complex is K, searched over
/// transitive orientations of K's 1-skeleton. Throws CapacityError past
/// `max_vertices`.
std::optional<Poset> exists_realizing_poset(const SimplicialComplex& K,
                                            std::size_t max_vertices = max_poset_search_vertices());

// Text format: `elements: n` (elements are 1..n), then one cover pair
// `a b` (a < b) per line.
std::string to_text(const Poset& P);
Poset parse_poset(std::istream& in);
Poset parse_poset(const std::string& text);

} // namespace chainmail
