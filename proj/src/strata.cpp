#include "chainmail/strata.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace chainmail {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (int p : parts_)
        if (p < 1)
            throw InputError("composition parts must be positive");
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (int p : parts_)
        if (p < 1)
            throw InputError("partition parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::hook(int k, int t)
{
    if (k < 1 || t < 0)
        throw InputError("hook (k, 1^t) needs k >= 1 and t >= 0");
    std::vector<int> parts{k};
    parts.insert(parts.end(), static_cast<std::size_t>(t), 1);
    return Partition(std::move(parts));
}

CutSet cutset(const Composition& x)
{
    if (x.n() > static_cast<int>(kMaskBits))
        throw CapacityError("cut sets limited to n <= 64");
    CutSet s{x.n(), 0};
    int sum = 0;
    for (std::size_t i = 0; i + 1 < x.length(); ++i) {
        sum += x.parts()[i];
        s.cuts |= Mask{1} << static_cast<unsigned>(sum - 1);
    }
    return s;
}

Composition composition_of(const CutSet& s)
{
    if (s.n < 1)
        throw InputError("cut sets need n >= 1");
    std::vector<int> parts;
    int last = 0;
    for (int c = 1; c < s.n; ++c) {
        if (s.cuts & (Mask{1} << static_cast<unsigned>(c - 1))) {
            parts.push_back(c - last);
            last = c;
        }
    }
    parts.push_back(s.n - last);
    return Composition(std::move(parts));
}

bool refines(const Composition& x, const Composition& y)
{
    if (x.n() != y.n())
        throw InputError("refinement compares compositions of the same n");
    Mask a = cutset(x).cuts;
    Mask b = cutset(y).cuts;
    return (a & ~b) == 0;
}

bool can_refine_to_type(const Composition& x, const Partition& lambda)
{
    if (x.n() != lambda.n())
        throw InputError("composition and partition have different n");

    // Distinct part values with multiplicities.
    std::vector<int> values;
    std::vector<int> counts;
    for (int p : lambda.parts()) {
        if (values.empty() || values.back() != p) {
            values.push_back(p);
            counts.push_back(0);
        }
        ++counts.back();
    }

    // memo[(block, remaining counts)] -> feasible
    std::map<std::pair<std::size_t, std::vector<int>>, bool> memo;

    // Chooses a sub-multiset of `remaining` summing to `target`, drawing
    // values from index `vi` on, then continues with the next block.
    std::function<bool(std::size_t, std::vector<int>&)> place_block;
    std::function<bool(std::size_t, std::size_t, int, std::vector<int>&)> fill =
        [&](std::size_t block, std::size_t vi, int target, std::vector<int>& remaining) -> bool {
        if (target == 0)
            return place_block(block + 1, remaining);
        if (vi == values.size())
            return false;
        const int v = values[vi];
        const int most = std::min(remaining[vi], target / v);
        for (int take = most; take >= 0; --take) {
            remaining[vi] -= take;
            bool ok = fill(block, vi + 1, target - take * v, remaining);
            remaining[vi] += take;
            if (ok)
                return true;
        }
        return false;
    };
    place_block = [&](std::size_t block, std::vector<int>& remaining) -> bool {
        if (block == x.length())
            return std::all_of(remaining.begin(), remaining.end(), [](int c) { return c == 0; });
        auto key = std::make_pair(block, remaining);
        if (auto it = memo.find(key); it != memo.end())
            return it->second;
        bool ok = fill(block, 0, x.parts()[block], remaining);
        memo.emplace(std::move(key), ok);
        return ok;
    };
    return place_block(0, counts);
}

SimplicialComplex delta_lambda(const Partition& lambda)
{
    const int n = lambda.n();
    if (n < 1)
        throw InputError("δ_λ needs n >= 1");
    if (n > static_cast<int>(kMaskBits))
        throw CapacityError("δ_λ limited to n <= 64");
    std::vector<int> vertices;
    for (int c = 1; c < n; ++c)
        vertices.push_back(c);
    std::vector<int> order = lambda.parts();
    std::sort(order.begin(), order.end());
    std::vector<Mask> facets;
    do {
        facets.push_back(cutset(Composition(order)).cuts);
    } while (std::next_permutation(order.begin(), order.end()));
    return SimplicialComplex::from_masks(std::move(vertices), std::move(facets));
}

std::uint64_t maximal_elements_count(const Partition& lambda)
{
    std::map<int, std::uint64_t> mult;
    for (int p : lambda.parts())
        ++mult[p];
    // Product of binomials C(placed + m, m), each exact.
    std::uint64_t result = 1;
    std::uint64_t placed = 0;
    for (auto [value, m] : mult) {
        (void)value;
        for (std::uint64_t i = 1; i <= m; ++i) {
            unsigned __int128 r = static_cast<unsigned __int128>(result) * (placed + i);
            r /= i;
            if (r > UINT64_MAX)
                throw CapacityError("ordering count overflows 64 bits");
            result = static_cast<std::uint64_t>(r);
        }
        placed += m;
    }
    return result;
}

SimplicialComplex disconnecting_complex(const Tree& T, int k, std::size_t max_vertices)
{
    if (k < 1)
        throw InputError("D_k needs k >= 1");
    Tree hat = augment(T);
    const auto& vs = hat.vertices();
    if (vs.size() > max_vertices || vs.size() > kMaskBits)
        throw CapacityError("D_k limited to " + std::to_string(std::min(max_vertices, kMaskBits)) +
                            " vertices of T̂");
    std::map<int, std::size_t> pos;
    for (std::size_t i = 0; i < vs.size(); ++i)
        pos[vs[i]] = i;

    // For each leaf path, the masks of its windows of k consecutive
    // vertices. A path shorter than k has no window, so nothing is a face.
    std::vector<std::vector<Mask>> windows;
    for (const auto& path : leaf_paths(hat)) {
        std::vector<Mask> w;
        for (std::size_t i = 0; i + static_cast<std::size_t>(k) <= path.size(); ++i) {
            Mask m = 0;
            for (std::size_t j = i; j < i + static_cast<std::size_t>(k); ++j)
                m |= Mask{1} << pos.at(path[j]);
            w.push_back(m);
        }
        if (w.empty())
            return SimplicialComplex::void_complex(vs);
        windows.push_back(std::move(w));
    }

    auto facets = facets_of_downset(vs.size(), [&](Mask face, std::size_t v) {
        const Mask grown = face | (Mask{1} << v);
        for (const auto& w : windows)
            if (!kernels::any_disjoint(w, grown))
                return false;
        return true;
    });
    return SimplicialComplex::from_masks(vs, std::move(facets), true);
}

std::vector<int> parse_parts(const std::string& text)
{
    std::vector<int> parts;
    std::stringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            std::size_t used = 0;
            parts.push_back(std::stoi(tok, &used));
            if (used != tok.size())
                throw InputError("");
        } catch (const std::exception&) {
            throw InputError("bad part '" + tok + "' in '" + text + "'");
        }
    }
    if (parts.empty())
        throw InputError("no parts given");
    return parts;
}

} // namespace chainmail
