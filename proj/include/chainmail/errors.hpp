#pragma once

#include <cstddef>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace chainmail {

/// Malformed or inconsistent input (bad facet, wrong n, non-tree, ...).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An instance exceeds a configured size limit for an exponential routine.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// A computation reached a state that indicates a bug, not bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Capacity limits. Each can be overridden through the named environment
// variable; the environment is read on every call, nothing is cached.
inline constexpr std::size_t kMaskBits = 64;

inline std::size_t limit_from_env(const char* name, std::size_t fallback)
{
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0')
        return fallback;
    char* end = nullptr;
    unsigned long long v = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0' || v == 0)
        return fallback;
    return static_cast<std::size_t>(v);
}

inline std::size_t max_graph_edges()
{
    return limit_from_env("CHAINMAIL_MAX_EDGES", 24);
}

inline std::size_t max_iso_vertices()
{
    return limit_from_env("CHAINMAIL_MAX_ISO_VERTICES", 24);
}

inline std::size_t max_poset_search_vertices()
{
    return limit_from_env("CHAINMAIL_MAX_POSET_VERTICES", 8);
}

inline std::size_t max_disconnecting_vertices()
{
    return limit_from_env("CHAINMAIL_MAX_TREE_VERTICES", 40);
}

} // namespace chainmail
