#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chainmail/graph.hpp"
#include "chainmail/homology.hpp"
#include "chainmail/maps.hpp"

namespace chainmail {

inline constexpr int kReportSchemaVersion = 1;

struct CaseRecord {
    std::vector<int> key;  // ordering key
    std::string instance;
    std::string expected;
    std::string computed;
    bool pass = false;
};

struct VerificationReport {
    std::string suite;
    std::vector<CaseRecord> cases;
    double wall_time_ms = 0;

    std::size_t passed() const;
    std::size_t failed() const { return cases.size() - passed(); }
    bool all_passed() const { return failed() == 0; }

    /// Cases sorted by key. Wall time is left out unless asked for, so that
    /// identical runs give identical bytes.
    std::string to_json(bool include_timing = false) const;
};

struct SuiteOptions {
    int max_t = 9;
    int max_k = 4;
    int max_tree_vertices = 8;
    int random_trees = 0;
    int random_tree_vertices = 8;
    std::uint64_t seed = 1;
};

/// Expected reduced homology of Δ(L_t): sphere dimension, or nullopt for a
/// point.
std::optional<int> expected_delta_string_sphere(int t);
/// Expected reduced homology of δ_{(k,1^t)}, k >= 2.
std::optional<int> expected_hook_sphere(int k, int t);

VerificationReport verify_prop13(const SuiteOptions& opt);
VerificationReport verify_prop15(const SuiteOptions& opt);
VerificationReport verify_eq21(const SuiteOptions& opt);
VerificationReport verify_thm32(const SuiteOptions& opt);
VerificationReport verify_sec4_string(const SuiteOptions& opt);
VerificationReport verify_descriptions(const SuiteOptions& opt);

/// Dispatch by suite name: prop13, prop15, eq21, thm32, sec4-string,
/// descriptions. Throws InputError on an unknown name, CapacityError when
/// the bounds exceed the configured limits.
VerificationReport run_suite(const std::string& name, const SuiteOptions& opt);
std::vector<std::string> suite_names();

/// Per-tree outcome of the φ checks.
struct PhiCheck {
    bool simplicial = false;
    /// Source facet mapped outside the target, as "x->y" edge labels.
    std::vector<std::string> witness;
    QuillenReport quillen;
    bool homology_match = false;
    bool rational_iso = false;
    std::vector<HomologyGroup> source_homology;
    std::vector<HomologyGroup> target_homology;

    bool pass() const { return simplicial && quillen.all_cones() && homology_match && rational_iso; }
};

PhiCheck check_phi(const Tree& T);

/// `{tree, n_faces_checked, non_cone_fibers, homology_match}` for one tree.
std::string quillen_json(const Tree& T, const PhiCheck& check);

} // namespace chainmail
