#include "chainmail/verify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include <json.hpp>

#include "chainmail/poset.hpp"
#include "chainmail/strata.hpp"
#include "chainmail/trees.hpp"

namespace chainmail {

std::size_t VerificationReport::passed() const
{
    return static_cast<std::size_t>(
        std::count_if(cases.begin(), cases.end(), [](const CaseRecord& c) { return c.pass; }));
}

std::string VerificationReport::to_json(bool include_timing) const
{
    auto sorted = cases;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const CaseRecord& a, const CaseRecord& b) { return a.key < b.key; });
    nlohmann::ordered_json j;
    j["schema_version"] = kReportSchemaVersion;
    j["suite"] = suite;
    j["certificate"] = "homology-verified";
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& c : sorted)
        list.push_back({{"instance", c.instance},
                        {"expected", c.expected},
                        {"computed", c.computed},
                        {"pass", c.pass}});
    j["cases"] = std::move(list);
    j["summary"] = {{"total", cases.size()}, {"passed", passed()}, {"failed", failed()}};
    if (include_timing)
        j["wall_time_ms"] = wall_time_ms;
    return j.dump(2) + "\n";
}

std::optional<int> expected_delta_string_sphere(int t)
{
    const int k = t / 3;
    switch (t % 3) {
    case 0:
        return 2 * k - 1;
    case 1:
        return 2 * k;
    default:
        return std::nullopt;
    }
}

std::optional<int> expected_hook_sphere(int k, int t)
{
    if (k < 2 || t < 0)
        throw InputError("hook pattern needs k >= 2 and t >= 0");
    const int m = t / k;
    if (t % k == 0)
        return 2 * m - 1;
    if (t % k == 1)
        return 2 * m;
    return std::nullopt;
}

namespace {

std::string describe_expectation(std::optional<int> sphere)
{
    return sphere ? "S^" + std::to_string(*sphere) : "point";
}

bool matches_expectation(const std::vector<HomologyGroup>& h, std::optional<int> sphere)
{
    return sphere ? matches_sphere(h, *sphere) : matches_point(h);
}

template <typename Body>
VerificationReport timed(const std::string& name, Body&& body)
{
    VerificationReport report;
    report.suite = name;
    auto start = std::chrono::steady_clock::now();
    body(report);
    report.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::string tree_label(const Tree& T)
{
    std::ostringstream out;
    out << "n=" << T.size() << " edges=[";
    for (std::size_t i = 0; i < T.edges().size(); ++i)
        out << (i ? " " : "") << T.edges()[i].first << '-' << T.edges()[i].second;
    out << "]";
    return out.str();
}

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw CapacityError(what);
}

} // namespace

VerificationReport verify_prop13(const SuiteOptions& opt)
{
    require(opt.max_t >= 0, "max-t must be >= 0");
    require(static_cast<std::size_t>(2 * opt.max_t) <= max_graph_edges(),
            "Δ(L_t) for t = " + std::to_string(opt.max_t) + " exceeds the edge limit");
    return timed("prop13", [&](VerificationReport& r) {
        for (int t = 0; t <= opt.max_t; ++t) {
            auto h = reduced_homology(delta_complex(double_directed_string(t)));
            auto want = expected_delta_string_sphere(t);
            r.cases.push_back({{t}, "Delta(L_" + std::to_string(t) + ")", describe_expectation(want),
                               homology_summary(h), matches_expectation(h, want)});
        }
    });
}

VerificationReport verify_prop15(const SuiteOptions& opt)
{
    require(opt.max_t >= 0 && opt.max_k >= 2, "prop15 needs max-t >= 0 and max-k >= 2");
    require(opt.max_k + opt.max_t <= 40, "δ_(k,1^t) bounds too large");
    return timed("prop15", [&](VerificationReport& r) {
        for (int k = 2; k <= opt.max_k; ++k)
            for (int t = 0; t <= opt.max_t; ++t) {
                auto h = reduced_homology(delta_lambda(Partition::hook(k, t)));
                auto want = expected_hook_sphere(k, t);
                r.cases.push_back({{k, t},
                                   "delta_(" + std::to_string(k) + ",1^" + std::to_string(t) + ")",
                                   describe_expectation(want), homology_summary(h),
                                   matches_expectation(h, want)});
            }
    });
}

VerificationReport verify_eq21(const SuiteOptions& opt)
{
    require(opt.max_t >= 0, "max-t must be >= 0");
    require(static_cast<std::size_t>(2 * opt.max_t) <= max_graph_edges(),
            "Δ(L_t) for t = " + std::to_string(opt.max_t) + " exceeds the edge limit");
    return timed("eq21", [&](VerificationReport& r) {
        for (int t = 0; t <= opt.max_t; ++t) {
            auto a = reduced_homology(delta_lambda(Partition::hook(3, t)));
            auto b = reduced_homology(delta_complex(double_directed_string(t)));
            r.cases.push_back({{t}, "t=" + std::to_string(t),
                               "delta_(3,1^t) ~ Delta(L_t): " + homology_summary(b),
                               homology_summary(a), same_homology(a, b)});
        }
    });
}

PhiCheck check_phi(const Tree& T)
{
    PhiCheck c;
    SimplicialMap phi = phi_map(T);
    c.source_homology = reduced_homology(phi.source());
    c.target_homology = reduced_homology(phi.target());
    c.homology_match = same_homology(c.source_homology, c.target_homology);
    auto bad = non_simplicial_witness(phi);
    c.simplicial = !bad.has_value();
    if (!c.simplicial) {
        auto tilde = direct_augmented(T);
        for (int e : phi.source().labels_of(*bad)) {
            auto [x, y] = tilde.edges()[static_cast<std::size_t>(e - 1)];
            c.witness.push_back(std::to_string(x) + "->" + std::to_string(y));
        }
        return c;
    }
    c.quillen = verify_quillen_fibers(phi);
    c.rational_iso = rational_homology_iso(phi);
    return c;
}

std::string quillen_json(const Tree& T, const PhiCheck& check)
{
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (auto [x, y] : T.edges())
        edges.push_back({x, y});
    nlohmann::ordered_json bad = nlohmann::ordered_json::array();
    for (const auto& f : check.quillen.non_cone_fibers)
        bad.push_back({{"face", f.face}, {"homologically_contractible", f.homologically_contractible}});
    nlohmann::ordered_json j;
    j["tree"] = {{"vertices", T.vertices()}, {"edges", edges}};
    j["simplicial"] = check.simplicial;
    if (!check.simplicial)
        j["non_simplicial_witness"] = check.witness;
    j["n_faces_checked"] = check.quillen.faces_checked;
    j["non_cone_fibers"] = bad;
    j["homology_match"] = check.homology_match;
    j["rational_homology_iso"] = check.rational_iso;
    return j.dump(2) + "\n";
}

VerificationReport verify_thm32(const SuiteOptions& opt)
{
    require(opt.max_tree_vertices >= 1 && opt.max_tree_vertices <= 12, "tree size must be in 1..12");
    // A star on n vertices gives T̃ its most edges: 3(n - 1).
    auto worst_edges = [](int n) { return static_cast<std::size_t>(std::max(2, 3 * (n - 1))); };
    require(worst_edges(opt.max_tree_vertices) <= max_graph_edges(),
            "trees on " + std::to_string(opt.max_tree_vertices) + " vertices exceed the edge limit");
    if (opt.random_trees > 0)
        require(opt.random_tree_vertices >= 1 &&
                    worst_edges(opt.random_tree_vertices) <= max_graph_edges(),
                "random tree size exceeds the edge limit");

    auto record = [](VerificationReport& r, std::vector<int> key, const Tree& T) {
        PhiCheck c = check_phi(T);
        std::ostringstream computed;
        computed << "simplicial=" << c.simplicial;
        if (!c.simplicial) {
            computed << " witness={";
            for (std::size_t i = 0; i < c.witness.size(); ++i)
                computed << (i ? "," : "") << c.witness[i];
            computed << "}";
        }
        computed << " fibers=" << c.quillen.faces_checked
                 << " non_cone=" << c.quillen.non_cone_fibers.size()
                 << " homology_match=" << c.homology_match << " rational_iso=" << c.rational_iso
                 << " H_source=" << homology_summary(c.source_homology)
                 << " H_target=" << homology_summary(c.target_homology);
        r.cases.push_back({std::move(key), tree_label(T),
                           "phi simplicial, cone fibers, equal homology, rational iso",
                           computed.str(), c.pass()});
    };

    return timed("thm32", [&](VerificationReport& r) {
        for (int n = 1; n <= opt.max_tree_vertices; ++n) {
            auto trees = enumerate_trees(n);
            for (std::size_t i = 0; i < trees.size(); ++i)
                record(r, {0, n, static_cast<int>(i)}, trees[i]);
        }
        for (int i = 0; i < opt.random_trees; ++i)
            record(r, {1, i}, random_tree(opt.random_tree_vertices, opt.seed + static_cast<std::uint64_t>(i)));
    });
}

VerificationReport verify_sec4_string(const SuiteOptions& opt)
{
    require(opt.max_k >= 1 && opt.max_t >= 0, "sec4-string needs max-k >= 1 and max-t >= 0");
    require(static_cast<std::size_t>(opt.max_t + 2) <= max_iso_vertices(),
            "string length exceeds the isomorphism search limit");
    return timed("sec4-string", [&](VerificationReport& r) {
        for (int k = 1; k <= opt.max_k; ++k) {
            for (int t = std::max(k - 1, 0); t <= opt.max_t; ++t) {
                auto lhs = disconnecting_complex(string_tree(t), k);
                auto rhs = delta_lambda(Partition::hook(k + 1, t + 2 - k));
                auto iso = are_isomorphic(lhs, rhs);
                std::string computed = "no bijection";
                if (iso) {
                    std::ostringstream out;
                    out << "bijection";
                    for (auto [a, b] : *iso)
                        out << ' ' << a << "->" << b;
                    computed = out.str();
                }
                r.cases.push_back({{k, t},
                                   "D_" + std::to_string(k) + "(string_" + std::to_string(t) + ")",
                                   "isomorphic to delta_(" + std::to_string(k + 1) + ",1^" +
                                       std::to_string(t + 2 - k) + ")",
                                   computed, iso.has_value()});
            }
        }
    });
}

VerificationReport verify_descriptions(const SuiteOptions& opt)
{
    require(opt.max_t >= 1, "descriptions needs max-t >= 1");
    require(static_cast<std::size_t>(2 * opt.max_t) <= max_graph_edges(),
            "Δ(L_t) for t = " + std::to_string(opt.max_t) + " exceeds the edge limit");
    return timed("descriptions", [&](VerificationReport& r) {
        for (int t = 1; t <= opt.max_t; ++t) {
            auto delta = delta_complex(double_directed_string(t));
            std::vector<int> vertices;
            std::vector<std::vector<int>> nonfaces;
            for (int i = 1; i <= 2 * t; ++i) {
                vertices.push_back(i);
                if (i < 2 * t)
                    nonfaces.push_back({i, i + 1});
            }
            auto sparse = SimplicialComplex::from_minimal_nonfaces(vertices, nonfaces);
            auto chains = order_complex(p_poset(t));
            auto independent = independence_complex(path_graph(2 * t));
            const std::string inst = "t=" + std::to_string(t);
            r.cases.push_back({{t, 1}, inst + " minimal nonfaces", "equal face sets",
                               delta == sparse ? "equal" : "different", delta == sparse});
            r.cases.push_back({{t, 2}, inst + " order complex of P_t", "equal face sets",
                               delta == chains ? "equal" : "different", delta == chains});
            r.cases.push_back({{t, 3}, inst + " independence complex of path", "equal face sets",
                               delta == independent ? "equal" : "different", delta == independent});
        }
    });
}

std::vector<std::string> suite_names()
{
    return {"prop13", "prop15", "eq21", "thm32", "sec4-string", "descriptions"};
}

VerificationReport run_suite(const std::string& name, const SuiteOptions& opt)
{
    if (name == "prop13")
        return verify_prop13(opt);
    if (name == "prop15")
        return verify_prop15(opt);
    if (name == "eq21")
        return verify_eq21(opt);
    if (name == "thm32")
        return verify_thm32(opt);
    if (name == "sec4-string")
        return verify_sec4_string(opt);
    if (name == "descriptions")
        return verify_descriptions(opt);
    throw InputError("unknown suite '" + name + "'");
}

} // namespace chainmail
