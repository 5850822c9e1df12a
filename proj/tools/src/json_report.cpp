#include "json_report.hpp"

#include <algorithm>

namespace unmixed::cli {

namespace {

nlohmann::json names_array(const Graph& g, const VertexSet& s) {
    auto array = nlohmann::json::array();
    for (VertexId v : s) array.push_back(g.name(v));
    return array;
}

nlohmann::json cover_object(const Graph& g, const VertexSet& s) {
    return {{"size", s.size()}, {"vertices", names_array(g, s)}};
}

const char* verdict_string(Verdict v) {
    switch (v) {
        case Verdict::Unmixed: return "unmixed";
        case Verdict::Mixed: return "mixed";
        case Verdict::NotBipartite: return "not_bipartite";
    }
    return "unknown";
}

const char* reason_string(MixedReason r) {
    switch (r) {
        case MixedReason::UnequalSides: return "unequal_sides";
        case MixedReason::NoPerfectMatching: return "no_perfect_matching";
        case MixedReason::ConditionBFails: return "condition_b_fails";
    }
    return "unknown";
}

}  // namespace

nlohmann::json report_to_json(const UnmixedReport& report) {
    const Graph& g = report.graph;
    nlohmann::json out;
    out["verdict"] = verdict_string(report.verdict);
    out["stripped_isolated"] = report.stripped_isolated;

    switch (report.verdict) {
        case Verdict::Unmixed: {
            const auto& lab = *report.labeling;
            out["g"] = lab.pair_count();
            auto pairs = nlohmann::json::array();
            for (std::size_t i = 0; i < lab.pair_count(); ++i)
                pairs.push_back({g.name(lab.x[i]), g.name(lab.y[i])});
            out["certificate"] = {{"labeling", pairs}};
            break;
        }
        case Verdict::Mixed: {
            out["g"] = report.cover_small.size();
            out["reason"] = reason_string(*report.reason);
            nlohmann::json certificate = {
                {"cover_small", cover_object(g, report.cover_small)},
                {"cover_large", cover_object(g, report.cover_large)},
            };
            if (report.failing_triple)
                certificate["failing_triple"] = {{"i", report.failing_triple->i},
                                                 {"j", report.failing_triple->j},
                                                 {"k", report.failing_triple->k}};
            out["certificate"] = std::move(certificate);
            break;
        }
        case Verdict::NotBipartite: {
            out["g"] = nullptr;
            auto cycle = nlohmann::json::array();
            for (VertexId v : report.odd_cycle->cycle) cycle.push_back(g.name(v));
            out["certificate"] = {{"odd_cycle", cycle}};
            break;
        }
    }
    return out;
}

nlohmann::json oracle_to_json(const Graph& g, const std::vector<VertexSet>& covers,
                              bool include_covers) {
    std::vector<std::size_t> sizes;
    sizes.reserve(covers.size());
    for (const auto& c : covers) sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    const bool unmixed =
        std::adjacent_find(sizes.begin(), sizes.end(), std::not_equal_to<>()) == sizes.end();

    nlohmann::json out;
    out["verdict"] = unmixed ? "unmixed" : "mixed";
    out["cover_count"] = covers.size();
    out["cover_sizes"] = sizes;
    if (include_covers) {
        auto list = nlohmann::json::array();
        for (const auto& c : covers) list.push_back(names_array(g, c));
        out["covers"] = std::move(list);
    }
    return out;
}

}  // namespace unmixed::cli
