#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "game.hpp"
#include "render.hpp"

namespace schubert {

using nlohmann::json;

inline json trace_to_json(const std::vector<MoveRecord>& trace) {
    json arr = json::array();
    for (const auto& r : trace) {
        json w = json::array();
        for (auto s : r.white_after) w.push_back({s.row, s.col});
        json j;
        j["stage"] = r.stage;
        j["letter"] = r.letter;
        j["decision"] = decision_string(r);
        j["dagger"] = r.dagger.has_value();
        j["daggerRow"] = r.dagger ? json(r.dagger->row_rank) : json(nullptr);
        j["daggerCol"] = r.dagger ? json(r.dagger->col_rank) : json(nullptr);
        j["whiteAfter"] = std::move(w);
        j["sign"] = r.sign;
        arr.push_back(std::move(j));
    }
    return arr;
}

inline json games_to_json(const std::vector<Game>& games, const SubsetK& a, const SubsetK& b, int n, Mode mode) {
    json doc;
    doc["k"] = a.k();
    doc["n"] = n;
    doc["a"] = a.elems();
    doc["b"] = b.elems();
    doc["mode"] = mode == Mode::KTheory ? "ktheory" : "cohomology";
    doc["games"] = json::array();
    for (const auto& g : games)
        doc["games"].push_back({{"output", g.output.elems()}, {"sign", g.sign}, {"trace", trace_to_json(g.trace)}});
    return doc;
}

/**
 * Replays one serialized trace against the rules, checking every recorded
 * field. Throws InvariantViolation on the first disagreement.
 */
inline Game replay_trace(const SubsetK& a, const SubsetK& b, int n, Mode mode, const json& trace,
                         SubswapPolicy policy = SubswapPolicy::LockDisplaced) {
    auto state_opt = initial_white(a, b, n);
    if (!state_opt) throw InvariantViolation("trace given for a position with no games");
    const auto order = specialization_sequence(n);
    if (trace.size() != order.length()) throw InvariantViolation("trace has the wrong length");
    GameState st = initial_state(*state_opt, n);
    for (std::size_t i = 0; i < trace.size(); ++i) {
        const json& j = trace[i];
        auto fail = [&](const std::string& what) {
            throw InvariantViolation("trace step " + std::to_string(i) + ": " + what);
        };
        if (j.at("stage").get<int>() != static_cast<int>(i)) fail("stage index");
        if (j.at("letter").get<int>() != order.letters[i]) fail("letter");
        auto next = successors(order, st, mode, policy);
        const std::string dec = j.at("decision").get<std::string>();
        const Successor* pick = nullptr;
        if (dec == "forced") {
            if (next.size() != 1) fail("decision recorded as forced but a choice existed");
            pick = &next[0];
        } else {
            if (next.size() == 1) fail("choice recorded where the move was forced");
            for (const auto& s : next)
                if (dec == to_string(s.state.trace.back().action)) pick = &s;
            if (!pick) fail("decision '" + dec + "' not available");
        }
        const auto& rec = pick->state.trace.back();
        std::vector<Square> w;
        for (const auto& sq : j.at("whiteAfter")) w.push_back({sq.at(0).get<int>(), sq.at(1).get<int>()});
        if (WhiteConfig(w) != rec.white_after) fail("whiteAfter");
        if (j.at("sign").get<int>() != rec.sign) fail("sign");
        if (j.at("dagger").get<bool>() != rec.dagger.has_value()) fail("dagger flag");
        if (rec.dagger && (j.at("daggerRow").get<int>() != rec.dagger->row_rank ||
                           j.at("daggerCol").get<int>() != rec.dagger->col_rank))
            fail("dagger ranks");
        GameState moved = pick->state;
        st = std::move(moved);
    }
    return Game{a, b, n, SubsetK(st.white.sorted_rows()), st.sign, st.trace};
}

struct ReplayReport {
    std::size_t games = 0;
    std::size_t mismatches = 0;
    std::string first_error;
};

// Replays every game of a document written by games_to_json.
inline ReplayReport replay_document(const json& doc) {
    const SubsetK a(doc.at("a").get<std::vector<int>>());
    const SubsetK b(doc.at("b").get<std::vector<int>>());
    const int n = doc.at("n").get<int>();
    const Mode mode = doc.at("mode").get<std::string>() == "ktheory" ? Mode::KTheory : Mode::Cohomology;
    ReplayReport rep;
    for (const auto& g : doc.at("games")) {
        ++rep.games;
        try {
            const auto game = replay_trace(a, b, n, mode, g.at("trace"));
            if (game.output.elems() != g.at("output").get<std::vector<int>>() || game.sign != g.at("sign").get<int>())
                ++rep.mismatches;
        } catch (const InvariantViolation& e) {
            ++rep.mismatches;
            if (rep.first_error.empty()) rep.first_error = "game " + std::to_string(rep.games) + ": " + e.what();
        }
    }
    return rep;
}

}  // namespace schubert
