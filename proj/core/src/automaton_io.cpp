#include "snfa/automaton_io.hpp"

#include <json.hpp>

#include "snfa/errors.hpp"

namespace snfa {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json class_to_json(const SymbolClass& c) {
    if (c.is_any()) return "ANY";
    if (c.size() == 255) {
        for (int b = 0; b < 256; ++b) {
            if (!c.matches(static_cast<std::uint8_t>(b))) return ordered_json{{"not", b}};
        }
    }
    ordered_json list = ordered_json::array();
    for (int b = 0; b < 256; ++b) {
        if (c.matches(static_cast<std::uint8_t>(b))) list.push_back(b);
    }
    return list;
}

std::uint8_t byte_value(const ordered_json& j) {
    const auto v = j.get<std::int64_t>();
    if (v < 0 || v > 255) {
        throw AutomatonFileError("byte value " + std::to_string(v) + " outside [0, 255]");
    }
    return static_cast<std::uint8_t>(v);
}

SymbolClass class_from_json(const ordered_json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "ANY") return SymbolClass::any();
        throw AutomatonFileError("unknown symbol class name: " + j.get<std::string>());
    }
    if (j.is_object()) {
        return SymbolClass::all_but(byte_value(j.at("not")));
    }
    if (j.is_array()) {
        SymbolClass c;
        for (const auto& b : j) c.add(byte_value(b));
        return c;
    }
    throw AutomatonFileError("symbol class must be \"ANY\", {\"not\": byte}, or a byte list");
}

ordered_json nfa_to_json(const ScoredNfa& nfa) {
    ordered_json states = ordered_json::array();
    for (const Ste& ste : nfa.states) {
        ordered_json edges = ordered_json::array();
        for (const Edge& e : ste.out_edges) {
            edges.push_back(ordered_json::array({e.target, e.score}));
        }
        states.push_back(ordered_json{
            {"id", ste.id},
            {"role", to_string(ste.role)},
            {"class", class_to_json(ste.symbol_class)},
            {"start_edge_score",
             ste.start_edge_score ? ordered_json(*ste.start_edge_score) : ordered_json(nullptr)},
            {"accepting", ste.accepting},
            {"accept_adjustment", ste.accept_adjustment},
            {"edges", std::move(edges)},
        });
    }
    return ordered_json{
        {"pattern_id", nfa.pattern_id},
        {"name", nfa.name},
        {"pattern", nfa.pattern},
        {"d_max", nfa.d_max},
        {"states", std::move(states)},
    };
}

ScoredNfa nfa_from_json(const ordered_json& j, const ScoreModel& model) {
    ScoredNfa nfa;
    nfa.model = model;
    nfa.pattern_id = j.at("pattern_id").get<std::uint32_t>();
    nfa.name = j.at("name").get<std::string>();
    nfa.pattern = j.at("pattern").get<std::string>();
    nfa.d_max = j.at("d_max").get<std::uint32_t>();

    const auto& states = j.at("states");
    nfa.states.reserve(states.size());
    for (const auto& js : states) {
        Ste ste;
        ste.id = js.at("id").get<std::uint32_t>();
        if (ste.id != nfa.states.size()) {
            throw AutomatonFileError("state ids must be dense and in order; got id " +
                                     std::to_string(ste.id) + " at position " +
                                     std::to_string(nfa.states.size()));
        }
        const std::string role_text = js.at("role").get<std::string>();
        const auto role = parse_role(role_text);
        if (!role) {
            throw AutomatonFileError("unknown state role: " + role_text);
        }
        ste.role = *role;
        ste.symbol_class = class_from_json(js.at("class"));
        const auto& start = js.at("start_edge_score");
        if (!start.is_null()) ste.start_edge_score = start.get<score_t>();
        ste.accepting = js.at("accepting").get<bool>();
        ste.accept_adjustment = js.at("accept_adjustment").get<score_t>();
        for (const auto& je : js.at("edges")) {
            if (!je.is_array() || je.size() != 2) {
                throw AutomatonFileError("edge records must be [target, score] pairs");
            }
            ste.out_edges.push_back({je.at(0).get<std::uint32_t>(), je.at(1).get<score_t>()});
        }
        nfa.states.push_back(std::move(ste));
    }
    for (const Ste& ste : nfa.states) {
        for (const Edge& e : ste.out_edges) {
            if (e.target >= nfa.states.size()) {
                throw AutomatonFileError("edge target " + std::to_string(e.target) +
                                         " out of range in automaton " +
                                         std::to_string(nfa.pattern_id));
            }
        }
    }
    return nfa;
}

}  // namespace

std::string serialize_automata(const AutomatonFile& file) {
    ordered_json root{
        {"format_version", kAutomatonFormatVersion},
        {"model",
         {{"match", file.model.match_bonus},
          {"mismatch", file.model.mismatch_penalty},
          {"gap", file.model.gap_penalty}}},
        {"options",
         {{"d_max", file.options.d_max ? ordered_json(*file.options.d_max) : ordered_json("full")},
          {"allow_mismatch", file.options.allow_mismatch}}},
    };
    ordered_json automata = ordered_json::array();
    for (const ScoredNfa& nfa : file.automata) {
        automata.push_back(nfa_to_json(nfa));
    }
    root["automata"] = std::move(automata);
    return root.dump(2) + "\n";
}

AutomatonFile parse_automata(std::string_view text) {
    try {
        const ordered_json root = ordered_json::parse(text);

        const auto version = root.at("format_version").get<std::int64_t>();
        if (version != kAutomatonFormatVersion) {
            throw AutomatonFileError("unsupported format_version " + std::to_string(version) +
                                     "; this reader understands version " +
                                     std::to_string(kAutomatonFormatVersion));
        }

        AutomatonFile file;
        const auto& model = root.at("model");
        file.model.match_bonus = model.at("match").get<score_t>();
        file.model.mismatch_penalty = model.at("mismatch").get<score_t>();
        file.model.gap_penalty = model.at("gap").get<score_t>();
        try {
            file.model.validate();
        } catch (const ModelError& e) {
            throw AutomatonFileError(std::string("invalid model: ") + e.what());
        }

        const auto& options = root.at("options");
        const auto& d_max = options.at("d_max");
        if (d_max.is_string()) {
            if (d_max.get<std::string>() != "full") {
                throw AutomatonFileError("options.d_max must be \"full\" or an integer");
            }
        } else {
            file.options.d_max = d_max.get<std::uint32_t>();
        }
        file.options.allow_mismatch = options.at("allow_mismatch").get<bool>();

        for (const auto& ja : root.at("automata")) {
            file.automata.push_back(nfa_from_json(ja, file.model));
        }
        return file;
    } catch (const nlohmann::json::exception& e) {
        throw AutomatonFileError(std::string("automaton file parse failed: ") + e.what());
    }
}

}  // namespace snfa
