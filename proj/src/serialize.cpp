#include <lpont/error.hpp>
#include <lpont/serialize.hpp>

#include <fstream>

namespace lpont {

Json to_json(const Simplex& s) { return Json(s.to_vector()); }

Simplex simplex_from_json(const Json& j) {
    if (!j.is_array()) throw Error(ErrorKind::Parse, "simplex must be an array");
    std::vector<Vertex> vs;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw Error(ErrorKind::Parse, "vertex labels must be integers");
        vs.push_back(x.get<Vertex>());
    }
    return Simplex(vs);
}

Json moves_to_json(const std::vector<Move>& moves) {
    Json out = Json::array();
    for (const auto& m : moves) {
        Json step;
        step["delta1"] = to_json(m.delta1);
        if (m.delta2.size() == 1 && m.delta1.size() > 1) {
            step["new_vertex"] = m.delta2[0];
        } else {
            step["delta2"] = to_json(m.delta2);
        }
        out.push_back(std::move(step));
    }
    return out;
}

std::vector<Move> moves_from_json(const Json& j, const OrientedComplex& start) {
    if (!j.is_array()) throw Error(ErrorKind::Parse, "move sequence must be an array");
    std::vector<Move> out;
    OrientedComplex k = start;
    Vertex counter = max_vertex(start.complex());
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto& step = j[i];
        if (!step.is_object() || !step.contains("delta1")) throw Error(ErrorKind::Parse, "step needs delta1");
        Simplex d1 = simplex_from_json(step["delta1"]);
        counter = std::max(counter, max_vertex(k.complex()));
        Vertex fresh = step.contains("new_vertex") ? step["new_vertex"].get<Vertex>() : counter + 1;
        auto m = move_at(k, d1, fresh);
        if (!m) {
            throw Error(ErrorKind::MoveNotAdmissible,
                        "step " + std::to_string(i + 1) + ": no bistellar move at " + d1.str());
        }
        if (step.contains("delta2") && simplex_from_json(step["delta2"]) != m->delta2) {
            throw Error(ErrorKind::MoveNotAdmissible, "step " + std::to_string(i + 1) + ": delta2 mismatch");
        }
        k = apply_move_unchecked(k, *m);
        out.push_back(*m);
    }
    return out;
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot open " + path.string());
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Parse, path.string() + ": " + e.what());
    }
}

}  // namespace lpont
