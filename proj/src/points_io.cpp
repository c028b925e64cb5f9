#include "psh/points_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace psh {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

Rational parse_q(const json& v) {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (!v.is_string()) throw PointsError("point coordinate must be a string \"num/den\" or an integer");
    try {
        Rational q(v.get<std::string>(), 10);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw PointsError("bad rational: " + v.get<std::string>());
    }
}

}  // namespace

RawConfig parse_config_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw PointsError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw PointsError("config must be a JSON object");
    RawConfig raw;
    if (j.contains("field")) {
        auto& f = j["field"];
        if (f.is_string()) {
            if (f.get<std::string>() != "Q") throw PointsError("field must be \"Q\" or {\"p\": prime}");
        } else if (f.is_object() && f.contains("p") && f["p"].is_number_unsigned()) {
            raw.prime = f["p"].get<std::uint64_t>();
        } else {
            throw PointsError("field must be \"Q\" or {\"p\": prime}");
        }
    }
    if (j.contains("label") && j["label"].is_string()) raw.label = j["label"].get<std::string>();
    if (j.contains("seed")) raw.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("generate")) {
        auto& g = j["generate"];
        raw.gen = parse_gen_spec(g.at("spec").get<std::string>());
        raw.gen_n = g.at("n").get<long>();
    } else {
        if (!j.contains("points") || !j["points"].is_array()) throw PointsError("config needs a \"points\" array");
        for (auto& p : j["points"]) {
            if (!p.is_array() || p.size() != 3) throw PointsError("each point must be a triple");
            raw.points.push_back({parse_q(p[0]), parse_q(p[1]), parse_q(p[2])});
        }
        if (raw.points.empty()) throw PointsError("empty point configuration");
    }
    return raw;
}

RawConfig read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PointsError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_json(ss.str());
}

std::string config_json(const std::string& field, const std::vector<std::array<std::string, 3>>& pts, const std::string& label,
                        std::uint64_t seed) {
    ordered_json j;
    if (field == "Q")
        j["field"] = "Q";
    else
        j["field"] = {{"p", std::stoull(field)}};
    ordered_json a = ordered_json::array();
    for (auto& p : pts) a.push_back({p[0], p[1], p[2]});
    j["points"] = a;
    j["label"] = label;
    j["seed"] = seed;
    return j.dump(2) + "\n";
}

std::string betti_text(const BettiTable& b) {
    std::ostringstream os;
    os << b.str() << "\n";
    os << "degree\tbeta1\tbeta2\n";
    std::map<int, std::pair<long, long>> rows;
    for (auto& [j, m] : b.beta1) rows[j].first = m;
    for (auto& [j, m] : b.beta2) rows[j].second = m;
    for (auto& [j, v] : rows) os << j << "\t" << v.first << "\t" << v.second << "\n";
    return os.str();
}

std::string betti_tsv(const BettiTable& b, long n) {
    std::ostringstream os;
    os << "n\tkind\tdegree\tmult\n";
    for (auto& [j, m] : b.beta1) os << n << "\tbeta1\t" << j << "\t" << m << "\n";
    for (auto& [j, m] : b.beta2) os << n << "\tbeta2\t" << j << "\t" << m << "\n";
    return os.str();
}

std::string betti_json(const BettiTable& b, long n, const std::vector<std::pair<std::string, std::string>>& verdicts) {
    ordered_json j;
    j["n"] = n;
    ordered_json b1 = ordered_json::object(), b2 = ordered_json::object();
    for (auto& [d, m] : b.beta1) b1[std::to_string(d)] = m;
    for (auto& [d, m] : b.beta2) b2[std::to_string(d)] = m;
    j["beta1"] = b1;
    j["beta2"] = b2;
    j["resolution"] = b.str();
    ordered_json v = ordered_json::array();
    for (auto& [id, verdict] : verdicts) v.push_back({{"detector", id}, {"verdict", verdict}});
    j["detectors"] = v;
    return j.dump(2) + "\n";
}

}  // namespace psh
