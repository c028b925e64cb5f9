#include "psh/points.hpp"

#include <regex>

namespace psh {

std::string GenSpec::str() const {
    switch (kind) {
        case GenKind::general: return "general";
        case GenKind::collinear: return "collinear:" + std::to_string(k);
        case GenKind::on_conic: return "conic:" + std::to_string(k);
        case GenKind::on_cubic: return "cubic:" + std::to_string(k);
    }
    return "?";
}

GenSpec parse_gen_spec(const std::string& s) {
    if (s == "general") return {GenKind::general, 0};
    static const std::regex re(R"((collinear|conic|cubic):(\d+))");
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw PointsError("bad configuration spec: " + s);
    long k = std::stol(m[2]);
    GenKind kind = m[1] == "collinear" ? GenKind::collinear : m[1] == "conic" ? GenKind::on_conic : GenKind::on_cubic;
    return {kind, k};
}

std::optional<GenSpec> spec_from_geometry(const std::string& label) {
    if (label == "Gaeta general") return GenSpec{GenKind::general, 0};
    static const std::regex re(R"(([LQC])_(\d+)\((\d+)\))");
    std::smatch m;
    if (!std::regex_match(label, m, re)) return std::nullopt;
    long k = std::stol(m[2]);
    GenKind kind = m[1] == "L" ? GenKind::collinear : m[1] == "Q" ? GenKind::on_conic : GenKind::on_cubic;
    return GenSpec{kind, k};
}

void check_betti(const BettiTable& b, long n, const std::vector<long>& ideal_dims) {
    long s1 = 0, s2 = 0;
    for (auto& [j, m] : b.beta1) s1 += m;
    for (auto& [j, m] : b.beta2) s2 += m;
    if (s1 - s2 != 1) throw PointsError("Betti table " + b.str() + " does not have rank one");
    GradedShape sh = b.shape();
    if (!(sh.ch() == ideal_points(n).ch()))
        throw PointsError("Betti table " + b.str() + " does not resolve I_" + std::to_string(n));
    for (std::size_t m = 0; m < ideal_dims.size(); ++m) {
        long v = 0;
        int mm = static_cast<int>(m);
        for (auto& [j, c] : b.beta1)
            if (mm >= j) v += c * forms_dim(mm - j);
        for (auto& [j, c] : b.beta2)
            if (mm >= j) v -= c * forms_dim(mm - j);
        if (v != ideal_dims[m])
            throw PointsError("Hilbert identity fails in degree " + std::to_string(m) + " for " + b.str());
    }
}

namespace {

struct DetectorInfo {
    std::string id;
    long n;
    GradedShape shape;
};

const std::vector<DetectorInfo>& catalogue() {
    static const std::vector<DetectorInfo> c{
        {"n7-G", 7, GradedShape({{-5, 1}, {-4, 1}}, {{-3, 3}})},
        {"n8-G", 8, GradedShape({{-5, 2}}, {{-4, 1}, {-3, 2}})},
        {"n12-G1-l123", 12, GradedShape({{-6, 2}, {-5, 1}}, {{-5, 1}, {-4, 3}})},
        {"n12-G1-l45", 12, GradedShape({{-6, 2}, {-5, 1}}, {{-5, 1}, {-4, 3}})},
    };
    return c;
}

}  // namespace

const std::vector<std::string>& detector_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (auto& d : catalogue()) v.push_back(d.id);
        return v;
    }();
    return ids;
}

GradedShape detector_shape(const std::string& id) {
    for (auto& d : catalogue())
        if (d.id == id) return d.shape;
    throw PointsError("unknown detector: " + id);
}

std::vector<std::string> applicable_detectors(long n, const GradedShape& betti) {
    std::vector<std::string> out;
    for (auto& d : catalogue())
        if (d.n == n && d.shape == betti) out.push_back(d.id);
    return out;
}

}  // namespace psh
