#include "psh/walls.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace psh {

namespace {

using nlohmann::ordered_json;

ordered_json q_json(const Rational& q) {
    return {{"num", to_long(Integer(q.get_num()))}, {"den", to_long(Integer(q.get_den()))}};
}

ordered_json terms_json(const std::vector<Term>& v) {
    ordered_json a = ordered_json::array();
    for (auto& t : v) a.push_back({{"twist", t.twist}, {"mult", t.mult}});
    return a;
}

std::string interp_full(const InterpBundle& b) {
    if (b.name.empty() || !b.shape) return b.str();
    return b.name + " = coker(" + b.shape->str() + ")";
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

std::string bs_str(const std::vector<std::string>& v) { return v.empty() ? "empty" : join(v, " u "); }

std::vector<std::string> row_cells(const SbldRow& r) {
    return {r.geometry, r.betti + ", " + r.destab.str(), interp_full(r.interp), bs_str(r.base_locus), to_str(r.mu)};
}

}  // namespace

std::string sbld_text(const SbldTable& t) {
    std::vector<std::vector<std::string>> cells{{"Geometry", "Syzygies", "Interpolating bundle V", "Bs(D_V)", "mu(D_V)"}};
    for (auto& r : t.rows) cells.push_back(row_cells(r));
    std::vector<std::size_t> w(5, 0);
    for (auto& c : cells)
        for (std::size_t i = 0; i < 5; ++i) w[i] = std::max(w[i], c[i].size());
    std::size_t total = 0;
    for (auto x : w) total += x + 3;
    std::ostringstream os;
    os << "SBLD of the Hilbert scheme of " << t.n << " points\n";
    auto line = [&](const std::vector<std::string>& c) {
        for (std::size_t i = 0; i < 5; ++i) {
            os << c[i];
            if (i + 1 < 5) os << std::string(w[i] - c[i].size(), ' ') << " | ";
        }
        os << "\n";
    };
    line(cells[0]);
    for (std::size_t k = 0; k < t.rows.size(); ++k) {
        if (t.rows[k].dashed) {
            std::string d;
            while (d.size() + 2 <= total) d += "- ";
            while (!d.empty() && d.back() == ' ') d.pop_back();
            os << d << "\n";
        } else {
            os << std::string(total, '-') << "\n";
        }
        line(cells[k + 1]);
    }
    return os.str();
}

std::string sbld_tsv(const SbldTable& t) {
    std::ostringstream os;
    os << "n\tgeometry\tbetti\tdestab\tinterp_sources\tinterp_targets\tinterp_name\tbase_locus\tmu\twall_center\tdashed\n";
    for (auto& r : t.rows) {
        RowCheck c = check_row(t.n, r);
        os << t.n << "\t" << r.geometry << "\t" << r.betti << "\t" << r.destab.str() << "\t";
        if (r.interp.shape) {
            std::string s = r.interp.shape->str();
            auto pos = s.find(" -> ");
            os << s.substr(0, pos) << "\t" << s.substr(pos + 4);
        } else {
            os << "\t";
        }
        os << "\t" << r.interp.name << "\t" << join(r.base_locus, ",") << "\t" << to_str(r.mu) << "\t" << to_str(c.center) << "\t"
           << (r.dashed ? 1 : 0) << "\n";
    }
    return os.str();
}

std::string sbld_json(const SbldTable& t) {
    ordered_json j;
    j["n"] = t.n;
    ordered_json rows = ordered_json::array();
    for (auto& r : t.rows) {
        RowCheck c = check_row(t.n, r);
        Ch d = r.destab.ch();
        ordered_json interp;
        interp["name"] = r.interp.name.empty() ? ordered_json(nullptr) : ordered_json(r.interp.name);
        if (r.interp.shape) {
            interp["sources"] = terms_json(r.interp.shape->sources);
            interp["targets"] = terms_json(r.interp.shape->targets);
        } else {
            interp["sources"] = nullptr;
            interp["targets"] = nullptr;
        }
        rows.push_back({{"geometry", r.geometry},
                        {"betti", r.betti},
                        {"destab", {{"name", r.destab.str()}, {"r", to_str(d.r)}, {"c1", to_str(d.c1)}, {"ch2", to_str(d.ch2)}}},
                        {"interp", interp},
                        {"mu", q_json(r.mu)},
                        {"wall_center", q_json(c.center)},
                        {"base_locus", r.base_locus},
                        {"dashed", r.dashed}});
    }
    j["rows"] = rows;
    return j.dump(2) + "\n";
}

std::string walls_text(const SbldTable& t) {
    std::ostringstream os;
    os << "Walls for the Hilbert scheme of " << t.n << " points\n";
    for (std::size_t i = 0; i < t.walls.size(); ++i) {
        std::vector<std::string> names;
        for (auto& d : t.walls[i].destabs) names.push_back(d.str());
        os << (i + 1) << ". W_" << to_str(t.walls[i].center) << "  mu = " << to_str(slope_from_center(t.walls[i].center))
           << "  destabilized by " << join(names, ", ") << "\n";
    }
    return os.str();
}

std::string walls_tsv(const SbldTable& t) {
    std::ostringstream os;
    os << "n\tcenter\tmu\tdestab\tr\tc1\tch2\n";
    for (auto& w : t.walls)
        for (auto& d : w.destabs) {
            Ch c = d.ch();
            os << t.n << "\t" << to_str(w.center) << "\t" << to_str(slope_from_center(w.center)) << "\t" << d.str() << "\t"
               << to_str(c.r) << "\t" << to_str(c.c1) << "\t" << to_str(c.ch2) << "\n";
        }
    return os.str();
}

std::string walls_json(const SbldTable& t) {
    ordered_json j;
    j["n"] = t.n;
    ordered_json walls = ordered_json::array();
    for (auto& w : t.walls) {
        ordered_json ds = ordered_json::array();
        for (auto& d : w.destabs) {
            Ch c = d.ch();
            ds.push_back({{"name", d.str()}, {"r", to_str(c.r)}, {"c1", to_str(c.c1)}, {"ch2", to_str(c.ch2)}});
        }
        walls.push_back({{"center", q_json(w.center)}, {"mu", q_json(slope_from_center(w.center))}, {"destabs", ds}});
    }
    j["walls"] = walls;
    return j.dump(2) + "\n";
}

}  // namespace psh
