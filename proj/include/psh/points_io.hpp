#pragma once

#include "psh/points.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace psh {

// Point-configuration file: {"field": "Q" | {"p": ...}, "points": [["a/b", "c", "d"], ...], "label": ..., "seed": ...}
// A file may instead carry {"generate": {"spec": "conic:6", "n": 7}} and no points.
struct RawConfig {
    std::optional<std::uint64_t> prime;  // absent: rationals
    std::vector<std::array<Rational, 3>> points;
    std::string label;
    std::uint64_t seed = 0;
    std::optional<GenSpec> gen;
    long gen_n = 0;
};

RawConfig parse_config_json(const std::string& text);
RawConfig read_config_file(const std::string& path);

std::string config_json(const std::string& field, const std::vector<std::array<std::string, 3>>& pts, const std::string& label,
                        std::uint64_t seed);

template <class F>
PointConfig<F> realize(const RawConfig& raw, const F& f) {
    if (raw.gen) {
        auto cfg = generate_config(f, *raw.gen, raw.gen_n, raw.seed);
        if (!raw.label.empty()) cfg.label = raw.label;
        return cfg;
    }
    PointConfig<F> cfg{f, {}, raw.label, raw.seed};
    for (auto& p : raw.points) cfg.points.push_back({f.from_rational(p[0]), f.from_rational(p[1]), f.from_rational(p[2])});
    Scheme<F>::check_points(f, cfg.points);
    return cfg;
}

template <class F>
std::string config_json(const PointConfig<F>& cfg, const std::string& field) {
    std::vector<std::array<std::string, 3>> pts;
    for (auto& p : cfg.points) pts.push_back({cfg.field.str(p[0]), cfg.field.str(p[1]), cfg.field.str(p[2])});
    return config_json(field, pts, cfg.label, cfg.seed);
}

std::string betti_text(const BettiTable& b);
std::string betti_tsv(const BettiTable& b, long n);
std::string betti_json(const BettiTable& b, long n, const std::vector<std::pair<std::string, std::string>>& verdicts);

}  // namespace psh
