#pragma once

#include "psh/chern.hpp"
#include "psh/gaeta.hpp"
#include "psh/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace psh {

struct WallError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rational wall_center(const Ch& xi, const Ch& zeta);
Rational wall_center(const LogChern& xi, const LogChern& zeta);

inline Rational slope_from_center(const Rational& x) { return -x - Rational(3, 2); }

Rational coker_slope(const GradedShape& shape);

// Destabilizing object: a named character, possibly a power.
struct Destab {
    std::string name;  // "I_3(-1)", "T(-4)", "O(-3)"
    LogChern base;
    long power = 1;

    Ch ch() const { return base.ch() * Rational(power); }
    std::string str() const { return power == 1 ? name : name + "^" + std::to_string(power); }
};

Destab destab_line(long k, long power = 1);
Destab destab_tangent(long k, long power = 1);
Destab destab_ideal(long pts, long k);
Destab destab_log(const Rational& r, const Rational& mu, const Rational& delta);

struct InterpBundle {
    std::string name;                  // "E_{12/5}", "M_1", or empty when given by its resolution
    std::optional<GradedShape> shape;  // cokernel presentation, when it is a sum of line bundles
    Ch cls;

    Rational slope() const { return cls.c1 / cls.r; }
    std::string str() const;
};

struct SbldRow {
    std::string geometry;
    std::string betti;
    Destab destab;
    InterpBundle interp;
    std::vector<std::string> base_locus;
    Rational mu;
    bool dashed = false;  // same chamber as the previous row
};

struct WallEntry {
    Rational center;
    std::vector<Destab> destabs;
};

struct SbldTable {
    long n;
    std::vector<std::pair<std::string, GradedShape>> betti_tables;
    std::vector<SbldRow> rows;
    std::vector<WallEntry> walls;

    const GradedShape& betti(const std::string& id) const;
};

const std::vector<long>& supported_sbld();

// Rows and wall lists, every invariant recomputed; throws WallError on any mismatch.
SbldTable sbld_table(long n);

struct RowCheck {
    Rational chi;           // chi(V (x) I_n)
    Rational coker_mu;      // slope of the interpolating class
    Rational center;        // wall_center(I_n, destab)
    Rational center_mu;     // -center - 3/2
};

RowCheck check_row(long n, const SbldRow& row);

DivisorClass eff_extremal(long n, int depth_cap = 64);
// the destabilizing class used for the effective edge
Ch eff_destabilizer(long n, int depth_cap = 64);

DivisorClass movable_extremal(long n);
// closed forms, valid for d >= 2
Rational tri_movable_slope(long d);
Rational tan_movable_slope(long d);

std::pair<Rational, Rational> tangential_curve_numbers(long d);

std::string sbld_text(const SbldTable& t);
std::string sbld_tsv(const SbldTable& t);
std::string sbld_json(const SbldTable& t);
std::string walls_text(const SbldTable& t);
std::string walls_tsv(const SbldTable& t);
std::string walls_json(const SbldTable& t);

}  // namespace psh
