#include "psh/acceptance.hpp"
#include "psh/interp.hpp"
#include "psh/points_io.hpp"
#include "psh/walls.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace psh;
using nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Settings {
    std::string output = "text";
    std::optional<std::uint64_t> prime;
    std::uint64_t seed = 0;
    int depth_cap = 64;
    bool rational = false;
};

struct Report {
    std::string text, tsv;
    ordered_json json;
};

ordered_json qj(const Rational& q) { return to_str(q); }

ordered_json terms_json(const std::vector<Term>& v) {
    ordered_json a = ordered_json::array();
    for (auto& t : v) a.push_back({{"twist", t.twist}, {"mult", t.mult}});
    return a;
}

ordered_json shape_json(const GradedShape& s) {
    return {{"sources", terms_json(s.sources)}, {"targets", terms_json(s.targets)}, {"str", s.str()}};
}

std::string shape_tsv_rows(const std::string& label, const GradedShape& s) {
    std::ostringstream os;
    for (auto& t : s.sources) os << label << "\tsource\t" << t.twist << "\t" << t.mult << "\n";
    for (auto& t : s.targets) os << label << "\ttarget\t" << t.twist << "\t" << t.mult << "\n";
    return os.str();
}

long need_n(const std::optional<long>& n, long lo = 1) {
    if (!n) throw UsageError("--n is required");
    if (*n < lo) throw UsageError("--n must be at least " + std::to_string(lo));
    return *n;
}

// ---------------------------------------------------------------------------
// numerical subcommands

Report cmd_char(std::optional<long> n, std::optional<std::string> slope, const Settings& s) {
    LogChern xi;
    std::string name;
    if (slope) {
        Rational q = parse_rational(*slope);
        if (!is_exceptional_slope(q, s.depth_cap)) throw ExceptionalError(*slope + " is not an exceptional slope");
        xi = exceptional_char(q);
        name = bundle_name(q);
    } else {
        long k = need_n(n, 0);
        xi = ideal_points(k);
        name = "I_" + std::to_string(k);
    }
    Ch c = xi.ch();
    Rational chi = euler(c);
    Report r;
    r.text = name + ": r = " + to_str(xi.r) + ", mu = " + to_str(xi.mu) + ", Delta = " + to_str(xi.delta) + "; ch = (" + to_str(c.r) +
             ", " + to_str(c.c1) + ", " + to_str(c.ch2) + "); chi = " + to_str(chi) + "\n";
    r.tsv = "name\tr\tmu\tdelta\tch1\tch2\tchi\n" + name + "\t" + to_str(xi.r) + "\t" + to_str(xi.mu) + "\t" + to_str(xi.delta) + "\t" +
            to_str(c.c1) + "\t" + to_str(c.ch2) + "\t" + to_str(chi) + "\n";
    r.json = {{"name", name}, {"r", qj(xi.r)}, {"mu", qj(xi.mu)}, {"delta", qj(xi.delta)}, {"ch1", qj(c.c1)}, {"ch2", qj(c.ch2)}, {"chi", qj(chi)}};
    return r;
}

Report cmd_controlling(long n, const Settings& s) {
    ExcSlope e = controlling(ideal_points(n), s.depth_cap);
    Report r;
    r.text = e.str() + "\n";
    r.tsv = "n\tslope\trank\tdelta\talpha\tbeta\n" + std::to_string(n) + "\t" + to_str(e.slope) + "\t" + e.rank.get_str() + "\t" +
            to_str(e.delta) + "\t" + (e.parents ? to_str(e.parents->first) : "") + "\t" + (e.parents ? to_str(e.parents->second) : "") + "\n";
    r.json = {{"n", n}, {"slope", qj(e.slope)}, {"rank", e.rank.get_str()}, {"delta", qj(e.delta)}};
    r.json["parents"] = e.parents ? ordered_json::array({qj(e.parents->first), qj(e.parents->second)}) : ordered_json(nullptr);
    return r;
}

Report cmd_gaeta(long n) {
    GaetaExponents g = gaeta_exponents(n);
    Report r;
    r.text = g.shape.str() + "\n";
    r.tsv = "n\tside\ttwist\tmult\n" + shape_tsv_rows(std::to_string(n), g.shape);
    r.json = {{"n", n}, {"d", g.d}, {"n1", g.n1}, {"n2", g.n2}, {"n3", g.n3}};
    r.json["shape"] = shape_json(g.shape);
    return r;
}

ordered_json exc_terms_json(const std::vector<ExcTerm>& v) {
    ordered_json a = ordered_json::array();
    for (auto& t : v) a.push_back({{"slope", qj(t.slope)}, {"mult", t.mult.get_str()}, {"name", bundle_name(t.slope)}});
    return a;
}

Report cmd_gengaeta(long n, const Settings& s) {
    GenGaeta g = generalized_gaeta(ideal_points(n), s.depth_cap);
    Report r;
    r.text = g.str() + "\n" + "sign " + sign_str(g.sign) + ", controlling " + g.control.str() + ", (alpha, beta) = (" + to_str(g.alpha) + ", " +
             to_str(g.beta) + "), (m1, m2, m3) = (" + g.m1.get_str() + ", " + g.m2.get_str() + ", " + g.m3.get_str() + ")\n";
    std::ostringstream tsv;
    tsv << "n\tside\tbundle\tslope\tmult\n";
    for (auto& t : g.sources) tsv << n << "\tsource\t" << bundle_name(t.slope) << "\t" << to_str(t.slope) << "\t" << t.mult.get_str() << "\n";
    for (auto& t : g.targets) tsv << n << "\ttarget\t" << bundle_name(t.slope) << "\t" << to_str(t.slope) << "\t" << t.mult.get_str() << "\n";
    r.tsv = tsv.str();
    r.json = {{"n", n},
              {"sign", sign_str(g.sign)},
              {"controlling", qj(g.control.slope)},
              {"alpha", qj(g.alpha)},
              {"beta", qj(g.beta)},
              {"m", {g.m1.get_str(), g.m2.get_str(), g.m3.get_str()}},
              {"sources", exc_terms_json(g.sources)},
              {"targets", exc_terms_json(g.targets)},
              {"str", g.str()}};
    return r;
}

Report cmd_blocks(long n, const Settings& s) {
    ConeBlocks b = mapping_cone_blocks(ideal_points(n), s.depth_cap);
    Report r;
    r.text = "F: " + b.f.str() + "\nW: " + b.w.str() + "\ntotal: " + b.total.str() + "\n";
    r.tsv = "block\tside\ttwist\tmult\n" + shape_tsv_rows("F", b.f) + shape_tsv_rows("W", b.w);
    r.json = {{"n", n}, {"F", shape_json(b.f)}, {"W", shape_json(b.w)}, {"total", shape_json(b.total)}};
    return r;
}

Report cmd_walls(long n, bool sbld) {
    SbldTable t = sbld_table(n);
    Report r;
    if (sbld) {
        r.text = sbld_text(t);
        r.tsv = sbld_tsv(t);
        r.json = ordered_json::parse(sbld_json(t));
    } else {
        r.text = walls_text(t);
        r.tsv = walls_tsv(t);
        r.json = ordered_json::parse(walls_json(t));
    }
    return r;
}

Report cmd_mov(long n, const Settings& s) {
    DivisorClass eff = eff_extremal(n, s.depth_cap);
    PureClass p = classify_pure(n);
    Report r;
    r.text = "Eff: " + eff.str() + "\n";
    r.json = {{"n", n}, {"eff", {{"mu", qj(eff.slope())}, {"str", eff.str()}}}, {"purity", purity_str(p)}};
    std::string mov_str;
    if (p.kind == Purity::not_pure) {
        r.text += "Mov: not computed (" + std::to_string(n) + " is neither triangular nor tangential)\n";
        r.json["mov"] = nullptr;
    } else {
        DivisorClass mov = movable_extremal(n);
        mov_str = to_str(mov.slope());
        r.text += "Mov: " + mov.str() + "  (" + purity_str(p) + ")\n";
        r.json["mov"] = {{"mu", qj(mov.slope())}, {"str", mov.str()}};
    }
    r.tsv = "n\teff_mu\tmov_mu\tpurity\n" + std::to_string(n) + "\t" + to_str(eff.slope()) + "\t" + mov_str + "\t" + purity_str(p) + "\n";
    return r;
}

// ---------------------------------------------------------------------------
// point configurations

struct SchemeSource {
    std::optional<std::string> config;
    std::optional<long> n;
    std::string spec = "general";
    bool divisorial = false;
    std::optional<std::string> shape;
};

template <class F>
Scheme<F> make_scheme(const F& f, const SchemeSource& src, const Settings& s, const std::optional<RawConfig>& raw) {
    if (raw) return Scheme<F>::from_points(realize(*raw, f));
    Rng rng(s.seed);
    if (src.shape) return scheme_from_hilbert_burch(hilbert_burch_matrix(f, parse_shape(*src.shape), rng), *src.shape);
    long n = need_n(src.n);
    if (src.divisorial) return scheme_from_hilbert_burch(hilbert_burch_matrix(f, divisorial_betti(n), rng), "D_Betti");
    return Scheme<F>::from_points(generate_config(f, parse_gen_spec(src.spec), n, s.seed));
}

template <class F>
std::string field_note(const F& f) {
    if constexpr (std::is_same_v<F, PrimeField>)
        return "over " + f.name() + ": a random instance; equalities certify the general member with high probability";
    else
        return "over Q: exact";
}

template <class F>
std::vector<Detection<F>> run_detectors(const Scheme<F>& z, const BettiTable& b, const std::vector<std::string>& only) {
    std::vector<std::string> ids = only.empty() ? applicable_detectors(z.length(), b.shape()) : only;
    std::vector<Detection<F>> out;
    if (ids.empty()) return out;
    PolyMatrix<F> pm = syzygy_matrix(z);
    for (auto& id : ids) out.push_back(detect_admissible(pm, id));
    return out;
}

template <class F>
Report cmd_betti(const F& f, const SchemeSource& src, const Settings& s, const std::optional<RawConfig>& raw) {
    Scheme<F> z = make_scheme(f, src, s, raw);
    BettiTable b = betti_table(z);
    auto dets = run_detectors(z, b, {});
    std::vector<std::pair<std::string, std::string>> v;
    for (auto& d : dets) v.push_back({d.detector, d.verdict});
    std::string table;
    auto& sup = supported_sbld();
    if (std::find(sup.begin(), sup.end(), z.length()) != sup.end())
        for (auto& [id, shape] : sbld_table(z.length()).betti_tables)
            if (shape == b.shape()) table = id;
    Report r;
    r.text = "n = " + std::to_string(z.length()) + (table.empty() ? "" : ", table " + table) + "\n" + betti_text(b);
    for (auto& [id, verdict] : v) r.text += id + ": " + verdict + "\n";
    r.text += "(" + field_note(f) + ")\n";
    r.tsv = betti_tsv(b, z.length());
    for (auto& [id, verdict] : v) r.tsv += std::to_string(z.length()) + "\tdetector\t" + id + "\t" + verdict + "\n";
    r.json = ordered_json::parse(betti_json(b, z.length(), v));
    r.json["field"] = f.name();
    r.json["table"] = table.empty() ? ordered_json(nullptr) : ordered_json(table);
    return r;
}

template <class F>
ordered_json matrix_json(const PolyMatrix<F>& pm) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < pm.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < pm.cols(); ++j) row.push_back(pm.at(i, j).str());
        rows.push_back(row);
    }
    return {{"row_degrees", pm.row_twists()}, {"col_degrees", pm.col_twists()}, {"entries", rows}};
}

template <class F>
Report cmd_syzygy(const F& f, const SchemeSource& src, const Settings& s, const std::optional<RawConfig>& raw) {
    Scheme<F> z = make_scheme(f, src, s, raw);
    PolyMatrix<F> pm = syzygy_matrix(z);
    Report r;
    std::ostringstream t, tsv;
    t << "generators (rows) of degrees";
    for (int d : pm.row_twists()) t << " " << d;
    t << "; syzygies (columns) of degrees";
    for (int d : pm.col_twists()) t << " " << d;
    t << "\n" << pm.str();
    r.text = t.str();
    tsv << "row\tcol\trow_degree\tcol_degree\tentry\n";
    for (std::size_t i = 0; i < pm.rows(); ++i)
        for (std::size_t j = 0; j < pm.cols(); ++j)
            tsv << i << "\t" << j << "\t" << pm.row_twists()[i] << "\t" << pm.col_twists()[j] << "\t" << pm.at(i, j).str() << "\n";
    r.tsv = tsv.str();
    r.json = matrix_json(pm);
    r.json["n"] = z.length();
    return r;
}

template <class F>
Report cmd_detect(const F& f, const SchemeSource& src, const Settings& s, const std::optional<RawConfig>& raw,
                  const std::vector<std::string>& ids, const std::optional<std::string>& sub) {
    Scheme<F> z = make_scheme(f, src, s, raw);
    BettiTable b = betti_table(z);
    Report r;
    r.text = "n = " + std::to_string(z.length()) + ", Betti table " + b.str() + "\n";
    r.tsv = "detector\tverdict\trank\n";
    r.json = {{"n", z.length()}, {"betti", b.str()}};
    ordered_json dj = ordered_json::array();
    for (auto& d : run_detectors(z, b, ids)) {
        r.text += d.detector + ": " + d.verdict + " (block rank " + std::to_string(d.rank) + ")\n";
        r.tsv += d.detector + "\t" + d.verdict + "\t" + std::to_string(d.rank) + "\n";
        ordered_json w = ordered_json::array();
        for (std::size_t i = 0; i < d.witness.rows(); ++i) {
            ordered_json row = ordered_json::array();
            for (std::size_t j = 0; j < d.witness.cols(); ++j) row.push_back(f.str(d.witness(i, j)));
            w.push_back(row);
        }
        dj.push_back({{"detector", d.detector}, {"verdict", d.verdict}, {"special", d.special}, {"rank", d.rank}, {"witness", w}});
    }
    r.json["detectors"] = dj;
    if (sub) {
        GradedShape want = parse_shape(*sub);
        auto hit = zero_block_search(syzygy_matrix(z), want);
        std::string verdict = hit ? "zero block found" : "no literal zero block (search is incomplete up to row/column reduction)";
        r.text += "subcomplex " + want.str() + ": " + verdict + "\n";
        r.tsv += "zero-block " + want.str() + "\t" + verdict + "\t\n";
        r.json["zero_block"] = {{"shape", want.str()}, {"found", hit.has_value()}};
        if (hit) r.json["zero_block"]["rows"] = hit->first, r.json["zero_block"]["cols"] = hit->second;
    }
    if (r.json["detectors"].empty() && !sub) r.text += "no detector applies to this Betti table\n";
    return r;
}

// ---------------------------------------------------------------------------
// interpolation

struct InterpArgs {
    std::string kind;
    long d = 2;
    long k = 1;
    bool structured = false;
    std::optional<std::string> bundle;
};

template <class F>
Report cmd_interp(const F& f, const InterpArgs& a, const SchemeSource& src, const Settings& s, const std::optional<RawConfig>& raw) {
    Rng rng(s.seed);
    Report r;
    auto finish = [&](const std::string& what, const std::string& value, const std::string& extra) {
        r.text = what + ": " + value + "\n" + extra + "(" + field_note(f) + ")\n";
        r.tsv = "quantity\tvalue\n" + what + "\t" + value + "\n";
        r.json = {{"quantity", what}, {"value", value}, {"field", f.name()}};
    };
    if (a.kind == "tangent") {
        Scheme<F> z = raw || src.n || src.shape ? make_scheme(f, src, s, raw)
                                                 : scheme_from_hilbert_burch(hilbert_burch_matrix(f, qk_shape(a.d, a.k), rng));
        long c = tangent_section_count(z, static_cast<int>(a.d), s.seed);
        finish("h0(T(" + std::to_string(2 * a.d - 2) + ") (x) I_Z), n = " + std::to_string(z.length()), std::to_string(c), "");
        return r;
    }
    if (a.kind == "gamma") {
        Scheme<F> z = scheme_from_hilbert_burch(hilbert_burch_matrix(f, gamma_shape(a.d), rng));
        long h = z.ideal_dim(static_cast<int>(4 * a.d - 4));
        finish("h0(I_Gamma(" + std::to_string(4 * a.d - 4) + ")), length " + std::to_string(z.length()), std::to_string(h), "");
        return r;
    }
    std::optional<CokerBundle<F>> m;
    std::optional<Scheme<F>> z;
    if (a.kind == "tangential") {
        m = tangential_interp(f, a.d, a.k, rng, a.structured);
        z = scheme_from_hilbert_burch(hilbert_burch_matrix(f, qk_shape(a.d, 1), rng));
    } else if (a.kind == "triangular") {
        m = triangular_interp(f, a.d, a.k, rng);
        z = scheme_from_hilbert_burch(hilbert_burch_matrix(f, divisorial_betti(a.d * (a.d + 1) / 2), rng));
    } else if (a.kind == "bundle") {
        if (!a.bundle) throw UsageError("--kind bundle needs --bundle 'sources -> targets'");
        m = CokerBundle<F>::random(f, parse_shape(*a.bundle), rng, "M");
        z = make_scheme(f, src, s, raw);
    } else {
        throw UsageError("--kind must be tangential, triangular, tangent, gamma or bundle");
    }
    OrthoVerdict v = check_orthogonal(*m, *z, s.seed);
    std::string extra = "M = coker(" + m->shape().str() + "), rank " + std::to_string(m->rank()) + ", slope " + to_str(m->cls().c1 / m->cls().r) +
                        "; Z of length " + std::to_string(z->length()) + "; chi(M (x) I_Z) = " + to_str(v.chi) + ", h0 = " +
                        std::to_string(v.h0) + "\n";
    finish("orthogonality", v.str(), extra);
    r.json["chi"] = qj(v.chi);
    r.json["h0"] = v.h0;
    r.json["bundle"] = m->shape().str();
    r.json["length"] = z->length();
    return r;
}

// ---------------------------------------------------------------------------

void emit(const Report& r, const Settings& s) {
    if (s.output == "json")
        std::cout << r.json.dump(2) << "\n";
    else if (s.output == "tsv")
        std::cout << r.tsv;
    else
        std::cout << r.text;
}

std::string module_of(const std::exception& e) {
    if (dynamic_cast<const ChernError*>(&e)) return "chern";
    if (dynamic_cast<const ExceptionalError*>(&e)) return "exceptional";
    if (dynamic_cast<const GaetaError*>(&e)) return "gaeta";
    if (dynamic_cast<const WallError*>(&e)) return "walls";
    if (dynamic_cast<const PointsError*>(&e)) return "points";
    if (dynamic_cast<const InterpError*>(&e)) return "interp";
    return "psh";
}

void load_settings(const std::string& path, Settings& s) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open settings file " + path);
    ordered_json j;
    try {
        j = ordered_json::parse(in);
    } catch (const std::exception& e) {
        throw UsageError("settings file is not valid JSON: " + std::string(e.what()));
    }
    if (j.contains("prime")) s.prime = j["prime"].get<std::uint64_t>();
    if (j.contains("seed")) s.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("output")) s.output = j["output"].get<std::string>();
    if (j.contains("depth_cap")) s.depth_cap = j["depth_cap"].get<int>();
}

std::uint64_t env_u64(const char* name) {
    const char* v = std::getenv(name);
    try {
        std::size_t pos = 0;
        unsigned long long x = std::stoull(v, &pos);
        if (pos != std::string(v).size()) throw std::invalid_argument(name);
        return x;
    } catch (const std::exception&) {
        throw UsageError(std::string(name) + " must be a nonnegative integer");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invariants of moduli of sheaves on the projective plane: Chern characters, exceptional bundles, Gaeta resolutions, walls, "
                 "and checks on explicit point configurations."};
    app.require_subcommand(1);
    app.fallthrough();

    Settings s;
    std::string settings_file, output;
    std::optional<std::uint64_t> prime_flag, seed_flag;
    std::optional<int> depth_flag;
    app.add_option("--settings", settings_file, "JSON settings file with keys prime, seed, output, depth_cap");
    app.add_option("-o,--output", output, "output format")->check(CLI::IsMember({"text", "tsv", "json"}));
    app.add_option("--prime", prime_flag, "prime for finite-field computations (default 2147483647; env PSH_PRIME)");
    app.add_option("--seed", seed_flag, "random seed (default 0; env PSH_SEED)");
    app.add_option("--depth-cap", depth_flag, "depth cap for the controlling-exceptional search (default 64)");
    app.add_flag("--rational", s.rational, "compute over Q instead of a prime field");

    std::optional<long> n;
    std::optional<std::string> slope;
    auto* c_char = app.add_subcommand("char", "log Chern character of I_n or of an exceptional bundle");
    c_char->add_option("--n", n, "number of points");
    c_char->add_option("--slope", slope, "exceptional slope, e.g. 12/5");

    auto add_n = [&](CLI::App* c) { c->add_option("--n", n, "number of points")->required(); };
    auto* c_ctrl = app.add_subcommand("controlling", "controlling exceptional slope of I_n");
    add_n(c_ctrl);
    auto* c_gaeta = app.add_subcommand("gaeta", "Gaeta resolution of I_n");
    add_n(c_gaeta);
    auto* c_gg = app.add_subcommand("gengaeta", "generalized Gaeta resolution of I_n");
    add_n(c_gg);
    auto* c_blocks = app.add_subcommand("blocks", "mapping-cone blocks F and W of I_n");
    add_n(c_blocks);
    auto* c_walls = app.add_subcommand("walls", "walls of the stable base locus decomposition");
    add_n(c_walls);
    auto* c_sbld = app.add_subcommand("sbld", "stable base locus decomposition table");
    add_n(c_sbld);
    auto* c_mov = app.add_subcommand("mov", "effective and movable cone edges");
    add_n(c_mov);

    SchemeSource src;
    auto add_src = [&](CLI::App* c) {
        c->add_option("--config", src.config, "point-configuration JSON file");
        c->add_option("--n", src.n, "number of points to generate");
        c->add_option("--spec", src.spec, "general | collinear:k | conic:k | cubic:k");
        c->add_flag("--divisorial", src.divisorial, "general scheme with the divisorial Betti table (Hilbert-Burch)");
        c->add_option("--shape", src.shape, "general scheme with this Betti table, e.g. 'O(-6)^2+O(-5) -> O(-5)+O(-4)^3'");
    };
    auto* c_betti = app.add_subcommand("betti", "Betti table of a point configuration");
    add_src(c_betti);
    auto* c_syz = app.add_subcommand("syzygy", "minimal syzygy matrix of a point configuration");
    add_src(c_syz);
    std::vector<std::string> det_ids;
    std::optional<std::string> subcomplex;
    auto* c_det = app.add_subcommand("detect", "admissibility detectors");
    add_src(c_det);
    c_det->add_option("--detector", det_ids, "detector id (default: every applicable one)")->check(CLI::IsMember(detector_ids()));
    c_det->add_option("--subcomplex", subcomplex, "also search for a literal zero block with this shape");

    InterpArgs ia;
    auto* c_interp = app.add_subcommand("interp", "cohomological orthogonality and section counts");
    c_interp->add_option("--kind", ia.kind, "tangential | triangular | tangent | gamma | bundle")->required();
    c_interp->add_option("--d", ia.d, "d (n = 2d(d+1) tangential, d(d+1)/2 triangular)");
    c_interp->add_option("--k", ia.k, "multiplicity k");
    c_interp->add_flag("--structured", ia.structured, "structured tangential presentation (k = 1, d <= 5)");
    c_interp->add_option("--bundle", ia.bundle, "with --kind bundle: presentation 'sources -> targets' of M");
    add_src(c_interp);

    bool no_stretch = false;
    auto* c_self = app.add_subcommand("selftest", "run the acceptance suite");
    c_self->add_flag("--no-stretch", no_stretch, "skip the n=40 stretch instance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!settings_file.empty()) load_settings(settings_file, s);
        if (std::getenv("PSH_PRIME")) s.prime = env_u64("PSH_PRIME");
        if (std::getenv("PSH_SEED")) s.seed = env_u64("PSH_SEED");
        if (prime_flag) s.prime = prime_flag;
        if (seed_flag) s.seed = *seed_flag;
        if (depth_flag) s.depth_cap = *depth_flag;
        if (!output.empty()) s.output = output;
        if (s.output != "text" && s.output != "tsv" && s.output != "json") throw UsageError("output must be text, tsv or json");
        if (s.depth_cap < 1) throw UsageError("depth cap must be positive");
        std::optional<PrimeField> pf;
        try {
            pf = PrimeField(s.prime.value_or(PrimeField::default_prime));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }

        auto* sub = app.get_subcommands().front();
        std::string name = sub->get_name();
        if (name == "char") return emit(cmd_char(n, slope, s), s), 0;
        if (name == "controlling") return emit(cmd_controlling(need_n(n), s), s), 0;
        if (name == "gaeta") return emit(cmd_gaeta(need_n(n)), s), 0;
        if (name == "gengaeta") return emit(cmd_gengaeta(need_n(n), s), s), 0;
        if (name == "blocks") return emit(cmd_blocks(need_n(n), s), s), 0;
        if (name == "walls" || name == "sbld") return emit(cmd_walls(need_n(n), name == "sbld"), s), 0;
        if (name == "mov") return emit(cmd_mov(need_n(n, 2), s), s), 0;
        if (name == "selftest") {
            AcceptanceOptions opt;
            opt.stretch = !no_stretch;
            auto res = run_acceptance(std::cout, opt);
            for (auto& r : res)
                if (!r.pass) return 1;
            return 0;
        }

        // point-configuration commands: rational configs stay exact unless a prime is forced
        std::optional<RawConfig> raw;
        if (src.config) raw = read_config_file(*src.config);
        bool use_q = s.rational || (raw && !raw->prime && !raw->gen && !s.prime);
        if (raw && raw->prime && !s.prime) pf = PrimeField(*raw->prime);
        if (raw && raw->gen) raw->seed = seed_flag ? *seed_flag : raw->seed;
        auto dispatch = [&](auto&& fn) -> Report {
            if (use_q) return fn(QField{});
            return fn(*pf);
        };
        Report r;
        if (name == "betti") r = dispatch([&](const auto& f) { return cmd_betti(f, src, s, raw); });
        else if (name == "syzygy") r = dispatch([&](const auto& f) { return cmd_syzygy(f, src, s, raw); });
        else if (name == "detect") r = dispatch([&](const auto& f) { return cmd_detect(f, src, s, raw, det_ids, subcomplex); });
        else if (name == "interp") r = dispatch([&](const auto& f) { return cmd_interp(f, ia, src, s, raw); });
        emit(r, s);
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error [" << module_of(e) << "]: " << e.what() << "\n";
        return 1;
    }
}
