#include "qclif/chern.hpp"
#include "qclif/clifford.hpp"
#include "qclif/errors.hpp"
#include "qclif/net.hpp"
#include "qclif/net_io.hpp"
#include "qclif/power_series.hpp"
#include "qclif/rational.hpp"

#include "poly_expr.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <random>
#include <sstream>

namespace qclif::cli {

using json = nlohmann::ordered_json;

// Every subcommand produces one report: free-form text lines for humans and
// a stable-field JSON document for scripts.
struct Report {
    std::string command;
    json inputs = json::object();
    json results = json::object();
    std::vector<std::string> warnings;
    std::vector<std::string> text;

    void print(bool structured) const {
        if (structured) {
            json doc;
            doc["command"] = command;
            doc["inputs"] = inputs;
            doc["results"] = results;
            doc["warnings"] = warnings;
            std::cout << doc.dump(2) << "\n";
            return;
        }
        for (const auto& line : text) std::cout << line << "\n";
        for (const auto& warning : warnings) std::cout << "warning: " << warning << "\n";
    }
};

struct Options {
    std::string format = "text";
    uint64_t seed = 12345;
    bool structured() const { return format == "structured"; }
};

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string current;
    for (char c : text) {
        if (c == ',' || c == ';') {
            out.push_back(current);
            current.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            current += c;
        }
    }
    out.push_back(current);
    return out;
}

std::vector<Scalar> parse_scalar_list(const std::string& text, const Field& field) {
    std::vector<Scalar> out;
    for (const std::string& item : split_list(text)) {
        if (item.empty()) throw InputError("empty entry in list: " + text);
        out.push_back(Scalar::of(field, parse_rational(item)));
    }
    return out;
}

QuadForm parse_form(const std::string& diag, const std::string& gram, const Field& field) {
    if (!diag.empty() && !gram.empty()) throw InputError("give either --diag or --gram, not both");
    if (!diag.empty()) return QuadForm::diagonal(parse_scalar_list(diag, field));
    if (gram.empty()) throw InputError("a form is required: --diag or --gram");
    std::vector<std::vector<Scalar>> rows;
    std::stringstream ss(gram);
    std::string row;
    while (std::getline(ss, row, ';')) rows.push_back(parse_scalar_list(row, field));
    Matrix m = Matrix::from_rows(rows);
    try {
        return QuadForm(std::move(m));
    } catch (const DomainError& e) {
        throw InputError(e.what());
    }
}

json series_to_json(const PowerSeries& s) {
    json out = json::array();
    for (int i = 0; i < s.order(); ++i) out.push_back(rational_to_string(s.coeff(i)));
    return out;
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

NetOfQuadrics load_net(const std::string& path, const std::string& field_override,
                       Report& report) {
    NetOfQuadrics net = load_net_file(path);
    if (!field_override.empty()) {
        Field requested = parse_field_name(field_override);
        if (requested == net.field()) {
            // nothing to do
        } else if (net.field() == Field::rationals() && requested.is_finite()) {
            net = reduce_net_mod_p(net, requested.characteristic());
            report.warnings.push_back("net over Q reduced mod " +
                                      std::to_string(requested.characteristic()));
        } else {
            throw InputError("--field " + field_override + " incompatible with net over " +
                             net.field().to_string());
        }
    }
    report.inputs["field"] = net.field().to_string();
    report.inputs["net"] = json::parse(net_to_document(net))["net"];
    return net;
}

std::array<Scalar, 3> parse_plane_point(const std::string& text, const Field& field) {
    std::vector<Scalar> v = parse_scalar_list(text, field);
    if (v.size() != 3) throw InputError("a plane point needs 3 coordinates");
    return {v[0], v[1], v[2]};
}

// ---- subcommand handlers ----

Report run_hilbert(const std::string& num, const std::string& den, int order) {
    Report report;
    report.command = "hilbert";
    report.inputs = {{"num", num}, {"den", den}, {"order", order}};
    PowerSeries s = expand_rational_series(parse_poly_expr(num), parse_poly_expr(den), order);
    report.results["coefficients"] = series_to_json(s);
    report.text.push_back("coefficients: " + s.to_string());
    return report;
}

Report run_veronese(const std::string& num, const std::string& den, const std::string& coeffs,
                    int order) {
    Report report;
    report.command = "veronese";
    PowerSeries input = [&]() {
        if (!coeffs.empty()) {
            report.inputs = {{"coeffs", coeffs}};
            std::vector<mpq_class> c;
            for (const std::string& item : split_list(coeffs)) c.push_back(parse_rational(item));
            return PowerSeries(std::move(c));
        }
        if (num.empty() || den.empty())
            throw InputError("veronese needs --coeffs or --num/--den");
        report.inputs = {{"num", num}, {"den", den}, {"order", order}};
        return expand_rational_series(parse_poly_expr(num), parse_poly_expr(den), order);
    }();
    PowerSeries v = even_veronese(input);
    report.results["coefficients"] = series_to_json(v);
    report.text.push_back("coefficients: " + v.to_string());
    return report;
}

Report run_net_analyze(const std::string& path, const std::string& field_override,
                       const Options& options) {
    Report report;
    report.command = "net analyze";
    NetOfQuadrics net = load_net(path, field_override, report);

    MultiPoly disc = discriminant(net);
    report.results["discriminant"] = disc.to_string();
    report.text.push_back("discriminant: " + disc.to_string());

    // Spot check: the discriminant evaluated at a few points must match the
    // determinant of the fiber computed independently.
    std::mt19937_64 rng(options.seed);
    for (int check = 0; check < 5; ++check) {
        std::array<Scalar, 3> a = {
            Scalar::of(net.field(), static_cast<long>(rng() % 19) - 9),
            Scalar::of(net.field(), static_cast<long>(rng() % 19) - 9),
            Scalar::of(net.field(), static_cast<long>(rng() % 19) - 9)};
        if (a[0].is_zero() && a[1].is_zero() && a[2].is_zero()) continue;
        if (evaluate_poly(disc, a) != net.gram_at(a).det())
            throw DomainError("internal discriminant check failed");
    }

    if (net.field().is_finite()) {
        if (disc.is_zero()) {
            report.results["probe"] = nullptr;
            report.warnings.push_back("discriminant is identically zero; probe skipped");
        } else {
            SmoothnessVerdict verdict = smoothness_probe(disc);
            json probe;
            probe["singular_point_found"] = verdict.singular_point_found;
            probe["fields_tested"] = verdict.fields_tested;
            if (verdict.singular_point_found) {
                probe["witness"] = verdict.witness;
                probe["witness_field"] = verdict.witness_field;
                report.text.push_back("smoothness probe: singular witness " + verdict.witness +
                                      " over " + verdict.witness_field);
            } else {
                report.text.push_back("smoothness probe: no singular point over " +
                                      verdict.fields_tested);
            }
            report.results["probe"] = probe;
            report.warnings.push_back(verdict.disclaimer());
        }

        std::vector<BasePoint> points = find_base_points(net);
        json base_points = json::array();
        for (const BasePoint& x : points) {
            json coords = json::array();
            for (const Scalar& c : x.coords()) coords.push_back(c.to_string());
            base_points.push_back(std::move(coords));
        }
        report.results["base_points"] = base_points;
        report.text.push_back("base points: " + std::to_string(points.size()));
        for (const BasePoint& x : points) {
            std::string line = "  (";
            for (size_t i = 0; i < x.coords().size(); ++i)
                line += (i ? ", " : "") + x.coords()[i].to_string();
            report.text.push_back(line + ")");
        }
    } else {
        report.warnings.push_back(
            "probe and base-point search need a finite field; pass --field GF(p)");
    }
    return report;
}

Report run_net_reduce(const std::string& path, const std::string& field_override,
                      const std::string& x_text, const std::string& a_text,
                      const Options& options) {
    Report report;
    report.command = "net reduce";
    NetOfQuadrics net = load_net(path, field_override, report);
    BasePoint x(parse_scalar_list(x_text, net.field()));
    std::array<Scalar, 3> a = parse_plane_point(a_text, net.field());
    report.inputs["x"] = x_text;
    report.inputs["a"] = a_text;

    QuadForm reduced = reduce_at_point(net, x, a);
    int r = rank(reduced);
    // Complement independence: randomized complements give the same rank.
    for (uint64_t delta = 0; delta < 3; ++delta)
        if (rank(reduce_at_point_randomized(net, x, a, options.seed + delta)) != r)
            throw DomainError("internal complement check failed");

    report.results["gram"] = matrix_to_json(reduced.gram());
    report.results["rank"] = r;
    report.text.push_back("reduced form (4x4):");
    report.text.push_back(reduced.gram().to_string());
    report.text.push_back("rank: " + std::to_string(r));
    return report;
}

Report run_net_profile(const std::string& path, const std::string& field_override,
                       const std::string& x_text) {
    Report report;
    report.command = "net profile";
    NetOfQuadrics net = load_net(path, field_override, report);
    BasePoint x(parse_scalar_list(x_text, net.field()));
    report.inputs["x"] = x_text;

    RankProfile profile = rank_profile(net, x);
    json rows = json::array();
    for (const auto& row : profile.rows) {
        json r;
        r["point"] = {row.point[0].to_string(), row.point[1].to_string(),
                      row.point[2].to_string()};
        r["on_curve"] = row.on_curve;
        r["fiber_rank"] = row.fiber_rank;
        if (row.vertex) r["vertex"] = true;
        else r["reduced_rank"] = *row.reduced_rank;
        rows.push_back(std::move(r));
    }
    report.results["rows"] = rows;
    json histogram = json::array();
    for (const auto& [key, count] : profile.histogram) {
        auto [on_curve, fiber_rank, reduced_rank] = key;
        json h;
        h["on_curve"] = on_curve;
        h["fiber_rank"] = fiber_rank;
        if (reduced_rank >= 0) h["reduced_rank"] = reduced_rank;
        else h["vertex"] = true;
        h["count"] = count;
        histogram.push_back(std::move(h));
    }
    report.results["histogram"] = histogram;
    report.results["off_curve_points"] = profile.off_curve_points;
    report.results["on_curve_points"] = profile.on_curve_points;
    report.results["vertex_fibers"] = profile.vertex_fibers;

    report.text.push_back("plane points: " + std::to_string(profile.rows.size()) + " (" +
                          std::to_string(profile.off_curve_points) + " off the discriminant, " +
                          std::to_string(profile.on_curve_points) + " on it, " +
                          std::to_string(profile.vertex_fibers) + " vertex fibers)");
    for (const auto& [key, count] : profile.histogram) {
        auto [on_curve, fiber_rank, reduced_rank] = key;
        std::string line = std::string("  ") + (on_curve ? "on  curve" : "off curve") +
                           ", fiber rank " + std::to_string(fiber_rank) + ", " +
                           (reduced_rank >= 0 ? "reduced rank " + std::to_string(reduced_rank)
                                              : std::string("vertex")) +
                           ": " + std::to_string(count);
        report.text.push_back(line);
    }
    return report;
}

Report run_clifford_build(const std::string& diag, const std::string& gram,
                          const std::string& field_name) {
    Report report;
    report.command = "clifford build";
    Field field = parse_field_name(field_name);
    QuadForm q = parse_form(diag, gram, field);
    report.inputs = {{"field", field.to_string()}, {"gram", matrix_to_json(q.gram())}};

    CliffordAlgebra cl = build_clifford(q);
    report.results["dimension"] = cl.algebra.dim();
    report.results["even_dimension"] = cl.algebra.dim() / 2;
    json diag_json = json::array();
    for (const Scalar& d : cl.diag) diag_json.push_back(d.to_string());
    report.results["diagonal"] = diag_json;
    report.results["form_rank"] = rank(q);
    report.text.push_back("dimension: " + std::to_string(cl.algebra.dim()));
    report.text.push_back("even part dimension: " + std::to_string(cl.algebra.dim() / 2));
    std::string ds = "diagonalized form: (";
    for (size_t i = 0; i < cl.diag.size(); ++i) ds += (i ? ", " : "") + cl.diag[i].to_string();
    report.text.push_back(ds + ")");
    return report;
}

Report run_clifford_report(const std::string& diag, const std::string& gram,
                           const std::string& field_name, bool even) {
    Report report;
    report.command = "clifford report";
    Field field = parse_field_name(field_name);
    QuadForm q = parse_form(diag, gram, field);
    report.inputs = {{"field", field.to_string()},
                     {"gram", matrix_to_json(q.gram())},
                     {"even", even}};

    CliffordAlgebra cl = build_clifford(q);
    SubAlgebraReport sub = even ? semisimplicity_report(even_subalgebra(cl).algebra)
                                : semisimplicity_report(cl.algebra);

    report.results["dimension"] = sub.dimension;
    report.results["center_dimension"] = sub.center_dimension;
    report.results["trace_form_rank"] = sub.trace_form_rank;
    report.results["semisimple"] = sub.semisimple;
    report.results["center_split"] = sub.center_split;
    json idems = json::array();
    for (const auto& e : sub.central_idempotents) idems.push_back(e.to_string());
    report.results["central_idempotents"] = idems;
    report.results["simple_factor_dims"] = sub.simple_factor_dims;
    if (sub.nilpotent_center_witness)
        report.results["nilpotent_center_witness"] = sub.nilpotent_center_witness->to_string();

    report.text.push_back("dimension: " + std::to_string(sub.dimension));
    report.text.push_back("center dimension: " + std::to_string(sub.center_dimension));
    report.text.push_back("trace form rank: " + std::to_string(sub.trace_form_rank));
    report.text.push_back(std::string("semisimple: ") + (sub.semisimple ? "yes" : "no"));
    if (!sub.simple_factor_dims.empty()) {
        std::string dims = "simple factor dimensions:";
        for (int d : sub.simple_factor_dims) dims += " " + std::to_string(d);
        report.text.push_back(dims);
    }
    if (sub.nilpotent_center_witness)
        report.text.push_back("nilpotent central element: " +
                              sub.nilpotent_center_witness->to_string());
    return report;
}

Report run_clifford_ideals(const std::string& diag, const std::string& gram,
                           const std::string& field_name) {
    Report report;
    report.command = "clifford ideals";
    Field field = parse_field_name(field_name);
    QuadForm q = parse_form(diag, gram, field);
    report.inputs = {{"field", field.to_string()}, {"gram", matrix_to_json(q.gram())}};

    IdealFamilyResult family = ideal_family_map(q);
    std::vector<Subspace> planes;
    for (const auto& entry : family.entries) planes.push_back(entry.plane);
    ComponentPartition classes = classify_components(planes, 2);

    report.results["planes"] = static_cast<int>(family.entries.size());
    report.results["center_dimension"] = family.center_dim;
    report.results["center_split"] = family.center_split;
    report.results["idempotents"] = static_cast<int>(family.idempotents.size());
    report.results["classes"] = static_cast<int>(classes.classes.size());
    json entries = json::array();
    for (const auto& entry : family.entries) {
        json e;
        e["plane"] = matrix_to_json(entry.plane.basis());
        e["ideal_dim"] = entry.ideal_dim;
        if (family.center_dim > 0 && entry.ideal_dim % family.center_dim == 0)
            e["rank_over_center"] = entry.ideal_dim / family.center_dim;
        if (entry.idempotent_index) e["idempotent"] = *entry.idempotent_index;
        entries.push_back(std::move(e));
    }
    report.results["entries"] = entries;

    report.text.push_back("isotropic planes: " + std::to_string(family.entries.size()));
    report.text.push_back("parity classes: " + std::to_string(classes.classes.size()));
    report.text.push_back("central idempotents found: " +
                          std::to_string(family.idempotents.size()));
    for (size_t i = 0; i < family.entries.size(); ++i) {
        const auto& entry = family.entries[i];
        std::string line =
            "  plane " + std::to_string(i) + ": ideal dim " + std::to_string(entry.ideal_dim);
        if (entry.idempotent_index)
            line += ", idempotent " + std::to_string(*entry.idempotent_index);
        report.text.push_back(line);
    }
    if (family.idempotents.size() < 2)
        report.warnings.push_back("no central-idempotent separation exists for this form");
    return report;
}

Report run_theta_count(int g, bool odd) {
    Report report;
    report.command = "theta count";
    report.inputs = {{"g", g}, {"odd", odd}};
    mpz_class count = odd ? odd_theta_count(g) : even_theta_count(g);
    report.results["count"] = count.get_str();
    report.text.push_back(std::string(odd ? "odd" : "even") +
                          " theta characteristics: " + count.get_str());
    return report;
}

Report run_chi_k3(long rho, long d, long c2, long n, bool simple) {
    Report report;
    report.command = "chern chi-k3";
    report.inputs = {{"rho", rho}, {"d", d}, {"c2", c2}, {"n", n}, {"simple", simple}};
    long chi = chi_twisted_k3({rho, 0, c2, d, true}, n);
    report.results["chi"] = chi;
    report.text.push_back("chi = " + std::to_string(chi));
    if (simple) {
        // Cohomology is not modeled; this table only unwinds h0 = h2 = 1
        // (simplicity plus the self-duality of the algebra) at n = 0.
        if (n != 0) {
            report.warnings.push_back("the h0/h1/h2 table applies at n = 0 only; ignored");
        } else {
            long h1 = 2 - chi;
            json table = {{"h0", 1}, {"h1", h1}, {"h2", 1},
                          {"note", "assumes simplicity + Serre duality"}};
            report.results["cohomology_table"] = table;
            report.text.push_back("h0 = 1, h1 = " + std::to_string(h1) +
                                  ", h2 = 1 (assumes simplicity + Serre duality)");
            if (h1 < 0)
                report.warnings.push_back(
                    "negative h1: the given Chern data is inconsistent with simplicity");
        }
    }
    return report;
}

Report run_chi_p2(long rank, long c1, const std::string& ch2) {
    Report report;
    report.command = "chern chi-p2";
    report.inputs = {{"rank", rank}, {"c1", c1}, {"ch2", ch2}};
    long chi = chi_bundle_p2({rank, c1, parse_rational(ch2)});
    report.results["chi"] = chi;
    report.text.push_back("chi = " + std::to_string(chi));
    return report;
}

Report run_even_clifford_chi() {
    Report report;
    report.command = "chern even-clifford";
    EvenCliffordChi breakdown = chi_even_clifford_p2();
    json components = json::array();
    for (const auto& c : breakdown.components) {
        components.push_back({{"name", c.name}, {"rank", c.rank}, {"chi", c.chi}});
        report.text.push_back("chi(" + c.name + ") = " + std::to_string(c.chi) + " (rank " +
                              std::to_string(c.rank) + ")");
    }
    report.results["components"] = components;
    report.results["rank_total"] = breakdown.rank_total;
    report.results["chi_total"] = breakdown.chi_total;
    report.results["derived_c2"] = breakdown.derived_c2;
    report.text.push_back("total chi = " + std::to_string(breakdown.chi_total));
    report.text.push_back("derived c2 = " + std::to_string(breakdown.derived_c2));
    return report;
}

Report run_elem_transform(long f0, long f1, long q0, long q1, long csq) {
    Report report;
    report.command = "chern elem-transform";
    report.inputs = {{"f0", f0}, {"f1", f1}, {"q0", q0}, {"q1", q1}, {"csq", csq}};
    ElemTransformData data{f0, f1, q0, q1, csq};
    long delta = delta_c2_elementary_transform(data);
    report.results["delta_c2"] = delta;
    report.text.push_back("delta c2 = " + std::to_string(delta));
    if (f0 == 1) {
        report.results["f0_one_form"] = delta_c2_f0_one_form(data);
        report.text.push_back("f0 = 1 expansion agrees: " +
                              std::to_string(delta_c2_f0_one_form(data)));
    }
    report.warnings.push_back(
        "the published delta formula is reported to carry a minor transcription error; the "
        "f0 = 1 expansion is cross-checked against it here");
    return report;
}

Report run_divisibility(long r, long c2a, long c2b) {
    Report report;
    report.command = "chern divisibility";
    report.inputs = {{"r", r}, {"c2a", c2a}, {"c2b", c2b}};
    bool ok = gerbe_divisibility_check(r, c2a, c2b);
    report.results["divisible"] = ok;
    report.text.push_back(std::string("2r | c2a - c2b: ") + (ok ? "yes" : "no"));
    return report;
}

Report run_minimality(long r, long c2, long bound) {
    Report report;
    report.command = "chern minimality";
    report.inputs = {{"r", r}, {"c2", c2}, {"bound", bound}};
    bool minimal = minimality_check(r, c2, bound);
    report.results["minimal"] = minimal;
    report.text.push_back(minimal ? "minimal: yes (c2 within 2r of the bound)"
                                  : "minimal: not decided by this criterion");
    return report;
}

Report run_bs_invariants(long chi_top, long chi_o, long c2) {
    Report report;
    report.command = "chern bs-invariants";
    report.inputs = {{"chi_top_m", chi_top}, {"chi_o_m", chi_o}, {"c2", c2}};
    BrauerSeveriInvariants inv = brauer_severi_invariants(chi_top, chi_o, c2);
    report.results["chi_top"] = inv.chi_top;
    report.results["chi_structure"] = inv.chi_structure;
    report.results["canonical_cube"] = inv.canonical_cube;
    report.text.push_back("chi_top = " + std::to_string(inv.chi_top));
    report.text.push_back("chi(O) = " + std::to_string(inv.chi_structure));
    report.text.push_back("K^3 = " + std::to_string(inv.canonical_cube));
    return report;
}

Report run_morita(int n) {
    Report report;
    report.command = "morita tensor";
    report.inputs = {{"n", n}};
    int dim = morita_tensor_dim(n);
    report.results["dimension"] = dim;
    report.text.push_back("balanced tensor dimension: " + std::to_string(dim));
    return report;
}

int run(int argc, char** argv) {
    CLI::App app{"exact computations for nets of quadrics, Clifford algebras, and K3 Chern data"};
    app.require_subcommand(1);

    Options options;
    app.add_option("--format", options.format, "output format")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();
    app.add_option("--seed", options.seed, "seed for randomized re-checks")->capture_default_str();

    Report report;

    // hilbert / veronese
    std::string num, den, coeffs;
    int order = 50;
    auto* hilbert = app.add_subcommand("hilbert", "expand num/den as a power series");
    hilbert->add_option("--num", num, "numerator polynomial in t")->required();
    hilbert->add_option("--den", den, "denominator polynomial in t")->required();
    hilbert->add_option("--order", order, "truncation order")->capture_default_str();
    hilbert->callback([&]() { report = run_hilbert(num, den, order); });

    auto* veronese = app.add_subcommand("veronese", "even Veronese of a series");
    veronese->add_option("--num", num, "numerator polynomial in t");
    veronese->add_option("--den", den, "denominator polynomial in t");
    veronese->add_option("--coeffs", coeffs, "explicit coefficient list");
    veronese->add_option("--order", order, "truncation order")->capture_default_str();
    veronese->callback([&]() { report = run_veronese(num, den, coeffs, order); });

    // net
    std::string net_file, field_override, x_text, a_text;
    auto* net = app.add_subcommand("net", "nets of quadrics");
    net->require_subcommand(1);
    auto* analyze = net->add_subcommand("analyze", "discriminant, probe, base points");
    analyze->add_option("--file", net_file, "net file")->required();
    analyze->add_option("--field", field_override, "field override, e.g. GF(3)");
    analyze->callback([&]() { report = run_net_analyze(net_file, field_override, options); });

    auto* reduce = net->add_subcommand("reduce", "project away from a base point");
    reduce->add_option("--file", net_file, "net file")->required();
    reduce->add_option("--field", field_override, "field override");
    reduce->add_option("--x", x_text, "base point, 6 coordinates")->required();
    reduce->add_option("--a", a_text, "plane point, 3 coordinates")->required();
    reduce->callback(
        [&]() { report = run_net_reduce(net_file, field_override, x_text, a_text, options); });

    auto* profile = net->add_subcommand("profile", "rank profile over all plane points");
    profile->add_option("--file", net_file, "net file")->required();
    profile->add_option("--field", field_override, "field override");
    profile->add_option("--x", x_text, "base point, 6 coordinates")->required();
    profile->callback([&]() { report = run_net_profile(net_file, field_override, x_text); });

    // clifford
    std::string diag, gram, field_name = "Q";
    bool even = false;
    auto* clifford = app.add_subcommand("clifford", "Clifford algebras");
    clifford->require_subcommand(1);
    auto* build = clifford->add_subcommand("build", "build Cl(q) from a form");
    build->add_option("--diag", diag, "diagonal entries, comma separated");
    build->add_option("--gram", gram, "gram matrix rows, ';' separated");
    build->add_option("--field", field_name, "base field")->capture_default_str();
    build->callback([&]() { report = run_clifford_build(diag, gram, field_name); });

    auto* creport = clifford->add_subcommand("report", "center / semisimplicity report");
    creport->add_option("--diag", diag, "diagonal entries");
    creport->add_option("--gram", gram, "gram matrix rows");
    creport->add_option("--field", field_name, "base field")->capture_default_str();
    creport->add_flag("--even", even, "report on the even subalgebra");
    creport->callback([&]() { report = run_clifford_report(diag, gram, field_name, even); });

    auto* ideals = clifford->add_subcommand("ideals", "isotropic-plane ideal family (4 variables)");
    ideals->add_option("--diag", diag, "diagonal entries");
    ideals->add_option("--gram", gram, "gram matrix rows");
    ideals->add_option("--field", field_name, "base field (finite)")->capture_default_str();
    ideals->callback([&]() { report = run_clifford_ideals(diag, gram, field_name); });

    // theta
    int genus = 10;
    bool odd = false;
    auto* theta = app.add_subcommand("theta", "theta characteristic counts");
    theta->require_subcommand(1);
    auto* count = theta->add_subcommand("count", "number of theta characteristics");
    count->add_option("--g", genus, "genus")->required();
    count->add_flag("--odd", odd, "count odd instead of even");
    count->callback([&]() { report = run_theta_count(genus, odd); });

    // chern
    long rho = 16, d = 2, c2 = 30, n = 0, rank_in = 1, c1 = 0;
    long f0 = 1, f1 = 0, q0 = 1, q1 = 0, csq = 0;
    long r_deg = 2, c2a = 0, c2b = 0, bound = 0, chi_top = 24, chi_o = 2;
    std::string ch2 = "0";
    auto* chern = app.add_subcommand("chern", "Riemann-Roch and Chern bookkeeping");
    chern->require_subcommand(1);

    bool simple = false;
    auto* chik3 = chern->add_subcommand("chi-k3", "chi of a twisted Azumaya sheaf on a K3");
    chik3->add_option("--rho", rho, "sheaf rank (r^2)")->required();
    chik3->add_option("--d", d, "polarization self-intersection h^2")->required();
    chik3->add_option("--c2", c2, "second Chern class")->required();
    chik3->add_option("--n", n, "twist")->capture_default_str();
    chik3->add_flag("--simple", simple, "assert simplicity and print the h0/h1/h2 table");
    chik3->callback([&]() { report = run_chi_k3(rho, d, c2, n, simple); });

    auto* chip2 = chern->add_subcommand("chi-p2", "chi of a sheaf on the plane");
    chip2->add_option("--rank", rank_in, "rank")->required();
    chip2->add_option("--c1", c1, "first Chern class (multiple of H)")->required();
    chip2->add_option("--ch2", ch2, "ch_2 as a rational multiple of H^2")->required();
    chip2->callback([&]() { report = run_chi_p2(rank_in, c1, ch2); });

    auto* even_chi = chern->add_subcommand("even-clifford", "chi of the even Clifford sheaf");
    even_chi->callback([&]() { report = run_even_clifford_chi(); });

    auto* elem =
        chern->add_subcommand("elem-transform", "c2 shift of an elementary transformation");
    elem->add_option("--f0", f0, "rank of F")->required();
    elem->add_option("--f1", f1, "degree of F")->required();
    elem->add_option("--q0", q0, "rank of Q = V/F")->required();
    elem->add_option("--q1", q1, "degree of Q")->required();
    elem->add_option("--csq", csq, "C^2")->required();
    elem->callback([&]() { report = run_elem_transform(f0, f1, q0, q1, csq); });

    auto* divis = chern->add_subcommand("divisibility", "2r | c2 difference check");
    divis->add_option("--r", r_deg, "degree")->required();
    divis->add_option("--c2a", c2a, "first c2")->required();
    divis->add_option("--c2b", c2b, "second c2")->required();
    divis->callback([&]() { report = run_divisibility(r_deg, c2a, c2b); });

    auto* minim = chern->add_subcommand("minimality", "c2 minimality criterion");
    minim->add_option("--r", r_deg, "degree")->required();
    minim->add_option("--c2", c2, "second Chern class")->required();
    minim->add_option("--bound", bound, "proven lower bound")->required();
    minim->callback([&]() { report = run_minimality(r_deg, c2, bound); });

    auto* bs = chern->add_subcommand("bs-invariants", "Brauer-Severi threefold invariants");
    bs->add_option("--chi-top", chi_top, "chi_top of the K3")->required();
    bs->add_option("--chi-o", chi_o, "chi(O) of the K3")->required();
    bs->add_option("--c2", c2, "c2 of the algebra")->required();
    bs->callback([&]() { report = run_bs_invariants(chi_top, chi_o, c2); });

    // morita
    int morita_n = 2;
    auto* morita = app.add_subcommand("morita", "Morita machinery");
    morita->require_subcommand(1);
    auto* tensor = morita->add_subcommand("tensor", "balanced row-by-column tensor dimension");
    tensor->add_option("--n", morita_n, "matrix size")->required();
    tensor->callback([&]() { report = run_morita(morita_n); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    report.print(options.structured());
    return 0;
}

} // namespace qclif::cli

int main(int argc, char** argv) {
    try {
        return qclif::cli::run(argc, argv);
    } catch (const qclif::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const qclif::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 3;
    }
}
