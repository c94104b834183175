// Command-line front end: threshold queries, packing solves with SVG/JSON
// output, mutant enumeration, and certification reports.
//
// Exit codes: 0 success/certified, 1 not certified, 2 usage, 3 numerical
// failure, 4 size guard.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hypmut/certify.hpp"
#include "hypmut/commens.hpp"
#include "hypmut/dehn.hpp"
#include "hypmut/hypcore.hpp"
#include "hypmut/packing.hpp"
#include "hypmut/pretzel.hpp"
#include "hypmut/report.hpp"
#include "hypmut/svg.hpp"

namespace {

using hypmut::report::num;
using hypmut::report::ReportDocument;
using json = hypmut::report::json;

struct GlobalOpts {
    std::string json_out;
    bool quiet = false;
};

void finish(const ReportDocument& doc, const GlobalOpts& g) {
    if (!g.json_out.empty()) {
        std::ofstream out(g.json_out);
        if (!out) throw hypmut::usage_error("cannot write " + g.json_out);
        out << doc.dump();
    }
    std::cout << doc.dump();
}

std::vector<long long> parse_tuple(const std::string& list) {
    std::vector<long long> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            out.push_back(std::stoll(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw hypmut::usage_error("malformed integer list entry: '" +
                                      item + "'");
        }
    }
    if (out.empty()) throw hypmut::usage_error("empty tuple");
    return out;
}

int run_thresholds(double chi, const GlobalOpts& g) {
    if (!(chi > 0)) throw hypmut::usage_error("--chi must be > 0");
    namespace hc = hypmut::hypcore;
    namespace dh = hypmut::dehn;

    ReportDocument doc;
    doc.command = "thresholds";
    doc.inputs["chi"] = num(chi);

    const double h = hc::h_threshold(chi);
    const double cutoff = hc::length_cutoff(chi);
    const double min_L_radius = dh::min_L_for_radius(h);
    const double i_value = min_L_radius * min_L_radius;
    doc.results["h"] = num(h);
    doc.results["g"] = num(hc::g_threshold(chi));
    doc.results["max_length_for_chi"] = num(hc::max_length_for_chi(chi));
    doc.results["length_cutoff_used"] = num(cutoff);
    doc.results["min_normalized_length_for_radius"] = num(min_L_radius);
    doc.results["min_normalized_length_for_length"] =
        num(dh::min_L_for_total_length(cutoff));
    doc.results["i_value_at_h"] = num(i_value);
    if (chi == 2.0) {
        doc.results["i_value_published_bound"] = num(dh::kPublishedISquaredBound);
        if (i_value > dh::kPublishedISquaredBound)
            doc.warnings.push_back(
                "computed I(z) exceeds the published bound 222.01");
    }
    finish(doc, g);
    return 0;
}

json diameters_json(const hypmut::packing::CuspRectangle& rect) {
    json d = json::object();
    for (const auto& [name, diam] : rect.circle_diameters) d[name] = num(diam);
    return d;
}

struct BoundCheck {
    std::string name;
    bool pass;
    std::string detail;
};

void print_checks(const std::vector<BoundCheck>& checks, bool quiet) {
    if (quiet) return;
    for (const auto& c : checks)
        std::printf("CHECK %-28s %-34s %s\n", c.name.c_str(),
                    c.detail.c_str(), c.pass ? "PASS" : "FAIL");
}

int run_pack(const std::string& kind, int n, const std::string& svg_path,
             const std::string& json_path, const GlobalOpts& g) {
    namespace pk = hypmut::packing;
    if (n < 2) throw hypmut::usage_error("pack: n must be >= 2");
    if (kind != "crossing" && kind != "knot")
        throw hypmut::usage_error("pack: kind must be 'crossing' or 'knot'");

    ReportDocument doc;
    doc.command = "pack";
    doc.inputs["kind"] = kind;
    doc.inputs["n"] = n;

    std::vector<BoundCheck> checks;
    pk::CuspRectangle rect;
    if (kind == "crossing") {
        rect = pk::solve_crossing_rectangle(n);
        const pk::CuspRectangle steiner = pk::steiner_cross_check(n);
        const double agree = std::abs(rect.ell_w - steiner.ell_w);
        double chain_sum = 0.0;
        for (int j = 1; j <= 2 * n - 1; ++j)
            chain_sum += rect.circle_diameters.at("P" + std::to_string(j));
        const double bound = 2.0 * n / (2.0 * n - 1.0);
        checks.push_back({"ell_w = 1 + D(P*)",
                          std::abs(rect.ell_w - 1 -
                                   rect.circle_diameters.at("Pstar")) < 1e-9,
                          "|delta| < 1e-9"});
        checks.push_back({"ell_w <= 2n/(2n-1)", rect.ell_w <= bound,
                          std::to_string(rect.ell_w) + " <= " +
                              std::to_string(bound)});
        checks.push_back({"chain diameters sum to 1",
                          std::abs(chain_sum - 1.0) < 1e-10,
                          "sum = " + std::to_string(chain_sum)});
        checks.push_back({"steiner route agreement", agree < 1e-9,
                          "|delta| = " + std::to_string(agree)});
        doc.results["steiner_agreement"] = num(agree);
        doc.results["chain_diameter_sum"] = num(chain_sum);
    } else {
        rect = pk::solve_knot_rectangle(n);
        const double db = rect.circle_diameters.at("B");
        const double dps = rect.circle_diameters.at("Pstar");
        const double lo = (n - 2.0) / (n - 1.0);
        checks.push_back({"1 < ell_w < 2",
                          rect.ell_w > 1.0 && rect.ell_w < 2.0,
                          "ell_w = " + std::to_string(rect.ell_w)});
        checks.push_back({"(n-2)/(n-1) < D(B) < 1", db > lo && db < 1.0,
                          std::to_string(lo) + " < " + std::to_string(db) +
                              " < 1"});
        checks.push_back({"D(B) > 1/2", db > 0.5,
                          "D(B) = " + std::to_string(db)});
        checks.push_back({"D(P*) < 1/(n-1)", dps < 1.0 / (n - 1.0),
                          "D(P*) = " + std::to_string(dps)});
        const pk::KnotCuspTiling tiling = pk::knot_cusp_tiling(n, rect);
        json tj;
        tj["rectangle_count"] = tiling.rectangle_count;
        tj["meridian"] = tiling.meridian;
        tj["longitude"] = tiling.longitude;
        tj["side_s"] = num(tiling.side_s);
        tj["side_w"] = num(tiling.side_w);
        tj["square"] = tiling.square;
        doc.results["tiling"] = tj;
    }
    checks.push_back({"residual < 1e-10", rect.residual < 1e-10,
                      "residual = " + std::to_string(rect.residual)});

    doc.results["ell_s"] = num(rect.ell_s);
    doc.results["ell_w"] = num(rect.ell_w);
    doc.results["residual"] = num(rect.residual);
    doc.results["circle_diameters"] = diameters_json(rect);
    json jchecks = json::array();
    for (const auto& c : checks) {
        json jc;
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        jchecks.push_back(jc);
    }
    doc.results["checks"] = jchecks;

    if (!svg_path.empty()) {
        std::ofstream out(svg_path);
        if (!out) throw hypmut::usage_error("cannot write " + svg_path);
        out << hypmut::svg::render_rectangle(rect);
    }
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) throw hypmut::usage_error("cannot write " + json_path);
        out << doc.dump();
    }
    print_checks(checks, g.quiet);
    finish(doc, g);
    return 0;
}

json report_json(const hypmut::pretzel::CertificationReport& r) {
    using hypmut::pretzel::to_string;
    json doc;
    doc["mode"] = to_string(r.mode);
    doc["tuple"] = r.tuple.q;
    doc["n"] = r.n;
    json viol = json::array();
    for (auto v : r.violations) viol.push_back(to_string(v));
    doc["violations"] = viol;
    doc["thresholds_met"] = r.thresholds_met;
    doc["q_threshold"] = num(r.q_threshold_published);
    doc["q_threshold_derived"] = num(r.q_threshold_derived);
    doc["slope_threshold"] = num(r.slope_threshold);
    doc["ell_w"] = num(r.ell_w);
    json slopes = json::array();
    json lengths = json::array();
    for (const auto& s : r.slopes) {
        json js;
        js["q"] = s.q;
        js["surgery"] = json::array({s.surgery_p, s.surgery_q});
        js["normalized_length"] = num(s.normalized_length);
        js["lower_bound"] = num(s.lower_bound);
        js["meets_threshold"] = s.meets_threshold;
        slopes.push_back(js);
        lengths.push_back(num(s.normalized_length));
    }
    doc["slopes"] = slopes;
    doc["normalized_lengths"] = lengths;
    doc["failing_entries"] = r.failing_entries;
    if (r.mutant_count_enumerated)
        doc["mutant_count_enumerated"] = *r.mutant_count_enumerated;
    else
        doc["mutant_count_enumerated"] = nullptr;
    doc["mutant_count_formula"] = r.mutant_count_formula;
    doc["preserved_lengths"] = r.preserved_lengths;
    doc["volume_bounds"] =
        json::array({num(r.volume_bounds.first), num(r.volume_bounds.second)});
    doc["incommensurability"] = hypmut::commens::to_string(r.incommensurability);
    doc["notes"] = r.notes;
    return doc;
}

int run_certify(const std::string& list, const std::string& mode_name,
                const GlobalOpts& g) {
    namespace pz = hypmut::pretzel;
    const std::vector<long long> q = parse_tuple(list);
    if (q.size() % 2 == 0)
        throw hypmut::usage_error(
            "certify: tuple length must be odd (a pretzel knot)");
    pz::CertifyMode mode;
    if (mode_name == "cusped")
        mode = pz::CertifyMode::Cusped;
    else if (mode_name == "closed")
        mode = pz::CertifyMode::Closed;
    else
        throw hypmut::usage_error("certify: mode must be cusped or closed");

    const pz::CertificationReport r =
        pz::certify(pz::PretzelTuple{q}, mode);
    ReportDocument doc;
    doc.command = "certify";
    doc.inputs["q"] = q;
    doc.inputs["mode"] = mode_name;
    doc.results = report_json(r);
    finish(doc, g);
    return r.thresholds_met ? 0 : 1;
}

int run_mutants(const std::string& list, const std::string& generators,
                bool force, const GlobalOpts& g) {
    namespace pz = hypmut::pretzel;
    const std::vector<long long> q = parse_tuple(list);
    pz::GeneratorKind kind;
    if (generators == "all")
        kind = pz::GeneratorKind::All;
    else if (generators == "unlinked")
        kind = pz::GeneratorKind::UnlinkedOnly;
    else
        throw hypmut::usage_error("mutants: generators must be all or unlinked");

    const pz::PretzelTuple t{q};
    const auto gens = pz::MutationGenerators::make(kind, t.size());
    // count first; only materialize the forms when they will be printed
    const long long count = pz::count_mutants(t, gens, force);
    const long long formula = pz::mutant_count_formula(t.n(), kind);
    std::vector<pz::PretzelTuple> forms;
    if (count <= 200) forms = pz::enumerate_mutants(t, gens, force);

    ReportDocument doc;
    doc.command = "mutants";
    doc.inputs["q"] = q;
    doc.inputs["generators"] = generators;
    doc.inputs["force"] = force;
    doc.results["count"] = count;
    doc.results["formula"] = formula;
    doc.results["discrepancy"] = count != formula;
    if (count <= 200) {
        json arr = json::array();
        for (const auto& f : forms) arr.push_back(f.q);
        doc.results["canonical_forms"] = arr;
    }
    if (!g.quiet) {
        std::printf("count %lld, formula %lld%s\n", count, formula,
                    count != formula ? " (DISCREPANCY)" : "");
        for (const auto& f : forms) {
            std::string line;
            for (std::size_t i = 0; i < f.q.size(); ++i)
                line += (i ? "," : "") + std::to_string(f.q[i]);
            std::printf("  (%s)\n", line.c_str());
        }
    }
    finish(doc, g);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification toolkit for pretzel-knot mutation geometry"};
    app.require_subcommand(1);
    app.fallthrough();
    GlobalOpts g;
    app.add_option("--json-out", g.json_out,
                   "also write the report document to this path");
    app.add_flag("--quiet", g.quiet, "suppress human-readable output");

    double chi = 0.0;
    auto* thresholds =
        app.add_subcommand("thresholds", "surface separation thresholds");
    thresholds->add_option("--chi", chi, "absolute Euler characteristic")
        ->required();

    std::string pack_kind;
    int pack_n = 0;
    std::string svg_path, json_path;
    auto* pack = app.add_subcommand("pack", "solve a cusp rectangle packing");
    pack->add_option("kind", pack_kind, "crossing or knot")->required();
    pack->add_option("--n", pack_n, "family parameter n >= 2")->required();
    pack->add_option("--svg", svg_path, "write an SVG rendering");
    pack->add_option("--json", json_path, "write the report JSON");

    std::string certify_q, certify_mode = "cusped";
    auto* certify = app.add_subcommand("certify", "full certification report");
    certify->add_option("--q", certify_q, "comma-separated twist parameters")
        ->required();
    certify->add_option("--mode", certify_mode, "cusped or closed");

    std::string mutants_q, mutants_gen = "all";
    bool force = false;
    auto* mutants = app.add_subcommand("mutants", "enumerate mutant canonical forms");
    mutants->add_option("--q", mutants_q, "comma-separated twist parameters")
        ->required();
    mutants->add_option("--generators", mutants_gen, "all or unlinked");
    mutants->add_flag("--force", force, "override the size guard");

    try {
        app.parse(argc, argv);
        if (thresholds->parsed()) return run_thresholds(chi, g);
        if (pack->parsed())
            return run_pack(pack_kind, pack_n, svg_path, json_path, g);
        if (certify->parsed()) return run_certify(certify_q, certify_mode, g);
        if (mutants->parsed()) return run_mutants(mutants_q, mutants_gen, force, g);
        return 2;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const hypmut::usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const hypmut::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const hypmut::size_guard_error& e) {
        std::cerr << "size guard: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    }
}
