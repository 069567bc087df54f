// Command-line front end: catalog-driven searches, curve analysis, and
// machine-readable output.

#include "sia/catalog.hpp"
#include "sia/classify.hpp"
#include "sia/etacurve.hpp"
#include "sia/weilsearch.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

using namespace sia;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitError = 1;
constexpr int kExitUnknownField = 2;
constexpr int kExitBudget = 3;
constexpr int kExitSyntax = 4;

struct Output {
    std::string format = "json";
    std::string path;

    void emit(const json& j, const std::string& csv = "", const std::string& text = "") const {
        std::ostream* os = &std::cout;
        std::ofstream file;
        if (!path.empty()) {
            file.open(path);
            if (!file) throw std::runtime_error("cannot open output file: " + path);
            os = &file;
        }
        if (format == "json") {
            *os << j.dump(1) << "\n";
        } else if (format == "csv") {
            *os << (csv.empty() ? j.dump(1) : csv);
        } else {
            *os << (text.empty() ? j.dump(1) : text);
        }
    }
};

json record_json(const WeilGeneratorRecord& rec) {
    json j;
    j["alpha"] = rec.alpha.to_string();
    j["u"] = rec.u.to_string("t");
    j["eta_index"] = rec.eta_index;
    j["eta"] = rec.eta.to_string("t");
    j["a"] = rec.a.to_string();
    j["q"] = rec.q.to_string();
    return j;
}

json verdict_json(const AVVerdict& v) {
    json j;
    j["verdict"] = v.verdict;
    switch (v.status) {
        case AVVerdict::Status::SuperIsolated: j["status"] = "super-isolated"; break;
        case AVVerdict::Status::NotSuperIsolated: j["status"] = "not-super-isolated"; break;
        case AVVerdict::Status::NotSimple: j["status"] = "not-simple"; break;
        case AVVerdict::Status::NotOrdinary: j["status"] = "not-ordinary"; break;
        case AVVerdict::Status::UnknownField: j["status"] = "unknown-field"; break;
    }
    json w;
    w["detail"] = v.witness;
    if (!v.field_label.empty()) w["field"] = v.field_label;
    if (v.failed_condition) w["failed_condition"] = v.failed_condition;
    j["witness"] = w;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weil generators and super-isolated abelian varieties"};
    app.require_subcommand(1);

    std::string catalog_path = default_catalog_path();
    Output out;
    int threads = 1;
    std::string simd = "auto";
    app.add_option("--catalog", catalog_path, "catalog JSON path (or $SIA_CATALOG)");
    app.add_option("--format", out.format, "json|csv|text")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--output", out.path, "output file (default stdout)");
    app.add_option("--threads", threads, "worker threads for point counting");
    app.add_option("--simd", simd, "auto|scalar|avx2")->check(CLI::IsMember({"auto", "scalar", "avx2"}));

    auto count_opts = [&]() {
        CountOptions o;
        o.threads = threads;
        o.simd = simd == "scalar"  ? CountOptions::Simd::Scalar
                 : simd == "avx2" ? CountOptions::Simd::Avx2
                                  : CountOptions::Simd::Auto;
        return o;
    };

    // weil-search
    auto* ws = app.add_subcommand("weil-search", "enumerate Weil generators of a catalog field");
    std::string ws_field, ws_via = "auto";
    std::string ws_bound = "100";
    std::string ws_box = "100";
    std::string ws_hmax = "100";
    ws->add_option("--field", ws_field, "catalog label")->required();
    ws->add_option("--via", ws_via, "auto|algorithm1|eta-curves|closed-form");
    ws->add_option("--bound", ws_bound, "unit height bound B (algorithm1)");
    ws->add_option("--box", ws_box, "integral point box (eta-curves)");
    ws->add_option("--height-max", ws_hmax, "height bound N (closed form, g = 1)");

    // census
    auto* cen = app.add_subcommand("census", "counts of Weil generators of bounded height");
    std::string cen_field, cen_grid = "100,1000,10000";
    std::string cen_bound = "1000";
    cen->add_option("--field", cen_field)->required();
    cen->add_option("--n-grid", cen_grid, "comma-separated height bounds");
    cen->add_option("--bound", cen_bound, "unit height bound for the quartic search");

    // quartic-density
    auto* qd = app.add_subcommand("quartic-density", "congruence classes and the density constant rho");
    std::string qd_field;
    qd->add_option("--field", qd_field)->required();

    // eta-curve
    auto* ec = app.add_subcommand("eta-curve", "norm-form curve machinery for sextic fields");
    std::string ec_field, ec_action = "build";
    size_t ec_eta = 0, ec_eta2 = 0;
    std::string ec_box = "100";
    ec->add_option("--field", ec_field)->required();
    ec->add_option("--action", ec_action, "build|points|lift|transform")
        ->check(CLI::IsMember({"build", "points", "lift", "transform"}));
    ec->add_option("--eta", ec_eta, "index into the catalog T list");
    ec->add_option("--eta2", ec_eta2, "second index (transform)");
    ec->add_option("--box", ec_box, "coordinate bound for the point search");

    // classify-ec
    auto* ce = app.add_subcommand("classify-ec", "five-case elliptic super-isolation test");
    std::string ce_q, ce_t;
    ce->add_option("--q", ce_q)->required();
    ce->add_option("--t", ce_t)->required();

    // zeta
    auto* zt = app.add_subcommand("zeta", "point counts and Frobenius characteristic polynomial");
    std::string zt_curve;
    zt->add_option("--curve", zt_curve, "\"y^2 + h(x)*y = f(x) over GF(p^a)\"")->required();

    // classify-av
    auto* ca = app.add_subcommand("classify-av", "Honda-Tate super-isolation test for a Jacobian");
    std::string ca_curve;
    ca->add_option("--curve", ca_curve)->required();

    // isogeny-census
    auto* ic = app.add_subcommand("isogeny-census", "all elliptic curves over F_q up to isomorphism");
    uint64_t ic_q = 2;
    ic->add_option("--q", ic_q)->required();

    // cm-prime-search
    auto* cps = app.add_subcommand("cm-prime-search", "prime-norm Weil generators of a quadratic field");
    std::string cps_field, cps_min = "1", cps_max = "10";
    cps->add_option("--field", cps_field)->required();
    cps->add_option("--b-min", cps_min);
    cps->add_option("--b-max", cps_max);

    // catalog-validate
    auto* cv = app.add_subcommand("catalog-validate", "re-derive every checkable catalog invariant");

    // baker-coates
    auto* bc = app.add_subcommand("baker-coates", "symbolic height bound report for a sextic field");
    std::string bc_field;
    bc->add_option("--field", bc_field)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        Catalog cat = Catalog::load_file(catalog_path);

        if (ws->parsed()) {
            auto fld = cat.find(ws_field);
            json j;
            j["field"] = ws_field;
            std::vector<WeilGeneratorRecord> recs;
            std::string via = ws_via;
            if (via == "auto") via = fld->g() == 1 ? "closed-form" : (fld->g() >= 3 ? "eta-curves" : "algorithm1");
            if (fld->T.empty()) {
                auto p = monogenic_obstruction(*fld);
                j["via"] = "obstruction";
                j["generators"] = json::array();
                j["count"] = 0;
                if (p) {
                    j["obstruction"] = {{"prime", *p},
                                        {"detail", "the totally real subfield is not monogenic: more embeddings into Q_" +
                                                       std::to_string(*p) + " than Z[x] admits, so no Weil generators exist"}};
                } else {
                    j["note"] = "catalog record has no monogenic-generator data";
                }
                out.emit(j);
                return 0;
            }
            if (via == "closed-form") {
                recs = quadratic_weil_gens(*fld, BigInt::from_string(ws_hmax));
                j["height_max"] = ws_hmax;
            } else if (via == "eta-curves") {
                auto res = sextic_weil_search(fld, BigInt::from_string(ws_box));
                recs = res.generators;
                j["box"] = ws_box;
                json pts = json::array();
                for (const auto& p : res.reference_points) pts.push_back({p.A.to_string(), p.B.to_string()});
                j["reference_eta_index"] = 0;
                j["reference_points"] = pts;
            } else {
                recs = algorithm1(*fld, Rational::from_string(ws_bound));
                j["bound"] = ws_bound;
            }
            j["via"] = via;
            j["count"] = recs.size();
            json arr = json::array();
            for (const auto& r : recs) arr.push_back(record_json(r));
            j["generators"] = arr;
            out.emit(j);
            return 0;
        }

        if (cen->parsed()) {
            auto fld = cat.find(cen_field);
            std::vector<BigInt> grid;
            std::string cur;
            for (char c : cen_grid + ",") {
                if (c == ',') {
                    if (!cur.empty()) grid.push_back(BigInt::from_string(cur));
                    cur.clear();
                } else {
                    cur.push_back(c);
                }
            }
            auto rows = census(*fld, grid, Rational::from_string(cen_bound));
            json j;
            j["field"] = cen_field;
            json arr = json::array();
            std::string csv = "N,count,predicted\n";
            for (const auto& r : rows) {
                arr.push_back({{"N", r.N.to_string()}, {"count", r.count}, {"predicted", r.predicted}});
                csv += r.N.to_string() + "," + std::to_string(r.count) + "," + std::to_string(r.predicted) + "\n";
            }
            j["rows"] = arr;
            out.emit(j, csv);
            return 0;
        }

        if (qd->parsed()) {
            auto fld = cat.find(qd_field);
            auto qc = quartic_congruence(*fld);
            json j;
            j["field"] = qd_field;
            j["order_m"] = qc.order_m;
            j["admissible"] = qc.admissible;
            json table = json::array();
            for (size_t k = 0; k < qc.table.size(); ++k) {
                json cls = json::array();
                for (const auto& c : qc.table[k]) cls.push_back(c.to_string());
                table.push_back({{"k", k}, {"class_mod_4", cls}});
            }
            j["table"] = table;
            j["C6"] = qc.density_c6.to_string();
            j["rho"] = qc.rho;
            out.emit(j);
            return 0;
        }

        if (ec->parsed()) {
            auto fld = cat.find(ec_field);
            json j;
            j["field"] = ec_field;
            if (ec_action == "transform") {
                auto tr = eta_transform(fld, ec_eta, ec_eta2);
                j["eta1"] = ec_eta;
                j["eta2"] = ec_eta2;
                j["map"] = {{"A1", tr.A1.to_string()}, {"A2", tr.A2.to_string()}, {"A3", tr.A3.to_string()},
                            {"B1", tr.B1.to_string()}, {"B2", tr.B2.to_string()}, {"B3", tr.B3.to_string()}};
                j["v"] = tr.v.to_string("t");
                j["verified"] = true;
                out.emit(j);
                return 0;
            }
            auto c = build_eta_curve(fld, ec_eta);
            j["eta_index"] = ec_eta;
            j["eta"] = c.eta.to_string("t");
            j["f_eta"] = c.f.to_string();
            j["H"] = c.H.to_string();
            j["rhs"] = c.rhs.to_string();
            if (ec_action == "points" || ec_action == "lift") {
                auto pts = integral_points_box(c, BigInt::from_string(ec_box));
                json arr = json::array();
                for (const auto& p : pts) arr.push_back({p.A.to_string(), p.B.to_string()});
                j["box"] = ec_box;
                j["points"] = arr;
                if (ec_action == "lift") {
                    json gens = json::array();
                    for (const auto& p : pts)
                        for (const auto& r : lift_point(c, p)) gens.push_back(record_json(r));
                    j["generators"] = gens;
                }
            }
            out.emit(j);
            return 0;
        }

        if (ce->parsed()) {
            auto v = classify_elliptic(BigInt::from_string(ce_q), BigInt::from_string(ce_t));
            json j;
            j["q"] = ce_q;
            j["t"] = ce_t;
            j["verdict"] = v.super_isolated;
            if (v.case_number) j["case"] = v.case_number;
            j["witness"] = {{"detail", v.witness}};
            out.emit(j);
            return 0;
        }

        if (zt->parsed()) {
            CurveModel c = CurveModel::parse(zt_curve);
            auto fd = frobenius_charpoly(c, count_opts());
            json j;
            j["curve"] = c.to_string();
            j["genus"] = c.genus;
            j["q"] = fd.q.to_string();
            json counts = json::array();
            for (const auto& n : fd.counts) counts.push_back(n.to_string());
            j["counts"] = counts;
            j["trace"] = fd.trace.to_string();
            j["charpoly"] = fd.charpoly.to_string();
            j["zeta_numerator"] = zeta_numerator(fd).to_string("t");
            out.emit(j);
            return 0;
        }

        if (ca->parsed()) {
            CurveModel c = CurveModel::parse(ca_curve);
            auto fd = frobenius_charpoly(c, count_opts());
            auto v = classify_ordinary_av(fd, cat);
            json j = verdict_json(v);
            j["curve"] = c.to_string();
            j["charpoly"] = fd.charpoly.to_string();
            out.emit(j);
            return 0;
        }

        if (ic->parsed()) {
            auto cen_rep = isogeny_census(ic_q);
            json j;
            j["q"] = cen_rep.q;
            j["curve_models"] = cen_rep.curve_models;
            j["isomorphism_classes"] = cen_rep.iso_classes;
            json arr = json::array();
            for (const auto& g : cen_rep.isogeny_classes) {
                json cls = json::array();
                for (const auto& c : g.classes) cls.push_back(c.rep_text);
                arr.push_back({{"points", g.npoints.to_string()},
                               {"trace", g.trace.to_string()},
                               {"size", g.classes.size()},
                               {"singleton", g.singleton()},
                               {"classes", cls}});
            }
            j["isogeny_classes"] = arr;
            out.emit(j);
            return 0;
        }

        if (cps->parsed()) {
            auto fld = cat.find(cps_field);
            auto hits = cm_prime_search(*fld, BigInt::from_string(cps_min), BigInt::from_string(cps_max));
            json j;
            j["field"] = cps_field;
            if (!fld->cm_curve.empty()) j["cm_curve"] = fld->cm_curve;
            json arr = json::array();
            for (const auto& h : hits) {
                json e = record_json(h.rec);
                e["b"] = h.b.to_string();
                e["p"] = h.p.to_string();
                e["bits"] = h.bits;
                e["hamming_weight"] = h.hamming;
                arr.push_back(e);
            }
            j["hits"] = arr;
            out.emit(j);
            return 0;
        }

        if (cv->parsed()) {
            auto issues = catalog_validate(cat);
            json j;
            j["fields"] = cat.fields().size();
            j["issues"] = json::array();
            for (const auto& i : issues)
                j["issues"].push_back({{"label", i.label}, {"check", i.check}, {"message", i.message}});
            j["ok"] = issues.empty();
            out.emit(j);
            return issues.empty() ? 0 : kExitError;
        }

        if (bc->parsed()) {
            auto fld = cat.find(bc_field);
            auto rep = baker_coates_report(fld);
            json j;
            j["field"] = bc_field;
            json hs = json::array();
            for (const auto& h : rep.per_eta_H) hs.push_back(h.to_string());
            j["per_eta_H"] = hs;
            j["H"] = rep.H_max.to_string();
            j["kappa"] = rep.kappa;
            j["norm_exponent"] = rep.norm_exponent;
            j["zeta_K_2"] = {{"lo", rep.zeta2_lo}, {"hi", rep.zeta2_hi}};
            j["point_height_bound"] = rep.point_height_bound;
            j["count_bound"] = rep.count_bound;
            out.emit(j);
            return 0;
        }
    } catch (const UnknownFieldError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnknownField;
    } catch (const BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const CurveSyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSyntax;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return 0;
}
