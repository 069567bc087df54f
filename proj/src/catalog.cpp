#include "sia/catalog.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>

namespace sia {

namespace {

using nlohmann::json;

std::vector<Rational> parse_coords(const json& arr) {
    std::vector<Rational> out;
    for (const auto& v : arr) out.push_back(Rational::from_string(v.get<std::string>()));
    return out;
}

CMFieldPtr parse_field(const json& j) {
    auto fld = std::make_shared<CMField>();
    fld->label = j.at("label").get<std::string>();
    try {
        fld->K = NumberField::create(QPoly::parse(j.at("K_poly").get<std::string>()));
        fld->F = NumberField::create(QPoly::parse(j.at("F_poly").get<std::string>()));
        fld->F_in_K = fld->K->element(parse_coords(j.at("F_in_K")));
        fld->conj_gen = fld->K->element(parse_coords(j.at("conj")));
        if (j.contains("gamma")) fld->gamma = fld->K->element(parse_coords(j.at("gamma")));
        if (j.contains("T"))
            for (const auto& t : j.at("T")) fld->T.push_back(fld->F->element(parse_coords(t)));
        if (j.contains("fund_units"))
            for (const auto& u : j.at("fund_units")) fld->fund_units.push_back(fld->F->element(parse_coords(u)));
        fld->disc_K = BigInt::from_string(j.at("disc_K").get<std::string>());
        fld->disc_F = BigInt::from_string(j.at("disc_F").get<std::string>());
        fld->class_number = j.value("class_number", 0);
        fld->kappa = j.value("kappa", 0);
        fld->cm_curve = j.value("cm_curve", std::string());
        if (j.contains("provenance"))
            for (const auto& [k, v] : j.at("provenance").items()) fld->provenance[k] = v.get<std::string>();
        if (j.contains("notes")) fld->provenance["notes"] = j.at("notes").get<std::string>();
        fld->validate_structure();
    } catch (const std::exception& e) {
        throw CatalogError(fld->label + ": " + e.what());
    }
    return fld;
}

}  // namespace

Catalog Catalog::load_json_text(const std::string& text) {
    json j = json::parse(text);
    Catalog cat;
    for (const auto& f : j.at("fields")) cat.fields_.push_back(parse_field(f));
    for (size_t i = 0; i < cat.fields_.size(); ++i)
        for (size_t k = i + 1; k < cat.fields_.size(); ++k)
            if (cat.fields_[i]->label == cat.fields_[k]->label)
                throw CatalogError("duplicate label: " + cat.fields_[i]->label);
    return cat;
}

Catalog Catalog::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CatalogError("cannot open catalog file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return load_json_text(text);
}

CMFieldPtr Catalog::find(const std::string& label) const {
    for (const auto& f : fields_)
        if (f->label == label) return f;
    throw UnknownFieldError(label);
}

bool Catalog::has(const std::string& label) const {
    for (const auto& f : fields_)
        if (f->label == label) return true;
    return false;
}

std::string default_catalog_path() {
    if (const char* env = std::getenv("SIA_CATALOG")) return env;
    return "data/catalog.json";
}

std::vector<ValidationIssue> catalog_validate(const Catalog& cat) {
    std::vector<ValidationIssue> issues;
    auto add = [&](const std::string& label, const std::string& check, const std::string& msg) {
        issues.push_back({label, check, msg});
    };

    for (const auto& f : cat.fields()) {
        try {
            f->validate_structure();
        } catch (const std::exception& e) {
            add(f->label, "structure", e.what());
            continue;
        }

        // disc divisibility for CM layering
        if (f->g() >= 2) {
            BigInt df2 = f->disc_F * f->disc_F;
            if (!(f->disc_K.abs() % df2).is_zero())
                add(f->label, "disc-divisibility", "disc_F^2 does not divide |disc_K|");
        }

        // T entries generate O_F and are translation-inequivalent
        for (size_t i = 0; i < f->T.size(); ++i) {
            const NFElement& eta = f->T[i];
            if (!eta.is_integral()) {
                add(f->label, "T-integral", "T[" + std::to_string(i) + "] is not integral");
                continue;
            }
            QPoly mp = eta.min_poly();
            if (f->g() >= 2) {
                if (mp.degree() != f->g()) {
                    add(f->label, "T-degree", "T[" + std::to_string(i) + "] does not generate F");
                } else {
                    Rational d = poly_discriminant(mp);
                    if (!d.is_integer() || d.num() != f->disc_F)
                        add(f->label, "T-disc",
                            "disc(minpoly(T[" + std::to_string(i) + "])) = " + d.to_string() +
                                " != disc_F = " + f->disc_F.to_string());
                }
            }
            for (size_t k = 0; k < i; ++k) {
                NFElement diff = eta - f->T[k];
                if (diff.is_rational() && diff.rational_value().is_integer())
                    add(f->label, "T-translation-class",
                        "T[" + std::to_string(i) + "] and T[" + std::to_string(k) +
                            "] differ by the integer " + diff.rational_value().to_string());
            }
        }

        // fundamental units: integral of norm +-1, numerically independent
        for (size_t i = 0; i < f->fund_units.size(); ++i) {
            const NFElement& u = f->fund_units[i];
            if (!u.is_integral()) {
                add(f->label, "unit-integral", "fund_units[" + std::to_string(i) + "] is not integral");
                continue;
            }
            Rational n = u.norm();
            if (!(n == Rational(1) || n == Rational(-1)))
                add(f->label, "unit-norm",
                    "fund_units[" + std::to_string(i) + "] has norm " + n.to_string());
        }
        if (!f->fund_units.empty()) {
            if (static_cast<int>(f->fund_units.size()) != f->g() - 1)
                add(f->label, "unit-rank",
                    "expected rank " + std::to_string(f->g() - 1) + ", catalog has " +
                        std::to_string(f->fund_units.size()));
            else if (f->g() >= 2) {
                size_t r = f->fund_units.size();
                std::vector<std::vector<double>> logs(r);
                bool ok = true;
                for (size_t i = 0; i < r; ++i) {
                    auto vals = f->fund_units[i].real_embedding_values(Rational(1, 1 << 24));
                    if (static_cast<int>(vals.size()) != f->g()) {
                        ok = false;
                        break;
                    }
                    for (size_t j = 0; j + 1 < vals.size(); ++j)
                        logs[i].push_back(std::log(std::abs(vals[j].mid().to_double())));
                }
                if (ok && r >= 1) {
                    // determinant of the r x r leading log-embedding block
                    double det = 0;
                    if (r == 1) det = logs[0][0];
                    else if (r == 2) det = logs[0][0] * logs[1][1] - logs[0][1] * logs[1][0];
                    if (std::abs(det) < 1e-9)
                        add(f->label, "unit-independence", "log embeddings look dependent");
                }
            }
        }

        // gamma generates O_K over O_F: module disc of {eta0^i gamma^j} = disc_K
        if (f->gamma) {
            std::vector<NFElement> gens;
            NFElement pw = f->K->one();
            for (int i = 0; i < f->g(); ++i) {
                gens.push_back(pw);
                gens.push_back(pw * *f->gamma);
                pw = pw * f->F_in_K;
            }
            try {
                Rational md = module_discriminant(gens);
                if (!md.is_integer() || md.num() != f->disc_K)
                    add(f->label, "gamma-module-disc",
                        "disc of O_F[gamma] module = " + md.to_string() + " != disc_K = " +
                            f->disc_K.to_string());
            } catch (const std::exception& e) {
                add(f->label, "gamma-module-disc", e.what());
            }
        }
    }
    return issues;
}

}  // namespace sia
