#ifndef SIA_CATALOG_HPP
#define SIA_CATALOG_HPP

#include "sia/cmfield.hpp"
#include "sia/errors.hpp"

#include <string>
#include <vector>

namespace sia {

struct ValidationIssue {
    std::string label;
    std::string check;
    std::string message;
};

class Catalog {
public:
    static Catalog load_file(const std::string& path);
    static Catalog load_json_text(const std::string& text);

    const std::vector<CMFieldPtr>& fields() const { return fields_; }
    CMFieldPtr find(const std::string& label) const;  // throws UnknownFieldError
    bool has(const std::string& label) const;

private:
    std::vector<CMFieldPtr> fields_;
};

// full re-derivation of every checkable catalog invariant
std::vector<ValidationIssue> catalog_validate(const Catalog& cat);

// default path: $SIA_CATALOG if set, else "data/catalog.json"
std::string default_catalog_path();

}  // namespace sia

#endif
