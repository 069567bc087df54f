#ifndef SIA_ERRORS_HPP
#define SIA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sia {

struct UnknownFieldError : std::runtime_error {
    explicit UnknownFieldError(const std::string& label)
        : std::runtime_error("unknown field label: " + label) {}
};

struct BudgetExceededError : std::runtime_error {
    explicit BudgetExceededError(const std::string& what) : std::runtime_error(what) {}
};

struct CurveSyntaxError : std::runtime_error {
    explicit CurveSyntaxError(const std::string& what) : std::runtime_error(what) {}
};

struct CatalogError : std::runtime_error {
    explicit CatalogError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sia

#endif
