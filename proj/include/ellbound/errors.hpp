// Error taxonomy. Domain errors exit the CLI with code 2, budget errors with 3.
#ifndef ELLBOUND_ERRORS_HPP
#define ELLBOUND_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ellbound {

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
    virtual int exit_code() const { return 2; }
};

struct domain_error : error {
    using error::error;
    int exit_code() const override { return 2; }
};

struct budget_error : error {
    using error::error;
    int exit_code() const override { return 3; }
};

#define ELLBOUND_DOMAIN_ERROR(Name)                                       \
    struct Name : domain_error {                                          \
        explicit Name(const std::string& what = #Name) : domain_error(what) {} \
    }

#define ELLBOUND_BUDGET_ERROR(Name)                                       \
    struct Name : budget_error {                                          \
        explicit Name(const std::string& what = #Name) : budget_error(what) {} \
    }

ELLBOUND_DOMAIN_ERROR(division_by_zero);
ELLBOUND_DOMAIN_ERROR(field_mismatch);
ELLBOUND_DOMAIN_ERROR(zero_argument);
ELLBOUND_DOMAIN_ERROR(negative_input);
ELLBOUND_DOMAIN_ERROR(indeterminate_splitting);
ELLBOUND_DOMAIN_ERROR(precision_unreachable);
ELLBOUND_DOMAIN_ERROR(convergence_failure);
ELLBOUND_DOMAIN_ERROR(not_positive_definite);
ELLBOUND_DOMAIN_ERROR(not_a_sum);
ELLBOUND_DOMAIN_ERROR(zero_element);
ELLBOUND_DOMAIN_ERROR(degenerate_triple);
ELLBOUND_DOMAIN_ERROR(primitive_element_search_failed);
ELLBOUND_DOMAIN_ERROR(reducible_polynomial);
ELLBOUND_DOMAIN_ERROR(missing_key);
ELLBOUND_DOMAIN_ERROR(non_positive_value);
ELLBOUND_DOMAIN_ERROR(level_overflow);
ELLBOUND_DOMAIN_ERROR(bad_input);

ELLBOUND_BUDGET_ERROR(factorization_too_large);
ELLBOUND_BUDGET_ERROR(coordinate_blowup);
ELLBOUND_BUDGET_ERROR(budget_exceeded);

#undef ELLBOUND_DOMAIN_ERROR
#undef ELLBOUND_BUDGET_ERROR

} // namespace ellbound

#endif
