#pragma once

#include <stdexcept>
#include <string>

namespace ffz {

// Every failure the library can raise, by name.  The CLI maps these to a
// machine-readable "kind" string and exit code 2.
enum class errc {
    not_prime,
    budget_exceeded,
    field_mismatch,
    division_by_zero,
    no_embedding,
    not_homogeneous,
    integrality_violation,
    empty_system,
    inapplicable,
    not_prime_field,
    no_solution,
    not_verified,
    inconsistent,
    unnormalized,
    empty_hodge,
    invalid_dimensions,
    length_mismatch,
    out_of_domain,
    not_lowest_terms,
    base_mismatch,
    singular_matrix,
    indivisible_multiplicity,
    zero_vector,
    precision_mismatch,
    zero_input,
    invalid_input,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw error(code, msg); }

inline void require(bool cond, errc code, const std::string& msg) {
    if (!cond) fail(code, msg);
}

} // namespace ffz
