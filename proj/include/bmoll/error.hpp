#ifndef BMOLL_ERROR_HPP
#define BMOLL_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bmoll {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// poly
struct degree_too_large : error { using error::error; };
struct not_divisible : error { using error::error; };

// kernels / numeric
struct zero_denominator : error { using error::error; };

// props
struct empty_polynomial : error { using error::error; };
struct precondition_degree : error { using error::error; };

// gamma
struct not_symmetric : error { using error::error; };
struct internal_residue : error { using error::error; };

// boros_moll
struct quadrature_nonconvergence : error { using error::error; };

// jacobi
struct invalid_grid : error { using error::error; };

// verify
struct unknown_sequence : error { using error::error; };
struct length_exceeds_fixture : error { using error::error; };
struct malformed_line : error {
    malformed_line(std::size_t line_no, const std::string& what)
        : error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
    std::size_t line;
};
struct non_monotone_index : error {
    non_monotone_index(std::size_t line_no, const std::string& what)
        : error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
    std::size_t line;
};

// violated internal invariant (a bug, not a usage error)
struct internal_error : error { using error::error; };

} // namespace bmoll

#endif
