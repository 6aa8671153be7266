#ifndef BMOLL_IO_HPP
#define BMOLL_IO_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "bmoll/jacobi.hpp"
#include "bmoll/poly.hpp"
#include "bmoll/symdecomp.hpp"
#include "bmoll/triangles.hpp"
#include "bmoll/verify.hpp"

// Machine renderings of the library types. Numbers are ALWAYS decimal
// strings in JSON and CSV -- coefficients here routinely exceed anything a
// double or int64 can hold.

namespace bmoll {

nlohmann::json poly_coeffs_json(const Poly& f);
nlohmann::json compute_json(char kind, unsigned long m, const Poly& f);
std::string poly_csv(const Poly& f);

nlohmann::json decomp_json(unsigned long m, const SymDecomp& d);

/// Gamma rows in both views: true alternating signs and the signed
/// (all-positive) polynomials.
nlohmann::json gamma_rows_json(unsigned long m, const std::vector<Int>& alpha,
                               const std::vector<Int>& beta);

nlohmann::json triangle_json(const AlphaBetaTriangle& tri);
std::string triangle_csv(const AlphaBetaTriangle& tri);
/// Same CSV, streamed row by row so large triangles never sit in memory.
void triangle_csv_stream(unsigned long max_m, std::ostream& out);

nlohmann::json record_json(const ClassificationRecord& rec);
std::string record_csv_header();
std::string record_csv_row(const ClassificationRecord& rec);

nlohmann::json report_json(const Report& report);

/// Factored display of the decomposition of Q_m for m <= 5, e.g.
/// "3*(4 + 7*x + 4*x^2) + 9*x*(1 + x)". Empty when no display is registered
/// for m. The factors are stored structurally; factored_display_consistent
/// expands them and compares against the computed decomposition.
std::string factored_decomp_display(unsigned long m);
bool factored_display_consistent(unsigned long m);

} // namespace bmoll

#endif
