#ifndef CVINFO_IO_HPP
#define CVINFO_IO_HPP

#include "cvinfo/covariance.hpp"
#include "cvinfo/inequalities.hpp"
#include "cvinfo/steering.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace cvinfo {

// CM file format: JSON object {"modes": n, "matrix": [[ ... ]]} with a
// row-major 2n x 2n real matrix, mode ordering q1,p1,...,qn,pn. The parser
// rejects entries asymmetric beyond 1e-9 * max(1,|V_jk|) and symmetrizes
// accepted input before validating positive definiteness.

CovarianceMatrix parse_cm_json(const std::string& text);
std::string to_cm_json(const CovarianceMatrix& v);

CovarianceMatrix read_cm_file(const std::string& path);
void write_cm_file(const CovarianceMatrix& v, const std::string& path);

/// Single-line JSON: {"direction": [[A...],[B...]], "schur_spectrum": [...],
/// "G": x, "steerable": bool}.
std::string to_json(const SteeringReport& report);

/// Single-line JSON with keys g_ab, g_cb, product_of_conditionals,
/// consistent.
std::string to_json(const MonogamyVerdict& verdict);

/// Region CSV: header a,b,c,in_H,in_M,in_D, one row per grid point, flags
/// 0/1.
void write_region_csv(std::ostream& out,
                      const std::vector<RegionPoint>& points);

/// Locale-independent formatting with 12 significant digits.
std::string format_number(double x);

}  // namespace cvinfo

#endif  // CVINFO_IO_HPP
