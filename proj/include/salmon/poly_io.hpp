#pragma once

#include <string>

#include "salmon/geometry.hpp"
#include "salmon/membership.hpp"
#include "salmon/schur.hpp"
#include "salmon/tensor.hpp"

namespace salmon {

// Polynomial text format (bit-exact; emitted and re-parsed):
//   # module=<name> dims=<a>,<b>,<c> degree=<d>
//   # note: <note>                         (only when present)
//   poly <id> <provenance>
//   <signed integer coeff> x[i,j,k]^e ...  (canonical monomial order,
//   ...                                     exponent suffix omitted when 1)
//   <blank line after each polynomial>
std::string emit_module_basis(const ModuleBasis& basis);
ModuleBasis parse_module_basis(const std::string& text);

std::string emit_polynomial_terms(const SparsePolynomial& p);  // monomial lines only

// Tensor JSON: {"dims":[a,b,c], "entries":["p/q", ...]} with entries
// flattened row-major (i outer, k inner) and rationals as strings. The
// parser also accepts plain integers and nested row arrays.
std::string tensor_to_json(const Tensor3& t, const std::string& meta_kind = "",
                           std::uint64_t seed = 0, int r = 0);
Tensor3 tensor_from_json(const std::string& text);

std::string report_to_json(const MembershipReport& report);
std::string scan_to_json(const ScanResult& scan);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace salmon
