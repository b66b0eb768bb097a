// State files, inline family specs and CSV output.
//
// State file:  {"dim": 4, "matrix": [[[re, im], x4], x4]}
// Family spec: name:key=val,key=val   e.g. "horodecki:C=0.6", "bell:l=0.75,0.25,0,0"

#ifndef QENT_STATE_IO_HPP
#define QENT_STATE_IO_HPP

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "qent/families.hpp"
#include "qent/ordering.hpp"

namespace qent {

/// Looser than the in-memory default: files carry rounded decimals.
inline constexpr double kStateFileTol = 1e-8;

/// Throws ParseError for bad JSON or shape, InvalidDensity for a bad matrix.
DensityMatrix parse_state_json(const std::string& text);
DensityMatrix read_state_file(const std::string& path);

/// 17 significant digits, so reading back gives the same doubles.
std::string state_to_json(const DensityMatrix& rho);
void write_state_file(const std::string& path, const DensityMatrix& rho);

/// Family parameters as written on the command line. A value may hold a
/// comma-separated list (Bell-diagonal weights).
using FamilyParams = std::map<std::string, std::string>;

/// Splits "C=0.6" / "l=0.75,0.25,0,0" style tokens. A token without '='
/// continues the previous key's list.
FamilyParams parse_family_params(const std::vector<std::string>& tokens);

/// Builds a family from its name and parameters:
///   pure       C= | N= | a=,b=,c=,d=
///   horodecki  C= | N= | E=
///   bell       l=l1,l2,l3,l4 | C= | E=
///   werner     C=     x  C=     y  A=,C=     z  C=,N=
/// Throws ParseError for unknown names or keys, FamilyConstraint for
/// out-of-range values.
StateFamily make_family(const std::string& name, const FamilyParams& params);

/// "name:key=val,..." form.
StateFamily parse_family_spec(const std::string& spec);

/// Anything containing ':' that is not an existing file is a family spec.
TaggedState resolve_state(const std::string& path_or_spec);

/// Comma-separated rows, LF endings, numbers at 10 significant digits.
class CsvWriter {
 public:
  CsvWriter(std::ostream& out, std::vector<std::string> header);

  CsvWriter& operator<<(double v);
  CsvWriter& operator<<(long long v);
  CsvWriter& operator<<(std::uint64_t v);
  CsvWriter& operator<<(bool v);
  CsvWriter& operator<<(const std::string& v);
  /// Throws Error when the row width differs from the header.
  void end_row();

 private:
  void cell(const std::string& s);

  std::ostream& out_;
  std::size_t width_;
  std::vector<std::string> row_;
};

std::string format_number(double v, int digits = 10);

}  // namespace qent

#endif  // QENT_STATE_IO_HPP
