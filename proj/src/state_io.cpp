#include "qent/state_io.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include <json.hpp>

namespace qent {

using nlohmann::json;

DensityMatrix parse_state_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("state file: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("dim") || !doc.contains("matrix"))
    throw ParseError("state file: expected an object with keys 'dim' and 'matrix'");
  if (!doc["dim"].is_number_integer() || doc["dim"].get<int>() != 4)
    throw ParseError("state file: dim must be 4");
  const json& rows = doc["matrix"];
  if (!rows.is_array() || rows.size() != 4) throw ParseError("state file: matrix must have 4 rows");
  Mat4 m;
  for (int i = 0; i < 4; ++i) {
    const json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || row.size() != 4)
      throw ParseError("state file: row " + std::to_string(i) + " must have 4 entries");
    for (int j = 0; j < 4; ++j) {
      const json& z = row[static_cast<std::size_t>(j)];
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number())
        throw ParseError("state file: entry (" + std::to_string(i) + ", " + std::to_string(j) +
                         ") must be [re, im]");
      m(i, j) = {z[0].get<double>(), z[1].get<double>()};
    }
  }
  return DensityMatrix::validated(m, kStateFileTol);
}

DensityMatrix read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read state file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_state_json(buf.str());
}

std::string state_to_json(const DensityMatrix& rho) {
  std::ostringstream out;
  out << std::setprecision(17);
  out << "{\"dim\": 4, \"matrix\": [\n";
  for (int i = 0; i < 4; ++i) {
    out << "  [";
    for (int j = 0; j < 4; ++j) {
      out << "[" << rho(i, j).real() << ", " << rho(i, j).imag() << "]";
      if (j < 3) out << ", ";
    }
    out << (i < 3 ? "],\n" : "]\n");
  }
  out << "]}\n";
  return out.str();
}

void write_state_file(const std::string& path, const DensityMatrix& rho) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write state file '" + path + "'");
  out << state_to_json(rho);
}

FamilyParams parse_family_params(const std::vector<std::string>& tokens) {
  FamilyParams params;
  std::string last;
  for (const std::string& tok : tokens) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) {
      if (last.empty()) throw ParseError("family parameter '" + tok + "' has no key");
      params[last] += "," + tok;
      continue;
    }
    last = tok.substr(0, eq);
    if (last.empty()) throw ParseError("family parameter '" + tok + "' has no key");
    if (params.count(last)) throw ParseError("family parameter '" + last + "' given twice");
    params[last] = tok.substr(eq + 1);
  }
  return params;
}

namespace {

double to_double(const std::string& key, const std::string& s) {
  double v = 0.0;
  const char* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || s.empty())
    throw ParseError("family parameter " + key + ": '" + s + "' is not a number");
  return v;
}

std::vector<double> to_list(const std::string& key, const std::string& s) {
  std::vector<double> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(to_double(key, item));
  return out;
}

// Rejects keys the family does not know.
void require_keys(const std::string& name, const FamilyParams& p, const std::set<std::string>& allowed) {
  for (const auto& [k, v] : p)
    if (!allowed.count(k)) throw ParseError("family " + name + ": unknown parameter '" + k + "'");
}

const std::string& one_of(const std::string& name, const FamilyParams& p, std::initializer_list<const char*> keys) {
  const std::string* found = nullptr;
  for (const char* k : keys) {
    const auto it = p.find(k);
    if (it == p.end()) continue;
    if (found) throw ParseError("family " + name + ": give only one of its parameters");
    found = &it->first;
  }
  if (!found) {
    std::string list;
    for (const char* k : keys) list += (list.empty() ? "" : ", ") + std::string(k);
    throw ParseError("family " + name + ": expected one of " + list);
  }
  return *found;
}

double need(const std::string& name, const FamilyParams& p, const std::string& key) {
  const auto it = p.find(key);
  if (it == p.end()) throw ParseError("family " + name + ": missing parameter " + key);
  return to_double(key, it->second);
}

}  // namespace

StateFamily make_family(const std::string& name, const FamilyParams& p) {
  if (name == "pure") {
    if (p.count("C") || p.count("N")) {
      require_keys(name, p, {"C", "N"});
      const std::string& key = one_of(name, p, {"C", "N"});
      return pure_with_concurrence(need(name, p, key));
    }
    require_keys(name, p, {"a", "b", "c", "d"});
    Vec4 amps;
    const char* keys[] = {"a", "b", "c", "d"};
    for (int i = 0; i < 4; ++i) amps(i) = p.count(keys[i]) ? to_double(keys[i], p.at(keys[i])) : 0.0;
    if (amps.norm() == 0.0) throw FamilyConstraint("amplitudes", "pure amplitudes are all zero");
    return family::Pure{amps / amps.norm()};
  }
  if (name == "horodecki") {
    require_keys(name, p, {"C", "N", "E"});
    const std::string& key = one_of(name, p, {"C", "N", "E"});
    const double v = need(name, p, key);
    if (key == "N") return horodecki_with_negativity(v);
    if (key == "E") return family::Horodecki{find_c_for_e(FamilyKind::Horodecki, v)};
    return family::Horodecki{v};
  }
  if (name == "bell") {
    require_keys(name, p, {"l", "C", "E"});
    const std::string& key = one_of(name, p, {"l", "C", "E"});
    if (key == "l") {
      const std::vector<double> l = to_list("l", p.at("l"));
      if (l.size() != 4) throw ParseError("family bell: l needs 4 weights, got " + std::to_string(l.size()));
      return family::BellDiagonal{{l[0], l[1], l[2], l[3]}};
    }
    const double v = need(name, p, key);
    return bell_with_concurrence(key == "E" ? find_c_for_e(FamilyKind::BellDiagonal, v) : v);
  }
  if (name == "werner") {
    require_keys(name, p, {"C"});
    return family::Werner{need(name, p, "C")};
  }
  if (name == "x") {
    require_keys(name, p, {"C"});
    return family::X{need(name, p, "C")};
  }
  if (name == "y") {
    require_keys(name, p, {"A", "C"});
    return family::Y{need(name, p, "A"), need(name, p, "C")};
  }
  if (name == "z") {
    require_keys(name, p, {"C", "N"});
    return family::Z{need(name, p, "C"), need(name, p, "N")};
  }
  throw ParseError("unknown family '" + name + "' (expected pure, horodecki, bell, werner, x, y or z)");
}

StateFamily parse_family_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw ParseError("family spec '" + spec + "' lacks 'name:'");
  std::vector<std::string> tokens;
  std::stringstream in(spec.substr(colon + 1));
  std::string tok;
  while (std::getline(in, tok, ',')) tokens.push_back(tok);
  return make_family(spec.substr(0, colon), parse_family_params(tokens));
}

TaggedState resolve_state(const std::string& path_or_spec) {
  if (path_or_spec.find(':') != std::string::npos && !std::filesystem::exists(path_or_spec))
    return TaggedState::from_family(parse_family_spec(path_or_spec));
  return TaggedState{read_state_file(path_or_spec), std::nullopt};
}

std::string format_number(double v, int digits) {
  std::ostringstream out;
  out << std::setprecision(digits) << v;
  return out.str();
}

CsvWriter::CsvWriter(std::ostream& out, std::vector<std::string> header) : out_(out), width_(header.size()) {
  row_ = std::move(header);
  end_row();
}

void CsvWriter::cell(const std::string& s) { row_.push_back(s); }

CsvWriter& CsvWriter::operator<<(double v) {
  cell(format_number(v));
  return *this;
}
CsvWriter& CsvWriter::operator<<(long long v) {
  cell(std::to_string(v));
  return *this;
}
CsvWriter& CsvWriter::operator<<(std::uint64_t v) {
  cell(std::to_string(v));
  return *this;
}
CsvWriter& CsvWriter::operator<<(bool v) {
  cell(v ? "1" : "0");
  return *this;
}
CsvWriter& CsvWriter::operator<<(const std::string& v) {
  cell(v);
  return *this;
}

void CsvWriter::end_row() {
  if (row_.size() != width_)
    throw Error("csv: row has " + std::to_string(row_.size()) + " cells, header has " + std::to_string(width_));
  for (std::size_t i = 0; i < row_.size(); ++i) out_ << (i ? "," : "") << row_[i];
  out_ << '\n';
  row_.clear();
}

}  // namespace qent
