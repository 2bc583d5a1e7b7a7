#include "document.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "jbdet/errors.hpp"

namespace jbdet::io {

namespace {

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw DocumentError(std::string("missing field '") + name + "'");
  return j.at(name);
}

int int_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_integer()) throw DocumentError(std::string("field '") + name + "' must be an integer");
  return v.get<int>();
}

CDElement decode_entry(const json& j, int level) {
  const std::size_t dim = std::size_t{1} << level;
  if (!j.is_array() || j.size() != dim) {
    throw DocumentError("entry must be a list of " + std::to_string(dim) + " [re, im] pairs");
  }
  CDElement x(level);
  for (std::size_t k = 0; k < dim; ++k) x[k] = decode_complex(j[k]);
  return x;
}

json encode_entry(const CDElement& x) {
  json a = json::array();
  for (const cplx& z : x.coords()) a.push_back(encode_complex(z));
  return a;
}

DocKind parse_kind(const std::string& s) {
  if (s == "cd_element") return DocKind::cd_element;
  if (s == "herm_biquat") return DocKind::herm_biquat;
  if (s == "c6_element") return DocKind::c6_element;
  throw DocumentError("unknown kind '" + s + "'");
}

}  // namespace

std::string to_string(DocKind k) {
  switch (k) {
    case DocKind::cd_element: return "cd_element";
    case DocKind::herm_biquat: return "herm_biquat";
    case DocKind::c6_element: return "c6_element";
  }
  return "unknown";
}

json encode_complex(cplx z) { return json::array({z.real(), z.imag()}); }

cplx decode_complex(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw DocumentError("complex numbers are encoded as [re, im]");
  }
  const double re = j[0].get<double>(), im = j[1].get<double>();
  if (!std::isfinite(re) || !std::isfinite(im)) throw DocumentError("non-finite complex number");
  return {re, im};
}

json encode(const CDElement& x) {
  return {{"schema_version", kSchemaVersion}, {"kind", "cd_element"}, {"level", x.level()}, {"data", encode_entry(x)}};
}

json encode(const HermMatrix& x) {
  const bool c6 = x.level() == 3 && x.order() == 3;
  if (!c6 && x.level() != 2) throw DocumentError("only biquaternionic and C6 matrices have a document kind");
  const CDMatrix m = x.to_matrix();
  json rows = json::array();
  for (int i = 0; i < m.order(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.order(); ++j) row.push_back(encode_entry(m(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"schema_version", kSchemaVersion},
          {"kind", c6 ? "c6_element" : "herm_biquat"},
          {"order", x.order()},
          {"level", x.level()},
          {"data", std::move(rows)}};
}

Document decode(const json& j) {
  if (!j.is_object()) throw DocumentError("document must be a JSON object");
  const int version = int_field(j, "schema_version");
  if (version != kSchemaVersion) throw DocumentError("unsupported schema_version " + std::to_string(version));
  const json& kind = field(j, "kind");
  if (!kind.is_string()) throw DocumentError("field 'kind' must be a string");
  Document d;
  d.kind = parse_kind(kind.get<std::string>());
  const json& data = field(j, "data");

  if (d.kind == DocKind::cd_element) {
    const int level = int_field(j, "level");
    if (level < 0 || level > 8) throw DocumentError("level out of range");
    d.cd = decode_entry(data, level);
    return d;
  }

  const int order = int_field(j, "order");
  const int level = int_field(j, "level");
  if (d.kind == DocKind::herm_biquat && (level != 2 || order < 1 || order > 16)) {
    throw DocumentError("herm_biquat needs level 2 and 1 <= order <= 16");
  }
  if (d.kind == DocKind::c6_element && (level != 3 || order != 3)) {
    throw DocumentError("c6_element needs order 3 and level 3");
  }
  if (!data.is_array() || data.size() != static_cast<std::size_t>(order)) {
    throw DocumentError("data must have " + std::to_string(order) + " rows");
  }
  CDMatrix m(order, level);
  double scale = 0.0;
  for (int r = 0; r < order; ++r) {
    const json& row = data[static_cast<std::size_t>(r)];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(order)) {
      throw DocumentError("row " + std::to_string(r + 1) + " must have " + std::to_string(order) + " entries");
    }
    for (int c = 0; c < order; ++c) {
      m(r, c) = decode_entry(row[static_cast<std::size_t>(c)], level);
      scale = std::max(scale, m(r, c).max_abs());
    }
  }
  try {
    d.herm = HermMatrix::from_matrix(m, 1e-12 * (1.0 + scale));
  } catch (const DomainError& e) {
    throw DocumentError(e.what());
  }
  return d;
}

Document parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError(std::string("malformed JSON: ") + e.what());
  }
  return decode(j);
}

Document read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DocumentError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw DocumentError("cannot write " + path);
  out << text;
}

json encode(const C6Auto& a) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < a.map.matrix.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < a.map.matrix.cols(); ++c) row.push_back(encode_complex(a.map.matrix(r, c)));
    rows.push_back(std::move(row));
  }
  return {{"kind", to_string(a.kind)},
          {"conjugate_linear", a.map.conjugate_linear},
          {"order", a.map.order},
          {"level", a.map.level},
          {"provenance", a.provenance},
          {"matrix", std::move(rows)}};
}

json encode(const ReductionCertificate& c) {
  json steps = json::array();
  for (const auto& s : c.steps) steps.push_back({{"label", s.label}, {"residual", s.residual}});
  return {{"case_path", c.case_path}, {"worst_residual", c.worst_residual}, {"steps", std::move(steps)}};
}

}  // namespace jbdet::io
