#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "jbdet/c6_auto.hpp"
#include "jbdet/cd.hpp"
#include "jbdet/jordan.hpp"
#include "jbdet/reduce.hpp"

namespace jbdet::io {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Malformed or schema-violating input.
class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class DocKind { cd_element, herm_biquat, c6_element };
std::string to_string(DocKind k);

struct Document {
  DocKind kind = DocKind::cd_element;
  std::optional<CDElement> cd;
  std::optional<HermMatrix> herm;  // herm_biquat and c6_element
};

json encode_complex(cplx z);
cplx decode_complex(const json& j);

/// Canonical form: the full matrix, row by row, each entry a list of 2^level
/// [re, im] pairs.
json encode(const CDElement& x);
json encode(const HermMatrix& x);
Document decode(const json& j);

Document parse_document(const std::string& text);
Document read_document(const std::string& path);
void write_text(const std::string& path, const std::string& text);

json encode(const C6Auto& a);
json encode(const ReductionCertificate& c);

}  // namespace jbdet::io
