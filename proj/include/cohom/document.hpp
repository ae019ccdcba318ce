#pragma once

#include "cohom/diagram.hpp"

#include <string>

namespace cohom {

/// Parse a diagram document (JSON text). Schema problems raise Parse errors.
GroupDiagram parse_document(const std::string& json_text);
GroupDiagram load_document(const std::string& path);

/// Serialize back to the document schema with canonical scalar strings.
std::string dump_document(const GroupDiagram& d);

std::string read_file(const std::string& path);

} // namespace cohom
