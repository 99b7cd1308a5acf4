#pragma once

#include <string>
#include <vector>

#include "hitchin2/nrham.hpp"

namespace hitchin2 {

enum class EmitFormat { Canonical, Latex, Json };

EmitFormat emit_format_from_name(const std::string& name);

const std::vector<std::string>& emit_object_names();

// Renders one of the named formula objects. hamiltonians-u honors the
// source switch; hamiltonians-rst is always produced from the determinant
// expansion, never from the stored table.
std::string emit_object(const std::string& object, EmitFormat format,
                        Table2Source table2_source = Table2Source::Derived);

}  // namespace hitchin2
