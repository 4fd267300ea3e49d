#pragma once

#include <span>

#include "depval/io/registry.hpp"
#include "depval/io/report.hpp"

namespace depval::io {

/// Values every record (intrinsic value at its age plus the full intrinsic
/// schedule). Records that fail parsing or domain validation land in
/// `errors`; the rest are still processed. Output keeps input order.
BatchReport value_registry(std::span<const RegistryRow> rows);

}  // namespace depval::io
