#include "shiftcode/errors.hpp"

namespace shiftcode {

const char* errc_name(errc c) noexcept {
  switch (c) {
    case errc::distinct_violation: return "distinct_violation";
    case errc::invalid_code: return "invalid_code";
    case errc::invalid_word: return "invalid_word";
    case errc::cannot_shrink: return "cannot_shrink";
    case errc::insufficient_data: return "insufficient_data";
    case errc::resource_guard: return "resource_guard";
    case errc::invalid_tableau: return "invalid_tableau";
    case errc::shape_mismatch: return "shape_mismatch";
    case errc::interval_error: return "interval_error";
    case errc::transfer_state: return "transfer_state";
    case errc::unsupported_graph: return "unsupported_graph";
    case errc::parse_error: return "parse_error";
  }
  return "unknown";
}

}  // namespace shiftcode
