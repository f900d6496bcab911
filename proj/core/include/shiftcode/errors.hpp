#ifndef SHIFTCODE_ERRORS_HPP
#define SHIFTCODE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace shiftcode {

/// Machine-parsable failure categories. The CLI prints the short name of
/// the category on stderr before the human-readable message.
enum class errc {
  distinct_violation,   // input reals are not pairwise distinct
  invalid_code,         // rank code violates 1 <= t_i <= i
  invalid_word,         // simplex word is not a permutation of 0..n-1
  cannot_shrink,        // length-1 input to a shrinking map
  insufficient_data,    // requested more output than the input supports
  resource_guard,       // factorial-size enumeration refused
  invalid_tableau,      // tableau is not standard / rows not increasing
  shape_mismatch,       // P and Q shapes differ
  interval_error,       // not a 2-interval of the graph
  transfer_state,       // malformed Markov transfer state
  unsupported_graph,    // graph has no distinguished transfer
  parse_error,          // malformed textual input
};

const char* errc_name(errc c) noexcept;

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace shiftcode

#endif  // SHIFTCODE_ERRORS_HPP
