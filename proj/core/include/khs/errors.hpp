#pragma once

#include <stdexcept>
#include <string>

namespace khs {

// Error taxonomy shared across the library. Each kind corresponds to one
// documented failure mode of a public operation; the CLI maps kinds to
// exit codes.
enum class errc {
  malformed_token,
  arc_label_used_wrong_number_of_times,
  inconsistent_orientation,
  empty_word,
  not_a_knot,
  file_unreadable,
  bad_row,
  duplicate_name,
  bit_length_mismatch,
  arity_mismatch,
  dimension_cap_exceeded,
  degree_mixed,
  bad_cuts,
  row_mismatch,
  empty_homology,
  disconnected_adjacency,
  not_a_cycle,
  pattern_mismatch,
  transport_failed,
  singular_form,
  internal,
};

class error : public std::runtime_error {
 public:
  error(errc kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  errc kind() const { return kind_; }

 private:
  errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& what) { throw error(kind, what); }

}  // namespace khs
