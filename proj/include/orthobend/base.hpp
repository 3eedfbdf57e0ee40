#pragma once

#include <stdexcept>
#include <string>

namespace orthobend {

enum class errc {
  duplicate_edge,
  self_loop,
  degree_exceeded,
  dangling_index,
  non_planar_rotation,
  not_planar,
  not_biconnected,
  disconnected,
  smooth_would_create_multi_edge,
  path_not_in_graph,
  paths_disagree,
  unclassified_shape,
  root_has_no_pertinent,
  malformed_p_node,
  malformed_s_node,
  malformed_r_node,
  no_rectangular_drawing,
  conditions_violated,
  not_equivalent,
  orientation_unresolvable,
  invalid_representation,
  isolated_vertex,
  too_large,
  not_planar_embedding,
  bad_input,
  internal,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

// Internal invariant check; failures indicate a bug, not bad input.
inline void require(bool cond, const char* what) {
  if (!cond) throw error(errc::internal, what);
}

}  // namespace orthobend
