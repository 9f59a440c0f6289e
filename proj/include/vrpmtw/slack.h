#pragma once

#include <span>
#include <vector>

#include "vrpmtw/instance.h"

namespace vrpmtw {

// Routes are visit sequences with implicit depots. Extended position 0 is
// the start depot, 1..n the visits and n + 1 the end depot.
inline int node_at(std::span<const int> route, std::size_t position) {
  return position == 0 || position > route.size() ? 0 : route[position - 1];
}

// Earliest and latest service start per extended position for the
// distance-only variant. Unreachable positions hold +inf (es) or -inf (ls).
struct SlackState {
  std::vector<Time> es;
  std::vector<Time> ls;
  bool feasible = false;

  friend bool operator==(const SlackState&, const SlackState&) = default;
};

SlackState update_slacks(const Instance& instance, std::span<const int> route);

// Incremental update after an edit of `route`. es is kept for new positions
// below `es_from`; ls of new positions >= `ls_from` is copied from old
// position (p - shift), shift being new length minus old length.
void refresh_slacks(SlackState& state, const Instance& instance, std::span<const int> route,
                    std::size_t es_from, std::size_t ls_from, std::ptrdiff_t shift);

// Per window of `visit`: can it be served in that window when inserted
// between extended positions `after` and `after + 1`.
std::vector<bool> feasible_insertion_b0(const Instance& instance, std::span<const int> route,
                                        const SlackState& state, std::size_t after, int visit);

// Index of the first window that admits the insertion, or -1.
int first_feasible_window(const Instance& instance, std::span<const int> route,
                          const SlackState& state, std::size_t after, int visit);

// Arc-cost change of inserting `visit` between `after` and `after + 1`.
double delta_distance(const Instance& instance, std::span<const int> route, std::size_t after, int visit);

}  // namespace vrpmtw
