#pragma once

#include <cstddef>
#include <vector>

namespace wqo::detail {

  // Kuhn's augmenting paths.  Returns true iff every left vertex can be
  // matched to a distinct right vertex; adj[l] lists the right neighbours.
  class BipartiteMatcher {
    public:
      BipartiteMatcher (std::size_t left, std::size_t right)
        : adj (left), match_right (right, npos) {}

      void add_edge (std::size_t l, std::size_t r) { adj[l].push_back (r); }

      bool saturates_left () {
        if (adj.size () > match_right.size ())
          return false;
        for (std::size_t l = 0; l < adj.size (); ++l) {
          visited.assign (match_right.size (), false);
          if (not augment (l))
            return false;
        }
        return true;
      }

    private:
      static constexpr std::size_t npos = static_cast<std::size_t> (-1);

      bool augment (std::size_t l) {
        for (auto r : adj[l]) {
          if (visited[r])
            continue;
          visited[r] = true;
          if (match_right[r] == npos or augment (match_right[r])) {
            match_right[r] = l;
            return true;
          }
        }
        return false;
      }

      std::vector<std::vector<std::size_t>> adj;
      std::vector<std::size_t> match_right;
      std::vector<bool> visited;
  };
}
