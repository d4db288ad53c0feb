#include "cqa/digraph.hpp"

#include <algorithm>
#include <limits>

namespace cqa {

std::vector<std::size_t> strongly_connected_components(const Adjacency& graph,
                                                       std::size_t* component_count) {
  constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();
  const std::size_t n = graph.size();
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0), component(n, kUnvisited);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::size_t next_index = 0, next_component = 0;

  struct Frame {
    std::size_t vertex;
    std::size_t child;
  };
  std::vector<Frame> call;

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call.push_back({root, 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!call.empty()) {
      Frame& frame = call.back();
      std::size_t v = frame.vertex;
      if (frame.child < graph[v].size()) {
        std::size_t w = graph[v][frame.child++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          component[w] = next_component;
        } while (w != v);
        ++next_component;
      }
      call.pop_back();
      if (!call.empty()) {
        std::size_t parent = call.back().vertex;
        low[parent] = std::min(low[parent], low[v]);
      }
    }
  }
  if (component_count) *component_count = next_component;
  return component;
}

}  // namespace cqa
