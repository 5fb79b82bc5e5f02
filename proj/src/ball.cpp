#include "wngt/ball.hpp"

#include <omp.h>

#include <algorithm>
#include <deque>
#include <tuple>
#include <unordered_map>

namespace wngt {

int Ball::length_of(size_t i) const {
  auto it = std::upper_bound(level_start.begin(), level_start.end(), int(i));
  return int(it - level_start.begin()) - 1;
}

std::vector<int> Ball::word(size_t i) const {
  std::vector<int> w;
  for (int j = int(i); parent[j] >= 0; j = parent[j]) w.push_back(gen[j]);
  std::reverse(w.begin(), w.end());
  return w;
}

Ball ball_serial(const System& sys, int radius) {
  Ball ball{sys, radius, {}, {}, {}, {}};
  std::vector<Element> gens;
  for (int i = 0; i <= sys.rank; ++i) gens.push_back(simple_reflection(sys, i));
  std::unordered_map<Element, int, ElementHash> seen;
  std::vector<int> len;
  ball.elems.push_back(identity(sys));
  ball.parent.push_back(-1);
  ball.gen.push_back(-1);
  len.push_back(0);
  seen.emplace(ball.elems[0], 0);
  for (size_t head = 0; head < ball.elems.size(); ++head) {
    if (len[head] == radius) continue;
    for (int i = 0; i <= sys.rank; ++i) {
      Element y = multiply(sys, gens[i], ball.elems[head]);
      if (seen.count(y)) continue;
      seen.emplace(y, int(ball.elems.size()));
      ball.elems.push_back(std::move(y));
      ball.parent.push_back(int(head));
      ball.gen.push_back(i);
      len.push_back(len[head] + 1);
    }
  }
  for (int l = 0, i = 0; l <= radius + 1; ++l) {
    while (i < (int)len.size() && len[i] < l) ++i;
    ball.level_start.push_back(i);
  }
  return ball;
}

Ball ball_parallel(const System& sys, int radius, int threads) {
  if (threads > 0) omp_set_num_threads(threads);
  Ball ball{sys, radius, {identity(sys)}, {-1}, {-1}, {0, 1}};
  std::vector<Element> gens;
  std::vector<AffineRoot> simple;
  for (int i = 0; i <= sys.rank; ++i) {
    gens.push_back(simple_reflection(sys, i));
    simple.push_back(simple_affine_root(sys, i));
  }
  using Cand = std::tuple<Element, int, int>;
  for (int l = 0; l < radius; ++l) {
    const int lo = ball.level_start[l], hi = ball.level_start[l + 1];
    std::vector<std::vector<Cand>> local(omp_get_max_threads());
#pragma omp parallel for schedule(dynamic, 64)
    for (int x = lo; x < hi; ++x) {
      auto& out = local[omp_get_thread_num()];
      Element xi = inverse(sys, ball.elems[x]);
      for (int i = 0; i <= sys.rank; ++i) {
        // l(s_i x) > l(x) iff x^{-1}(alpha_i) > 0
        if (!is_positive(act(sys, xi, simple[i]))) continue;
        out.emplace_back(multiply(sys, gens[i], ball.elems[x]), x, i);
      }
    }
    std::vector<Cand> all;
    for (auto& v : local)
      for (auto& c : v) all.push_back(std::move(c));
    std::sort(all.begin(), all.end());
    for (size_t j = 0; j < all.size(); ++j) {
      if (j > 0 && std::get<0>(all[j]) == std::get<0>(all[j - 1])) continue;
      ball.elems.push_back(std::get<0>(all[j]));
      ball.parent.push_back(std::get<1>(all[j]));
      ball.gen.push_back(std::get<2>(all[j]));
    }
    ball.level_start.push_back(int(ball.elems.size()));
  }
  return ball;
}

}  // namespace wngt
