#pragma once

// Independent dimension oracle: Freudenthal's multiplicity recursion over
// dominant weights, summed with Weyl orbit sizes. Shares nothing with the
// product formula beyond the Cartan data.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "lowcohom/liecore.hpp"

namespace oracle {

using lowcohom::HighestWeight;
using lowcohom::RootSystem;

inline mpz_class factorial(int n) {
  mpz_class f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Order of the Weyl group of the parabolic subsystem on `nodes`.
inline mpz_class parabolic_weyl_order(const RootSystem& rs, const std::vector<int>& nodes) {
  const int n = rs.rank();
  std::vector<bool> in(n, false);
  for (int v : nodes) in[v] = true;
  std::vector<bool> visited(n, false);
  mpz_class order = 1;
  for (int start : nodes) {
    if (visited[start]) continue;
    std::vector<int> comp{start};
    visited[start] = true;
    for (std::size_t k = 0; k < comp.size(); ++k)
      for (int j = 0; j < n; ++j)
        if (in[j] && !visited[j] && rs.cartan[comp[k]][j] != 0) {
          visited[j] = true;
          comp.push_back(j);
        }
    const int k = static_cast<int>(comp.size());
    int bond = 1;
    std::vector<int> degree(n, 0);
    for (int a : comp)
      for (int b : comp)
        if (a < b && rs.cartan[a][b] != 0) {
          bond = std::max(bond, rs.cartan[a][b] * rs.cartan[b][a]);
          ++degree[a];
          ++degree[b];
        }
    int branch = -1;
    for (int a : comp)
      if (degree[a] == 3) branch = a;
    if (bond == 3) {
      order *= 12;
    } else if (bond == 2) {
      bool end_double = false;
      for (int a : comp)
        for (int b : comp)
          if (rs.cartan[a][b] * rs.cartan[b][a] == 2 && (degree[a] == 1 || degree[b] == 1)) end_double = true;
      if (k == 2 || end_double)
        order *= mpz_class(1) << k, order *= factorial(k);
      else
        order *= 1152;
    } else if (branch >= 0) {
      // arm lengths from the branch node
      std::vector<int> arms;
      for (int j : comp) {
        if (rs.cartan[branch][j] == 0 || j == branch) continue;
        int len = 1, prev = branch, cur = j;
        while (true) {
          int next = -1;
          for (int x : comp)
            if (x != prev && x != cur && rs.cartan[cur][x] != 0) next = x;
          if (next < 0) break;
          prev = cur;
          cur = next;
          ++len;
        }
        arms.push_back(len);
      }
      std::sort(arms.begin(), arms.end());
      if (arms[1] == 1) {
        order *= mpz_class(1) << (k - 1), order *= factorial(k);
      } else if (k == 6) {
        order *= 51840;
      } else if (k == 7) {
        order *= 2903040;
      } else {
        order *= 696729600;
      }
    } else {
      order *= factorial(k + 1);
    }
  }
  return order;
}

inline mpz_class weyl_order(const RootSystem& rs) {
  std::vector<int> all(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) all[i] = i;
  return parabolic_weyl_order(rs, all);
}

// Simple root alpha_j expressed in fundamental weights is row j of the Cartan matrix.
inline std::vector<int> root_in_weights(const RootSystem& rs, const std::vector<int>& simple_coords) {
  std::vector<int> w(rs.rank(), 0);
  for (int j = 0; j < rs.rank(); ++j)
    for (int i = 0; i < rs.rank(); ++i) w[i] += simple_coords[j] * rs.cartan[j][i];
  return w;
}

inline HighestWeight to_dominant(const RootSystem& rs, HighestWeight mu) {
  while (true) {
    int i = 0;
    while (i < rs.rank() && mu[i] >= 0) ++i;
    if (i == rs.rank()) return mu;
    const int c = mu[i];
    for (int k = 0; k < rs.rank(); ++k) mu[k] -= c * rs.cartan[i][k];
  }
}

struct DominantMultiplicities {
  std::map<HighestWeight, mpz_class> mult;
  std::vector<HighestWeight> order;  // by depth
};

inline DominantMultiplicities freudenthal(const lowcohom::SimpleGroupType& t, const HighestWeight& lambda) {
  const auto& rs = lowcohom::root_system(t);
  const int n = rs.rank();
  std::vector<std::vector<int>> roots_w;
  for (const auto& r : rs.positive_roots) roots_w.push_back(root_in_weights(rs, r));

  // (x, alpha_j) = x_j (alpha_j, alpha_j) / 2; every diagonal entry is even.
  auto pair_simple = [&](const std::vector<int>& x, int j) -> long { return long(x[j]) * rs.form[j][j] / 2; };
  auto pair_root = [&](const std::vector<int>& x, const std::vector<int>& simple) {
    long s = 0;
    for (int j = 0; j < n; ++j) s += simple[j] * pair_simple(x, j);
    return s;
  };

  // Dominant weights below lambda, tagged with lambda - mu in simple roots.
  std::map<HighestWeight, std::vector<int>> depth{{lambda, std::vector<int>(n, 0)}};
  std::vector<HighestWeight> queue{lambda};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const auto mu = queue[q];
    for (std::size_t r = 0; r < rs.positive_roots.size(); ++r) {
      HighestWeight nu = mu;
      bool dominant = true;
      for (int i = 0; i < n; ++i) {
        nu[i] -= roots_w[r][i];
        dominant = dominant && nu[i] >= 0;
      }
      if (!dominant || depth.count(nu)) continue;
      auto d = depth[mu];
      for (int i = 0; i < n; ++i) d[i] += rs.positive_roots[r][i];
      depth[nu] = d;
      queue.push_back(nu);
    }
  }
  auto height = [](const std::vector<int>& d) {
    int h = 0;
    for (int x : d) h += x;
    return h;
  };
  std::stable_sort(queue.begin(), queue.end(),
                   [&](const auto& a, const auto& b) { return height(depth[a]) < height(depth[b]); });

  DominantMultiplicities out;
  out.order = queue;
  out.mult[lambda] = 1;
  for (std::size_t q = 1; q < queue.size(); ++q) {
    const auto& mu = queue[q];
    const auto& d = depth[mu];
    // (lambda+rho)^2 - (mu+rho)^2 = (lambda - mu, lambda + mu + 2 rho)
    std::vector<int> s(n);
    for (int i = 0; i < n; ++i) s[i] = lambda[i] + mu[i] + 2;
    long denom = 0;
    for (int j = 0; j < n; ++j) denom += d[j] * pair_simple(s, j);
    mpz_class num = 0;
    for (std::size_t r = 0; r < rs.positive_roots.size(); ++r) {
      for (int k = 1;; ++k) {
        HighestWeight x = mu;
        for (int i = 0; i < n; ++i) x[i] += k * roots_w[r][i];
        auto it = out.mult.find(to_dominant(rs, x));
        if (it == out.mult.end()) break;
        num += it->second * pair_root(x, rs.positive_roots[r]);
      }
    }
    num *= 2;
    out.mult[mu] = num / denom;
  }
  return out;
}

inline mpz_class freudenthal_dim(const lowcohom::SimpleGroupType& t, const HighestWeight& lambda) {
  const auto& rs = lowcohom::root_system(t);
  const auto fm = freudenthal(t, lambda);
  const mpz_class w = weyl_order(rs);
  mpz_class total = 0;
  for (const auto& [mu, m] : fm.mult) {
    std::vector<int> zeros;
    for (int i = 0; i < rs.rank(); ++i)
      if (mu[i] == 0) zeros.push_back(i);
    total += m * (w / parabolic_weyl_order(rs, zeros));
  }
  return total;
}

}  // namespace oracle
