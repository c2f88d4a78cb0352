#include "sepcat/presentations.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace sepcat {

FiniteGroup cyclic_group(std::size_t n) {
  FiniteGroup g;
  for (std::size_t i = 0; i < n; ++i) {
    g.names.push_back(i == 0 ? "e" : i == 1 ? "g" : "g" + std::to_string(i));
  }
  g.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) g.table[a][b] = (a + b) % n;
  }
  return g;
}

FiniteGroup product_group(const FiniteGroup& a, const FiniteGroup& b) {
  FiniteGroup g;
  const std::size_t nb = b.order();
  for (std::size_t i = 0; i < a.order(); ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      g.names.push_back(i == 0 && j == 0 ? "e" : a.names[i] + "." + b.names[j]);
    }
  }
  const std::size_t n = g.names.size();
  g.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      g.table[x][y] = a.table[x / nb][y / nb] * nb + b.table[x % nb][y % nb];
    }
  }
  return g;
}

FiniteGroup klein_four_group() {
  FiniteGroup g = product_group(cyclic_group(2), cyclic_group(2));
  g.names = {"e", "a", "b", "ab"};
  return g;
}

FiniteGroup symmetric_group_3() {
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  FiniteGroup g;
  for (const auto& q : perms) g.names.push_back("s" + std::to_string(q[0]) + std::to_string(q[1]) + std::to_string(q[2]));
  g.names[0] = "e";
  g.table.assign(perms.size(), std::vector<std::size_t>(perms.size()));
  for (std::size_t a = 0; a < perms.size(); ++a) {
    for (std::size_t b = 0; b < perms.size(); ++b) {
      std::vector<std::size_t> ab(3);
      for (std::size_t i = 0; i < 3; ++i) ab[i] = perms[a][perms[b][i]];
      g.table[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), ab) - perms.begin());
    }
  }
  return g;
}

FiniteCatPresentation group_category(const FiniteGroup& g, const std::string& object) {
  FiniteCatPresentation p;
  p.objects = {object};
  for (const auto& name : g.names) p.arrows.push_back({name, 0, 0});
  p.identity = {0};
  for (std::size_t a = 0; a < g.order(); ++a) {
    for (std::size_t b = 0; b < g.order(); ++b) p.composition[{a, b}] = g.table[a][b];
    for (std::size_t b = 0; b < g.order(); ++b) {
      if (g.table[a][b] == 0) p.inverse[a] = b;
    }
  }
  return p;
}

FiniteCatPresentation connected_groupoid(const std::vector<std::string>& objects, const FiniteGroup& g) {
  FiniteCatPresentation p;
  p.objects = objects;
  const std::size_t n = objects.size();
  const std::size_t order = g.order();
  auto index = [&](std::size_t i, std::size_t j, std::size_t e) { return (i * n + j) * order + e; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t e = 0; e < order; ++e) {
        p.arrows.push_back({g.names[e] + ":" + objects[i] + "->" + objects[j], i, j});
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) p.identity.push_back(index(i, i, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t a = 0; a < order; ++a) {
          for (std::size_t b = 0; b < order; ++b) {
            // (j,k,b) o (i,j,a) = (i,k,b·a)
            p.composition[{index(j, k, b), index(i, j, a)}] = index(i, k, g.table[b][a]);
          }
        }
      }
      for (std::size_t a = 0; a < order; ++a) {
        for (std::size_t b = 0; b < order; ++b) {
          if (g.table[b][a] == 0) p.inverse[index(i, j, a)] = index(j, i, b);
        }
      }
    }
  }
  return p;
}

FiniteCatPresentation poset_category(const std::vector<std::string>& objects,
                                     const std::vector<std::pair<std::size_t, std::size_t>>& less) {
  const std::size_t n = objects.size();
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) le[i][i] = true;
  for (const auto& [a, b] : less) le[a][b] = true;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (le[i][k] && le[k][j]) le[i][j] = true;
      }
    }
  }
  FiniteCatPresentation p;
  p.objects = objects;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> arrow_of;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!le[i][j]) continue;
      arrow_of[{i, j}] = p.arrows.size();
      p.arrows.push_back({i == j ? "1_" + objects[i] : objects[i] + "<" + objects[j], i, j});
    }
  }
  for (std::size_t i = 0; i < n; ++i) p.identity.push_back(arrow_of.at({i, i}));
  for (const auto& [ij, f] : arrow_of) {
    for (const auto& [jk, g] : arrow_of) {
      if (ij.second == jk.first) p.composition[{g, f}] = arrow_of.at({ij.first, jk.second});
    }
  }
  for (std::size_t i = 0; i < n; ++i) p.inverse[p.identity[i]] = p.identity[i];
  return p;
}

FiniteCatPresentation chain_poset(std::size_t n) {
  std::vector<std::string> objects;
  std::vector<std::pair<std::size_t, std::size_t>> less;
  for (std::size_t i = 0; i < n; ++i) {
    objects.push_back("x" + std::to_string(i + 1));
    if (i > 0) less.emplace_back(i - 1, i);
  }
  return poset_category(objects, less);
}

FiniteCatPresentation discrete_category(std::size_t n) {
  std::vector<std::string> objects;
  for (std::size_t i = 0; i < n; ++i) objects.push_back("x" + std::to_string(i + 1));
  return poset_category(objects, {});
}

FiniteCatPresentation transformation_monoid(std::size_t points,
                                            const std::vector<std::vector<std::size_t>>& generators) {
  using Map = std::vector<std::size_t>;
  Map id(points);
  for (std::size_t i = 0; i < points; ++i) id[i] = i;
  std::vector<Map> elements{id};
  for (const Map& g : generators) {
    if (std::find(elements.begin(), elements.end(), g) == elements.end()) elements.push_back(g);
  }
  // close under composition
  for (bool grew = true; grew;) {
    grew = false;
    const std::size_t size = elements.size();
    for (std::size_t a = 0; a < size; ++a) {
      for (std::size_t b = 0; b < size; ++b) {
        Map ab(points);
        for (std::size_t i = 0; i < points; ++i) ab[i] = elements[a][elements[b][i]];
        if (std::find(elements.begin(), elements.end(), ab) == elements.end()) {
          elements.push_back(ab);
          grew = true;
        }
      }
    }
  }
  FiniteCatPresentation p;
  p.objects = {"x"};
  for (const Map& m : elements) {
    std::string name = "t";
    for (std::size_t v : m) name += std::to_string(v);
    p.arrows.push_back({name, 0, 0});
  }
  p.identity = {0};
  for (std::size_t a = 0; a < elements.size(); ++a) {
    for (std::size_t b = 0; b < elements.size(); ++b) {
      Map ab(points);
      for (std::size_t i = 0; i < points; ++i) ab[i] = elements[a][elements[b][i]];
      p.composition[{a, b}] =
          static_cast<std::size_t>(std::find(elements.begin(), elements.end(), ab) - elements.begin());
    }
  }
  return p;
}

FiniteCatPresentation disjoint_union(const FiniteCatPresentation& a, const FiniteCatPresentation& b,
                                     const std::string& prefix_a, const std::string& prefix_b) {
  FiniteCatPresentation p;
  const std::size_t na = a.objects.size();
  const std::size_t ma = a.arrows.size();
  for (const auto& o : a.objects) p.objects.push_back(prefix_a + o);
  for (const auto& o : b.objects) p.objects.push_back(prefix_b + o);
  for (const auto& ar : a.arrows) p.arrows.push_back({prefix_a + ar.name, ar.from, ar.to});
  for (const auto& ar : b.arrows) p.arrows.push_back({prefix_b + ar.name, ar.from + na, ar.to + na});
  p.identity = a.identity;
  for (std::size_t id : b.identity) p.identity.push_back(id + ma);
  p.composition = a.composition;
  for (const auto& [key, r] : b.composition) p.composition[{key.first + ma, key.second + ma}] = r + ma;
  p.inverse = a.inverse;
  for (const auto& [f, g] : b.inverse) p.inverse[f + ma] = g + ma;
  return p;
}

namespace {

// Uniform-enough integer in [0, n) from the standardized mt19937_64 stream;
// std::uniform_int_distribution is implementation-defined.
std::size_t draw(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

FiniteCatPresentation random_poset(std::mt19937_64& rng) {
  const std::size_t n = 2 + draw(rng, 3);
  std::vector<std::string> objects;
  for (std::size_t i = 0; i < n; ++i) objects.push_back("p" + std::to_string(i));
  std::vector<std::pair<std::size_t, std::size_t>> less;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (draw(rng, 3) == 0) less.emplace_back(i, j);
    }
  }
  return poset_category(objects, less);
}

FiniteGroup random_small_group(std::mt19937_64& rng) {
  switch (draw(rng, 4)) {
    case 0: return cyclic_group(1);
    case 1: return cyclic_group(2);
    case 2: return cyclic_group(3);
    default: return klein_four_group();
  }
}

FiniteCatPresentation random_groupoid(std::mt19937_64& rng) {
  const FiniteGroup g = random_small_group(rng);
  const std::size_t n = g.order() >= 3 ? 1 : 1 + draw(rng, 2);
  std::vector<std::string> objects;
  for (std::size_t i = 0; i < n; ++i) objects.push_back("o" + std::to_string(i));
  return connected_groupoid(objects, g);
}

FiniteCatPresentation random_monoid(std::mt19937_64& rng) {
  for (;;) {
    const std::size_t points = 2 + draw(rng, 2);
    const std::size_t gens = 1 + draw(rng, 2);
    std::vector<std::vector<std::size_t>> generators;
    for (std::size_t k = 0; k < gens; ++k) {
      std::vector<std::size_t> m(points);
      for (auto& v : m) v = draw(rng, points);
      generators.push_back(m);
    }
    FiniteCatPresentation p = transformation_monoid(points, generators);
    if (p.arrows.size() <= 6) return p;
  }
}

}  // namespace

FiniteCatPresentation random_presentation(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  switch (draw(rng, 5)) {
    case 0: return random_poset(rng);
    case 1: return random_groupoid(rng);
    case 2: return random_monoid(rng);
    case 3: {
      FiniteCatPresentation a = random_groupoid(rng);
      FiniteCatPresentation b = random_poset(rng);
      if (a.arrows.size() + b.arrows.size() > 8) return a;
      return disjoint_union(a, b);
    }
    default: {
      FiniteCatPresentation a = random_monoid(rng);
      if (a.arrows.size() > 4) return a;
      return disjoint_union(a, group_category(cyclic_group(1 + draw(rng, 2)), "y"));
    }
  }
}

}  // namespace sepcat
