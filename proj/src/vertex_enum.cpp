// Copyright 2026 The smpoly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "smpoly/vertex_enum.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include <boost/dynamic_bitset.hpp>

#include "smpoly/linalg.hpp"
#include "smpoly/simplex.hpp"

namespace smpoly {

std::size_t VertexReport::integral_count() const {
  return static_cast<std::size_t>(
      std::count_if(vertices.begin(), vertices.end(), [](const Vertex& v) { return v.integral; }));
}

std::vector<FractionalCertificate> VertexReport::fractional_certificates() const {
  std::vector<FractionalCertificate> out;
  for (const auto& v : vertices) {
    if (!v.integral) out.push_back({v.point, v.basis});
  }
  return out;
}

std::vector<Point> VertexReport::points() const {
  std::vector<Point> out;
  for (const auto& v : vertices) out.push_back(v.point);
  return out;
}

std::vector<std::size_t> tight_basis(const ConstraintSystem& system, const Point& p) {
  linalg::IndependenceTracker tracker(system.dimension());
  std::vector<std::size_t> out;
  for (std::size_t i : tight_rows(system, p)) {
    if (tracker.rank() == system.dimension()) break;
    if (tracker.try_add(system.rows()[i].dense(system.dimension()))) out.push_back(i);
  }
  return out;
}

namespace {

using Bits = boost::dynamic_bitset<>;

VertexReport finish(const ConstraintSystem& system, std::vector<Point> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  VertexReport report;
  for (auto& p : points) {
    Vertex v;
    v.integral = p.is_integral_01();
    v.basis = tight_basis(system, p);
    v.point = std::move(p);
    report.vertices.push_back(std::move(v));
  }
  return report;
}

// Row i of the system written as h·(x, t) <= 0.
linalg::IntegerRow homogenize(const Constraint& row, std::size_t d) {
  std::vector<Rational> h = row.dense(d);
  h.push_back(-row.rhs);
  if (row.relation == Relation::GreaterEqual) {
    for (auto& v : h) v = -v;
  }
  auto out = linalg::clear_denominators(h);
  linalg::normalize(out);
  return out;
}

mpz_class dot(const linalg::IntegerRow& h, const linalg::IntegerRow& y) {
  mpz_class acc = 0;
  for (std::size_t k = 0; k < h.size(); ++k) {
    if (h[k] != 0 && y[k] != 0) acc += h[k] * y[k];
  }
  return acc;
}

struct Ray {
  linalg::IntegerRow y;
  Bits zeros;  // processed rows tight on y
};

std::vector<Point> double_description(const ConstraintSystem& system) {
  const std::size_t d = system.dimension();
  const std::size_t n = d + 1;
  std::vector<linalg::IntegerRow> rows;
  for (const auto& row : system.rows()) rows.push_back(homogenize(row, d));
  {
    linalg::IntegerRow t_row(n, 0);
    t_row[d] = -1;  // t >= 0
    rows.push_back(std::move(t_row));
  }
  const std::size_t total = rows.size();

  // Initial simplicial cone: greedy independent rows, sparsest first.
  std::vector<std::size_t> order(total);
  std::iota(order.begin(), order.end(), 0);
  auto nnz = [&](std::size_t i) {
    return std::count_if(rows[i].begin(), rows[i].end(), [](const mpz_class& v) { return v != 0; });
  };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return nnz(x) < nnz(y); });
  linalg::IndependenceTracker tracker(n);
  std::vector<std::size_t> initial;
  for (std::size_t i : order) {
    if (initial.size() == n) break;
    if (tracker.try_add(rows[i])) initial.push_back(i);
  }
  if (initial.size() < n) throw std::domain_error("polyhedron is not pointed");

  linalg::Matrix a0;
  for (std::size_t i : initial) {
    std::vector<Rational> r;
    for (const auto& v : rows[i]) r.emplace_back(v);
    a0.push_back(std::move(r));
  }
  std::vector<Ray> rays;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Rational> rhs(n);
    rhs[k] = -1;
    auto sol = linalg::solve(a0, rhs);
    Ray ray{linalg::clear_denominators(*sol), Bits(total)};
    linalg::normalize(ray.y);
    for (std::size_t m = 0; m < n; ++m) {
      if (m != k) ray.zeros.set(initial[m]);
    }
    rays.push_back(std::move(ray));
  }

  std::vector<bool> done(total, false);
  for (std::size_t i : initial) done[i] = true;
  for (std::size_t h = 0; h < total; ++h) {
    if (done[h]) continue;
    done[h] = true;
    std::vector<mpz_class> s(rays.size());
    std::vector<std::size_t> plus, minus;
    std::vector<Ray> next;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      s[r] = dot(rows[h], rays[r].y);
      if (s[r] > 0) plus.push_back(r);
      else if (s[r] < 0) minus.push_back(r);
    }
    for (std::size_t p : plus) {
      for (std::size_t m : minus) {
        Bits common = rays[p].zeros & rays[m].zeros;
        if (common.count() + 2 < n) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r != p && r != m && common.is_subset_of(rays[r].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray ray{linalg::IntegerRow(n), std::move(common)};
        for (std::size_t k = 0; k < n; ++k) ray.y[k] = s[p] * rays[m].y[k] - s[m] * rays[p].y[k];
        linalg::normalize(ray.y);
        ray.zeros.set(h);
        next.push_back(std::move(ray));
      }
    }
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (s[r] > 0) continue;
      if (s[r] == 0) rays[r].zeros.set(h);
      next.push_back(std::move(rays[r]));
    }
    rays = std::move(next);
  }

  std::vector<Point> points;
  for (const auto& ray : rays) {
    if (ray.y[d] == 0) throw std::domain_error("polyhedron is unbounded");
    Point p;
    const Rational t(ray.y[d]);
    for (std::size_t k = 0; k < d; ++k) p.coords.push_back(Rational(ray.y[k]) / t);
    points.push_back(std::move(p));
  }
  return points;
}

struct BasisSearch {
  const ConstraintSystem& system;
  linalg::Matrix dense;
  std::vector<std::size_t> chosen;
  std::vector<Point> points;

  void run(std::size_t start, const linalg::IndependenceTracker& tracker) {
    const std::size_t d = system.dimension();
    if (chosen.size() == d) {
      linalg::Matrix a;
      std::vector<Rational> b;
      for (std::size_t i : chosen) {
        a.push_back(dense[i]);
        b.push_back(system.rows()[i].rhs);
      }
      auto x = linalg::solve(a, b);
      if (!x) return;  // unreachable: rows were chosen independent
      Point p{std::move(*x)};
      if (contains(system, p).inside) points.push_back(std::move(p));
      return;
    }
    const std::size_t rows = dense.size();
    for (std::size_t i = start; i + (d - chosen.size()) <= rows; ++i) {
      linalg::IndependenceTracker grown = tracker;
      if (!grown.try_add(dense[i])) continue;
      chosen.push_back(i);
      run(i + 1, grown);
      chosen.pop_back();
    }
  }
};

// With at least one vertex, the polyhedron is bounded iff its recession
// cone is {0}, i.e. every coordinate is pinned to 0 on the cone.
bool has_recession_direction(const ConstraintSystem& system) {
  std::vector<Constraint> cone_rows = system.rows();
  for (auto& row : cone_rows) row.rhs = 0;
  const ConstraintSystem cone(system.columns(), std::move(cone_rows));
  const std::size_t d = system.dimension();
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<Rational> objective(d);
    objective[j] = 1;
    for (auto sense : {Sense::Maximize, Sense::Minimize}) {
      if (optimize(cone, objective, sense).status != LpStatus::Optimal) return true;
    }
  }
  return false;
}

std::vector<Point> basis_enumeration(const ConstraintSystem& system) {
  BasisSearch search{system, {}, {}, {}};
  for (const auto& row : system.rows()) search.dense.push_back(row.dense(system.dimension()));
  if (linalg::rank(search.dense) < system.dimension()) throw std::domain_error("polyhedron is not pointed");
  search.run(0, linalg::IndependenceTracker(system.dimension()));
  if (!search.points.empty() && has_recession_direction(system)) {
    throw std::domain_error("polyhedron is unbounded");
  }
  return search.points;
}

}  // namespace

VertexReport enumerate_vertices(const ConstraintSystem& system, const VertexEnumOptions& options) {
  const std::size_t d = system.dimension();
  if (d > options.max_dimension) {
    throw BoundExceeded("system has " + std::to_string(d) + " variables; vertex enumeration bound is " +
                        std::to_string(options.max_dimension));
  }
  if (d == 0) {
    // R^0 has a single point; it is a vertex iff it is feasible.
    Point origin;
    if (!contains(system, origin).inside) return {};
    return finish(system, {origin});
  }
  return finish(system, options.method == VertexMethod::DoubleDescription ? double_description(system)
                                                                           : basis_enumeration(system));
}

}  // namespace smpoly
