/*
   Copyright 2026 The symmpoly Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "symmpoly/polygon.hpp"

#include <cmath>
#include <string>

#include "symmpoly/haar_sampling.hpp"

namespace symmpoly {
namespace {

void check_dim(int dim) {
  if (dim != 2 && dim != 3) fail(ErrorKind::InvalidDimension, "polygon dimension must be 2 or 3");
}

void check_size(Eigen::Index n) {
  if (n < 3) fail(ErrorKind::InvalidSize, "polygon needs n >= 3 edges");
}

const double kSqrt2 = std::sqrt(2.0);

}  // namespace

Polygon::Polygon(Eigen::MatrixXd edges, bool closed)
    : edges_(std::move(edges)), closed_(closed) {
  check_dim(static_cast<int>(edges_.rows()));
  if (edges_.cols() < 1) fail(ErrorKind::InvalidSize, "polygon needs at least one edge");
}

Polygon sample_arm(int dim, Eigen::Index n, SeedStream& s) {
  check_dim(dim);
  check_size(n);
  if (dim == 2) {
    const Eigen::VectorXd x = sample_sphere(2 * n, kSqrt2, s);
    Eigen::VectorXcd z(n);
    for (Eigen::Index i = 0; i < n; ++i) z[i] = {x[2 * i], x[2 * i + 1]};
    return Polygon(square_map(z), false);
  }
  const Eigen::VectorXd x = sample_sphere(4 * n, kSqrt2, s);
  std::vector<Quaternion> q;
  q.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    q.emplace_back(x[4 * i], x[4 * i + 1], x[4 * i + 2], x[4 * i + 3]);
  }
  return Polygon(hopf_map(q), false);
}

Polygon sample_pol(int dim, Eigen::Index n, SeedStream& s) {
  check_dim(dim);
  check_size(n);
  if (dim == 2) {
    const RealFrame2 f = sample_frame2<double>(n, s);
    Eigen::VectorXcd z(n);
    for (Eigen::Index i = 0; i < n; ++i) z[i] = {f.a[i], f.b[i]};
    return Polygon(square_map(z), true);
  }
  const ComplexFrame2 f = sample_frame2<std::complex<double>>(n, s);
  std::vector<Quaternion> q;
  q.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) q.push_back(quaternion_from_pair(f.a[i], f.b[i]));
  return Polygon(hopf_map(q), true);
}

double perimeter(const Polygon& p) { return p.edges().colwise().norm().sum(); }

double closure_residual(const Polygon& p) { return p.edges().rowwise().sum().norm(); }

Eigen::MatrixXd vertices(const Polygon& p) {
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(p.dim(), p.n() + 1);
  for (Eigen::Index i = 0; i < p.n(); ++i) v.col(i + 1) = v.col(i) + p.edge(i);
  return v;
}

Eigen::VectorXd segment(const Polygon& p, Eigen::Index k) {
  if (k < 1 || k > p.n()) fail(ErrorKind::InvalidSize, "segment: k must lie in [1, n]");
  return Eigen::Map<const Eigen::VectorXd>(p.edges().data(), p.dim() * k);
}

std::string_view to_string(Space s) {
  switch (s) {
    case Space::arm2: return "arm2";
    case Space::pol2: return "pol2";
    case Space::arm3: return "arm3";
    case Space::pol3: return "pol3";
  }
  return "?";
}

Space parse_space(std::string_view name) {
  for (Space s : {Space::arm2, Space::pol2, Space::arm3, Space::pol3}) {
    if (to_string(s) == name) return s;
  }
  fail(ErrorKind::Domain, "unknown space '" + std::string(name) + "'");
}

Polygon sample_polygon(Space space, Eigen::Index n, SeedStream& s) {
  return is_closed(space) ? sample_pol(dimension(space), n, s)
                          : sample_arm(dimension(space), n, s);
}

}  // namespace symmpoly
