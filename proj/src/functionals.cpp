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

#include "symmpoly/functionals.hpp"

namespace symmpoly {
namespace {

void require_spatial(const Polygon& p) {
  if (p.dim() != 3) fail(ErrorKind::InvalidDimension, "torsion needs a spatial polygon");
}

}  // namespace

std::vector<double> turning_angles(const Polygon& p) {
  const Eigen::Index n = p.n();
  const Eigen::Index count = p.closed() ? n : n - 1;
  std::vector<double> angles;
  angles.reserve(static_cast<std::size_t>(std::max<Eigen::Index>(count, 0)));
  for (Eigen::Index i = 0; i < count; ++i) {
    angles.push_back(turning_angle(p.edge(i), p.edge((i + 1) % n)));
  }
  return angles;
}

double total_curvature(const Polygon& p) {
  double sum = 0.0;
  for (double a : turning_angles(p)) sum += a;
  return sum;
}

std::vector<double> torsion_angles(const Polygon& p) {
  require_spatial(p);
  const Eigen::Index n = p.n();
  std::vector<double> angles;
  if (p.closed()) {
    angles.reserve(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
      angles.push_back(torsion_angle(p.edge((i + n - 1) % n), p.edge(i), p.edge((i + 1) % n)));
    }
  } else {
    for (Eigen::Index i = 1; i + 1 < n; ++i) {
      angles.push_back(torsion_angle(p.edge(i - 1), p.edge(i), p.edge(i + 1)));
    }
  }
  return angles;
}

double total_torsion(const Polygon& p) {
  double sum = 0.0;
  for (double a : torsion_angles(p)) sum += a;
  return sum;
}

Eigen::MatrixXd edge_window(const Polygon& p, Eigen::Index start, int k) {
  Eigen::MatrixXd w(p.dim(), k);
  for (int j = 0; j < k; ++j) w.col(j) = p.edge((start + j) % p.n());
  return w;
}

std::vector<double> sliding_window_apply(const Polygon& p, const LocalFunctional& f) {
  if (f.k < 1 || f.k > p.n()) fail(ErrorKind::InvalidSize, "sliding_window_apply: window wider than polygon");
  const Eigen::Index count = p.closed() ? p.n() : p.n() - f.k + 1;
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(count));
  for (Eigen::Index i = 0; i < count; ++i) values.push_back(f.eval(edge_window(p, i, f.k)));
  return values;
}

double first_window(const Polygon& p, const LocalFunctional& f) {
  if (f.k < 1 || f.k > p.n()) fail(ErrorKind::InvalidSize, "first_window: window wider than polygon");
  return f.eval(edge_window(p, 0, f.k));
}

LocalFunctional turning_angle_functional() {
  return {"turning_angle", 2, std::numbers::pi,
          [](const Eigen::MatrixXd& w) { return turning_angle(w.col(0), w.col(1)); }};
}

LocalFunctional turning_product_functional() {
  return {"turning_product", 3, std::numbers::pi * std::numbers::pi,
          [](const Eigen::MatrixXd& w) {
            return turning_angle(w.col(0), w.col(1)) * turning_angle(w.col(1), w.col(2));
          }};
}

LocalFunctional torsion_angle_functional() {
  return {"torsion_angle", 3, std::numbers::pi, [](const Eigen::MatrixXd& w) {
            if (w.rows() != 3) fail(ErrorKind::InvalidDimension, "torsion needs a spatial polygon");
            return torsion_angle(w.col(0), w.col(1), w.col(2));
          }};
}

LocalFunctional first_edge_length_functional() {
  return {"edge_length", 1, kPerimeter, [](const Eigen::MatrixXd& w) { return w.col(0).norm(); }};
}

}  // namespace symmpoly
