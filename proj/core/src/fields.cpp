#include "sben/fields.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sben {

Grid2P::Grid2P(int nx_, int ny_, double lx_, double ly_) : nx(nx_), ny(ny_), lx(lx_), ly(ly_) {
  if (nx < 4 || ny < 4) throw ConfigError("grid", "nx and ny must be >= 4");
  if (!(lx > 0.0) || !(ly > 0.0)) throw ConfigError("grid", "lx and ly must be positive");
}

void require_same_grid(const Grid2P& a, const Grid2P& b) {
  if (!(a == b)) {
    throw IncompatibleFields("fields live on different grids (" + std::to_string(a.nx) + "x" +
                             std::to_string(a.ny) + " vs " + std::to_string(b.nx) + "x" +
                             std::to_string(b.ny) + ")");
  }
}

template <std::size_t N>
Field<N>& Field<N>::operator+=(const Field& other) {
  require_same_grid(grid_, other.grid_);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

template <std::size_t N>
Field<N>& Field<N>::operator-=(const Field& other) {
  require_same_grid(grid_, other.grid_);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

template <std::size_t N>
Field<N>& Field<N>::operator*=(double a) {
  for (double& x : data_) x *= a;
  return *this;
}

template <std::size_t N>
Field<N>& Field<N>::axpy(double a, const Field& x) {
  require_same_grid(grid_, x.grid_);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += a * x.data_[k];
  return *this;
}

template class Field<1>;
template class Field<3>;
template class Field<6>;
template class Field<9>;

namespace {

// out = d(in)/dx, central, periodic.
void diff_x(const Grid2P& g, std::span<const double> in, std::span<double> out) {
  const double inv = 1.0 / (2.0 * g.dx());
  for (int j = 0; j < g.ny; ++j) {
    const std::size_t row = g.index(0, j);
    for (int i = 0; i < g.nx; ++i) {
      const int ip = i + 1 == g.nx ? 0 : i + 1;
      const int im = i == 0 ? g.nx - 1 : i - 1;
      out[row + i] = (in[row + ip] - in[row + im]) * inv;
    }
  }
}

void diff_y(const Grid2P& g, std::span<const double> in, std::span<double> out) {
  const double inv = 1.0 / (2.0 * g.dy());
  for (int j = 0; j < g.ny; ++j) {
    const int jp = j + 1 == g.ny ? 0 : j + 1;
    const int jm = j == 0 ? g.ny - 1 : j - 1;
    const std::size_t row = g.index(0, j);
    const std::size_t rp = g.index(0, jp);
    const std::size_t rm = g.index(0, jm);
    for (int i = 0; i < g.nx; ++i) out[row + i] = (in[rp + i] - in[rm + i]) * inv;
  }
}

// out += d(in)/dx
void add_diff_x(const Grid2P& g, std::span<const double> in, std::span<double> out, double factor = 1.0) {
  const double inv = factor / (2.0 * g.dx());
  for (int j = 0; j < g.ny; ++j) {
    const std::size_t row = g.index(0, j);
    for (int i = 0; i < g.nx; ++i) {
      const int ip = i + 1 == g.nx ? 0 : i + 1;
      const int im = i == 0 ? g.nx - 1 : i - 1;
      out[row + i] += (in[row + ip] - in[row + im]) * inv;
    }
  }
}

void add_diff_y(const Grid2P& g, std::span<const double> in, std::span<double> out, double factor = 1.0) {
  const double inv = factor / (2.0 * g.dy());
  for (int j = 0; j < g.ny; ++j) {
    const int jp = j + 1 == g.ny ? 0 : j + 1;
    const int jm = j == 0 ? g.ny - 1 : j - 1;
    const std::size_t row = g.index(0, j);
    const std::size_t rp = g.index(0, jp);
    const std::size_t rm = g.index(0, jm);
    for (int i = 0; i < g.nx; ++i) out[row + i] += (in[rp + i] - in[rm + i]) * inv;
  }
}

}  // namespace

VectorField grad_scalar(const ScalarField& s) {
  VectorField out(s.grid());
  diff_x(s.grid(), s.component(0), out.component(0));
  diff_y(s.grid(), s.component(0), out.component(1));
  return out;
}

TensorField grad_vector(const VectorField& v) {
  TensorField out(v.grid());
  for (std::size_t a = 0; a < 3; ++a) {
    diff_x(v.grid(), v.component(a), out.component(3 * a + 0));
    diff_y(v.grid(), v.component(a), out.component(3 * a + 1));
  }
  return out;
}

ScalarField div_vector(const VectorField& v) {
  ScalarField out(v.grid());
  add_diff_x(v.grid(), v.component(0), out.component(0));
  add_diff_y(v.grid(), v.component(1), out.component(0));
  return out;
}

VectorField div_tensor(const SymTensorField& t) {
  using namespace sym;
  const Grid2P& g = t.grid();
  VectorField out(g);
  add_diff_x(g, t.component(xx), out.component(0));
  add_diff_y(g, t.component(xy), out.component(0));
  add_diff_x(g, t.component(xy), out.component(1));
  add_diff_y(g, t.component(yy), out.component(1));
  add_diff_x(g, t.component(xz), out.component(2));
  add_diff_y(g, t.component(yz), out.component(2));
  return out;
}

VectorField curl(const VectorField& v) {
  const Grid2P& g = v.grid();
  VectorField out(g);
  add_diff_y(g, v.component(2), out.component(0));
  add_diff_x(g, v.component(2), out.component(1), -1.0);
  add_diff_x(g, v.component(1), out.component(2));
  add_diff_y(g, v.component(0), out.component(2), -1.0);
  return out;
}

ScalarField laplacian(const ScalarField& s) { return div_vector(grad_scalar(s)); }

VectorField laplacian(const VectorField& v) {
  const Grid2P& g = v.grid();
  VectorField out(g);
  std::vector<double> tmp(g.cells());
  for (std::size_t a = 0; a < 3; ++a) {
    diff_x(g, v.component(a), tmp);
    add_diff_x(g, tmp, out.component(a));
    diff_y(g, v.component(a), tmp);
    add_diff_y(g, tmp, out.component(a));
  }
  return out;
}

SymTensorField sym_grad(const VectorField& v) {
  using namespace sym;
  const Grid2P& g = v.grid();
  const TensorField gv = grad_vector(v);
  SymTensorField d(g);
  // d/dz == 0, so the zz entry vanishes and the xz/yz entries only see
  // in-plane derivatives of the third component.
  for (std::size_t k = 0; k < g.cells(); ++k) {
    d.at(xx, k) = gv.at(0, k);
    d.at(yy, k) = gv.at(4, k);
    d.at(zz, k) = 0.0;
    d.at(xy, k) = 0.5 * (gv.at(1, k) + gv.at(3, k));
    d.at(xz, k) = 0.5 * (gv.at(2, k) + gv.at(6, k));
    d.at(yz, k) = 0.5 * (gv.at(5, k) + gv.at(7, k));
  }
  return d;
}

double integrate(const ScalarField& s) {
  double sum = 0.0;
  for (double x : s.values()) sum += x;
  return sum * s.grid().cell_area();
}

template <std::size_t N>
double inner(const Field<N>& a, const Field<N>& b) {
  require_same_grid(a.grid(), b.grid());
  const auto av = a.values();
  const auto bv = b.values();
  double sum = 0.0;
  for (std::size_t k = 0; k < av.size(); ++k) sum += av[k] * bv[k];
  return sum * a.grid().cell_area();
}

template <std::size_t N>
double norm_l2(const Field<N>& a) {
  return std::sqrt(inner(a, a));
}

template <std::size_t N>
double norm_max(const Field<N>& a) {
  double m = 0.0;
  for (double x : a.values()) m = std::max(m, std::abs(x));
  return m;
}

template double inner(const Field<1>&, const Field<1>&);
template double inner(const Field<3>&, const Field<3>&);
template double inner(const Field<6>&, const Field<6>&);
template double inner(const Field<9>&, const Field<9>&);
template double norm_l2(const Field<1>&);
template double norm_l2(const Field<3>&);
template double norm_l2(const Field<6>&);
template double norm_l2(const Field<9>&);
template double norm_max(const Field<1>&);
template double norm_max(const Field<3>&);
template double norm_max(const Field<6>&);
template double norm_max(const Field<9>&);

ScalarField dot(const VectorField& a, const VectorField& b) {
  require_same_grid(a.grid(), b.grid());
  ScalarField out(a.grid());
  for (std::size_t k = 0; k < a.cells(); ++k) {
    out.at(0, k) = a.at(0, k) * b.at(0, k) + a.at(1, k) * b.at(1, k) + a.at(2, k) * b.at(2, k);
  }
  return out;
}

VectorField cross(const VectorField& a, const VectorField& b) {
  require_same_grid(a.grid(), b.grid());
  VectorField out(a.grid());
  for (std::size_t k = 0; k < a.cells(); ++k) {
    out.at(0, k) = a.at(1, k) * b.at(2, k) - a.at(2, k) * b.at(1, k);
    out.at(1, k) = a.at(2, k) * b.at(0, k) - a.at(0, k) * b.at(2, k);
    out.at(2, k) = a.at(0, k) * b.at(1, k) - a.at(1, k) * b.at(0, k);
  }
  return out;
}

VectorField scale(const ScalarField& s, const VectorField& v) {
  require_same_grid(s.grid(), v.grid());
  VectorField out(v.grid());
  for (std::size_t c = 0; c < 3; ++c) {
    for (std::size_t k = 0; k < v.cells(); ++k) out.at(c, k) = s.at(0, k) * v.at(c, k);
  }
  return out;
}

ScalarField multiply(const ScalarField& a, const ScalarField& b) {
  require_same_grid(a.grid(), b.grid());
  ScalarField out(a.grid());
  for (std::size_t k = 0; k < a.cells(); ++k) out.at(0, k) = a.at(0, k) * b.at(0, k);
  return out;
}

ScalarField trace(const SymTensorField& t) {
  ScalarField out(t.grid());
  for (std::size_t k = 0; k < t.cells(); ++k) {
    out.at(0, k) = t.at(sym::xx, k) + t.at(sym::yy, k) + t.at(sym::zz, k);
  }
  return out;
}

VectorField advect(const VectorField& a, const VectorField& b) {
  require_same_grid(a.grid(), b.grid());
  const TensorField gb = grad_vector(b);
  VectorField out(a.grid());
  for (std::size_t c = 0; c < 3; ++c) {
    for (std::size_t k = 0; k < a.cells(); ++k) {
      out.at(c, k) = a.at(0, k) * gb.at(3 * c + 0, k) + a.at(1, k) * gb.at(3 * c + 1, k);
    }
  }
  return out;
}

template <std::size_t N>
std::array<double, N> mean(const Field<N>& f) {
  std::array<double, N> m{};
  for (std::size_t c = 0; c < N; ++c) {
    double sum = 0.0;
    for (double x : f.component(c)) sum += x;
    m[c] = sum / static_cast<double>(f.cells());
  }
  return m;
}

template std::array<double, 1> mean(const Field<1>&);
template std::array<double, 3> mean(const Field<3>&);
template std::array<double, 6> mean(const Field<6>&);
template std::array<double, 9> mean(const Field<9>&);

int null_mode_count(const Grid2P& grid) {
  const int ax = grid.nx % 2 == 0 ? 2 : 1;
  const int ay = grid.ny % 2 == 0 ? 2 : 1;
  return ax * ay;
}

namespace {

// Kernel basis of the central difference on the torus: (-1)^(px*i + py*j)
// for the parities that are periodic on this grid.
template <class Visit>
void for_each_null_mode(const Grid2P& g, Visit&& visit) {
  for (int px = 0; px < (g.nx % 2 == 0 ? 2 : 1); ++px) {
    for (int py = 0; py < (g.ny % 2 == 0 ? 2 : 1); ++py) visit(px, py);
  }
}

inline double parity_sign(int px, int py, int i, int j) { return ((px * i + py * j) & 1) ? -1.0 : 1.0; }

template <std::size_t N>
double null_projection(Field<N>& f, bool remove) {
  const Grid2P& g = f.grid();
  double removed_sq = 0.0;
  for (std::size_t c = 0; c < N; ++c) {
    auto comp = f.component(c);
    for_each_null_mode(g, [&](int px, int py) {
      double coeff = 0.0;
      for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) coeff += parity_sign(px, py, i, j) * comp[g.index(i, j)];
      }
      coeff /= static_cast<double>(g.cells());
      removed_sq += coeff * coeff * static_cast<double>(g.cells());
      if (remove) {
        for (int j = 0; j < g.ny; ++j) {
          for (int i = 0; i < g.nx; ++i) comp[g.index(i, j)] -= coeff * parity_sign(px, py, i, j);
        }
      }
    });
  }
  return std::sqrt(removed_sq * g.cell_area());
}

}  // namespace

template <std::size_t N>
double remove_null_modes(Field<N>& f) {
  return null_projection(f, true);
}

template <std::size_t N>
double null_mode_norm(const Field<N>& f) {
  Field<N> copy = f;
  return null_projection(copy, false);
}

template double remove_null_modes(Field<1>&);
template double remove_null_modes(Field<3>&);
template double null_mode_norm(const Field<1>&);
template double null_mode_norm(const Field<3>&);

}  // namespace sben
