#include "spinor_inv/nr_limit.hpp"

#include <array>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace spinv {
namespace {

void require(const QubitTensor& t, int n, const char* what) {
  if (t.particles() != n) {
    throw std::invalid_argument(std::string(what) + " needs " + std::to_string(n) + " qubits, got " +
                                std::to_string(t.particles()));
  }
}

double A2(cplx z) { return std::norm(z); }

// J_a - J1^2 for the qubit singled out by `axis`: 2 X X' - 2 N0 N1 where
// X = sum psi_{1..} psi*_{0..}, X' its conjugate pairing, N_b the weight of
// the slice with that qubit equal to b.
cplx singled_difference(const QubitTensor& t, int axis) {
  auto idx = [axis](int b, int u, int v) {
    int i[3];
    i[axis] = b;
    i[(axis + 1) % 3] = u;
    i[(axis + 2) % 3] = v;
    return std::array<int, 3>{i[0], i[1], i[2]};
  };
  cplx x10 = 0.0, x01 = 0.0;
  double n0 = 0.0, n1 = 0.0;
  for (int u = 0; u < 2; ++u) {
    for (int v = 0; v < 2; ++v) {
      const auto a = idx(0, u, v), b = idx(1, u, v);
      const cplx p0 = t.at(a[0], a[1], a[2]);
      const cplx p1 = t.at(b[0], b[1], b[2]);
      x10 += p1 * std::conj(p0);
      x01 += p0 * std::conj(p1);
      n0 += A2(p0);
      n1 += A2(p1);
    }
  }
  return 2.0 * x10 * x01 - 2.0 * n0 * n1;
}

}  // namespace

QubitTensor::QubitTensor(int particles, std::vector<cplx> coefficients)
    : n_(particles), c_(std::move(coefficients)) {
  if (particles < 1 || particles > 30 || c_.size() != (std::size_t{1} << particles)) {
    throw std::invalid_argument("qubit tensor needs 2^n coefficients");
  }
}

cplx QubitTensor::at(int a, int b) const {
  if (n_ != 2) throw std::invalid_argument("two-index access on a non two-qubit tensor");
  return c_[static_cast<std::size_t>(2 * a + b)];
}

cplx QubitTensor::at(int a, int b, int c) const {
  if (n_ != 3) throw std::invalid_argument("three-index access on a non three-qubit tensor");
  return c_[static_cast<std::size_t>(4 * a + 2 * b + c)];
}

QubitTensor QubitTensor::scaled(cplx lambda) const {
  std::vector<cplx> out(c_);
  for (auto& z : out) z *= lambda;
  return QubitTensor(n_, std::move(out));
}

QubitTensor random_qubits(int particles, std::uint64_t seed) {
  if (particles < 1 || particles > 8) throw std::domain_error("random_qubits supports 1..8 qubits");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<cplx> c(std::size_t{1} << particles);
  double norm2 = 0.0;
  for (auto& z : c) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    z = {re, im};
    norm2 += re * re + im * im;
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& z : c) z *= inv;
  return QubitTensor(particles, std::move(c));
}

cplx wootters_concurrence(const QubitTensor& t) {
  require(t, 2, "concurrence");
  return t.at(0, 0) * t.at(1, 1) - t.at(0, 1) * t.at(1, 0);
}

cplx kempe_J(int k, const QubitTensor& t) {
  require(t, 3, "J polynomials");
  double j1 = 0.0;
  for (const auto& z : t.coefficients()) j1 += A2(z);
  switch (k) {
    case 1: return j1;
    case 2: return singled_difference(t, 0) + j1 * j1;
    case 3: return singled_difference(t, 1) + j1 * j1;
    case 4: return singled_difference(t, 2) + j1 * j1;
    case 5: {
      // sum psi_ijk psi*_imn psi_omq psi*_rjq psi_rvn psi*_ovk
      auto p = [&t](int a, int b, int c) { return t.at(a, b, c); };
      auto s = [&t](int a, int b, int c) { return std::conj(t.at(a, b, c)); };
      cplx total = 0.0;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          for (int kk = 0; kk < 2; ++kk)
            for (int m = 0; m < 2; ++m)
              for (int n = 0; n < 2; ++n)
                for (int o = 0; o < 2; ++o)
                  for (int q = 0; q < 2; ++q)
                    for (int r = 0; r < 2; ++r)
                      for (int v = 0; v < 2; ++v)
                        total += p(i, j, kk) * s(i, m, n) * p(o, m, q) * s(r, j, q) * p(r, v, n) * s(o, v, kk);
      return total;
    }
    default: throw std::invalid_argument("J index must be 1..5, got " + std::to_string(k));
  }
}

cplx s2(const QubitTensor& t) {
  require(t, 3, "s2");
  auto p = [&t](int a, int b, int c) { return t.at(a, b, c); };
  auto s = [&t](int a, int b, int c) { return std::conj(t.at(a, b, c)); };
  return (p(0, 0, 0) * p(1, 1, 1) - p(0, 1, 1) * p(1, 0, 0) + p(0, 1, 0) * p(1, 0, 1) - p(0, 0, 1) * p(1, 1, 0)) *
             (A2(p(0, 0, 0)) + A2(p(0, 0, 1)) + A2(p(1, 0, 0)) + A2(p(1, 0, 1))) +
         2.0 * (p(0, 0, 1) * p(1, 0, 0) - p(0, 0, 0) * p(1, 0, 1)) *
             (p(0, 1, 0) * s(0, 0, 0) + p(0, 1, 1) * s(0, 0, 1) + p(1, 1, 0) * s(1, 0, 0) + p(1, 1, 1) * s(1, 0, 1)) +
         2.0 * (p(0, 1, 0) * p(1, 1, 1) - p(0, 1, 1) * p(1, 1, 0)) *
             (p(0, 0, 0) * s(0, 1, 0) + p(0, 0, 1) * s(0, 1, 1) + p(1, 0, 0) * s(1, 1, 0) + p(1, 0, 1) * s(1, 1, 1)) +
         (p(0, 1, 1) * p(1, 0, 0) - p(0, 1, 0) * p(1, 0, 1) + p(0, 0, 1) * p(1, 1, 0) - p(0, 0, 0) * p(1, 1, 1)) *
             (A2(p(0, 1, 0)) + A2(p(0, 1, 1)) + A2(p(1, 1, 0)) + A2(p(1, 1, 1)));
}

}  // namespace spinv
