#include "spinor_inv/state.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

namespace spinv {

std::size_t tensor_size(int particles) {
  return std::size_t{1} << (2 * particles);
}

std::size_t flat_index(std::span<const int> index) {
  std::size_t flat = 0;
  for (int j : index) flat = flat * 4 + static_cast<std::size_t>(j);
  return flat;
}

std::vector<int> multi_index(std::size_t flat, int particles) {
  std::vector<int> idx(static_cast<std::size_t>(particles));
  for (int p = particles - 1; p >= 0; --p) {
    idx[static_cast<std::size_t>(p)] = static_cast<int>(flat % 4);
    flat /= 4;
  }
  return idx;
}

StateTensor::StateTensor(int particles, std::vector<cplx> coefficients)
    : n_(particles), c_(std::move(coefficients)) {
  if (particles < 1) {
    throw std::invalid_argument("state needs at least one particle");
  }
  if (particles > 12 || c_.size() != tensor_size(particles)) {
    throw std::invalid_argument("state with " + std::to_string(particles) +
                                " particles needs 4^n coefficients, got " +
                                std::to_string(c_.size()));
  }
  for (const cplx& z : c_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw std::invalid_argument("state coefficients must be finite");
    }
  }
}

StateTensor StateTensor::zeros(int particles) {
  return StateTensor(particles, std::vector<cplx>(tensor_size(particles)));
}

cplx StateTensor::at(std::span<const int> index) const {
  if (static_cast<int>(index.size()) != n_) {
    throw std::invalid_argument("multi-index length must equal the particle count");
  }
  for (int j : index) {
    if (j < 0 || j > 3) throw std::domain_error("spinor index must be in 0..3");
  }
  return c_[flat_index(index)];
}

double StateTensor::norm() const {
  double s = 0.0;
  for (const cplx& z : c_) s += std::norm(z);
  return std::sqrt(s);
}

StateTensor StateTensor::scaled(cplx lambda) const {
  std::vector<cplx> out(c_);
  for (cplx& z : out) z *= lambda;
  return StateTensor(n_, std::move(out));
}

StateTensor StateTensor::normalized() const {
  const double nrm = norm();
  if (nrm == 0.0) throw std::domain_error("cannot normalize the zero state");
  return scaled(1.0 / nrm);
}

StateTensor StateTensor::conjugated() const {
  std::vector<cplx> out(c_);
  for (cplx& z : out) z = std::conj(z);
  return StateTensor(n_, std::move(out));
}

Mat4 StateTensor::as_matrix() const {
  if (n_ != 2) throw std::invalid_argument("matrix view needs a two-particle state");
  Mat4 m;
  for (int j = 0; j < 4; ++j) {
    for (int k = 0; k < 4; ++k) m(j, k) = c_[static_cast<std::size_t>(4 * j + k)];
  }
  return m;
}

StateTensor StateTensor::from_matrix(const Mat4& psi) {
  std::vector<cplx> c(16);
  for (int j = 0; j < 4; ++j) {
    for (int k = 0; k < 4; ++k) c[static_cast<std::size_t>(4 * j + k)] = psi(j, k);
  }
  return StateTensor(2, std::move(c));
}

StateTensor StateTensor::swapped(int a, int b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_) throw std::out_of_range("particle out of range");
  std::vector<cplx> out(c_.size());
  for (std::size_t f = 0; f < c_.size(); ++f) {
    std::vector<int> idx = multi_index(f, n_);
    std::swap(idx[static_cast<std::size_t>(a)], idx[static_cast<std::size_t>(b)]);
    out[flat_index(idx)] = c_[f];
  }
  return StateTensor(n_, std::move(out));
}

StateTensor basis_state(const std::vector<int>& indices) {
  if (indices.empty()) throw std::domain_error("basis_state needs at least one index");
  for (int j : indices) {
    if (j < 0 || j > 3) throw std::domain_error("basis index must be in 0..3");
  }
  const int n = static_cast<int>(indices.size());
  std::vector<cplx> c(tensor_size(n));
  c[flat_index(indices)] = 1.0;
  return StateTensor(n, std::move(c));
}

StateTensor product_state(const std::vector<Spinor>& spinors) {
  if (spinors.empty()) throw std::domain_error("product_state needs at least one spinor");
  std::vector<cplx> c{1.0};
  for (const Spinor& s : spinors) {
    std::vector<cplx> next;
    next.reserve(c.size() * 4);
    for (const cplx& z : c) {
      for (int j = 0; j < 4; ++j) next.push_back(z * s(j));
    }
    c = std::move(next);
  }
  return StateTensor(static_cast<int>(spinors.size()), std::move(c));
}

StateTensor random_state(int particles, std::uint64_t seed) {
  if (particles < 1 || particles > 4) {
    throw std::domain_error("random_state supports 1..4 particles, got " + std::to_string(particles));
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist;
  std::vector<cplx> c(tensor_size(particles));
  for (cplx& z : c) {
    const double re = dist(rng);
    const double im = dist(rng);
    z = cplx(re, im);
  }
  return StateTensor(particles, std::move(c)).normalized();
}

Spinor random_spinor(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist;
  Spinor s;
  for (int j = 0; j < 4; ++j) {
    const double re = dist(rng);
    const double im = dist(rng);
    s(j) = cplx(re, im);
  }
  return s / s.norm();
}

StateTensor apply_local(const StateTensor& state, int particle, const Mat4& m) {
  const int n = state.particles();
  if (particle < 0 || particle >= n) {
    throw std::out_of_range("particle " + std::to_string(particle) + " out of range for a " +
                            std::to_string(n) + "-particle state");
  }
  const std::size_t stride = tensor_size(n - 1 - particle);
  const std::size_t outer = tensor_size(particle);
  std::vector<cplx> out(state.size());
  const cplx* in = state.data();
  for (std::size_t o = 0; o < outer; ++o) {
    for (std::size_t r = 0; r < stride; ++r) {
      const std::size_t base = o * 4 * stride + r;
      for (int j = 0; j < 4; ++j) {
        cplx acc = 0.0;
        for (int k = 0; k < 4; ++k) acc += m(j, k) * in[base + static_cast<std::size_t>(k) * stride];
        out[base + static_cast<std::size_t>(j) * stride] = acc;
      }
    }
  }
  return StateTensor(n, std::move(out));
}

StateTensor project_local(const StateTensor& state, int particle, Projector kind) {
  return apply_local(state, particle, projector(kind));
}

double max_distance(const StateTensor& a, const StateTensor& b) {
  if (a.particles() != b.particles()) return INFINITY;
  double d = 0.0;
  for (std::size_t f = 0; f < a.size(); ++f) d = std::max(d, std::abs(a[f] - b[f]));
  return d;
}

namespace {

struct Term {
  cplx coeff;
  std::vector<int> index;
};

StateTensor build(const std::vector<Term>& terms, double norm_sq) {
  const int n = static_cast<int>(terms.front().index.size());
  std::vector<cplx> c(tensor_size(n));
  for (const Term& t : terms) c[flat_index(t.index)] += t.coeff / std::sqrt(norm_sq);
  return StateTensor(n, std::move(c));
}

std::vector<ExpectedValue> expect(const std::vector<std::string>& names, double magnitude,
                                  const std::string& note) {
  std::vector<ExpectedValue> out;
  for (const auto& n : names) out.push_back({n, magnitude, note});
  return out;
}

void append(std::vector<ExpectedValue>& dst, std::vector<ExpectedValue> src) {
  dst.insert(dst.end(), src.begin(), src.end());
}

const std::vector<std::string> kIs{"I1", "I2", "I2A", "I2B"};
const std::vector<std::string> kQs{"Q1", "Q2", "Q3", "Q4"};

std::vector<std::string> minus(const std::vector<std::string>& all, const std::vector<std::string>& drop) {
  std::vector<std::string> out;
  for (const auto& n : all) {
    if (std::find(drop.begin(), drop.end(), n) == drop.end()) out.push_back(n);
  }
  return out;
}

const std::vector<std::string> kTwoParticle22{"R1", "R2", "R3", "R4", "R5", "R6", "T1", "T2", "N1N4mN2N3"};

std::vector<std::string> longlist_names() {
  std::vector<std::string> out;
  for (char f : {'X', 'Z', 'B', 'D'}) {
    for (int k = 1; k <= 8; ++k) out.push_back(std::string(1, f) + std::to_string(k));
  }
  return out;
}

/// Two-particle entry whose stated nonzero magnitudes are listed and whose
/// remaining (2,0), (2,2) and (3,1) values are stated to vanish.
std::vector<ExpectedValue> two_particle_table(const std::vector<std::pair<std::string, double>>& nonzero,
                                              bool zeros_for_i_and_q) {
  std::vector<ExpectedValue> out;
  std::vector<std::string> named;
  for (const auto& [n, v] : nonzero) {
    out.push_back({n, v, "stated magnitude"});
    named.push_back(n);
  }
  append(out, expect(minus(kTwoParticle22, named), 0.0, "stated zero"));
  if (zeros_for_i_and_q) {
    append(out, expect(minus(kIs, named), 0.0, "stated zero"));
    append(out, expect(minus(kQs, named), 0.0, "stated zero"));
  }
  return out;
}

std::vector<ExpectedValue> three_particle_table(const std::vector<std::string>& nonzero, double w1) {
  std::vector<ExpectedValue> out = expect(nonzero, 1.0 / 8.0, "stated magnitude");
  append(out, expect(minus(longlist_names(), nonzero), 0.0, "stated zero"));
  out.push_back({"W1", w1, w1 == 0.0 ? "stated zero" : "stated magnitude"});
  return out;
}

std::vector<CatalogEntry> make_catalog() {
  const cplx i(0.0, 1.0);
  std::vector<CatalogEntry> c;
  c.push_back({"epr2", "(phi0 x phi1 - i phi1 x phi0)/sqrt2",
               build({{1.0, {0, 1}}, {-i, {1, 0}}}, 2),
               two_particle_table({{"I1", 0.5}, {"R1", 0.25}, {"R4", 0.25}, {"T1", 0.5}}, true)});
  c.push_back({"i2", "(phi1 x phi3 - phi2 x phi0)/sqrt2",
               build({{1.0, {1, 3}}, {-1.0, {2, 0}}}, 2),
               two_particle_table({{"I2", 0.5}, {"R3", 0.25}, {"R6", 0.25}, {"T1", 0.5}}, true)});
  c.push_back({"i2a", "(phi0 x phi0 - phi1 x phi3)/sqrt2",
               build({{1.0, {0, 0}}, {-1.0, {1, 3}}}, 2),
               two_particle_table({{"I2A", 0.5}, {"R1", 0.25}, {"R6", 0.25}, {"T1", 0.5}}, true)});
  c.push_back({"i2b", "(phi1 x phi1 - phi2 x phi0)/sqrt2",
               build({{1.0, {1, 1}}, {-1.0, {2, 0}}}, 2),
               two_particle_table({{"I2B", 0.5}, {"R3", 0.25}, {"R4", 0.25}, {"T1", 0.5}}, true)});
  c.push_back({"xccx", "(phi0 x phi1 + phi1 x phi3)/sqrt2",
               build({{1.0, {0, 1}}, {1.0, {1, 3}}}, 2),
               two_particle_table({{"R1", 0.25}, {"T1", 0.5}}, true)});
  c.push_back({"xccx2", "(phi0 x phi2 + phi3 x phi0)/sqrt2",
               build({{1.0, {0, 2}}, {1.0, {3, 0}}}, 2),
               two_particle_table({{"R3", 0.25}, {"T1", 0.5}}, true)});
  c.push_back({"xccx3", "(phi0 x phi0 + phi2 x phi1)/sqrt2",
               build({{1.0, {0, 0}}, {1.0, {2, 1}}}, 2),
               two_particle_table({{"R4", 0.25}, {"T1", 0.5}}, true)});
  c.push_back({"xccx4", "(phi0 x phi3 + phi2 x phi0)/sqrt2",
               build({{1.0, {0, 3}}, {1.0, {2, 0}}}, 2),
               two_particle_table({{"R6", 0.25}, {"T1", 0.5}}, true)});
  c.push_back({"xccx5", "(phi0 x phi2 + phi2 x phi0)/sqrt2",
               build({{1.0, {0, 2}}, {1.0, {2, 0}}}, 2),
               {{"T1", 0.5, "stated magnitude"}, {"N1N4mN2N3", 1.0, "stated magnitude"}}});
  {
    std::vector<ExpectedValue> t{{"T1", 4.0 / 3.0, "stated magnitude"},
                                 {"T2", 4.0 / 3.0, "stated magnitude"},
                                 {"N1N4mN2N3", 6.0 / 9.0, "stated magnitude"}};
    append(t, expect({"R1", "R2", "R3", "R4", "R5", "R6"}, 0.0, "stated zero"));
    append(t, expect(kIs, 0.0, "stated zero"));
    append(t, expect(kQs, 0.0, "stated zero"));
    c.push_back({"xccx6", "(phi0 x phi2 + (1+i) phi2 x phi0)/sqrt3",
                 build({{1.0, {0, 2}}, {1.0 + i, {2, 0}}}, 3), t});
  }
  c.push_back({"utoy", "(phi0 x phi2 + phi1 x phi0 + phi2 x phi2)/sqrt3",
               build({{1.0, {0, 2}}, {1.0, {1, 0}}, {1.0, {2, 2}}}, 3),
               two_particle_table({{"R1", 1.0 / 9}, {"R2", 1.0 / 9}, {"R3", 1.0 / 9}}, true)});
  c.push_back({"utoya", "(phi2 x phi0 + phi0 x phi1 + phi2 x phi2)/sqrt3",
               build({{1.0, {2, 0}}, {1.0, {0, 1}}, {1.0, {2, 2}}}, 3),
               two_particle_table({{"R4", 1.0 / 9}, {"R5", 1.0 / 9}, {"R6", 1.0 / 9}}, true)});
  {
    auto t = two_particle_table({{"R1", 0.04}, {"R2", 0.04}, {"R3", 0.04}, {"R4", 0.04}, {"T1", 0.08}}, false);
    append(t, {{"Q2", 0.04, "stated magnitude"}, {"Q4", 0.04, "stated magnitude"},
               {"Q1", 0.0, "stated zero"}, {"Q3", 0.0, "stated zero"}});
    c.push_back({"toi", "(phi0 x phi2 + phi1 x phi1 - phi2 x phi2 + phi3 x phi0 + phi3 x phi1)/sqrt5",
                 build({{1.0, {0, 2}}, {1.0, {1, 1}}, {-1.0, {2, 2}}, {1.0, {3, 0}}, {1.0, {3, 1}}}, 5), t});
  }
  {
    auto t = two_particle_table({{"R1", 0.04}, {"R4", 0.04}, {"R5", 0.04}, {"R6", 0.04}, {"T1", 0.08}}, false);
    append(t, {{"Q2", 0.04, "stated magnitude"}, {"Q3", 0.04, "stated magnitude"},
               {"Q1", 0.0, "stated zero"}, {"Q4", 0.0, "stated zero"}});
    c.push_back({"toi2", "(phi2 x phi0 + phi1 x phi1 - phi2 x phi2 + phi0 x phi3 + phi1 x phi3)/sqrt5",
                 build({{1.0, {2, 0}}, {1.0, {1, 1}}, {-1.0, {2, 2}}, {1.0, {0, 3}}, {1.0, {1, 3}}}, 5), t});
  }
  c.push_back({"req1", "(phi001 + phi010 + phi100 + phi000)/2",
               build({{1.0, {0, 0, 1}}, {1.0, {0, 1, 0}}, {1.0, {1, 0, 0}}, {1.0, {0, 0, 0}}}, 4),
               three_particle_table({"B1", "Z1", "D1"}, 1.0 / 16.0)});
  c.push_back({"req2", "(phi003 + phi030 + phi300 + phi222)/2",
               build({{1.0, {0, 0, 3}}, {1.0, {0, 3, 0}}, {1.0, {3, 0, 0}}, {1.0, {2, 2, 2}}}, 4),
               three_particle_table({"B8", "Z8", "D8"}, 0.0)});
  c.push_back({"req3", "(phi020 + phi001 + phi032 + phi102)/2",
               build({{1.0, {0, 2, 0}}, {1.0, {0, 0, 1}}, {1.0, {0, 3, 2}}, {1.0, {1, 0, 2}}}, 4),
               three_particle_table({"B6", "Z6", "D6"}, 0.0)});
  {
    auto t = expect(longlist_names(), 0.0, "stated zero");
    t.push_back({"W1", 4.0 / 27.0, "stated magnitude"});
    c.push_back({"w3", "(phi001 + phi010 + phi100)/sqrt3",
                 build({{1.0, {0, 0, 1}}, {1.0, {0, 1, 0}}, {1.0, {1, 0, 0}}}, 3), t});
  }
  return c;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> c = make_catalog();
  return c;
}

}  // namespace

const CatalogEntry& catalog_state(std::string_view name) {
  for (const CatalogEntry& e : catalog()) {
    if (e.name == name) return e;
  }
  std::string msg = "unknown catalog state '" + std::string(name) + "'; available:";
  for (const CatalogEntry& e : catalog()) msg += " " + e.name;
  throw std::out_of_range(msg);
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const CatalogEntry& e : catalog()) out.push_back(e.name);
  return out;
}

}  // namespace spinv
