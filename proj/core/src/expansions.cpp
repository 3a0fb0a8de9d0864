// Transcribed expansions. The bodies are mechanical transcriptions of the
// printed sums; p(j, k) is psi_{jk} and s(j, k) its complex conjugate.

#include "spinor_inv/expansions.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace spinv {
namespace {

double A2(cplx z) { return std::norm(z); }
double sq(double x) { return x * x; }

using ExpansionFn = cplx (*)(const Mat4&, const Mat4&);

const std::vector<std::pair<std::string, ExpansionFn>>& table() {
  static const std::vector<std::pair<std::string, ExpansionFn>> t = {
    {"I1", [](const Mat4& p, [[maybe_unused]] const Mat4& s) -> cplx {
      return
        p(0, 0) * p(1, 1) - p(0, 1) * p(1, 0) + p(0, 2) * p(1, 3) - p(0, 3) * p(1, 2) + p(2, 0) *
        p(3, 1) - p(2, 1) * p(3, 0) + p(2, 2) * p(3, 3) - p(2, 3) * p(3, 2);
    }},
    {"I2", [](const Mat4& p, [[maybe_unused]] const Mat4& s) -> cplx {
      return
        p(1, 3) * p(2, 0) - p(1, 0) * p(2, 3) + p(1, 1) * p(2, 2) - p(1, 2) * p(2, 1) + p(0, 2) *
        p(3, 1) - p(0, 1) * p(3, 2) + p(0, 0) * p(3, 3) - p(0, 3) * p(3, 0);
    }},
    {"I2A", [](const Mat4& p, [[maybe_unused]] const Mat4& s) -> cplx {
      return
        p(0, 0) * p(1, 3) - p(0, 3) * p(1, 0) + p(0, 2) * p(1, 1) - p(0, 1) * p(1, 2) + p(2, 2) *
        p(3, 1) - p(2, 1) * p(3, 2) + p(2, 0) * p(3, 3) - p(2, 3) * p(3, 0);
    }},
    {"I2B", [](const Mat4& p, [[maybe_unused]] const Mat4& s) -> cplx {
      return
        p(1, 1) * p(2, 0) - p(1, 0) * p(2, 1) + p(1, 3) * p(2, 2) - p(1, 2) * p(2, 3) + p(0, 0) *
        p(3, 1) - p(0, 1) * p(3, 0) + p(0, 2) * p(3, 3) - p(0, 3) * p(3, 2);
    }},
    {"R1", [](const Mat4& p, [[maybe_unused]] const Mat4& s) -> cplx {
      return
        A2(p(0, 3) * p(1, 2) - p(0, 2) * p(1, 3) + p(2, 3) * p(3, 2) - p(2, 2) * p(3, 3)) -
        A2(p(1, 2) * p(0, 0) - p(0, 2) * p(1, 0) + p(2, 0) * p(3, 2) - p(2, 2) * p(3, 0)) -
        A2(p(1, 3) * p(0, 0) - p(0, 3) * p(1, 0) + p(2, 0) * p(3, 3) - p(2, 3) * p(3, 0)) +
        A2(p(1, 0) * p(0, 1) - p(1, 1) * p(0, 0) + p(2, 1) * p(3, 0) - p(2, 0) * p(3, 1)) -
        A2(p(1, 2) * p(0, 1) - p(0, 2) * p(1, 1) + p(2, 1) * p(3, 2) - p(3, 1) * p(2, 2)) -
        A2(p(1, 3) * p(0, 1) - p(1, 1) * p(0, 3) + p(2, 1) * p(3, 3) - p(2, 3) * p(3, 1));
    }},
    {"R2", [](const Mat4& p, [[maybe_unused]] const Mat4& s) -> cplx {
      return
        (p(1, 2) * p(2, 3) - p(0, 2) * p(3, 3) + p(0, 3) * p(3, 2) - p(1, 3) * p(2, 2)) * (s(0, 3)
        * s(1, 2) - s(0, 2) * s(1, 3) + s(2, 3) * s(3, 2) - s(2, 2) * s(3, 3)) + (p(2, 2) * p(1,
        0) - p(1, 2) * p(2, 0) + p(0, 2) * p(3, 0) - p(0, 0) * p(3, 2)) * (s(0, 0) * s(1, 2) -
        s(0, 2) * s(1, 0) - s(2, 2) * s(3, 0) + s(2, 0) * s(3, 2)) + (p(2, 3) * p(1, 0) - p(1, 3)
        * p(2, 0) + p(0, 3) * p(3, 0) - p(3, 3) * p(0, 0)) * (s(0, 0) * s(1, 3) - s(0, 3) * s(1,
        0) - s(2, 3) * s(3, 0) + s(2, 0) * s(3, 3)) + (p(1, 1) * p(2, 0) - p(1, 0) * p(2, 1) +
        p(0, 0) * p(3, 1) - p(0, 1) * p(3, 0)) * (s(0, 0) * s(1, 1) - s(0, 1) * s(1, 0) - s(2, 1)
        * s(3, 0) + s(2, 0) * s(3, 1)) + (p(1, 1) * p(2, 2) - p(0, 1) * p(3, 2) + p(3, 1) * p(0,
        2) - p(2, 1) * p(1, 2)) * (s(0, 1) * s(1, 2) - s(0, 2) * s(1, 1) - s(2, 2) * s(3, 1) +
        s(2, 1) * s(3, 2)) + (p(1, 1) * p(2, 3) - p(0, 1) * p(3, 3) + p(3, 1) * p(0, 3) - p(2, 1)
        * p(1, 3)) * (s(0, 1) * s(1, 3) - s(0, 3) * s(1, 1) - s(2, 3) * s(3, 1) + s(2, 1) * s(3,
        3));
    }},
    {"R3", [](const Mat4& p, [[maybe_unused]] const Mat4& s) -> cplx {
      return
        A2(p(2, 0) * p(1, 1) - p(1, 0) * p(2, 1) + p(0, 0) * p(3, 1) - p(0, 1) * p(3, 0)) -
        A2(p(3, 0) * p(0, 3) - p(3, 3) * p(0, 0) + p(1, 0) * p(2, 3) - p(1, 3) * p(2, 0)) -
        A2(p(2, 3) * p(1, 1) - p(3, 3) * p(0, 1) + p(3, 1) * p(0, 3) - p(2, 1) * p(1, 3)) -
        A2(p(3, 0) * p(0, 2) - p(3, 2) * p(0, 0) + p(2, 2) * p(1, 0) - p(1, 2) * p(2, 0)) -
        A2(p(3, 1) * p(0, 2) - p(3, 2) * p(0, 1) - p(2, 1) * p(1, 2) + p(2, 2) * p(1, 1)) +
        A2(p(3, 3) * p(0, 2) - p(3, 2) * p(0, 3) + p(2, 2) * p(1, 3) - p(2, 3) * p(1, 2));
    }},
    {"R4", [](const Mat4& p, [[maybe_unused]] const Mat4& s) -> cplx {
      return
        A2(p(3, 0) * p(2, 1) - p(2, 0) * p(3, 1) + p(3, 2) * p(2, 3) - p(2, 2) * p(3, 3)) -
        A2(p(2, 1) * p(0, 0) - p(2, 0) * p(0, 1) + p(0, 2) * p(2, 3) - p(2, 2) * p(0, 3)) -
        A2(p(3, 1) * p(0, 0) - p(3, 0) * p(0, 1) + p(0, 2) * p(3, 3) - p(3, 2) * p(0, 3)) +
        A2(p(1, 0) * p(0, 1) - p(1, 1) * p(0, 0) + p(1, 2) * p(0, 3) - p(0, 2) * p(1, 3)) -
        A2(p(2, 1) * p(1, 0) - p(2, 0) * p(1, 1) + p(1, 2) * p(2, 3) - p(1, 3) * p(2, 2)) -
        A2(p(3, 1) * p(1, 0) - p(1, 1) * p(3, 0) + p(1, 2) * p(3, 3) - p(3, 2) * p(1, 3));
    }},
    {"R5", [](const Mat4& p, [[maybe_unused]] const Mat4& s) -> cplx {
      return
        (p(2, 1) * p(3, 2) - p(2, 0) * p(3, 3) + p(3, 0) * p(2, 3) - p(3, 1) * p(2, 2)) * (s(3, 0)
        * s(2, 1) - s(2, 0) * s(3, 1) + s(3, 2) * s(2, 3) - s(2, 2) * s(3, 3)) + (p(2, 2) * p(0,
        1) - p(2, 1) * p(0, 2) + p(2, 0) * p(0, 3) - p(0, 0) * p(2, 3)) * (s(0, 0) * s(2, 1) -
        s(2, 0) * s(0, 1) - s(2, 2) * s(0, 3) + s(0, 2) * s(2, 3)) + (p(3, 2) * p(0, 1) - p(3, 1)
        * p(0, 2) + p(0, 3) * p(3, 0) - p(3, 3) * p(0, 0)) * (s(0, 0) * s(3, 1) - s(3, 0) * s(0,
        1) - s(3, 2) * s(0, 3) + s(0, 2) * s(3, 3)) + (p(1, 1) * p(0, 2) - p(0, 1) * p(1, 2) +
        p(0, 0) * p(1, 3) - p(1, 0) * p(0, 3)) * (s(0, 0) * s(1, 1) - s(0, 1) * s(1, 0) - s(1, 2)
        * s(0, 3) + s(0, 2) * s(1, 3)) + (p(1, 1) * p(2, 2) - p(1, 0) * p(2, 3) + p(1, 3) * p(2,
        0) - p(1, 2) * p(2, 1)) * (s(1, 0) * s(2, 1) - s(2, 0) * s(1, 1) - s(2, 2) * s(1, 3) +
        s(1, 2) * s(2, 3)) + (p(1, 1) * p(3, 2) - p(1, 0) * p(3, 3) + p(1, 3) * p(3, 0) - p(1, 2)
        * p(3, 1)) * (s(1, 0) * s(3, 1) - s(3, 0) * s(1, 1) - s(3, 2) * s(1, 3) + s(1, 2) * s(3,
        3));
    }},
    {"R6", [](const Mat4& p, [[maybe_unused]] const Mat4& s) -> cplx {
      return
        A2(p(0, 2) * p(1, 1) - p(0, 1) * p(1, 2) + p(0, 0) * p(1, 3) - p(1, 0) * p(0, 3)) -
        A2(p(3, 0) * p(0, 3) - p(3, 3) * p(0, 0) + p(0, 1) * p(3, 2) - p(3, 1) * p(0, 2)) -
        A2(p(3, 2) * p(1, 1) - p(3, 3) * p(1, 0) + p(1, 3) * p(3, 0) - p(1, 2) * p(3, 1)) -
        A2(p(0, 3) * p(2, 0) - p(2, 3) * p(0, 0) + p(2, 2) * p(0, 1) - p(2, 1) * p(0, 2)) -
        A2(p(1, 3) * p(2, 0) - p(2, 3) * p(1, 0) - p(1, 2) * p(2, 1) + p(2, 2) * p(1, 1)) +
        A2(p(3, 3) * p(2, 0) - p(2, 3) * p(3, 0) + p(2, 2) * p(3, 1) - p(3, 2) * p(2, 1));
    }},
    {"T1", [](const Mat4& p, [[maybe_unused]] const Mat4& s) -> cplx {
      return
        sq(A2(p(0, 0)) + A2(p(1, 0)) - A2(p(2, 0)) - A2(p(3, 0))) + sq(A2(p(0, 1)) + A2(p(1, 1)) -
        A2(p(2, 1)) - A2(p(3, 1))) + sq(A2(p(0, 2)) + A2(p(1, 2)) - A2(p(2, 2)) - A2(p(3, 2))) +
        sq(A2(p(0, 3)) + A2(p(1, 3)) - A2(p(2, 3)) - A2(p(3, 3))) + 2.0 * A2(p(0, 1) * s(0, 0) +
        p(1, 1) * s(1, 0) - p(2, 1) * s(2, 0) - p(3, 1) * s(3, 0)) - 2.0 * A2(p(0, 2) * s(0, 0) +
        p(1, 2) * s(1, 0) - p(2, 2) * s(2, 0) - p(3, 2) * s(3, 0)) - 2.0 * A2(p(0, 2) * s(0, 1) +
        p(1, 2) * s(1, 1) - p(2, 2) * s(2, 1) - p(3, 2) * s(3, 1)) - 2.0 * A2(p(0, 3) * s(0, 0) +
        p(1, 3) * s(1, 0) - p(2, 3) * s(2, 0) - p(3, 3) * s(3, 0)) - 2.0 * A2(p(0, 3) * s(0, 1) +
        p(1, 3) * s(1, 1) - p(2, 3) * s(2, 1) - p(3, 3) * s(3, 1)) + 2.0 * A2(p(0, 3) * s(0, 2) +
        p(1, 3) * s(1, 2) - p(2, 3) * s(2, 2) - p(3, 3) * s(3, 2)) - sq(A2(p(0, 0)) + A2(p(1, 0))
        - A2(p(2, 0)) - A2(p(3, 0)) + A2(p(0, 1)) + A2(p(1, 1)) - A2(p(2, 1)) - A2(p(3, 1)) -
        A2(p(0, 2)) - A2(p(1, 2)) + A2(p(2, 2)) + A2(p(3, 2)) - A2(p(0, 3)) - A2(p(1, 3)) +
        A2(p(2, 3)) + A2(p(3, 3)));
    }},
    {"Q1", [](const Mat4& p, [[maybe_unused]] const Mat4& s) -> cplx {
      return
        (p(0, 3) * s(0, 0) + p(0, 1) * s(0, 2) + p(1, 1) * s(1, 2) + p(1, 3) * s(1, 0)) * (p(2, 2)
        * p(3, 0) - p(2, 0) * p(3, 2)) + (p(0, 2) * s(0, 0) + p(1, 2) * s(1, 0) - p(0, 1) * s(0,
        3) - p(1, 1) * s(1, 3)) * (p(2, 0) * p(3, 3) - p(2, 3) * p(3, 0)) + (p(0, 0) * s(0, 0) +
        p(1, 0) * s(1, 0) + p(0, 1) * s(0, 1) + p(1, 1) * s(1, 1)) * (p(2, 3) * p(3, 2) - p(2, 2)
        * p(3, 3)) + (p(0, 3) * s(0, 1) - p(0, 0) * s(0, 2) + p(1, 3) * s(1, 1) - p(1, 0) * s(1,
        2)) * (p(2, 2) * p(3, 1) - p(2, 1) * p(3, 2)) + (p(0, 2) * s(0, 1) + p(1, 2) * s(1, 1) +
        p(0, 0) * s(0, 3) + p(1, 0) * s(1, 3)) * (p(2, 1) * p(3, 3) - p(2, 3) * p(3, 1)) + (p(0,
        2) * s(0, 2) + p(0, 3) * s(0, 3) + p(1, 2) * s(1, 2) + p(1, 3) * s(1, 3)) * (p(2, 0) *
        p(3, 1) - p(2, 1) * p(3, 0)) + (p(2, 0) * s(2, 0) + p(2, 1) * s(2, 1) + p(3, 0) * s(3, 0)
        + p(3, 1) * s(3, 1)) * (p(0, 2) * p(1, 3) - p(0, 3) * p(1, 2)) + (p(2, 2) * s(2, 0) - p(2,
        1) * s(2, 3) + p(3, 2) * s(3, 0) - p(3, 1) * s(3, 3)) * (p(0, 3) * p(1, 0) - p(0, 0) *
        p(1, 3)) + (p(2, 3) * s(2, 0) + p(3, 3) * s(3, 0) + p(3, 1) * s(3, 2) + p(2, 1) * s(2, 2))
        * (p(0, 0) * p(1, 2) - p(0, 2) * p(1, 0)) + (p(2, 2) * s(2, 1) + p(3, 2) * s(3, 1) + p(2,
        0) * s(2, 3) + p(3, 0) * s(3, 3)) * (p(0, 3) * p(1, 1) - p(0, 1) * p(1, 3)) + (p(2, 0) *
        s(2, 2) - p(3, 3) * s(3, 1) - p(2, 3) * s(2, 1) + p(3, 0) * s(3, 2)) * (p(0, 2) * p(1, 1)
        - p(0, 1) * p(1, 2)) + (p(2, 2) * s(2, 2) + p(2, 3) * s(2, 3) + p(3, 2) * s(3, 2) + p(3,
        3) * s(3, 3)) * (p(0, 1) * p(1, 0) - p(0, 0) * p(1, 1));
    }},
    {"Q2", [](const Mat4& p, [[maybe_unused]] const Mat4& s) -> cplx {
      return
        (p(0, 0) * s(0, 0) - p(0, 3) * s(0, 3) + p(3, 3) * s(3, 3) - p(3, 0) * s(3, 0)) * (p(1, 2)
        * p(2, 1) - p(1, 1) * p(2, 2)) + (p(0, 3) * s(0, 1) - p(3, 2) * s(3, 0) - p(3, 3) * s(3,
        1) + p(0, 2) * s(0, 0)) * (p(1, 1) * p(2, 0) - p(1, 0) * p(2, 1)) + (p(0, 0) * s(0, 1) -
        p(3, 2) * s(3, 3) - p(3, 0) * s(3, 1) + s(0, 3) * p(0, 2)) * (p(1, 3) * p(2, 1) - p(1, 1)
        * p(2, 3)) + (p(0, 3) * s(0, 2) - p(3, 3) * s(3, 2) - p(3, 1) * s(3, 0) + s(0, 0) * p(0,
        1)) * (p(1, 0) * p(2, 2) - p(1, 2) * p(2, 0)) + (p(3, 2) * s(3, 2) - p(0, 2) * s(0, 2) +
        s(0, 1) * p(0, 1) - p(3, 1) * s(3, 1)) * (p(1, 0) * p(2, 3) - p(1, 3) * p(2, 0)) + (p(3,
        1) * s(3, 3) - p(0, 0) * s(0, 2) + p(3, 0) * s(3, 2) - p(0, 1) * s(0, 3)) * (p(1, 3) *
        p(2, 2) - p(1, 2) * p(2, 3)) + (p(1, 0) * s(1, 2) - p(2, 0) * s(2, 2) - p(2, 1) * s(2, 3)
        + p(1, 1) * s(1, 3)) * (p(0, 3) * p(3, 2) - p(0, 2) * p(3, 3)) + (p(1, 1) * s(1, 0) - p(2,
        3) * s(2, 2) + p(1, 3) * s(1, 2) - p(2, 1) * s(2, 0)) * (p(3, 0) * p(0, 2) - p(3, 2) *
        p(0, 0)) + (p(1, 2) * s(1, 0) - p(2, 2) * s(2, 0) - p(2, 3) * s(2, 1) + s(1, 1) * p(1, 3))
        * (p(3, 1) * p(0, 0) - p(0, 1) * p(3, 0)) + (p(1, 2) * s(1, 3) - p(2, 2) * s(2, 3) + p(1,
        0) * s(1, 1) - p(2, 0) * s(2, 1)) * (p(3, 3) * p(0, 1) - p(3, 1) * p(0, 3)) + (p(1, 1) *
        s(1, 1) - p(1, 2) * s(1, 2) - p(2, 1) * s(2, 1) + p(2, 2) * s(2, 2)) * (p(3, 0) * p(0, 3)
        - p(0, 0) * p(3, 3)) + (p(1, 0) * s(1, 0) - p(1, 3) * s(1, 3) - p(2, 0) * s(2, 0) + p(2,
        3) * s(2, 3)) * (p(0, 1) * p(3, 2) - p(3, 1) * p(0, 2));
    }},
    {"Q3", [](const Mat4& p, [[maybe_unused]] const Mat4& s) -> cplx {
      return
        (p(2, 0) * s(0, 0) + p(2, 1) * s(0, 1) + p(3, 0) * s(1, 0) + p(3, 1) * s(1, 1)) * (p(0, 2)
        * p(1, 3) - p(0, 3) * p(1, 2)) + (p(2, 3) * s(0, 1) - p(2, 0) * s(0, 2) + p(3, 3) * s(1,
        1) - p(3, 0) * s(1, 2)) * (p(0, 1) * p(1, 2) - p(0, 2) * p(1, 1)) + (p(2, 3) * s(0, 0) +
        p(2, 1) * s(0, 2) + p(3, 3) * s(1, 0) + p(3, 1) * s(1, 2)) * (p(0, 0) * p(1, 2) - p(0, 2)
        * p(1, 0)) + (p(2, 2) * s(0, 1) + p(2, 0) * s(0, 3) + p(3, 2) * s(1, 1) + p(3, 0) * s(1,
        3)) * (p(0, 3) * p(1, 1) - p(0, 1) * p(1, 3)) + (p(2, 2) * s(0, 0) - p(2, 1) * s(0, 3) +
        p(3, 2) * s(1, 0) - p(3, 1) * s(1, 3)) * (p(0, 3) * p(1, 0) - p(0, 0) * p(1, 3)) + (p(2,
        2) * s(0, 2) + p(2, 3) * s(0, 3) + p(3, 2) * s(1, 2) + p(3, 3) * s(1, 3)) * (p(0, 1) *
        p(1, 0) - p(0, 0) * p(1, 1)) + (p(0, 0) * s(2, 0) + p(0, 1) * s(2, 1) + p(1, 0) * s(3, 0)
        + p(1, 1) * s(3, 1)) * (p(2, 3) * p(3, 2) - p(2, 2) * p(3, 3)) + (p(0, 0) * s(2, 2) - p(0,
        3) * s(2, 1) - p(1, 3) * s(3, 1) + p(1, 0) * s(3, 2)) * (p(2, 1) * p(3, 2) - p(2, 2) *
        p(3, 1)) + (p(0, 3) * s(2, 0) + p(0, 1) * s(2, 2) + p(1, 3) * s(3, 0) + p(1, 1) * s(3, 2))
        * (p(2, 2) * p(3, 0) - p(2, 0) * p(3, 2)) + (p(0, 2) * s(2, 1) + p(0, 0) * s(2, 3) + p(1,
        2) * s(3, 1) + p(1, 0) * s(3, 3)) * (p(2, 1) * p(3, 3) - p(2, 3) * p(3, 1)) + (p(0, 2) *
        s(2, 0) - p(0, 1) * s(2, 3) + p(1, 2) * s(3, 0) - p(1, 1) * s(3, 3)) * (p(2, 0) * p(3, 3)
        - p(2, 3) * p(3, 0)) + (p(0, 2) * s(2, 2) + p(0, 3) * s(2, 3) + p(1, 2) * s(3, 2) + p(1,
        3) * s(3, 3)) * (p(2, 0) * p(3, 1) - p(2, 1) * p(3, 0));
    }},
    {"Q4", [](const Mat4& p, [[maybe_unused]] const Mat4& s) -> cplx {
      return
        (p(0, 0) * s(0, 0) - p(0, 3) * s(0, 3) - p(1, 3) * s(1, 3) + p(1, 0) * s(1, 0)) * (p(2, 1)
        * p(3, 2) - p(2, 2) * p(3, 1)) + (p(0, 3) * s(0, 1) + p(1, 2) * s(1, 0) + p(1, 3) * s(1,
        1) + p(0, 2) * s(0, 0)) * (p(2, 0) * p(3, 1) - p(2, 1) * p(3, 0)) + (p(0, 0) * s(0, 1) +
        p(1, 0) * s(1, 1) + p(1, 2) * s(1, 3) + p(0, 2) * s(0, 3)) * (p(2, 1) * p(3, 3) - p(2, 3)
        * p(3, 1)) + (p(0, 3) * s(0, 2) + p(1, 3) * s(1, 2) + p(1, 1) * s(1, 0) + p(0, 1) * s(0,
        0)) * (p(2, 2) * p(3, 0) - p(2, 0) * p(3, 2)) + (p(0, 0) * s(0, 2) + p(1, 0) * s(1, 2) +
        p(1, 1) * s(1, 3) + p(0, 1) * s(0, 3)) * (p(2, 3) * p(3, 2) - p(2, 2) * p(3, 3)) + (p(1,
        1) * s(1, 1) - p(1, 2) * s(1, 2) - p(0, 2) * s(0, 2) + p(0, 1) * s(0, 1)) * (p(2, 3) *
        p(3, 0) - p(2, 0) * p(3, 3)) + (p(2, 1) * s(2, 0) + p(2, 3) * s(2, 2) + p(3, 1) * s(3, 0)
        + p(3, 3) * s(3, 2)) * (p(0, 0) * p(1, 2) - p(0, 2) * p(1, 0)) + (p(2, 2) * s(2, 0) + p(2,
        3) * s(2, 1) + p(3, 2) * s(3, 0) + p(3, 3) * s(3, 1)) * (p(1, 0) * p(0, 1) - p(0, 0) *
        p(1, 1)) + (p(2, 0) * s(2, 1) + p(2, 2) * s(2, 3) + p(3, 0) * s(3, 1) + p(3, 2) * s(3, 3))
        * (p(0, 3) * p(1, 1) - p(0, 1) * p(1, 3)) + (p(2, 1) * s(2, 1) - p(2, 2) * s(2, 2) + p(3,
        1) * s(3, 1) - p(3, 2) * s(3, 2)) * (p(0, 0) * p(1, 3) - p(0, 3) * p(1, 0)) + (p(2, 0) *
        s(2, 2) + p(2, 1) * s(2, 3) + p(3, 0) * s(3, 2) + p(3, 1) * s(3, 3)) * (p(0, 2) * p(1, 3)
        - p(0, 3) * p(1, 2)) + (p(2, 0) * s(2, 0) - p(2, 3) * s(2, 3) + p(3, 0) * s(3, 0) - p(3,
        3) * s(3, 3)) * (p(0, 2) * p(1, 1) - p(0, 1) * p(1, 2));
    }},
    {"T2", [](const Mat4& p, [[maybe_unused]] const Mat4& s) -> cplx {
      return
        (A2(p(0, 2)) + A2(p(1, 2)) - A2(p(2, 2)) - A2(p(3, 2)) + A2(p(0, 0)) + A2(p(1, 0)) -
        A2(p(2, 0)) - A2(p(3, 0))) * (p(2, 0) * s(0, 2) - s(2, 0) * p(0, 2) + p(3, 0) * s(1, 2) -
        s(3, 0) * p(1, 2) - p(0, 0) * s(2, 2) + s(0, 0) * p(2, 2) - p(1, 0) * s(3, 2) + s(1, 0) *
        p(3, 2)) - (A2(p(0, 3)) + A2(p(1, 3)) - A2(p(2, 3)) - A2(p(3, 3)) + A2(p(0, 1)) + A2(p(1,
        1)) - A2(p(2, 1)) - A2(p(3, 1))) * (s(2, 3) * p(0, 1) - p(2, 3) * s(0, 1) + s(3, 3) * p(1,
        1) - p(3, 3) * s(1, 1) + p(0, 3) * s(2, 1) - s(0, 3) * p(2, 1) + p(1, 3) * s(3, 1) - s(1,
        3) * p(3, 1)) + (p(0, 2) * s(2, 2) - p(2, 2) * s(0, 2) - p(3, 2) * s(1, 2) + p(1, 2) *
        s(3, 2) + p(0, 0) * s(2, 0) - p(2, 0) * s(0, 0) - p(3, 0) * s(1, 0) + p(1, 0) * s(3, 0)) *
        (p(0, 0) * s(0, 2) + s(0, 0) * p(0, 2) + p(1, 0) * s(1, 2) + s(1, 0) * p(1, 2) - p(2, 0) *
        s(2, 2) - s(2, 0) * p(2, 2) - p(3, 0) * s(3, 2) - s(3, 0) * p(3, 2)) + (p(0, 1) * s(2, 1)
        - p(2, 1) * s(0, 1) - p(3, 1) * s(1, 1) + p(1, 1) * s(3, 1) + p(2, 3) * s(0, 3) - p(0, 3)
        * s(2, 3) + p(3, 3) * s(1, 3) - p(1, 3) * s(3, 3)) * (p(0, 3) * s(0, 1) - s(0, 3) * p(0,
        1) + p(1, 3) * s(1, 1) - s(1, 3) * p(1, 1) - p(2, 3) * s(2, 1) + s(2, 3) * p(2, 1) - p(3,
        3) * s(3, 1) + s(3, 3) * p(3, 1)) + (p(0, 0) * s(2, 1) - p(2, 0) * s(0, 1) - p(3, 0) *
        s(1, 1) + p(1, 0) * s(3, 1) - p(2, 2) * s(0, 3) - p(3, 2) * s(1, 3) + p(0, 2) * s(2, 3) +
        p(1, 2) * s(3, 3)) * (p(0, 3) * s(0, 0) + p(1, 3) * s(1, 0) - p(2, 3) * s(2, 0) - p(3, 3)
        * s(3, 0) + s(0, 2) * p(0, 1) + s(1, 2) * p(1, 1) - s(2, 2) * p(2, 1) - s(3, 2) * p(3, 1))
        + (s(0, 1) * p(0, 2) + s(1, 1) * p(1, 2) - s(2, 1) * p(2, 2) - s(3, 1) * p(3, 2) + s(0, 3)
        * p(0, 0) + s(1, 3) * p(1, 0) - s(2, 3) * p(2, 0) - s(3, 3) * p(3, 0)) * (s(2, 2) * p(0,
        3) + s(3, 2) * p(1, 3) - s(0, 2) * p(2, 3) - s(1, 2) * p(3, 3) - p(2, 1) * s(0, 0) - p(3,
        1) * s(1, 0) + p(0, 1) * s(2, 0) + p(1, 1) * s(3, 0)) - (s(0, 1) * p(0, 0) + s(1, 1) *
        p(1, 0) - s(2, 1) * p(2, 0) - s(3, 1) * p(3, 0)) * (s(2, 0) * p(0, 3) + s(3, 0) * p(1, 3)
        - s(0, 0) * p(2, 3) - s(1, 0) * p(3, 3) - p(2, 1) * s(0, 2) - p(3, 1) * s(1, 2) + p(0, 1)
        * s(2, 2) + p(1, 1) * s(3, 2)) + (p(0, 1) * s(0, 0) + p(1, 1) * s(1, 0) - p(2, 1) * s(2,
        0) - p(3, 1) * s(3, 0)) * (p(2, 0) * s(0, 3) + p(3, 0) * s(1, 3) - p(0, 0) * s(2, 3) -
        p(1, 0) * s(3, 3) - s(2, 1) * p(0, 2) - s(3, 1) * p(1, 2) + s(0, 1) * p(2, 2) + s(1, 1) *
        p(3, 2)) - (p(0, 3) * s(0, 2) + p(1, 3) * s(1, 2) - p(2, 3) * s(2, 2) - p(3, 3) * s(3, 2))
        * (p(0, 2) * s(2, 1) - p(2, 2) * s(0, 1) - p(3, 2) * s(1, 1) + p(1, 2) * s(3, 1) + s(2, 3)
        * p(0, 0) + s(3, 3) * p(1, 0) - s(0, 3) * p(2, 0) - s(1, 3) * p(3, 0)) + (p(0, 2) * s(0,
        3) + p(1, 2) * s(1, 3) - p(2, 2) * s(2, 3) - p(3, 2) * s(3, 3)) * (s(0, 2) * p(2, 1) -
        s(2, 2) * p(0, 1) - s(3, 2) * p(1, 1) + s(1, 2) * p(3, 1) + p(2, 3) * s(0, 0) + p(3, 3) *
        s(1, 0) - p(0, 3) * s(2, 0) - p(1, 3) * s(3, 0));
    }},
    {"N1N4mN2N3", [](const Mat4& p, [[maybe_unused]] const Mat4& s) -> cplx {
      return
        (p(2, 0) * s(0, 0) + p(2, 1) * s(0, 1) - p(2, 2) * s(0, 2) - p(2, 3) * s(0, 3) + p(3, 0) *
        s(1, 0) + p(3, 1) * s(1, 1) - p(3, 2) * s(1, 2) - p(3, 3) * s(1, 3) - p(0, 0) * s(2, 0) -
        p(0, 1) * s(2, 1) + p(0, 2) * s(2, 2) + p(0, 3) * s(2, 3) - p(1, 0) * s(3, 0) - p(1, 1) *
        s(3, 1) + p(1, 2) * s(3, 2) + p(1, 3) * s(3, 3)) * (p(0, 2) * s(0, 0) + p(0, 3) * s(0, 1)
        - p(0, 0) * s(0, 2) - p(0, 1) * s(0, 3) + p(1, 2) * s(1, 0) + p(1, 3) * s(1, 1) - p(1, 0)
        * s(1, 2) - p(1, 1) * s(1, 3) - p(2, 2) * s(2, 0) - p(2, 3) * s(2, 1) + p(2, 0) * s(2, 2)
        + p(2, 1) * s(2, 3) - p(3, 2) * s(3, 0) - p(3, 3) * s(3, 1) + p(3, 0) * s(3, 2) + p(3, 1)
        * s(3, 3)) + (p(2, 0) * s(0, 2) - p(2, 2) * s(0, 0) - p(2, 3) * s(0, 1) + p(2, 1) * s(0,
        3) - p(3, 2) * s(1, 0) - p(3, 3) * s(1, 1) + p(3, 0) * s(1, 2) + p(3, 1) * s(1, 3) + p(0,
        2) * s(2, 0) + p(0, 3) * s(2, 1) - p(0, 0) * s(2, 2) - p(0, 1) * s(2, 3) + p(1, 2) * s(3,
        0) + p(1, 3) * s(3, 1) - p(1, 0) * s(3, 2) - p(1, 1) * s(3, 3)) * (A2(p(0, 0)) + A2(p(0,
        1)) - A2(p(0, 2)) - A2(p(0, 3)) + A2(p(1, 0)) + A2(p(1, 1)) - A2(p(1, 2)) - A2(p(1, 3)) -
        A2(p(2, 0)) - A2(p(2, 1)) + A2(p(2, 2)) + A2(p(2, 3)) - A2(p(3, 0)) - A2(p(3, 1)) +
        A2(p(3, 2)) + A2(p(3, 3)));
    }},
  };
  return t;
}

}  // namespace

const std::vector<std::string>& expansion_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : table()) out.push_back(name);
    return out;
  }();
  return names;
}

bool has_expansion(std::string_view name) {
  const auto& t = table();
  return std::any_of(t.begin(), t.end(), [&](const auto& e) { return e.first == name; });
}

cplx expansion_oracle(std::string_view name, const StateTensor& s) {
  for (const auto& [n, fn] : table()) {
    if (n != name) continue;
    if (s.particles() != 2)
      throw std::invalid_argument("expansion oracles need a two-particle state");
    const Mat4 p = s.as_matrix();
    const Mat4 c = p.conjugate();
    return fn(p, c);
  }
  throw std::out_of_range("no transcribed expansion for '" + std::string(name) + "'");
}

}  // namespace spinv
