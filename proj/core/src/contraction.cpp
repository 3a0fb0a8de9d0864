#include "spinor_inv/contraction.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <map>
#include <sstream>
#include <tuple>

namespace spinv {

const Mat4& sandwich_matrix(Sandwich s) {
  switch (s) {
    case Sandwich::C: return special(Special::C);
    case Sandwich::C5: return special(Special::C5);
    case Sandwich::G0: return special(Special::G0);
    case Sandwich::G05: return special(Special::G05);
  }
  throw std::invalid_argument("unknown sandwich");
}

std::string_view sandwich_name(Sandwich s) {
  switch (s) {
    case Sandwich::C: return "C";
    case Sandwich::C5: return "C5";
    case Sandwich::G0: return "g0";
    case Sandwich::G05: return "g05";
  }
  return "?";
}

bool is_bilinear(Sandwich s) { return s == Sandwich::C || s == Sandwich::C5; }
bool is_parity_odd(Sandwich s) { return s == Sandwich::C5 || s == Sandwich::G05; }

std::pair<int, int> ContractionPattern::bidegree() const {
  int k = 0;
  int l = 0;
  for (bool c : conjugated) (c ? l : k) += 1;
  return {k, l};
}

std::vector<int> ContractionPattern::parity_odd_counts() const {
  std::vector<int> counts(static_cast<std::size_t>(particles), 0);
  for (const Pairing& p : pairings) {
    if (is_parity_odd(p.sandwich)) ++counts[static_cast<std::size_t>(p.row.slot)];
  }
  return counts;
}

std::vector<bool> ContractionPattern::bilinear_observers() const {
  std::vector<bool> out(static_cast<std::size_t>(particles), false);
  for (const Pairing& p : pairings) {
    if (is_bilinear(p.sandwich)) out[static_cast<std::size_t>(p.row.slot)] = true;
  }
  return out;
}

std::string ContractionPattern::to_string() const {
  std::vector<std::string> slot_letters(factor_count() * static_cast<std::size_t>(particles));
  std::ostringstream os;
  bool first = true;
  for (const Pairing& p : pairings) {
    if (!first) os << ' ';
    first = false;
    os << sandwich_name(p.sandwich) << '[' << p.row_letter << ' ' << p.col_letter << ']';
    slot_letters[static_cast<std::size_t>(p.row.factor * particles + p.row.slot)] = std::string(1, p.row_letter);
    slot_letters[static_cast<std::size_t>(p.col.factor * particles + p.col.slot)] = std::string(1, p.col_letter);
  }
  for (std::size_t f = 0; f < factor_count(); ++f) {
    os << (conjugated[f] ? " Psi*[" : " Psi[");
    for (int s = 0; s < particles; ++s) {
      if (s > 0) os << ' ';
      os << slot_letters[f * static_cast<std::size_t>(particles) + static_cast<std::size_t>(s)];
    }
    os << ']';
  }
  return os.str();
}

std::string_view pattern_error_name(PatternErrorCode code) {
  switch (code) {
    case PatternErrorCode::Syntax: return "syntax";
    case PatternErrorCode::UnknownAtom: return "unknown-atom";
    case PatternErrorCode::SandwichArity: return "sandwich-arity";
    case PatternErrorCode::IndexCount: return "index-count";
    case PatternErrorCode::IndexInTwoSandwiches: return "index-in-two-sandwiches";
    case PatternErrorCode::IndexInTwoTensors: return "index-in-two-tensors";
    case PatternErrorCode::ArityMismatch: return "arity-mismatch";
    case PatternErrorCode::SlotMismatch: return "slot-mismatch";
    case PatternErrorCode::ParityViolation: return "parity-violation";
    case PatternErrorCode::NoTensors: return "no-tensors";
  }
  return "unknown";
}

PatternError::PatternError(PatternErrorCode code, std::string message, char letter, int position)
    : std::runtime_error(std::move(message)), code_(code), letter_(letter), position_(position) {}

namespace {

struct RawIndex {
  char letter;
  int position;
};

struct RawAtom {
  std::string name;
  int position;
  std::vector<RawIndex> indices;
};

[[noreturn]] void fail(PatternErrorCode code, const std::string& msg, char letter = 0, int pos = -1) {
  std::string full = std::string(pattern_error_name(code)) + ": " + msg;
  if (pos >= 0) full += " (at offset " + std::to_string(pos) + ")";
  throw PatternError(code, full, letter, pos);
}

std::string quoted(char letter) { return std::string("'") + letter + "'"; }

std::vector<RawAtom> lex(std::string_view text) {
  std::vector<RawAtom> atoms;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    RawAtom atom;
    atom.position = static_cast<int>(i);
    if (!std::isalpha(static_cast<unsigned char>(text[i]))) {
      fail(PatternErrorCode::Syntax, std::string("expected an atom name, found '") + text[i] + "'", 0,
           static_cast<int>(i));
    }
    while (i < text.size() && std::isalnum(static_cast<unsigned char>(text[i]))) atom.name += text[i++];
    if (i < text.size() && text[i] == '*') atom.name += text[i++];
    skip_ws();
    if (i >= text.size() || text[i] != '[') {
      fail(PatternErrorCode::Syntax, "expected '[' after atom '" + atom.name + "'", 0, static_cast<int>(i));
    }
    ++i;
    while (true) {
      skip_ws();
      if (i >= text.size()) {
        fail(PatternErrorCode::Syntax, "unterminated index list of atom '" + atom.name + "'", 0, atom.position);
      }
      if (text[i] == ']') {
        ++i;
        break;
      }
      const std::size_t start = i;
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != ']') ++i;
      const std::string_view tok = text.substr(start, i - start);
      if (tok.size() != 1 || tok[0] < 'a' || tok[0] > 'z') {
        fail(PatternErrorCode::Syntax, "index '" + std::string(tok) + "' must be a single letter a-z", 0,
             static_cast<int>(start));
      }
      atom.indices.push_back({tok[0], static_cast<int>(start)});
    }
    atoms.push_back(std::move(atom));
    skip_ws();
  }
  return atoms;
}

enum class AtomKind { Sandwich, Tensor };

struct Occurrence {
  AtomKind kind;
  int atom;      // index among atoms of that kind
  int slot;      // position inside the atom
  int position;  // byte offset
};

}  // namespace

ContractionPattern parse_pattern(std::string_view text) {
  const std::vector<RawAtom> atoms = lex(text);

  std::vector<Sandwich> sandwiches;
  std::vector<const RawAtom*> sandwich_atoms;
  std::vector<bool> conjugated;
  std::vector<const RawAtom*> tensor_atoms;
  for (const RawAtom& a : atoms) {
    if (a.name == "Psi" || a.name == "Psi*") {
      conjugated.push_back(a.name == "Psi*");
      tensor_atoms.push_back(&a);
      continue;
    }
    Sandwich s;
    if (a.name == "C") {
      s = Sandwich::C;
    } else if (a.name == "C5") {
      s = Sandwich::C5;
    } else if (a.name == "g0") {
      s = Sandwich::G0;
    } else if (a.name == "g05") {
      s = Sandwich::G05;
    } else {
      fail(PatternErrorCode::UnknownAtom,
           "unknown atom '" + a.name + "' (expected C, C5, g0, g05, Psi, Psi*)", 0, a.position);
    }
    if (a.indices.size() != 2) {
      fail(PatternErrorCode::SandwichArity,
           "sandwich atom '" + a.name + "' needs exactly two indices, got " + std::to_string(a.indices.size()),
           a.indices.empty() ? 0 : a.indices.front().letter, a.position);
    }
    sandwiches.push_back(s);
    sandwich_atoms.push_back(&a);
  }
  if (tensor_atoms.empty()) fail(PatternErrorCode::NoTensors, "pattern has no Psi or Psi* atoms");

  const std::size_t arity = tensor_atoms.front()->indices.size();
  for (const RawAtom* t : tensor_atoms) {
    if (t->indices.size() != arity) {
      fail(PatternErrorCode::ArityMismatch,
           "tensor atom has " + std::to_string(t->indices.size()) + " indices but the first has " +
               std::to_string(arity),
           t->indices.empty() ? 0 : t->indices.front().letter, t->position);
    }
  }

  std::map<char, std::vector<Occurrence>> occ;
  std::string order;
  auto record = [&](const std::vector<const RawAtom*>& list, AtomKind kind) {
    for (std::size_t a = 0; a < list.size(); ++a) {
      for (std::size_t k = 0; k < list[a]->indices.size(); ++k) {
        const RawIndex& ix = list[a]->indices[k];
        if (!occ.count(ix.letter)) order += ix.letter;
        occ[ix.letter].push_back({kind, static_cast<int>(a), static_cast<int>(k), ix.position});
      }
    }
  };
  record(sandwich_atoms, AtomKind::Sandwich);
  record(tensor_atoms, AtomKind::Tensor);
  std::sort(order.begin(), order.end(), [&](char x, char y) {
    return std::min_element(occ[x].begin(), occ[x].end(), [](auto& a, auto& b) { return a.position < b.position; })
               ->position <
           std::min_element(occ[y].begin(), occ[y].end(), [](auto& a, auto& b) { return a.position < b.position; })
               ->position;
  });
  for (char letter : order) {
    const auto& list = occ[letter];
    if (list.size() != 2) {
      fail(PatternErrorCode::IndexCount,
           "index " + quoted(letter) + " appears " + std::to_string(list.size()) + " times (must appear exactly twice)",
           letter, list.front().position);
    }
    if (list[0].kind == AtomKind::Sandwich && list[1].kind == AtomKind::Sandwich) {
      fail(PatternErrorCode::IndexInTwoSandwiches,
           "index " + quoted(letter) + " appears in two sandwich positions (one must be a tensor slot)", letter,
           list[1].position);
    }
    if (list[0].kind == AtomKind::Tensor && list[1].kind == AtomKind::Tensor) {
      fail(PatternErrorCode::IndexInTwoTensors,
           "index " + quoted(letter) + " joins two tensor slots directly (a sandwich matrix is required)", letter,
           list[1].position);
    }
  }

  auto tensor_slot = [&](char letter) {
    for (const Occurrence& o : occ[letter]) {
      if (o.kind == AtomKind::Tensor) return SlotRef{o.atom, o.slot};
    }
    return SlotRef{};
  };

  ContractionPattern p;
  p.particles = static_cast<int>(arity);
  p.conjugated = conjugated;
  for (std::size_t k = 0; k < sandwich_atoms.size(); ++k) {
    const RawAtom& a = *sandwich_atoms[k];
    Pairing pr;
    pr.sandwich = sandwiches[k];
    pr.row_letter = a.indices[0].letter;
    pr.col_letter = a.indices[1].letter;
    pr.row = tensor_slot(pr.row_letter);
    pr.col = tensor_slot(pr.col_letter);
    if (pr.row.slot != pr.col.slot) {
      fail(PatternErrorCode::SlotMismatch,
           "sandwich '" + a.name + "' joins index " + quoted(pr.row_letter) + " (slot " +
               std::to_string(pr.row.slot) + ") with index " + quoted(pr.col_letter) + " (slot " +
               std::to_string(pr.col.slot) + "); both must belong to the same particle",
           pr.row_letter, a.position);
    }
    const bool same = conjugated[static_cast<std::size_t>(pr.row.factor)] ==
                      conjugated[static_cast<std::size_t>(pr.col.factor)];
    if (is_bilinear(pr.sandwich) && !same) {
      fail(PatternErrorCode::ParityViolation,
           "sandwich '" + a.name + "' on indices " + quoted(pr.row_letter) + "," + quoted(pr.col_letter) +
               " must join two Psi or two Psi* factors",
           pr.row_letter, a.position);
    }
    if (!is_bilinear(pr.sandwich) && same) {
      fail(PatternErrorCode::ParityViolation,
           "sandwich '" + a.name + "' on indices " + quoted(pr.row_letter) + "," + quoted(pr.col_letter) +
               " must join a Psi factor with a Psi* factor",
           pr.row_letter, a.position);
    }
    p.pairings.push_back(pr);
  }
  return p;
}

namespace {

void check_particles(const ContractionPattern& p, const StateTensor& s) {
  if (s.particles() != p.particles) {
    throw std::invalid_argument("pattern has " + std::to_string(p.particles) + " slots per factor but the state has " +
                                std::to_string(s.particles()) + " particles");
  }
}

struct Entry {
  int row;
  int col;
  cplx value;
};

std::vector<Entry> nonzeros(const Mat4& m) {
  std::vector<Entry> out;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      if (m(r, c) != cplx(0.0)) out.push_back({r, c, m(r, c)});
    }
  }
  return out;
}

}  // namespace

cplx evaluate_naive(const ContractionPattern& p, const StateTensor& s) {
  check_particles(p, s);
  const int n = p.particles;
  const std::size_t np = p.pairings.size();
  const std::size_t nf = p.factor_count();
  std::vector<std::vector<Entry>> nz(np);
  for (std::size_t k = 0; k < np; ++k) nz[k] = nonzeros(sandwich_matrix(p.pairings[k].sandwich));
  const StateTensor sc = s.conjugated();
  std::vector<std::size_t> choice(np, 0);
  std::vector<int> vals(nf * static_cast<std::size_t>(n), 0);
  cplx total = 0.0;
  while (true) {
    cplx w = 1.0;
    for (std::size_t k = 0; k < np; ++k) {
      const Pairing& pr = p.pairings[k];
      const Entry& e = nz[k][choice[k]];
      w *= e.value;
      vals[static_cast<std::size_t>(pr.row.factor * n + pr.row.slot)] = e.row;
      vals[static_cast<std::size_t>(pr.col.factor * n + pr.col.slot)] = e.col;
    }
    for (std::size_t f = 0; f < nf; ++f) {
      std::size_t flat = 0;
      for (int sl = 0; sl < n; ++sl) flat = flat * 4 + static_cast<std::size_t>(vals[f * static_cast<std::size_t>(n) + static_cast<std::size_t>(sl)]);
      w *= p.conjugated[f] ? sc[flat] : s[flat];
      if (w == cplx(0.0)) break;
    }
    total += w;
    std::size_t k = 0;
    while (k < np) {
      if (++choice[k] < nz[k].size()) break;
      choice[k] = 0;
      ++k;
    }
    if (k == np) break;
  }
  return total;
}

namespace {

std::string letters_union(const std::string& a, const std::string& b) {
  std::string u = a;
  for (char c : b) {
    if (u.find(c) == std::string::npos) u += c;
  }
  return u;
}

std::string letters_shared(const std::string& a, const std::string& b) {
  std::string s;
  for (char c : a) {
    if (b.find(c) != std::string::npos) s += c;
  }
  return s;
}

std::string letters_result(const std::string& a, const std::string& b) {
  std::string r;
  for (char c : a) {
    if (b.find(c) == std::string::npos) r += c;
  }
  for (char c : b) {
    if (a.find(c) == std::string::npos) r += c;
  }
  return r;
}

double pow4(std::size_t k) { return std::ldexp(1.0, static_cast<int>(2 * k)); }

struct Tensor {
  std::string letters;
  std::vector<cplx> data;
};

std::vector<std::size_t> strides_for(const std::string& letters, const std::string& all) {
  std::vector<std::size_t> st(all.size(), 0);
  std::size_t stride = 1;
  for (std::size_t k = letters.size(); k-- > 0;) {
    st[all.find(letters[k])] = stride;
    stride *= 4;
  }
  return st;
}

Tensor contract(const Tensor& a, const Tensor& b, const std::string& result) {
  const std::string all = letters_union(a.letters, b.letters);
  const std::vector<std::size_t> sa = strides_for(a.letters, all);
  const std::vector<std::size_t> sb = strides_for(b.letters, all);
  const std::vector<std::size_t> sr = strides_for(result, all);
  Tensor out{result, std::vector<cplx>(tensor_size(static_cast<int>(result.size())))};
  const std::size_t u = all.size();
  std::vector<int> digit(u, 0);
  std::size_t oa = 0;
  std::size_t ob = 0;
  std::size_t orr = 0;
  while (true) {
    out.data[orr] += a.data[oa] * b.data[ob];
    std::size_t k = u;
    while (k-- > 0) {
      if (++digit[k] < 4) {
        oa += sa[k];
        ob += sb[k];
        orr += sr[k];
        break;
      }
      digit[k] = 0;
      oa -= 3 * sa[k];
      ob -= 3 * sb[k];
      orr -= 3 * sr[k];
      if (k == 0) return out;
    }
    if (u == 0) return out;
  }
}

}  // namespace

std::string EvaluationPlan::describe() const {
  std::ostringstream os;
  const std::size_t leaves = leaf_letters.size();
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const PlanStep& st = steps[k];
    os << "t" << (leaves + k) << " = t" << st.lhs << " * t" << st.rhs << " sum[" << st.contracted << "] -> ["
       << st.result << "] cost " << st.flops << "\n";
  }
  os << "total cost " << flops << " vs naive " << naive_flops << "\n";
  return os.str();
}

EvaluationPlan plan(const ContractionPattern& p) {
  EvaluationPlan ep;
  ep.pattern = p;
  const int n = p.particles;
  std::vector<std::string> slot_letters(p.factor_count() * static_cast<std::size_t>(n));
  for (const Pairing& pr : p.pairings) {
    slot_letters[static_cast<std::size_t>(pr.row.factor * n + pr.row.slot)] = std::string(1, pr.row_letter);
    slot_letters[static_cast<std::size_t>(pr.col.factor * n + pr.col.slot)] = std::string(1, pr.col_letter);
  }
  for (std::size_t f = 0; f < p.factor_count(); ++f) {
    std::string l;
    for (int s = 0; s < n; ++s) l += slot_letters[f * static_cast<std::size_t>(n) + static_cast<std::size_t>(s)];
    ep.leaf_letters.push_back(l);
  }
  for (const Pairing& pr : p.pairings) ep.leaf_letters.push_back(std::string{pr.row_letter, pr.col_letter});
  ep.naive_flops = pow4(2 * p.pairings.size());

  std::vector<std::pair<int, std::string>> active;
  for (std::size_t k = 0; k < ep.leaf_letters.size(); ++k) active.emplace_back(static_cast<int>(k), ep.leaf_letters[k]);
  int next_id = static_cast<int>(ep.leaf_letters.size());
  while (active.size() > 1) {
    std::size_t best_i = 0;
    std::size_t best_j = 0;
    bool found = false;
    bool best_shared = false;
    std::tuple<std::size_t, std::size_t> best_key{0, 0};
    for (std::size_t i = 0; i < active.size(); ++i) {
      for (std::size_t j = i + 1; j < active.size(); ++j) {
        const bool shared = !letters_shared(active[i].second, active[j].second).empty();
        const std::size_t res = letters_result(active[i].second, active[j].second).size();
        const std::size_t uni = letters_union(active[i].second, active[j].second).size();
        const std::tuple<std::size_t, std::size_t> key{res, uni};
        if (!found || (shared && !best_shared) || (shared == best_shared && key < best_key)) {
          found = true;
          best_shared = shared;
          best_key = key;
          best_i = i;
          best_j = j;
        }
      }
    }
    const auto& a = active[best_i];
    const auto& b = active[best_j];
    PlanStep st;
    st.lhs = a.first;
    st.rhs = b.first;
    st.contracted = letters_shared(a.second, b.second);
    st.result = letters_result(a.second, b.second);
    st.flops = pow4(letters_union(a.second, b.second).size());
    ep.flops += st.flops;
    ep.steps.push_back(st);
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(best_j));
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(best_i));
    active.emplace_back(next_id++, st.result);
  }
  return ep;
}

cplx execute(const EvaluationPlan& ep, const StateTensor& s) {
  const ContractionPattern& p = ep.pattern;
  check_particles(p, s);
  std::vector<Tensor> tensors;
  tensors.reserve(ep.leaf_letters.size() + ep.steps.size());
  std::vector<cplx> plain = s.coefficients();
  std::vector<cplx> conj = s.conjugated().coefficients();
  for (std::size_t f = 0; f < p.factor_count(); ++f) {
    tensors.push_back({ep.leaf_letters[f], p.conjugated[f] ? conj : plain});
  }
  for (std::size_t k = 0; k < p.pairings.size(); ++k) {
    const Mat4& m = sandwich_matrix(p.pairings[k].sandwich);
    std::vector<cplx> d(16);
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) d[static_cast<std::size_t>(4 * r + c)] = m(r, c);
    }
    tensors.push_back({ep.leaf_letters[p.factor_count() + k], std::move(d)});
  }
  if (ep.steps.empty()) {
    cplx total = 0.0;
    for (const cplx& z : tensors.front().data) total += z;
    return total;
  }
  for (const PlanStep& st : ep.steps) {
    Tensor t = contract(tensors[static_cast<std::size_t>(st.lhs)], tensors[static_cast<std::size_t>(st.rhs)], st.result);
    tensors[static_cast<std::size_t>(st.lhs)].data.clear();
    tensors[static_cast<std::size_t>(st.rhs)].data.clear();
    tensors.push_back(std::move(t));
  }
  const Tensor& last = tensors.back();
  cplx total = 0.0;
  for (const cplx& z : last.data) total += z;
  return total;
}

cplx evaluate(const ContractionPattern& p, const StateTensor& s) { return execute(plan(p), s); }

}  // namespace spinv
