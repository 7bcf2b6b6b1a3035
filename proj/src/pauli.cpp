#include "cswitch/pauli.hpp"

#include <sstream>

namespace cswitch {

PauliString PauliString::single(uint32_t n, uint32_t q, char p) {
  if (q >= n) throw std::out_of_range("qubit index out of range");
  uint64_t bit = uint64_t(1) << q;
  switch (p) {
    case 'I': return PauliString(n, 0, 0, 0);
    case 'X': return PauliString(n, bit, 0, 0);
    case 'Z': return PauliString(n, 0, bit, 0);
    case 'Y': return PauliString(n, bit, bit, 1);
    default: throw std::invalid_argument("unknown Pauli letter");
  }
}

int PauliString::sign() const {
  // Hermitian iff phase == popcount(x & z) mod 2 matches: i^phase * (XZ)^y
  // is hermitian when (phase - #Y) is even.
  uint32_t ys = static_cast<uint32_t>(std::popcount(x & z));
  uint32_t rel = (phase + 4u - (ys & 3u)) & 3u;
  if (rel == 0) return +1;
  if (rel == 2) return -1;
  throw std::logic_error("PauliString::sign on non-hermitian operator");
}

std::string PauliString::to_string() const {
  std::ostringstream os;
  uint32_t ys = static_cast<uint32_t>(std::popcount(x & z));
  uint32_t rel = (phase + 4u - (ys & 3u)) & 3u;
  switch (rel) {
    case 0: break;
    case 1: os << "+i "; break;
    case 2: os << "- "; break;
    case 3: os << "-i "; break;
  }
  bool any = false;
  for (uint32_t q = 0; q < n; ++q) {
    bool xb = (x >> q) & 1, zb = (z >> q) & 1;
    if (!xb && !zb) continue;
    if (any) os << ' ';
    os << (xb && zb ? 'Y' : (xb ? 'X' : 'Z')) << q;
    any = true;
  }
  if (!any) os << 'I';
  return os.str();
}

PauliString PauliString::parse(uint32_t n, std::string_view text) {
  PauliString out = identity(n);
  size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i; };
  skip_ws();
  uint8_t k = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    bool neg = text[i] == '-';
    ++i;
    bool imag = i < text.size() && (text[i] == 'i' || text[i] == 'I');
    if (imag) ++i;
    k = imag ? (neg ? 3 : 1) : (neg ? 2 : 0);
  }
  PauliString acc = identity(n);
  acc.phase = k;
  skip_ws();
  while (i < text.size()) {
    char c = text[i];
    if (c != 'X' && c != 'Y' && c != 'Z' && c != 'I') throw std::invalid_argument("bad Pauli letter in: " + std::string(text));
    ++i;
    if (c == 'I' && (i >= text.size() || !isdigit(text[i]))) { skip_ws(); continue; }
    size_t j = i;
    while (j < text.size() && isdigit(text[j])) ++j;
    if (j == i) throw std::invalid_argument("missing qubit index in: " + std::string(text));
    uint32_t q = static_cast<uint32_t>(std::stoul(std::string(text.substr(i, j - i))));
    i = j;
    if (c != 'I') acc = multiply(acc, single(n, q, c));
    skip_ws();
  }
  return acc;
}

PauliString PauliString::embed(uint32_t m, const std::vector<uint32_t>& map) const {
  if (map.size() < n) throw std::invalid_argument("embedding map too short");
  PauliString out(m, 0, 0, phase);
  for (uint32_t q = 0; q < n; ++q) {
    uint64_t bit = uint64_t(1) << q;
    uint64_t dst = uint64_t(1) << map[q];
    if (x & bit) out.x |= dst;
    if (z & bit) out.z |= dst;
  }
  return out;
}

PauliString multiply(const PauliString& a, const PauliString& b) {
  if (a.n != b.n) throw std::invalid_argument("Pauli length mismatch");
  // Per qubit: X^{xa} Z^{za} X^{xb} Z^{zb} = (-1)^{za*xb} X^{xa^xb} Z^{za^zb}.
  uint32_t swaps = static_cast<uint32_t>(std::popcount(a.z & b.x));
  PauliString out(a.n, a.x ^ b.x, a.z ^ b.z,
                  static_cast<uint8_t>((a.phase + b.phase + 2 * swaps) & 3));
  return out;
}

bool commutes(const PauliString& a, const PauliString& b) {
  if (a.n != b.n) throw std::invalid_argument("Pauli length mismatch");
  uint32_t s = static_cast<uint32_t>(std::popcount(a.x & b.z) + std::popcount(a.z & b.x));
  return (s & 1) == 0;
}

PauliString conjugate(const CliffordGate& g, const PauliString& p) {
  PauliString out = p;
  uint64_t b0 = uint64_t(1) << g.q0;
  switch (g.kind) {
    case CliffordGate::I:
      break;
    case CliffordGate::H: {
      if (g.q0 >= p.n) throw std::out_of_range("gate target out of range");
      bool xb = p.x & b0, zb = p.z & b0;
      out.x = (p.x & ~b0) | (zb ? b0 : 0);
      out.z = (p.z & ~b0) | (xb ? b0 : 0);
      if (xb && zb) out.phase = (out.phase + 2) & 3;  // Y -> -Y
      break;
    }
    case CliffordGate::S: {
      if (g.q0 >= p.n) throw std::out_of_range("gate target out of range");
      if (p.x & b0) {
        out.z ^= b0;
        out.phase = (out.phase + 1) & 3;  // X -> iXZ = Y, XZ -> iX
      }
      break;
    }
    case CliffordGate::Sdg: {
      if (g.q0 >= p.n) throw std::out_of_range("gate target out of range");
      if (p.x & b0) {
        out.z ^= b0;
        out.phase = (out.phase + 3) & 3;
      }
      break;
    }
    case CliffordGate::X:
      if (p.z & b0) out.phase = (out.phase + 2) & 3;
      break;
    case CliffordGate::Y:
      if (((p.x ^ p.z) & b0) != 0) out.phase = (out.phase + 2) & 3;
      break;
    case CliffordGate::Z:
      if (p.x & b0) out.phase = (out.phase + 2) & 3;
      break;
    case CliffordGate::CNOT: {
      if (g.q0 >= p.n || g.q1 >= p.n) throw std::out_of_range("gate target out of range");
      uint64_t b1 = uint64_t(1) << g.q1;
      // x_t ^= x_c, z_c ^= z_t; phase-free in the i^k X^x Z^z convention.
      if (p.x & b0) out.x ^= b1;
      if (p.z & b1) out.z ^= b0;
      break;
    }
  }
  return out;
}

}  // namespace cswitch
