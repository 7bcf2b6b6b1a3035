#include "cswitch/code.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cswitch/gf2.hpp"

namespace cswitch {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error("invalid code: " + what);
}

// Orders error masks by (weight, sorted support list lexicographically).
bool mask_less(uint64_t a, uint64_t b) {
  int wa = std::popcount(a), wb = std::popcount(b);
  if (wa != wb) return wa < wb;
  while (a && b) {
    int la = std::countr_zero(a), lb = std::countr_zero(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return false;
}

uint64_t syndrome_against(uint64_t err, const std::vector<uint64_t>& gens) {
  uint64_t s = 0;
  for (size_t i = 0; i < gens.size(); ++i) {
    if (std::popcount(err & gens[i]) & 1) s |= uint64_t(1) << i;
  }
  return s;
}

}  // namespace

std::vector<uint64_t> CodeDefinition::x_stab_masks() const {
  std::vector<uint64_t> out;
  out.reserve(x_stabilizers.size());
  for (const auto& p : x_stabilizers) out.push_back(p.x);
  return out;
}

std::vector<uint64_t> CodeDefinition::z_stab_masks() const {
  std::vector<uint64_t> out;
  out.reserve(z_stabilizers.size());
  for (const auto& p : z_stabilizers) out.push_back(p.z);
  return out;
}

CodeReport verify_code(const CodeDefinition& code) {
  require(code.n >= 1 && code.n <= 16, "verify_code needs 1 <= n <= 16");
  for (const auto& p : code.x_stabilizers) require(p.z == 0 && p.phase == 0, "X generator not pure X");
  for (const auto& p : code.z_stabilizers) require(p.x == 0 && p.phase == 0, "Z generator not pure Z");

  std::vector<PauliString> gens = code.x_stabilizers;
  gens.insert(gens.end(), code.z_stabilizers.begin(), code.z_stabilizers.end());
  for (size_t i = 0; i < gens.size(); ++i) {
    for (size_t j = i + 1; j < gens.size(); ++j) {
      require(commutes(gens[i], gens[j]), "generators do not commute");
    }
  }
  size_t rx = gf2::rank(code.x_stab_masks());
  size_t rz = gf2::rank(code.z_stab_masks());
  require(rx == code.x_stabilizers.size(), "dependent X generators");
  require(rz == code.z_stabilizers.size(), "dependent Z generators");
  require(rx + rz == code.n - code.k, "generator count != n - k");

  require(code.logical_x.size() == code.k && code.logical_z.size() == code.k,
          "logical operator count != k");
  for (uint32_t i = 0; i < code.k; ++i) {
    for (const auto& g : gens) {
      require(commutes(code.logical_x[i], g), "logical X does not commute with stabilizers");
      require(commutes(code.logical_z[i], g), "logical Z does not commute with stabilizers");
    }
    for (uint32_t j = 0; j < code.k; ++j) {
      bool anti = !commutes(code.logical_x[i], code.logical_z[j]);
      require(anti == (i == j), "logical pairing violated");
    }
  }

  // Distances by exhaustive enumeration. An X-type logical is an X mask
  // commuting with every Z generator but outside the X stabilizer span.
  auto min_logical_weight = [&](const std::vector<uint64_t>& own_span,
                                const std::vector<uint64_t>& opposite_gens) {
    gf2::Span span;
    for (uint64_t m : own_span) span.add(m);
    uint32_t best = code.n + 1;
    uint64_t lim = uint64_t(1) << code.n;
    for (uint64_t m = 1; m < lim; ++m) {
      uint32_t w = static_cast<uint32_t>(std::popcount(m));
      if (w >= best) continue;
      bool comm = true;
      for (uint64_t g : opposite_gens) {
        if (std::popcount(m & g) & 1) { comm = false; break; }
      }
      if (!comm || span.contains(m)) continue;
      best = w;
    }
    return best;
  };

  CodeReport rep;
  rep.n = code.n;
  rep.k = code.k;
  if (code.k > 0) {
    rep.dx = min_logical_weight(code.x_stab_masks(), code.z_stab_masks());
    rep.dz = min_logical_weight(code.z_stab_masks(), code.x_stab_masks());
  }
  return rep;
}

LookupDecoder::LookupDecoder(const CodeDefinition& code) {
  x_masks_ = code.x_stab_masks();
  z_masks_ = code.z_stab_masks();
  uint64_t lim = uint64_t(1) << code.n;

  std::vector<uint64_t> order(lim);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), mask_less);

  x_table_.assign(uint64_t(1) << z_masks_.size(), ~uint64_t(0));
  z_table_.assign(uint64_t(1) << x_masks_.size(), ~uint64_t(0));
  for (uint64_t m : order) {
    uint64_t sx = syndrome_against(m, z_masks_);
    if (x_table_[sx] == ~uint64_t(0)) x_table_[sx] = m;
    uint64_t sz = syndrome_against(m, x_masks_);
    if (z_table_[sz] == ~uint64_t(0)) z_table_[sz] = m;
  }
  for (uint64_t v : x_table_) {
    if (v == ~uint64_t(0)) throw std::runtime_error("unreachable X syndrome; generators not full rank");
  }
  for (uint64_t v : z_table_) {
    if (v == ~uint64_t(0)) throw std::runtime_error("unreachable Z syndrome; generators not full rank");
  }
}

uint64_t LookupDecoder::syndrome_of_x(uint64_t e) const { return syndrome_against(e, z_masks_); }
uint64_t LookupDecoder::syndrome_of_z(uint64_t e) const { return syndrome_against(e, x_masks_); }
uint64_t LookupDecoder::decode_x(uint64_t s) const { return x_table_.at(s); }
uint64_t LookupDecoder::decode_z(uint64_t s) const { return z_table_.at(s); }

std::string export_code(const CodeDefinition& code) {
  std::ostringstream os;
  os << "# " << code.name << "\n";
  os << "n " << code.n << "\nk " << code.k << "\n";
  auto dump = [&](const char* hdr, const std::vector<PauliString>& v) {
    os << "[" << hdr << "]\n";
    for (const auto& p : v) os << p.to_string() << "\n";
  };
  dump("X", code.x_stabilizers);
  dump("Z", code.z_stabilizers);
  dump("LX", code.logical_x);
  dump("LZ", code.logical_z);
  return os.str();
}

CodeDefinition import_code(const std::string& text) {
  CodeDefinition code;
  std::istringstream is(text);
  std::string line;
  std::vector<PauliString>* section = nullptr;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') {
      if (line.size() > 2 && code.name.empty()) code.name = line.substr(2);
      continue;
    }
    if (line.rfind("n ", 0) == 0) { code.n = std::stoul(line.substr(2)); continue; }
    if (line.rfind("k ", 0) == 0) { code.k = std::stoul(line.substr(2)); continue; }
    if (line == "[X]") { section = &code.x_stabilizers; continue; }
    if (line == "[Z]") { section = &code.z_stabilizers; continue; }
    if (line == "[LX]") { section = &code.logical_x; continue; }
    if (line == "[LZ]") { section = &code.logical_z; continue; }
    if (!section) throw std::invalid_argument("stabilizer file: operator before section header");
    section->push_back(PauliString::parse(code.n, line));
  }
  return code;
}

}  // namespace cswitch
