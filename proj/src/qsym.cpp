#include "kpo/qsym.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace kpo {

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r))
    throw poset_error(Errc::Overflow, "coefficient overflow");
  return r;
}

Composition Composition::of(std::vector<int> parts) {
  for (int p : parts)
    if (p < 1) throw poset_error(Errc::InvalidShape, "composition part < 1");
  return Composition{std::move(parts)};
}

int Composition::degree() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

SubsetRep subset_of(const Composition& alpha) {
  SubsetRep s;
  s.n = alpha.degree();
  int acc = 0;
  for (size_t i = 0; i + 1 < alpha.parts.size(); i++) {
    acc += alpha.parts[i];
    s.bits |= Mask(1) << (acc - 1);
  }
  return s;
}

Composition composition_of(SubsetRep s) {
  std::vector<int> parts;
  int prev = 0;
  for (int i = 1; i <= s.n - 1; i++)
    if ((s.bits >> (i - 1)) & 1u) {
      parts.push_back(i - prev);
      prev = i;
    }
  if (s.n > 0) parts.push_back(s.n - prev);
  return Composition{std::move(parts)};
}

long long FExpansion::total() const {
  long long t = 0;
  for (auto& [s, c] : mult) t = checked_add(t, c);
  return t;
}

MExpansion MExpansion::zero(int n) {
  MExpansion m;
  m.n = n;
  m.coeffs.assign(mexp_size(n), 0);
  return m;
}

long long MExpansion::coeff(const Composition& alpha) const {
  return coeffs[subset_of(alpha).bits];
}

MExpansion f_to_m(const FExpansion& f) {
  MExpansion m = MExpansion::zero(f.n);
  Mask full = (Mask)(mexp_size(f.n) - 1);
  for (auto& [s, c] : f.mult) {
    // iterate supersets of s inside [n-1]
    Mask t = s;
    while (true) {
      m.coeffs[t] = checked_add(m.coeffs[t], c);
      if (t == full) break;
      t = (t + 1) | s;
    }
  }
  return m;
}

QSymPoly quasi_shuffle(const std::vector<int>& a, const std::vector<int>& b) {
  QSymPoly out;
  std::vector<int> prefix;
  auto rec = [&](auto&& self, size_t i, size_t j) -> void {
    if (i == a.size() && j == b.size()) {
      out[prefix] = checked_add(out[prefix], 1);
      return;
    }
    if (i < a.size()) {
      prefix.push_back(a[i]);
      self(self, i + 1, j);
      prefix.pop_back();
    }
    if (j < b.size()) {
      prefix.push_back(b[j]);
      self(self, i, j + 1);
      prefix.pop_back();
    }
    if (i < a.size() && j < b.size()) {
      prefix.push_back(a[i] + b[j]);
      self(self, i + 1, j + 1);
      prefix.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

QSymPoly quasi_shuffle(const MExpansion& a, const MExpansion& b) {
  QSymPoly out;
  for (Mask sa = 0; sa < mexp_size(a.n); sa++) {
    if (a.coeffs[sa] == 0) continue;
    auto ca = composition_of({a.n, sa}).parts;
    for (Mask sb = 0; sb < mexp_size(b.n); sb++) {
      if (b.coeffs[sb] == 0) continue;
      auto cb = composition_of({b.n, sb}).parts;
      long long scale = a.coeffs[sa] * b.coeffs[sb];
      for (auto& [comp, c] : quasi_shuffle(ca, cb))
        out[comp] = checked_add(out[comp], c * scale);
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

MExpansion mexp_of_qsym(const QSymPoly& q, int n) {
  MExpansion m = MExpansion::zero(n);
  for (auto& [comp, c] : q) {
    Composition alpha = Composition::of(comp);
    if (alpha.degree() != n)
      throw poset_error(Errc::InvalidShape, "mixed-degree qsym polynomial");
    Mask s = subset_of(alpha).bits;
    m.coeffs[s] = checked_add(m.coeffs[s], c);
  }
  return m;
}

bool mexp_equal(const MExpansion& a, const MExpansion& b) {
  return a.n == b.n && a.coeffs == b.coeffs;
}

std::string fingerprint(const MExpansion& m) {
  std::string out;
  out.reserve(1 + 8 * m.coeffs.size());
  out.push_back((char)m.n);
  for (long long c : m.coeffs) {
    unsigned long long u = (unsigned long long)c;
    for (int i = 0; i < 8; i++) out.push_back((char)((u >> (8 * i)) & 0xff));
  }
  return out;
}

std::string hex(const std::string& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

std::string composition_key(const std::vector<int>& parts) {
  bool digits = std::all_of(parts.begin(), parts.end(), [](int p) { return p <= 9; });
  std::ostringstream out;
  for (size_t i = 0; i < parts.size(); i++) {
    if (i && !digits) out << ",";
    out << parts[i];
  }
  return out.str();
}

std::string subset_key(Mask bits, int n) {
  std::ostringstream out;
  out << "S{";
  bool first = true;
  for (int i = 1; i <= n - 1; i++)
    if ((bits >> (i - 1)) & 1u) {
      if (!first) out << ",";
      out << i;
      first = false;
    }
  out << "}";
  return out.str();
}

std::string mexp_to_json(const MExpansion& m) {
  nlohmann::json j;
  j["n"] = m.n;
  j["basis"] = "M";
  auto coeffs = nlohmann::json::object();
  for (Mask s = 0; s < mexp_size(m.n); s++)
    if (m.coeffs[s] != 0)
      coeffs[composition_key(composition_of({m.n, s}).parts)] = m.coeffs[s];
  j["coeffs"] = coeffs;
  return j.dump();
}

std::string fexp_to_json(const FExpansion& f) {
  nlohmann::json j;
  j["n"] = f.n;
  j["basis"] = "F";
  auto coeffs = nlohmann::json::object();
  for (auto& [s, c] : f.mult) coeffs[subset_key(s, f.n)] = c;
  j["coeffs"] = coeffs;
  return j.dump();
}

}  // namespace kpo
