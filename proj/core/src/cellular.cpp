#include "cellcrystal/cellular.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "cellcrystal/errors.hpp"

namespace cellcrystal {

std::int64_t ExtInt::value() const {
  if (!finite_) throw DomainError("value() of -inf");
  return value_;
}

std::int64_t CellElem::height() const {
  std::int64_t h = 0;
  for (auto v : coords_) h += v;
  return h;
}

bool CellElem::is_nonnegative() const {
  return std::all_of(coords_.begin(), coords_.end(), [](auto v) { return v >= 0; });
}

std::int64_t CellElem::max_abs() const {
  std::int64_t m = 0;
  for (auto v : coords_) m = std::max(m, v < 0 ? -v : v);
  return m;
}

CellElem& CellElem::operator+=(const CellElem& rhs) {
  if (rhs.size() != size()) throw DomainError("element length mismatch");
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += rhs.coords_[k];
  return *this;
}

CellElem& CellElem::operator-=(const CellElem& rhs) {
  if (rhs.size() != size()) throw DomainError("element length mismatch");
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] -= rhs.coords_[k];
  return *this;
}

CellElem operator-(CellElem a) {
  for (auto& v : a.coords_) v = -v;
  return a;
}

CellElem operator*(std::int64_t s, CellElem a) {
  for (auto& v : a.coords_) v *= s;
  return a;
}

std::string CellElem::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < coords_.size(); ++k) os << (k ? "," : "") << coords_[k];
  os << ')';
  return os.str();
}

std::size_t CellElemHash::operator()(const CellElem& x) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto v : x.coords()) {
    h ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::vector<OpStep> parse_op_string(std::string_view text) {
  std::vector<OpStep> ops;
  std::size_t p = 0;
  auto skip = [&] {
    while (p < text.size() && (std::isspace(static_cast<unsigned char>(text[p])) || text[p] == ',')) ++p;
  };
  auto read_int = [&]() -> int {
    const std::size_t start = p;
    if (p < text.size() && text[p] == '-') ++p;
    while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
    if (start == p || (p == start + 1 && text[start] == '-')) {
      throw DomainError("expected a number in op string '" + std::string(text) + "'");
    }
    return std::stoi(std::string(text.substr(start, p - start)));
  };
  skip();
  while (p < text.size()) {
    const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(text[p])));
    if (c != 'e' && c != 'f') throw DomainError("op string steps start with 'e' or 'f': '" + std::string(text) + "'");
    ++p;
    if (p < text.size() && text[p] == '_') ++p;
    OpStep step{c == 'e' ? OpStep::Kind::E : OpStep::Kind::F, read_int(), 1};
    if (p < text.size() && text[p] == '^') {
      ++p;
      step.count = read_int();
    }
    ops.push_back(step);
    skip();
  }
  return ops;
}

std::string format_op_string(std::span<const OpStep> ops) {
  std::string out;
  for (const auto& op : ops) {
    if (!out.empty()) out.push_back(' ');
    out.push_back(static_cast<char>(op.kind));
    out += std::to_string(op.index);
    if (op.count != 1) out += "^" + std::to_string(op.count);
  }
  return out;
}

CellCrystal::CellCrystal(Word word) : word_(std::move(word)) {
  const int n = rank();
  const int len = size();
  slots_.assign(static_cast<std::size_t>(n), {});
  for (int k = 1; k <= len; ++k) slots_[static_cast<std::size_t>(word_.at(k) - 1)].push_back(k);
  successor_.assign(static_cast<std::size_t>(len), 0);
  for (const auto& s : slots_) {
    for (std::size_t t = 0; t + 1 < s.size(); ++t) successor_[static_cast<std::size_t>(s[t] - 1)] = s[t + 1];
  }
}

bool CellCrystal::has_index(int i) const {
  cartan().check_index(i);
  return !slots_[static_cast<std::size_t>(i - 1)].empty();
}

std::span<const int> CellCrystal::slots_of(int i) const {
  cartan().check_index(i);
  return slots_[static_cast<std::size_t>(i - 1)];
}

std::optional<int> CellCrystal::successor(int k) const {
  if (k < 1 || k > size()) throw DomainError("slot " + std::to_string(k) + " out of range");
  const int s = successor_[static_cast<std::size_t>(k - 1)];
  return s ? std::optional<int>(s) : std::nullopt;
}

void CellCrystal::check_elem(const CellElem& x) const {
  if (x.size() != size()) {
    throw DomainError("element of length " + std::to_string(x.size()) + " for word of length " +
                      std::to_string(size()));
  }
}

std::int64_t CellCrystal::sigma(const CellElem& x, int k) const {
  check_elem(x);
  if (k < 1 || k > size()) throw DomainError("slot " + std::to_string(k) + " out of range");
  const int ik = word_.at(k);
  std::int64_t s = x.at(k);
  for (int j = 1; j < k; ++j) s += cartan().a(ik, word_.at(j)) * x.at(j);
  return s;
}

std::int64_t CellCrystal::beta(const CellElem& x, int k) const {
  const auto next = successor(k);
  if (!next) throw DomainError("slot " + std::to_string(k) + " has no later occurrence of its letter");
  return sigma(x, *next) - sigma(x, k);
}

std::pair<int, int> CellCrystal::extreme_slots(const CellElem& x, int i) const {
  check_elem(x);
  const auto& slots = slots_of(i);
  if (slots.empty()) return {0, 0};
  // Running ⟨h_i, Σ_{j<k} x_j α_{i_j}⟩ gives every σ_k with i_k = i in one pass.
  std::int64_t prefix = 0;
  std::int64_t best = 0;
  int first = 0, last = 0;
  for (int k = 1; k <= size(); ++k) {
    const int ik = word_.at(k);
    if (ik == i) {
      const std::int64_t s = x.at(k) + prefix;
      if (first == 0 || s > best) {
        best = s;
        first = last = k;
      } else if (s == best) {
        last = k;
      }
    }
    prefix += cartan().a(i, ik) * x.at(k);
  }
  return {first, last};
}

ExtInt CellCrystal::epsilon(const CellElem& x, int i) const {
  const auto [first, last] = extreme_slots(x, i);
  if (first == 0) return ExtInt::neg_inf();
  return sigma(x, first);
}

Weight CellCrystal::weight(const CellElem& x) const {
  check_elem(x);
  std::vector<std::int64_t> w(static_cast<std::size_t>(rank()), 0);
  for (int k = 1; k <= size(); ++k) {
    const int ik = word_.at(k);
    for (int r = 1; r <= rank(); ++r) w[static_cast<std::size_t>(r - 1)] -= x.at(k) * cartan().a(r, ik);
  }
  return Weight(std::move(w));
}

ExtInt CellCrystal::phi(const CellElem& x, int i) const {
  return epsilon(x, i) + weight(x).pairing(i);
}

std::optional<CellElem> CellCrystal::f_tilde(const CellElem& x, int i) const {
  const auto [first, last] = extreme_slots(x, i);
  if (last == 0) return std::nullopt;
  CellElem y = x;
  y.at(last) += 1;
  return y;
}

std::optional<CellElem> CellCrystal::e_tilde(const CellElem& x, int i) const {
  const auto [first, last] = extreme_slots(x, i);
  if (first == 0) return std::nullopt;
  CellElem y = x;
  y.at(first) -= 1;
  return y;
}

CellElem CellCrystal::apply_string(CellElem x, std::span<const OpStep> ops) const {
  check_elem(x);
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    if (!has_index(it->index)) {
      throw DomainError("index " + std::to_string(it->index) + " does not occur in word " + word_.to_string());
    }
    const bool raise = (it->kind == OpStep::Kind::E) == (it->count >= 0);
    const int times = it->count >= 0 ? it->count : -it->count;
    for (int t = 0; t < times; ++t) x = *(raise ? e_tilde(x, it->index) : f_tilde(x, it->index));
  }
  return x;
}

}  // namespace cellcrystal
